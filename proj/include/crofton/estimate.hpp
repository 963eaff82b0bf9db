#pragma once

#include <cstdint>

namespace crofton {

struct McEstimate {
    double value = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    bool operator==(const McEstimate&) const = default;
};

}  // namespace crofton
