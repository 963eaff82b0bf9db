#pragma once

#include <cstdint>
#include <vector>

#include "crofton/codecs.hpp"

namespace oracle {

// Multi-component signed Gauss code; one basepointed sequence per component.
using Component = std::vector<crofton::GaussEntry>;
using LinkCode = std::vector<Component>;

// Conway polynomial coefficients, index = power of z.
using Conway = std::vector<std::int64_t>;

// ∇(L+) - ∇(L-) = z ∇(L0), recursing on the first crossing met from below until
// every component is descending; such a diagram is an unlink.
Conway conway(const LinkCode& link);
Conway conway(const crofton::KnotDiagram& k);

std::int64_t conway_coefficient(const Conway& p, int power);

}  // namespace oracle
