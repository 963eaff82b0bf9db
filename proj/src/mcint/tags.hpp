#pragma once

#include <cstdint>

// Stream families; each integral draws from its own so that combined estimates stay independent.
namespace crofton::tags {
inline constexpr std::uint64_t ix = 0x11;
inline constexpr std::uint64_t ix_uniform = 0x12;
inline constexpr std::uint64_t iy = 0x21;
inline constexpr std::uint64_t iy_simplex = 0x22;
inline constexpr std::uint64_t crofton_generalized = 0x31;
inline constexpr std::uint64_t crofton_classical = 0x41;
inline constexpr std::uint64_t linking = 0x51;
}  // namespace crofton::tags
