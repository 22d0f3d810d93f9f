#pragma once

#include <cstdint>
#include <random>

namespace zipfcode {
namespace detail {

// Uniform double in [0, 1) from the top 53 bits of the engine output;
// fully determined by the seed (no implementation-defined distribution
// adapters involved).
inline double uniform01(std::mt19937_64 &engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

} // namespace detail
} // namespace zipfcode
