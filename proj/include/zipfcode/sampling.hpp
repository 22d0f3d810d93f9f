#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "zipfcode/distribution.hpp"
#include "zipfcode/rng.hpp"

namespace zipfcode {

// Draws n i.i.d. 0-based indices from a finite ranked distribution by
// inverse-CDF lookup. Deterministic for a fixed seed.
inline std::vector<std::uint32_t>
sample_indices(const ProbabilityDistribution &dist, std::uint64_t n,
               std::uint64_t seed) {
  std::vector<double> cdf(dist.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    acc += dist[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;

  std::mt19937_64 engine(seed);
  std::vector<std::uint32_t> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    double u = detail::uniform01(engine);
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    out.push_back(static_cast<std::uint32_t>(it - cdf.begin()));
  }
  return out;
}

} // namespace zipfcode
