#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "icono/hash.hpp"

namespace icono {

// All randomized operations draw from mt19937_64 through the helpers below.
// The standard library's distributions and shuffles are implementation
// defined, so splits, plans and augmentations would not be reproducible
// across toolchains; these are pinned.

using Rng = std::mt19937_64;

// Derives an independent stream for a named purpose from a base seed.
inline uint64_t seed_for(uint64_t base, const std::string& tag) {
  Fnv64 h;
  h.update(&base, sizeof(base));
  h.update(tag);
  return h.value();
}

inline size_t uniform_index(Rng& g, size_t n) {
  // Rejection sampling keeps the draw unbiased for any n.
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
  uint64_t v = g();
  while (v >= limit) v = g();
  return static_cast<size_t>(v % n);
}

inline double uniform_real(Rng& g, double lo, double hi) {
  const double u = static_cast<double>(g() >> 11) * (1.0 / 9007199254740992.0);
  return lo + (hi - lo) * u;
}

inline bool bernoulli(Rng& g, double p = 0.5) {
  return uniform_real(g, 0.0, 1.0) < p;
}

// Standard normal via Box-Muller; polar form avoided to keep the number of
// RNG draws per call fixed.
inline double normal(Rng& g, double mean = 0.0, double stddev = 1.0) {
  const double u1 = uniform_real(g, 1e-12, 1.0);
  const double u2 = uniform_real(g, 0.0, 1.0);
  const double z = std::sqrt(-2.0 * std::log(u1)) *
                   std::cos(2.0 * 3.14159265358979323846 * u2);
  return mean + stddev * z;
}

template <class T>
void det_shuffle(std::vector<T>& v, Rng& g) {
  for (size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_index(g, i)]);
  }
}

// First k elements of a deterministic shuffle; order of the sample is the
// draw order.
template <class T>
std::vector<T> det_sample(std::vector<T> pool, size_t k, Rng& g) {
  std::vector<T> out;
  out.reserve(k);
  for (size_t i = 0; i < k && !pool.empty(); ++i) {
    const size_t j = uniform_index(g, pool.size());
    out.push_back(pool[j]);
    pool[j] = pool.back();
    pool.pop_back();
  }
  return out;
}

}  // namespace icono
