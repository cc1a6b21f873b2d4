#pragma once

#include <cmath>
#include <cstdint>

// Counter-based randomness. Every draw is a pure function of a seed plus a
// handful of counter words (epoch, batch, item, lead, ...), so results do not
// depend on evaluation order or thread scheduling.

namespace ecgssl::rng {

// splitmix64 finalizer; good avalanche, cheap.
constexpr uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// FNV-1a over a string literal; used to tag independent draw streams.
constexpr uint64_t tag(const char* s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (; *s; ++s) h = (h ^ static_cast<uint64_t>(*s)) * 0x100000001b3ull;
  return h;
}

inline uint64_t hash_words(uint64_t a) { return mix64(a); }

template <typename... Rest>
uint64_t hash_words(uint64_t a, Rest... rest) {
  return mix64(a ^ hash_words(static_cast<uint64_t>(rest)...));
}

// Uniform in [0, 1) with 53 random bits.
inline double u01(uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

template <typename... W>
double uniform(W... words) {
  return u01(hash_words(static_cast<uint64_t>(words)...));
}

// Standard normal via Box-Muller on two derived counters.
template <typename... W>
double gauss(W... words) {
  const uint64_t base = hash_words(static_cast<uint64_t>(words)...);
  double u1 = u01(mix64(base ^ 0x517cc1b727220a95ull));
  const double u2 = u01(mix64(base ^ 0x2545f4914f6cdd1dull));
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

// Sequential draw stream for algorithms that need a variable number of
// draws (e.g. Fisher-Yates). Still counter-based underneath.
class Stream {
 public:
  template <typename... W>
  explicit Stream(W... words) : key_(hash_words(static_cast<uint64_t>(words)...)) {}

  uint64_t next_u64() { return mix64(key_ ^ mix64(n_++)); }
  double next_u01() { return u01(next_u64()); }

  // Uniform integer in [0, bound) via rejection; bound must be > 0.
  uint64_t next_below(uint64_t bound) {
    const uint64_t limit = bound * (UINT64_MAX / bound);
    uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % bound;
  }

 private:
  uint64_t key_;
  uint64_t n_ = 0;
};

}  // namespace ecgssl::rng
