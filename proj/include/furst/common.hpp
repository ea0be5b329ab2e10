#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace furst {

/// Base error for all library failures.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input text could not be parsed; `pos` is the byte offset of the problem.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p) : Error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

/// A configured resource cap was exceeded (Groebner steps, minor expansion, ...).
struct CapError : Error {
  explicit CapError(const std::string& msg) : Error(msg) {}
};

/// binom(a, k) with the convention binom(a, k) = 0 for a < k or negative inputs.
inline long long binomial(long long a, long long k) {
  if (k < 0 || a < 0 || a < k) return 0;
  if (k > a - k) k = a - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (a - k + i) / i;
  }
  return r;
}

/// Largest x with x^k <= v (exact integer arithmetic).
inline long long integer_kth_root(long long v, int k) {
  if (v < 0 || k < 1) throw Error("integer_kth_root: bad arguments");
  if (v == 0) return 0;
  if (k == 1) return v;
  long long x = static_cast<long long>(std::pow(double(v), 1.0 / k));
  while (x > 0) {
    long long p = 1;
    bool over = false;
    for (int i = 0; i < k; ++i) {
      if (p > v / x + 1) { over = true; break; }
      p *= x;
    }
    if (!over && p <= v) break;
    --x;
  }
  // x^k <= v; bump while (x+1)^k <= v
  for (;;) {
    long long p = 1;
    bool over = false;
    for (int i = 0; i < k; ++i) {
      p *= (x + 1);
      if (p > v) { over = true; break; }
    }
    if (over) break;
    ++x;
  }
  return x;
}

/// SplitMix64: tiny deterministic PRNG used wherever seeded sampling is required.
/// (std:: distributions are not bit-portable across implementations.)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace furst
