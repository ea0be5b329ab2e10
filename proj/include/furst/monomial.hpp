#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "furst/common.hpp"

namespace furst {

/// Hard cap on ring size; covers base rings (n <= 4 at desk scale), the
/// elimination variable, chart-coordinate rings and parameter rings.
constexpr int kMaxVars = 8;

/// Exponent vector in a fixed number of variables.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint8_t nvars = 0;

  static Monomial one(int n) {
    Monomial m;
    m.nvars = static_cast<std::uint8_t>(n);
    return m;
  }
  static Monomial var(int n, int i, int power = 1) {
    Monomial m = one(n);
    m.exp[i] = static_cast<std::uint16_t>(power);
    return m;
  }

  int degree() const {
    int d = 0;
    for (int i = 0; i < nvars; ++i) d += exp[i];
    return d;
  }
  bool is_one() const {
    for (int i = 0; i < nvars; ++i)
      if (exp[i]) return false;
    return true;
  }
  bool divides(const Monomial& other) const {
    for (int i = 0; i < nvars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] + o.exp[i]);
    return r;
  }
  /// Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] - o.exp[i]);
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < a.nvars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.nvars != b.nvars) return false;
    for (int i = 0; i < a.nvars; ++i)
      if (a.exp[i] != b.exp[i]) return false;
    return true;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ULL ^ nvars;
    for (int i = 0; i < nvars; ++i) {
      h ^= exp[i];
      h *= 1099511628211ULL;
    }
    return h;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return static_cast<std::size_t>(m.hash()); }
};

/// Structural compare used for canonical term storage and printing:
/// graded, ties broken lexicographically with x_1 most significant.
int canonical_compare(const Monomial& a, const Monomial& b);

enum class OrderKind { Grevlex, Lex };

/// A monomial order with a variable significance permutation.
/// significance[0] is the largest variable. The library default follows the
/// convention x_1 smaller than x_2 smaller than ... smaller than x_n, i.e.
/// significance = (n-1, n-2, ..., 0) in 0-based indices.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::vector<int> significance;

  static MonomialOrder grevlex(int n);
  static MonomialOrder lex(int n);
  static MonomialOrder with_significance(OrderKind kind, std::vector<int> sig);

  int nvars() const { return static_cast<int>(significance.size()); }
  /// -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool is_degree_compatible() const { return kind == OrderKind::Grevlex; }

  std::string describe() const;
};

}  // namespace furst
