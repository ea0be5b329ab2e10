#pragma once

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "furst/common.hpp"
#include "furst/gb.hpp"

namespace furst::testing {

inline Ideal parse_ideal(const Ring& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(poly_parse(g, R));
  return Ideal(R, std::move(ps));
}

inline Ideal parse_ideal(const Ring& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(poly_parse(g, R));
  return Ideal(R, std::move(ps));
}

/// The degree-6 scheme used as the worked chart-matrix example throughout
/// the test suite: quotient basis {1, x1, x2, x3, x4, x4^2} over GF(5).
inline Ideal golden_ideal(const Ring& R) {
  return parse_ideal(R, {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x2*x4", "x3^2",
                         "x3*x4", "x4^3"});
}

inline Ring golden_ring() { return Ring::standard(Field::create(5), 4); }

/// The golden generators instantiated over an arbitrary field (the ideal is
/// monomial, so the list transfers verbatim).
inline Ideal golden_ideal_over(const Field& F) {
  Ring R = Ring::standard(F, 4);
  return parse_ideal(R, {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x2*x4", "x3^2",
                         "x3*x4", "x4^3"});
}

/// Random 0-dimensional homogeneous monomial ideal with exactly N standard
/// monomials, grown as a random divisor-closed staircase.
inline Scheme random_monomial_scheme(const Field& F, int n, int N, SplitMix64& rng) {
  auto cmp = [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) < 0; };
  std::set<Monomial, decltype(cmp)> staircase(cmp);
  staircase.insert(Monomial::one(n));
  while (static_cast<int>(staircase.size()) < N) {
    std::vector<Monomial> candidates;
    for (const Monomial& m : staircase)
      for (int v = 0; v < n; ++v) {
        Monomial c = m * Monomial::var(n, v);
        if (staircase.count(c)) continue;
        bool closed = true;
        for (int j = 0; j < n && closed; ++j) {
          if (!c.exp[j]) continue;
          if (!staircase.count(c / Monomial::var(n, j))) closed = false;
        }
        if (closed) candidates.push_back(c);
      }
    std::sort(candidates.begin(), candidates.end(), cmp);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    staircase.insert(candidates[rng.below(candidates.size())]);
  }
  std::vector<Polynomial> gens;
  Ring R = Ring::standard(F, n);
  for (const Monomial& m : staircase)
    for (int v = 0; v < n; ++v) {
      Monomial c = m * Monomial::var(n, v);
      if (staircase.count(c)) continue;
      bool minimal = true;
      for (int j = 0; j < n && minimal; ++j) {
        if (!c.exp[j]) continue;
        if (!staircase.count(c / Monomial::var(n, j))) minimal = false;
      }
      if (minimal) gens.push_back(Polynomial::from_terms(R, {{c, F.one()}}));
    }
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return canonical_compare(a.terms()[0].mono, b.terms()[0].mono) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Scheme(Ideal(R, std::move(gens)));
}

/// All points of the chart-coordinate space (odometer order).
inline std::vector<std::vector<FElem>> grid_points(const Ring& cring) {
  std::vector<std::vector<FElem>> pts;
  auto elements = cring.field().elements();
  std::vector<std::size_t> odo(cring.nvars(), 0);
  for (;;) {
    std::vector<FElem> pt(cring.nvars());
    for (int i = 0; i < cring.nvars(); ++i) pt[i] = elements[odo[i]];
    pts.push_back(std::move(pt));
    std::size_t v = 0;
    while (v < odo.size()) {
      if (odo[v] + 1 < elements.size()) { ++odo[v]; break; }
      odo[v] = 0;
      ++v;
    }
    if (v == odo.size()) break;
  }
  return pts;
}

}  // namespace furst::testing
