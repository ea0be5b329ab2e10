#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "furst/gb.hpp"
#include "furst/incidence.hpp"

namespace furst {

/// The scheme of (x_1..x_n)^(d+1): |S| = binom(d+n, n) and every k-plane
/// direction is binom(d+k, k)-rich.
Scheme make_fat_point(const Field& F, int n, int d, const GBLimits& limits = {});

/// Union, over the q+1 line directions of the plane, of the degree-N scheme
/// supported at the origin inside that line. Every direction is N-rich and
/// the total degree is on the order of N*q (computed exactly).
Scheme make_rotations_union(const Field& F, long N, const GBLimits& limits = {});

struct BoundReport {
  long long q = 0;
  int n = 0, k = 0;
  long m_star = 0;      // min over directions of the Radon transform
  long long size = 0;   // |S|
  double ratio = 0;     // |S| / m_star^(n/k)
  double constant = 0;  // the supplied C
  bool pass = false;    // |S| > C * m_star^(n/k)
  /// |S| / (m_star^(n/k) / n!): the refined asymptotic comparison, reported
  /// without pass/fail semantics (desk-scale q is far from the asymptotic
  /// regime).
  double refined_ratio = 0;
  /// Observational comparison value (1/4) q^(c + (n-1)/2) with q^c = m_star;
  /// reported, never asserted.
  double reduced_lower_reference = 0;
};

BoundReport bound_report(const Scheme& S, int k, double C, const GBLimits& limits = {});

struct InductionRow {
  std::size_t direction_index = 0;  // index into Gr(k+1, n), or 0 for the full-space case
  long degree = 0;                  // |S cap W|
  bool inner_hypothesis_ok = true;  // every k-subspace of W is m-rich for S|W
  bool ok = true;                   // degree >= binom(b+1, k+1)
};

struct InductionReport {
  bool hypothesis_ok = false;  // every k-plane through the origin is m-rich
  long m = 0;
  long long b = 0;             // largest b with binom(b, k) <= m
  long long required = 0;      // binom(b+1, k+1)
  std::vector<InductionRow> rows;
  bool ok() const;
};

/// The dimension-induction step: given every through-origin k-plane is
/// m-rich with m >= binom(b, k), every through-origin (k+1)-plane W must
/// satisfy |S cap W| >= binom(b+1, k+1). Verified by restricting S to W and
/// re-checking the k-plane hypothesis inside W.
InductionReport induction_step_check(const Scheme& S, int k, const GBLimits& limits = {});

enum class SearchMode { Exhaustive, Greedy, Random };

struct SearchResult {
  bool feasible = false;
  std::vector<std::vector<FElem>> set;  // certified Furstenberg set
  long size = 0;
  bool is_true_minimum = false;  // only exhaustive mode certifies minimality
  long long examined = 0;
};

struct SearchBudget {
  long long max_examined = 10'000'000;
  int random_restarts = 32;
};

/// Smallest found reduced S in F_q^n with every k-plane direction m-rich.
/// Exhaustive mode requires q^n <= 16 and returns the true minimum.
SearchResult search_furstenberg_sets(const Field& F, int n, int k, long m, SearchMode mode,
                                     const SearchBudget& budget = {}, std::uint64_t seed = 0);

/// All q^n points of F_q^n in odometer order.
std::vector<std::vector<FElem>> all_points(const Field& F, int n);

/// Scheme of a reduced point set via its vanishing ideal.
Scheme scheme_from_points(const std::vector<std::vector<FElem>>& pts, const Ring& ring);

}  // namespace furst
