#pragma once

#include <optional>
#include <vector>

#include "furst/gb.hpp"
#include "furst/geom.hpp"
#include "furst/incidence.hpp"

namespace furst {

/// The multiplication map Phi-bar on a chart: rows are the N standard
/// monomials of S, columns are pairs (cutting form, standard monomial), and
/// the entry is the coefficient (linear in the chart coordinates) of the
/// normal form of (cutting form) * (monomial) on the row basis element.
///
/// Evaluating at a concrete direction gives a scalar matrix whose cokernel
/// dimension is the intersection degree of S with the plane through the
/// origin in that direction.
struct ChartMatrix {
  Chart chart;
  Scheme scheme;
  Ring cring;  // chart-coordinate ring over the base field
  long N = 0;
  std::vector<Monomial> rows;                  // standard monomials, ascending
  std::vector<std::pair<int, Monomial>> cols;  // (cut variable, standard monomial)
  std::vector<Polynomial> entries;             // N x cols, row-major
  /// Multiplication-by-x_v matrices on the quotient basis, one per ambient
  /// variable; entries over the base field.
  std::vector<FMatrix> mult_maps;

  const Polynomial& entry(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols.size() + c]; }
};

/// Requires S homogeneous (supported at the origin) with finite N.
ChartMatrix build_chart_matrix(const Scheme& S, int k, const Chart& chart);

/// Scalar matrix at a chart point over the base field.
FMatrix evaluate_chart_matrix(const ChartMatrix& M, const std::vector<FElem>& point);

/// Rank-based richness test: true iff rank(evaluated) <= N - m.
bool is_rich_via_rank(const ChartMatrix& M, const std::vector<FElem>& point, long m);

struct MinorLimits {
  long long max_work = 10'000'000;
};

/// The ideal of (N-m+1)-minors of the chart matrix. Structurally-zero minors
/// are pruned by bipartite matching on the nonzero-entry supports;
/// generators appear in deterministic (row subset, column subset) order with
/// exact duplicates removed.
struct MinorIdeal {
  long m = 0;
  long size = 0;  // N - m + 1
  Chart chart;
  Ring cring;
  std::vector<Polynomial> gens;
};

MinorIdeal minor_ideal(const ChartMatrix& M, long m, const MinorLimits& limits = {});

/// Max matching between rows and structurally nonzero entries; an upper
/// bound for the rank of every evaluation.
long structural_rank(const ChartMatrix& M);

struct XgrLimits {
  long long max_grid_points = 4'000'000;
  long long max_cells = 4'000'000'000;  // grid points x matrix cells
};

/// Exact generic rank of the chart matrix over the rational function field
/// of the chart, certified by a full sweep of an evaluation grid whose side
/// exceeds the per-variable degree of every minor. `early_above`: return as
/// soon as a rank above the threshold is seen.
long generic_rank_on_chart(const ChartMatrix& M, const XgrLimits& limits = {},
                           std::optional<long> early_above = std::nullopt);
/// Serial reference for the grid sweep.
long generic_rank_on_chart_serial(const ChartMatrix& M, const XgrLimits& limits = {},
                                  std::optional<long> early_above = std::nullopt);

/// Scheme-level test of X_{m,k} = Gr(k,n): on every chart all (N-m+1)-minors
/// vanish identically (equivalently the generic rank is at most N-m).
bool x_equals_grassmannian(const Scheme& S, long m, int k, const XgrLimits& limits = {});

struct EqualityBound {
  long long b = 0;         // largest b with binom(b, k) <= m
  long long bound = 0;     // binom(b + n - k, n)
  double asymptotic = 0;   // bound / m^(n/k)
};

/// Lower bound for |S| implied by X_{m,k} = Gr(k,n).
EqualityBound bound_from_equality(long long m, int k, int n);

/// Order of vanishing of the minor ideal at a chart point: the minimum over
/// generators of the least total degree after translating the point to the
/// origin. nullopt means +infinity (no nonzero generators).
std::optional<int> vanishing_order_at(const MinorIdeal& J, const std::vector<FElem>& point);

struct MinorDegreeStats {
  int max_chart_degree = 0;
  /// Plucker-homogenized degree: chart coordinates are degree-0 ratios, so
  /// homogenizing by the chart's Plucker coordinate keeps the chart degree.
  int plucker_degree = 0;
  double degree_per_size = 0;  // max degree / (N - m + 1), the measured growth constant
};

MinorDegreeStats minor_degree_stats(const MinorIdeal& J);

}  // namespace furst
