#pragma once

#include <optional>
#include <vector>

#include "furst/gb.hpp"
#include "furst/geom.hpp"

namespace furst {

/// Degree of the scheme-theoretic intersection S cap V, computed by
/// parametrizing V and restricting I_S to the parameter ring.
long intersection_degree(const Scheme& S, const AffinePlane& V, const GBLimits& limits = {});

/// Same quantity via the other route: quotient by I_S + (cutting forms of V).
/// Kept as an independent cross-check of the parametrization route.
long intersection_degree_cutforms(const Scheme& S, const AffinePlane& V, const GBLimits& limits = {});

/// The Radon/maximal transform T_{n,k}(S): per direction, the maximum of
/// |S cap V| over the parallel class, with the first plane attaining it.
struct RadonTable {
  int k = 0;
  std::vector<Direction> directions;
  std::vector<long> richness;
  std::vector<AffinePlane> best_plane;

  long min_richness() const;
  long max_richness() const;
};

/// OpenMP-parallel over directions when available; output is identical to
/// the serial reference either way.
RadonTable radon_transform(const Scheme& S, int k, const GBLimits& limits = {});
/// Serial reference implementation kept for testing and benchmarking.
RadonTable radon_transform_serial(const Scheme& S, int k, const GBLimits& limits = {});

/// Directions with an m-rich parallel plane (Sigma_{m,k}).
std::vector<Direction> rich_directions(const Scheme& S, long m, int k, const GBLimits& limits = {});

struct FurstenbergVerdict {
  bool ok = true;
  std::optional<Direction> failing;
};

/// True iff every direction has an m-rich parallel plane.
FurstenbergVerdict check_furstenberg(const Scheme& S, int k, long m, const GBLimits& limits = {});

/// Counting-only verdict for a reduced point set; avoids Groebner machinery.
FurstenbergVerdict check_furstenberg_points(const std::vector<std::vector<FElem>>& pts,
                                            const Field& F, int n, int k, long m);
/// Counting-only Radon transform for a reduced point set.
RadonTable radon_transform_points(const std::vector<std::vector<FElem>>& pts, const Field& F,
                                  int n, int k);

/// Union of fat points m_x^{d_x}; incidence with a plane through a support
/// point has the closed form binom(d-1+k', k').
struct FatSupportPoint {
  std::vector<FElem> point;
  long thickness = 1;  // d_x
  long f_value = 1;    // the integer weight the thickness was derived from
};

struct FormalFatUnion {
  Field field;
  int n = 0;
  std::vector<FatSupportPoint> points;

  /// |S_f| = sum binom(d_x - 1 + n, n).
  long long total_degree() const;
};

/// Thickness floor(f(x)^(1/k)) at each x with f(x) >= 1. The map is given
/// sparsely as (point, value) pairs; values must be >= 0.
FormalFatUnion fat_union(const Field& F, int n,
                         const std::vector<std::pair<std::vector<FElem>, long>>& f_values, int k);

/// Exact slice sum_{x in V} binom(d_x - 1 + k', k') for k' = dim V.
long long fat_union_plane_degree(const FormalFatUnion& U, const AffinePlane& V);
/// The approximate quantity sum_{x in V} f(x); reported alongside, never
/// conflated with the exact slice.
long long fat_union_plane_fsum(const FormalFatUnion& U, const AffinePlane& V);

/// Materialize the union as the intersection of shifted power ideals.
/// Intended for small cross-checks (a few support points).
Ideal fat_union_ideal(const FormalFatUnion& U, const Ring& ring, const GBLimits& limits = {});

RadonTable radon_transform(const FormalFatUnion& U, int k);

struct RestrictionSides {
  double lhs = 0;  // ||T_{n,k}(S)||_n over Gr(k,n)(F_q)
  double rhs = 0;  // |Gr(k,n)(F_q)|^(1/n) * |S|^(k/n)
};

RestrictionSides restriction_sides(const Scheme& S, int k, const GBLimits& limits = {});
RestrictionSides restriction_sides(const FormalFatUnion& U, int k);

}  // namespace furst
