#include "furst/incidence.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace furst {

long intersection_degree(const Scheme& S, const AffinePlane& V, const GBLimits& limits) {
  if (!S.quotient_dim()) throw Error("intersection_degree: scheme has infinite quotient");
  const Ring& R = S.ring();
  int k = V.dir.k();
  Ring tring = [&] {
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back("t" + std::to_string(i));
    return Ring(R.field(), names);
  }();
  std::vector<Polynomial> images = plane_parametrization(V, tring);
  std::vector<Polynomial> gens;
  gens.reserve(S.ideal().gens.size());
  for (const Polynomial& g : S.ideal().gens) gens.push_back(substitute(g, images));
  auto dim = quotient_dim_of(groebner(Ideal(tring, std::move(gens)), MonomialOrder::grevlex(k), limits));
  if (!dim) throw Error("intersection_degree: restriction has infinite quotient (S not 0-dimensional?)");
  return *dim;
}

long intersection_degree_cutforms(const Scheme& S, const AffinePlane& V, const GBLimits& limits) {
  if (!S.quotient_dim()) throw Error("intersection_degree: scheme has infinite quotient");
  const Ring& R = S.ring();
  std::vector<Polynomial> gens = S.ideal().gens;
  for (Polynomial& f : plane_linear_forms(V, R)) gens.push_back(std::move(f));
  auto dim = quotient_dim_of(groebner(Ideal(R, std::move(gens)), MonomialOrder::grevlex(R.nvars()), limits));
  if (!dim) throw Error("intersection_degree_cutforms: infinite quotient");
  return *dim;
}

long RadonTable::min_richness() const {
  long m = richness.empty() ? 0 : richness[0];
  for (long r : richness) m = std::min(m, r);
  return m;
}

long RadonTable::max_richness() const {
  long m = 0;
  for (long r : richness) m = std::max(m, r);
  return m;
}

namespace {

// Per-direction work item: the maximum of |S cap V| over the parallel class.
// For homogeneous S (supported at the origin) only the through-origin plane
// can meet S, so the class collapses to one Groebner computation.
std::pair<long, AffinePlane> direction_richness(const Scheme& S, const Direction& dir,
                                                const GBLimits& limits) {
  const Field& F = S.ring().field();
  if (S.is_homogeneous()) {
    AffinePlane V0 = through_origin(dir);
    return {intersection_degree(S, V0, limits), V0};
  }
  long best = -1;
  AffinePlane best_plane = through_origin(dir);
  for (const AffinePlane& V : enumerate_parallel(dir, F)) {
    long d = intersection_degree(S, V, limits);
    if (d > best) {
      best = d;
      best_plane = V;
    }
  }
  return {best, best_plane};
}

RadonTable radon_impl(const Scheme& S, int k, const GBLimits& limits, bool parallel) {
  const Ring& R = S.ring();
  RadonTable table;
  table.k = k;
  table.directions = enumerate_directions(R.nvars(), k, R.field());
  const std::size_t nd = table.directions.size();
  table.richness.assign(nd, 0);
  table.best_plane.assign(nd, AffinePlane{});

#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(nd); ++i) {
      auto [val, plane] = direction_richness(S, table.directions[i], limits);
      table.richness[i] = val;
      table.best_plane[i] = plane;
    }
    return table;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < nd; ++i) {
    auto [val, plane] = direction_richness(S, table.directions[i], limits);
    table.richness[i] = val;
    table.best_plane[i] = plane;
  }
  return table;
}

}  // namespace

RadonTable radon_transform(const Scheme& S, int k, const GBLimits& limits) {
  return radon_impl(S, k, limits, true);
}

RadonTable radon_transform_serial(const Scheme& S, int k, const GBLimits& limits) {
  return radon_impl(S, k, limits, false);
}

std::vector<Direction> rich_directions(const Scheme& S, long m, int k, const GBLimits& limits) {
  RadonTable t = radon_transform(S, k, limits);
  std::vector<Direction> out;
  for (std::size_t i = 0; i < t.directions.size(); ++i)
    if (t.richness[i] >= m) out.push_back(t.directions[i]);
  return out;
}

FurstenbergVerdict check_furstenberg(const Scheme& S, int k, long m, const GBLimits& limits) {
  FurstenbergVerdict v;
  if (m <= 0) return v;
  const Field& F = S.ring().field();
  for (const Direction& dir : enumerate_directions(S.ring().nvars(), k, F)) {
    bool rich = false;
    if (S.is_homogeneous()) {
      rich = intersection_degree(S, through_origin(dir), limits) >= m;
    } else {
      for (const AffinePlane& V : enumerate_parallel(dir, F)) {
        if (intersection_degree(S, V, limits) >= m) {
          rich = true;
          break;
        }
      }
    }
    if (!rich) {
      v.ok = false;
      v.failing = dir;
      return v;
    }
  }
  return v;
}

FurstenbergVerdict check_furstenberg_points(const std::vector<std::vector<FElem>>& pts,
                                            const Field& F, int n, int k, long m) {
  FurstenbergVerdict v;
  if (m <= 0) return v;
  for (const Direction& dir : enumerate_directions(n, k, F)) {
    bool rich = false;
    for (const AffinePlane& V : enumerate_parallel(dir, F)) {
      long count = 0;
      for (const auto& p : pts)
        if (plane_contains(V, p, F)) ++count;
      if (count >= m) {
        rich = true;
        break;
      }
    }
    if (!rich) {
      v.ok = false;
      v.failing = dir;
      return v;
    }
  }
  return v;
}

RadonTable radon_transform_points(const std::vector<std::vector<FElem>>& pts, const Field& F,
                                  int n, int k) {
  RadonTable table;
  table.k = k;
  table.directions = enumerate_directions(n, k, F);
  for (const Direction& dir : table.directions) {
    long best = -1;
    AffinePlane best_plane = through_origin(dir);
    for (const AffinePlane& V : enumerate_parallel(dir, F)) {
      long count = 0;
      for (const auto& p : pts)
        if (plane_contains(V, p, F)) ++count;
      if (count > best) {
        best = count;
        best_plane = V;
      }
    }
    table.richness.push_back(best);
    table.best_plane.push_back(best_plane);
  }
  return table;
}

long long FormalFatUnion::total_degree() const {
  long long total = 0;
  for (const auto& fp : points) total += binomial(fp.thickness - 1 + n, n);
  return total;
}

FormalFatUnion fat_union(const Field& F, int n,
                         const std::vector<std::pair<std::vector<FElem>, long>>& f_values, int k) {
  FormalFatUnion U;
  U.field = F;
  U.n = n;
  for (const auto& [pt, value] : f_values) {
    if (value < 0) throw Error("fat_union: f must be non-negative");
    if (static_cast<int>(pt.size()) != n) throw Error("fat_union: bad point dimension");
    for (const auto& existing : U.points)
      if (existing.point == pt) throw Error("fat_union: duplicate support point");
    if (value == 0) continue;
    long d = integer_kth_root(value, k);
    if (d < 1) continue;
    U.points.push_back({pt, d, value});
  }
  return U;
}

long long fat_union_plane_degree(const FormalFatUnion& U, const AffinePlane& V) {
  long long total = 0;
  int kp = V.dir.k();
  for (const auto& fp : U.points)
    if (plane_contains(V, fp.point, U.field)) total += binomial(fp.thickness - 1 + kp, kp);
  return total;
}

long long fat_union_plane_fsum(const FormalFatUnion& U, const AffinePlane& V) {
  long long total = 0;
  for (const auto& fp : U.points)
    if (plane_contains(V, fp.point, U.field)) total += fp.f_value;
  return total;
}

Ideal fat_union_ideal(const FormalFatUnion& U, const Ring& ring, const GBLimits& limits) {
  if (ring.nvars() != U.n) throw Error("fat_union_ideal: ring arity mismatch");
  if (U.points.empty()) throw Error("fat_union_ideal: empty union");
  const Field& F = ring.field();
  auto point_power_ideal = [&](const FatSupportPoint& fp) {
    // (x - a)^d: all degree-d monomials in the shifted variables
    std::vector<Polynomial> shifted;
    for (int i = 0; i < U.n; ++i)
      shifted.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, fp.point[i]));
    std::vector<Polynomial> gens;
    Monomial cur = Monomial::one(U.n);
    for (;;) {
      if (cur.degree() == fp.thickness) {
        Polynomial g = Polynomial::constant(ring, F.one());
        for (int i = 0; i < U.n; ++i)
          for (int t = 0; t < cur.exp[i]; ++t) g = g * shifted[i];
        gens.push_back(std::move(g));
      }
      int v = 0;
      while (v < U.n) {
        if (cur.exp[v] < fp.thickness) { ++cur.exp[v]; break; }
        cur.exp[v] = 0;
        ++v;
      }
      if (v == U.n) break;
    }
    return Ideal(ring, std::move(gens));
  };
  Ideal acc = point_power_ideal(U.points[0]);
  for (std::size_t i = 1; i < U.points.size(); ++i)
    acc = ideal_intersection(acc, point_power_ideal(U.points[i]), limits);
  return acc;
}

RadonTable radon_transform(const FormalFatUnion& U, int k) {
  RadonTable table;
  table.k = k;
  table.directions = enumerate_directions(U.n, k, U.field);
  for (const Direction& dir : table.directions) {
    long best = 0;
    AffinePlane best_plane = through_origin(dir);
    bool any = false;
    // only parallel planes through a support point can contribute
    for (const auto& fp : U.points) {
      AffinePlane V = make_affine_plane(dir, fp.point, U.field);
      long long d = fat_union_plane_degree(U, V);
      if (!any || d > best) {
        best = static_cast<long>(d);
        best_plane = V;
        any = true;
      }
    }
    table.richness.push_back(best);
    table.best_plane.push_back(best_plane);
  }
  return table;
}

namespace {
RestrictionSides sides_from(const RadonTable& t, int n, int k, long long q, long long size) {
  RestrictionSides s;
  double sum = 0;
  for (long r : t.richness) sum += std::pow(static_cast<double>(r), n);
  s.lhs = std::pow(sum, 1.0 / n);
  s.rhs = std::pow(static_cast<double>(gaussian_binomial(n, k, q)), 1.0 / n) *
          std::pow(static_cast<double>(size), static_cast<double>(k) / n);
  return s;
}
}  // namespace

RestrictionSides restriction_sides(const Scheme& S, int k, const GBLimits& limits) {
  RadonTable t = radon_transform(S, k, limits);
  return sides_from(t, S.ring().nvars(), k, static_cast<long long>(S.ring().field().q()), S.degree());
}

RestrictionSides restriction_sides(const FormalFatUnion& U, int k) {
  RadonTable t = radon_transform(U, k);
  return sides_from(t, U.n, k, static_cast<long long>(U.field.q()), U.total_degree());
}

}  // namespace furst
