#include "furst/fverify.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace furst {

Scheme make_fat_point(const Field& F, int n, int d, const GBLimits& limits) {
  if (d < 0) throw Error("make_fat_point: need d >= 0");
  if (binomial(d + n, n) > 100000) throw CapError("make_fat_point: size cap exceeded");
  Ring R = Ring::standard(F, n);
  std::vector<Polynomial> gens;
  Monomial cur = Monomial::one(n);
  for (;;) {
    if (cur.degree() == d + 1) gens.push_back(Polynomial::from_terms(R, {{cur, F.one()}}));
    int v = 0;
    while (v < n) {
      if (cur.exp[v] < d + 1) { ++cur.exp[v]; break; }
      cur.exp[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return Scheme(Ideal(R, std::move(gens)), limits);
}

Scheme make_rotations_union(const Field& F, long N, const GBLimits& limits) {
  if (N < 1) throw Error("make_rotations_union: need N >= 1");
  Ring R = Ring(F, {"x", "y"});
  std::vector<Ideal> factors;
  for (const Direction& dir : enumerate_directions(2, 1, F)) {
    FElem v1 = dir.basis.at(0, 0), v2 = dir.basis.at(0, 1);
    // mu vanishes on the line, nu is complementary to it
    Polynomial mu = Polynomial::variable(R, 0).scaled(v2) - Polynomial::variable(R, 1).scaled(v1);
    Polynomial nu = F.is_zero(v1) ? Polynomial::variable(R, 1) : Polynomial::variable(R, 0);
    Polynomial nuN = Polynomial::constant(R, F.one());
    for (long i = 0; i < N; ++i) nuN = nuN * nu;
    factors.push_back(Ideal(R, {std::move(mu), std::move(nuN)}));
  }
  Ideal acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = ideal_intersection(acc, factors[i], limits);
  return Scheme(std::move(acc), limits);
}

BoundReport bound_report(const Scheme& S, int k, double C, const GBLimits& limits) {
  BoundReport r;
  const Ring& R = S.ring();
  r.q = static_cast<long long>(R.field().q());
  r.n = R.nvars();
  r.k = k;
  r.size = S.degree();
  RadonTable t = radon_transform(S, k, limits);
  r.m_star = t.min_richness();
  r.constant = C;
  double denom = std::pow(static_cast<double>(std::max<long>(r.m_star, 1)),
                          static_cast<double>(r.n) / k);
  r.ratio = static_cast<double>(r.size) / denom;
  r.pass = static_cast<double>(r.size) > C * denom;
  double factorial = 1;
  for (int i = 2; i <= r.n; ++i) factorial *= i;
  r.refined_ratio = r.ratio * factorial;
  if (r.m_star >= 1) {
    double c_star = std::log(static_cast<double>(r.m_star)) / std::log(static_cast<double>(r.q));
    r.reduced_lower_reference =
        0.25 * std::pow(static_cast<double>(r.q), c_star + (r.n - 1) / 2.0);
  }
  return r;
}

bool InductionReport::ok() const {
  if (!hypothesis_ok) return false;
  for (const auto& row : rows)
    if (!row.ok || !row.inner_hypothesis_ok) return false;
  return true;
}

InductionReport induction_step_check(const Scheme& S, int k, const GBLimits& limits) {
  const Ring& R = S.ring();
  const Field& F = R.field();
  const int n = R.nvars();
  if (!S.is_homogeneous()) throw Error("induction_step_check: scheme must be homogeneous");
  if (k < 1 || k >= n) throw Error("induction_step_check: need 1 <= k < n");

  InductionReport rep;
  // hypothesis at level k: minimum richness over through-origin k-planes
  long m = -1;
  for (const Direction& dir : enumerate_directions(n, k, F)) {
    long d = intersection_degree(S, through_origin(dir), limits);
    m = m < 0 ? d : std::min(m, d);
  }
  rep.m = m;
  rep.hypothesis_ok = m >= 1;
  if (!rep.hypothesis_ok) return rep;
  long long b = k;
  while (binomial(b + 1, k) <= m) ++b;
  rep.b = b;
  rep.required = binomial(b + 1, k + 1);

  // ranges over (k+1)-planes through the origin; k+1 == n means the whole space
  auto check_plane = [&](const AffinePlane& W, std::size_t index) {
    InductionRow row;
    row.direction_index = index;
    Ring tring = Ring::standard(F, k + 1);
    std::vector<Polynomial> images = plane_parametrization(W, tring);
    std::vector<Polynomial> gens;
    for (const Polynomial& g : S.ideal().gens) gens.push_back(substitute(g, images));
    Scheme SW(Ideal(tring, std::move(gens)), limits);
    row.degree = SW.degree();
    // the k-plane hypothesis inside W, applied to the restricted scheme
    row.inner_hypothesis_ok = true;
    for (const Direction& inner : enumerate_directions(k + 1, k, F)) {
      if (intersection_degree(SW, through_origin(inner), limits) < m) {
        row.inner_hypothesis_ok = false;
        break;
      }
    }
    row.ok = row.degree >= rep.required;
    rep.rows.push_back(row);
  };

  if (k + 1 == n) {
    // the full space as the single (k+1)-plane: restriction is S itself
    InductionRow row;
    row.direction_index = 0;
    row.degree = S.degree();
    row.inner_hypothesis_ok = true;
    for (const Direction& inner : enumerate_directions(n, k, F)) {
      if (intersection_degree(S, through_origin(inner), limits) < m) {
        row.inner_hypothesis_ok = false;
        break;
      }
    }
    row.ok = row.degree >= rep.required;
    rep.rows.push_back(row);
    return rep;
  }

  auto dirs = enumerate_directions(n, k + 1, F);
  for (std::size_t i = 0; i < dirs.size(); ++i) check_plane(through_origin(dirs[i]), i);
  return rep;
}

std::vector<std::vector<FElem>> all_points(const Field& F, int n) {
  auto elements = F.elements();
  std::vector<std::vector<FElem>> out;
  std::vector<std::size_t> odo(n, 0);
  for (;;) {
    std::vector<FElem> pt(n);
    for (int i = 0; i < n; ++i) pt[i] = elements[odo[i]];
    out.push_back(std::move(pt));
    int v = 0;
    while (v < n) {
      if (odo[v] + 1 < elements.size()) { ++odo[v]; break; }
      odo[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return out;
}

Scheme scheme_from_points(const std::vector<std::vector<FElem>>& pts, const Ring& ring) {
  GroebnerBasis gb = vanishing_ideal(pts, ring, MonomialOrder::grevlex(ring.nvars()));
  return Scheme(Ideal(ring, gb.elems));
}

namespace {

struct PlaneTable {
  // per direction, per parallel plane: sorted point indices
  std::vector<std::vector<std::vector<int>>> planes;
};

PlaneTable build_plane_table(const Field& F, int n, int k,
                             const std::vector<std::vector<FElem>>& pts) {
  PlaneTable t;
  for (const Direction& dir : enumerate_directions(n, k, F)) {
    std::vector<std::vector<int>> cls;
    for (const AffinePlane& V : enumerate_parallel(dir, F)) {
      std::vector<int> idx;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (plane_contains(V, pts[i], F)) idx.push_back(static_cast<int>(i));
      cls.push_back(std::move(idx));
    }
    t.planes.push_back(std::move(cls));
  }
  return t;
}

bool mask_is_furstenberg(const PlaneTable& t, std::uint32_t mask, long m) {
  for (const auto& cls : t.planes) {
    bool rich = false;
    for (const auto& plane : cls) {
      long count = 0;
      for (int i : plane) count += (mask >> i) & 1u;
      if (count >= m) { rich = true; break; }
    }
    if (!rich) return false;
  }
  return true;
}

}  // namespace

SearchResult search_furstenberg_sets(const Field& F, int n, int k, long m, SearchMode mode,
                                     const SearchBudget& budget, std::uint64_t seed) {
  SearchResult result;
  auto pts = all_points(F, n);
  const std::size_t npts = pts.size();
  long long qk = 1;
  for (int i = 0; i < k; ++i) qk *= static_cast<long long>(F.q());
  if (m > qk) {
    // a k-plane has q^k points; no reduced set can be m-rich anywhere
    result.feasible = false;
    return result;
  }

  PlaneTable table = build_plane_table(F, n, k, pts);
  auto materialize = [&](std::uint32_t mask) {
    std::vector<std::vector<FElem>> set;
    for (std::size_t i = 0; i < npts; ++i)
      if ((mask >> i) & 1u) set.push_back(pts[i]);
    return set;
  };

  if (mode == SearchMode::Exhaustive) {
    if (npts > 16) throw CapError("search: exhaustive mode requires q^n <= 16");
    for (std::size_t size = 0; size <= npts; ++size) {
      // all masks of the given popcount, ascending
      std::vector<std::uint32_t> candidates;
      for (std::uint32_t mask = 0; mask < (1u << npts); ++mask)
        if (static_cast<std::size_t>(__builtin_popcount(mask)) == size) candidates.push_back(mask);
      std::vector<char> good(candidates.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (long i = 0; i < static_cast<long>(candidates.size()); ++i)
        good[i] = mask_is_furstenberg(table, candidates[i], m);
      result.examined += static_cast<long long>(candidates.size());
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (good[i]) {
          result.feasible = true;
          result.set = materialize(candidates[i]);
          result.size = static_cast<long>(size);
          result.is_true_minimum = true;
          return result;
        }
      }
    }
    return result;  // infeasible (m > q^k was already excluded, so unreachable)
  }

  auto greedy_run = [&](SplitMix64& rng, bool randomize) -> std::optional<std::uint32_t> {
    std::uint32_t mask = 0;
    for (long long steps = 0; steps < static_cast<long long>(npts) + 1; ++steps) {
      if (mask_is_furstenberg(table, mask, m)) return mask;
      // candidate points: those on a current best plane of an unsatisfied direction
      std::vector<long> gain(npts, 0);
      for (const auto& cls : table.planes) {
        long best = -1;
        std::size_t best_plane = 0;
        for (std::size_t p = 0; p < cls.size(); ++p) {
          long count = 0;
          for (int i : cls[p]) count += (mask >> i) & 1u;
          if (count > best) { best = count; best_plane = p; }
        }
        if (best >= m) continue;
        for (int i : cls[best_plane])
          if (!((mask >> i) & 1u)) ++gain[i];
      }
      long best_gain = -1;
      std::size_t best_i = npts;
      for (std::size_t i = 0; i < npts; ++i) {
        if ((mask >> i) & 1u) continue;
        long g = gain[i];
        if (randomize) g = g * 16 + static_cast<long>(rng.below(16));
        if (g > best_gain) { best_gain = g; best_i = i; }
      }
      if (best_i == npts) return std::nullopt;
      mask |= (1u << best_i);
      ++result.examined;
      if (result.examined > budget.max_examined) return std::nullopt;
    }
    return std::nullopt;
  };

  if (npts > 32) throw CapError("search: point space too large for mask search");
  std::optional<std::uint32_t> best_mask;
  int restarts = mode == SearchMode::Greedy ? 1 : budget.random_restarts;
  for (int rs = 0; rs < restarts; ++rs) {
    SplitMix64 rng(seed + static_cast<std::uint64_t>(rs) * 0x9e3779b97f4a7c15ULL);
    auto mask = greedy_run(rng, mode == SearchMode::Random);
    if (mask && (!best_mask || __builtin_popcount(*mask) < __builtin_popcount(*best_mask)))
      best_mask = mask;
  }
  if (best_mask) {
    result.feasible = true;
    result.set = materialize(*best_mask);
    result.size = __builtin_popcount(*best_mask);
  }
  return result;
}

}  // namespace furst
