#include "furst/degen.hpp"

#include <algorithm>
#include <map>

#include "furst/incidence.hpp"

namespace furst {

DilationResult dilate(const Scheme& S, const GBLimits& limits) {
  if (!S.quotient_dim()) throw Error("dilate: scheme must have finite quotient dimension");
  const GroebnerBasis& gb = S.basis();  // grevlex: degree compatible
  std::vector<Polynomial> top_gens;
  std::vector<std::pair<int, int>> cert;
  for (const Polynomial& g : gb.elems) {
    Polynomial t = top_degree_form(g);
    cert.emplace_back(g.degree(), t.degree());
    top_gens.push_back(std::move(t));
  }
  Scheme S0(Ideal(S.ring(), std::move(top_gens)), limits);
  if (!S0.is_homogeneous()) throw Error("dilate: top-form ideal not homogeneous (bug)");
  if (!S0.quotient_dim() || S0.degree() != S.degree())
    throw Error("dilate: degree mismatch |S_0| != |S| (degree compatibility violated - bug)");
  return DilationResult{S, std::move(S0), std::move(cert)};
}

CapdilateReport verify_capdilate(const Scheme& S, int k, const GBLimits& limits) {
  const Ring& R = S.ring();
  if (k >= R.nvars()) throw Error("verify_capdilate: need k < n");
  DilationResult d = dilate(S, limits);

  CapdilateReport report;
  auto dirs = enumerate_directions(R.nvars(), k, R.field());
  for (std::size_t di = 0; di < dirs.size(); ++di) {
    long m0 = intersection_degree(d.degenerate, through_origin(dirs[di]), limits);
    auto planes = enumerate_parallel(dirs[di], R.field());
    for (std::size_t pi = 0; pi < planes.size(); ++pi) {
      CapdilateRow row;
      row.direction_index = di;
      row.plane_index = pi;
      row.m = intersection_degree(S, planes[pi], limits);
      row.m0 = m0;
      row.ok = row.m0 >= row.m;
      if (!row.ok) report.violations.push_back(row);
      report.rows.push_back(row);
    }
  }
  return report;
}

namespace {

// Key for an initial ideal: the sorted minimal generating monomials.
std::string monomial_ideal_key(const std::vector<Monomial>& gens, const Ring& R) {
  std::vector<Monomial> sorted = gens;
  std::sort(sorted.begin(), sorted.end(),
            [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) < 0; });
  std::string key;
  for (const Monomial& m : sorted) {
    Polynomial p = Polynomial::from_terms(R, {{m, R.field().one()}});
    key += poly_print(p) + ";";
  }
  return key;
}

bool has_ascending_priority(const MonomialOrder& order) {
  int n = order.nvars();
  for (int i = 0; i < n; ++i)
    if (order.significance[i] != n - 1 - i) return false;
  return true;
}

}  // namespace

GinResult gin(const Scheme& S, const MonomialOrder& order, int trials, std::uint64_t seed,
              const GBLimits& limits) {
  const Ring& R = S.ring();
  const Field& F = R.field();
  const int n = R.nvars();
  if (order.nvars() != n) throw Error("gin: order arity mismatch");
  if (!has_ascending_priority(order))
    throw Error("gin: order must have variable priority x_1 < x_2 < ... < x_n");
  if (trials < 2) throw Error("gin: need at least 2 trials");

  // extension degree so the sampling field has at least 64 elements
  int ext = 1;
  std::uint64_t qe = F.q();
  while (qe < 64) {
    qe *= F.q();
    ++ext;
  }
  Field K = ext == 1 ? F : Field::create(F.p(), F.e() * ext, 0);
  FieldEmbedding emb(F, K);
  Ring RK(K, R.names());
  std::vector<Polynomial> lifted;
  for (const Polynomial& g : S.ideal().gens) {
    std::vector<Term> ts;
    for (const Term& t : g.terms()) ts.push_back({t.mono, emb.map(t.coef)});
    lifted.push_back(Polynomial::from_terms(RK, std::move(ts)));
  }

  std::map<std::string, std::pair<int, std::vector<Monomial>>> seen;  // key -> (count, gens)
  int used = 0;
  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(trial) + 1);
    // invertible upper triangular: x_i -> sum_{j >= i} g_ij x_j, g_ii != 0
    std::vector<Polynomial> images(n, Polynomial::zero(RK));
    for (int i = 0; i < n; ++i) {
      Polynomial row = Polynomial::zero(RK);
      for (int j = i; j < n; ++j) {
        FElem c;
        if (j == i) {
          c = FElem{static_cast<std::uint32_t>(1 + rng.below(K.q() - 1))};
        } else {
          c = FElem{static_cast<std::uint32_t>(rng.below(K.q()))};
        }
        if (!K.is_zero(c)) row = row + Polynomial::variable(RK, j).scaled(c);
      }
      images[i] = std::move(row);
    }
    std::vector<Polynomial> transformed;
    for (const Polynomial& g : lifted) transformed.push_back(substitute(g, images));
    GroebnerBasis gbk = groebner(Ideal(RK, std::move(transformed)), order, limits);
    std::vector<Monomial> in_gens;
    for (const Polynomial& g : gbk.elems) in_gens.push_back(g.leading_term(order).mono);
    ++used;

    std::string key = monomial_ideal_key(in_gens, R);
    auto& slot = seen[key];
    slot.second = in_gens;
    if (++slot.first >= 2) {
      // stable: build the monomial scheme over the base ring
      std::vector<Polynomial> base_gens;
      for (const Monomial& m : in_gens)
        base_gens.push_back(Polynomial::from_terms(R, {{m, F.one()}}));
      Scheme G(Ideal(R, std::move(base_gens)), limits);
      if (!G.quotient_dim() || !S.quotient_dim() || G.degree() != S.degree())
        throw Error("gin: dimension not preserved (bug or non-generic sample)");
      auto check = is_borel_fixed(G);
      if (!check.fixed) {
        std::vector<std::string> keys;
        for (const auto& [k2, v2] : seen) keys.push_back(k2);
        throw GinFailure(GinFailure::Kind::NotBorelFixed,
                         "gin: stable initial ideal is not Borel-fixed; sample was non-generic "
                         "(consider a larger extension)",
                         std::move(keys));
      }
      return GinResult{S, std::move(G), used, ext};
    }
  }
  std::vector<std::string> keys;
  for (const auto& [k2, v2] : seen) keys.push_back(k2);
  throw GinFailure(GinFailure::Kind::NoStabilization,
                   "gin: no two samples agreed within " + std::to_string(trials) + " trials",
                   std::move(keys));
}

BorelCheckResult is_borel_fixed(const std::vector<Monomial>& standard_set, int nvars) {
  BorelCheckResult r;
  r.witness = borel_violation(standard_set, nvars);
  r.fixed = !r.witness.has_value();
  return r;
}

BorelCheckResult is_borel_fixed(const Scheme& monomial_scheme) {
  for (const Polynomial& g : monomial_scheme.ideal().gens)
    if (g.terms().size() != 1) throw Error("is_borel_fixed: ideal is not monomial");
  if (!monomial_scheme.quotient_dim())
    throw Error("is_borel_fixed: infinite quotient");
  return is_borel_fixed(monomial_scheme.standard_monomials(), monomial_scheme.ring().nvars());
}

}  // namespace furst
