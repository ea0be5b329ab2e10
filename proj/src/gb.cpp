#include "furst/gb.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace furst {

Ideal::Ideal(Ring r, std::vector<Polynomial> g) : ring(std::move(r)) {
  gens.reserve(g.size());
  for (Polynomial& p : g) {
    if (!p.ring().compatible(ring)) throw Error("ideal generator in wrong ring");
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
}

namespace {

// Single full-division pass of f by basis; counts work against *budget.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const std::vector<Monomial>& lms, const MonomialOrder& order,
                       long* budget) {
  const Ring& R = f.ring();
  const Field& F = R.field();
  Polynomial p = f;
  Polynomial remainder = Polynomial::zero(R);
  while (!p.is_zero()) {
    if (budget && --(*budget) < 0) throw CapError("groebner: reduction step cap exceeded");
    const Term& lt = p.leading_term(order);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (lms[i].divides(lt.mono)) {
        FElem lc = basis[i].leading_term(order).coef;
        FElem c = F.div(lt.coef, lc);
        p = p - basis[i].times_term(lt.mono / lms[i], c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder = remainder + Polynomial::from_terms(R, {lt});
      p = p - Polynomial::from_terms(R, {lt});
    }
  }
  return remainder;
}

struct Pair {
  int i, j;
  Monomial lcm_m;
  int lcm_deg;
};

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order, const GBLimits& limits) {
  if (order.nvars() != ideal.ring.nvars()) throw Error("groebner: order arity mismatch");
  const Ring& R = ideal.ring;
  long pair_budget = limits.max_pair_reductions;
  long step_budget = limits.max_pair_reductions * 64;  // guards pathological division loops

  std::vector<Polynomial> basis;
  std::vector<Monomial> lms;
  for (const Polynomial& g : ideal.gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic(order);
    basis.push_back(m);
    lms.push_back(m.leading_term(order).mono);
  }

  std::deque<Pair> pairs;
  auto push_pairs_for = [&](int jnew) {
    for (int i = 0; i < jnew; ++i) {
      Monomial l = lcm(lms[i], lms[jnew]);
      // product criterion: coprime leading monomials reduce to zero
      if (l == lms[i] * lms[jnew]) continue;
      pairs.push_back({i, jnew, l, l.degree()});
    }
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    // normal strategy: smallest lcm degree, then order on lcm, then index
    std::size_t best = 0;
    for (std::size_t t = 1; t < pairs.size(); ++t) {
      const Pair &a = pairs[t], &b = pairs[best];
      if (a.lcm_deg != b.lcm_deg) {
        if (a.lcm_deg < b.lcm_deg) best = t;
        continue;
      }
      int c = order.compare(a.lcm_m, b.lcm_m);
      if (c != 0) {
        if (c < 0) best = t;
        continue;
      }
      if (a.i != b.i ? a.i < b.i : a.j < b.j) best = t;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));

    if (--pair_budget < 0) throw CapError("groebner: pair reduction cap exceeded");

    const Field& F = R.field();
    const Polynomial &fi = basis[pr.i], &fj = basis[pr.j];
    Polynomial spoly = fi.times_term(pr.lcm_m / lms[pr.i], F.one()) -
                       fj.times_term(pr.lcm_m / lms[pr.j], F.one());
    Polynomial rem = reduce_full(spoly, basis, lms, order, &step_budget);
    if (!rem.is_zero()) {
      rem = rem.monic(order);
      basis.push_back(rem);
      lms.push_back(rem.leading_term(order).mono);
      push_pairs_for(static_cast<int>(basis.size()) - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial another divides
  // (ties between equal leading monomials keep the earlier element).
  std::vector<char> keep(basis.size(), 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (!lms[j].divides(lms[i])) continue;
      if (lms[i] == lms[j] && j > i) continue;
      keep[i] = 0;
      break;
    }
  }
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_lms;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) {
      minimal.push_back(basis[i]);
      minimal_lms.push_back(lms[i]);
    }

  // Auto-reduce tails.
  std::vector<Polynomial> reduced(minimal.size(), Polynomial::zero(R));
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    std::vector<Monomial> other_lms;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) {
        others.push_back(minimal[j]);
        other_lms.push_back(minimal_lms[j]);
      }
    reduced[i] = reduce_full(minimal[i], others, other_lms, order, &step_budget).monic(order);
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_term(order).mono, b.leading_term(order).mono);
  });

  GroebnerBasis gb;
  gb.order = order;
  gb.elems = std::move(reduced);
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  std::vector<Monomial> lms;
  lms.reserve(gb.elems.size());
  for (const Polynomial& g : gb.elems) lms.push_back(g.leading_term(gb.order).mono);
  long budget = 100'000'000;
  return reduce_full(f, gb.elems, lms, gb.order, &budget);
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) {
  return normal_form(f, gb).is_zero();
}

std::optional<long> quotient_dim_of(const GroebnerBasis& gb) {
  if (gb.elems.empty()) return std::nullopt;  // zero ideal in >= 1 variables
  int n = gb.elems[0].ring().nvars();
  std::vector<long> bound(n, -1);
  std::vector<Monomial> lms;
  for (const Polynomial& g : gb.elems) lms.push_back(g.leading_term(gb.order).mono);
  if (std::any_of(lms.begin(), lms.end(), [](const Monomial& m) { return m.is_one(); }))
    return 0;  // unit ideal
  for (const Monomial& m : lms) {
    int support = -1;
    bool pure = true;
    for (int v = 0; v < n; ++v)
      if (m.exp[v]) {
        if (support >= 0) { pure = false; break; }
        support = v;
      }
    if (pure && support >= 0)
      bound[support] = bound[support] < 0 ? m.exp[support] : std::min<long>(bound[support], m.exp[support]);
  }
  for (int v = 0; v < n; ++v)
    if (bound[v] < 0) return std::nullopt;

  // count monomials below the box not divisible by any leading monomial
  long count = 0;
  Monomial cur = Monomial::one(n);
  auto divisible = [&](const Monomial& m) {
    for (const Monomial& l : lms)
      if (l.divides(m)) return true;
    return false;
  };
  // odometer over the box
  for (;;) {
    if (!divisible(cur)) ++count;
    int v = 0;
    while (v < n) {
      if (cur.exp[v] + 1 < bound[v]) {
        ++cur.exp[v];
        break;
      }
      cur.exp[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return count;
}

std::vector<Monomial> standard_monomials_of(const GroebnerBasis& gb) {
  auto dim = quotient_dim_of(gb);
  if (!dim) throw Error("standard_monomials: infinite-dimensional quotient");
  int n = gb.elems.empty() ? 0 : gb.elems[0].ring().nvars();
  std::vector<Monomial> lms;
  for (const Polynomial& g : gb.elems) lms.push_back(g.leading_term(gb.order).mono);
  std::vector<long> bound(n, 0);
  for (const Monomial& m : lms) {
    int support = -1;
    bool pure = true;
    for (int v = 0; v < n; ++v)
      if (m.exp[v]) {
        if (support >= 0) { pure = false; break; }
        support = v;
      }
    if (pure && support >= 0)
      bound[support] = bound[support] == 0 ? m.exp[support] : std::min<long>(bound[support], m.exp[support]);
  }
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(n);
  auto divisible = [&](const Monomial& m) {
    for (const Monomial& l : lms)
      if (l.divides(m)) return true;
    return false;
  };
  for (;;) {
    if (!divisible(cur)) out.push_back(cur);
    int v = 0;
    while (v < n) {
      if (cur.exp[v] + 1 < bound[v]) {
        ++cur.exp[v];
        break;
      }
      cur.exp[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    int c = a.degree() - b.degree();
    if (c) return c < 0;
    return gb.order.less(a, b);
  });
  return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!a.ring.compatible(b.ring)) throw Error("ideal_sum: ring mismatch");
  std::vector<Polynomial> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return Ideal(a.ring, std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b, const GBLimits& limits) {
  if (!a.ring.compatible(b.ring)) throw Error("ideal_intersection: ring mismatch");
  const Ring& R = a.ring;
  int n = R.nvars();
  std::vector<std::string> names = R.names();
  names.push_back("_t");
  Ring ext(R.field(), names);

  auto lift = [&](const Polynomial& f) {
    std::vector<Term> ts;
    for (const Term& t : f.terms()) {
      Term u = t;
      u.mono.nvars = static_cast<std::uint8_t>(n + 1);
      ts.push_back(u);
    }
    return Polynomial::from_terms(ext, std::move(ts));
  };
  Polynomial t = Polynomial::variable(ext, n);
  Polynomial one_minus_t = Polynomial::constant(ext, R.field().one()) - t;

  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens) gens.push_back(t * lift(f));
  for (const Polynomial& g : b.gens) gens.push_back(one_minus_t * lift(g));

  // lex with _t most significant eliminates _t
  std::vector<int> sig;
  sig.push_back(n);
  for (int v = n - 1; v >= 0; --v) sig.push_back(v);
  MonomialOrder elim = MonomialOrder::with_significance(OrderKind::Lex, sig);

  GroebnerBasis gb = groebner(Ideal(ext, std::move(gens)), elim, limits);

  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.elems) {
    bool has_t = false;
    for (const Term& term : g.terms())
      if (term.mono.exp[n]) { has_t = true; break; }
    if (has_t) continue;
    std::vector<Term> ts;
    for (const Term& term : g.terms()) {
      Term u = term;
      u.mono.nvars = static_cast<std::uint8_t>(n);
      ts.push_back(u);
    }
    kept.push_back(Polynomial::from_terms(R, std::move(ts)));
  }
  return Ideal(R, std::move(kept));
}

GroebnerBasis vanishing_ideal(const std::vector<std::vector<FElem>>& points, const Ring& ring,
                              const MonomialOrder& order) {
  const Field& F = ring.field();
  const int n = ring.nvars();
  const std::size_t s = points.size();
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != n) throw Error("vanishing_ideal: point dimension mismatch");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (points[i] == points[j]) throw Error("vanishing_ideal: duplicate point");

  struct Row {
    std::size_t pivot;
    std::vector<FElem> vec;  // pivot entry 1
    Polynomial comb;
  };
  std::vector<Row> rows;
  std::vector<Polynomial> gb_elems;
  std::vector<Monomial> gb_lms;

  auto order_less = [&](const Monomial& x, const Monomial& y) { return order.less(x, y); };
  std::set<Monomial, decltype(order_less)> queue(order_less);
  queue.insert(Monomial::one(n));

  auto eval_mono = [&](const Monomial& m, const std::vector<FElem>& pt) {
    FElem v = F.one();
    for (int i = 0; i < n; ++i)
      if (m.exp[i]) v = F.mul(v, F.pow(pt[i], m.exp[i]));
    return v;
  };

  while (!queue.empty()) {
    Monomial m = *queue.begin();
    queue.erase(queue.begin());
    bool redundant = false;
    for (const Monomial& l : gb_lms)
      if (l.divides(m)) { redundant = true; break; }
    if (redundant) continue;

    std::vector<FElem> v(s);
    for (std::size_t i = 0; i < s; ++i) v[i] = eval_mono(m, points[i]);
    Polynomial f = Polynomial::from_terms(ring, {{m, F.one()}});
    for (const Row& row : rows) {
      FElem c = v[row.pivot];
      if (F.is_zero(c)) continue;
      for (std::size_t i = 0; i < s; ++i) v[i] = F.sub(v[i], F.mul(c, row.vec[i]));
      f = f - row.comb.scaled(c);
    }
    std::size_t pivot = s;
    for (std::size_t i = 0; i < s; ++i)
      if (!F.is_zero(v[i])) { pivot = i; break; }
    if (pivot == s) {
      gb_elems.push_back(f);  // monic with leading monomial m
      gb_lms.push_back(m);
    } else {
      FElem scale = F.inv(v[pivot]);
      for (auto& x : v) x = F.mul(x, scale);
      rows.push_back({pivot, std::move(v), f.scaled(scale)});
      for (int var = 0; var < n; ++var) queue.insert(m * Monomial::var(n, var));
    }
  }

  std::sort(gb_elems.begin(), gb_elems.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.less(x.leading_term(order).mono, y.leading_term(order).mono);
  });
  GroebnerBasis gb;
  gb.order = order;
  gb.elems = std::move(gb_elems);
  return gb;
}

Scheme::Scheme(Ideal ideal, const GBLimits& limits) {
  auto d = std::make_shared<Data>();
  MonomialOrder order = MonomialOrder::grevlex(ideal.ring.nvars());
  d->gb = groebner(ideal, order, limits);
  d->ideal = std::move(ideal);
  d->dim = quotient_dim_of(d->gb);
  if (d->dim) d->std_monos = standard_monomials_of(d->gb);
  d->homogeneous = std::all_of(d->gb.elems.begin(), d->gb.elems.end(),
                               [](const Polynomial& g) { return g.is_homogeneous(); });
  d_ = std::move(d);
}

long Scheme::degree() const {
  if (!d_->dim) throw Error("scheme has infinite-dimensional quotient");
  return *d_->dim;
}

const std::vector<Monomial>& Scheme::standard_monomials() const {
  if (!d_->dim) throw Error("scheme has infinite-dimensional quotient");
  return d_->std_monos;
}

}  // namespace furst
