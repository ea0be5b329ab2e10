#include "furst/borel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace furst {

namespace {

std::uint64_t pack(const Monomial& m) {
  std::uint64_t v = 0;
  for (int i = 0; i < m.nvars; ++i) v = (v << 16) | m.exp[i];
  return v;
}

void sort_canonical(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end(),
            [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) < 0; });
}

bool sorted_contains(const std::vector<Monomial>& v, const Monomial& m) {
  auto it = std::lower_bound(v.begin(), v.end(), m, [](const Monomial& a, const Monomial& b) {
    return canonical_compare(a, b) < 0;
  });
  return it != v.end() && *it == m;
}

}  // namespace

std::optional<BorelViolation> borel_violation(const std::vector<Monomial>& monos, int nvars) {
  std::vector<Monomial> sorted = monos;
  sort_canonical(sorted);
  for (const Monomial& m : sorted) {
    for (int j = 0; j < nvars; ++j) {
      if (!m.exp[j]) continue;
      Monomial div = m / Monomial::var(nvars, j);
      if (!sorted_contains(sorted, div)) {
        BorelViolation v;
        v.from = m;
        v.var_from = j;
        v.var_to = j;
        v.result = div;
        v.divisibility = true;
        return v;
      }
      for (int i = 0; i < j; ++i) {
        Monomial moved = div * Monomial::var(nvars, i);
        if (!sorted_contains(sorted, moved)) {
          BorelViolation v;
          v.from = m;
          v.var_from = j;
          v.var_to = i;
          v.result = moved;
          return v;
        }
      }
    }
  }
  return std::nullopt;
}

BorelSet::BorelSet(std::vector<Monomial> monos, int nvars) {
  for (const Monomial& m : monos)
    if (m.nvars != nvars) throw Error("BorelSet: monomial arity mismatch");
  if (auto v = borel_violation(monos, nvars)) {
    throw Error("BorelSet: not Borel-fixed (move x" + std::to_string(v->var_from + 1) + " -> x" +
                std::to_string(v->var_to + 1) + " escapes the set)");
  }
  nvars_ = nvars;
  monos_ = std::move(monos);
  sort_canonical(monos_);
  monos_.erase(std::unique(monos_.begin(), monos_.end()), monos_.end());
}

BorelSet BorelSet::unchecked(std::vector<Monomial> sorted_monos, int nvars) {
  BorelSet s;
  s.nvars_ = nvars;
  s.monos_ = std::move(sorted_monos);
  return s;
}

bool BorelSet::contains(const Monomial& m) const { return sorted_contains(monos_, m); }

BorelSet lambda_slice(const BorelSet& lambda, int j) {
  if (j < 0) throw Error("lambda_slice: slice index must be >= 0");
  int n = lambda.nvars();
  std::vector<Monomial> out;
  for (const Monomial& m : lambda.monomials()) {
    if (m.exp[0] != j) continue;
    Monomial s = Monomial::one(n - 1);
    for (int v = 1; v < n; ++v) s.exp[v - 1] = m.exp[v];
    out.push_back(s);
  }
  sort_canonical(out);
  return BorelSet::unchecked(std::move(out), n - 1);
}

std::vector<Monomial> frontier(const BorelSet& lambda) {
  int n = lambda.nvars();
  std::vector<Monomial> out;
  for (const Monomial& m : lambda.monomials()) {
    bool on_frontier = true;
    for (int v = 0; v < n; ++v) {
      if (lambda.contains(m * Monomial::var(n, v))) {
        on_frontier = false;
        break;
      }
    }
    if (on_frontier) out.push_back(m);
  }
  return out;
}

BorelSet borel_closure(const std::vector<Monomial>& monos, int nvars) {
  auto cmp = [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) < 0; };
  std::set<Monomial, decltype(cmp)> seen(cmp);
  std::vector<Monomial> work = monos;
  while (!work.empty()) {
    Monomial m = work.back();
    work.pop_back();
    if (m.nvars != nvars) throw Error("borel_closure: arity mismatch");
    if (!seen.insert(m).second) continue;
    for (int j = 0; j < nvars; ++j) {
      if (!m.exp[j]) continue;
      Monomial div = m / Monomial::var(nvars, j);
      work.push_back(div);
      for (int i = 0; i < j; ++i) work.push_back(div * Monomial::var(nvars, i));
    }
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  return BorelSet::unchecked(std::move(out), nvars);
}

FrontierVerdict verify_frontier_lemma(const BorelSet& lambda) {
  FrontierVerdict v;
  const int n = lambda.nvars();
  const long long size = lambda.size();

  long long a = 0;
  while (binomial(a + 1, n) <= size) ++a;
  v.a = a;

  long long lambda0 = lambda_slice(lambda, 0).size();
  v.lemma_lhs = size - lambda0;
  v.lemma_rhs = binomial(a - 1, n);
  v.lemma_holds = v.lemma_lhs >= v.lemma_rhs;

  // Telescoping: |Lambda| - |Lambda_0| = sum_{j>=1} |Lambda_j|.
  long long tail = 0;
  int max_x1 = 0;
  for (const Monomial& m : lambda.monomials()) max_x1 = std::max<int>(max_x1, m.exp[0]);
  for (int j = 1; j <= max_x1; ++j) tail += lambda_slice(lambda, j).size();
  v.telescoping_holds = (size - lambda0) == tail;

  // The corollary needs at least one variable left after slicing; for n = 1
  // "the largest b with binom(b, 0) <= |Lambda_0|" is unbounded.
  if (n >= 2) {
    v.corollary_checked = true;
    long long b = 0;
    while (binomial(b + 1, n - 1) <= lambda0) ++b;
    v.b = b;
    v.corollary_rhs = binomial(b, n);
    v.corollary_holds = v.lemma_lhs >= v.corollary_rhs;
  }

  v.holds = v.lemma_holds && v.telescoping_holds && (!v.corollary_checked || v.corollary_holds);
  return v;
}

void enumerate_borel_sets(int n, int max_size, const std::function<void(const BorelSet&)>& fn) {
  if (n < 1 || n > 4 || max_size < 1 || max_size > 30)
    throw CapError("enumerate_borel_sets: supported range is n <= 4, max_size <= 30");

  // Level-by-level enumeration of divisor-closed sets (staircases): a set of
  // size s+1 arises from one of size s by adding a monomial whose divisors
  // are all present. Deduplicate within a level by the packed canonical
  // form; the Borel-move filter runs on each emitted level. pack() is exact
  // for n <= 4 (guarded above).
  using Key = std::vector<std::uint64_t>;

  std::vector<std::vector<Monomial>> level{{Monomial::one(n)}};
  for (int s = 1; s <= max_size && !level.empty(); ++s) {
    // emit this level in canonical order
    std::sort(level.begin(), level.end(),
              [](const std::vector<Monomial>& x, const std::vector<Monomial>& y) {
                for (std::size_t i = 0; i < x.size(); ++i) {
                  int c = canonical_compare(x[i], y[i]);
                  if (c) return c < 0;
                }
                return false;
              });
    for (const auto& monos : level) {
      if (borel_violation(monos, n)) continue;
      fn(BorelSet::unchecked(std::vector<Monomial>(monos), n));
    }
    if (s == max_size) break;

    std::set<Key> seen;
    std::vector<std::vector<Monomial>> next_level;
    for (const auto& cur : level) {
      std::set<std::uint64_t> curset;
      for (const Monomial& m : cur) curset.insert(pack(m));
      std::set<std::uint64_t> cand_seen;
      for (const Monomial& m : cur) {
        for (int vvar = 0; vvar < n; ++vvar) {
          Monomial c = m * Monomial::var(n, vvar);
          std::uint64_t pc = pack(c);
          if (curset.count(pc) || !cand_seen.insert(pc).second) continue;
          bool closed = true;
          for (int j = 0; j < n && closed; ++j) {
            if (!c.exp[j]) continue;
            if (!curset.count(pack(c / Monomial::var(n, j)))) closed = false;
          }
          if (!closed) continue;
          std::vector<Monomial> next = cur;
          next.push_back(c);
          sort_canonical(next);
          Key key;
          key.reserve(next.size());
          for (const Monomial& x : next) key.push_back(pack(x));
          if (!seen.insert(std::move(key)).second) continue;
          next_level.push_back(std::move(next));
        }
      }
    }
    level = std::move(next_level);
  }
}

std::vector<BorelSet> enumerate_borel_sets(int n, int max_size) {
  std::vector<BorelSet> out;
  enumerate_borel_sets(n, max_size, [&](const BorelSet& s) { out.push_back(s); });
  return out;
}

}  // namespace furst
