#include "furst/xscheme.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace furst {

ChartMatrix build_chart_matrix(const Scheme& S, int k, const Chart& chart) {
  const Ring& R = S.ring();
  const Field& F = R.field();
  const int n = R.nvars();
  if (!S.is_homogeneous()) throw Error("build_chart_matrix: scheme must be homogeneous");
  if (!S.quotient_dim()) throw Error("build_chart_matrix: infinite quotient dimension");
  if (chart.n != n || chart.k != k) throw Error("build_chart_matrix: chart shape mismatch");

  ChartMatrix M{chart, S, chart.coordinate_ring(F), 0, {}, {}, {}, {}};
  M.N = S.degree();
  M.rows = S.standard_monomials();

  std::map<Monomial, int, decltype([](const Monomial& a, const Monomial& b) {
             return canonical_compare(a, b) < 0;
           })>
      row_of;
  for (int r = 0; r < M.N; ++r) row_of.emplace(M.rows[r], r);

  // multiplication-by-x_v maps on the quotient basis
  M.mult_maps.assign(n, FMatrix(F, M.N, M.N));
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < M.N; ++c) {
      Polynomial prod = Polynomial::from_terms(R, {{M.rows[c] * Monomial::var(n, v), F.one()}});
      Polynomial nf = normal_form(prod, S.basis());
      for (const Term& t : nf.terms()) {
        auto it = row_of.find(t.mono);
        if (it == row_of.end()) throw Error("build_chart_matrix: normal form escaped the basis (bug)");
        M.mult_maps[v].at(it->second, c) = t.coef;
      }
    }
  }

  const int nk = n - k;
  M.cols.reserve(static_cast<std::size_t>(nk) * M.N);
  for (int ai = 0; ai < nk; ++ai)
    for (int mi = 0; mi < M.N; ++mi) M.cols.emplace_back(chart.cut_set[ai], M.rows[mi]);

  M.entries.assign(static_cast<std::size_t>(M.N) * M.cols.size(), Polynomial::zero(M.cring));
  for (int ai = 0; ai < nk; ++ai) {
    int a = chart.cut_set[ai];
    for (int mi = 0; mi < M.N; ++mi) {
      std::size_t col = static_cast<std::size_t>(ai) * M.N + mi;
      for (int r = 0; r < M.N; ++r) {
        std::vector<Term> terms;
        FElem c0 = M.mult_maps[a].at(r, mi);
        if (!F.is_zero(c0)) terms.push_back({Monomial::one(M.cring.nvars()), c0});
        for (int bi = 0; bi < k; ++bi) {
          FElem cb = M.mult_maps[chart.free_set[bi]].at(r, mi);
          if (!F.is_zero(cb))
            terms.push_back({Monomial::var(M.cring.nvars(), ai * k + bi), cb});
        }
        if (!terms.empty())
          M.entries[static_cast<std::size_t>(r) * M.cols.size() + col] =
              Polynomial::from_terms(M.cring, std::move(terms));
      }
    }
  }
  return M;
}

FMatrix evaluate_chart_matrix(const ChartMatrix& M, const std::vector<FElem>& point) {
  const Field& F = M.scheme.ring().field();
  if (static_cast<int>(point.size()) != M.cring.nvars())
    throw Error("evaluate_chart_matrix: wrong point dimension");
  const int k = M.chart.k, nk = M.chart.n - M.chart.k;
  FMatrix out(F, M.N, static_cast<int>(M.cols.size()));
  for (int ai = 0; ai < nk; ++ai) {
    int a = M.chart.cut_set[ai];
    for (int mi = 0; mi < M.N; ++mi) {
      int col = ai * static_cast<int>(M.N) + mi;
      for (int r = 0; r < M.N; ++r) {
        FElem v = M.mult_maps[a].at(r, mi);
        for (int bi = 0; bi < k; ++bi)
          v = F.add(v, F.mul(point[ai * k + bi], M.mult_maps[M.chart.free_set[bi]].at(r, mi)));
        out.at(r, col) = v;
      }
    }
  }
  return out;
}

bool is_rich_via_rank(const ChartMatrix& M, const std::vector<FElem>& point, long m) {
  return evaluate_chart_matrix(M, point).rank() <= M.N - m;
}

namespace {

// Kuhn's augmenting-path matching; rows adjacency given per column.
struct Matching {
  int nrows;
  std::vector<std::vector<int>> col_rows;  // adjacency per chosen column
  std::vector<int> row_match;              // row -> column slot, -1 free
  std::vector<int> col_match;              // column slot -> row

  explicit Matching(int rows) : nrows(rows), row_match(rows, -1) {}

  bool try_augment(int cslot, std::vector<char>& visited) {
    for (int r : col_rows[cslot]) {
      if (visited[r]) continue;
      visited[r] = 1;
      if (row_match[r] < 0 || try_augment(row_match[r], visited)) {
        row_match[r] = cslot;
        col_match[cslot] = r;
        return true;
      }
    }
    return false;
  }
  // add a column with the given row adjacency; true if matching grows
  bool push(const std::vector<int>& rows_adj) {
    col_rows.push_back(rows_adj);
    col_match.push_back(-1);
    std::vector<char> visited(nrows, 0);
    if (try_augment(static_cast<int>(col_rows.size()) - 1, visited)) return true;
    pop();
    return false;
  }
  void pop() {
    int slot = static_cast<int>(col_rows.size()) - 1;
    if (col_match[slot] >= 0) {
      // unwind: the matched row frees up, but augmenting paths may have
      // rerouted others; rebuild from scratch for simplicity and safety
      col_rows.pop_back();
      col_match.pop_back();
      rebuild();
      return;
    }
    col_rows.pop_back();
    col_match.pop_back();
  }
  void rebuild() {
    std::fill(row_match.begin(), row_match.end(), -1);
    std::fill(col_match.begin(), col_match.end(), -1);
    for (std::size_t c = 0; c < col_rows.size(); ++c) {
      std::vector<char> visited(nrows, 0);
      try_augment(static_cast<int>(c), visited);
    }
  }
  int size() const {
    int s = 0;
    for (int r : row_match) s += (r >= 0);
    return s;
  }
};

std::uint64_t support_mask(const ChartMatrix& M, int col) {
  std::uint64_t mask = 0;
  for (int r = 0; r < M.N; ++r)
    if (!M.entry(r, col).is_zero()) mask |= (1ULL << r);
  return mask;
}

// determinant of a submatrix by cofactor expansion along the sparsest row
Polynomial submatrix_det(const ChartMatrix& M, const std::vector<int>& rows,
                         const std::vector<int>& cols, long long* work, long long max_work) {
  const std::size_t s = rows.size();
  if (++(*work) > max_work) throw CapError("minor_ideal: expansion work cap exceeded");
  if (s == 1) return M.entry(rows[0], cols[0]);
  // pick the row with fewest nonzero entries
  std::size_t best_r = 0, best_count = s + 1;
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t cnt = 0;
    for (std::size_t j = 0; j < s; ++j)
      if (!M.entry(rows[i], cols[j]).is_zero()) ++cnt;
    if (cnt < best_count) {
      best_count = cnt;
      best_r = i;
    }
  }
  Polynomial det = Polynomial::zero(M.cring);
  if (best_count == 0) return det;
  std::vector<int> sub_rows;
  for (std::size_t i = 0; i < s; ++i)
    if (i != best_r) sub_rows.push_back(rows[i]);
  bool negate = (best_r % 2) != 0;
  for (std::size_t j = 0; j < s; ++j) {
    const Polynomial& e = M.entry(rows[best_r], cols[j]);
    bool neg = negate != ((j % 2) != 0);
    if (e.is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t t = 0; t < s; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    Polynomial minor = submatrix_det(M, sub_rows, sub_cols, work, max_work);
    if (minor.is_zero()) continue;
    Polynomial contrib = e * minor;
    det = neg ? det - contrib : det + contrib;
  }
  return det;
}

}  // namespace

long structural_rank(const ChartMatrix& M) {
  Matching match(static_cast<int>(M.N));
  for (std::size_t c = 0; c < M.cols.size(); ++c) {
    std::vector<int> adj;
    for (int r = 0; r < M.N; ++r)
      if (!M.entry(r, static_cast<int>(c)).is_zero()) adj.push_back(r);
    if (adj.empty()) continue;
    // Kuhn's: one augmentation attempt per column yields a maximum matching
    match.push(adj);
    if (match.size() == M.N) break;
  }
  return match.size();
}

MinorIdeal minor_ideal(const ChartMatrix& M, long m, const MinorLimits& limits) {
  if (m < 1 || m > M.N) throw Error("minor_ideal: need 1 <= m <= N");
  const long s = M.N - m + 1;
  MinorIdeal J{m, s, M.chart, M.cring, {}};

  // structurally nonzero columns and their supports
  std::vector<int> pool;
  std::vector<std::uint64_t> mask;
  if (M.N > 60) throw CapError("minor_ideal: N too large for support masks");
  for (std::size_t c = 0; c < M.cols.size(); ++c) {
    std::uint64_t sm = support_mask(M, static_cast<int>(c));
    if (sm) {
      pool.push_back(static_cast<int>(c));
      mask.push_back(sm);
    }
  }
  if (static_cast<long>(pool.size()) < s) return J;  // no candidate minors

  long long work = 0;

  // iterate over row subsets of size s in lexicographic order
  std::vector<int> rsub(s);
  for (long i = 0; i < s; ++i) rsub[i] = static_cast<int>(i);
  auto next_subset = [&](std::vector<int>& cur, int limit) {
    int i = static_cast<int>(cur.size()) - 1;
    while (i >= 0 && cur[i] == limit - static_cast<int>(cur.size()) + i) --i;
    if (i < 0) return false;
    ++cur[i];
    for (std::size_t j = i + 1; j < cur.size(); ++j) cur[j] = cur[j - 1] + 1;
    return true;
  };

  std::vector<Polynomial> gens;
  for (;;) {
    if (++work > limits.max_work) throw CapError("minor_ideal: enumeration work cap exceeded");
    std::uint64_t rmask = 0;
    for (int r : rsub) rmask |= (1ULL << r);
    // columns whose support meets the row set
    std::vector<int> cpool;
    std::vector<std::vector<int>> cadj;
    std::uint64_t cover = 0;
    for (std::size_t t = 0; t < pool.size(); ++t) {
      std::uint64_t inter = mask[t] & rmask;
      if (!inter) continue;
      cpool.push_back(pool[t]);
      std::vector<int> adj;
      for (long i = 0; i < s; ++i)
        if (inter & (1ULL << rsub[i])) adj.push_back(static_cast<int>(i));
      cadj.push_back(std::move(adj));
      cover |= inter;
    }
    if (static_cast<long>(cpool.size()) >= s && cover == rmask) {
      // DFS over columns with incremental matching
      Matching match(static_cast<int>(s));
      std::vector<int> chosen;
      std::vector<int> rows_vec(rsub.begin(), rsub.end());
      std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        if (++work > limits.max_work) throw CapError("minor_ideal: enumeration work cap exceeded");
        if (static_cast<long>(chosen.size()) == s) {
          std::vector<int> cols_vec;
          for (int ci : chosen) cols_vec.push_back(cpool[ci]);
          Polynomial det = submatrix_det(M, rows_vec, cols_vec, &work, limits.max_work);
          if (!det.is_zero()) gens.push_back(std::move(det));
          return;
        }
        long need = s - static_cast<long>(chosen.size());
        for (std::size_t c = start; c + need <= cpool.size(); ++c) {
          if (!match.push(cadj[c])) continue;  // including c caps the matching below s
          chosen.push_back(static_cast<int>(c));
          dfs(c + 1);
          chosen.pop_back();
          match.pop();
        }
      };
      dfs(0);
    }
    if (!next_subset(rsub, static_cast<int>(M.N))) break;
  }

  // deterministic duplicate pruning (keep first occurrence)
  for (auto& g : gens) {
    bool dup = false;
    for (const auto& kept : J.gens)
      if (kept == g) { dup = true; break; }
    if (!dup) J.gens.push_back(std::move(g));
  }
  return J;
}

namespace {

struct GridPlan {
  Field K;                       // evaluation field (possibly an extension)
  std::vector<FMatrix> emb_maps; // embedded multiplication maps
  std::vector<int> grid_sizes;   // per chart coordinate
  long long total_points = 1;
};

GridPlan plan_grid(const ChartMatrix& M, const XgrLimits& limits) {
  const Field& F = M.scheme.ring().field();
  const int k = M.chart.k, nk = M.chart.n - M.chart.k;
  GridPlan plan;

  // per-variable degree bound for every minor: the number of structurally
  // nonzero columns in which the variable can appear
  std::vector<int> D(static_cast<std::size_t>(nk) * k, 0);
  for (int bi = 0; bi < k; ++bi) {
    int b = M.chart.free_set[bi];
    int nonzero_cols = 0;
    for (int mi = 0; mi < M.N; ++mi) {
      bool nz = false;
      for (int r = 0; r < M.N && !nz; ++r)
        if (!F.is_zero(M.mult_maps[b].at(r, mi))) nz = true;
      if (nz) ++nonzero_cols;
    }
    for (int ai = 0; ai < nk; ++ai) D[static_cast<std::size_t>(ai) * k + bi] = nonzero_cols;
  }

  int max_side = 1;
  plan.grid_sizes.resize(D.size());
  for (std::size_t i = 0; i < D.size(); ++i) {
    plan.grid_sizes[i] = D[i] + 1;
    max_side = std::max(max_side, plan.grid_sizes[i]);
  }

  // evaluation field must have at least max_side elements
  int ext = 1;
  std::uint64_t qe = F.q();
  while (qe < static_cast<std::uint64_t>(max_side)) {
    qe *= F.q();
    ++ext;
  }
  plan.K = ext == 1 ? F : Field::create(F.p(), F.e() * ext, 0);
  if (ext == 1) {
    plan.emb_maps = M.mult_maps;
  } else {
    FieldEmbedding emb(F, plan.K);
    for (const FMatrix& mm : M.mult_maps) plan.emb_maps.push_back(mm.embedded(emb));
  }

  for (int g : plan.grid_sizes) {
    plan.total_points *= g;
    if (plan.total_points > limits.max_grid_points)
      throw CapError("generic_rank: grid too large (minor explosion guard)");
  }
  long long cells = plan.total_points * M.N * static_cast<long long>(M.cols.size());
  if (cells > limits.max_cells)
    throw CapError("generic_rank: evaluation budget exceeded (minor explosion guard)");
  return plan;
}

// rank of the evaluated matrix at grid point `idx` (mixed-radix decode)
int rank_at_grid_point(const ChartMatrix& M, const GridPlan& plan, long long idx) {
  const Field& K = plan.K;
  const int k = M.chart.k, nk = M.chart.n - M.chart.k;
  std::vector<FElem> pt(plan.grid_sizes.size());
  long long rem = idx;
  for (std::size_t i = 0; i < plan.grid_sizes.size(); ++i) {
    pt[i] = FElem{static_cast<std::uint32_t>(rem % plan.grid_sizes[i])};
    rem /= plan.grid_sizes[i];
  }
  FMatrix mat(K, static_cast<int>(M.N), static_cast<int>(M.cols.size()));
  for (int ai = 0; ai < nk; ++ai) {
    const FMatrix& Ma = plan.emb_maps[M.chart.cut_set[ai]];
    for (int mi = 0; mi < M.N; ++mi) {
      int col = ai * static_cast<int>(M.N) + mi;
      for (int r = 0; r < M.N; ++r) {
        FElem v = Ma.at(r, mi);
        for (int bi = 0; bi < k; ++bi)
          v = K.add(v, K.mul(pt[static_cast<std::size_t>(ai) * k + bi],
                             plan.emb_maps[M.chart.free_set[bi]].at(r, mi)));
        mat.at(r, col) = v;
      }
    }
  }
  return mat.rank();
}

long generic_rank_impl(const ChartMatrix& M, const XgrLimits& limits,
                       std::optional<long> early_above, bool parallel) {
  // cheap exact upper bound first
  long srank = structural_rank(M);
  if (early_above && srank <= *early_above) return srank;  // cannot exceed

  GridPlan plan = plan_grid(M, limits);
  long best = 0;

#ifdef _OPENMP
  if (parallel) {
    bool stop = false;
#pragma omp parallel for schedule(dynamic, 64) reduction(max : best) shared(stop)
    for (long long i = 0; i < plan.total_points; ++i) {
      bool skip;
#pragma omp atomic read
      skip = stop;
      if (skip) continue;
      int r = rank_at_grid_point(M, plan, i);
      if (r > best) best = r;
      if ((early_above && r > *early_above) || r >= srank) {
#pragma omp atomic write
        stop = true;
      }
    }
    return best;
  }
#else
  (void)parallel;
#endif
  for (long long i = 0; i < plan.total_points; ++i) {
    int r = rank_at_grid_point(M, plan, i);
    best = std::max<long>(best, r);
    if (early_above && best > *early_above) return best;
    if (best >= srank) return best;  // structural bound attained
  }
  return best;
}

}  // namespace

long generic_rank_on_chart(const ChartMatrix& M, const XgrLimits& limits,
                           std::optional<long> early_above) {
  return generic_rank_impl(M, limits, early_above, true);
}

long generic_rank_on_chart_serial(const ChartMatrix& M, const XgrLimits& limits,
                                  std::optional<long> early_above) {
  return generic_rank_impl(M, limits, early_above, false);
}

bool x_equals_grassmannian(const Scheme& S, long m, int k, const XgrLimits& limits) {
  const int n = S.ring().nvars();
  if (!S.quotient_dim()) throw Error("x_equals_grassmannian: infinite quotient");
  if (m < 1) return true;
  if (m > S.degree()) return false;  // no plane meets S in degree above |S|
  for (const auto& cut : k_subsets(n, n - k)) {
    ChartMatrix M = build_chart_matrix(S, k, Chart::make(n, k, cut));
    long r = generic_rank_on_chart(M, limits, M.N - m);
    if (r > M.N - m) return false;
  }
  return true;
}

EqualityBound bound_from_equality(long long m, int k, int n) {
  if (m < 1) throw Error("bound_from_equality: need m >= 1");
  EqualityBound out;
  long long b = k;
  while (binomial(b + 1, k) <= m) ++b;
  out.b = b;
  out.bound = binomial(b + n - k, n);
  out.asymptotic = static_cast<double>(out.bound) /
                   std::pow(static_cast<double>(m), static_cast<double>(n) / k);
  return out;
}

std::optional<int> vanishing_order_at(const MinorIdeal& J, const std::vector<FElem>& point) {
  if (static_cast<int>(point.size()) != J.cring.nvars())
    throw Error("vanishing_order_at: wrong point dimension");
  std::optional<int> best;
  std::vector<Polynomial> images;
  for (int i = 0; i < J.cring.nvars(); ++i)
    images.push_back(Polynomial::variable(J.cring, i) + Polynomial::constant(J.cring, point[i]));
  for (const Polynomial& g : J.gens) {
    Polynomial shifted = substitute(g, images);
    if (shifted.is_zero()) continue;
    int low = shifted.degree();
    for (const Term& t : shifted.terms()) low = std::min(low, t.mono.degree());
    if (!best || low < *best) best = low;
  }
  return best;
}

MinorDegreeStats minor_degree_stats(const MinorIdeal& J) {
  MinorDegreeStats s;
  for (const Polynomial& g : J.gens) s.max_chart_degree = std::max(s.max_chart_degree, g.degree());
  s.plucker_degree = s.max_chart_degree;
  s.degree_per_size = J.size > 0 ? static_cast<double>(s.max_chart_degree) / J.size : 0;
  return s;
}

}  // namespace furst
