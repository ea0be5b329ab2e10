#include "furst/geom.hpp"

#include <algorithm>

namespace furst {

Direction direction_from_span(const FMatrix& rows) {
  FMatrix m = rows;
  std::vector<int> pivots = m.rref();
  if (static_cast<int>(pivots.size()) != rows.rows())
    throw Error("direction_from_span: matrix does not have full row rank");
  Direction d;
  d.basis = std::move(m);
  d.pivots = std::move(pivots);
  return d;
}

long long gaussian_binomial(int n, int k, long long q) {
  if (k < 0 || k > n) return 0;
  // prod_{i=0}^{k-1} (q^(n-i) - 1) / (q^(k-i) - 1)
  long long num = 1, den = 1;
  auto qpow = [&](int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
  };
  for (int i = 0; i < k; ++i) {
    num *= qpow(n - i) - 1;
    den *= qpow(k - i) - 1;
  }
  return num / den;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k == 0) return {std::vector<int>{}};
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Direction> enumerate_directions(int n, int k, const Field& F) {
  if (k < 1 || k >= n) throw Error("enumerate_directions: need 1 <= k < n");
  long long total = gaussian_binomial(n, k, static_cast<long long>(F.q()));
  if (total > 5'000'000) throw CapError("enumerate_directions: Grassmannian too large");
  std::vector<Direction> out;
  out.reserve(total);
  auto elements = F.elements();
  for (const auto& piv : k_subsets(n, k)) {
    // free positions: (row i, col j) with j > piv[i] and j not a pivot col
    std::vector<std::pair<int, int>> free_pos;
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    for (int i = 0; i < k; ++i)
      for (int j = piv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);
    std::vector<std::size_t> odo(free_pos.size(), 0);
    for (;;) {
      FMatrix m(F, k, n);
      for (int i = 0; i < k; ++i) m.at(i, piv[i]) = F.one();
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        m.at(free_pos[t].first, free_pos[t].second) = elements[odo[t]];
      Direction d;
      d.basis = std::move(m);
      d.pivots = piv;
      out.push_back(std::move(d));
      std::size_t v = 0;
      while (v < odo.size()) {
        if (odo[v] + 1 < elements.size()) { ++odo[v]; break; }
        odo[v] = 0;
        ++v;
      }
      if (v == odo.size()) break;
    }
  }
  return out;
}

AffinePlane make_affine_plane(const Direction& dir, std::vector<FElem> any_point, const Field& F) {
  if (static_cast<int>(any_point.size()) != dir.n()) throw Error("make_affine_plane: bad point");
  // zero out the pivot coordinates by subtracting row multiples
  std::vector<FElem> off = std::move(any_point);
  for (int i = 0; i < dir.k(); ++i) {
    FElem c = off[dir.pivots[i]];
    if (F.is_zero(c)) continue;
    for (int j = 0; j < dir.n(); ++j) off[j] = F.sub(off[j], F.mul(c, dir.basis.at(i, j)));
  }
  return AffinePlane{dir, std::move(off)};
}

AffinePlane through_origin(const Direction& dir) {
  return AffinePlane{dir, std::vector<FElem>(dir.n(), FElem{0})};
}

std::vector<AffinePlane> enumerate_parallel(const Direction& dir, const Field& F) {
  int n = dir.n(), k = dir.k();
  std::vector<int> free_cols;
  std::vector<bool> is_piv(n, false);
  for (int p : dir.pivots) is_piv[p] = true;
  for (int j = 0; j < n; ++j)
    if (!is_piv[j]) free_cols.push_back(j);
  auto elements = F.elements();
  std::vector<AffinePlane> out;
  out.reserve(static_cast<std::size_t>(std::pow(double(F.q()), n - k)));
  std::vector<std::size_t> odo(free_cols.size(), 0);
  for (;;) {
    std::vector<FElem> off(n, FElem{0});
    for (std::size_t t = 0; t < free_cols.size(); ++t) off[free_cols[t]] = elements[odo[t]];
    out.push_back(AffinePlane{dir, std::move(off)});
    std::size_t v = 0;
    while (v < odo.size()) {
      if (odo[v] + 1 < elements.size()) { ++odo[v]; break; }
      odo[v] = 0;
      ++v;
    }
    if (v == odo.size()) break;
  }
  return out;
}

std::vector<std::vector<FElem>> plane_points(const AffinePlane& V, const Field& F) {
  int k = V.dir.k(), n = V.dir.n();
  auto elements = F.elements();
  std::vector<std::vector<FElem>> out;
  std::vector<std::size_t> odo(k, 0);
  for (;;) {
    std::vector<FElem> pt = V.offset;
    for (int i = 0; i < k; ++i) {
      FElem t = elements[odo[i]];
      if (!F.is_zero(t))
        for (int j = 0; j < n; ++j) pt[j] = F.add(pt[j], F.mul(t, V.dir.basis.at(i, j)));
    }
    out.push_back(std::move(pt));
    std::size_t v = 0;
    while (v < odo.size()) {
      if (odo[v] + 1 < elements.size()) { ++odo[v]; break; }
      odo[v] = 0;
      ++v;
    }
    if (v == odo.size()) break;
  }
  return out;
}

bool plane_contains(const AffinePlane& V, const std::vector<FElem>& pt, const Field& F) {
  // reduce pt - offset against the RREF basis
  std::vector<FElem> r(pt.size());
  for (std::size_t j = 0; j < pt.size(); ++j) r[j] = F.sub(pt[j], V.offset[j]);
  for (int i = 0; i < V.dir.k(); ++i) {
    FElem c = r[V.dir.pivots[i]];
    if (F.is_zero(c)) continue;
    for (int j = 0; j < V.dir.n(); ++j) r[j] = F.sub(r[j], F.mul(c, V.dir.basis.at(i, j)));
  }
  return std::all_of(r.begin(), r.end(), [&](FElem x) { return F.is_zero(x); });
}

PluckerVector plucker(const Direction& dir, const Field& F) {
  int n = dir.n(), k = dir.k();
  PluckerVector pv;
  for (const auto& cols : k_subsets(n, k)) {
    // k x k determinant by Gaussian elimination
    FMatrix m(F, k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m.at(i, j) = dir.basis.at(i, cols[j]);
    FElem det = F.one();
    bool zero = false;
    for (int c = 0; c < k && !zero; ++c) {
      int pr = -1;
      for (int i = c; i < k; ++i)
        if (!F.is_zero(m.at(i, c))) { pr = i; break; }
      if (pr < 0) { zero = true; break; }
      if (pr != c) {
        for (int j = 0; j < k; ++j) std::swap(m.at(pr, j), m.at(c, j));
        det = F.neg(det);
      }
      det = F.mul(det, m.at(c, c));
      FElem pinv = F.inv(m.at(c, c));
      for (int i = c + 1; i < k; ++i) {
        FElem f = F.mul(m.at(i, c), pinv);
        if (F.is_zero(f)) continue;
        for (int j = c; j < k; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(c, j)));
      }
    }
    pv.coords.push_back(zero ? F.zero() : det);
  }
  // normalize first nonzero coordinate to 1
  for (const FElem& c : pv.coords) {
    if (!F.is_zero(c)) {
      FElem s = F.inv(c);
      for (FElem& x : pv.coords) x = F.mul(x, s);
      break;
    }
  }
  return pv;
}

std::string plucker_to_string(const PluckerVector& p, int n, int k, const Field& F) {
  auto subsets = k_subsets(n, k);
  std::string out;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (F.is_zero(p.coords[i])) continue;
    if (!out.empty()) out += " ";
    std::string label;
    for (int c : subsets[i]) label += std::to_string(c + 1);
    out += "p" + label + "=" + F.to_string(p.coords[i]);
  }
  return out.empty() ? "0" : out;
}

Chart Chart::make(int n, int k, std::vector<int> cut_vars) {
  std::sort(cut_vars.begin(), cut_vars.end());
  if (static_cast<int>(cut_vars.size()) != n - k)
    throw Error("chart: need n-k cutting variables, got " + std::to_string(cut_vars.size()));
  for (std::size_t i = 0; i < cut_vars.size(); ++i) {
    if (cut_vars[i] < 0 || cut_vars[i] >= n) throw Error("chart: variable out of range");
    if (i > 0 && cut_vars[i] == cut_vars[i - 1]) throw Error("chart: duplicate variable");
  }
  Chart ch;
  ch.n = n;
  ch.k = k;
  ch.cut_set = std::move(cut_vars);
  std::vector<bool> in_cut(n, false);
  for (int a : ch.cut_set) in_cut[a] = true;
  for (int j = 0; j < n; ++j)
    if (!in_cut[j]) ch.free_set.push_back(j);
  return ch;
}

std::string Chart::coord_name(int a, int b) const {
  return "c" + std::to_string(a + 1) + std::to_string(b + 1);
}

Ring Chart::coordinate_ring(const Field& F) const {
  std::vector<std::string> names;
  for (int a : cut_set)
    for (int b : free_set) names.push_back(coord_name(a, b));
  return Ring(F, names);
}

int Chart::coord_index(int a, int b) const {
  int ai = -1, bi = -1;
  for (std::size_t i = 0; i < cut_set.size(); ++i)
    if (cut_set[i] == a) ai = static_cast<int>(i);
  for (std::size_t i = 0; i < free_set.size(); ++i)
    if (free_set[i] == b) bi = static_cast<int>(i);
  if (ai < 0 || bi < 0) throw Error("chart: bad coordinate pair");
  return ai * k + bi;
}

bool chart_contains(const Chart& chart, const Direction& dir, const Field& F) {
  // invertibility of the basis minor on the free columns
  FMatrix m(F, chart.k, chart.k);
  for (int i = 0; i < chart.k; ++i)
    for (int j = 0; j < chart.k; ++j) m.at(i, j) = dir.basis.at(i, chart.free_set[j]);
  return m.rank() == chart.k;
}

std::vector<FElem> chart_coords(const Chart& chart, const Direction& dir, const Field& F) {
  if (!chart_contains(chart, dir, F)) throw Error("direction outside chart");
  const int k = chart.k, nk = chart.n - chart.k;
  // Solve for basis B' = M^{-1} B with identity on the free columns:
  // augment [M | B] and row-reduce, where M = basis restricted to free cols.
  FMatrix aug(F, k, k + chart.n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) aug.at(i, j) = dir.basis.at(i, chart.free_set[j]);
    for (int j = 0; j < chart.n; ++j) aug.at(i, k + j) = dir.basis.at(i, j);
  }
  aug.rref();
  // Row r of the reduced right block parametrizes x = sum_r t_r * B'_r with
  // x_{free[r]} = t_r; then x_a = sum_r B'_{r,a} x_{free[r]}, so the cutting
  // form is x_a - sum_b B'_{idx(b),a} x_b and c_{a,b} = -B'_{idx(b),a}.
  std::vector<FElem> coords(static_cast<std::size_t>(nk) * k);
  for (int ai = 0; ai < nk; ++ai) {
    int a = chart.cut_set[ai];
    for (int bi = 0; bi < k; ++bi)
      coords[static_cast<std::size_t>(ai) * k + bi] = F.neg(aug.at(bi, k + a));
  }
  return coords;
}

Direction direction_from_chart(const Chart& chart, const std::vector<FElem>& coords, const Field& F) {
  if (static_cast<int>(coords.size()) != (chart.n - chart.k) * chart.k)
    throw Error("direction_from_chart: wrong coordinate count");
  // basis rows indexed by free variables: x_{free[r]} = 1, others 0 among
  // free; x_a = -c_{a, free[r]}.
  FMatrix m(F, chart.k, chart.n);
  for (int r = 0; r < chart.k; ++r) {
    m.at(r, chart.free_set[r]) = F.one();
    for (std::size_t ai = 0; ai < chart.cut_set.size(); ++ai) {
      int a = chart.cut_set[ai];
      m.at(r, a) = F.neg(coords[ai * chart.k + r]);
    }
  }
  return direction_from_span(m);
}

std::vector<Polynomial> plane_linear_forms(const AffinePlane& V, const Ring& xring,
                                           const std::optional<Chart>& chart) {
  const Field& F = xring.field();
  int n = V.dir.n(), k = V.dir.k();
  if (xring.nvars() != n) throw Error("plane_linear_forms: ring arity mismatch");
  std::vector<Polynomial> forms;
  if (!chart) {
    // From RREF: for each non-pivot column a, x_a - sum_i B[i][a] x_{piv[i]},
    // shifted to vanish on the offset.
    std::vector<bool> is_piv(n, false);
    for (int p : V.dir.pivots) is_piv[p] = true;
    for (int a = 0; a < n; ++a) {
      if (is_piv[a]) continue;
      Polynomial f = Polynomial::variable(xring, a);
      for (int i = 0; i < k; ++i)
        f = f - Polynomial::variable(xring, V.dir.pivots[i]).scaled(V.dir.basis.at(i, a));
      FElem shift = f.eval(V.offset);
      f = f - Polynomial::constant(xring, shift);
      forms.push_back(std::move(f));
    }
  } else {
    std::vector<FElem> coords = chart_coords(*chart, V.dir, F);
    for (std::size_t ai = 0; ai < chart->cut_set.size(); ++ai) {
      int a = chart->cut_set[ai];
      Polynomial f = Polynomial::variable(xring, a);
      for (int bi = 0; bi < chart->k; ++bi)
        f = f + Polynomial::variable(xring, chart->free_set[bi]).scaled(coords[ai * chart->k + bi]);
      FElem shift = f.eval(V.offset);
      f = f - Polynomial::constant(xring, shift);
      forms.push_back(std::move(f));
    }
  }
  return forms;
}

std::vector<Polynomial> plane_parametrization(const AffinePlane& V, const Ring& param_ring) {
  int n = V.dir.n(), k = V.dir.k();
  if (param_ring.nvars() != k) throw Error("plane_parametrization: need k parameters");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (int j = 0; j < n; ++j) {
    Polynomial f = Polynomial::constant(param_ring, V.offset[j]);
    for (int i = 0; i < k; ++i)
      f = f + Polynomial::variable(param_ring, i).scaled(V.dir.basis.at(i, j));
    images.push_back(std::move(f));
  }
  return images;
}

}  // namespace furst
