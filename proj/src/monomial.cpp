#include "furst/monomial.hpp"

#include <numeric>

namespace furst {

int canonical_compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < a.nvars; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

MonomialOrder MonomialOrder::grevlex(int n) {
  return with_significance(OrderKind::Grevlex, [n] {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = n - 1 - i;
    return s;
  }());
}

MonomialOrder MonomialOrder::lex(int n) {
  return with_significance(OrderKind::Lex, [n] {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = n - 1 - i;
    return s;
  }());
}

MonomialOrder MonomialOrder::with_significance(OrderKind kind, std::vector<int> sig) {
  // must be a permutation of 0..n-1
  std::vector<bool> seen(sig.size(), false);
  for (int v : sig) {
    if (v < 0 || v >= static_cast<int>(sig.size()) || seen[v])
      throw Error("monomial order significance must be a permutation");
    seen[v] = true;
  }
  MonomialOrder o;
  o.kind = kind;
  o.significance = std::move(sig);
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind == OrderKind::Grevlex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // scan from least significant variable; smaller exponent there wins
    for (int i = static_cast<int>(significance.size()) - 1; i >= 0; --i) {
      int v = significance[i];
      if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v] ? -1 : 1;
    }
    return 0;
  }
  // lex
  for (int v : significance) {
    if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? -1 : 1;
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  std::string s = kind == OrderKind::Grevlex ? "grevlex[" : "lex[";
  for (std::size_t i = 0; i < significance.size(); ++i) {
    if (i) s += ">";
    s += "x" + std::to_string(significance[i] + 1);
  }
  return s + "]";
}

}  // namespace furst
