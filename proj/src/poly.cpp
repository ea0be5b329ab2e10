#include "furst/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace furst {

Ring::Ring(Field field, std::vector<std::string> var_names) {
  if (var_names.empty() || var_names.size() > kMaxVars)
    throw Error("ring must have between 1 and " + std::to_string(kMaxVars) + " variables");
  auto d = std::make_shared<Data>();
  d->field = std::move(field);
  d->names = std::move(var_names);
  d_ = std::move(d);
}

Ring Ring::standard(Field field, int nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return Ring(std::move(field), std::move(names));
}

int Ring::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < d_->names.size(); ++i)
    if (d_->names[i] == name) return static_cast<int>(i);
  return -1;
}

bool Ring::compatible(const Ring& other) const {
  return d_->field.same_field(other.d_->field) && d_->names.size() == other.d_->names.size();
}

Polynomial Polynomial::constant(const Ring& r, FElem c) {
  Polynomial p(r);
  if (!r.field().is_zero(c)) p.terms_.push_back({Monomial::one(r.nvars()), c});
  return p;
}

Polynomial Polynomial::variable(const Ring& r, int i, int power) {
  if (i < 0 || i >= r.nvars()) throw Error("variable index out of range");
  Polynomial p(r);
  if (power == 0) return constant(r, r.field().one());
  p.terms_.push_back({Monomial::var(r.nvars(), i, power), r.field().one()});
  return p;
}

Polynomial Polynomial::from_terms(const Ring& r, std::vector<Term> terms) {
  for (const Term& t : terms)
    if (t.mono.nvars != r.nvars()) throw Error("from_terms: monomial arity mismatch");
  Polynomial p(r);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  const Field& F = ring_.field();
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return canonical_compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = F.add(out.back().coef, t.coef);
    } else {
      out.push_back(t);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const Term& t) { return F.is_zero(t.coef); }),
            out.end());
  terms_ = std::move(out);
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const Term& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

FElem Polynomial::coeff(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.mono == m) return t.coef;
  return FElem{0};
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!ring_.compatible(o.ring_)) throw Error("ring mismatch in +");
  const Field& F = ring_.field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = canonical_compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FElem s = F.add(terms_[i].coef, o.terms_[j].coef);
      if (!F.is_zero(s)) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Polynomial Polynomial::operator-() const {
  const Field& F = ring_.field();
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coef = F.neg(t.coef);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!ring_.compatible(o.ring_)) throw Error("ring mismatch in *");
  const Field& F = ring_.field();
  Polynomial r(ring_);
  // merge-based accumulation through a map keyed canonically
  std::map<Monomial, FElem, decltype([](const Monomial& a, const Monomial& b) {
             return canonical_compare(a, b) > 0;
           })>
      acc;
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      FElem c = F.mul(a.coef, b.coef);
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(m, c);
      } else {
        it->second = F.add(it->second, c);
      }
    }
  for (auto& [m, c] : acc)
    if (!F.is_zero(c)) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::scaled(FElem c) const {
  const Field& F = ring_.field();
  Polynomial r(ring_);
  if (F.is_zero(c)) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coef = F.mul(t.coef, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, FElem c) const {
  const Field& F = ring_.field();
  Polynomial r(ring_);
  if (F.is_zero(c)) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) {
    t.mono = t.mono * m;
    t.coef = F.mul(t.coef, c);
  }
  return r;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  FElem lc = leading_term(order).coef;
  if (lc == ring_.field().one()) return *this;
  return scaled(ring_.field().inv(lc));
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const Term& t : terms_)
    if (order.less(best->mono, t.mono)) best = &t;
  return *best;
}

FElem Polynomial::eval(const std::vector<FElem>& point) const {
  const Field& F = ring_.field();
  if (static_cast<int>(point.size()) != ring_.nvars()) throw Error("eval: wrong point dimension");
  FElem acc = F.zero();
  for (const Term& t : terms_) {
    FElem v = t.coef;
    for (int i = 0; i < ring_.nvars(); ++i)
      if (t.mono.exp[i]) v = F.mul(v, F.pow(point[i], t.mono.exp[i]));
    acc = F.add(acc, v);
  }
  return acc;
}

std::string Polynomial::to_string() const { return poly_print(*this); }

Polynomial top_degree_form(const Polynomial& f) {
  if (f.is_zero()) throw Error("top_degree_form of zero polynomial");
  int d = f.degree();
  std::vector<Term> keep;
  for (const Term& t : f.terms())
    if (t.mono.degree() == d) keep.push_back(t);
  return Polynomial::from_terms(f.ring(), std::move(keep));
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  if (static_cast<int>(images.size()) != f.ring().nvars())
    throw Error("substitute: need one image per variable");
  for (const Polynomial& g : images)
    if (!g.ring().field().same_field(f.ring().field()))
      throw Error("substitute: image ring over a different field");
  const Ring& target = images.empty() ? f.ring() : images[0].ring();
  for (const Polynomial& g : images)
    if (!g.ring().compatible(target)) throw Error("substitute: images in mismatched rings");
  Polynomial acc = Polynomial::zero(target);
  for (const Term& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coef);
    for (int i = 0; i < f.ring().nvars(); ++i)
      for (int k = 0; k < t.mono.exp[i]; ++k) prod = prod * images[i];
    acc = acc + prod;
  }
  return acc;
}

namespace {

std::string mono_to_string(const Monomial& m, const Ring& r) {
  std::string out;
  for (int i = 0; i < m.nvars; ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += "*";
    out += r.names()[i];
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out;
}

std::string coef_to_string(FElem c, const Field& F) {
  std::string s = F.to_string(c);
  if (s.find('+') != std::string::npos || s.find('-') != std::string::npos ||
      (F.e() > 1 && s.find('*') != std::string::npos))
    return "(" + s + ")";
  return s;
}

struct PolyParser {
  const Ring& ring;
  const std::string& s;
  std::size_t i = 0;

  const Field& F() const { return ring.field(); }
  void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
  bool peek(char c) { skip(); return i < s.size() && s[i] == c; }
  bool eat(char c) { if (peek(c)) { ++i; return true; } return false; }

  Polynomial parse_expr() {
    Polynomial acc = eat('-') ? -parse_term() : parse_term();
    for (;;) {
      if (eat('+')) acc = acc + parse_term();
      else if (eat('-')) acc = acc - parse_term();
      else return acc;
    }
  }
  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    for (;;) {
      skip();
      if (eat('*')) { acc = acc * parse_factor(); continue; }
      if (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '(' || s[i] == '_')) {
        acc = acc * parse_factor();
        continue;
      }
      return acc;
    }
  }
  Polynomial power(Polynomial base) {
    if (!eat('^')) return base;
    skip();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected exponent", i);
    long n = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) n = n * 10 + (s[i++] - '0');
    Polynomial acc = Polynomial::constant(ring, F().one());
    for (long k = 0; k < n; ++k) acc = acc * base;
    return acc;
  }
  Polynomial parse_factor() {
    skip();
    if (i >= s.size()) throw ParseError("unexpected end of input", i);
    if (eat('(')) {
      Polynomial inner = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", i);
      return power(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      long long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
      return power(Polynomial::constant(ring, F().from_int(v)));
    }
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    if (i == start) throw ParseError("unexpected character", i);
    std::string name = s.substr(start, i - start);
    int vi = ring.var_index(name);
    if (vi >= 0) return power(Polynomial::variable(ring, vi));
    if (F().e() > 1 && name == F().generator_name())
      return power(Polynomial::constant(ring, F().generator()));
    throw ParseError("unknown variable '" + name + "'", start);
  }
};

}  // namespace

Polynomial poly_parse(const std::string& text, const Ring& ring) {
  PolyParser p{ring, text};
  Polynomial r = p.parse_expr();
  p.skip();
  if (p.i != text.size()) throw ParseError("trailing characters", p.i);
  return r;
}

std::string poly_print(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Field& F = f.ring().field();
  std::string out;
  for (const Term& t : f.terms()) {
    std::string c = coef_to_string(t.coef, F);
    std::string m = mono_to_string(t.mono, f.ring());
    if (!out.empty()) out += "+";
    if (m.empty()) out += c;
    else if (c == "1") out += m;
    else out += c + "*" + m;
  }
  return out;
}

}  // namespace furst
