#include "furst/field.hpp"

#include <algorithm>
#include <cctype>

namespace furst {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over GF(p), low degree first

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// f mod g over GF(p); g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  int dg = poly_deg(g);
  for (int i = poly_deg(f); i >= dg && i >= 0; i = poly_deg(f)) {
    std::uint64_t c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      std::uint64_t sub = c * g[j] % p;
      std::uint64_t idx = i - dg + j;
      f[idx] = static_cast<std::uint32_t>((f[idx] + p - sub) % p);
    }
  }
  f.resize(std::max(poly_deg(f) + 1, 1));
  return f;
}

bool poly_divides(const Poly& d, const Poly& f, std::uint64_t p) {
  return poly_deg(poly_mod(f, d, p)) < 0;
}

// Exhaustive trial division by all monic polynomials of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, std::uint64_t p) {
  int df = poly_deg(f);
  if (df < 1) return false;
  if (f[0] == 0) return df == 1;  // divisible by x
  for (int dd = 1; dd <= df / 2; ++dd) {
    std::uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly d(dd + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < dd; ++i) { d[i] = static_cast<std::uint32_t>(c % p); c /= p; }
      d[dd] = 1;
      if (poly_divides(d, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

struct Field::Data {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // c_0..c_e, monic; empty when e == 1
  std::string gen_name = "g";
  // Lookup tables for small fields; empty otherwise.
  std::vector<std::uint32_t> mul_table;  // q*q
  std::vector<std::uint32_t> inv_table;  // q

  std::vector<std::uint32_t> decode(std::uint32_t v) const {
    std::vector<std::uint32_t> c(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) { c[i] = v % p; v /= p; }
    return c;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& c) const {
    std::uint64_t v = 0;
    for (std::uint32_t i = e; i-- > 0;) v = v * p + (i < c.size() ? c[i] % p : 0);
    return static_cast<std::uint32_t>(v);
  }

  std::uint32_t raw_add(std::uint32_t a, std::uint32_t b) const {
    if (e == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + b) % p);
    auto ca = decode(a), cb = decode(b);
    for (std::uint32_t i = 0; i < e; ++i) ca[i] = (ca[i] + cb[i]) % p;
    return encode(ca);
  }
  std::uint32_t raw_neg(std::uint32_t a) const {
    if (e == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p - a);
    auto c = decode(a);
    for (auto& x : c) x = x == 0 ? 0 : p - x;
    return encode(c);
  }
  std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_table.empty()) return mul_table[static_cast<std::size_t>(a) * q + b];
    return raw_mul_nocache(a, b);
  }
  std::uint32_t raw_mul_nocache(std::uint32_t a, std::uint32_t b) const {
    if (e == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    auto ca = decode(a), cb = decode(b);
    Poly prod(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      if (ca[i] == 0) continue;
      for (std::uint32_t j = 0; j < e; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p);
    }
    Poly red = poly_mod(std::move(prod), modulus, p);
    red.resize(e, 0);
    return encode(red);
  }
  std::uint32_t raw_pow(std::uint32_t a, std::uint64_t n) const {
    std::uint32_t r = 1;
    while (n) {
      if (n & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      n >>= 1;
    }
    return r;
  }
  std::uint32_t raw_inv(std::uint32_t a) const {
    if (a == 0) throw Error("division by zero in GF(" + std::to_string(q) + ")");
    if (!inv_table.empty()) return inv_table[a];
    if (e == 1) {
      // extended Euclid mod p
      long long t = 0, newt = 1, r = static_cast<long long>(p), newr = a;
      while (newr != 0) {
        long long quo = r / newr;
        std::swap(t -= quo * newt, newt);
        std::swap(r -= quo * newr, newr);
      }
      if (t < 0) t += p;
      return static_cast<std::uint32_t>(t);
    }
    return raw_pow(a, q - 2);  // Fermat
  }
};

Field Field::create(std::uint32_t p, std::uint32_t e, std::uint64_t seed, std::uint64_t size_cap) {
  if (!is_prime_u64(p)) throw Error("field_create: " + std::to_string(p) + " is not prime");
  if (e < 1) throw Error("field_create: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > size_cap) throw Error("field_create: p^e exceeds size cap " + std::to_string(size_cap));
  }
  auto d = std::make_shared<Data>();
  d->p = p;
  d->e = e;
  d->q = q;
  if (e > 1) {
    // Cyclic scan over monic degree-e polynomials by base-p encoding of the
    // low coefficients, starting at the seed offset.
    const std::uint64_t space = q;
    std::uint64_t start = seed % space;
    bool found = false;
    for (std::uint64_t step = 0; step < space; ++step) {
      std::uint64_t code = (start + step) % space;
      Poly f(e + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < e; ++i) { f[i] = static_cast<std::uint32_t>(c % p); c /= p; }
      f[e] = 1;
      if (poly_irreducible(f, p)) {
        d->modulus = f;
        found = true;
        break;
      }
    }
    if (!found) throw Error("field_create: no irreducible modulus found");  // cannot happen
  }
  if (q <= 512) {
    d->inv_table.assign(q, 0);
    d->mul_table.assign(q * q, 0);
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = a; b < q; ++b) {
        std::uint32_t m = d->raw_mul_nocache(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
        d->mul_table[a * q + b] = m;
        d->mul_table[b * q + a] = m;
        if (m == 1) { d->inv_table[a] = static_cast<std::uint32_t>(b); d->inv_table[b] = static_cast<std::uint32_t>(a); }
      }
  }
  Field F;
  F.d_ = std::move(d);
  return F;
}

std::uint32_t Field::p() const { return d_->p; }
std::uint32_t Field::e() const { return d_->e; }
std::uint64_t Field::q() const { return d_->q; }
const std::string& Field::generator_name() const { return d_->gen_name; }
const std::vector<std::uint32_t>& Field::modulus() const { return d_->modulus; }

FElem Field::generator() const {
  if (d_->e == 1) throw Error("prime field has no extension generator");
  return FElem{d_->p};
}

FElem Field::from_int(long long x) const {
  long long r = x % static_cast<long long>(d_->p);
  if (r < 0) r += d_->p;
  return FElem{static_cast<std::uint32_t>(r)};
}

FElem Field::add(FElem a, FElem b) const { return FElem{d_->raw_add(a.v, b.v)}; }
FElem Field::sub(FElem a, FElem b) const { return FElem{d_->raw_add(a.v, d_->raw_neg(b.v))}; }
FElem Field::neg(FElem a) const { return FElem{d_->raw_neg(a.v)}; }
FElem Field::mul(FElem a, FElem b) const { return FElem{d_->raw_mul(a.v, b.v)}; }
FElem Field::inv(FElem a) const { return FElem{d_->raw_inv(a.v)}; }
FElem Field::pow(FElem a, std::uint64_t n) const { return FElem{d_->raw_pow(a.v, n)}; }

std::vector<FElem> Field::elements() const {
  std::vector<FElem> out;
  out.reserve(d_->q);
  for (std::uint64_t v = 0; v < d_->q; ++v) out.push_back(FElem{static_cast<std::uint32_t>(v)});
  return out;
}

std::vector<std::uint32_t> Field::coeffs(FElem a) const { return d_->decode(a.v); }
FElem Field::from_coeffs(const std::vector<std::uint32_t>& c) const { return FElem{d_->encode(c)}; }

std::string Field::to_string(FElem a) const {
  if (d_->e == 1) return std::to_string(a.v);
  auto c = d_->decode(a.v);
  std::string out;
  for (int i = static_cast<int>(d_->e) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += d_->gen_name;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {
// Minimal expression parser over a field: ints, generator symbol, + - * ^ ( ).
struct ElemParser {
  const Field& F;
  const std::string& s;
  std::size_t i = 0;

  void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
  bool peek(char c) { skip(); return i < s.size() && s[i] == c; }
  bool eat(char c) { if (peek(c)) { ++i; return true; } return false; }

  FElem parse_expr() {
    FElem acc = eat('-') ? F.neg(parse_term()) : parse_term();
    for (;;) {
      if (eat('+')) acc = F.add(acc, parse_term());
      else if (eat('-')) acc = F.sub(acc, parse_term());
      else return acc;
    }
  }
  FElem parse_term() {
    FElem acc = parse_factor();
    for (;;) {
      skip();
      if (eat('*')) { acc = F.mul(acc, parse_factor()); continue; }
      if (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '(')) {
        acc = F.mul(acc, parse_factor());
        continue;
      }
      return acc;
    }
  }
  FElem parse_factor() {
    skip();
    FElem base;
    if (eat('(')) {
      base = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", i);
    } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      long long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
      base = F.from_int(v);
    } else {
      std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string name = s.substr(start, i - start);
      if (F.e() > 1 && name == F.generator_name()) base = F.generator();
      else throw ParseError("unknown symbol '" + name + "'", start);
    }
    if (eat('^')) {
      skip();
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("expected exponent", i);
      std::uint64_t n = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) n = n * 10 + (s[i++] - '0');
      base = F.pow(base, n);
    }
    return base;
  }
};
}  // namespace

FElem Field::parse(const std::string& text) const {
  ElemParser p{*this, text};
  FElem r = p.parse_expr();
  p.skip();
  if (p.i != text.size()) throw ParseError("trailing characters in field element", p.i);
  return r;
}

bool Field::same_field(const Field& other) const {
  return d_->p == other.d_->p && d_->e == other.d_->e && d_->modulus == other.d_->modulus;
}

FieldEmbedding::FieldEmbedding(const Field& src, const Field& dst) : src_(src), dst_(dst) {
  if (src.p() != dst.p() || dst.e() % src.e() != 0)
    throw Error("no embedding: target must be an extension of the source");
  if (src.e() == 1) {
    gen_image_ = dst.zero();  // unused: prime-field values map by encoding
    return;
  }
  // Root of the source modulus in the target, smallest encoding first.
  const auto& mod = src.modulus();
  for (auto x : dst.elements()) {
    FElem acc = dst.zero();
    for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i)
      acc = dst.add(dst.mul(acc, x), dst.from_int(mod[i]));
    if (dst.is_zero(acc)) { gen_image_ = x; return; }
  }
  throw Error("embedding: no root of source modulus in target (degree mismatch)");
}

FElem FieldEmbedding::map(FElem a) const {
  if (src_.e() == 1) return FElem{a.v};  // residues embed as constants
  auto c = src_.coeffs(a);
  FElem acc = dst_.zero();
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    acc = dst_.add(dst_.mul(acc, gen_image_), dst_.from_int(c[i]));
  return acc;
}

}  // namespace furst
