#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "furst/field.hpp"
#include "furst/monomial.hpp"

namespace furst {

/// Polynomial ring k[x_1..x_n] over a finite field. Immutable handle.
class Ring {
 public:
  Ring() = default;
  Ring(Field field, std::vector<std::string> var_names);
  /// Variables named x1..xn.
  static Ring standard(Field field, int nvars);

  const Field& field() const { return d_->field; }
  int nvars() const { return static_cast<int>(d_->names.size()); }
  const std::vector<std::string>& names() const { return d_->names; }
  int var_index(const std::string& name) const;  // -1 if absent

  bool compatible(const Ring& other) const;  // same field and nvars
  bool valid() const { return d_ != nullptr; }

 private:
  struct Data {
    Field field;
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> d_;
};

struct Term {
  Monomial mono;
  FElem coef;
};

/// Sparse multivariate polynomial. Terms are kept in descending canonical
/// order with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  static Polynomial zero(const Ring& r) { return Polynomial(r); }
  static Polynomial constant(const Ring& r, FElem c);
  static Polynomial variable(const Ring& r, int i, int power = 1);
  static Polynomial from_terms(const Ring& r, std::vector<Term> terms);  // normalizes

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial (the distinguished sentinel).
  int degree() const;
  bool is_homogeneous() const;
  bool is_monomial_poly() const { return terms_.size() == 1; }

  FElem coeff(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(FElem c) const;
  Polynomial times_term(const Monomial& m, FElem c) const;
  /// Leading coefficient made 1 (under any order: scales the whole poly).
  Polynomial monic(const MonomialOrder& order) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Largest term under the given order; polynomial must be nonzero.
  const Term& leading_term(const MonomialOrder& order) const;

  FElem eval(const std::vector<FElem>& point) const;

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
  void normalize();
};

/// Homogeneous component of maximal total degree. Errors on zero input.
Polynomial top_degree_form(const Polynomial& f);

/// Ring homomorphism x_i -> images[i]; images live in a common (possibly
/// different) ring.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

/// Parse per the grammar: variables by name, integer coefficients, '^'
/// powers, optional '*', extension coefficients like "(g+1)*x1^2".
Polynomial poly_parse(const std::string& text, const Ring& ring);

std::string poly_print(const Polynomial& f);

}  // namespace furst
