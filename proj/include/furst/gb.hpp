#pragma once

#include <optional>
#include <vector>

#include "furst/poly.hpp"

namespace furst {

struct Ideal {
  Ring ring;
  std::vector<Polynomial> gens;

  Ideal() = default;
  Ideal(Ring r, std::vector<Polynomial> g);
};

struct GBLimits {
  long max_pair_reductions = 1'000'000;
};

/// Reduced Groebner basis: monic, auto-reduced, elements sorted by
/// ascending leading monomial. Unique for (ideal, order).
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elems;

  const Monomial& leading_monomial(int i) const { return elems[i].leading_term(order).mono; }
};

/// Buchberger with normal pair selection (smallest lcm degree, then order,
/// then input index). Deterministic; throws CapError past the step limit.
GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order, const GBLimits& limits = {});

/// Remainder of full division by the basis: no term of the result is
/// divisible by any leading monomial.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f);

/// Dimension of the quotient ring as a vector space, or nullopt when
/// infinite (some variable has no pure power among the leading monomials).
std::optional<long> quotient_dim_of(const GroebnerBasis& gb);

/// The monomials outside the leading-term ideal, ascending under the basis
/// order. Throws when the quotient is infinite-dimensional.
std::vector<Monomial> standard_monomials_of(const GroebnerBasis& gb);

Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// Elimination method: intersect (t*I + (1-t)*J) with the base ring using a
/// lex order with the auxiliary variable most significant.
Ideal ideal_intersection(const Ideal& a, const Ideal& b, const GBLimits& limits = {});

/// Vanishing ideal of a finite set of distinct points (Buchberger-Moeller).
/// Returns the reduced Groebner basis of I(P) for the given order.
GroebnerBasis vanishing_ideal(const std::vector<std::vector<FElem>>& points, const Ring& ring,
                              const MonomialOrder& order);

/// A 0-dimensional-candidate subscheme Spec k[x]/I with cached grevlex
/// basis, quotient dimension and standard monomials. Immutable value.
class Scheme {
 public:
  explicit Scheme(Ideal ideal, const GBLimits& limits = {});

  const Ideal& ideal() const { return d_->ideal; }
  const Ring& ring() const { return d_->ideal.ring; }
  const GroebnerBasis& basis() const { return d_->gb; }
  /// |S|, or nullopt when the quotient is infinite-dimensional.
  std::optional<long> quotient_dim() const { return d_->dim; }
  /// |S| for finite schemes; throws otherwise.
  long degree() const;
  const std::vector<Monomial>& standard_monomials() const;
  bool is_homogeneous() const { return d_->homogeneous; }

 private:
  struct Data {
    Ideal ideal;
    GroebnerBasis gb;
    std::optional<long> dim;
    std::vector<Monomial> std_monos;
    bool homogeneous = false;
  };
  std::shared_ptr<const Data> d_;
};

}  // namespace furst
