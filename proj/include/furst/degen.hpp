#pragma once

#include <optional>
#include <vector>

#include "furst/borel.hpp"
#include "furst/gb.hpp"
#include "furst/geom.hpp"

namespace furst {

/// Dilation degeneration: the flat limit of t*S as t -> 0, generated by the
/// top-degree forms of a degree-compatible Groebner basis of I_S.
struct DilationResult {
  Scheme original;
  Scheme degenerate;  // homogeneous, supported at the origin
  /// (degree of basis element, degree of its top form) per generator; the
  /// two agree when degree compatibility held.
  std::vector<std::pair<int, int>> degree_certificate;
};

DilationResult dilate(const Scheme& S, const GBLimits& limits = {});

struct CapdilateRow {
  std::size_t direction_index = 0;
  std::size_t plane_index = 0;
  long m = 0;   // |S cap V|
  long m0 = 0;  // |S_0 cap V_0|
  bool ok = true;
};

struct CapdilateReport {
  std::vector<CapdilateRow> rows;
  std::vector<CapdilateRow> violations;  // empty unless the implementation is wrong
  bool ok() const { return violations.empty(); }
};

/// For every affine k-plane V: check |S_0 cap V_0| >= |S cap V| where V_0 is
/// the parallel plane through the origin.
CapdilateReport verify_capdilate(const Scheme& S, int k, const GBLimits& limits = {});

struct GinResult {
  Scheme input;
  Scheme gin;  // monomial scheme over the base ring
  int trials_used = 0;
  int field_extension_degree = 1;
};

/// Failure of the gin sampling protocol, carrying what was seen.
struct GinFailure : Error {
  enum class Kind { NoStabilization, NotBorelFixed } kind;
  std::vector<std::string> distinct_initial_ideals;
  GinFailure(Kind k, std::string msg, std::vector<std::string> seen)
      : Error(std::move(msg)), kind(k), distinct_initial_ideals(std::move(seen)) {}
};

/// Generic initial ideal over a finite field: sample invertible
/// upper-triangular coordinate changes over an extension GF(q^e) with
/// q^e >= 64, take initial ideals, and accept when two samples agree and the
/// result is Borel-fixed. Order must have the priority x_1 < ... < x_n.
GinResult gin(const Scheme& S, const MonomialOrder& order, int trials, std::uint64_t seed,
              const GBLimits& limits = {});

struct BorelCheckResult {
  bool fixed = true;
  std::optional<BorelViolation> witness;
};

/// Borel-fixedness of a monomial set given as the standard monomials.
BorelCheckResult is_borel_fixed(const std::vector<Monomial>& standard_set, int nvars);
/// Borel-fixedness of a monomial ideal (via its standard monomial set).
/// Errors on non-monomial input.
BorelCheckResult is_borel_fixed(const Scheme& monomial_scheme);

}  // namespace furst
