#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "furst/common.hpp"

namespace furst {

/// Element of a finite field, stored as the base-p encoding of its
/// polynomial representation c_0 + c_1 g + ... + c_{e-1} g^{e-1}.
/// Arithmetic goes through the owning Field.
struct FElem {
  std::uint32_t v = 0;
  friend bool operator==(FElem a, FElem b) { return a.v == b.v; }
  friend bool operator!=(FElem a, FElem b) { return a.v != b.v; }
  friend bool operator<(FElem a, FElem b) { return a.v < b.v; }
};

/// GF(p^e) with exact arithmetic. Immutable; cheap to copy (shared internals).
///
/// For e > 1 the modulus is a monic irreducible of degree e over GF(p), found
/// by a seeded cyclic scan over monic polynomials ordered by their base-p
/// encoding; seed 0 accepts the smallest encoding. Construction is
/// deterministic in (p, e, seed).
class Field {
 public:
  static constexpr std::uint64_t kDefaultSizeCap = 1u << 20;

  Field() = default;
  static Field create(std::uint32_t p, std::uint32_t e = 1, std::uint64_t seed = 0,
                      std::uint64_t size_cap = kDefaultSizeCap);

  std::uint32_t p() const;
  std::uint32_t e() const;
  std::uint64_t q() const;  // p^e
  const std::string& generator_name() const;
  /// Modulus coefficients c_0..c_e (monic, c_e = 1); empty when e = 1.
  const std::vector<std::uint32_t>& modulus() const;

  FElem zero() const { return FElem{0}; }
  FElem one() const { return FElem{1}; }
  /// The generator g (only meaningful for e > 1; equals p's encoding).
  FElem generator() const;
  /// Canonical embedding of an integer (reduction mod p).
  FElem from_int(long long x) const;

  bool is_zero(FElem a) const { return a.v == 0; }
  FElem add(FElem a, FElem b) const;
  FElem sub(FElem a, FElem b) const;
  FElem neg(FElem a) const;
  FElem mul(FElem a, FElem b) const;
  FElem inv(FElem a) const;  // throws on zero
  FElem div(FElem a, FElem b) const { return mul(a, inv(b)); }
  FElem pow(FElem a, std::uint64_t n) const;
  /// Frobenius x -> x^p.
  FElem frobenius(FElem a) const { return pow(a, p()); }

  /// All q elements, deterministic order starting 0, 1, ...
  std::vector<FElem> elements() const;

  /// Residue vector c_0..c_{e-1} of the polynomial representation.
  std::vector<std::uint32_t> coeffs(FElem a) const;
  FElem from_coeffs(const std::vector<std::uint32_t>& c) const;

  std::string to_string(FElem a) const;
  FElem parse(const std::string& text) const;

  /// Structural equality (same p, e, modulus).
  bool same_field(const Field& other) const;

  bool valid() const { return d_ != nullptr; }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Embedding GF(p^a) -> GF(p^b) for a | b, determined by mapping the source
/// generator to the smallest-encoded root of the source modulus in the target.
class FieldEmbedding {
 public:
  FieldEmbedding(const Field& src, const Field& dst);
  FElem map(FElem a) const;
  const Field& src() const { return src_; }
  const Field& dst() const { return dst_; }

 private:
  Field src_, dst_;
  FElem gen_image_;
};

bool is_prime_u64(std::uint64_t n);

}  // namespace furst
