#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "furst/monomial.hpp"

namespace furst {

/// Why a monomial set fails to be Borel-fixed.
struct BorelViolation {
  Monomial from;
  int var_from = 0;  // j in the move x_j -> x_i (0-based)
  int var_to = 0;    // i < j
  Monomial result;   // the monomial that should be present but is not
  bool divisibility = false;  // violation of divisor-closure instead of a move
};

/// First violation of divisor-closure or Borel-move-closure in a standard
/// monomial set, or nullopt if the set is Borel-fixed.
std::optional<BorelViolation> borel_violation(const std::vector<Monomial>& monos, int nvars);

/// A Borel-fixed set of monomials: closed under divisibility and under every
/// move x_j -> x_i with i < j. Validated at construction.
class BorelSet {
 public:
  BorelSet(std::vector<Monomial> monos, int nvars);
  static BorelSet unchecked(std::vector<Monomial> sorted_monos, int nvars);

  int nvars() const { return nvars_; }
  long size() const { return static_cast<long>(monos_.size()); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  bool contains(const Monomial& m) const;

  friend bool operator==(const BorelSet& a, const BorelSet& b) {
    return a.nvars_ == b.nvars_ && a.monos_ == b.monos_;
  }

 private:
  BorelSet() = default;
  int nvars_ = 0;
  std::vector<Monomial> monos_;  // sorted by canonical_compare ascending
};

/// { m in x_2..x_n : x_1^j * m in Lambda }, as a set in n-1 variables.
/// Borel-fixed whenever Lambda is; the slices decrease in j.
BorelSet lambda_slice(const BorelSet& lambda, int j);

/// { m in Lambda : m * x_i not in Lambda for every variable x_i of Lambda }.
std::vector<Monomial> frontier(const BorelSet& lambda);

/// Smallest Borel-fixed set containing the input (closure under divisors and
/// Borel moves). Idempotent.
BorelSet borel_closure(const std::vector<Monomial>& monos, int nvars);

struct FrontierVerdict {
  bool holds = true;
  // Lemma data: largest a with binom(a, n) <= |Lambda|, and the two sides of
  // |Lambda| - |Lambda_0| >= binom(a-1, n).
  long long a = 0;
  long long lemma_lhs = 0;
  long long lemma_rhs = 0;
  bool lemma_holds = true;
  // Corollary data (n >= 2 only): largest b with binom(b, n-1) <= |Lambda_0|
  // and |Lambda| - |Lambda_0| >= binom(b, n).
  bool corollary_checked = false;
  long long b = 0;
  long long corollary_rhs = 0;
  bool corollary_holds = true;
  // Telescoping identity |Lambda| - |Lambda_0| = sum_{j>=1} |Lambda_j|.
  bool telescoping_holds = true;
};

FrontierVerdict verify_frontier_lemma(const BorelSet& lambda);

/// Every Borel-fixed set with 1 <= |set| <= max_size, each exactly once, in
/// canonical order (size ascending, then lexicographic on the monomial list).
/// Capped at n <= 4, max_size <= 30.
std::vector<BorelSet> enumerate_borel_sets(int n, int max_size);

/// Streaming variant; the callback sees each set once, canonical order.
void enumerate_borel_sets(int n, int max_size, const std::function<void(const BorelSet&)>& fn);

}  // namespace furst
