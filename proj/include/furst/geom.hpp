#pragma once

#include <optional>
#include <vector>

#include "furst/linalg.hpp"
#include "furst/poly.hpp"

namespace furst {

/// A k-subspace of F_q^n through the origin, canonically represented by the
/// reduced row-echelon basis matrix. Equality of subspaces is equality of
/// representatives.
struct Direction {
  FMatrix basis;            // k x n, RREF
  std::vector<int> pivots;  // pivot columns, ascending

  int k() const { return basis.rows(); }
  int n() const { return basis.cols(); }
  friend bool operator==(const Direction& a, const Direction& b) { return a.basis == b.basis; }
};

/// Canonicalize the rowspace of an arbitrary k x n matrix (must have rank k).
Direction direction_from_span(const FMatrix& rows);

/// All points of the Gaussian binomial count, each exactly once, in a
/// deterministic order (pivot sets ascending lexicographically, then free
/// entries in base-q odometer order).
std::vector<Direction> enumerate_directions(int n, int k, const Field& F);

/// Number of k-subspaces of F_q^n.
long long gaussian_binomial(int n, int k, long long q);

/// Affine k-plane offset + rowspace(direction); the stored offset is the
/// unique coset representative with zeros in the direction's pivot
/// coordinates.
struct AffinePlane {
  Direction dir;
  std::vector<FElem> offset;

  friend bool operator==(const AffinePlane& a, const AffinePlane& b) {
    return a.dir == b.dir && a.offset == b.offset;
  }
};

AffinePlane make_affine_plane(const Direction& dir, std::vector<FElem> any_point, const Field& F);
AffinePlane through_origin(const Direction& dir);

/// The q^(n-k) planes parallel to the direction, partitioning F_q^n.
std::vector<AffinePlane> enumerate_parallel(const Direction& dir, const Field& F);

/// All points lying on the plane (q^k of them).
std::vector<std::vector<FElem>> plane_points(const AffinePlane& V, const Field& F);
bool plane_contains(const AffinePlane& V, const std::vector<FElem>& pt, const Field& F);

/// Plucker coordinates: the k x k minors of the basis matrix over k-subsets
/// of columns in lexicographic subset order, normalized so the first
/// nonzero coordinate is 1.
struct PluckerVector {
  std::vector<FElem> coords;
  friend bool operator==(const PluckerVector& a, const PluckerVector& b) { return a.coords == b.coords; }
};

PluckerVector plucker(const Direction& dir, const Field& F);
std::string plucker_to_string(const PluckerVector& p, int n, int k, const Field& F);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// Affine chart of Gr(k,n): the planes cut out by the n-k forms
///   x_a + sum_{b not in cut_set} c_{a,b} x_b   (a in cut_set),
/// one form per leading variable a. cut_set has n-k elements; the free
/// coordinates c_{a,b} number (n-k)*k. A direction lies on the chart iff
/// the complementary minor of its basis matrix is invertible.
struct Chart {
  int n = 0, k = 0;
  std::vector<int> cut_set;   // leading variables, ascending, size n-k
  std::vector<int> free_set;  // complement, ascending, size k

  static Chart make(int n, int k, std::vector<int> cut_vars);
  /// Chart-coordinate variable name, e.g. c13 for (a=0, b=2) with 1-based print.
  std::string coord_name(int a, int b) const;
  /// Ring k[c_{a,b}] with coordinates ordered (a asc, b asc).
  Ring coordinate_ring(const Field& F) const;
  int coord_index(int a, int b) const;  // index into the chart-coordinate ring
};

bool chart_contains(const Chart& chart, const Direction& dir, const Field& F);
/// The (n-k) x k matrix of chart coordinates, flattened (a asc, b asc).
std::vector<FElem> chart_coords(const Chart& chart, const Direction& dir, const Field& F);
Direction direction_from_chart(const Chart& chart, const std::vector<FElem>& coords, const Field& F);

/// n-k affine-linear forms in the plane's ambient ring vanishing exactly on
/// V. Without a chart they come from the RREF; with a chart they are the
/// canonical chart forms.
std::vector<Polynomial> plane_linear_forms(const AffinePlane& V, const Ring& xring,
                                           const std::optional<Chart>& chart = std::nullopt);

/// n polynomials in k parameters whose image is V.
std::vector<Polynomial> plane_parametrization(const AffinePlane& V, const Ring& param_ring);

}  // namespace furst
