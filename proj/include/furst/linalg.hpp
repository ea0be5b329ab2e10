#pragma once

#include <vector>

#include "furst/field.hpp"

namespace furst {

/// Dense matrix over a finite field, row-major.
class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(Field f, int rows, int cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  FElem& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  FElem at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend bool operator==(const FMatrix& x, const FMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  /// In-place reduced row echelon form; returns pivot column list.
  std::vector<int> rref();
  int rank() const;
  FMatrix transposed() const;
  /// Map entries into another field.
  FMatrix embedded(const FieldEmbedding& emb) const;

 private:
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<FElem> a_;
};

}  // namespace furst
