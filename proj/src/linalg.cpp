#include "furst/linalg.hpp"

namespace furst {

std::vector<int> FMatrix::rref() {
  const Field& F = field_;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pr = -1;
    for (int i = r; i < rows_; ++i)
      if (!F.is_zero(at(i, c))) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
    FElem scale = F.inv(at(r, c));
    for (int j = c; j < cols_; ++j) at(r, j) = F.mul(at(r, j), scale);
    for (int i = 0; i < rows_; ++i) {
      if (i == r || F.is_zero(at(i, c))) continue;
      FElem factor = at(i, c);
      for (int j = c; j < cols_; ++j)
        at(i, j) = F.sub(at(i, j), F.mul(factor, at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int FMatrix::rank() const {
  FMatrix copy = *this;
  // forward elimination only; cheaper than full rref
  const Field& F = field_;
  int r = 0;
  for (int c = 0; c < copy.cols_ && r < copy.rows_; ++c) {
    int pr = -1;
    for (int i = r; i < copy.rows_; ++i)
      if (!F.is_zero(copy.at(i, c))) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = c; j < copy.cols_; ++j) std::swap(copy.at(pr, j), copy.at(r, j));
    FElem pinv = F.inv(copy.at(r, c));
    for (int i = r + 1; i < copy.rows_; ++i) {
      if (F.is_zero(copy.at(i, c))) continue;
      FElem factor = F.mul(copy.at(i, c), pinv);
      for (int j = c; j < copy.cols_; ++j)
        copy.at(i, j) = F.sub(copy.at(i, j), F.mul(factor, copy.at(r, j)));
    }
    ++r;
  }
  return r;
}

FMatrix FMatrix::transposed() const {
  FMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

FMatrix FMatrix::embedded(const FieldEmbedding& emb) const {
  FMatrix out(emb.dst(), rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = emb.map(at(i, j));
  return out;
}

}  // namespace furst
