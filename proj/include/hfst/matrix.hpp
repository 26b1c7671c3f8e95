// Exact dense linear algebra: rank over F2 (bit-packed rows, with an
// OpenMP-parallel elimination kernel and a serial reference kept for
// testing) and rank over F2(t) (plain Gaussian elimination; entries are
// exact rational functions, so no pivoting strategy is needed).
#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "hfst/rational_fn.hpp"

namespace hfst {

// Rows packed 64 columns per word.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
        w_(static_cast<size_t>(rows) * stride_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (word(r)[c / 64] >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v) {
    uint64_t bit = uint64_t{1} << (c % 64);
    if (v)
      word(r)[c / 64] |= bit;
    else
      word(r)[c / 64] &= ~bit;
  }
  void flip(int r, int c) { word(r)[c / 64] ^= uint64_t{1} << (c % 64); }

  uint64_t* word(int r) { return w_.data() + static_cast<size_t>(r) * stride_; }
  const uint64_t* word(int r) const {
    return w_.data() + static_cast<size_t>(r) * stride_;
  }
  int stride() const { return stride_; }

 private:
  int rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<uint64_t> w_;
};

// Reference elimination, single-threaded.
int matrix_rank_serial(BitMatrix m);
// Same elimination with the row-update loop parallelized.  Results agree
// with the serial kernel on all inputs.
int matrix_rank(BitMatrix m);

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        v_(static_cast<size_t>(rows) * cols, T{}) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int r, int c) { return v_[static_cast<size_t>(r) * cols_ + c]; }
  const T& at(int r, int c) const {
    return v_[static_cast<size_t>(r) * cols_ + c];
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> v_;
};

// F2 entries are 0/1 bytes.
using MatrixF2 = DenseMatrix<uint8_t>;
using MatrixFt = DenseMatrix<RationalFn>;

inline BitMatrix pack(const MatrixF2& m) {
  BitMatrix b(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c)) b.set(r, c, true);
  return b;
}

inline int matrix_rank(const MatrixF2& m) { return matrix_rank(pack(m)); }

int matrix_rank(MatrixFt m);

}  // namespace hfst
