#include "hfst/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hfst {

namespace {

inline void xor_row(uint64_t* dst, const uint64_t* src, int words) {
  for (int i = 0; i < words; ++i) dst[i] ^= src[i];
}

}  // namespace

int matrix_rank_serial(BitMatrix m) {
  int rank = 0;
  int words = m.stride();
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (m.get(r, col)) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int i = 0; i < words; ++i)
        std::swap(m.word(pivot)[i], m.word(rank)[i]);
    const uint64_t* prow = m.word(rank);
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (m.get(r, col)) xor_row(m.word(r), prow, words);
    }
    ++rank;
  }
  return rank;
}

int matrix_rank(BitMatrix m) {
  int rank = 0;
  int words = m.stride();
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (m.get(r, col)) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int i = 0; i < words; ++i)
        std::swap(m.word(pivot)[i], m.word(rank)[i]);
    const uint64_t* prow = m.word(rank);
    int nrows = m.rows();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (nrows - rank > 128)
#endif
    for (int r = rank + 1; r < nrows; ++r) {
      if (m.get(r, col)) xor_row(m.word(r), prow, words);
    }
    ++rank;
  }
  return rank;
}

int matrix_rank(MatrixFt m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < m.cols(); ++c)
        std::swap(m.at(pivot, c), m.at(rank, c));
    RationalFn inv = m.at(rank, col).inverse();
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (m.at(r, col).is_zero()) continue;
      RationalFn f = m.at(r, col) * inv;
      for (int c = col; c < m.cols(); ++c)
        m.at(r, c) = m.at(r, c) + f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace hfst
