// Finite chain complexes over an exact field (F2 or F2(t)) with the
// differential stored column-major: d(basis[c]) = sum_r D(r,c) basis[r].
// Construction verifies d^2 = 0; homology dimensions come from exact rank.
#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfst/matrix.hpp"

namespace hfst {

struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool entry_is_zero(uint8_t v) { return v == 0; }
inline bool entry_is_zero(const RationalFn& v) { return v.is_zero(); }
inline uint8_t entry_add(uint8_t a, uint8_t b) {
  return static_cast<uint8_t>(a ^ b);
}
inline RationalFn entry_add(const RationalFn& a, const RationalFn& b) {
  return a + b;
}
inline uint8_t entry_mul(uint8_t a, uint8_t b) {
  return static_cast<uint8_t>(a & b);
}
inline RationalFn entry_mul(const RationalFn& a, const RationalFn& b) {
  return a * b;
}
inline std::string entry_to_string(uint8_t) { return "1"; }
inline std::string entry_to_string(const RationalFn& v) { return v.to_string(); }

// Count of complexes constructed process-wide; every one of them passed the
// d^2 = 0 check in the constructor.
std::atomic<uint64_t>& complexes_verified();

template <class T>
class ChainComplex {
 public:
  ChainComplex(std::string field, std::vector<std::string> names,
               DenseMatrix<T> d)
      : field_(std::move(field)), names_(std::move(names)), d_(std::move(d)) {
    if (d_.rows() != dim() || d_.cols() != dim())
      throw StructureError("differential shape mismatch");
    verify_d_squared();
    ++complexes_verified();
  }

  int dim() const { return static_cast<int>(names_.size()); }
  const std::string& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  const DenseMatrix<T>& differential() const { return d_; }

  int homology_dim() const {
    int r = matrix_rank(d_);
    return dim() - 2 * r;
  }

  // "basis: ..." then one "d SRC COEFF DST" triple per nonzero entry.
  std::string dump() const {
    std::string out = "basis:";
    for (const auto& n : names_) out += " " + n;
    out += "\n";
    for (int c = 0; c < dim(); ++c)
      for (int r = 0; r < dim(); ++r)
        if (!entry_is_zero(d_.at(r, c)))
          out += "d " + names_[c] + " " + entry_to_string(d_.at(r, c)) + " " +
                 names_[r] + "\n";
    return out;
  }

 private:
  void verify_d_squared() const {
    int n = dim();
    // Sparse walk: differentials here have O(1) entries per column.
    std::vector<std::vector<int>> nz(n);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r)
        if (!entry_is_zero(d_.at(r, c))) nz[c].push_back(r);
    std::vector<T> acc(n, T{});
    for (int c = 0; c < n; ++c) {
      std::vector<int> touched;
      for (int k : nz[c]) {
        for (int r : nz[k]) {
          if (entry_is_zero(acc[r])) touched.push_back(r);
          acc[r] = entry_add(acc[r], entry_mul(d_.at(r, k), d_.at(k, c)));
        }
      }
      for (int r : touched) {
        if (!entry_is_zero(acc[r]))
          throw StructureError("differential does not square to zero at " +
                               names_[c] + " -> " + names_[r]);
        acc[r] = T{};
      }
    }
  }

  std::string field_;
  std::vector<std::string> names_;
  DenseMatrix<T> d_;
};

using ChainComplexF2 = ChainComplex<uint8_t>;
using ChainComplexFt = ChainComplex<RationalFn>;

template <class T>
int homology_dim(const ChainComplex<T>& c) {
  return c.homology_dim();
}

}  // namespace hfst
