// The rational-function field F2(t), represented as reduced fractions of
// Laurent polynomials.  Canonical form: the denominator is an honest
// polynomial with nonzero constant term; the gcd of numerator and
// denominator polynomial parts is 1.  The valuation lives on the numerator.
#pragma once

#include <stdexcept>
#include <string>

#include "hfst/laurent.hpp"

namespace hfst {

class RationalFn {
 public:
  RationalFn() = default;  // zero
  RationalFn(LaurentPoly num, LaurentPoly den);
  static RationalFn zero() { return {}; }
  static RationalFn one() { return RationalFn(LaurentPoly::one()); }
  explicit RationalFn(LaurentPoly p) : num_(std::move(p)) {}

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  RationalFn inverse() const;  // throws std::domain_error on zero

  bool operator==(const RationalFn&) const = default;

  std::string to_string() const;

 private:
  void reduce();

  LaurentPoly num_;                        // zero => value is zero
  LaurentPoly den_ = LaurentPoly::one();   // never zero
};

}  // namespace hfst
