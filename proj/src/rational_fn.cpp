#include "hfst/rational_fn.hpp"

namespace hfst {

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
  reduce();
}

void RationalFn::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  // Push the denominator's t-power into the numerator's valuation, then
  // cancel the polynomial gcd.
  int v = num_.valuation() - den_.valuation();
  PolyF2 n = num_.poly(), d = den_.poly();
  PolyF2 g = poly_gcd(n, d);
  if (g.degree() > 0) {
    PolyF2 qn, qd;
    n.divmod(g, &qn, nullptr);
    d.divmod(g, &qd, nullptr);
    n = qn;
    d = qd;
  }
  num_ = LaurentPoly::from_poly(std::move(n), v);
  den_ = LaurentPoly::from_poly(std::move(d), 0);
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  if (is_zero() || o.is_zero()) return {};
  return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFn: inverse of zero");
  return RationalFn(den_, num_);
}

std::string RationalFn::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace hfst
