// Exact coefficient arithmetic: polynomials and Laurent polynomials over F2.
//
// PolyF2 packs coefficients into 64-bit words (bit i of word i/64 is the
// coefficient of t^i).  LaurentPoly is a PolyF2 together with a valuation:
// p(t) * t^val, normalized so the polynomial part has a nonzero constant
// term (or is zero).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hfst {

struct PolyF2 {
  std::vector<uint64_t> w;  // little-endian by degree; no trailing zero words

  static PolyF2 zero() { return {}; }
  static PolyF2 one() { return PolyF2{{1}}; }
  static PolyF2 monomial(int d);

  bool is_zero() const { return w.empty(); }
  int degree() const;               // -1 for zero
  bool coeff(int d) const;
  void set_coeff(int d, bool v);
  void trim();

  PolyF2 operator+(const PolyF2& o) const;  // XOR
  PolyF2 operator*(const PolyF2& o) const;  // carry-less
  PolyF2 shifted(int k) const;              // multiply by t^k, k >= 0

  // Polynomial division: *this = q*d + r with deg r < deg d.  d nonzero.
  void divmod(const PolyF2& d, PolyF2* q, PolyF2* r) const;

  // Number of trailing zero coefficients (valuation); 0 for zero poly.
  int valuation() const;

  bool operator==(const PolyF2&) const = default;
};

PolyF2 poly_gcd(PolyF2 a, PolyF2 b);

class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return from_poly(PolyF2::one(), 0); }
  static LaurentPoly t(int k = 1) { return from_poly(PolyF2::one(), k); }
  // Sum of t^e over the given exponents (duplicates cancel mod 2).
  static LaurentPoly from_exponents(const std::vector<int>& exps);
  static LaurentPoly from_poly(PolyF2 p, int val);

  bool is_zero() const { return poly_.is_zero(); }
  bool is_one() const;
  int valuation() const { return val_; }           // undefined semantics if zero
  int max_exponent() const { return val_ + poly_.degree(); }
  const PolyF2& poly() const { return poly_; }

  bool coeff(int exp) const;
  std::vector<int> support() const;  // sorted exponents with coefficient 1

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;

  // Evaluation at t = 1 (lands in F2: parity of the support).
  bool eval_at_one() const;

  bool operator==(const LaurentPoly&) const = default;

  // "0", "1", "t", "t^-2", "1+t^3", ...
  std::string to_string() const;
  // Accepts the same grammar: '+'-separated monomials "1", "t", "t^K".
  static bool parse(const std::string& s, LaurentPoly* out);

 private:
  int val_ = 0;     // exponent shift
  PolyF2 poly_;     // zero, or nonzero constant term
};

}  // namespace hfst
