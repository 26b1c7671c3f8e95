#include "hfst/laurent.hpp"

#include <algorithm>
#include <cstdlib>

namespace hfst {

PolyF2 PolyF2::monomial(int d) {
  PolyF2 p;
  p.set_coeff(d, true);
  return p;
}

int PolyF2::degree() const {
  if (w.empty()) return -1;
  uint64_t top = w.back();
  int bit = 63;
  while (!((top >> bit) & 1u)) --bit;
  return static_cast<int>(w.size() - 1) * 64 + bit;
}

bool PolyF2::coeff(int d) const {
  if (d < 0) return false;
  size_t i = static_cast<size_t>(d) / 64;
  if (i >= w.size()) return false;
  return (w[i] >> (d % 64)) & 1u;
}

void PolyF2::set_coeff(int d, bool v) {
  size_t i = static_cast<size_t>(d) / 64;
  if (i >= w.size()) {
    if (!v) return;
    w.resize(i + 1, 0);
  }
  uint64_t bit = uint64_t{1} << (d % 64);
  if (v)
    w[i] |= bit;
  else
    w[i] &= ~bit;
  trim();
}

void PolyF2::trim() {
  while (!w.empty() && w.back() == 0) w.pop_back();
}

PolyF2 PolyF2::operator+(const PolyF2& o) const {
  PolyF2 r;
  r.w.resize(std::max(w.size(), o.w.size()), 0);
  for (size_t i = 0; i < r.w.size(); ++i) {
    uint64_t a = i < w.size() ? w[i] : 0;
    uint64_t b = i < o.w.size() ? o.w[i] : 0;
    r.w[i] = a ^ b;
  }
  r.trim();
  return r;
}

PolyF2 PolyF2::shifted(int k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : PolyF2{};
  PolyF2 r;
  int words = k / 64, bits = k % 64;
  r.w.assign(w.size() + words + 1, 0);
  for (size_t i = 0; i < w.size(); ++i) {
    r.w[i + words] ^= w[i] << bits;
    if (bits) r.w[i + words + 1] ^= w[i] >> (64 - bits);
  }
  r.trim();
  return r;
}

PolyF2 PolyF2::operator*(const PolyF2& o) const {
  if (is_zero() || o.is_zero()) return {};
  PolyF2 r;
  r.w.assign(w.size() + o.w.size(), 0);
  for (size_t i = 0; i < w.size(); ++i) {
    uint64_t word = w[i];
    while (word) {
      int bit = __builtin_ctzll(word);
      word &= word - 1;
      int shift = static_cast<int>(i) * 64 + bit;
      int ws = shift / 64, bs = shift % 64;
      for (size_t j = 0; j < o.w.size(); ++j) {
        r.w[j + ws] ^= o.w[j] << bs;
        if (bs) r.w[j + ws + 1] ^= o.w[j] >> (64 - bs);
      }
    }
  }
  r.trim();
  return r;
}

void PolyF2::divmod(const PolyF2& d, PolyF2* q, PolyF2* r) const {
  PolyF2 rem = *this, quot;
  int dd = d.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    quot.set_coeff(shift, true);
    rem = rem + d.shifted(shift);
  }
  if (q) *q = quot;
  if (r) *r = rem;
}

int PolyF2::valuation() const {
  if (is_zero()) return 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i]) return static_cast<int>(i) * 64 + __builtin_ctzll(w[i]);
  }
  return 0;
}

PolyF2 poly_gcd(PolyF2 a, PolyF2 b) {
  while (!b.is_zero()) {
    PolyF2 r;
    a.divmod(b, nullptr, &r);
    a = b;
    b = r;
  }
  return a;
}

LaurentPoly LaurentPoly::from_poly(PolyF2 p, int val) {
  LaurentPoly r;
  if (p.is_zero()) return r;
  int v = p.valuation();
  if (v) {
    PolyF2 q;
    p.divmod(PolyF2::monomial(v), &q, nullptr);
    p = q;
  }
  r.poly_ = std::move(p);
  r.val_ = val + v;
  return r;
}

LaurentPoly LaurentPoly::from_exponents(const std::vector<int>& exps) {
  LaurentPoly r;
  for (int e : exps) r = r + t(e);
  return r;
}

bool LaurentPoly::is_one() const { return val_ == 0 && poly_ == PolyF2::one(); }

bool LaurentPoly::coeff(int exp) const { return poly_.coeff(exp - val_); }

std::vector<int> LaurentPoly::support() const {
  std::vector<int> s;
  for (int d = 0; d <= poly_.degree(); ++d)
    if (poly_.coeff(d)) s.push_back(val_ + d);
  return s;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int v = std::min(val_, o.val_);
  PolyF2 sum = poly_.shifted(val_ - v) + o.poly_.shifted(o.val_ - v);
  return from_poly(std::move(sum), v);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  return from_poly(poly_ * o.poly_, val_ + o.val_);
}

bool LaurentPoly::eval_at_one() const {
  int parity = 0;
  for (uint64_t word : poly_.w) parity ^= __builtin_parityll(word);
  return parity;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int e : support()) {
    if (!s.empty()) s += "+";
    if (e == 0)
      s += "1";
    else if (e == 1)
      s += "t";
    else
      s += "t^" + std::to_string(e);
  }
  return s;
}

bool LaurentPoly::parse(const std::string& s, LaurentPoly* out) {
  *out = LaurentPoly::zero();
  if (s.empty()) return false;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    if (term == "0") continue;
    if (term == "1") {
      *out = *out + one();
    } else if (term == "t") {
      *out = *out + t(1);
    } else if (term.rfind("t^", 0) == 0) {
      errno = 0;
      char* end = nullptr;
      long k = std::strtol(term.c_str() + 2, &end, 10);
      if (errno || end == term.c_str() + 2 || *end != '\0') return false;
      *out = *out + t(static_cast<int>(k));
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace hfst
