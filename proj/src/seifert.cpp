#include "hfst/seifert.hpp"

#include <numeric>
#include <stdexcept>

namespace hfst {

Rational Rational::make(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Rational Rational::operator+(const Rational& o) const {
  return make(num * o.den + o.num * den, den * o.den);
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

NormalizedSeifert normalize(const SeifertData& d) {
  NormalizedSeifert n;
  n.base = d.base;
  n.e = {0, 1};
  for (const Rational& r : d.cone_points) {
    n.e = n.e + r;
    if (!r.is_integer()) n.cone_points.push_back(r);
  }
  return n;
}

namespace {

// Exact integer determinant (Bareiss).  Sizes here are cone count + 2.
long long det_int(std::vector<std::vector<long long>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  using I = __int128;
  std::vector<std::vector<I>> a(n, std::vector<I>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  I prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { swap_row = i; break; }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return static_cast<long long>(sign * a[n - 1][n - 1]);
}

// Determinant of the first-homology presentation of the filling along
// a*section + b*fiber.  Columns: x_1..x_k, f, c.
long long presentation_det(const NormalizedSeifert& d, long long a,
                           long long b) {
  int k = static_cast<int>(d.cone_points.size());
  int n = k + 2;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < k; ++i) m[0][i] = 1;  // boundary of the disk section
  m[0][k + 1] = 1;
  for (int i = 0; i < k; ++i) {
    m[1 + i][i] = d.cone_points[i].den;      // alpha_i x_i + beta_i f = 0
    m[1 + i][k] = d.cone_points[i].num;
  }
  m[k + 1][k] = b;
  m[k + 1][k + 1] = a;
  return det_int(std::move(m));
}

}  // namespace

long long filling_h1_order(const NormalizedSeifert& d, long long a,
                           long long b) {
  long long det = presentation_det(d, a, b);
  return det < 0 ? -det : det;
}

EulerLongitude euler_and_longitude(const NormalizedSeifert& d) {
  EulerLongitude out;
  out.e = d.e;
  if (d.base == BaseSurface::kMobius) {
    // Only one filling has b1 = 1, namely the fiber slope.
    out.lambda_section = 0;
    out.lambda_fiber = 1;
    out.delta = 0;
    return out;
  }
  // The determinant is linear in the filling slope; the kernel direction is
  // the longitude.
  long long d1 = presentation_det(d, 1, 0);
  long long d2 = presentation_det(d, 0, 1);
  if (d1 == 0 && d2 == 0)
    throw std::logic_error("degenerate Seifert presentation");
  long long g = std::gcd(d1 < 0 ? -d1 : d1, d2 < 0 ? -d2 : d2);
  long long a = d2 / g, b = -d1 / g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  out.lambda_section = a;
  out.lambda_fiber = b;
  // Distance to the fiber slope (0*section + 1*fiber).
  out.delta = static_cast<int>(a < 0 ? -a : a);
  return out;
}

const char* reason_name(SeifertReason r) {
  switch (r) {
    case SeifertReason::kSolidTorus: return "solid_torus";
    case SeifertReason::kMobiusBase: return "mobius_base";
    case SeifertReason::kZeroEulerPair: return "zero_euler_pair";
    case SeifertReason::kGenericDiskBase: return "generic_disk_base";
  }
  return "?";
}

SeifertVerdict classify(const SeifertData& d) {
  NormalizedSeifert n = normalize(d);
  SeifertVerdict v;
  v.lambda_vs_fiber = euler_and_longitude(n);
  if (n.base == BaseSurface::kMobius) {
    v.is_hfst = true;
    v.reason = SeifertReason::kMobiusBase;
    v.filled_form = "mobius_nonseparating_sphere";
    return v;
  }
  int k = static_cast<int>(n.cone_points.size());
  std::string cones;
  for (const Rational& r : n.cone_points) cones += r.to_string() + ",";
  v.filled_form =
      "S2(" + cones + "delta=" + std::to_string(v.lambda_vs_fiber.delta) + ")";
  if (k <= 1) {
    v.is_hfst = true;
    v.reason = SeifertReason::kSolidTorus;
  } else if (k == 2 && n.e.is_zero()) {
    v.is_hfst = true;
    v.reason = SeifertReason::kZeroEulerPair;
  } else {
    v.is_hfst = false;
    v.reason = SeifertReason::kGenericDiskBase;
  }
  return v;
}

}  // namespace hfst
