// Classifier for Seifert fibered rational homology solid tori: which ones
// behave as Heegaard Floer solid tori.  Data is a base surface (disk or
// Moebius band) with unnormalized cone-point rationals b_i/a_i; the
// classification invariants are the base, the non-integer cone-point count
// and the total Euler number e = sum of the r_i.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfst/typed.hpp"

namespace hfst {

struct Rational {
  long long num = 0;
  long long den = 1;  // > 0, reduced

  static Rational make(long long num, long long den);
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  Rational operator+(const Rational& o) const;
  Rational operator-() const { return {-num, den}; }
  bool operator==(const Rational&) const = default;
  std::string to_string() const;
};

enum class BaseSurface { kDisk, kMobius };

struct SeifertData {
  BaseSurface base = BaseSurface::kDisk;
  std::vector<Rational> cone_points;  // unnormalized r_i = b_i / a_i
};

struct NormalizedSeifert {
  BaseSurface base = BaseSurface::kDisk;
  std::vector<Rational> cone_points;  // all non-integer, orders >= 2
  Rational e;                         // total Euler number, sum of all r_i
};

// Drops integer cone points (their fibers are regular) while preserving the
// total e alongside the retained cone points.
NormalizedSeifert normalize(const SeifertData& d);

struct EulerLongitude {
  Rational e;
  // Slope a*section + b*fiber on the boundary whose filling has infinite
  // first homology; delta is its distance to the fiber slope (0 in the
  // Moebius-base case, where the longitude is the fiber itself).
  long long lambda_section = 0;
  long long lambda_fiber = 0;
  int delta = 0;
};

// Disk base: the longitude is located through the first-homology
// presentation of the filling (generators: cone sections, fiber, boundary
// section; the filling slope with vanishing presentation determinant).
EulerLongitude euler_and_longitude(const NormalizedSeifert& d);

enum class SeifertReason {
  kSolidTorus,
  kMobiusBase,
  kZeroEulerPair,
  kGenericDiskBase,
};

struct SeifertVerdict {
  bool is_hfst = false;
  SeifertReason reason = SeifertReason::kGenericDiskBase;
  EulerLongitude lambda_vs_fiber;
  std::string filled_form;  // "S2(...,delta=D)" or the Moebius sphere case
};

const char* reason_name(SeifertReason r);

SeifertVerdict classify(const SeifertData& d);

// Order of the first homology of the filling along a*section + b*fiber:
// 0 encodes infinite order.  Brute-force oracle for the longitude search.
long long filling_h1_order(const NormalizedSeifert& d, long long a,
                           long long b);

}  // namespace hfst
