// Immersed multicurves in the punctured torus with trivial local systems.
//
// Coordinates: the rational longitude is pinned to the horizontal direction
// (slope 0); the vertical direction is the dual slope.  Words live in the
// free group on l (horizontal) and m (vertical); capital letters are
// inverses.  A slope p/q is the primitive class q*l + p*m, canonicalized
// with q >= 0 and p = 1 when q = 0.
//
// The curve-to-type-D dictionary covers exactly: powers of l, powers of m,
// embedded staircase lines of primitive slope, each optionally through the
// basepoint.  Everything else is refused loudly.
//
// The through-basepoint flag marks the distinguished component (at most one
// per multicurve) and does not change the emitted structure: the pairing
// conventions already produce the through-basepoint Floer counts, giving 2
// for each parallel component pair regardless of wrapping.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hfst/typed.hpp"

namespace hfst {

struct UnsupportedCurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Slope {
  int p = 0;  // vertical component
  int q = 1;  // horizontal component

  static Slope canonical(long long p, long long q);
  bool operator==(const Slope&) const = default;
  std::string to_string() const;  // "p/q"
};

// |p1 q2 - p2 q1|, the geometric intersection count of two line classes;
// `parallel_value` is returned when the determinant vanishes (the Floer
// count of a parallel pair, 2 per component pair by convention).
int line_intersection_dim(Slope s1, Slope s2, int parallel_value);

struct CurveComponent {
  std::string word;  // cyclic word over {l, L, m, M}; L, M are inverses
  bool through_basepoint = false;
};

struct MultiCurve {
  std::vector<CurveComponent> components;
};

// Free plus cyclic reduction.
std::string cyclic_reduce(const std::string& word);
std::string invert_word(const std::string& word);
// Equality of cyclic words (up to rotation only).
bool cyclically_equal(const std::string& a, const std::string& b);
// Smallest cyclic period prefix.
std::string primitive_root(const std::string& word);

ValidityReport check_curve(const MultiCurve& c);

struct LongitudePower {
  bool yes = false;
  int exponent = 0;
};
// Detects words that reduce to l^j, j != 0; invariant under rotation and
// inversion of the word.
LongitudePower is_longitude_power(const CurveComponent& c);

// True iff every component is a longitude power (such curves homotope into
// an annular neighborhood of the longitude).
bool supported_near_longitude(const MultiCurve& c);

// Primitive roots conjugate up to inversion.
bool commensurable(const CurveComponent& a, const CurveComponent& b);

struct CurveClass {
  enum Kind { kLPower, kMPower, kLine, kUnsupported } kind = kUnsupported;
  int wrap = 0;    // powers: signed exponent
  Slope slope;     // lines (and powers, with wrap-fold class)
};
CurveClass classify_component(const CurveComponent& c);

// Staircase word of the embedded line of primitive slope, e.g. "lm", "llm",
// "lM"; used both to recognize line words and to order edge crossings.
std::string staircase_word(Slope s);

// Dictionary for one supported component.  Generators are the edge
// crossings: vertical-edge crossings carry i0, horizontal-edge crossings
// carry i1.  Throws UnsupportedCurveError outside the supported classes.
TypeD component_typeD(const CurveComponent& c);

// Disjoint union over components, generators prefixed "c<i>_".
TypeD curve_to_typeD(const MultiCurve& c);

// Type D structure of the slope-s line, the filling instrument used by the
// Dehn-filling dimension sweeps.
TypeD line_typeD(Slope s);

}  // namespace hfst
