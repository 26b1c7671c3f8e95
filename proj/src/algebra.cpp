#include "hfst/algebra.hpp"

namespace hfst {

namespace {

// Chord interval [start,end], or {0,0} for idempotents.
struct Span {
  int s, e;
};

Span span_of(Alg a) {
  switch (a) {
    case Alg::R1: return {1, 1};
    case Alg::R2: return {2, 2};
    case Alg::R3: return {3, 3};
    case Alg::R12: return {1, 2};
    case Alg::R23: return {2, 3};
    case Alg::R123: return {1, 3};
    default: return {0, 0};
  }
}

bool chord_of(int s, int e, Alg* out) {
  if (s == 1 && e == 1) { *out = Alg::R1; return true; }
  if (s == 2 && e == 2) { *out = Alg::R2; return true; }
  if (s == 3 && e == 3) { *out = Alg::R3; return true; }
  if (s == 1 && e == 2) { *out = Alg::R12; return true; }
  if (s == 2 && e == 3) { *out = Alg::R23; return true; }
  if (s == 1 && e == 3) { *out = Alg::R123; return true; }
  return false;
}

}  // namespace

bool is_idempotent(Alg a) { return a == Alg::I0 || a == Alg::I1; }

Alg left_idem(Alg a) {
  if (is_idempotent(a)) return a;
  return (span_of(a).s % 2 == 1) ? Alg::I0 : Alg::I1;
}

Alg right_idem(Alg a) {
  if (is_idempotent(a)) return a;
  return (span_of(a).e % 2 == 1) ? Alg::I1 : Alg::I0;
}

bool mul_basis(Alg a, Alg b, Alg* out) {
  if (is_idempotent(a)) {
    if (a == left_idem(b)) { *out = b; return true; }
    return false;
  }
  if (is_idempotent(b)) {
    if (b == right_idem(a)) { *out = a; return true; }
    return false;
  }
  Span sa = span_of(a), sb = span_of(b);
  if (sa.e + 1 != sb.s) return false;
  return chord_of(sa.s, sb.e, out);
}

const char* alg_name(Alg a) {
  switch (a) {
    case Alg::I0: return "i0";
    case Alg::I1: return "i1";
    case Alg::R1: return "r1";
    case Alg::R2: return "r2";
    case Alg::R3: return "r3";
    case Alg::R12: return "r12";
    case Alg::R23: return "r23";
    case Alg::R123: return "r123";
  }
  return "?";
}

bool alg_from_name(const std::string& s, Alg* out) {
  for (Alg a : kAlgBasis) {
    if (s == alg_name(a)) { *out = a; return true; }
  }
  return false;
}

AlgebraElement alg_mul(AlgebraElement a, AlgebraElement b) {
  AlgebraElement r;
  for (Alg x : kAlgBasis) {
    if (!a.has(x)) continue;
    for (Alg y : kAlgBasis) {
      if (!b.has(y)) continue;
      Alg p;
      if (mul_basis(x, y, &p)) r = r + AlgebraElement::basis(p);
    }
  }
  return r;
}

std::string alg_to_string(AlgebraElement a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (Alg x : kAlgBasis) {
    if (!a.has(x)) continue;
    if (!s.empty()) s += "+";
    s += alg_name(x);
  }
  return s;
}

}  // namespace hfst
