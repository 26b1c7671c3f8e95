// A-infinity modules over the torus algebra with exact coefficients in F2
// or in Laurent polynomials over F2.  An action entry encodes
//   m_{k+1}(x, a_1, ..., a_k) = sum of coeff * y
// keyed by (x, [a_1..a_k]); the a_i are non-idempotent basis chords.
#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hfst/algebra.hpp"
#include "hfst/laurent.hpp"
#include "hfst/typed.hpp"

namespace hfst {

enum class RingTag { kF2, kLaurent };

struct AGen {
  std::string name;
  Alg idem;
};

// Module-element term with ring coefficient.
struct ATerm {
  LaurentPoly coeff;
  int gen;
  bool operator==(const ATerm&) const = default;
};

using ActionKey = std::pair<int, std::vector<Alg>>;

struct AInftyMod {
  RingTag ring = RingTag::kF2;
  std::vector<AGen> gens;
  std::map<ActionKey, std::vector<ATerm>> actions;

  int find_gen(const std::string& name) const;
  // Adds coeff * dst to the action m(src, inputs); like terms combine and
  // zero entries are dropped.
  void add_action(int src, std::vector<Alg> inputs, LaurentPoly coeff, int dst);
  // Largest stored action length (module input plus algebra inputs);
  // 1 when only differentials are stored, 0 for the trivial module.
  int max_action_length() const;
};

// Idempotent compatibility of every stored action, F2 coefficients when the
// ring tag is F2, and the A-infinity relations for all composable input
// sequences up to the longest stored action plus two.
ValidityReport check_ainfty(const AInftyMod& m);

// A stored module has finitely many actions, hence is always bounded; the
// witness reports the maximum action length.
BoundednessCertificate is_bounded(const AInftyMod& m);

// Built-in objects.  "S_untwisted_bounded" and "S_twisted_bounded" are the
// bounded models of the zero-framed solid torus module, untwisted and with
// Laurent-twisted coefficients; "fig3_typeD" is the three-generator cycle
// of r12 arrows.
//
// The solid torus also has a one-generator unbounded model
//   n = m3(n,r2,r1) = m4(n,r2,r12,r1) = m5(n,r2,r12,r12,r1) = ...
// (twisted: the length-k action carries t^(k-2)).  Its action family is
// infinite, so it cannot be stored here; the box tensor precondition always
// asks for the bounded three-generator model instead.
std::variant<AInftyMod, TypeD> builtin(const std::string& name);

AInftyMod builtin_solid_module(bool twisted);
TypeD builtin_fig3();

}  // namespace hfst
