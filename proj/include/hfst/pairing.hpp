// Pairings: box tensor product of an A-infinity module with a type D
// structure, and the morphism complex of two type D structures.
//
// Coefficient field for the twisted pairing.  Twisted invariants live over
// the semi-infinite Laurent series field; computationally we work over the
// rational-function field F2(t) instead.  For a finitely generated complex
// whose differential has Laurent-polynomial entries, the homology dimension
// over any field containing F2[t,t^-1] is the rank of the homology over
// F2[t,t^-1], a PID, so the dimension is the same over both fields.  The
// all-i0 vanishing statement also survives the substitution: there the
// differential block from the p-generators to the q-generators is I + tN,
// whose determinant is a polynomial with constant term 1, hence nonzero in
// F2(t).
#pragma once

#include <variant>

#include "hfst/ainfty.hpp"
#include "hfst/chain_complex.hpp"
#include "hfst/typed.hpp"

namespace hfst {

struct PairingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using PairedComplex = std::variant<ChainComplexF2, ChainComplexFt>;

// Generators are the idempotent-matched pairs, named "<Pgen>*<Xgen>".  The
// differential feeds iterated delta sequences of P (up to one less than the
// maximal action length of X) into the actions of X.  Refuses when both
// factors are unbounded or when a stored action violates idempotent typing.
// Result is over F2 or over F2(t) according to the ring of X.
PairedComplex box_tensor(const AInftyMod& x, const TypeD& p);

inline int homology_dim(const PairedComplex& c) {
  return std::visit([](const auto& cc) { return cc.homology_dim(); }, c);
}
inline std::string dump(const PairedComplex& c) {
  return std::visit([](const auto& cc) { return cc.dump(); }, c);
}

// Twisted-coefficient homology dimension of the pairing with the twisted
// solid-torus module, over F2(t).  The decisive vanishing test.
int twisted_pairing_dim(const TypeD& p);
// Untwisted counterpart over F2.
int untwisted_pairing_dim(const TypeD& p);

// Morphism complex of two type D structures over F2.  Basis elements are
// idempotent-sandwiched triples "<x1>><a>><x2>"; always finite, no
// boundedness hypothesis needed.
ChainComplexF2 mor_pairing(const TypeD& p1, const TypeD& p2);

}  // namespace hfst
