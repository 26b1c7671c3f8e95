// Type D structures over the torus algebra: idempotent-labeled generators
// with a delta map whose terms are (chord, generator) pairs.  Only reduced
// models are stored: idempotent arrow labels are invalid.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfst/algebra.hpp"

namespace hfst {

struct DGen {
  std::string name;
  Alg idem;  // I0 or I1
};

struct DArrow {
  int src;
  Alg label;
  int dst;
  bool operator==(const DArrow&) const = default;
};

struct TypeD {
  std::vector<DGen> gens;
  std::vector<DArrow> arrows;  // formal F2 sum: duplicates cancel in pairs

  int find_gen(const std::string& name) const;
  // Canonical order (by src, label, dst) with mod-2 duplicate cancellation.
  void canonicalize();
  // Disjoint union; other's generator names get `prefix` prepended.
  void append(const TypeD& other, const std::string& prefix);
};

struct ValidityReport {
  bool ok = true;
  std::string message;  // names the offending generator/term when !ok
};

// Both invariants: idempotent compatibility of every arrow, and the
// structure equation (all length-2 arrow compositions cancel over F2).
ValidityReport check_typeD(const TypeD& p);

struct BoundednessCertificate {
  bool bounded = false;
  // TypeD: nilpotence degree of the arrow graph (smallest k with the
  // k-fold delta iterate zero).  A-infinity modules: maximum stored action
  // length.  Unset when unbounded.
  std::optional<int> witness;
};

BoundednessCertificate is_bounded(const TypeD& p);

enum class IdempotentPolicy { kAllI0, kMixed };

// Deterministic in `seed`; output always passes check_typeD.  Generation is
// rejection sampling capped at 10^4 proposals, then a constructive fallback
// assembled from known-valid loops.
TypeD random_typeD(uint64_t seed, int n_generators, IdempotentPolicy policy);

// True when the two structures differ only by a renaming of generators.
// Brute force over permutations; meant for small fixtures.
bool isomorphic_typeD(const TypeD& a, const TypeD& b);

}  // namespace hfst
