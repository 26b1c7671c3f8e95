// Decision procedures for Heegaard Floer homology solid tori.
//
// Input is a longitude-framed object: either a supported multicurve or a
// type D structure declared to be in the longitude framing.  The verdict of
// record is vanishing of the twisted pairing over F2(t); the Dehn-filling
// dimension sweep and the near-longitude support test are corroborating
// evidence and must agree, otherwise the run aborts with a consistency
// error.
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hfst/curves.hpp"
#include "hfst/pairing.hpp"

namespace hfst {

struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using HfstInput = std::variant<MultiCurve, TypeD>;

// Dimension of the filling along (vertical + k * horizontal) for
// k in [-window, window], computed as the morphism pairing against the
// slope-1/k line structure.  For multicurves of primitive line components
// the result is cross-checked against the geometric intersection count.
std::vector<std::pair<int, int>> filling_dims(const HfstInput& input,
                                              int window);

// Single filling dimension at slope 1/k.
int filling_dim(const TypeD& p, int k);

struct HfstVerdict {
  bool is_hfst = false;
  bool twisted_vanishing = false;
  bool condition2_constant = false;
  std::optional<bool> condition3_supported;  // absent for raw type D input
  int window = 0;
  std::vector<std::pair<int, int>> condition2_dims;
};

// window <= 0 selects the default, generator count + 2.
HfstVerdict is_hfst(const HfstInput& input, int window = 0);

enum class TriangleCheck { kOk, kViolation };

// Rank consequences of a long exact triangle: the three dimensions must
// satisfy all cyclic triangle inequalities and have even total parity.
TriangleCheck triangle_rank_check(int d_mu, int d_mu_lambda, int d_lambda);

}  // namespace hfst
