#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hfst/pairing.hpp"

using namespace hfst;

namespace {

TypeD r12_loop() {
  TypeD t;
  t.gens = {{"x", Alg::I0}};
  t.arrows = {{0, Alg::R12, 0}};
  return t;
}

TypeD r23_loop() {
  TypeD t;
  t.gens = {{"y", Alg::I1}};
  t.arrows = {{0, Alg::R23, 0}};
  return t;
}

// Ascending slope-1 line: two arrows u -> w labeled r1 and r3.
TypeD line_up() {
  TypeD t;
  t.gens = {{"u", Alg::I0}, {"w", Alg::I1}};
  t.arrows = {{0, Alg::R1, 1}, {0, Alg::R3, 1}};
  return t;
}

// Descending slope-1 line: the directed two-cycle r123 / r2.
TypeD line_down() {
  TypeD t;
  t.gens = {{"x", Alg::I0}, {"y", Alg::I1}};
  t.arrows = {{0, Alg::R123, 1}, {1, Alg::R2, 0}};
  return t;
}

TypeD arrowless_i0() {
  TypeD t;
  t.gens = {{"x", Alg::I0}};
  return t;
}

}  // namespace

TEST_CASE("box tensor with the arrowless structure: one differential") {
  PairedComplex c = box_tensor(builtin_solid_module(false), arrowless_i0());
  const auto& cc = std::get<ChainComplexF2>(c);
  REQUIRE(cc.dim() == 2);
  CHECK(cc.names()[0] == "x*p");
  CHECK(cc.names()[1] == "x*q");
  CHECK(cc.differential().at(1, 0) == 1);
  CHECK(cc.differential().at(0, 1) == 0);
  CHECK(cc.homology_dim() == 0);
}

TEST_CASE("box tensor with the r12 three-cycle, twisted: exactly the "
          "coefficient-t cyclic complex") {
  PairedComplex c = box_tensor(builtin_solid_module(true), builtin_fig3());
  const auto& cc = std::get<ChainComplexFt>(c);
  REQUIRE(cc.dim() == 6);
  // Basis pairs in structure order: vi*p, vi*q.
  std::vector<std::string> expect = {"v1*p", "v1*q", "v2*p",
                                     "v2*q", "v3*p", "v3*q"};
  CHECK(cc.names() == expect);
  RationalFn one = RationalFn::one();
  RationalFn t = RationalFn(LaurentPoly::t(1));
  for (int i = 0; i < 3; ++i) {
    int p_col = 2 * i, q_row = 2 * i + 1;
    int q_next = 2 * ((i + 1) % 3) + 1;
    CHECK(cc.differential().at(q_row, p_col) == one);
    CHECK(cc.differential().at(q_next, p_col) == t);
  }
  int nonzero = 0;
  for (int r = 0; r < 6; ++r)
    for (int col = 0; col < 6; ++col)
      if (!cc.differential().at(r, col).is_zero()) ++nonzero;
  CHECK(nonzero == 6);
  CHECK(cc.homology_dim() == 0);
}

TEST_CASE("box tensor with the r12 three-cycle, untwisted: dimension 2") {
  CHECK(untwisted_pairing_dim(builtin_fig3()) == 2);
  CHECK(twisted_pairing_dim(builtin_fig3()) == 0);
}

TEST_CASE("frozen pairing dimensions for the loop structures") {
  CHECK(untwisted_pairing_dim(r12_loop()) == 2);
  CHECK(twisted_pairing_dim(r12_loop()) == 0);
  // Pairing the solid-torus module against the vertical loop: dimension 1.
  CHECK(untwisted_pairing_dim(r23_loop()) == 1);
  CHECK(twisted_pairing_dim(r23_loop()) == 1);
  CHECK(untwisted_pairing_dim(line_up()) == 1);
  CHECK(twisted_pairing_dim(line_up()) == 1);
  CHECK(untwisted_pairing_dim(line_down()) == 1);
  CHECK(twisted_pairing_dim(line_down()) == 1);
}

TEST_CASE("twisted pairing vanishes for every all-i0 structure") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    TypeD p = random_typeD(seed, 1 + seed % 12, IdempotentPolicy::kAllI0);
    CAPTURE(seed);
    CHECK(twisted_pairing_dim(p) == 0);
  }
}

TEST_CASE("untwisted vanishing forces twisted vanishing, and the twisted "
          "dimension never exceeds the untwisted one") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    TypeD p = random_typeD(seed, 1 + seed % 12, IdempotentPolicy::kMixed);
    CAPTURE(seed);
    int untwisted = untwisted_pairing_dim(p);
    int twisted = twisted_pairing_dim(p);
    CHECK(twisted <= untwisted);
    if (untwisted == 0) CHECK(twisted == 0);
  }
}

TEST_CASE("pairing dimensions have the parity of the basis size") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    TypeD p = random_typeD(seed, 1 + seed % 10, IdempotentPolicy::kMixed);
    PairedComplex c = box_tensor(builtin_solid_module(false), p);
    const auto& cc = std::get<ChainComplexF2>(c);
    CHECK((cc.homology_dim() - cc.dim()) % 2 == 0);
  }
}

TEST_CASE("morphism pairing: frozen dimensions for line structures") {
  CHECK(mor_pairing(r12_loop(), r12_loop()).homology_dim() == 2);
  CHECK(mor_pairing(r23_loop(), r23_loop()).homology_dim() == 2);
  CHECK(mor_pairing(r12_loop(), r23_loop()).homology_dim() == 1);
  CHECK(mor_pairing(r23_loop(), r12_loop()).homology_dim() == 1);
  CHECK(mor_pairing(line_up(), line_up()).homology_dim() == 2);
  CHECK(mor_pairing(line_down(), line_down()).homology_dim() == 2);
  CHECK(mor_pairing(line_up(), line_down()).homology_dim() == 2);
  CHECK(mor_pairing(r12_loop(), line_up()).homology_dim() == 1);
  CHECK(mor_pairing(line_up(), r12_loop()).homology_dim() == 1);
}

TEST_CASE("identity morphism survives: mor(P, P) has dimension >= 1") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    TypeD p = random_typeD(seed, 1 + seed % 8, IdempotentPolicy::kMixed);
    CAPTURE(seed);
    CHECK(mor_pairing(p, p).homology_dim() >= 1);
  }
}

TEST_CASE("morphism complexes of random pairs are well formed with the "
          "parity of their basis") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    TypeD p1 = random_typeD(seed, 1 + seed % 7, IdempotentPolicy::kMixed);
    TypeD p2 = random_typeD(seed + 1000, 1 + (seed * 3) % 7,
                            IdempotentPolicy::kMixed);
    // Construction asserts d^2 = 0.
    ChainComplexF2 c = mor_pairing(p1, p2);
    CHECK((c.dim() - c.homology_dim()) % 2 == 0);
  }
}

TEST_CASE("box tensor feeds iterated delta sequences into longer actions") {
  // m3(a, r2, r1) = b is a valid action set on its own: the composition
  // r2*r1 vanishes, so no shorter partner is forced.
  AInftyMod x;
  x.ring = RingTag::kF2;
  x.gens = {{"a", Alg::I1}, {"b", Alg::I1}};
  x.add_action(0, {Alg::R2, Alg::R1}, LaurentPoly::one(), 1);
  REQUIRE(check_ainfty(x).ok);
  CHECK(*is_bounded(x).witness == 3);

  TypeD p;  // y -r2-> z -r1-> w, a two-step delta path with zero product
  p.gens = {{"y", Alg::I1}, {"z", Alg::I0}, {"w", Alg::I1}};
  p.arrows = {{0, Alg::R2, 1}, {1, Alg::R1, 2}};
  REQUIRE(check_typeD(p).ok);

  PairedComplex c = box_tensor(x, p);
  const auto& cc = std::get<ChainComplexF2>(c);
  REQUIRE(cc.dim() == 4);  // a,b against y,w
  int nonzero = 0;
  for (int r = 0; r < 4; ++r)
    for (int col = 0; col < 4; ++col) nonzero += cc.differential().at(r, col);
  CHECK(nonzero == 1);  // exactly a*y -> b*w
  CHECK(cc.homology_dim() == 2);
}

TEST_CASE("box tensor refuses idempotent-incompatible stored actions") {
  AInftyMod bad = builtin_solid_module(false);
  // m(p, r2): r2 needs i1 on the left but p carries i0.
  bad.actions[{1, {Alg::R2}}] = {{LaurentPoly::one(), 0}};
  CHECK_THROWS_AS(box_tensor(bad, builtin_fig3()), PairingError);
}

TEST_CASE("zero differential: homology is the whole space") {
  DenseMatrix<uint8_t> z(4, 4);
  ChainComplexF2 c("f2", {"a", "b", "c", "d"}, std::move(z));
  CHECK(c.homology_dim() == 4);
}

TEST_CASE("a differential that does not square to zero is rejected") {
  // d(a) = b, d(b) = c: d^2(a) = c.
  DenseMatrix<uint8_t> d(3, 3);
  d.at(1, 0) = 1;
  d.at(2, 1) = 1;
  CHECK_THROWS_AS(ChainComplexF2("f2", {"a", "b", "c"}, std::move(d)),
                  StructureError);
}

TEST_CASE("complex dump format") {
  PairedComplex c = box_tensor(builtin_solid_module(false), arrowless_i0());
  CHECK(dump(c) == "basis: x*p x*q\nd x*p 1 x*q\n");
}
