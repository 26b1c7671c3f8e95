#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hfst/hfst.hpp"
#include "hfst/io.hpp"

using namespace hfst;

namespace {

MultiCurve solid_torus() { return {{{"l", true}}}; }

// A hand-entered mixed-idempotent structure of the admissible-pair kind: a
// curve class disjoint from the longitude but not parallel to it.  The
// untwisted pairing already vanishes, so the twisted one does too.
TypeD admissible_example() {
  TypeD t;
  t.gens = {{"x1", Alg::I0}, {"x2", Alg::I0}, {"y1", Alg::I1},
            {"y2", Alg::I1}};
  t.arrows = {{0, Alg::R1, 2}, {0, Alg::R1, 3}, {1, Alg::R1, 2},
              {1, Alg::R1, 3}, {2, Alg::R2, 1}, {3, Alg::R2, 1}};
  return t;
}

}  // namespace

TEST_CASE("filling dimensions of the solid torus are constantly 1") {
  for (const auto& [k, dim] : filling_dims(solid_torus(), 6)) {
    CAPTURE(k);
    CHECK(dim == 1);
  }
}

TEST_CASE("filling dimensions of the near-longitude triple cover are "
          "constantly 3") {
  MultiCurve c{{{"lll", false}}};
  for (const auto& [k, dim] : filling_dims(c, 5)) {
    CAPTURE(k);
    CHECK(dim == 3);
  }
}

TEST_CASE("filling dimensions of the slope-1 line follow the determinant "
          "progression") {
  MultiCurve c{{{"lm", false}}};
  for (const auto& [k, dim] : filling_dims(c, 4)) {
    int expect = k == 1 ? 2 : std::abs(k - 1);
    CAPTURE(k);
    CHECK(dim == expect);
  }
}

TEST_CASE("filling dimensions of the vertical line") {
  MultiCurve c{{{"m", false}}};
  for (const auto& [k, dim] : filling_dims(c, 4)) {
    int expect = k == 0 ? 2 : std::abs(k);
    CAPTURE(k);
    CHECK(dim == expect);
  }
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(filling_dims(solid_torus(), 0), std::invalid_argument);
}

TEST_CASE("verdicts for the supported corpus") {
  CHECK(is_hfst(MultiCurve{{{"l", true}}}).is_hfst);
  CHECK(is_hfst(MultiCurve{{{"lll", false}}}).is_hfst);
  CHECK(is_hfst(MultiCurve{{{"l", true}, {"ll", false}}}).is_hfst);
  CHECK(!is_hfst(MultiCurve{{{"m", false}}}).is_hfst);
  CHECK(!is_hfst(MultiCurve{{{"lm", false}}}).is_hfst);
  CHECK(!is_hfst(MultiCurve{{{"l", false}, {"m", false}}}).is_hfst);
}

TEST_CASE("verdict carries the evidence channels") {
  HfstVerdict v = is_hfst(MultiCurve{{{"lll", false}}});
  CHECK(v.is_hfst);
  CHECK(v.twisted_vanishing);
  CHECK(v.condition2_constant);
  REQUIRE(v.condition3_supported.has_value());
  CHECK(*v.condition3_supported);
  CHECK(v.window == 5);  // three generators plus two
  CHECK(v.condition2_dims.size() == 11);

  HfstVerdict w = is_hfst(MultiCurve{{{"lm", false}}}, 3);
  CHECK(!w.is_hfst);
  CHECK(!w.twisted_vanishing);
  CHECK(!w.condition2_constant);
  CHECK(!*w.condition3_supported);
  CHECK(w.window == 3);
}

TEST_CASE("hand-entered admissible-pair structure is a solid-torus-like "
          "verdict through the untwisted route") {
  TypeD t = admissible_example();
  REQUIRE(check_typeD(t).ok);
  CHECK(untwisted_pairing_dim(t) == 0);
  CHECK(twisted_pairing_dim(t) == 0);
  HfstVerdict v = is_hfst(HfstInput{t});
  CHECK(v.is_hfst);
  CHECK(!v.condition3_supported.has_value());
  CHECK(v.condition2_constant);
}

TEST_CASE("twisted vanishing implies constant dimensions far outside the "
          "default window") {
  for (const HfstInput& input :
       {HfstInput{MultiCurve{{{"l", true}}}},
        HfstInput{MultiCurve{{{"lll", false}}}},
        HfstInput{admissible_example()}}) {
    HfstVerdict v = is_hfst(input);
    REQUIRE(v.twisted_vanishing);
    const MultiCurve* c = std::get_if<MultiCurve>(&input);
    TypeD p = c ? curve_to_typeD(*c) : std::get<TypeD>(input);
    int far = 5 * v.window;
    int base = v.condition2_dims.front().second;
    CHECK(filling_dim(p, far) == base);
    CHECK(filling_dim(p, -far) == base);
  }
}

TEST_CASE("triangle rank check") {
  CHECK(triangle_rank_check(1, 1, 0) == TriangleCheck::kOk);
  CHECK(triangle_rank_check(1, 2, 0) == TriangleCheck::kViolation);
  CHECK(triangle_rank_check(0, 0, 0) == TriangleCheck::kOk);
  CHECK(triangle_rank_check(2, 1, 1) == TriangleCheck::kOk);
  CHECK(triangle_rank_check(5, 1, 1) == TriangleCheck::kViolation);
  CHECK(triangle_rank_check(-1, 1, 0) == TriangleCheck::kViolation);
}

TEST_CASE("surgery triples from the solid torus pass the triangle check") {
  TypeD p = curve_to_typeD(solid_torus());
  int d_lambda = twisted_pairing_dim(p);
  CHECK(d_lambda == 0);
  for (int k = -5; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(triangle_rank_check(filling_dim(p, k), filling_dim(p, k + 1),
                              d_lambda) == TriangleCheck::kOk);
  }
}

TEST_CASE("surgery triples from supported inputs pass the triangle check") {
  std::vector<MultiCurve> inputs = {
      {{{"lm", false}}},  {{{"lM", false}}},          {{{"lmm", false}}},
      {{{"lml", false}}}, {{{"m", false}}},           {{{"ll", false}}},
      {{{"lll", false}}}, {{{"l", false}, {"m", false}}},
      {{{"mm", false}}},  {{{"lm", false}, {"ll", false}}}};
  for (const MultiCurve& c : inputs) {
    TypeD p = curve_to_typeD(c);
    int d_lambda = twisted_pairing_dim(p);
    for (int k = -5; k <= 5; ++k) {
      CAPTURE(print_curve(c) + " k=" + std::to_string(k));
      CHECK(triangle_rank_check(filling_dim(p, k), filling_dim(p, k + 1),
                                d_lambda) == TriangleCheck::kOk);
    }
  }
}

TEST_CASE("raw type D input: verdict works without the curve channel") {
  TypeD fig3 = builtin_fig3();
  HfstVerdict v = is_hfst(HfstInput{fig3});
  CHECK(v.is_hfst);
  CHECK(!v.condition3_supported.has_value());
}

TEST_CASE("invalid type D input is rejected") {
  TypeD bad;
  bad.gens = {{"x", Alg::I0}};
  bad.arrows = {{0, Alg::I0, 0}};
  CHECK_THROWS_AS(is_hfst(HfstInput{bad}), std::invalid_argument);
}
