#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "hfst/curves.hpp"
#include "hfst/pairing.hpp"

using namespace hfst;

namespace {

std::vector<Slope> slope_grid(int bound) {
  std::vector<Slope> slopes;
  slopes.push_back(Slope::canonical(1, 0));
  for (int q = 1; q <= bound; ++q)
    for (int p = -bound; p <= bound; ++p)
      if (std::gcd(std::abs(p), q) == 1) slopes.push_back(Slope::canonical(p, q));
  return slopes;
}

}  // namespace

TEST_CASE("word utilities") {
  CHECK(cyclic_reduce("lL") == "");
  CHECK(cyclic_reduce("lmM") == "l");
  CHECK(cyclic_reduce("MlmmlL") == "lm");  // free then cyclic reduction
  CHECK(invert_word("lm") == "ML");
  CHECK(cyclically_equal("lml", "llm"));
  CHECK(!cyclically_equal("lm", "lM"));
  CHECK(primitive_root("lmlm") == "lm");
  CHECK(primitive_root("llm") == "llm");
}

TEST_CASE("longitude power detection") {
  CHECK(is_longitude_power({"lll", false}).yes);
  CHECK(is_longitude_power({"lll", false}).exponent == 3);
  CHECK(is_longitude_power({"LLL", false}).exponent == -3);
  CHECK(!is_longitude_power({"lmlM", false}).yes);
  CHECK(!is_longitude_power({"m", false}).yes);
}

TEST_CASE("longitude power detection is invariant under rotation and "
          "inversion") {
  for (const char* word : {"lll", "llm", "lmlM", "mm", "lM"}) {
    std::string w = word;
    LongitudePower base = is_longitude_power({w, false});
    for (size_t r = 0; r < w.size(); ++r) {
      std::string rotated = w.substr(r) + w.substr(0, r);
      CHECK(is_longitude_power({rotated, false}).yes == base.yes);
      CHECK(is_longitude_power({invert_word(rotated), false}).yes == base.yes);
    }
  }
}

TEST_CASE("supported_near_longitude") {
  MultiCurve all_l{{{"lll", false}, {"l", true}}};
  CHECK(supported_near_longitude(all_l));
  MultiCurve with_m{{{"lll", false}, {"lm", false}}};
  CHECK(!supported_near_longitude(with_m));
  MultiCurve empty;
  CHECK(supported_near_longitude(empty));
}

TEST_CASE("commensurability") {
  CHECK(commensurable({"ll", false}, {"lll", false}));
  CHECK(!commensurable({"l", false}, {"m", false}));
  CHECK(!commensurable({"lmlM", false}, {"l", false}));
  CHECK(commensurable({"lm", false}, {"ML", false}));  // inverse pair
}

TEST_CASE("staircase words") {
  CHECK(staircase_word(Slope::canonical(1, 1)) == "lm");
  CHECK(staircase_word(Slope::canonical(-1, 1)) == "lM");
  CHECK(staircase_word(Slope::canonical(1, 2)) == "lml");
  CHECK(cyclically_equal(staircase_word(Slope::canonical(2, 1)), "lmm"));
  CHECK(staircase_word(Slope::canonical(2, 5)) == "lmlllml");
  CHECK(cyclically_equal(staircase_word(Slope::canonical(2, 5)), "lllmllm"));
  CHECK(staircase_word(Slope::canonical(0, 1)) == "l");
  CHECK(staircase_word(Slope::canonical(1, 0)) == "m");
}

TEST_CASE("component classification") {
  CHECK(classify_component({"lll", false}).kind == CurveClass::kLPower);
  CHECK(classify_component({"mm", false}).kind == CurveClass::kMPower);
  CHECK(classify_component({"lm", false}).kind == CurveClass::kLine);
  CHECK(classify_component({"lm", false}).slope == Slope::canonical(1, 1));
  CHECK(classify_component({"lml", false}).kind == CurveClass::kLine);
  CHECK(classify_component({"ML", false}).kind == CurveClass::kLine);
  CHECK(classify_component({"lmlm", false}).kind == CurveClass::kUnsupported);
  CHECK(classify_component({"lmlM", false}).kind == CurveClass::kUnsupported);
  CHECK(classify_component({"llmm", false}).kind == CurveClass::kUnsupported);
}

TEST_CASE("the cubed longitude gives exactly the r12 three-cycle") {
  MultiCurve c{{{"lll", false}}};
  TypeD t = curve_to_typeD(c);
  CHECK(check_typeD(t).ok);
  CHECK(isomorphic_typeD(t, builtin_fig3()));
}

TEST_CASE("the single longitude gives the r12 self-loop") {
  TypeD t = component_typeD({"l", false});
  REQUIRE(t.gens.size() == 1);
  CHECK(t.gens[0].idem == Alg::I0);
  REQUIRE(t.arrows.size() == 1);
  CHECK(t.arrows[0] == DArrow{0, Alg::R12, 0});
}

TEST_CASE("components without vertical letters have no i1 generators") {
  for (const char* word : {"l", "ll", "lll", "llll"}) {
    TypeD t = component_typeD({word, false});
    for (const DGen& g : t.gens) CHECK(g.idem == Alg::I0);
  }
}

TEST_CASE("every dictionary output passes the structure check") {
  for (Slope s : slope_grid(7)) {
    CAPTURE(s.to_string());
    TypeD t = line_typeD(s);
    CHECK(check_typeD(t).ok);
    // Crossing counts: q vertical-edge generators, |p| horizontal ones.
    int i0 = 0, i1 = 0;
    for (const DGen& g : t.gens) (g.idem == Alg::I0 ? i0 : i1)++;
    if (s.q > 0 && s.p != 0) {
      CHECK(i0 == s.q);
      CHECK(i1 == std::abs(s.p));
    }
  }
  for (const char* word : {"l", "ll", "lll", "m", "mm", "mmm"}) {
    CHECK(check_typeD(component_typeD({word, false})).ok);
  }
}

TEST_CASE("unsupported words are refused loudly") {
  CHECK_THROWS_AS(component_typeD({"lmlM", false}), UnsupportedCurveError);
  CHECK_THROWS_AS(component_typeD({"llmm", false}), UnsupportedCurveError);
}

TEST_CASE("line intersection dimension") {
  Slope zero = Slope::canonical(0, 1);
  CHECK(line_intersection_dim(zero, Slope::canonical(3, 5), 2) == 3);
  CHECK(line_intersection_dim(zero, zero, 2) == 2);
  // Distance between the dual slope and the longitude is 1.
  CHECK(line_intersection_dim(Slope::canonical(1, 0), zero, 2) == 1);
  CHECK(line_intersection_dim(Slope::canonical(1, 2), Slope::canonical(1, 3), 2)
        == 1);
}

TEST_CASE("slope canonicalization") {
  CHECK(Slope::canonical(2, 4) == Slope::canonical(1, 2));
  CHECK(Slope::canonical(-1, -2) == Slope::canonical(1, 2));
  CHECK(Slope::canonical(-3, 0) == Slope::canonical(1, 0));
  CHECK_THROWS_AS(Slope::canonical(0, 0), std::invalid_argument);
}

TEST_CASE("morphism pairing of line structures equals the intersection "
          "count on a small grid") {
  // The full |p|,|q| <= 7 sweep runs in the acceptance suite; this is the
  // same oracle on a |p|,|q| <= 3 grid.
  std::vector<Slope> slopes = slope_grid(3);
  for (Slope a : slopes) {
    TypeD ta = line_typeD(a);
    for (Slope b : slopes) {
      TypeD tb = line_typeD(b);
      int expect = line_intersection_dim(a, b, 2);
      CAPTURE(a.to_string() + " vs " + b.to_string());
      CHECK(mor_pairing(ta, tb).homology_dim() == expect);
    }
  }
}

TEST_CASE("pairing with the solid-torus module matches the longitude "
          "intersection count for lines") {
  // Pairing against the module realizes the longitude-line count: |p| for a
  // transverse slope, 2 for a parallel one, independent of wrapping.
  Slope zero = Slope::canonical(0, 1);
  for (Slope s : slope_grid(4)) {
    CAPTURE(s.to_string());
    CHECK(untwisted_pairing_dim(line_typeD(s)) ==
          line_intersection_dim(zero, s, 2));
  }
  for (int j = 1; j <= 4; ++j) {
    TypeD t = component_typeD({std::string(j, 'l'), false});
    CHECK(untwisted_pairing_dim(t) == 2);
    CHECK(twisted_pairing_dim(t) == 0);
  }
}

TEST_CASE("the through-basepoint vertical line pairs to dimension 1") {
  // Gluing the solid-torus module against its dual-slope line: dimension 1.
  MultiCurve c{{{"m", true}}};
  CHECK(untwisted_pairing_dim(curve_to_typeD(c)) == 1);
}

TEST_CASE("near-longitude supported curves have vanishing twisted pairing") {
  for (const char* word : {"l", "ll", "lll", "llll", "lllll"}) {
    MultiCurve c{{{word, false}}};
    CHECK(supported_near_longitude(c));
    CHECK(twisted_pairing_dim(curve_to_typeD(c)) == 0);
  }
  MultiCurve several{{{"l", true}, {"ll", false}, {"lll", false}}};
  CHECK(twisted_pairing_dim(curve_to_typeD(several)) == 0);
}

TEST_CASE("multicurve validation") {
  MultiCurve two_base{{{"l", true}, {"m", true}}};
  CHECK(!check_curve(two_base).ok);
  MultiCurve trivial{{{"lL", false}}};
  CHECK(!check_curve(trivial).ok);
  MultiCurve good{{{"l", true}, {"m", false}}};
  CHECK(check_curve(good).ok);
}

TEST_CASE("multi-component dictionary output is the disjoint union") {
  MultiCurve c{{{"l", false}, {"m", false}}};
  TypeD t = curve_to_typeD(c);
  CHECK(t.gens.size() == 2);
  CHECK(t.arrows.size() == 2);
  CHECK(check_typeD(t).ok);
  CHECK(t.gens[0].name.rfind("c0_", 0) == 0);
  CHECK(t.gens[1].name.rfind("c1_", 0) == 0);
}
