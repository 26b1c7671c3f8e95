#include "hfst/hfst.hpp"

#include <algorithm>

namespace hfst {

namespace {

Slope filling_slope(int k) { return Slope::canonical(1, k); }

bool all_primitive_lines(const MultiCurve& c) {
  for (const CurveComponent& comp : c.components) {
    CurveClass cls = classify_component(comp);
    if (cls.kind == CurveClass::kLine) continue;
    if ((cls.kind == CurveClass::kLPower || cls.kind == CurveClass::kMPower) &&
        std::abs(cls.wrap) == 1)
      continue;
    return false;
  }
  return true;
}

int geometric_filling_dim(const MultiCurve& c, Slope filling) {
  int total = 0;
  for (const CurveComponent& comp : c.components)
    total += line_intersection_dim(classify_component(comp).slope, filling, 2);
  return total;
}

}  // namespace

int filling_dim(const TypeD& p, int k) {
  return mor_pairing(line_typeD(filling_slope(k)), p).homology_dim();
}

std::vector<std::pair<int, int>> filling_dims(const HfstInput& input,
                                              int window) {
  if (window < 1) throw std::invalid_argument("filling_dims: window >= 1");
  const MultiCurve* curve = std::get_if<MultiCurve>(&input);
  TypeD p = curve ? curve_to_typeD(*curve) : std::get<TypeD>(input);
  ValidityReport v = check_typeD(p);
  if (!v.ok) throw std::invalid_argument("filling_dims: " + v.message);

  std::vector<std::pair<int, int>> dims(2 * window + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (window > 8)
#endif
  for (int i = 0; i <= 2 * window; ++i) {
    int k = i - window;
    dims[i] = {k, filling_dim(p, k)};
  }
  if (curve && all_primitive_lines(*curve)) {
    for (const auto& [k, dim] : dims) {
      int geo = geometric_filling_dim(*curve, filling_slope(k));
      if (geo != dim)
        throw ConsistencyError(
            "filling dimension disagrees with the intersection count at k=" +
            std::to_string(k) + ": pairing " + std::to_string(dim) +
            ", geometric " + std::to_string(geo));
    }
  }
  return dims;
}

HfstVerdict is_hfst(const HfstInput& input, int window) {
  const MultiCurve* curve = std::get_if<MultiCurve>(&input);
  TypeD p = curve ? curve_to_typeD(*curve) : std::get<TypeD>(input);
  ValidityReport v = check_typeD(p);
  if (!v.ok) throw std::invalid_argument("is_hfst: " + v.message);

  HfstVerdict verdict;
  verdict.window =
      window > 0 ? window : static_cast<int>(p.gens.size()) + 2;
  verdict.twisted_vanishing = twisted_pairing_dim(p) == 0;
  verdict.condition2_dims = filling_dims(input, verdict.window);
  verdict.condition2_constant = true;
  for (const auto& [k, dim] : verdict.condition2_dims)
    if (dim != verdict.condition2_dims.front().second)
      verdict.condition2_constant = false;
  if (curve) verdict.condition3_supported = supported_near_longitude(*curve);

  verdict.is_hfst = verdict.twisted_vanishing;
  if (verdict.condition2_constant != verdict.twisted_vanishing ||
      (verdict.condition3_supported &&
       *verdict.condition3_supported != verdict.twisted_vanishing)) {
    std::string dump = "evidence channels disagree: twisted_vanishing=" +
                       std::to_string(verdict.twisted_vanishing) +
                       " condition2_constant=" +
                       std::to_string(verdict.condition2_constant);
    if (verdict.condition3_supported)
      dump += " condition3_supported=" +
              std::to_string(*verdict.condition3_supported);
    dump += " dims=";
    for (const auto& [k, dim] : verdict.condition2_dims)
      dump += "(" + std::to_string(k) + "," + std::to_string(dim) + ")";
    throw ConsistencyError(dump);
  }
  return verdict;
}

TriangleCheck triangle_rank_check(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return TriangleCheck::kViolation;
  if ((a + b + c) % 2) return TriangleCheck::kViolation;
  if (a > b + c || b > a + c || c > a + b) return TriangleCheck::kViolation;
  return TriangleCheck::kOk;
}

}  // namespace hfst
