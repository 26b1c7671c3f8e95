#include "hfst/ainfty.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfst {

int AInftyMod::find_gen(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

void AInftyMod::add_action(int src, std::vector<Alg> inputs, LaurentPoly coeff,
                           int dst) {
  auto& terms = actions[{src, std::move(inputs)}];
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (it->gen != dst) continue;
    it->coeff = it->coeff + coeff;
    if (it->coeff.is_zero()) terms.erase(it);
    return;
  }
  if (!coeff.is_zero()) terms.push_back({std::move(coeff), dst});
  std::sort(terms.begin(), terms.end(),
            [](const ATerm& a, const ATerm& b) { return a.gen < b.gen; });
}

int AInftyMod::max_action_length() const {
  int best = 0;
  for (const auto& [key, terms] : actions) {
    if (terms.empty()) continue;
    best = std::max(best, static_cast<int>(key.second.size()) + 1);
  }
  return best;
}

namespace {

// m(x, inputs) as a list of (coeff, gen); empty when not stored.
const std::vector<ATerm>* lookup(const AInftyMod& m, int x,
                                 const std::vector<Alg>& inputs) {
  auto it = m.actions.find({x, inputs});
  return it == m.actions.end() ? nullptr : &it->second;
}

// Accumulates coeff * m(x, inputs) into `acc` (indexed by generator).
void accumulate(const AInftyMod& m, int x, const std::vector<Alg>& inputs,
                const LaurentPoly& coeff, std::vector<LaurentPoly>* acc) {
  if (const auto* terms = lookup(m, x, inputs)) {
    for (const ATerm& t : *terms)
      (*acc)[t.gen] = (*acc)[t.gen] + coeff * t.coeff;
  }
}

}  // namespace

ValidityReport check_ainfty(const AInftyMod& m) {
  for (size_t i = 0; i < m.gens.size(); ++i) {
    if (m.gens[i].idem != Alg::I0 && m.gens[i].idem != Alg::I1)
      return {false, "generator " + m.gens[i].name + ": bad idempotent"};
    for (size_t j = 0; j < i; ++j)
      if (m.gens[j].name == m.gens[i].name)
        return {false, "duplicate generator name " + m.gens[i].name};
  }
  for (const auto& [key, terms] : m.actions) {
    const auto& [src, inputs] = key;
    if (src < 0 || src >= static_cast<int>(m.gens.size()))
      return {false, "action source out of range"};
    const std::string& sn = m.gens[src].name;
    Alg idem = m.gens[src].idem;
    for (Alg a : inputs) {
      if (is_idempotent(a))
        return {false, "action on " + sn + ": idempotent algebra input"};
      if (left_idem(a) != idem)
        return {false, "action on " + sn + ": idempotent mismatch in inputs"};
      idem = right_idem(a);
    }
    for (const ATerm& t : terms) {
      if (t.gen < 0 || t.gen >= static_cast<int>(m.gens.size()))
        return {false, "action target out of range"};
      if (m.gens[t.gen].idem != idem)
        return {false, "action on " + sn + " -> " + m.gens[t.gen].name +
                           ": idempotent mismatch at target"};
      if (t.coeff.is_zero())
        return {false, "action on " + sn + ": zero coefficient stored"};
      if (m.ring == RingTag::kF2 && !t.coeff.is_one())
        return {false, "action on " + sn + ": non-F2 coefficient " +
                           t.coeff.to_string() + " under ring f2"};
    }
  }

  // A-infinity relations, enumerated over all composable chord sequences.
  // With at most k algebra inputs per stored action, every term of a
  // relation of length above 2k contains an unstored action, so checking up
  // to max(k+2, 2k) decides all relations that can fire.
  int stored_inputs = std::max(m.max_action_length() - 1, 0);
  int max_inputs = std::max(stored_inputs + 2, 2 * stored_inputs);
  int n = static_cast<int>(m.gens.size());
  std::vector<std::vector<Alg>> seqs;
  std::vector<Alg> cur;
  auto extend = [&](auto&& self, Alg right) -> void {
    seqs.push_back(cur);
    if (static_cast<int>(cur.size()) >= max_inputs) return;
    for (Alg a : kChords) {
      if (left_idem(a) != right) continue;
      cur.push_back(a);
      self(self, right_idem(a));
      cur.pop_back();
    }
  };

  for (int x = 0; x < n; ++x) {
    seqs.clear();
    cur.clear();
    extend(extend, m.gens[x].idem);
    for (const auto& seq : seqs) {
      std::vector<LaurentPoly> total(n);
      int len = static_cast<int>(seq.size());
      // Composition terms: m(m(x, a_1..a_j), a_{j+1}..a_len).
      for (int j = 0; j <= len; ++j) {
        std::vector<Alg> head(seq.begin(), seq.begin() + j);
        std::vector<Alg> tail(seq.begin() + j, seq.end());
        if (const auto* inner = lookup(m, x, head)) {
          for (const ATerm& t : *inner)
            accumulate(m, t.gen, tail, t.coeff, &total);
        }
      }
      // Multiplication terms: m(x, ..., a_i a_{i+1}, ...).
      for (int i = 0; i + 1 < len; ++i) {
        Alg prod;
        if (!mul_basis(seq[i], seq[i + 1], &prod)) continue;
        std::vector<Alg> merged;
        merged.reserve(len - 1);
        merged.insert(merged.end(), seq.begin(), seq.begin() + i);
        merged.push_back(prod);
        merged.insert(merged.end(), seq.begin() + i + 2, seq.end());
        accumulate(m, x, merged, LaurentPoly::one(), &total);
      }
      for (int g = 0; g < n; ++g) {
        if (!total[g].is_zero()) {
          std::string inputs;
          for (Alg a : seq) inputs += std::string(" ") + alg_name(a);
          return {false, "A-infinity relation fails on (" + m.gens[x].name +
                             inputs + "): residue " + total[g].to_string() +
                             " at " + m.gens[g].name};
        }
      }
    }
  }
  return {};
}

BoundednessCertificate is_bounded(const AInftyMod& m) {
  return {true, m.max_action_length()};
}

AInftyMod builtin_solid_module(bool twisted) {
  AInftyMod m;
  m.ring = twisted ? RingTag::kLaurent : RingTag::kF2;
  m.gens = {{"n", Alg::I1}, {"p", Alg::I0}, {"q", Alg::I0}};
  int n = 0, p = 1, q = 2;
  LaurentPoly one = LaurentPoly::one();
  LaurentPoly tq = twisted ? LaurentPoly::t(1) : one;
  m.add_action(p, {}, one, q);
  m.add_action(p, {Alg::R1}, one, n);
  m.add_action(n, {Alg::R2}, tq, q);
  m.add_action(p, {Alg::R12}, tq, q);
  return m;
}

TypeD builtin_fig3() {
  TypeD t;
  t.gens = {{"v1", Alg::I0}, {"v2", Alg::I0}, {"v3", Alg::I0}};
  t.arrows = {{0, Alg::R12, 1}, {1, Alg::R12, 2}, {2, Alg::R12, 0}};
  return t;
}

std::variant<AInftyMod, TypeD> builtin(const std::string& name) {
  if (name == "S_untwisted_bounded") return builtin_solid_module(false);
  if (name == "S_twisted_bounded") return builtin_solid_module(true);
  if (name == "fig3_typeD") return builtin_fig3();
  throw std::invalid_argument("unknown builtin: " + name);
}

}  // namespace hfst
