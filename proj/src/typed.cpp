#include "hfst/typed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hfst {

int TypeD::find_gen(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

void TypeD::canonicalize() {
  auto key = [](const DArrow& a) {
    return std::tuple(a.src, static_cast<int>(a.label), a.dst);
  };
  std::sort(arrows.begin(), arrows.end(),
            [&](const DArrow& a, const DArrow& b) { return key(a) < key(b); });
  std::vector<DArrow> out;
  for (size_t i = 0; i < arrows.size();) {
    size_t j = i;
    while (j < arrows.size() && arrows[j] == arrows[i]) ++j;
    if ((j - i) % 2) out.push_back(arrows[i]);
    i = j;
  }
  arrows = std::move(out);
}

void TypeD::append(const TypeD& other, const std::string& prefix) {
  int base = static_cast<int>(gens.size());
  for (const DGen& g : other.gens) gens.push_back({prefix + g.name, g.idem});
  for (const DArrow& a : other.arrows)
    arrows.push_back({a.src + base, a.label, a.dst + base});
}

ValidityReport check_typeD(const TypeD& p) {
  for (size_t i = 0; i < p.gens.size(); ++i) {
    if (p.gens[i].idem != Alg::I0 && p.gens[i].idem != Alg::I1)
      return {false, "generator " + p.gens[i].name + ": bad idempotent"};
    for (size_t j = 0; j < i; ++j)
      if (p.gens[j].name == p.gens[i].name)
        return {false, "duplicate generator name " + p.gens[i].name};
  }
  for (const DArrow& a : p.arrows) {
    if (a.src < 0 || a.src >= static_cast<int>(p.gens.size()) || a.dst < 0 ||
        a.dst >= static_cast<int>(p.gens.size()))
      return {false, "arrow endpoint out of range"};
    const std::string& sn = p.gens[a.src].name;
    if (is_idempotent(a.label))
      return {false, "arrow " + sn + " -> " + p.gens[a.dst].name +
                         ": idempotent label " + alg_name(a.label) +
                         " is not allowed in a reduced model"};
    if (left_idem(a.label) != p.gens[a.src].idem ||
        right_idem(a.label) != p.gens[a.dst].idem)
      return {false, "arrow " + sn + " -" + alg_name(a.label) + "-> " +
                         p.gens[a.dst].name + ": idempotent mismatch"};
  }
  // Structure equation: for each generator pair, the composite labels of
  // all length-2 arrow paths must cancel over F2.
  std::map<std::tuple<int, int, Alg>, int> par;
  for (const DArrow& a : p.arrows) {
    for (const DArrow& b : p.arrows) {
      if (a.dst != b.src) continue;
      Alg prod;
      if (mul_basis(a.label, b.label, &prod))
        par[{a.src, b.dst, prod}] ^= 1;
    }
  }
  for (const auto& [k, v] : par) {
    if (v) {
      auto [src, dst, prod] = k;
      return {false, "structure equation fails at " + p.gens[src].name +
                         " -> " + p.gens[dst].name + " (label " +
                         alg_name(prod) + ")"};
    }
  }
  return {};
}

BoundednessCertificate is_bounded(const TypeD& p) {
  int n = static_cast<int>(p.gens.size());
  std::vector<std::vector<int>> out(n);
  for (const DArrow& a : p.arrows) out[a.src].push_back(a.dst);
  // Longest path in the arrow graph; a directed cycle means the iterated
  // delta never vanishes.
  std::vector<int> state(n, 0), depth(n, 0);  // 0 new, 1 active, 2 done
  bool cyclic = false;
  auto dfs = [&](auto&& self, int v) -> int {
    if (state[v] == 1) { cyclic = true; return 0; }
    if (state[v] == 2) return depth[v];
    state[v] = 1;
    int best = 0;
    for (int w : out[v]) {
      if (cyclic) break;
      best = std::max(best, 1 + self(self, w));
    }
    state[v] = 2;
    depth[v] = best;
    return best;
  };
  int longest = 0;
  for (int v = 0; v < n && !cyclic; ++v) longest = std::max(longest, dfs(dfs, v));
  if (cyclic) return {false, std::nullopt};
  return {true, longest + 1};
}

namespace {

uint64_t bounded_draw(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

const Alg* labels_for(Alg si, Alg di, int* count) {
  static const Alg i00[] = {Alg::R12};
  static const Alg i01[] = {Alg::R1, Alg::R3, Alg::R123};
  static const Alg i10[] = {Alg::R2};
  static const Alg i11[] = {Alg::R23};
  if (si == Alg::I0 && di == Alg::I0) { *count = 1; return i00; }
  if (si == Alg::I0 && di == Alg::I1) { *count = 3; return i01; }
  if (si == Alg::I1 && di == Alg::I0) { *count = 1; return i10; }
  *count = 1;
  return i11;
}

}  // namespace

TypeD random_typeD(uint64_t seed, int n_generators, IdempotentPolicy policy) {
  if (n_generators < 1)
    throw std::invalid_argument("random_typeD: need at least one generator");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);

  auto make_gens = [&](TypeD* p) {
    p->gens.clear();
    for (int i = 0; i < n_generators; ++i) {
      Alg idem = Alg::I0;
      if (policy == IdempotentPolicy::kMixed && (rng() & 1)) idem = Alg::I1;
      p->gens.push_back({"g" + std::to_string(i), idem});
    }
  };

  // Arrow probability tuned so sparse proposals pass the structure
  // equation often enough for rejection sampling to land quickly.
  for (int attempt = 0; attempt < 10000; ++attempt) {
    TypeD p;
    make_gens(&p);
    uint64_t threshold = 0x10000ull * 3 / (2 * std::max(2, n_generators));
    for (int s = 0; s < n_generators; ++s) {
      for (int d = 0; d < n_generators; ++d) {
        if ((rng() & 0xFFFF) >= threshold) continue;
        int count;
        const Alg* ls = labels_for(p.gens[s].idem, p.gens[d].idem, &count);
        p.arrows.push_back({s, ls[bounded_draw(rng, count)], d});
      }
    }
    p.canonicalize();
    if (check_typeD(p).ok) return p;
  }

  // Constructive fallback: disjoint union of known-valid one- and
  // two-generator pieces.
  TypeD p;
  make_gens(&p);
  for (int i = 0; i < n_generators; ++i) {
    if (p.gens[i].idem == Alg::I0) {
      if (rng() & 1) p.arrows.push_back({i, Alg::R12, i});
    } else {
      if (rng() & 1) p.arrows.push_back({i, Alg::R23, i});
    }
  }
  p.canonicalize();
  return p;
}

bool isomorphic_typeD(const TypeD& a, const TypeD& b) {
  if (a.gens.size() != b.gens.size() || a.arrows.size() != b.arrows.size())
    return false;
  int n = static_cast<int>(a.gens.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto arrows_sorted = [](const TypeD& t, const std::vector<int>* map) {
    std::vector<std::tuple<int, int, int>> v;
    for (const DArrow& ar : t.arrows) {
      int s = map ? (*map)[ar.src] : ar.src;
      int d = map ? (*map)[ar.dst] : ar.dst;
      v.emplace_back(s, static_cast<int>(ar.label), d);
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  auto target = arrows_sorted(b, nullptr);
  do {
    bool idems_match = true;
    for (int i = 0; i < n && idems_match; ++i)
      idems_match = a.gens[i].idem == b.gens[perm[i]].idem;
    if (!idems_match) continue;
    if (arrows_sorted(a, &perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace hfst
