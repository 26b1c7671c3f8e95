#include "hfst/pairing.hpp"

#include <map>

namespace hfst {

std::atomic<uint64_t>& complexes_verified() {
  static std::atomic<uint64_t> count{0};
  return count;
}

namespace {

// Light validity: idempotent typing only.  Full structure-equation and
// A-infinity checks live in check_typeD / check_ainfty.
void require_typed_idempotents(const AInftyMod& x) {
  for (const auto& [key, terms] : x.actions) {
    Alg idem = x.gens[key.first].idem;
    for (Alg a : key.second) {
      if (is_idempotent(a) || left_idem(a) != idem)
        throw PairingError("box tensor: idempotent mismatch in stored action");
      idem = right_idem(a);
    }
    for (const ATerm& t : terms)
      if (x.gens[t.gen].idem != idem)
        throw PairingError("box tensor: idempotent mismatch in stored action");
  }
}

void require_arrow_idempotents(const TypeD& p) {
  for (const DArrow& a : p.arrows) {
    if (is_idempotent(a.label) || left_idem(a.label) != p.gens[a.src].idem ||
        right_idem(a.label) != p.gens[a.dst].idem)
      throw PairingError("box tensor: idempotent mismatch in delta arrow");
  }
}

struct BoxBasis {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;        // (x gen, p gen)
  std::map<std::pair<int, int>, int> index;
};

BoxBasis box_basis(const AInftyMod& x, const TypeD& p) {
  BoxBasis b;
  for (size_t j = 0; j < p.gens.size(); ++j) {
    for (size_t i = 0; i < x.gens.size(); ++i) {
      if (x.gens[i].idem != p.gens[j].idem) continue;
      b.index[{static_cast<int>(i), static_cast<int>(j)}] =
          static_cast<int>(b.pairs.size());
      b.pairs.emplace_back(i, j);
      b.names.push_back(p.gens[j].name + "*" + x.gens[i].name);
    }
  }
  return b;
}

// All delta paths from `start` of length <= max_len, as (labels, endpoint).
void delta_paths(const TypeD& p, int start, int max_len,
                 std::vector<std::pair<std::vector<Alg>, int>>* out) {
  std::vector<std::vector<const DArrow*>> from(p.gens.size());
  for (const DArrow& a : p.arrows) from[a.src].push_back(&a);
  std::vector<Alg> labels;
  auto dfs = [&](auto&& self, int at) -> void {
    out->push_back({labels, at});
    if (static_cast<int>(labels.size()) >= max_len) return;
    for (const DArrow* a : from[at]) {
      labels.push_back(a->label);
      self(self, a->dst);
      labels.pop_back();
    }
  };
  dfs(dfs, start);
}

template <class T, class MakeCoeff>
ChainComplex<T> assemble_box(const AInftyMod& x, const TypeD& p,
                             const std::string& field, MakeCoeff make) {
  BoxBasis b = box_basis(x, p);
  int n = static_cast<int>(b.pairs.size());
  DenseMatrix<T> d(n, n);
  int max_inputs = std::max(0, x.max_action_length() - 1);
  std::vector<std::pair<std::vector<Alg>, int>> paths;
  for (size_t j = 0; j < p.gens.size(); ++j) {
    paths.clear();
    delta_paths(p, static_cast<int>(j), max_inputs, &paths);
    for (size_t i = 0; i < x.gens.size(); ++i) {
      auto cit = b.index.find({static_cast<int>(i), static_cast<int>(j)});
      if (cit == b.index.end()) continue;
      int col = cit->second;
      for (const auto& [labels, endpoint] : paths) {
        auto ait = x.actions.find({static_cast<int>(i), labels});
        if (ait == x.actions.end()) continue;
        for (const ATerm& t : ait->second) {
          auto rit = b.index.find({t.gen, endpoint});
          if (rit == b.index.end())
            throw PairingError("box tensor: action target leaves the basis");
          int row = rit->second;
          d.at(row, col) = entry_add(d.at(row, col), make(t.coeff));
        }
      }
    }
  }
  return ChainComplex<T>(field, std::move(b.names), std::move(d));
}

}  // namespace

PairedComplex box_tensor(const AInftyMod& x, const TypeD& p) {
  require_typed_idempotents(x);
  require_arrow_idempotents(p);
  if (!is_bounded(x).bounded && !is_bounded(p).bounded)
    throw PairingError(
        "box tensor needs one bounded factor: both inputs are unbounded");
  if (x.ring == RingTag::kF2) {
    auto make = [](const LaurentPoly& c) -> uint8_t {
      return c.is_zero() ? 0 : 1;
    };
    return assemble_box<uint8_t>(x, p, "f2", make);
  }
  auto make = [](const LaurentPoly& c) { return RationalFn(c); };
  return assemble_box<RationalFn>(x, p, "f2(t)", make);
}

int twisted_pairing_dim(const TypeD& p) {
  return homology_dim(box_tensor(builtin_solid_module(true), p));
}

int untwisted_pairing_dim(const TypeD& p) {
  return homology_dim(box_tensor(builtin_solid_module(false), p));
}

ChainComplexF2 mor_pairing(const TypeD& p1, const TypeD& p2) {
  struct Key {
    int x1;
    Alg a;
    int x2;
    auto operator<=>(const Key&) const = default;
  };
  std::vector<Key> basis;
  std::map<std::tuple<int, int, int>, int> index;
  std::vector<std::string> names;
  for (size_t i = 0; i < p1.gens.size(); ++i) {
    for (size_t j = 0; j < p2.gens.size(); ++j) {
      for (Alg a : kAlgBasis) {
        if (left_idem(a) != p1.gens[i].idem) continue;
        if (right_idem(a) != p2.gens[j].idem) continue;
        index[{static_cast<int>(i), static_cast<int>(a),
               static_cast<int>(j)}] = static_cast<int>(basis.size());
        basis.push_back({static_cast<int>(i), a, static_cast<int>(j)});
        names.push_back(p1.gens[i].name + ">" + alg_name(a) + ">" +
                        p2.gens[j].name);
      }
    }
  }
  int n = static_cast<int>(basis.size());
  DenseMatrix<uint8_t> d(n, n);
  auto add = [&](int x1, Alg a, int x2, int col) {
    auto it = index.find({x1, static_cast<int>(a), x2});
    if (it == index.end())
      throw StructureError("mor pairing: product leaves the basis");
    d.at(it->second, col) ^= 1;
  };
  for (int col = 0; col < n; ++col) {
    const Key& f = basis[col];
    // Precompose with delta of the source structure.
    for (const DArrow& ar : p1.arrows) {
      if (ar.dst != f.x1) continue;
      Alg prod;
      if (mul_basis(ar.label, f.a, &prod)) add(ar.src, prod, f.x2, col);
    }
    // Postcompose with delta of the target structure.
    for (const DArrow& ar : p2.arrows) {
      if (ar.src != f.x2) continue;
      Alg prod;
      if (mul_basis(f.a, ar.label, &prod)) add(f.x1, prod, ar.dst, col);
    }
  }
  return ChainComplexF2("f2", std::move(names), std::move(d));
}

}  // namespace hfst
