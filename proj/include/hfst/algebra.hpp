// Torus algebra over F2: two orthogonal idempotents i0, i1 and six chord
// elements r1, r2, r3, r12, r23, r123.  Chords are intervals [s,e] with
// 1 <= s <= e <= 3; the product of two chords is their concatenation when
// the intervals are adjacent (end(a)+1 == start(b)) and zero otherwise.
// Idempotents act as partial units according to the endpoint parities.
#pragma once

#include <cstdint>
#include <string>

namespace hfst {

enum class Alg : uint8_t { I0 = 0, I1, R1, R2, R3, R12, R23, R123 };

inline constexpr int kAlgBasisCount = 8;

inline constexpr Alg kAlgBasis[kAlgBasisCount] = {
    Alg::I0, Alg::I1, Alg::R1, Alg::R2, Alg::R3, Alg::R12, Alg::R23, Alg::R123};

// The six non-idempotent basis elements, in a fixed order used for
// serialization and for basis enumeration in morphism complexes.
inline constexpr Alg kChords[6] = {Alg::R1,  Alg::R2,  Alg::R3,
                                   Alg::R12, Alg::R23, Alg::R123};

bool is_idempotent(Alg a);

// Idempotents satisfying left_idem(a)*a = a = a*right_idem(a).
Alg left_idem(Alg a);
Alg right_idem(Alg a);

// Product of basis elements.  Returns true and sets `out` when the product
// is a basis element, false when it vanishes.
bool mul_basis(Alg a, Alg b, Alg* out);

const char* alg_name(Alg a);          // "i0", "i1", "r1", ..., "r123"
bool alg_from_name(const std::string& s, Alg* out);

// F2-linear combination of the eight basis elements, stored as a bitmask.
struct AlgebraElement {
  uint8_t mask = 0;

  static AlgebraElement zero() { return {}; }
  static AlgebraElement basis(Alg a) {
    return AlgebraElement{static_cast<uint8_t>(1u << static_cast<int>(a))};
  }
  bool is_zero() const { return mask == 0; }
  bool has(Alg a) const { return (mask >> static_cast<int>(a)) & 1u; }
  AlgebraElement operator+(AlgebraElement o) const {  // char 2: XOR
    return AlgebraElement{static_cast<uint8_t>(mask ^ o.mask)};
  }
  bool operator==(const AlgebraElement&) const = default;
};

// Bilinear extension of the basis product.
AlgebraElement alg_mul(AlgebraElement a, AlgebraElement b);

std::string alg_to_string(AlgebraElement a);  // e.g. "r1+r12", "0"

}  // namespace hfst
