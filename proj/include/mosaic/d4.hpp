#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace mosaic {

// Element of the dihedral group of the square, in the normal form r^a f^x
// with r the quarter-turn and f the NW-SE diagonal reflection.
// Acting on a mosaic, r^a f^x means: apply f first (if x), then rotate a times.
struct D4 {
  uint8_t rot = 0;   // 0..3
  bool flip = false;

  bool operator==(const D4&) const = default;

  bool is_identity() const { return rot == 0 && !flip; }
};

constexpr D4 D4_E{0, false};
constexpr D4 D4_R{1, false};
constexpr D4 D4_F{0, true};

// Group product a*b, acting as a∘b (apply b first).
constexpr D4 d4_mul(D4 a, D4 b) {
  // r^i f^x * r^j f^y = r^(i + j*(-1)^x) f^(x^y)   since f r = r^-1 f
  int j = a.flip ? (4 - b.rot) & 3 : b.rot;
  return D4{uint8_t((a.rot + j) & 3), bool(a.flip ^ b.flip)};
}

constexpr D4 d4_inverse(D4 a) {
  if (a.flip) return a;  // reflections are involutions
  return D4{uint8_t((4 - a.rot) & 3), false};
}

constexpr std::array<D4, 8> d4_elements() {
  return {D4{0, false}, D4{1, false}, D4{2, false}, D4{3, false},
          D4{0, true},  D4{1, true},  D4{2, true},  D4{3, true}};
}

std::string d4_name(D4 g);                       // e, r, r2, r3, f, rf, r2f, r3f
std::optional<D4> parse_d4(const std::string&);  // inverse of d4_name

}  // namespace mosaic
