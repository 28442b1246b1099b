#include "mosaic/d4.hpp"

namespace mosaic {

std::string d4_name(D4 g) {
  std::string s;
  if (g.rot == 1) s = "r";
  else if (g.rot == 2) s = "r2";
  else if (g.rot == 3) s = "r3";
  if (g.flip) s += "f";
  if (s.empty()) s = "e";
  return s;
}

std::optional<D4> parse_d4(const std::string& name) {
  for (D4 g : d4_elements())
    if (d4_name(g) == name) return g;
  return std::nullopt;
}

}  // namespace mosaic
