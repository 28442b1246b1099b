#include "mosaic/rational.hpp"

#include <stdexcept>

namespace mosaic {

int vec3_cmp(const Vec3& a, const Vec3& b) {
  if (a.x != b.x) return a.x < b.x ? -1 : 1;
  if (a.y != b.y) return a.y < b.y ? -1 : 1;
  if (a.z != b.z) return a.z < b.z ? -1 : 1;
  return 0;
}

std::string rat_str(const Rat& r) {
  BigInt num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
  return Rat(num, den);
}

std::string rat_fixed(const Rat& r, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rat scaled = r * scale;
  BigInt num = numerator(scaled), den = denominator(scaled);
  bool neg = num < 0;
  if (neg) num = -num;
  // round half away from zero
  BigInt q = (2 * num + den) / (2 * den);
  std::string ds = q.str();
  if (int(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
  std::string out = ds.substr(0, ds.size() - digits) + "." + ds.substr(ds.size() - digits);
  if (neg && q != 0) out.insert(0, 1, '-');
  return out;
}

}  // namespace mosaic
