#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <string>

namespace mosaic {

// Exact rational arithmetic for all geometry. No floating point anywhere in
// positions; comparisons against irrational bounds are done on squares.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct Vec3 {
  Rat x, y, z;

  Vec3() : x(0), y(0), z(0) {}
  Vec3(Rat a, Rat b, Rat c) : x(std::move(a)), y(std::move(b)), z(std::move(c)) {}

  bool operator==(const Vec3&) const = default;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(const Rat& s) const { return {x * s, y * s, z * s}; }
};

inline Rat norm2(const Vec3& v) { return v.x * v.x + v.y * v.y + v.z * v.z; }

// Total order for deterministic sorting.
int vec3_cmp(const Vec3& a, const Vec3& b);

// Canonical "p/q" text (lowest terms, q > 0; integers as "p/1" never — plain p).
std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

// Deterministic fixed-point decimal with `digits` fractional digits,
// round-half-away-from-zero.
std::string rat_fixed(const Rat& r, int digits);

}  // namespace mosaic
