#pragma once

#include <iosfwd>
#include <string>

#include "mosaic/mosaic.hpp"

namespace mosaic {

// Text format, one mosaic per file:
//   mosaic <n> <kind>
//   n lines of n whitespace-separated tile tokens
// Tokens: 0..8 for T0..T8, 9o/9u for the two crossings, B:NS/B:EW/B:NSEW
// for the rigid-vertex tile. Round-trips bit-exact.
std::string write_mosaic(const Mosaic& m);
Mosaic read_mosaic(std::istream& in);
Mosaic read_mosaic_string(const std::string& text);
Mosaic load_mosaic_file(const std::string& path);
void save_mosaic_file(const Mosaic& m, const std::string& path);

// Convenience for tests: parse rows of tokens with a declared kind.
Mosaic mosaic_from_tokens(int dim, Kind kind, const std::string& tokens);

}  // namespace mosaic
