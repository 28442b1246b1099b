#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mosaic/d4.hpp"
#include "mosaic/mosaic.hpp"

namespace mosaic {

// Left action of D4 on mosaics. The generator f reflects across the NW-SE
// diagonal (transposing indices, swapping T1/T3 and T5/T6); r rotates by a
// quarter turn (index transform plus the tile cycle T1->T4->T3->T2->T1 and
// the swaps T5/T6, T7/T8, T9/T10). Rigid-vertex connection data transforms
// with the tile.
Mosaic d4_act(D4 g, const Mosaic& m);

// How a single tile transforms under g.
Tile d4_tile(D4 g, const Tile& t);

// Where position (row, col) of m lands in d4_act(g, m).
std::pair<int, int> d4_position(D4 g, int dim, int row, int col);

// The p-zoom: each tile lands at the center of its p x p block, with T5/T6
// connector tiles continuing its strands to the block boundary. p must be odd.
Mosaic zoom(int p, const Mosaic& m);

// Target of an oriented embedding: rigid-vertex position in the parent plus
// the child orientation.
struct EmbedSpec {
  int row = 0, col = 0;
  D4 orient = D4_E;

  bool operator==(const EmbedSpec&) const = default;
};

std::string embed_spec_str(const EmbedSpec& s);              // (a,b,sigma)
std::optional<EmbedSpec> parse_embed_spec(const std::string&);

struct EmbedError {
  std::string message;
};

// Does the boundary profile of `child` present exactly one connection at the
// center cell of each side in `conn_mask`, and nothing else?
bool profile_matches_conn(const Mosaic& child, uint8_t conn_mask);

// Fundamental oriented embedding: m-zoom of the parent with the spec'd
// rigid-vertex block overwritten by d4_act(orient, child). Child dimension
// must be odd and its oriented profile must match the target's connection
// data. Throws std::invalid_argument naming the offending side on mismatch.
Mosaic embed(const Mosaic& child, const Mosaic& parent, const EmbedSpec& spec);

// Validation-only version of the embed preconditions.
std::optional<std::string> embed_check(const Mosaic& child, const Mosaic& parent,
                                       const EmbedSpec& spec);

}  // namespace mosaic
