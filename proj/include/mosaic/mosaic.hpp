#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mosaic/tile.hpp"

namespace mosaic {

enum class Kind : uint8_t { Plain, Knot, Tangle, RvKnot, RvTangle };

std::string kind_name(Kind k);
bool kind_is_tangle(Kind k);  // Tangle or RvTangle
bool kind_is_knot(Kind k);    // Knot or RvKnot

// Square grid of tiles, (row, col) indexed from 1 with row 1 on the north
// side. Values are immutable in spirit: operations return new mosaics.
class Mosaic {
 public:
  Mosaic() = default;
  Mosaic(int dim, Kind kind) : dim_(dim), kind_(kind), tiles_(size_t(dim) * dim) {
    if (dim <= 0) throw std::invalid_argument("mosaic dimension must be positive");
  }

  int dim() const { return dim_; }
  Kind kind() const { return kind_; }
  void set_kind(Kind k) { kind_ = k; }

  const Tile& at(int row, int col) const { return tiles_[idx(row, col)]; }
  Tile& at(int row, int col) { return tiles_[idx(row, col)]; }

  bool in_range(int row, int col) const {
    return row >= 1 && row <= dim_ && col >= 1 && col <= dim_;
  }

  bool operator==(const Mosaic&) const = default;

  // Compact canonical key (dimension + kind + tile tokens), used for hashing.
  std::string key() const;

 private:
  size_t idx(int row, int col) const { return size_t(row - 1) * dim_ + (col - 1); }

  int dim_ = 0;
  Kind kind_ = Kind::Plain;
  std::vector<Tile> tiles_;
};

// True iff every interior tile edge agrees on connection points, every
// degree-2 rigid vertex has a transverse mask, and (unless allow_boundary)
// no connection point lies on the outer boundary.
bool is_suitably_connected(const Mosaic& m, bool allow_boundary);

// Rigid-vertex placement rules: no TInf on the boundary, no two TInf tiles
// edge-adjacent. Vacuously true for mosaics without TInf tiles.
bool rv_placement_ok(const Mosaic& m);

bool has_rv_tiles(const Mosaic& m);
int count_crossings(const Mosaic& m);
std::vector<std::pair<int, int>> rv_positions(const Mosaic& m);  // row-major

// Does the invariant bundle of `k` hold for the tile content of `m`?
bool kind_ok(const Mosaic& m, Kind k);

// Strongest applicable kind tag; Plain if none apply.
Kind classify(const Mosaic& m);

// Boundary connection data: per-side flags indexed 0..dim-1 along the side
// (N and S by column, E and W by row), plus the total count.
struct ConnProfile {
  std::vector<bool> n, e, s, w;
  int strands = 0;  // 2m

  bool operator==(const ConnProfile&) const = default;
};

ConnProfile boundary_profile(const Mosaic& m);

// (n+1)-mosaic with m copied into the top-left block and blanks elsewhere.
// Rejects tangle kinds.
Mosaic knot_inject(const Mosaic& m);

// Tangle injection: copies the block and extends boundary strands with
// T5/T6 connector tiles on the new east column and south row.
Mosaic tangle_inject(const Mosaic& m);

// Inverse of the applicable injection if the last row and column are exactly
// an injection image; nullopt otherwise.
std::optional<Mosaic> eject(const Mosaic& m);

// -------- component tracing --------

// One strand-end inside a tile: (row, col, side) plus which pass of a
// two-arc tile it belongs to is implied by side pairing.
struct StrandVisit {
  int row = 0, col = 0;
  TileId tile = TileId::T0;
  bool over = false;  // meaningful when tile is T9/T10
  bool operator==(const StrandVisit&) const = default;
};

struct Component {
  bool closed = false;
  // Crossing and rigid-vertex visits in traversal order.
  std::vector<StrandVisit> visits;
};

// Follows arcs through connection points; degree-4 TInf counts as two
// transverse strands. Requires a suitably connected mosaic.
std::vector<Component> trace_components(const Mosaic& m);

int closed_component_count(const Mosaic& m);

}  // namespace mosaic
