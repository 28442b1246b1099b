#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace mosaic {

// Sides of a tile, also used as bit positions in connection masks.
enum class Side : uint8_t { N = 0, E = 1, S = 2, W = 3 };

constexpr std::array<Side, 4> all_sides{Side::N, Side::E, Side::S, Side::W};

constexpr uint8_t side_bit(Side s) { return uint8_t(1u << uint8_t(s)); }

constexpr Side opposite(Side s) {
  return Side((uint8_t(s) + 2) & 3u);
}

constexpr char side_char(Side s) {
  switch (s) {
    case Side::N: return 'N';
    case Side::E: return 'E';
    case Side::S: return 'S';
    case Side::W: return 'W';
  }
  return '?';
}

// Connection masks.
constexpr uint8_t CONN_NONE = 0;
constexpr uint8_t CONN_N = side_bit(Side::N);
constexpr uint8_t CONN_E = side_bit(Side::E);
constexpr uint8_t CONN_S = side_bit(Side::S);
constexpr uint8_t CONN_W = side_bit(Side::W);
constexpr uint8_t CONN_NS = CONN_N | CONN_S;
constexpr uint8_t CONN_EW = CONN_E | CONN_W;
constexpr uint8_t CONN_ALL = CONN_N | CONN_E | CONN_S | CONN_W;

// Tile ids. T0 blank; T1..T4 corner arcs; T5 horizontal, T6 vertical;
// T7/T8 double arcs; T9/T10 crossings; TInf the rigid-vertex tile.
//
// The picture assignment is frozen as:
//   T1 {S,W}  T2 {S,E}  T3 {N,E}  T4 {N,W}  T5 {E,W}  T6 {N,S}
//   T7 arcs (N,E)+(S,W)      T8 arcs (N,W)+(S,E)
//   T9 crossing, N-S strand over    T10 crossing, E-W strand over
enum class TileId : uint8_t {
  T0 = 0, T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, TInf
};

struct Tile {
  TileId id = TileId::T0;
  uint8_t conn = 0;  // connection mask; for TInf this is stored data

  constexpr Tile() = default;
  constexpr Tile(TileId tid, uint8_t c) : id(tid), conn(c) {}

  bool operator==(const Tile&) const = default;

  bool has(Side s) const { return conn & side_bit(s); }
  bool is_crossing() const { return id == TileId::T9 || id == TileId::T10; }
  bool is_rv() const { return id == TileId::TInf; }
  bool is_standard() const { return id != TileId::TInf; }
  int degree() const { return __builtin_popcount(conn); }
};

constexpr uint8_t standard_conn(TileId id) {
  switch (id) {
    case TileId::T0: return CONN_NONE;
    case TileId::T1: return CONN_S | CONN_W;
    case TileId::T2: return CONN_S | CONN_E;
    case TileId::T3: return CONN_N | CONN_E;
    case TileId::T4: return CONN_N | CONN_W;
    case TileId::T5: return CONN_EW;
    case TileId::T6: return CONN_NS;
    default: return CONN_ALL;  // T7..T10
  }
}

// Factory for the eleven standard tiles.
constexpr Tile tile(TileId id) { return Tile(id, standard_conn(id)); }

// Rigid-vertex tile; mask must be CONN_NS, CONN_EW or CONN_ALL.
constexpr Tile rv_tile(uint8_t conn_mask) { return Tile(TileId::TInf, conn_mask); }

inline bool valid_rv_conn(uint8_t mask) {
  return mask == CONN_NS || mask == CONN_EW || mask == CONN_ALL;
}

// The internal strand pairing of a tile: list of side pairs, one per arc.
// Crossings and the degree-4 rigid vertex both pair (N,S) and (E,W).
inline int arc_count(const Tile& t) {
  if (t.id == TileId::T0) return 0;
  if (t.id == TileId::TInf) return t.degree() == 4 ? 2 : 1;
  return t.id >= TileId::T7 ? 2 : 1;
}

// Which side does a strand entering at `in` leave from, or nullopt if the
// tile has no connection there.
inline std::optional<Side> strand_exit(const Tile& t, Side in) {
  if (!t.has(in)) return std::nullopt;
  switch (t.id) {
    case TileId::T7:  // (N,E) + (S,W)
      switch (in) {
        case Side::N: return Side::E;
        case Side::E: return Side::N;
        case Side::S: return Side::W;
        case Side::W: return Side::S;
      }
      break;
    case TileId::T8:  // (N,W) + (S,E)
      switch (in) {
        case Side::N: return Side::W;
        case Side::W: return Side::N;
        case Side::S: return Side::E;
        case Side::E: return Side::S;
      }
      break;
    case TileId::T9:
    case TileId::T10:
      return opposite(in);
    case TileId::TInf:
      if (t.degree() == 4) return opposite(in);
      // degree 2: one straight strand
      return opposite(in);
    default: {
      // single-arc tiles: the other connected side
      for (Side s : all_sides)
        if (s != in && t.has(s)) return s;
    }
  }
  return std::nullopt;
}

// Tokens used by the text formats: 0..8, 9o (T9), 9u (T10), B:NS/B:EW/B:NSEW.
std::string tile_token(const Tile& t);
std::optional<Tile> parse_tile_token(const std::string& tok);

}  // namespace mosaic
