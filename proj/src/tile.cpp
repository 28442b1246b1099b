#include "mosaic/tile.hpp"

namespace mosaic {

std::string tile_token(const Tile& t) {
  switch (t.id) {
    case TileId::T9: return "9o";
    case TileId::T10: return "9u";
    case TileId::TInf:
      if (t.conn == CONN_NS) return "B:NS";
      if (t.conn == CONN_EW) return "B:EW";
      return "B:NSEW";
    default:
      return std::to_string(int(t.id));
  }
}

std::optional<Tile> parse_tile_token(const std::string& tok) {
  if (tok == "9o") return tile(TileId::T9);
  if (tok == "9u") return tile(TileId::T10);
  if (tok == "B:NS") return rv_tile(CONN_NS);
  if (tok == "B:EW") return rv_tile(CONN_EW);
  if (tok == "B:NSEW") return rv_tile(CONN_ALL);
  if (tok.size() == 1 && tok[0] >= '0' && tok[0] <= '8')
    return tile(TileId(tok[0] - '0'));
  return std::nullopt;
}

}  // namespace mosaic
