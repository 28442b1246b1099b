#include "mosaic/transforms.hpp"

#include <sstream>

namespace mosaic {

static uint8_t map_conn(uint8_t conn, Side (*f)(Side)) {
  uint8_t out = 0;
  for (Side s : all_sides)
    if (conn & side_bit(s)) out |= side_bit(f(s));
  return out;
}

static Side f_side(Side s) {
  // NW-SE diagonal reflection: N<->W, E<->S
  switch (s) {
    case Side::N: return Side::W;
    case Side::W: return Side::N;
    case Side::E: return Side::S;
    case Side::S: return Side::E;
  }
  return s;
}

static Side r_side(Side s) {
  // quarter turn matching the index transform (i,j) -> (j, m+1-i):
  // N->E, E->S, S->W, W->N
  switch (s) {
    case Side::N: return Side::E;
    case Side::E: return Side::S;
    case Side::S: return Side::W;
    case Side::W: return Side::N;
  }
  return s;
}

static Tile f_tile(const Tile& t) {
  switch (t.id) {
    case TileId::T1: return tile(TileId::T3);
    case TileId::T3: return tile(TileId::T1);
    case TileId::T5: return tile(TileId::T6);
    case TileId::T6: return tile(TileId::T5);
    case TileId::TInf: return rv_tile(map_conn(t.conn, f_side));
    default: return t;
  }
}

static Tile r_tile(const Tile& t) {
  switch (t.id) {
    case TileId::T1: return tile(TileId::T4);
    case TileId::T2: return tile(TileId::T1);
    case TileId::T3: return tile(TileId::T2);
    case TileId::T4: return tile(TileId::T3);
    case TileId::T5: return tile(TileId::T6);
    case TileId::T6: return tile(TileId::T5);
    case TileId::T7: return tile(TileId::T8);
    case TileId::T8: return tile(TileId::T7);
    case TileId::T9: return tile(TileId::T10);
    case TileId::T10: return tile(TileId::T9);
    case TileId::TInf: return rv_tile(map_conn(t.conn, r_side));
    default: return t;
  }
}

Tile d4_tile(D4 g, const Tile& t) {
  Tile out = t;
  if (g.flip) out = f_tile(out);
  for (int k = 0; k < g.rot; ++k) out = r_tile(out);
  return out;
}

static Mosaic f_act(const Mosaic& m) {
  Mosaic out(m.dim(), m.kind());
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= m.dim(); ++j)
      out.at(i, j) = f_tile(m.at(j, i));
  return out;
}

static Mosaic r_act(const Mosaic& m) {
  const int n = m.dim();
  Mosaic out(n, m.kind());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      out.at(i, j) = r_tile(m.at(n + 1 - j, i));
  return out;
}

Mosaic d4_act(D4 g, const Mosaic& m) {
  Mosaic out = m;
  if (g.flip) out = f_act(out);
  for (int k = 0; k < g.rot; ++k) out = r_act(out);
  return out;
}

std::pair<int, int> d4_position(D4 g, int dim, int row, int col) {
  int r = row, c = col;
  if (g.flip) std::swap(r, c);
  for (int k = 0; k < g.rot; ++k) {
    // source (r, c) lands at (c, dim+1-r) under one quarter turn
    int nr = c, nc = dim + 1 - r;
    r = nr;
    c = nc;
  }
  return {r, c};
}

Mosaic zoom(int p, const Mosaic& m) {
  if (p < 1 || p % 2 == 0) throw std::invalid_argument("zoom: p must be odd");
  if (p == 1) return m;
  const int n = m.dim();
  const int q = (p + 1) / 2;
  Mosaic out(p * n, m.kind());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Tile& t = m.at(i, j);
      const int cr = p * (i - 1) + q, cc = p * (j - 1) + q;
      out.at(cr, cc) = t;
      if (t.has(Side::E))
        for (int l = cc + 1; l <= p * j; ++l) out.at(cr, l) = tile(TileId::T5);
      if (t.has(Side::W))
        for (int l = p * (j - 1) + 1; l < cc; ++l) out.at(cr, l) = tile(TileId::T5);
      if (t.has(Side::S))
        for (int k = cr + 1; k <= p * i; ++k) out.at(k, cc) = tile(TileId::T6);
      if (t.has(Side::N))
        for (int k = p * (i - 1) + 1; k < cr; ++k) out.at(k, cc) = tile(TileId::T6);
    }
  }
  return out;
}

std::string embed_spec_str(const EmbedSpec& s) {
  std::ostringstream os;
  os << '(' << s.row << ',' << s.col << ',' << d4_name(s.orient) << ')';
  return os.str();
}

std::optional<EmbedSpec> parse_embed_spec(const std::string& str) {
  if (str.size() < 2 || str.front() != '(' || str.back() != ')') return std::nullopt;
  std::string body = str.substr(1, str.size() - 2);
  std::istringstream is(body);
  EmbedSpec s;
  char c1 = 0, c2 = 0;
  std::string oname;
  if (!(is >> s.row >> c1 >> s.col >> c2) || c1 != ',' || c2 != ',') return std::nullopt;
  std::getline(is, oname);
  auto g = parse_d4(oname);
  if (!g) return std::nullopt;
  s.orient = *g;
  return s;
}

bool profile_matches_conn(const Mosaic& child, uint8_t conn_mask) {
  ConnProfile p = boundary_profile(child);
  const int n = child.dim();
  const int c = (n + 1) / 2;  // center index, 1-based; n odd
  auto side_ok = [&](const std::vector<bool>& flags, bool want) {
    for (int k = 0; k < n; ++k) {
      bool expect = want && (k + 1 == c);
      if (flags[k] != expect) return false;
    }
    return true;
  };
  return side_ok(p.n, conn_mask & CONN_N) && side_ok(p.e, conn_mask & CONN_E) &&
         side_ok(p.s, conn_mask & CONN_S) && side_ok(p.w, conn_mask & CONN_W);
}

std::optional<std::string> embed_check(const Mosaic& child, const Mosaic& parent,
                                       const EmbedSpec& spec) {
  if (child.dim() % 2 == 0)
    return "embed: child dimension " + std::to_string(child.dim()) + " is not odd";
  if (!kind_is_tangle(child.kind()))
    return "embed: child must be a tangle kind";
  if (!parent.in_range(spec.row, spec.col))
    return "embed: target position out of range";
  const Tile& target = parent.at(spec.row, spec.col);
  if (!target.is_rv())
    return "embed: target tile at " + embed_spec_str(spec) + " is not a rigid vertex";
  Mosaic oriented = d4_act(spec.orient, child);
  ConnProfile p = boundary_profile(oriented);
  const int n = child.dim();
  const int c = (n + 1) / 2;
  auto side_check = [&](Side s, const std::vector<bool>& flags) -> std::optional<std::string> {
    bool want = target.has(s);
    for (int k = 0; k < n; ++k) {
      bool expect = want && (k + 1 == c);
      if (flags[k] != expect)
        return std::string("embed: connection mismatch on side ") + side_char(s);
    }
    return std::nullopt;
  };
  if (auto e = side_check(Side::N, p.n)) return e;
  if (auto e = side_check(Side::E, p.e)) return e;
  if (auto e = side_check(Side::S, p.s)) return e;
  if (auto e = side_check(Side::W, p.w)) return e;
  return std::nullopt;
}

Mosaic embed(const Mosaic& child, const Mosaic& parent, const EmbedSpec& spec) {
  if (auto err = embed_check(child, parent, spec))
    throw std::invalid_argument(*err);
  const int msz = child.dim();
  Mosaic w = zoom(msz, parent);
  Mosaic oriented = d4_act(spec.orient, child);
  const int r0 = msz * (spec.row - 1), c0 = msz * (spec.col - 1);
  for (int t = 1; t <= msz; ++t)
    for (int u = 1; u <= msz; ++u)
      w.at(r0 + t, c0 + u) = oriented.at(t, u);
  w.set_kind(classify(w));
  return w;
}

}  // namespace mosaic
