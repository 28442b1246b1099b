#include "mosaic/mosaic.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mosaic {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Plain: return "plain";
    case Kind::Knot: return "knot";
    case Kind::Tangle: return "tangle";
    case Kind::RvKnot: return "rvknot";
    case Kind::RvTangle: return "rvtangle";
  }
  return "?";
}

bool kind_is_tangle(Kind k) { return k == Kind::Tangle || k == Kind::RvTangle; }
bool kind_is_knot(Kind k) { return k == Kind::Knot || k == Kind::RvKnot; }

std::string Mosaic::key() const {
  std::string s = std::to_string(dim_);
  s += 'k';
  s += char('0' + int(kind_));
  for (const Tile& t : tiles_) {
    s += ' ';
    s += tile_token(t);
  }
  return s;
}

bool is_suitably_connected(const Mosaic& m, bool allow_boundary) {
  const int n = m.dim();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Tile& t = m.at(i, j);
      if (t.is_rv() && !valid_rv_conn(t.conn)) return false;
      // east neighbor
      if (j < n) {
        if (t.has(Side::E) != m.at(i, j + 1).has(Side::W)) return false;
      } else if (!allow_boundary && t.has(Side::E)) {
        return false;
      }
      // south neighbor
      if (i < n) {
        if (t.has(Side::S) != m.at(i + 1, j).has(Side::N)) return false;
      } else if (!allow_boundary && t.has(Side::S)) {
        return false;
      }
      if (!allow_boundary) {
        if (i == 1 && t.has(Side::N)) return false;
        if (j == 1 && t.has(Side::W)) return false;
      }
    }
  }
  return true;
}

bool rv_placement_ok(const Mosaic& m) {
  const int n = m.dim();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!m.at(i, j).is_rv()) continue;
      if (i == 1 || i == n || j == 1 || j == n) return false;
      if (m.at(i, j + 1).is_rv() || m.at(i + 1, j).is_rv()) return false;
    }
  }
  return true;
}

bool has_rv_tiles(const Mosaic& m) {
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= m.dim(); ++j)
      if (m.at(i, j).is_rv()) return true;
  return false;
}

int count_crossings(const Mosaic& m) {
  int c = 0;
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= m.dim(); ++j)
      if (m.at(i, j).is_crossing()) ++c;
  return c;
}

std::vector<std::pair<int, int>> rv_positions(const Mosaic& m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= m.dim(); ++j)
      if (m.at(i, j).is_rv()) out.emplace_back(i, j);
  return out;
}

static bool has_standard_tile(const Mosaic& m) {
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= m.dim(); ++j)
      if (m.at(i, j).is_standard()) return true;
  return false;
}

static bool has_boundary_conn(const Mosaic& m) {
  const int n = m.dim();
  for (int k = 1; k <= n; ++k) {
    if (m.at(1, k).has(Side::N)) return true;
    if (m.at(n, k).has(Side::S)) return true;
    if (m.at(k, 1).has(Side::W)) return true;
    if (m.at(k, n).has(Side::E)) return true;
  }
  return false;
}

bool kind_ok(const Mosaic& m, Kind k) {
  switch (k) {
    case Kind::Plain:
      return true;
    case Kind::Knot:
      return !has_rv_tiles(m) && is_suitably_connected(m, false);
    case Kind::Tangle:
      return !has_rv_tiles(m) && is_suitably_connected(m, true) &&
             boundary_profile(m).strands % 2 == 0;
    case Kind::RvKnot:
      return is_suitably_connected(m, false) && rv_placement_ok(m);
    case Kind::RvTangle:
      return is_suitably_connected(m, true) && rv_placement_ok(m) &&
             has_standard_tile(m);
  }
  return false;
}

Kind classify(const Mosaic& m) {
  if (!is_suitably_connected(m, true)) return Kind::Plain;
  if (has_rv_tiles(m)) {
    if (!rv_placement_ok(m) || !has_standard_tile(m)) return Kind::Plain;
    return has_boundary_conn(m) ? Kind::RvTangle : Kind::RvKnot;
  }
  return has_boundary_conn(m) ? Kind::Tangle : Kind::Knot;
}

ConnProfile boundary_profile(const Mosaic& m) {
  const int n = m.dim();
  ConnProfile p;
  p.n.resize(n);
  p.e.resize(n);
  p.s.resize(n);
  p.w.resize(n);
  for (int k = 1; k <= n; ++k) {
    p.n[k - 1] = m.at(1, k).has(Side::N);
    p.s[k - 1] = m.at(n, k).has(Side::S);
    p.w[k - 1] = m.at(k, 1).has(Side::W);
    p.e[k - 1] = m.at(k, n).has(Side::E);
  }
  for (int k = 0; k < n; ++k)
    p.strands += int(p.n[k]) + int(p.e[k]) + int(p.s[k]) + int(p.w[k]);
  return p;
}

Mosaic knot_inject(const Mosaic& m) {
  if (kind_is_tangle(m.kind()))
    throw std::invalid_argument("knot_inject: tangle kinds use tangle_inject");
  const int n = m.dim();
  Mosaic out(n + 1, m.kind());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

Mosaic tangle_inject(const Mosaic& m) {
  if (!kind_is_tangle(m.kind()))
    throw std::invalid_argument("tangle_inject: requires a tangle kind");
  const int n = m.dim();
  Mosaic out(n + 1, m.kind());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.at(i, j) = m.at(i, j);
  for (int i = 1; i <= n; ++i)
    if (m.at(i, n).has(Side::E)) out.at(i, n + 1) = tile(TileId::T5);
  for (int j = 1; j <= n; ++j)
    if (m.at(n, j).has(Side::S)) out.at(n + 1, j) = tile(TileId::T6);
  return out;
}

std::optional<Mosaic> eject(const Mosaic& m) {
  const int n = m.dim();
  if (n < 2) return std::nullopt;
  Mosaic inner(n - 1, m.kind());
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) inner.at(i, j) = m.at(i, j);
  Mosaic re = kind_is_tangle(m.kind()) ? tangle_inject(inner) : knot_inject(inner);
  if (re == m) return inner;
  return std::nullopt;
}

// -------- component tracing --------

namespace {

// Port = (row, col, side); a strand-end on a tile edge.
struct Port {
  int row, col;
  Side side;
  bool operator<(const Port& o) const {
    if (row != o.row) return row < o.row;
    if (col != o.col) return col < o.col;
    return uint8_t(side) < uint8_t(o.side);
  }
  bool operator==(const Port&) const = default;
};

}  // namespace

std::vector<Component> trace_components(const Mosaic& m) {
  const int n = m.dim();
  std::set<Port> seen;
  std::vector<Component> comps;

  auto neighbor = [&](Port p) -> std::optional<Port> {
    int r = p.row, c = p.col;
    switch (p.side) {
      case Side::N: r -= 1; break;
      case Side::S: r += 1; break;
      case Side::E: c += 1; break;
      case Side::W: c -= 1; break;
    }
    if (r < 1 || r > n || c < 1 || c > n) return std::nullopt;
    return Port{r, c, opposite(p.side)};
  };

  auto record = [&](Component& comp, Port at) {
    const Tile& t = m.at(at.row, at.col);
    if (t.is_crossing() || t.is_rv()) {
      bool over = false;
      if (t.id == TileId::T9) over = (at.side == Side::N || at.side == Side::S);
      if (t.id == TileId::T10) over = (at.side == Side::E || at.side == Side::W);
      comp.visits.push_back({at.row, at.col, t.id, over});
    }
  };

  // Walk forward from an entry port until we close up or hit the boundary.
  auto walk = [&](Port entry, Component& comp, bool recording) -> Port {
    Port cur = entry;
    for (;;) {
      seen.insert(cur);
      if (recording) record(comp, cur);
      Side out = *strand_exit(m.at(cur.row, cur.col), cur.side);
      Port exit_port{cur.row, cur.col, out};
      seen.insert(exit_port);
      auto next = neighbor(exit_port);
      if (!next) return exit_port;   // open end at the outer boundary
      if (*next == entry) return exit_port;  // closed loop
      cur = *next;
    }
  };

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Tile& t = m.at(i, j);
      for (Side s : all_sides) {
        if (!t.has(s)) continue;
        Port p{i, j, s};
        if (seen.count(p)) continue;
        // Walk backwards first so open components start at a boundary end.
        Component comp;
        Port back_end = walk(p, comp, false);
        auto back_next = neighbor(back_end);
        if (!back_next) {
          // open: restart from the true start
          comp = Component{};
          comp.closed = false;
          walk(back_end, comp, true);
        } else {
          comp = Component{};
          comp.closed = true;
          walk(*back_next, comp, true);
        }
        comps.push_back(std::move(comp));
      }
    }
  }
  return comps;
}

int closed_component_count(const Mosaic& m) {
  int c = 0;
  for (const auto& comp : trace_components(m))
    if (comp.closed) ++c;
  return c;
}

}  // namespace mosaic
