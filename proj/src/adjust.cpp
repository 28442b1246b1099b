#include "mosaic/adjust.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace mosaic {

namespace {

struct BoundaryPoint {
  Side side;
  int index;  // row or column, 1-based
};

// Boundary slots in clockwise order starting at the NW corner.
std::vector<BoundaryPoint> boundary_points_cw(const Mosaic& m) {
  const int n = m.dim();
  std::vector<BoundaryPoint> pts;
  for (int j = 1; j <= n; ++j)
    if (m.at(1, j).has(Side::N)) pts.push_back({Side::N, j});
  for (int i = 1; i <= n; ++i)
    if (m.at(i, n).has(Side::E)) pts.push_back({Side::E, i});
  for (int j = n; j >= 1; --j)
    if (m.at(n, j).has(Side::S)) pts.push_back({Side::S, j});
  for (int i = n; i >= 1; --i)
    if (m.at(i, 1).has(Side::W)) pts.push_back({Side::W, i});
  return pts;
}

TileId two_conn_tile(uint8_t mask) {
  switch (mask) {
    case CONN_S | CONN_W: return TileId::T1;
    case CONN_S | CONN_E: return TileId::T2;
    case CONN_N | CONN_E: return TileId::T3;
    case CONN_N | CONN_W: return TileId::T4;
    case CONN_EW: return TileId::T5;
    case CONN_NS: return TileId::T6;
  }
  throw std::logic_error("two_conn_tile: bad mask");
}

struct Cell {
  int r, c;
  bool operator==(const Cell&) const = default;
};

}  // namespace

bool is_boundary_adjusted(const Mosaic& m) {
  if (m.dim() % 2 == 0) return false;
  if (!is_suitably_connected(m, true)) return false;
  ConnProfile p = boundary_profile(m);
  if (p.strands != 2 && p.strands != 4) return false;
  const int c = (m.dim() + 1) / 2;
  auto centered = [&](const std::vector<bool>& flags) -> std::optional<bool> {
    bool has = false;
    for (int k = 0; k < m.dim(); ++k) {
      if (flags[k] && k + 1 != c) return std::nullopt;  // off-center point
      if (flags[k]) has = true;
    }
    return has;
  };
  auto n = centered(p.n), e = centered(p.e), s = centered(p.s), w = centered(p.w);
  if (!n || !e || !s || !w) return false;
  if (p.strands == 4) return *n && *e && *s && *w;
  return (*n && *s && !*e && !*w) || (*e && *w && !*n && !*s);
}

AdjustResult boundary_adjust(const Mosaic& m) {
  if (!kind_is_tangle(m.kind()))
    throw std::invalid_argument("boundary_adjust: requires a tangle kind");
  if (!is_suitably_connected(m, true))
    throw std::invalid_argument("boundary_adjust: mosaic not suitably connected");
  ConnProfile prof = boundary_profile(m);
  if (prof.strands != 2 && prof.strands != 4)
    throw std::invalid_argument("boundary_adjust: unsupported arity 2m=" +
                                std::to_string(prof.strands));

  if (is_boundary_adjusted(m)) return {m, {}};

  const int n = m.dim();
  const std::vector<BoundaryPoint> sources = boundary_points_cw(m);
  const int k = prof.strands;

  // Targets in clockwise order, matching the source order up to rotation.
  const std::vector<Side> targets =
      (k == 2) ? std::vector<Side>{Side::N, Side::S}
               : std::vector<Side>{Side::N, Side::E, Side::S, Side::W};

  for (int pad = 3; pad <= 9; pad += 2) {
    int np = n + 2 * pad;
    if (np % 2 == 0) np += 1;  // extra padding on the south/east side
    const int center = (np + 1) / 2;
    const int off = pad;  // block occupies rows/cols off+1 .. off+n

    auto target_cell = [&](Side s) -> Cell {
      switch (s) {
        case Side::N: return {1, center};
        case Side::E: return {center, np};
        case Side::S: return {np, center};
        case Side::W: return {center, 1};
      }
      return {0, 0};
    };
    auto exit_cell = [&](const BoundaryPoint& b) -> Cell {
      switch (b.side) {
        case Side::N: return {off, off + b.index};
        case Side::S: return {off + n + 1, off + b.index};
        case Side::W: return {off + b.index, off};
        case Side::E: return {off + b.index, off + n + 1};
      }
      return {0, 0};
    };

    auto in_block = [&](int r, int c) {
      return r > off && r <= off + n && c > off && c <= off + n;
    };

    // Try rotations of the target assignment, then strand orders.
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;

    for (int rot = 0; rot < k; ++rot) {
      std::vector<int> perm = order;
      do {
        std::vector<std::vector<Cell>> paths(k);
        std::vector<std::vector<bool>> used(np + 2, std::vector<bool>(np + 2, false));
        bool ok = true;
        for (int oi = 0; oi < k && ok; ++oi) {
          int si = perm[oi];
          Cell from = exit_cell(sources[si]);
          Cell to = target_cell(targets[(si + rot) % k]);
          // BFS over free padding cells
          std::map<std::pair<int, int>, std::pair<int, int>> prev;
          std::queue<Cell> q;
          auto free_cell = [&](int r, int c) {
            return r >= 1 && r <= np && c >= 1 && c <= np && !in_block(r, c) &&
                   !used[r][c];
          };
          if (!free_cell(from.r, from.c) || !free_cell(to.r, to.c)) {
            ok = false;
            break;
          }
          q.push(from);
          prev[{from.r, from.c}] = {0, 0};
          bool reached = false;
          while (!q.empty() && !reached) {
            Cell cu = q.front();
            q.pop();
            const int dr[4] = {-1, 0, 1, 0};
            const int dc[4] = {0, 1, 0, -1};
            for (int d = 0; d < 4; ++d) {
              int r2 = cu.r + dr[d], c2 = cu.c + dc[d];
              if (!free_cell(r2, c2) || prev.count({r2, c2})) continue;
              prev[{r2, c2}] = {cu.r, cu.c};
              if (r2 == to.r && c2 == to.c) {
                reached = true;
                break;
              }
              q.push({r2, c2});
            }
          }
          if (!reached && !(from == to)) {
            ok = false;
            break;
          }
          std::vector<Cell> path;
          for (Cell cu = to;;) {
            path.push_back(cu);
            auto pr = prev[{cu.r, cu.c}];
            if (pr.first == 0) break;
            cu = {pr.first, pr.second};
          }
          std::reverse(path.begin(), path.end());
          for (Cell cc : path) used[cc.r][cc.c] = true;
          paths[si] = std::move(path);
        }
        if (ok) {
          // assemble the adjusted mosaic
          Mosaic out(np, m.kind());
          for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) out.at(off + i, off + j) = m.at(i, j);
          for (int si = 0; si < k; ++si) {
            const auto& path = paths[si];
            Side tgt = targets[(si + rot) % k];
            for (size_t pi = 0; pi < path.size(); ++pi) {
              Side in_dir, out_dir;
              if (pi == 0) {
                in_dir = opposite(sources[si].side);
              } else {
                Cell a = path[pi - 1], b = path[pi];
                if (a.r < b.r) in_dir = Side::N;
                else if (a.r > b.r) in_dir = Side::S;
                else if (a.c < b.c) in_dir = Side::W;
                else in_dir = Side::E;
              }
              if (pi + 1 < path.size()) {
                Cell a = path[pi], b = path[pi + 1];
                if (a.r < b.r) out_dir = Side::S;
                else if (a.r > b.r) out_dir = Side::N;
                else if (a.c < b.c) out_dir = Side::E;
                else out_dir = Side::W;
              } else {
                out_dir = tgt;
              }
              out.at(path[pi].r, path[pi].c) =
                  tile(two_conn_tile(side_bit(in_dir) | side_bit(out_dir)));
            }
          }
          if (!is_suitably_connected(out, true) || !is_boundary_adjusted(out))
            continue;  // routing produced a bad board; try next arrangement
          MoveCertificate cert;
          CertStep s;
          s.op = CertStep::Op::Adjust;
          cert.steps.push_back(s);
          return {out, cert};
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  throw std::runtime_error("boundary_adjust: routing failed");
}

}  // namespace mosaic
