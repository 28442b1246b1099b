#include "mosaic/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mosaic/adjust.hpp"
#include "mosaic/transforms.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mosaic {

// defined in the generated catalog_data.cpp
const char* builtin_catalog_text();

std::string Patch::key() const {
  std::string s = std::to_string(h) + "x" + std::to_string(w);
  for (const Tile& t : cells) {
    s += ' ';
    s += tile_token(t);
  }
  return s;
}

Patch d4_patch(D4 g, const Patch& p) {
  Patch cur = p;
  if (g.flip) {
    Patch out;
    out.h = cur.w;
    out.w = cur.h;
    out.cells.resize(cur.cells.size());
    for (int i = 1; i <= out.h; ++i)
      for (int j = 1; j <= out.w; ++j)
        out.at(i, j) = d4_tile(D4_F, cur.at(j, i));
    cur = std::move(out);
  }
  for (int k = 0; k < g.rot; ++k) {
    Patch out;
    out.h = cur.w;
    out.w = cur.h;
    out.cells.resize(cur.cells.size());
    for (int i = 1; i <= out.h; ++i)
      for (int j = 1; j <= out.w; ++j)
        out.at(i, j) = d4_tile(D4_R, cur.at(cur.h + 1 - j, i));
    cur = std::move(out);
  }
  return cur;
}

std::vector<bool> patch_frame_profile(const Patch& p) {
  std::vector<bool> out;
  out.reserve(2 * (p.h + p.w));
  for (int j = 1; j <= p.w; ++j) out.push_back(p.at(1, j).has(Side::N));
  for (int i = 1; i <= p.h; ++i) out.push_back(p.at(i, p.w).has(Side::E));
  for (int j = 1; j <= p.w; ++j) out.push_back(p.at(p.h, j).has(Side::S));
  for (int i = 1; i <= p.h; ++i) out.push_back(p.at(i, 1).has(Side::W));
  return out;
}

bool patch_internally_consistent(const Patch& p) {
  for (int i = 1; i <= p.h; ++i) {
    for (int j = 1; j <= p.w; ++j) {
      const Tile& t = p.at(i, j);
      if (t.is_rv() && !valid_rv_conn(t.conn)) return false;
      if (j < p.w && t.has(Side::E) != p.at(i, j + 1).has(Side::W)) return false;
      if (i < p.h && t.has(Side::S) != p.at(i + 1, j).has(Side::N)) return false;
    }
  }
  return true;
}

namespace {

struct PPort {
  int r, c;
  Side side;
  bool operator<(const PPort& o) const {
    if (r != o.r) return r < o.r;
    if (c != o.c) return c < o.c;
    return uint8_t(side) < uint8_t(o.side);
  }
};

int frame_slot(const Patch& p, const PPort& q) {
  if (q.r == 1 && q.side == Side::N) return q.c - 1;
  if (q.c == p.w && q.side == Side::E) return p.w + (q.r - 1);
  if (q.r == p.h && q.side == Side::S) return p.w + p.h + (q.c - 1);
  if (q.c == 1 && q.side == Side::W) return 2 * p.w + p.h + (q.r - 1);
  return -1;
}

}  // namespace

PatchTopology patch_topology(const Patch& p) {
  PatchTopology topo;
  std::set<PPort> seen;

  auto step_in = [&](PPort q) -> std::optional<PPort> {
    int r = q.r, c = q.c;
    switch (q.side) {
      case Side::N: r -= 1; break;
      case Side::S: r += 1; break;
      case Side::E: c += 1; break;
      case Side::W: c -= 1; break;
    }
    if (r < 1 || r > p.h || c < 1 || c > p.w) return std::nullopt;
    return PPort{r, c, opposite(q.side)};
  };

  // walk from a frame entry to the frame exit
  auto walk = [&](PPort entry) -> PPort {
    PPort cur = entry;
    for (;;) {
      seen.insert(cur);
      Side out = *strand_exit(p.at(cur.r, cur.c), cur.side);
      PPort ex{cur.r, cur.c, out};
      seen.insert(ex);
      if (frame_slot(p, ex) >= 0) return ex;
      cur = *step_in(ex);
    }
  };

  for (int j = 1; j <= p.w; ++j) {
    for (PPort q : {PPort{1, j, Side::N}, PPort{p.h, j, Side::S}}) {
      if (!p.at(q.r, q.c).has(q.side) || seen.count(q)) continue;
      PPort ex = walk(q);
      topo.pairing.emplace_back(std::min(frame_slot(p, q), frame_slot(p, ex)),
                                std::max(frame_slot(p, q), frame_slot(p, ex)));
    }
  }
  for (int i = 1; i <= p.h; ++i) {
    for (PPort q : {PPort{i, 1, Side::W}, PPort{i, p.w, Side::E}}) {
      if (!p.at(q.r, q.c).has(q.side) || seen.count(q)) continue;
      PPort ex = walk(q);
      topo.pairing.emplace_back(std::min(frame_slot(p, q), frame_slot(p, ex)),
                                std::max(frame_slot(p, q), frame_slot(p, ex)));
    }
  }
  std::sort(topo.pairing.begin(), topo.pairing.end());

  // remaining strands are closed loops
  for (int i = 1; i <= p.h; ++i) {
    for (int j = 1; j <= p.w; ++j) {
      for (Side s : all_sides) {
        PPort q{i, j, s};
        if (!p.at(i, j).has(s) || seen.count(q)) continue;
        // trace the loop
        PPort cur = q;
        do {
          seen.insert(cur);
          Side out = *strand_exit(p.at(cur.r, cur.c), cur.side);
          PPort ex{cur.r, cur.c, out};
          seen.insert(ex);
          auto nxt = step_in(ex);
          cur = *nxt;  // loops never touch the frame
        } while (!(cur == q));
        ++topo.loops;
      }
    }
  }
  return topo;
}

// -------- catalog --------

static uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

static std::string rule_group(const std::string& name) {
  if (name.rfind("P", 0) == 0) return "planar";
  if (name.rfind("R1", 0) == 0) return "r1";
  if (name.rfind("R2", 0) == 0) return "r2";
  if (name.rfind("R3", 0) == 0) return "r3";
  return "rv";
}

static int patch_crossings(const Patch& p) {
  int c = 0;
  for (const Tile& t : p.cells)
    if (t.is_crossing()) ++c;
  return c;
}

Catalog Catalog::load(const std::string& text) {
  Catalog cat;
  cat.checksum_ = fnv1a64(text);

  std::istringstream in(text);
  std::string line;
  std::vector<std::string> pending;
  std::string name, closure;
  bool in_rule = false, in_rhs = false;
  std::vector<std::vector<Tile>> lhs_rows, rhs_rows;

  auto parse_row = [](const std::string& l) {
    std::vector<Tile> row;
    std::istringstream ls(l);
    std::string tok;
    while (ls >> tok) {
      auto t = parse_tile_token(tok);
      if (!t) throw std::runtime_error("catalog: bad tile token " + tok);
      row.push_back(*t);
    }
    return row;
  };
  auto make_patch = [](const std::vector<std::vector<Tile>>& rows) {
    Patch p;
    p.h = int(rows.size());
    p.w = rows.empty() ? 0 : int(rows[0].size());
    for (const auto& r : rows) {
      if (int(r.size()) != p.w) throw std::runtime_error("catalog: ragged patch");
      p.cells.insert(p.cells.end(), r.begin(), r.end());
    }
    return p;
  };

  while (std::getline(in, line)) {
    // strip comments
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;

    if (first == "rule") {
      if (in_rule) throw std::runtime_error("catalog: nested rule");
      if (!(ls >> name >> closure)) throw std::runtime_error("catalog: bad rule header");
      in_rule = true;
      in_rhs = false;
      lhs_rows.clear();
      rhs_rows.clear();
    } else if (first == "=>") {
      in_rhs = true;
    } else if (first == "end") {
      RewriteRule r;
      r.name = name;
      r.lhs = make_patch(lhs_rows);
      r.rhs = make_patch(rhs_rows);
      r.close_under_d4 = (closure == "d4");
      r.group = rule_group(name);
      cat.base_.push_back(std::move(r));
      in_rule = false;
    } else if (in_rule) {
      (in_rhs ? rhs_rows : lhs_rows).push_back(parse_row(line));
    } else {
      throw std::runtime_error("catalog: stray token " + first);
    }
  }
  if (in_rule) throw std::runtime_error("catalog: unterminated rule");

  // symmetry closure
  std::set<std::string> dedup;
  for (const RewriteRule& base : cat.base_) {
    for (D4 g : d4_elements()) {
      if (!base.close_under_d4 && !g.is_identity()) continue;
      RewriteRule inst = base;
      inst.lhs = d4_patch(g, base.lhs);
      inst.rhs = d4_patch(g, base.rhs);
      if (!g.is_identity()) inst.name = base.name + "/" + d4_name(g);
      std::string k = inst.lhs.key() + "=>" + inst.rhs.key();
      if (dedup.insert(k).second) cat.closed_.push_back(std::move(inst));
    }
  }
  return cat;
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = Catalog::load(builtin_catalog_text());
  return cat;
}

const RewriteRule* Catalog::find(const std::string& name) const {
  for (const RewriteRule& r : closed_)
    if (r.name == name) return &r;
  return nullptr;
}

std::vector<CatalogError> Catalog::lint() const {
  std::vector<CatalogError> errs;
  auto bad = [&](const std::string& rule, const std::string& msg) {
    errs.push_back({rule, msg});
  };
  for (const RewriteRule& r : closed_) {
    if (r.lhs.h != r.rhs.h || r.lhs.w != r.rhs.w) {
      bad(r.name, "patch dimensions differ");
      continue;
    }
    if (!patch_internally_consistent(r.lhs)) bad(r.name, "lhs inconsistent");
    if (!patch_internally_consistent(r.rhs)) bad(r.name, "rhs inconsistent");
    if (patch_frame_profile(r.lhs) != patch_frame_profile(r.rhs))
      bad(r.name, "frame profiles differ");
    if (patch_topology(r.lhs) != patch_topology(r.rhs))
      bad(r.name, "strand pairing or loop count differs");
    for (int i = 1; i <= r.lhs.h; ++i)
      for (int j = 1; j <= r.lhs.w; ++j) {
        bool lrv = r.lhs.at(i, j).is_rv(), rrv = r.rhs.at(i, j).is_rv();
        if (lrv != rrv || (lrv && r.lhs.at(i, j) != r.rhs.at(i, j)))
          bad(r.name, "rigid-vertex cell modified");
      }
    int delta = patch_crossings(r.rhs) - patch_crossings(r.lhs);
    int want = r.group == "r1" ? 1 : r.group == "r2" ? 2 : 0;
    if (std::abs(delta) != want)
      bad(r.name, "crossing delta " + std::to_string(delta) + " out of discipline");
  }
  return errs;
}

// -------- application --------

bool applicable(const Mosaic& m, const RewriteRule& rule, int row, int col,
                bool reverse) {
  const Patch& pat = reverse ? rule.rhs : rule.lhs;
  if (row < 1 || col < 1 || row + pat.h - 1 > m.dim() || col + pat.w - 1 > m.dim())
    return false;
  for (int i = 1; i <= pat.h; ++i)
    for (int j = 1; j <= pat.w; ++j)
      if (!(m.at(row + i - 1, col + j - 1) == pat.at(i, j))) return false;
  return true;
}

Mosaic apply_rule(const Mosaic& m, const RewriteRule& rule, int row, int col,
                  bool reverse) {
  if (!applicable(m, rule, row, col, reverse))
    throw std::invalid_argument("apply: rule " + rule.name + " not applicable at (" +
                                std::to_string(row) + "," + std::to_string(col) + ")");
  const Patch& out = reverse ? rule.lhs : rule.rhs;
  Mosaic res = m;
  for (int i = 1; i <= out.h; ++i)
    for (int j = 1; j <= out.w; ++j)
      res.at(row + i - 1, col + j - 1) = out.at(i, j);
  return res;
}

std::vector<MoveSite> scan(const Mosaic& m, const Catalog& cat) {
  std::vector<MoveSite> sites;
  const auto& rules = cat.rules();
  for (int ri = 0; ri < int(rules.size()); ++ri) {
    for (bool rev : {false, true}) {
      const Patch& pat = rev ? rules[ri].rhs : rules[ri].lhs;
      for (int i = 1; i + pat.h - 1 <= m.dim(); ++i)
        for (int j = 1; j + pat.w - 1 <= m.dim(); ++j)
          if (applicable(m, rules[ri], i, j, rev))
            sites.push_back({ri, i, j, rev});
    }
  }
  return sites;
}

// -------- certificates --------

std::string MoveCertificate::to_text() const {
  std::ostringstream os;
  for (const CertStep& s : steps) {
    switch (s.op) {
      case CertStep::Op::Inject: os << "inject\n"; break;
      case CertStep::Op::Eject: os << "eject\n"; break;
      case CertStep::Op::Adjust: os << "adjust\n"; break;
      case CertStep::Op::Move:
        os << (s.reverse ? "<-" : "->") << ' ' << s.rule << " @(" << s.row << ','
           << s.col << ")\n";
        break;
    }
  }
  return os.str();
}

std::optional<MoveCertificate> MoveCertificate::parse(const std::string& text) {
  MoveCertificate cert;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    CertStep s;
    if (tok == "inject") {
      s.op = CertStep::Op::Inject;
    } else if (tok == "eject") {
      s.op = CertStep::Op::Eject;
    } else if (tok == "adjust") {
      s.op = CertStep::Op::Adjust;
    } else if (tok == "->" || tok == "<-") {
      s.op = CertStep::Op::Move;
      s.reverse = (tok == "<-");
      std::string rule, at;
      if (!(ls >> rule >> at)) return std::nullopt;
      s.rule = rule;
      if (at.size() < 5 || at[0] != '@' || at[1] != '(' || at.back() != ')')
        return std::nullopt;
      std::istringstream as(at.substr(2, at.size() - 3));
      char comma;
      if (!(as >> s.row >> comma >> s.col) || comma != ',') return std::nullopt;
    } else {
      return std::nullopt;
    }
    cert.steps.push_back(std::move(s));
  }
  return cert;
}

Mosaic replay(const Mosaic& start, const MoveCertificate& cert, const Catalog& cat) {
  Mosaic m = start;
  for (const CertStep& s : cert.steps) {
    switch (s.op) {
      case CertStep::Op::Inject:
        m = kind_is_tangle(m.kind()) ? tangle_inject(m) : knot_inject(m);
        break;
      case CertStep::Op::Eject: {
        auto e = eject(m);
        if (!e) throw std::runtime_error("replay: eject not applicable");
        m = *e;
        break;
      }
      case CertStep::Op::Adjust:
        m = boundary_adjust(m).mosaic;
        break;
      case CertStep::Op::Move: {
        const RewriteRule* r = cat.find(s.rule);
        if (!r) throw std::runtime_error("replay: unknown rule " + s.rule);
        m = apply_rule(m, *r, s.row, s.col, s.reverse);
        break;
      }
    }
  }
  return m;
}

// -------- search --------

namespace {

struct Node {
  Mosaic m;
  int parent = -1;
  CertStep step;
};

CertStep invert_step(const CertStep& s) {
  CertStep out = s;
  switch (s.op) {
    case CertStep::Op::Move: out.reverse = !s.reverse; break;
    case CertStep::Op::Inject: out.op = CertStep::Op::Eject; break;
    case CertStep::Op::Eject: out.op = CertStep::Op::Inject; break;
    case CertStep::Op::Adjust: break;  // never inverted; pre-pass only
  }
  return out;
}

std::vector<std::pair<CertStep, Mosaic>> successors(const Mosaic& m, const Catalog& cat,
                                                    const SearchLimits& lim) {
  std::vector<std::pair<CertStep, Mosaic>> out;
  const auto& rules = cat.rules();
  for (int ri = 0; ri < int(rules.size()); ++ri) {
    for (bool rev : {false, true}) {
      const Patch& pat = rev ? rules[ri].rhs : rules[ri].lhs;
      if (pat == (rev ? rules[ri].lhs : rules[ri].rhs)) {
        // lhs == rhs would loop; impossible for sane rules but stay safe
        if (rev) continue;
      }
      for (int i = 1; i + pat.h - 1 <= m.dim(); ++i)
        for (int j = 1; j + pat.w - 1 <= m.dim(); ++j)
          if (applicable(m, rules[ri], i, j, rev)) {
            CertStep s;
            s.op = CertStep::Op::Move;
            s.rule = rules[ri].name;
            s.row = i;
            s.col = j;
            s.reverse = rev;
            out.emplace_back(s, apply_rule(m, rules[ri], i, j, rev));
          }
    }
  }
  if (m.dim() + 1 <= lim.max_dim) {
    CertStep s;
    s.op = CertStep::Op::Inject;
    out.emplace_back(s, kind_is_tangle(m.kind()) ? tangle_inject(m) : knot_inject(m));
  }
  if (auto e = eject(m)) {
    CertStep s;
    s.op = CertStep::Op::Eject;
    out.emplace_back(s, *e);
  }
  return out;
}

MoveCertificate path_from_root(const std::vector<Node>& nodes, int idx) {
  std::vector<CertStep> steps;
  for (int cur = idx; cur >= 0 && nodes[cur].parent >= 0; cur = nodes[cur].parent)
    steps.push_back(nodes[cur].step);
  std::reverse(steps.begin(), steps.end());
  MoveCertificate c;
  c.steps = std::move(steps);
  return c;
}

}  // namespace

static SearchResult bidirectional_search(const Mosaic& a, const MoveCertificate& pre_a,
                                         const Mosaic& b, const SearchLimits& lim,
                                         const Catalog& cat, const SearchOptions& opt) {
  SearchResult res;
  std::vector<Node> nodes[2];
  std::vector<int> frontier[2];
  int depth[2] = {0, 0};
  std::unordered_map<std::string, std::pair<int, int>> visited;  // key -> (side, idx)

  auto assemble = [&](int a_idx, int b_idx) {
    MoveCertificate cert = pre_a;
    MoveCertificate fwd = path_from_root(nodes[0], a_idx);
    cert.steps.insert(cert.steps.end(), fwd.steps.begin(), fwd.steps.end());
    // walk b-side path root-ward, inverting
    std::vector<CertStep> back;
    for (int cur = b_idx; cur >= 0 && nodes[1][cur].parent >= 0; cur = nodes[1][cur].parent)
      back.push_back(invert_step(nodes[1][cur].step));
    cert.steps.insert(cert.steps.end(), back.begin(), back.end());
    res.status = SearchStatus::Found;
    res.certificate = std::move(cert);
  };

  nodes[0].push_back({a, -1, {}});
  nodes[1].push_back({b, -1, {}});
  if (a.key() == b.key()) {
    res.status = SearchStatus::Found;
    res.certificate = pre_a;
    return res;
  }
  visited[a.key()] = {0, 0};
  visited[b.key()] = {1, 0};
  frontier[0] = {0};
  frontier[1] = {0};

  while (true) {
    // pick an expandable side, preferring the smaller frontier
    int side = -1;
    for (int s : {0, 1}) {
      if (frontier[s].empty()) continue;
      if (depth[0] + depth[1] + 1 > lim.max_steps) continue;
      if (side < 0 || frontier[s].size() < frontier[side].size()) side = s;
    }
    if (side < 0) {
      bool exhausted = frontier[0].empty() && frontier[1].empty();
      res.status = exhausted ? SearchStatus::NotFound : SearchStatus::LimitExceeded;
      return res;
    }
    if (nodes[0].size() + nodes[1].size() > lim.max_nodes) {
      res.status = SearchStatus::LimitExceeded;
      return res;
    }

    const std::vector<int> cur = std::move(frontier[side]);
    frontier[side].clear();
    std::vector<std::vector<std::pair<CertStep, Mosaic>>> succ(cur.size());

#ifdef _OPENMP
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
      for (size_t fi = 0; fi < cur.size(); ++fi)
        succ[fi] = successors(nodes[side][cur[fi]].m, cat, lim);
    } else
#endif
    {
      (void)opt;
      for (size_t fi = 0; fi < cur.size(); ++fi)
        succ[fi] = successors(nodes[side][cur[fi]].m, cat, lim);
    }

    // deterministic sequential merge
    for (size_t fi = 0; fi < cur.size(); ++fi) {
      for (auto& [step, m2] : succ[fi]) {
        std::string k = m2.key();
        auto it = visited.find(k);
        if (it != visited.end()) {
          if (it->second.first == side) continue;
          // met in the middle
          int other_idx = it->second.second;
          nodes[side].push_back({std::move(m2), cur[fi], step});
          int this_idx = int(nodes[side].size()) - 1;
          res.explored = nodes[0].size() + nodes[1].size();
          if (side == 0)
            assemble(this_idx, other_idx);
          else
            assemble(other_idx, this_idx);
          return res;
        }
        nodes[side].push_back({std::move(m2), cur[fi], step});
        int idx = int(nodes[side].size()) - 1;
        visited[k] = {side, idx};
        frontier[side].push_back(idx);
      }
    }
    depth[side] += 1;
    res.explored = nodes[0].size() + nodes[1].size();
  }
}

SearchResult search_equiv(const Mosaic& a, const Mosaic& b, const SearchLimits& lim,
                          const Catalog& cat, const SearchOptions& opt) {
  if (a.kind() != b.kind())
    throw std::invalid_argument("search_equiv: mosaics must have the same kind");

  Mosaic a2 = a, b2 = b;
  MoveCertificate pre;
  if (kind_is_tangle(a.kind())) {
    AdjustResult ra = boundary_adjust(a);
    AdjustResult rb = boundary_adjust(b);
    if (!(ra.mosaic == a)) {
      CertStep s;
      s.op = CertStep::Op::Adjust;
      pre.steps.push_back(s);
    }
    a2 = ra.mosaic;
    b2 = rb.mosaic;
  }
  return bidirectional_search(a2, pre, b2, lim, cat, opt);
}

SearchResult search_reduce(const Mosaic& start,
                           const std::function<bool(const Mosaic&)>& goal,
                           const SearchLimits& lim, const Catalog& cat,
                           const SearchOptions& opt) {
  SearchResult res;
  std::vector<Node> nodes;
  std::vector<int> frontier;
  std::unordered_map<std::string, int> visited;

  nodes.push_back({start, -1, {}});
  visited[start.key()] = 0;
  frontier = {0};
  if (goal(start)) {
    res.status = SearchStatus::Found;
    return res;
  }

  int depth = 0;
  while (!frontier.empty() && depth < lim.max_steps) {
    if (nodes.size() > lim.max_nodes) {
      res.status = SearchStatus::LimitExceeded;
      return res;
    }
    const std::vector<int> cur = std::move(frontier);
    frontier.clear();
    std::vector<std::vector<std::pair<CertStep, Mosaic>>> succ(cur.size());
#ifdef _OPENMP
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
      for (size_t fi = 0; fi < cur.size(); ++fi)
        succ[fi] = successors(nodes[cur[fi]].m, cat, lim);
    } else
#endif
    {
      (void)opt;
      for (size_t fi = 0; fi < cur.size(); ++fi)
        succ[fi] = successors(nodes[cur[fi]].m, cat, lim);
    }
    for (size_t fi = 0; fi < cur.size(); ++fi) {
      for (auto& [step, m2] : succ[fi]) {
        std::string k = m2.key();
        if (visited.count(k)) continue;
        nodes.push_back({std::move(m2), cur[fi], step});
        int idx = int(nodes.size()) - 1;
        visited[k] = idx;
        if (goal(nodes[idx].m)) {
          res.status = SearchStatus::Found;
          res.certificate = path_from_root(nodes, idx);
          res.explored = nodes.size();
          return res;
        }
        frontier.push_back(idx);
      }
    }
    ++depth;
    res.explored = nodes.size();
  }
  res.status = frontier.empty() ? SearchStatus::NotFound : SearchStatus::LimitExceeded;
  return res;
}

}  // namespace mosaic
