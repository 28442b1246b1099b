#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mosaic/moves.hpp"
#include "mosaic/transforms.hpp"

namespace mosaic {

// Finite presentation of a (possibly infinite) tree mosaic: a finite core
// tree plus eventually-periodic rays. Ray vertex k >= 1 past the attachment
// carries period[(k-1) mod L]; element j >= 1 embeds via its own spec into
// element j-1, and element 0 embeds via `attach` into the attachment vertex
// the first time around and via its own spec into element L-1 on wraps.
struct RayElement {
  Mosaic m;
  EmbedSpec spec;
};

struct Ray {
  int vertex = 0;    // attachment vertex id
  EmbedSpec attach;  // join of period[0] into the attachment vertex
  std::vector<RayElement> period;
};

struct TreeVertex {
  int parent = -1;           // vertex id, -1 for the root
  EmbedSpec in_spec;         // embedding into the parent (roots ignore it)
  Mosaic m;
  std::vector<int> children; // declared child order
};

struct TreeMosaic {
  std::vector<TreeVertex> verts;  // vertex id == index
  int root = 0;
  std::vector<Ray> rays;

  const TreeVertex& v(int id) const { return verts[size_t(id)]; }
  int vertex_count() const { return int(verts.size()); }
};

// Violations are data, not exceptions.
std::vector<std::string> validate(const TreeMosaic& tm);
bool is_valid(const TreeMosaic& tm);

// A combinatorial-wild point is an infinite path from the root; with the
// finite-presentation model these are exactly the rays.
struct WildPointId {
  int ray_index = 0;
  int vertex = 0;  // attachment vertex
  bool operator==(const WildPointId&) const = default;
};
std::vector<WildPointId> wild_points(const TreeMosaic& tm);

// -------- contraction --------

// Collapses the connected core subtree S (given as vertex ids; the member
// closest to the root becomes the merged vertex) by composing embeddings
// bottom-up. Edges leaving S re-target the surviving rigid-vertex tiles;
// rays attached inside S re-attach to the merged vertex.
TreeMosaic contract(const TreeMosaic& tm, const std::set<int>& S);

// Two-stage reduction to star-like shape: first absorb every maximal finite
// subtree into the ray skeleton, then contract the finite core to the root.
struct StarReduction {
  TreeMosaic tree;
  int divergence_depth = 0;  // max depth of a skeleton branching vertex
};
StarReduction star_reduce(const TreeMosaic& tm);

bool is_star_like(const TreeMosaic& tm);

// Moves k ray vertices into the core; the ray's period rotates accordingly.
TreeMosaic unroll(const TreeMosaic& tm, int ray_index, int k);

// -------- tree-level moves --------

// Re-embeds child v with an extra orientation: i'(u,v) = i(u,v) composed
// with g. Fails (returns nullopt) if the rotated profile no longer matches.
std::optional<TreeMosaic> tree_move_vstar(const TreeMosaic& tm, int v, D4 g);

// Applies mosaic move VIII.a / VIII.b inside F(v) at the given site.
std::optional<TreeMosaic> tree_move_viii(const TreeMosaic& tm, int v, int row,
                                         int col, char variant, const Catalog& cat);

// -------- mosaic-level equivalence --------

struct TreeEquivResult {
  enum class Status { Equivalent, NotFound, StructuralMismatch, LimitExceeded };
  Status status = Status::NotFound;
  std::string detail;
  std::map<int, MoveCertificate> vertex_certs;
  std::map<std::pair<int, int>, MoveCertificate> ray_certs;  // (ray, element)
};

// Same tree, same embeddings, same rigid-vertex data; per-vertex bounded
// search with profile-preserving moves. Sound, not complete.
TreeEquivResult mosaic_level_equiv(const TreeMosaic& a, const TreeMosaic& b,
                                   const SearchLimits& lim, const Catalog& cat);

// -------- depth expansion (shared by realization) --------

struct ExpandedVertex {
  int depth = 0;
  int parent = -1;        // index into the expanded list
  int core_id = -1;       // -1 for ray vertices
  int ray_index = -1;     // for ray vertices
  int ray_step = 0;       // k >= 1 along the ray
  EmbedSpec in_spec;      // into the parent expanded vertex
  const Mosaic* m = nullptr;
};

// Core vertices plus ray vertices unrolled to depth <= max_depth, in
// deterministic order (breadth-first, slots by target position).
std::vector<ExpandedVertex> expand_to_depth(const TreeMosaic& tm, int max_depth);

// -------- text format --------

std::string write_tree(const TreeMosaic& tm, const std::string& stem);
void save_tree_file(const TreeMosaic& tm, const std::string& path);
TreeMosaic load_tree_file(const std::string& path);

}  // namespace mosaic
