#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mosaic/mosaic.hpp"

namespace mosaic {

// Rectangular tile patch used as one side of a rewrite rule.
struct Patch {
  int h = 0, w = 0;
  std::vector<Tile> cells;

  const Tile& at(int r, int c) const { return cells[size_t(r - 1) * w + (c - 1)]; }
  Tile& at(int r, int c) { return cells[size_t(r - 1) * w + (c - 1)]; }
  bool operator==(const Patch&) const = default;
  std::string key() const;
};

Patch d4_patch(D4 g, const Patch& p);

// One concrete rewrite rule. Catalog rules are closed under the D4 action on
// patches when their closure flag says so; closure instances carry the
// generating element in their name ("R1.a/r2f").
struct RewriteRule {
  std::string name;
  Patch lhs, rhs;
  bool close_under_d4 = true;

  // group tag used by invariants: "planar", "r1", "r2", "r3", "rv"
  std::string group;
};

// Frame connection profile of a patch (the connections its border cells
// present to the outside). Application preserves suitable connectedness
// because lhs and rhs always agree on this.
std::vector<bool> patch_frame_profile(const Patch& p);

// Internal consistency of a patch pattern: interior edges agree.
bool patch_internally_consistent(const Patch& p);

// Strand pairing on the frame plus closed-loop count, used by the catalog
// linter and the soundness tests.
struct PatchTopology {
  std::vector<std::pair<int, int>> pairing;  // indices into frame slots
  int loops = 0;
  bool operator==(const PatchTopology&) const = default;
};
PatchTopology patch_topology(const Patch& p);

struct CatalogError {
  std::string rule;
  std::string message;
};

class Catalog {
 public:
  // Parses rule text, applies symmetry closure, deduplicates.
  static Catalog load(const std::string& text);
  // The built-in catalog compiled from data/rules/catalog.rules.
  static const Catalog& builtin();

  const std::vector<RewriteRule>& base_rules() const { return base_; }
  const std::vector<RewriteRule>& rules() const { return closed_; }
  const RewriteRule* find(const std::string& name) const;

  // Structural checks: equal patch dims, equal frame profiles, equal strand
  // pairing and loop count, rigid-vertex cells identical on both sides, and
  // the crossing-count delta discipline per rule group.
  std::vector<CatalogError> lint() const;

  uint64_t checksum() const { return checksum_; }  // FNV-1a of the source text

 private:
  std::vector<RewriteRule> base_;
  std::vector<RewriteRule> closed_;
  uint64_t checksum_ = 0;
};

// -------- application --------

struct MoveSite {
  int rule_index = 0;  // into Catalog::rules()
  int row = 0, col = 0;
  bool reverse = false;  // true: match rhs, write lhs
};

bool applicable(const Mosaic& m, const RewriteRule& rule, int row, int col,
                bool reverse = false);
Mosaic apply_rule(const Mosaic& m, const RewriteRule& rule, int row, int col,
                  bool reverse = false);

std::vector<MoveSite> scan(const Mosaic& m, const Catalog& cat);

// -------- certificates --------

struct CertStep {
  enum class Op : uint8_t { Move, Inject, Eject, Adjust } op = Op::Move;
  std::string rule;  // for Move
  int row = 0, col = 0;
  bool reverse = false;
};

struct MoveCertificate {
  std::vector<CertStep> steps;

  std::string to_text() const;
  static std::optional<MoveCertificate> parse(const std::string& text);
  bool empty() const { return steps.empty(); }
};

// Replays a certificate from `start`; throws on an inapplicable step.
Mosaic replay(const Mosaic& start, const MoveCertificate& cert, const Catalog& cat);

// -------- bounded equivalence search --------

struct SearchLimits {
  int max_dim = 6;
  int max_steps = 8;
  size_t max_nodes = 200000;
};

struct SearchOptions {
  bool parallel = true;  // OpenMP frontier expansion; serial path kept for tests
};

enum class SearchStatus { Found, NotFound, LimitExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  MoveCertificate certificate;  // valid when status == Found
  size_t explored = 0;
};

// Bidirectional BFS over the move-and-injection graph between two mosaics of
// the same kind. Tangle kinds are first boundary-adjusted (see transforms),
// which is recorded as Adjust steps in the certificate. A returned
// certificate replays from `a` to `b` bit-exactly. NotFound is not a proof
// of inequivalence.
SearchResult search_equiv(const Mosaic& a, const Mosaic& b, const SearchLimits& lim,
                          const Catalog& cat, const SearchOptions& opt = {});

// Bounded BFS from `start` looking for any state satisfying `goal`.
SearchResult search_reduce(const Mosaic& start,
                           const std::function<bool(const Mosaic&)>& goal,
                           const SearchLimits& lim, const Catalog& cat,
                           const SearchOptions& opt = {});

}  // namespace mosaic
