#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hda/core/morphism.hpp"
#include "hda/paths/homotopy.hpp"

namespace hda {

using CubePair = std::pair<CubeId, CubeId>;

/// Failure of the one-step lifting condition: f(x1) = d_k^0 y2 (k 0-based)
/// but no x2 above x1 along k maps to y2.
struct OpenMapCounterexample {
  CubeId x1;
  CubeId y2;
  unsigned k;
};

struct OpenMapCheck {
  bool open = true;
  std::optional<OpenMapCounterexample> counterexample;
};

/// One-step lifting over all reachable x1. Assumes f is a morphism.
OpenMapCheck open_map_check(const Hda& X, const Hda& Y, const Morphism& f);

/// Why a pair left the relation.
struct PairDefect {
  enum class Kind { face, forth, back } kind;
  unsigned k = 0;       // 0-based face index
  int side = 0;         // face defects only
  CubeId witness = 0;   // forth: x2 in X without partner; back: y2 in Y
};

struct BisimStats {
  std::size_t universe = 0;     // equal-dimension pairs (label-compatible when labeled)
  std::size_t evaluations = 0;  // pair checks performed
  std::size_t deletions = 0;    // pairs removed; never exceeds |X x Y|
};

struct BisimDecision {
  bool bisimilar = false;
  std::vector<CubePair> witness;  // greatest relation, sorted; empty when false
  std::optional<PairDefect> initial_defect;
  BisimStats stats;
  std::string justification;
};

/// Greatest face-closed relation on equal-dimension pairs in which every
/// pair of reachable cubes satisfies both zig-zag conditions along lower
/// cofaces. Worklist refinement: a deleted pair re-queues its coface pairs
/// and the pairs of its lower faces.
BisimDecision bisimilar(const Hda& X, const Hda& Y);

/// As bisimilar, with the universe restricted to pairs carrying equal label
/// tuples. Throws ModelError if either side is unlabeled or the event lists
/// differ.
BisimDecision labeled_bisimilar(const Hda& X, const Hda& Y);

/// hp-bisimilarity. Decided through the chain hp-bisimilar <=> homotopy
/// bisimilar <=> bisimilar (span of open maps) <=> a relation as above, so
/// this forwards to bisimilar / labeled_bisimilar and records the chain.
BisimDecision hp_bisimilar(const Hda& X, const Hda& Y, bool labeled = false);

struct RelationCheck {
  bool ok = true;
  std::string reason;
};

/// Direct re-check of a candidate relation: contains the initial pair,
/// equal dimensions (and labels when asked), face closure, and both zig-zag
/// conditions on reachable pairs.
RelationCheck check_bisim_relation(const Hda& X, const Hda& Y, const std::vector<CubePair>& pairs,
                                   bool labeled = false);

/// The relation as a pointed precubical set with its two projections.
struct RelationSpan {
  Hda relation;
  Morphism left;
  Morphism right;
};
RelationSpan relation_span(const Hda& X, const Hda& Y, const std::vector<CubePair>& pairs);

enum class OracleVerdict { bisimilar, not_bisimilar, inconclusive };

struct OracleResult {
  OracleVerdict verdict;
  bool exact = false;  // both unfoldings complete at this depth
  std::size_t depth = 0;
  std::size_t nodes_x = 0;
  std::size_t nodes_y = 0;
  std::size_t rounds = 0;
  std::size_t surviving = 0;
};

/// Run-based check on the bounded unfoldings: the greatest face-closed
/// zig-zag relation between tree nodes, with pairs touching the frontier
/// exempt from zig-zag. Failure is definite at any depth; success is
/// definite only when both unfoldings are complete.
OracleResult hp_oracle(const Hda& X, const Hda& Y, std::size_t depth, bool labeled = false,
                       std::size_t cap = kDefaultHomotopyCap);

std::string to_string(OracleVerdict v);

}  // namespace hda
