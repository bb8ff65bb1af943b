#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hda/core/morphism.hpp"
#include "hda/paths/homotopy.hpp"

namespace hda {

/// Bounded unfolding. A node is a homotopy class of pointed cube paths of X;
/// it is kept when (path length) + (dimension of the last cube) <= depth.
/// That set is closed under faces and adjacency, so the truncated tree is
/// still a precubical set. Node ids are canonical representatives (least
/// member by id sequence) joined with "/".
struct Unfolding {
  Hda tree;
  std::size_t depth = 0;
  std::vector<CubePath> reps;      // by tree CubeId, paths in the base
  Morphism projection;             // tree -> base, node -> last cube of rep
  std::vector<char> frontier;      // node has a lower coface cut off by the bound
  std::unordered_map<CubePath, CubeId, PathHash> members;  // every class member -> node

  bool exact() const;
  std::optional<CubeId> node_of(const CubePath& path) const;
};

/// Throws CapExceeded if some class outgrows `cap`, and ModelError if a lower
/// face is ambiguous (members of one class entering through the same cube
/// from non-homotopic prefixes; happens e.g. for a square with parallel lower
/// edges and equal upper faces).
Unfolding unfold(const Hda& X, std::size_t depth, std::size_t cap = kDefaultHomotopyCap);

/// Least depth at which unfold(X, depth) has no frontier, or nullopt if X has
/// arbitrarily long pointed paths.
std::optional<std::size_t> full_depth(const Hda& X);

struct TreeCheck {
  bool tree = true;
  // Two pointed paths to the same cube that are not homotopic.
  std::optional<std::pair<CubePath, CubePath>> counterexample;
};

/// Bounded check: for every cube reached by pointed paths of length <= depth,
/// all those paths are homotopic. Throws CapExceeded.
TreeCheck is_tree(const Hda& X, std::size_t depth, std::size_t cap = kDefaultHomotopyCap);

/// The tree path over sigma starting at `start` (a tree cube projecting to
/// sigma's first cube). Throws PathError if sigma is not a cube path, does
/// not start over `start`, or leaves the truncated tree.
CubePath lift_path(const Unfolding& U, CubeId start, std::span<const CubeId> sigma);

/// Closed form of the unfolding of the event torus: cubes (x, m) with x a
/// sorted tuple of length n, m >= n, m = n mod 2 and m + n <= depth - 1;
/// d_k^0 (x, m) = (d_k^0 x, m - 1), d_k^1 (x, m) = (d_k^1 x, m + 1). Ids are
/// "<torus id>@m"; labeled by the tuple.
Hda torus_unfolding(const EventSet& events, std::size_t depth);

}  // namespace hda
