#pragma once

#include <string>
#include <variant>

#include "hda/paths/cube_path.hpp"

namespace hda {

struct PathObjectRejection {
  std::string reason;
};

/// Searches for a representing sequence: pairwise distinct cubes linked by
/// steps such that every cube is an iterated face of some entry x_j along a
/// unique set of collapsed coordinates. Exhaustive DFS over simple step
/// paths (start cubes in (dim, id) order); the first sequence found is
/// returned. `budget` bounds the number of DFS nodes.
std::variant<CubePath, PathObjectRejection> is_path_object(const PrecubicalSet& P,
                                                          std::size_t budget = 2000000);

}  // namespace hda
