#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "hda/core/hda.hpp"
#include "hda/core/random_hda.hpp"
#include "hda/paths/cube_path.hpp"

namespace hda::test {

/// Loads models/<name>.json from the source tree.
Hda fixture(const std::string& name);
ModelDecl fixture_decl(const std::string& name);
std::string fixture_path(const std::string& name);

/// Random pointed path: a walk of up to max_len cubes from the initial cube.
CubePath random_pointed_path(std::mt19937_64& rng, const Hda& X, std::size_t max_len);

/// Cubes by id.
CubePath ids(const PrecubicalSet& X, const std::vector<std::string>& names);

/// Same HDA with ids replaced by shuffled tags, so CubeIds get permuted.
Hda shuffled_copy(std::mt19937_64& rng, const Hda& X);

/// Removes a random cube that is a face of nothing (never the initial cube).
/// Returns X unchanged if there is none.
Hda delete_maximal_cube(std::mt19937_64& rng, const Hda& X);

/// Adds a second copy of a random maximal cube of positive dimension.
Hda duplicate_maximal_cube(std::mt19937_64& rng, const Hda& X);

/// Adds an unreachable component (vertex, edge, vertex) plus one unreachable
/// edge into the initial cube's neighbourhood when possible.
Hda with_unreachable_part(const Hda& X);

/// Brute force: all cube paths of exactly `len` cubes from `start` (DFS over
/// faces, independent of the library's enumeration).
std::vector<CubePath> all_paths_from(const PrecubicalSet& X, CubeId start, std::size_t len);

/// Brute force homotopy classes: connected components of the literal
/// adjacency checker over `paths` (all assumed pointed, same length).
std::vector<std::set<CubePath>> components_by_literal_adjacency(const PrecubicalSet& X,
                                                                const std::vector<CubePath>& paths);

/// Options used throughout the property tests: <= 30 cubes, dim <= 3.
RandomHdaOptions small_options(bool acyclic = true, bool labeled = false);

}  // namespace hda::test
