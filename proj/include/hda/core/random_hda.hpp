#pragma once

#include <cstdint>
#include <random>

#include "hda/core/hda.hpp"

namespace hda {

struct RandomHdaOptions {
  std::size_t max_cubes = 30;
  unsigned max_dim = 3;
  bool acyclic = true;
  bool labeled = false;  // events "a", "b"
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 6;
  double edge_density = 0.35;
  std::size_t max_squares = 4;
  double seed_cube_probability = 0.45;  // chance of gluing a standard 2- or 3-cube
};

/// Random validating HDA. Vertices "v<i>" (v0 initial), edges "e<i>",
/// squares "s<i>". Higher cubes come from standard cubes "q<coords>" over
/// {0,1,x} glued at their lowest corner to an existing vertex. In acyclic
/// mode every edge goes from a lower- to a higher-numbered vertex.
Hda random_hda(std::mt19937_64& rng, const RandomHdaOptions& options = {});

/// The standard n-cube: cubes are words over {0,1,x} of length n prefixed
/// with `prefix`; d_k^s replaces the k-th x with s.
ModelDecl standard_cube(unsigned n, const std::string& prefix = "q");

}  // namespace hda
