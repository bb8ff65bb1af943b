#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hda/paths/cube_path.hpp"

namespace hda {

/// Sum of the dimensions along the path.
std::size_t t_measure(const PrecubicalSet& X, std::span<const CubeId> seq);

/// Least value T can take for a path of this length and end dimension:
/// (n_m^2 + m - 1) / 2, returned doubled to stay integral.
std::size_t twice_t_lower_bound(const PrecubicalSet& X, std::span<const CubeId> seq);

/// Positional shape test: 0- and 1-cubes alternate (starting with a 0-cube)
/// up to index m - n, then the dimension climbs by one per step to n.
bool is_fan_shaped(const PrecubicalSet& X, std::span<const CubeId> seq);

/// One rewrite of the normalization. `reduces` is false for the preparatory
/// move that swaps x_{l-1} for a cube of the same dimension.
struct FanStep {
  CubePath path;
  std::size_t position;  // 1-based index of the replaced cube
  bool reduces;
};

struct FanResult {
  CubePath path;
  std::vector<FanStep> trace;
};

/// Rewrites a path starting at a 0-cube into a homotopic fan-shaped one by
/// repeatedly lowering the first peak l (n_l >= 2 entered from below and
/// left from above) by two dimensions. Throws PathError if seq is not a cube
/// path starting at a 0-cube.
FanResult fan_shape(const PrecubicalSet& X, std::span<const CubeId> seq);

}  // namespace hda
