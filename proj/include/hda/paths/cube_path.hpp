#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hda/core/hda.hpp"

namespace hda {

/// Sequence of cubes linked by the step relation. Paths are plain values.
using CubePath = std::vector<CubeId>;

enum class StepKind {
  lower_of_next,      // x_j = d_k^0 x_{j+1}: a new part of the computation starts
  upper_of_previous,  // x_{j+1} = d_k^1 x_j: a part ends
};

/// How x_j and x_{j+1} are linked; k is 0-based and the least index that fits.
struct StepInfo {
  StepKind kind;
  unsigned k;
};

std::optional<StepInfo> step_between(const PrecubicalSet& X, CubeId from, CubeId to);

struct PathDiagnosis {
  bool ok = true;
  std::vector<StepInfo> steps;  // one per valid junction, up to the first failure
  std::size_t failed_at = 0;    // 0-based index j of the failing pair (j, j+1) when !ok
};

PathDiagnosis diagnose_cube_path(const PrecubicalSet& X, std::span<const CubeId> seq);
bool is_cube_path(const PrecubicalSet& X, std::span<const CubeId> seq);

/// Comma-separated ids; throws ParseError on unknown ids or an empty list.
CubePath parse_path(const PrecubicalSet& X, std::string_view text);
std::string path_string(const PrecubicalSet& X, std::span<const CubeId> seq, std::string_view sep = ",");
std::vector<std::string> path_names(const PrecubicalSet& X, std::span<const CubeId> seq);

/// rho followed by sigma; throws PathError if either is not a cube path or the
/// junction (last of rho, first of sigma) is not a step.
CubePath concat(const PrecubicalSet& X, std::span<const CubeId> rho, std::span<const CubeId> sigma);

/// rho is an initial segment of chi (equality included).
bool is_prefix(std::span<const CubeId> rho, std::span<const CubeId> chi);

/// Lexicographic order on the id sequences; used for canonical representatives.
struct PathNameLess {
  const PrecubicalSet* X;
  bool operator()(std::span<const CubeId> a, std::span<const CubeId> b) const;
};

/// All pointed cube paths with at most max_len cubes, ordered by length and
/// then lexicographically by id sequence.
std::vector<CubePath> enumerate_pointed_paths(const Hda& X, std::size_t max_len);

/// Same order, one length at a time; `visit` returning false stops early.
template <typename F>
void for_each_pointed_path(const Hda& X, std::size_t max_len, F visit);

}  // namespace hda

#include "hda/paths/cube_path_impl.hpp"
