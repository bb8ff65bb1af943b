#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hda/core/cube_set.hpp"

namespace hda {

/// Ordered, duplicate-free event names. Order is significant: label tuples
/// are sorted by position in this list.
using EventSet = std::vector<std::string>;

/// Labels as written in a model file: 1-based positions into `events`.
struct LabelingDecl {
  EventSet events;
  std::map<std::string, std::vector<int>> labels;
};

/// Validated labeling; tuples are 0-based event positions, indexed by CubeId.
struct Labeling {
  EventSet events;
  std::vector<std::vector<std::uint32_t>> tuples;
};

/// A pointed precubical set, optionally labeled.
struct Hda {
  PrecubicalSet cubes;
  CubeId initial = 0;
  std::optional<Labeling> labeling;

  std::size_t size() const { return cubes.size(); }
};

/// Everything a model file carries, before validation.
struct ModelDecl {
  std::vector<CubeDecl> cubes;
  std::string initial;
  std::optional<LabelingDecl> labeling;
};

/// validate_precubical plus the pointed-structure checks on `initial`.
ValidationReport validate_hda(const ModelDecl& model);

/// Label tuples: right length, sorted, in range, and compatible with faces
/// (the label of d_k^nu x is the label of x with entry k removed). A 0-cube
/// without an entry gets the empty tuple.
ValidationReport validate_labeling(const PrecubicalSet& cubes, const LabelingDecl& labeling);

/// Throws ModelError if validation fails.
Hda build_hda(const ModelDecl& model);
Labeling build_labeling(const PrecubicalSet& cubes, const LabelingDecl& labeling);

ModelDecl to_decl(const Hda& hda);

/// Cubes reachable from the initial cube by the step relation
/// (x steps to y when x = d_k^0 y or y = d_k^1 x), sorted ascending.
std::vector<CubeId> reachable(const Hda& hda);
std::vector<char> reachable_mask(const Hda& hda);

/// One pointed cube path ending at every reachable cube (shortest, first in
/// (dim, id) order); entry is empty for unreachable cubes.
std::vector<std::vector<CubeId>> reachability_witnesses(const Hda& hda);

/// Successors of x under the step relation: upper faces by k, then lower
/// cofaces by (k, cube); duplicates removed.
std::vector<CubeId> step_successors(const PrecubicalSet& cubes, CubeId x);

}  // namespace hda
