#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hda/core/hda.hpp"

namespace hda {

/// Graded map between precubical sets, stored as source CubeId -> target CubeId.
struct Morphism {
  std::vector<CubeId> map;

  CubeId operator()(CubeId x) const { return map[x]; }
};

/// Resolves an id -> id table. Throws ParseError on unknown ids and
/// ModelError if some source cube is left unmapped.
Morphism morphism_from_names(const PrecubicalSet& source, const PrecubicalSet& target,
                             const std::map<std::string, std::string>& table);

Morphism identity_morphism(const PrecubicalSet& cubes);

struct MorphismCheck {
  bool ok = true;
  std::string reason;
};

/// Dimension preservation and commutation with every face map.
MorphismCheck check_morphism(const PrecubicalSet& source, const PrecubicalSet& target, const Morphism& f);
/// check_morphism plus f(initial) = initial.
MorphismCheck check_pointed_morphism(const Hda& source, const Hda& target, const Morphism& f);

/// Cubes are pairs of equal dimension, faces taken componentwise.
struct Product {
  PrecubicalSet cubes;
  std::vector<std::pair<CubeId, CubeId>> components;  // by product CubeId
};

std::string pair_name(const std::string& x, const std::string& y);
Product product(const PrecubicalSet& x, const PrecubicalSet& y);

/// Pointed face-preserving bijection, if one exists. Exhaustive search with
/// colour refinement; meant for desk-sized inputs.
std::optional<Morphism> find_pointed_isomorphism(const Hda& x, const Hda& y);

/// Copy of `hda` with every id replaced by rename(id).
template <typename F>
Hda rename_cubes(const Hda& hda, F rename) {
  ModelDecl decl = to_decl(hda);
  for (auto& c : decl.cubes) {
    c.id = rename(c.id);
    for (auto& f : c.lower) f = rename(f);
    for (auto& f : c.upper) f = rename(f);
  }
  decl.initial = rename(decl.initial);
  if (decl.labeling) {
    std::map<std::string, std::vector<int>> labels;
    for (auto& [id, t] : decl.labeling->labels) labels.emplace(rename(id), t);
    decl.labeling->labels = std::move(labels);
  }
  return build_hda(decl);
}

}  // namespace hda
