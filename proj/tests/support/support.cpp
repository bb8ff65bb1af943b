#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hda/core/json_io.hpp"
#include "hda/core/morphism.hpp"
#include "hda/paths/homotopy.hpp"

namespace hda::test {

std::string fixture_path(const std::string& name) { return std::string(HDA_MODELS_DIR) + "/" + name + ".json"; }

ModelDecl fixture_decl(const std::string& name) { return read_model_file(fixture_path(name)); }

Hda fixture(const std::string& name) { return build_hda(fixture_decl(name)); }

CubePath random_pointed_path(std::mt19937_64& rng, const Hda& X, std::size_t max_len) {
  CubePath p{X.initial};
  const std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
  while (p.size() < len) {
    auto next = step_successors(X.cubes, p.back());
    if (next.empty()) break;
    p.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
  }
  return p;
}

CubePath ids(const PrecubicalSet& X, const std::vector<std::string>& names) {
  CubePath out;
  for (const auto& n : names) out.push_back(X.at(n));
  return out;
}

Hda shuffled_copy(std::mt19937_64& rng, const Hda& X) {
  std::vector<std::size_t> tags(X.size());
  std::iota(tags.begin(), tags.end(), 0);
  std::shuffle(tags.begin(), tags.end(), rng);
  std::map<std::string, std::string> rename;
  for (CubeId x = 0; x < X.size(); ++x) rename[X.cubes.name(x)] = "r" + std::to_string(1000 + tags[x]);
  return rename_cubes(X, [&](const std::string& id) { return rename.at(id); });
}

namespace {

std::vector<CubeId> maximal_cubes(const Hda& X) {
  std::vector<char> covered(X.size(), 0);
  for (CubeId x = 0; x < X.size(); ++x) {
    for (Side s : kSides) {
      for (CubeId f : X.cubes.faces(x, s)) covered[f] = 1;
    }
  }
  std::vector<CubeId> out;
  for (CubeId x = 0; x < X.size(); ++x) {
    if (!covered[x] && x != X.initial) out.push_back(x);
  }
  return out;
}

}  // namespace

Hda delete_maximal_cube(std::mt19937_64& rng, const Hda& X) {
  auto candidates = maximal_cubes(X);
  if (candidates.empty()) return X;
  const CubeId victim = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
  ModelDecl decl = to_decl(X);
  const std::string name = X.cubes.name(victim);
  std::erase_if(decl.cubes, [&](const CubeDecl& c) { return c.id == name; });
  if (decl.labeling) decl.labeling->labels.erase(name);
  return build_hda(decl);
}

Hda duplicate_maximal_cube(std::mt19937_64& rng, const Hda& X) {
  auto candidates = maximal_cubes(X);
  std::erase_if(candidates, [&](CubeId x) { return X.cubes.dim(x) == 0; });
  if (candidates.empty()) return X;
  const CubeId source = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
  ModelDecl decl = to_decl(X);
  const std::string name = X.cubes.name(source);
  auto it = std::find_if(decl.cubes.begin(), decl.cubes.end(), [&](const CubeDecl& c) { return c.id == name; });
  CubeDecl copy = *it;
  copy.id = name + "_dup";
  decl.cubes.push_back(copy);
  if (decl.labeling) decl.labeling->labels[copy.id] = decl.labeling->labels.at(name);
  return build_hda(decl);
}

Hda with_unreachable_part(const Hda& X) {
  ModelDecl decl = to_decl(X);
  decl.cubes.push_back({"junk_u", 0, {}, {}});
  decl.cubes.push_back({"junk_w", 0, {}, {}});
  decl.cubes.push_back({"junk_e", 1, {"junk_u"}, {"junk_w"}});
  // An edge from the junk into the initial cube: the initial cube gains an
  // upper coface, which is not a step out of it.
  decl.cubes.push_back({"junk_in", 1, {"junk_w"}, {decl.initial}});
  if (decl.labeling) {
    decl.labeling->labels["junk_e"] = {1};
    decl.labeling->labels["junk_in"] = {1};
  }
  return build_hda(decl);
}

std::vector<CubePath> all_paths_from(const PrecubicalSet& X, CubeId start, std::size_t len) {
  std::vector<CubePath> out;
  CubePath p{start};
  auto go = [&](auto&& self) -> void {
    if (p.size() == len) {
      out.push_back(p);
      return;
    }
    const CubeId x = p.back();
    for (CubeId y = 0; y < X.size(); ++y) {
      bool step = false;
      for (unsigned k = 0; k < X.dim(y) && !step; ++k) step = X.face(y, k, Side::lower) == x;
      for (unsigned k = 0; k < X.dim(x) && !step; ++k) step = X.face(x, k, Side::upper) == y;
      if (!step) continue;
      p.push_back(y);
      self(self);
      p.pop_back();
    }
  };
  go(go);
  return out;
}

std::vector<std::set<CubePath>> components_by_literal_adjacency(const PrecubicalSet& X,
                                                                const std::vector<CubePath>& paths) {
  std::vector<std::size_t> parent(paths.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (is_adjacent(X, paths[i], paths[j])) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::set<CubePath>> groups;
  for (std::size_t i = 0; i < paths.size(); ++i) groups[find(i)].insert(paths[i]);
  std::vector<std::set<CubePath>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

RandomHdaOptions small_options(bool acyclic, bool labeled) {
  RandomHdaOptions o;
  o.max_cubes = 30;
  o.max_dim = 3;
  o.acyclic = acyclic;
  o.labeled = labeled;
  return o;
}

}  // namespace hda::test
