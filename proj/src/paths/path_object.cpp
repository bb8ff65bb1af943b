#include "hda/paths/path_object.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hda {

namespace {

// For every iterated face of x: the set of coordinate masks that produce it.
std::map<CubeId, std::set<std::uint32_t>> face_masks(const PrecubicalSet& P, CubeId x) {
  std::map<CubeId, std::set<std::uint32_t>> out;
  // Coordinates are collapsed from the highest down so lower indices keep
  // referring to the original coordinates of x.
  std::function<void(CubeId, unsigned, std::uint32_t)> go = [&](CubeId c, unsigned k, std::uint32_t mask) {
    if (k == 0) {
      out[c].insert(mask);
      return;
    }
    go(c, k - 1, mask);
    for (Side s : kSides) go(P.face(c, k - 1, s), k - 1, mask | (1u << (k - 1)));
  };
  go(x, P.dim(x), 0);
  return out;
}

}  // namespace

std::variant<CubePath, PathObjectRejection> is_path_object(const PrecubicalSet& P, std::size_t budget) {
  if (P.empty()) return PathObjectRejection{"empty precubical set"};

  std::vector<std::map<CubeId, std::set<std::uint32_t>>> masks(P.size());
  for (CubeId x = 0; x < P.size(); ++x) masks[x] = face_masks(P, x);

  // A cube that is a face of nothing can only be covered by itself.
  std::vector<CubeId> maximal;
  std::vector<char> has_coface(P.size(), 0);
  for (CubeId x = 0; x < P.size(); ++x) {
    for (Side s : kSides) {
      for (CubeId f : P.faces(x, s)) has_coface[f] = 1;
    }
  }
  for (CubeId x = 0; x < P.size(); ++x) {
    if (!has_coface[x]) maximal.push_back(x);
  }

  auto covers = [&](const CubePath& rep) {
    for (CubeId x = 0; x < P.size(); ++x) {
      bool ok = false;
      for (CubeId y : rep) {
        auto it = masks[y].find(x);
        if (it != masks[y].end() && it->second.size() == 1) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };

  std::vector<std::vector<CubeId>> succ(P.size());
  for (CubeId x = 0; x < P.size(); ++x) {
    for (CubeId y : P.faces(x, Side::upper)) {
      if (std::find(succ[x].begin(), succ[x].end(), y) == succ[x].end()) succ[x].push_back(y);
    }
    for (const auto& c : P.cofaces(x, Side::lower)) {
      if (std::find(succ[x].begin(), succ[x].end(), c.cube) == succ[x].end()) succ[x].push_back(c.cube);
    }
  }

  std::size_t nodes = 0;
  bool out_of_budget = false;
  std::vector<char> used(P.size(), 0);
  CubePath rep;
  std::size_t maximal_used = 0;
  std::vector<char> is_max(P.size(), 0);
  for (CubeId x : maximal) is_max[x] = 1;

  std::function<bool()> dfs = [&]() -> bool {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (maximal_used == maximal.size() && covers(rep)) return true;
    for (CubeId y : succ[rep.back()]) {
      if (used[y]) continue;
      used[y] = 1;
      maximal_used += is_max[y];
      rep.push_back(y);
      if (dfs()) return true;
      rep.pop_back();
      maximal_used -= is_max[y];
      used[y] = 0;
      if (out_of_budget) return false;
    }
    return false;
  };

  for (CubeId s = 0; s < P.size() && !out_of_budget; ++s) {
    rep = {s};
    used.assign(P.size(), 0);
    used[s] = 1;
    maximal_used = is_max[s];
    if (dfs()) return rep;
  }
  if (out_of_budget) return PathObjectRejection{"search budget exhausted"};

  for (CubeId x = 0; x < P.size(); ++x) {
    bool unique_somewhere = false, face_somewhere = false;
    for (CubeId y = 0; y < P.size(); ++y) {
      auto it = masks[y].find(x);
      if (it == masks[y].end()) continue;
      face_somewhere = true;
      if (it->second.size() == 1) unique_somewhere = true;
    }
    if (face_somewhere && !unique_somewhere) {
      return PathObjectRejection{"cube " + P.name(x) + " is a face along more than one coordinate set (self-linked)"};
    }
  }
  return PathObjectRejection{"no sequence of distinct cubes linked by steps covers every cube"};
}

}  // namespace hda
