#include "hda/unfold/unfold.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "hda/core/errors.hpp"
#include "hda/core/torus.hpp"

namespace hda {

bool Unfolding::exact() const { return std::none_of(frontier.begin(), frontier.end(), [](char f) { return f; }); }

std::optional<CubeId> Unfolding::node_of(const CubePath& path) const {
  auto it = members.find(path);
  if (it == members.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string node_id(const PrecubicalSet& X, const CubePath& rep) { return path_string(X, rep, "/"); }

}  // namespace

Unfolding unfold(const Hda& X, std::size_t depth, std::size_t cap) {
  if (depth < 1) throw std::invalid_argument("unfold: depth must be at least 1");
  const auto& B = X.cubes;
  auto fits = [&](std::size_t len, CubeId last) { return len + B.dim(last) <= depth; };

  // Classes in discovery order; member paths point at their class index.
  std::vector<std::vector<CubePath>> classes;
  std::unordered_map<CubePath, std::size_t, PathHash> member_of;

  auto add_class = [&](const CubePath& path) {
    auto cls = homotopy_class(B, path, cap);  // sorted, so cls.front() is canonical
    const std::size_t idx = classes.size();
    for (const auto& p : cls) member_of.emplace(p, idx);
    classes.push_back(std::move(cls));
  };

  add_class({X.initial});
  for (std::size_t begin = 0, len = 1; begin < classes.size(); ++len) {
    const std::size_t end = classes.size();
    for (std::size_t c = begin; c < end; ++c) {
      const CubePath rep = classes[c].front();
      for (CubeId y : step_successors(B, rep.back())) {
        if (!fits(len + 1, y)) continue;
        CubePath ext = rep;
        ext.push_back(y);
        if (!member_of.count(ext)) add_class(ext);
      }
    }
    begin = end;
  }

  // Faces of every class, in terms of class indices.
  ModelDecl decl;
  std::vector<std::string> ids(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) ids[c] = node_id(B, classes[c].front());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const CubePath& rep = classes[c].front();
    const CubeId x = rep.back();
    CubeDecl d{ids[c], static_cast<int>(B.dim(x)), {}, {}};
    for (unsigned k = 0; k < B.dim(x); ++k) {
      CubePath up = rep;
      up.push_back(B.face(x, k, Side::upper));
      auto it = member_of.find(up);
      if (it == member_of.end()) throw std::logic_error("unfold: upper face of " + ids[c] + " missing");
      d.upper.push_back(ids[it->second]);

      // Every member entering through the lower face must give the same
      // prefix class; otherwise the face is not well defined.
      const CubeId lower = B.face(x, k, Side::lower);
      std::optional<std::size_t> found;
      for (const auto& member : classes[c]) {
        if (member.size() < 2 || member[member.size() - 2] != lower) continue;
        CubePath prefix(member.begin(), member.end() - 1);
        auto jt = member_of.find(prefix);
        if (jt == member_of.end()) throw std::logic_error("unfold: lower face of " + ids[c] + " missing");
        if (found && *found != jt->second) {
          throw ModelError("unfold: lower face " + std::to_string(k + 1) + " of " + ids[c] +
                           " is ambiguous: members enter from " + ids[*found] + " and from " + ids[jt->second] +
                           ", which are not homotopic");
        }
        found = jt->second;
      }
      if (!found) {
        throw std::logic_error("unfold: no member of " + ids[c] + " enters through lower face " +
                               std::to_string(k + 1));
      }
      d.lower.push_back(ids[*found]);
    }
    decl.cubes.push_back(std::move(d));
  }
  decl.initial = ids[0];
  if (X.labeling) {
    LabelingDecl lab;
    lab.events = X.labeling->events;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::vector<int> t;
      for (auto e : X.labeling->tuples[classes[c].front().back()]) t.push_back(static_cast<int>(e) + 1);
      lab.labels.emplace(ids[c], std::move(t));
    }
    decl.labeling = std::move(lab);
  }

  Unfolding U;
  U.depth = depth;
  U.tree = build_hda(decl);
  const std::size_t n = U.tree.size();
  std::vector<CubeId> node(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) node[c] = U.tree.cubes.at(ids[c]);
  U.reps.resize(n);
  U.projection.map.resize(n);
  U.frontier.assign(n, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const CubePath& rep = classes[c].front();
    const CubeId t = node[c];
    U.reps[t] = rep;
    U.projection.map[t] = rep.back();
    for (const auto& co : B.cofaces(rep.back(), Side::lower)) {
      if (!fits(rep.size() + 1, co.cube)) {
        U.frontier[t] = 1;
        break;
      }
    }
  }
  U.members.reserve(member_of.size());
  for (auto& [p, c] : member_of) U.members.emplace(p, node[c]);
  return U;
}

std::optional<std::size_t> full_depth(const Hda& X) {
  const auto& B = X.cubes;
  const auto mask = reachable_mask(X);
  std::vector<std::size_t> indegree(B.size(), 0);
  for (CubeId x = 0; x < B.size(); ++x) {
    if (!mask[x]) continue;
    for (CubeId y : step_successors(B, x)) ++indegree[y];
  }
  // Longest pointed path (in cubes) ending at each cube, by Kahn's order.
  std::vector<std::size_t> longest(B.size(), 0);
  std::deque<CubeId> queue;
  if (indegree[X.initial] != 0) return std::nullopt;
  queue.push_back(X.initial);
  longest[X.initial] = 1;
  std::size_t processed = 0, best = 0, reachable_count = 0;
  for (char m : mask) reachable_count += m != 0;
  while (!queue.empty()) {
    const CubeId x = queue.front();
    queue.pop_front();
    ++processed;
    best = std::max(best, longest[x] + B.dim(x));
    for (CubeId y : step_successors(B, x)) {
      longest[y] = std::max(longest[y], longest[x] + 1);
      if (--indegree[y] == 0) queue.push_back(y);
    }
  }
  if (processed != reachable_count) return std::nullopt;
  return best;
}

TreeCheck is_tree(const Hda& X, std::size_t depth, std::size_t cap) {
  const auto& B = X.cubes;
  std::vector<std::optional<CubePath>> first(B.size());
  std::vector<std::unordered_map<CubePath, char, PathHash>> first_class(B.size());
  TreeCheck result;
  for_each_pointed_path(X, depth, [&](const CubePath& p) {
    const CubeId x = p.back();
    if (!first[x]) {
      first[x] = p;
      for (auto& q : homotopy_class(B, p, cap)) first_class[x].emplace(std::move(q), 1);
      return true;
    }
    if (!first_class[x].count(p)) {
      result.tree = false;
      result.counterexample = std::make_pair(*first[x], p);
      return false;
    }
    return true;
  });
  return result;
}

CubePath lift_path(const Unfolding& U, CubeId start, std::span<const CubeId> sigma) {
  const auto& B = U.projection;
  if (sigma.empty()) throw PathError("lift_path: empty path");
  if (B(start) != sigma.front()) throw PathError("lift_path: path does not start over the start node");
  CubePath out{start};
  CubePath rep = U.reps[start];
  for (std::size_t j = 1; j < sigma.size(); ++j) {
    rep.push_back(sigma[j]);
    auto node = U.node_of(rep);
    if (!node) {
      throw PathError("lift_path: step " + std::to_string(j + 1) + " leaves the unfolding (depth " +
                      std::to_string(U.depth) + ")");
    }
    out.push_back(*node);
  }
  return out;
}

Hda torus_unfolding(const EventSet& events, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("torus_unfolding: depth must be at least 1");
  const std::size_t budget = depth - 1;  // m + n <= budget
  const unsigned maxdim = static_cast<unsigned>(budget / 2);
  const Hda T = torus(events, maxdim);
  const auto& C = T.cubes;
  auto id = [&](CubeId x, std::size_t m) { return C.name(x) + "@" + std::to_string(m); };

  ModelDecl decl;
  LabelingDecl lab;
  lab.events = events;
  for (CubeId x = 0; x < C.size(); ++x) {
    const std::size_t n = C.dim(x);
    for (std::size_t m = n; m + n <= budget; m += 2) {
      CubeDecl d{id(x, m), static_cast<int>(n), {}, {}};
      for (unsigned k = 0; k < n; ++k) {
        d.lower.push_back(id(C.face(x, k, Side::lower), m - 1));
        d.upper.push_back(id(C.face(x, k, Side::upper), m + 1));
      }
      std::vector<int> t;
      for (auto e : T.labeling->tuples[x]) t.push_back(static_cast<int>(e) + 1);
      lab.labels.emplace(d.id, std::move(t));
      decl.cubes.push_back(std::move(d));
    }
  }
  decl.initial = id(T.initial, 0);
  decl.labeling = std::move(lab);
  return build_hda(decl);
}

}  // namespace hda
