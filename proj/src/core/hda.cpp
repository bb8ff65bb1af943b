#include "hda/core/hda.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "hda/core/errors.hpp"

namespace hda {

ValidationReport validate_hda(const ModelDecl& model) {
  ValidationReport report = validate_precubical(model.cubes);
  auto it = std::find_if(model.cubes.begin(), model.cubes.end(),
                         [&](const CubeDecl& c) { return c.id == model.initial; });
  if (it == model.cubes.end()) {
    report.violations.push_back({ViolationKind::initial_missing, model.initial, 0, 0, 0, 0, {}, {},
                                 "initial cube is not declared"});
  } else if (it->dim != 0) {
    report.violations.push_back({ViolationKind::initial_dimension, model.initial, 0, 0, 0, 0, {}, {},
                                 "initial cube has dimension " + std::to_string(it->dim)});
  }
  return report;
}

namespace {

std::string tuple_text(const std::vector<int>& t) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
  out << ']';
  return out.str();
}

}  // namespace

ValidationReport validate_labeling(const PrecubicalSet& cubes, const LabelingDecl& labeling) {
  ValidationReport report;
  std::set<std::string> seen;
  for (const auto& e : labeling.events) {
    if (!seen.insert(e).second) {
      report.violations.push_back({ViolationKind::events_duplicate, e, 0, 0, 0, 0, {}, {},
                                   "event listed more than once"});
    }
  }
  for (const auto& [id, tuple] : labeling.labels) {
    if (!cubes.find(id)) {
      report.violations.push_back({ViolationKind::label_unknown_cube, id, 0, 0, 0, 0, {}, {},
                                   "label given for an undeclared cube"});
    }
  }

  const int event_count = static_cast<int>(labeling.events.size());
  std::vector<std::optional<std::vector<int>>> tuples(cubes.size());
  for (CubeId x = 0; x < cubes.size(); ++x) {
    auto it = labeling.labels.find(cubes.name(x));
    if (it == labeling.labels.end()) {
      if (cubes.dim(x) == 0) {
        tuples[x] = std::vector<int>{};
      } else {
        report.violations.push_back({ViolationKind::label_missing, cubes.name(x), 0, 0, 0, 0, {}, {},
                                     "no label for a cube of dimension " + std::to_string(cubes.dim(x))});
      }
      continue;
    }
    const auto& t = it->second;
    bool good = true;
    if (t.size() != cubes.dim(x)) {
      report.violations.push_back({ViolationKind::label_length, cubes.name(x), 0, 0, 0, 0, {}, {},
                                   "label " + tuple_text(t) + " for a cube of dimension " +
                                       std::to_string(cubes.dim(x))});
      good = false;
    }
    for (int v : t) {
      if (v < 1 || v > event_count) {
        report.violations.push_back({ViolationKind::label_range, cubes.name(x), 0, 0, 0, 0, {}, {},
                                     "event index " + std::to_string(v) + " outside 1.." +
                                         std::to_string(event_count)});
        good = false;
      }
    }
    for (std::size_t k = 1; k < t.size(); ++k) {
      if (t[k - 1] > t[k]) {
        report.violations.push_back({ViolationKind::label_unsorted, cubes.name(x), static_cast<int>(k), 0, 0, 0,
                                     {}, {}, "label " + tuple_text(t) + " is not sorted"});
        good = false;
        break;
      }
    }
    if (good) tuples[x] = t;
  }

  for (CubeId x = 0; x < cubes.size(); ++x) {
    if (!tuples[x]) continue;
    const auto& t = *tuples[x];
    for (Side s : kSides) {
      for (unsigned k = 0; k < cubes.dim(x); ++k) {
        const CubeId f = cubes.face(x, k, s);
        if (!tuples[f]) continue;
        std::vector<int> expected = t;
        expected.erase(expected.begin() + k);
        if (expected != *tuples[f]) {
          report.violations.push_back({ViolationKind::label_face, cubes.name(x), static_cast<int>(k + 1), 0,
                                       side_bit(s), 0, cubes.name(f), {},
                                       "face label " + tuple_text(*tuples[f]) + " but " + tuple_text(expected) +
                                           " expected"});
        }
      }
    }
  }
  return report;
}

Labeling build_labeling(const PrecubicalSet& cubes, const LabelingDecl& decl) {
  if (auto report = validate_labeling(cubes, decl); !report.ok()) throw ModelError(report.summary());
  Labeling labeling{decl.events, std::vector<std::vector<std::uint32_t>>(cubes.size())};
  for (CubeId x = 0; x < cubes.size(); ++x) {
    auto it = decl.labels.find(cubes.name(x));
    if (it == decl.labels.end()) continue;
    for (int v : it->second) labeling.tuples[x].push_back(static_cast<std::uint32_t>(v - 1));
  }
  return labeling;
}

Hda build_hda(const ModelDecl& model) {
  if (auto report = validate_hda(model); !report.ok()) throw ModelError(report.summary());
  Hda hda;
  hda.cubes = PrecubicalSet::build(model.cubes);
  hda.initial = hda.cubes.at(model.initial);
  if (model.labeling) hda.labeling = build_labeling(hda.cubes, *model.labeling);
  return hda;
}

ModelDecl to_decl(const Hda& hda) {
  ModelDecl model{hda.cubes.decls(), hda.cubes.name(hda.initial), std::nullopt};
  if (hda.labeling) {
    LabelingDecl labels{hda.labeling->events, {}};
    for (CubeId x = 0; x < hda.size(); ++x) {
      std::vector<int> t;
      for (auto v : hda.labeling->tuples[x]) t.push_back(static_cast<int>(v) + 1);
      labels.labels.emplace(hda.cubes.name(x), std::move(t));
    }
    model.labeling = std::move(labels);
  }
  return model;
}

std::vector<CubeId> step_successors(const PrecubicalSet& cubes, CubeId x) {
  std::vector<CubeId> out;
  auto push = [&](CubeId y) {
    if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
  };
  for (CubeId y : cubes.faces(x, Side::upper)) push(y);
  for (const auto& c : cubes.cofaces(x, Side::lower)) push(c.cube);
  return out;
}

std::vector<std::vector<CubeId>> reachability_witnesses(const Hda& hda) {
  const auto& X = hda.cubes;
  std::vector<CubeId> parent(X.size(), static_cast<CubeId>(X.size()));
  std::vector<char> seen(X.size(), 0);
  std::deque<CubeId> queue{hda.initial};
  seen[hda.initial] = 1;
  while (!queue.empty()) {
    const CubeId x = queue.front();
    queue.pop_front();
    for (CubeId y : step_successors(X, x)) {
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  std::vector<std::vector<CubeId>> paths(X.size());
  for (CubeId x = 0; x < X.size(); ++x) {
    if (!seen[x]) continue;
    for (CubeId at = x;; at = parent[at]) {
      paths[x].push_back(at);
      if (at == hda.initial) break;
    }
    std::reverse(paths[x].begin(), paths[x].end());
  }
  return paths;
}

std::vector<char> reachable_mask(const Hda& hda) {
  const auto& X = hda.cubes;
  std::vector<char> seen(X.size(), 0);
  std::vector<CubeId> stack{hda.initial};
  seen[hda.initial] = 1;
  while (!stack.empty()) {
    const CubeId x = stack.back();
    stack.pop_back();
    for (CubeId y : X.faces(x, Side::upper)) {
      if (!seen[y]) seen[y] = 1, stack.push_back(y);
    }
    for (const auto& c : X.cofaces(x, Side::lower)) {
      if (!seen[c.cube]) seen[c.cube] = 1, stack.push_back(c.cube);
    }
  }
  return seen;
}

std::vector<CubeId> reachable(const Hda& hda) {
  const auto mask = reachable_mask(hda);
  std::vector<CubeId> out;
  for (CubeId x = 0; x < mask.size(); ++x) {
    if (mask[x]) out.push_back(x);
  }
  return out;
}

}  // namespace hda
