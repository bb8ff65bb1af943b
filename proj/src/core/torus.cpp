#include "hda/core/torus.hpp"

namespace hda {

std::string torus_cube_name(const EventSet& events, std::span<const std::uint32_t> tuple) {
  std::string name = "t";
  for (auto e : tuple) name += "." + events[e];
  return name;
}

namespace {

void sorted_tuples(std::size_t events, unsigned length, std::vector<std::uint32_t>& prefix,
                   std::vector<std::vector<std::uint32_t>>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  const std::uint32_t start = prefix.empty() ? 0 : prefix.back();
  for (std::uint32_t e = start; e < events; ++e) {
    prefix.push_back(e);
    sorted_tuples(events, length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Hda torus(const EventSet& events, unsigned maxdim) {
  ModelDecl model;
  LabelingDecl labels{events, {}};
  for (unsigned n = 0; n <= maxdim; ++n) {
    std::vector<std::vector<std::uint32_t>> tuples;
    std::vector<std::uint32_t> prefix;
    sorted_tuples(events.size(), n, prefix, tuples);
    for (const auto& t : tuples) {
      CubeDecl c{torus_cube_name(events, t), static_cast<int>(n), {}, {}};
      for (unsigned k = 0; k < n; ++k) {
        auto face = t;
        face.erase(face.begin() + k);
        c.lower.push_back(torus_cube_name(events, face));
      }
      c.upper = c.lower;
      std::vector<int> label;
      for (auto e : t) label.push_back(static_cast<int>(e) + 1);
      labels.labels.emplace(c.id, std::move(label));
      model.cubes.push_back(std::move(c));
    }
    if (events.empty()) break;
  }
  model.initial = "t";
  model.labeling = std::move(labels);
  return build_hda(model);
}

}  // namespace hda
