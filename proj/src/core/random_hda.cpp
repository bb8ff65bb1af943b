#include "hda/core/random_hda.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hda {

ModelDecl standard_cube(unsigned n, const std::string& prefix) {
  ModelDecl decl;
  std::size_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::string word;
    for (std::size_t c = code, i = 0; i < n; ++i, c /= 3) word += "01x"[c % 3];
    CubeDecl d{prefix + word, static_cast<int>(std::count(word.begin(), word.end(), 'x')), {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      if (word[i] != 'x') continue;
      std::string lo = word, hi = word;
      lo[i] = '0';
      hi[i] = '1';
      d.lower.push_back(prefix + lo);
      d.upper.push_back(prefix + hi);
    }
    decl.cubes.push_back(std::move(d));
  }
  decl.initial = prefix + std::string(n, '0');
  return decl;
}

namespace {

struct Edge {
  std::string id;
  std::size_t src, dst;
  int label;  // 0-based event, -1 when unlabeled
};

}  // namespace

Hda random_hda(std::mt19937_64& rng, const RandomHdaOptions& o) {
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };

  ModelDecl decl;
  LabelingDecl lab;
  lab.events = {"a", "b"};
  const std::size_t nv = uniform(o.min_vertices, o.max_vertices);
  std::vector<std::string> vertex;
  for (std::size_t i = 0; i < nv; ++i) {
    vertex.push_back("v" + std::to_string(i));
    decl.cubes.push_back({vertex.back(), 0, {}, {}});
  }
  decl.initial = "v0";
  auto budget_left = [&] { return o.max_cubes > decl.cubes.size() ? o.max_cubes - decl.cubes.size() : 0; };

  std::vector<Edge> edges;
  auto add_edge = [&](std::size_t u, std::size_t w) {
    const int label = o.labeled ? static_cast<int>(uniform(0, 1)) : -1;
    edges.push_back({"e" + std::to_string(edges.size()), u, w, label});
    decl.cubes.push_back({edges.back().id, 1, {vertex[u]}, {vertex[w]}});
    if (o.labeled) lab.labels[edges.back().id] = {label + 1};
  };

  // Standard cube glued at its lowest corner.
  if (o.max_dim >= 2 && coin(o.seed_cube_probability)) {
    // The glued corner is shared, so a standard n-cube adds 3^n - 1 cubes.
    const unsigned n = (o.max_dim >= 3 && budget_left() >= 26 && coin(0.5)) ? 3 : 2;
    if (budget_left() >= (n == 3 ? 26u : 8u)) {
      ModelDecl cube = standard_cube(n, "q");
      const std::string base = vertex[uniform(0, nv - 1)];
      std::vector<int> coord_event(n);
      for (unsigned i = 0; i < n; ++i) coord_event[i] = static_cast<int>(uniform(0, 1));
      std::sort(coord_event.begin(), coord_event.end());
      auto rename = [&](const std::string& id) { return id == cube.initial ? base : id; };
      for (auto& c : cube.cubes) {
        if (c.id == cube.initial) continue;
        CubeDecl d{c.id, c.dim, {}, {}};
        for (auto& f : c.lower) d.lower.push_back(rename(f));
        for (auto& f : c.upper) d.upper.push_back(rename(f));
        if (o.labeled) {
          std::vector<int> t;
          for (unsigned i = 0; i < n; ++i) {
            if (c.id[1 + i] == 'x') t.push_back(coord_event[i] + 1);
          }
          lab.labels[c.id] = t;
        }
        decl.cubes.push_back(std::move(d));
      }
    }
  }

  // Random edges between the plain vertices.
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t w = 0; w < nv; ++w) {
      if (o.acyclic ? u < w : true) candidates.emplace_back(u, w);
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (auto [u, w] : candidates) {
    if (!budget_left()) break;
    if (coin(o.edge_density)) add_edge(u, w);
    // Occasionally a parallel edge.
    if (budget_left() && coin(o.edge_density * 0.2)) add_edge(u, w);
  }
  // Keep the initial vertex from being isolated most of the time.
  if (budget_left() && nv > 1 && std::none_of(edges.begin(), edges.end(), [](const Edge& e) { return e.src == 0; })) {
    add_edge(0, uniform(1, nv - 1));
  }

  // Squares: A = d_1^0 (s -> p), B = d_2^0 (s -> q), C = d_1^1 (q -> t),
  // D = d_2^1 (p -> t). Labels: tuple (l(B), l(A)) must be sorted. C != D:
  // a square whose two upper faces coincide has no well-defined unfolding.
  if (o.max_dim >= 2) {
    std::size_t squares = 0;
    const std::size_t want = uniform(0, o.max_squares);
    for (std::size_t attempt = 0; attempt < 40 && squares < want && budget_left(); ++attempt) {
      if (edges.empty()) break;
      const Edge& A = edges[uniform(0, edges.size() - 1)];
      std::vector<const Edge*> bs, cs, ds;
      for (const auto& e : edges) {
        if (e.src == A.src && e.id != A.id && (!o.labeled || e.label <= A.label)) bs.push_back(&e);
      }
      if (bs.empty()) continue;
      const Edge& B = *bs[uniform(0, bs.size() - 1)];
      for (const auto& e : edges) {
        if (e.src == B.dst && (!o.labeled || e.label == A.label)) cs.push_back(&e);
      }
      if (cs.empty()) continue;
      const Edge& C = *cs[uniform(0, cs.size() - 1)];
      for (const auto& e : edges) {
        if (e.src == A.dst && e.dst == C.dst && e.id != C.id && (!o.labeled || e.label == B.label)) ds.push_back(&e);
      }
      if (ds.empty()) continue;
      const Edge& D = *ds[uniform(0, ds.size() - 1)];
      const std::string id = "s" + std::to_string(squares++);
      decl.cubes.push_back({id, 2, {A.id, B.id}, {C.id, D.id}});
      if (o.labeled) lab.labels[id] = {B.label + 1, A.label + 1};
    }
  }

  if (o.labeled) {
    decl.labeling = std::move(lab);
  }
  return build_hda(decl);
}

}  // namespace hda
