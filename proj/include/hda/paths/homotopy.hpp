#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hda/paths/cube_path.hpp"

namespace hda {

inline constexpr std::size_t kDefaultHomotopyCap = 100000;

/// Which adjacency clause relates two paths at their single differing
/// position. Indices are 1-based, as written in the clauses; `mirrored` means
/// the clause matched with the roles of the two paths exchanged.
///   1: both steps around p are lower-face steps (the two orders of starting)
///   2: both steps are upper-face steps (the two orders of ending)
///   3: x_p = d_k^0 d_l^1 y_p, y_{p-1} = d_k^0 y_p, y_{p+1} = d_l^1 y_p
///   4: x_p = d_k^1 d_l^0 y_p, y_{p-1} = d_l^0 y_p, y_{p+1} = d_k^1 y_p
struct Adjacency {
  int clause = 0;
  bool mirrored = false;
  std::size_t position = 0;
  unsigned k = 0;
  unsigned l = 0;
};

/// Literal check of the four clauses, trying every k < l.
std::optional<Adjacency> is_adjacent(const PrecubicalSet& X, std::span<const CubeId> rho,
                                     std::span<const CubeId> sigma);

/// Every path adjacent to rho, generated by solving the clauses for the
/// replacement cube. Deduplicated, in no particular order.
std::vector<CubePath> adjacent_paths(const PrecubicalSet& X, std::span<const CubeId> rho);

enum class HomotopyResult { homotopic, not_homotopic, exhausted };

struct HomotopyOutcome {
  HomotopyResult result;
  std::size_t explored;  // distinct paths seen by the closure
};

/// Breadth-first adjacency closure from rho, stopping at sigma. `exhausted`
/// only when more than `cap` distinct paths were generated.
HomotopyOutcome are_homotopic(const PrecubicalSet& X, std::span<const CubeId> rho,
                              std::span<const CubeId> sigma, std::size_t cap = kDefaultHomotopyCap);

/// Full closure, sorted by PathNameLess. Throws CapExceeded past `cap` paths.
std::vector<CubePath> homotopy_class(const PrecubicalSet& X, std::span<const CubeId> rho,
                                     std::size_t cap = kDefaultHomotopyCap);

/// Visits the closure breadth-first; `visit` returning true stops the search.
/// Returns false if the cap was hit before the closure or the visit finished.
template <typename F>
bool walk_homotopy_class(const PrecubicalSet& X, std::span<const CubeId> rho, std::size_t cap, F visit);

struct PathHash {
  std::size_t operator()(const CubePath& p) const noexcept {
    std::size_t h = p.size();
    for (CubeId x : p) h = (h ^ x) * 0x100000001b3ULL + 0x9e3779b97f4a7c15ULL;
    return h;
  }
};

}  // namespace hda

#include <deque>
#include <unordered_set>

namespace hda {

template <typename F>
bool walk_homotopy_class(const PrecubicalSet& X, std::span<const CubeId> rho, std::size_t cap, F visit) {
  std::unordered_set<CubePath, PathHash> seen;
  std::deque<CubePath> queue;
  CubePath start(rho.begin(), rho.end());
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    CubePath p = std::move(queue.front());
    queue.pop_front();
    if (visit(static_cast<const CubePath&>(p))) return true;
    for (auto& q : adjacent_paths(X, p)) {
      if (seen.count(q)) continue;
      if (seen.size() >= cap) return false;
      seen.insert(q);
      queue.push_back(std::move(q));
    }
  }
  return true;
}

}  // namespace hda
