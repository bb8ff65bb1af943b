#pragma once

#include <algorithm>

namespace hda {

namespace detail {
std::vector<CubeId> successors_by_name(const PrecubicalSet& X, CubeId x);
}

template <typename F>
void for_each_pointed_path(const Hda& X, std::size_t max_len, F visit) {
  if (max_len == 0) return;
  std::vector<CubePath> level{{X.initial}};
  for (std::size_t len = 1;; ++len) {
    for (const auto& p : level) {
      if (!visit(static_cast<const CubePath&>(p))) return;
    }
    if (len == max_len) return;
    std::vector<CubePath> next;
    for (const auto& p : level) {
      for (CubeId y : detail::successors_by_name(X.cubes, p.back())) {
        CubePath q = p;
        q.push_back(y);
        next.push_back(std::move(q));
      }
    }
    if (next.empty()) return;
    level = std::move(next);
  }
}

}  // namespace hda
