#include "hda/paths/cube_path.hpp"

#include <algorithm>

#include "hda/core/errors.hpp"

namespace hda {

std::optional<StepInfo> step_between(const PrecubicalSet& X, CubeId from, CubeId to) {
  if (X.dim(to) == X.dim(from) + 1) {
    auto lower = X.faces(to, Side::lower);
    for (unsigned k = 0; k < lower.size(); ++k) {
      if (lower[k] == from) return StepInfo{StepKind::lower_of_next, k};
    }
  } else if (X.dim(from) == X.dim(to) + 1) {
    auto upper = X.faces(from, Side::upper);
    for (unsigned k = 0; k < upper.size(); ++k) {
      if (upper[k] == to) return StepInfo{StepKind::upper_of_previous, k};
    }
  }
  return std::nullopt;
}

PathDiagnosis diagnose_cube_path(const PrecubicalSet& X, std::span<const CubeId> seq) {
  PathDiagnosis d;
  if (seq.empty()) {
    d.ok = false;
    return d;
  }
  for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
    auto s = step_between(X, seq[j], seq[j + 1]);
    if (!s) {
      d.ok = false;
      d.failed_at = j;
      return d;
    }
    d.steps.push_back(*s);
  }
  return d;
}

bool is_cube_path(const PrecubicalSet& X, std::span<const CubeId> seq) {
  if (seq.empty()) return false;
  for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
    if (!step_between(X, seq[j], seq[j + 1])) return false;
  }
  return true;
}

CubePath parse_path(const PrecubicalSet& X, std::string_view text) {
  CubePath out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw ParseError("empty id in path '" + std::string(text) + "'");
    out.push_back(X.at(token));
    start = end + 1;
  }
  return out;
}

std::string path_string(const PrecubicalSet& X, std::span<const CubeId> seq, std::string_view sep) {
  std::string out;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (j) out += sep;
    out += X.name(seq[j]);
  }
  return out;
}

std::vector<std::string> path_names(const PrecubicalSet& X, std::span<const CubeId> seq) {
  std::vector<std::string> out;
  out.reserve(seq.size());
  for (CubeId x : seq) out.push_back(X.name(x));
  return out;
}

CubePath concat(const PrecubicalSet& X, std::span<const CubeId> rho, std::span<const CubeId> sigma) {
  if (!is_cube_path(X, rho)) throw PathError("left operand is not a cube path");
  if (!is_cube_path(X, sigma)) throw PathError("right operand is not a cube path");
  if (!step_between(X, rho.back(), sigma.front())) {
    throw PathError("cannot join " + X.name(rho.back()) + " to " + X.name(sigma.front()));
  }
  CubePath out(rho.begin(), rho.end());
  out.insert(out.end(), sigma.begin(), sigma.end());
  return out;
}

bool is_prefix(std::span<const CubeId> rho, std::span<const CubeId> chi) {
  return rho.size() <= chi.size() && std::equal(rho.begin(), rho.end(), chi.begin());
}

bool PathNameLess::operator()(std::span<const CubeId> a, std::span<const CubeId> b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [this](CubeId x, CubeId y) { return X->name(x) < X->name(y); });
}

namespace detail {

std::vector<CubeId> successors_by_name(const PrecubicalSet& X, CubeId x) {
  auto out = step_successors(X, x);
  std::sort(out.begin(), out.end(), [&](CubeId a, CubeId b) { return X.name(a) < X.name(b); });
  return out;
}

}  // namespace detail

std::vector<CubePath> enumerate_pointed_paths(const Hda& X, std::size_t max_len) {
  std::vector<CubePath> out;
  for_each_pointed_path(X, max_len, [&](const CubePath& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace hda
