#include "hda/paths/fan.hpp"

#include <stdexcept>

#include "hda/core/errors.hpp"

namespace hda {

std::size_t t_measure(const PrecubicalSet& X, std::span<const CubeId> seq) {
  std::size_t t = 0;
  for (CubeId x : seq) t += X.dim(x);
  return t;
}

std::size_t twice_t_lower_bound(const PrecubicalSet& X, std::span<const CubeId> seq) {
  const std::size_t n = X.dim(seq.back());
  return n * n + seq.size() - 1;
}

bool is_fan_shaped(const PrecubicalSet& X, std::span<const CubeId> seq) {
  const long m = static_cast<long>(seq.size());
  const long n = X.dim(seq.back());
  for (long j = 1; j <= m; ++j) {
    const long want = j <= m - n ? (j % 2 == 1 ? 0 : 1) : n + j - m;
    if (static_cast<long>(X.dim(seq[j - 1])) != want) return false;
  }
  return true;
}

namespace {

// Least 1-based k with d_k^s of `of` equal to x, or 0.
unsigned face_index(const PrecubicalSet& X, CubeId x, Side s, CubeId of) {
  auto f = X.faces(of, s);
  for (unsigned k = 0; k < f.size(); ++k) {
    if (f[k] == x) return k + 1;
  }
  return 0;
}

}  // namespace

FanResult fan_shape(const PrecubicalSet& X, std::span<const CubeId> seq) {
  if (!is_cube_path(X, seq)) throw PathError("fan_shape: not a cube path");
  if (X.dim(seq.front()) != 0) throw PathError("fan_shape: path must start at a 0-cube");

  FanResult r{CubePath(seq.begin(), seq.end()), {}};
  CubePath& x = r.path;
  const std::size_t m = x.size();
  // 1-based accessors
  auto at = [&](std::size_t j) -> CubeId& { return x[j - 1]; };

  while (!is_fan_shaped(X, x)) {
    std::size_t l = 0;
    unsigned k2 = 0, k3 = 0;
    for (std::size_t j = 3; j + 1 <= m; ++j) {
      if (X.dim(at(j)) < 2) continue;
      k2 = face_index(X, at(j - 1), Side::lower, at(j));
      k3 = face_index(X, at(j + 1), Side::upper, at(j));
      if (k2 && k3) {
        l = j;
        break;
      }
    }
    if (!l) throw std::logic_error("fan_shape: no reducible peak in a path that is not fan-shaped");

    if (k2 == k3) {
      const unsigned k1 = face_index(X, at(l - 2), Side::lower, at(l - 1));
      if (!k1) throw std::logic_error("fan_shape: peak not preceded by two lower steps");
      const unsigned k = k1 < k2 ? k1 : k1 + 1;
      const CubeId replacement = X.face(at(l), k - 1, Side::lower);
      if (replacement != at(l - 1)) {
        at(l - 1) = replacement;
        r.trace.push_back({x, l - 1, false});
      }
      k2 = k;
    }
    if (k2 < k3) {
      at(l) = X.face(at(l + 1), k2 - 1, Side::lower);
    } else {
      at(l) = X.face(at(l - 1), k3 - 1, Side::upper);
    }
    r.trace.push_back({x, l, true});
  }
  return r;
}

}  // namespace hda
