#include "hda/paths/homotopy.hpp"

#include <algorithm>

#include "hda/core/errors.hpp"

namespace hda {

namespace {

// x == d_k^s y with k 1-based; false when k is out of range.
bool is_face(const PrecubicalSet& X, CubeId x, unsigned k, Side s, CubeId y) {
  return k >= 1 && k <= X.dim(y) && X.face(y, k - 1, s) == x;
}

std::optional<CubeId> face_opt(const PrecubicalSet& X, CubeId y, unsigned k, Side s) {
  if (k < 1 || k > X.dim(y)) return std::nullopt;
  return X.face(y, k - 1, s);
}

// Clauses with x the path through the replaced cube as written, y the other.
std::optional<Adjacency> match_clauses(const PrecubicalSet& X, std::span<const CubeId> x,
                                       std::span<const CubeId> y, std::size_t p) {
  const unsigned top = std::max({X.dim(x[p - 1]), X.dim(x[p]), X.dim(x[p + 1]), X.dim(y[p])}) + 1;
  for (unsigned l = 2; l <= top; ++l) {
    for (unsigned k = 1; k < l; ++k) {
      if (is_face(X, x[p - 1], k, Side::lower, x[p]) && is_face(X, x[p], l, Side::lower, x[p + 1]) &&
          is_face(X, y[p - 1], l - 1, Side::lower, y[p]) && is_face(X, y[p], k, Side::lower, y[p + 1])) {
        return Adjacency{1, false, p + 1, k, l};
      }
      if (is_face(X, x[p], k, Side::upper, x[p - 1]) && is_face(X, x[p + 1], l - 1, Side::upper, x[p]) &&
          is_face(X, y[p], l, Side::upper, y[p - 1]) && is_face(X, y[p + 1], k, Side::upper, y[p])) {
        return Adjacency{2, false, p + 1, k, l};
      }
      if (auto f = face_opt(X, y[p], l, Side::upper)) {
        if (is_face(X, x[p], k, Side::lower, *f) && is_face(X, y[p - 1], k, Side::lower, y[p]) &&
            *f == y[p + 1]) {
          return Adjacency{3, false, p + 1, k, l};
        }
      }
      if (auto f = face_opt(X, y[p], l, Side::lower)) {
        if (is_face(X, x[p], k, Side::upper, *f) && *f == y[p - 1] &&
            is_face(X, y[p + 1], k, Side::upper, y[p])) {
          return Adjacency{4, false, p + 1, k, l};
        }
      }
    }
  }
  return std::nullopt;
}

void push_unique(std::vector<CubeId>& v, CubeId x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

// Replacement cubes for position p (0-based, interior) of rho.
std::vector<CubeId> replacements(const PrecubicalSet& X, std::span<const CubeId> rho, std::size_t p) {
  const CubeId a = rho[p - 1], b = rho[p], c = rho[p + 1];
  const unsigned da = X.dim(a), db = X.dim(b), dc = X.dim(c);
  std::vector<CubeId> out;
  if (da + 1 == db && db + 1 == dc) {
    // a = d_r^0 b, b = d_s^0 c
    for (unsigned r = 1; r <= db; ++r) {
      if (X.face(b, r - 1, Side::lower) != a) continue;
      for (unsigned s = 1; s <= dc; ++s) {
        if (X.face(c, s - 1, Side::lower) != b) continue;
        push_unique(out, X.face(c, (r < s ? r : r + 1) - 1, Side::lower));
      }
    }
  } else if (da == db + 1 && db == dc + 1) {
    // b = d_r^1 a, c = d_s^1 b
    for (unsigned r = 1; r <= da; ++r) {
      if (X.face(a, r - 1, Side::upper) != b) continue;
      for (unsigned s = 1; s <= db; ++s) {
        if (X.face(b, s - 1, Side::upper) != c) continue;
        push_unique(out, X.face(a, (r <= s ? s + 1 : s) - 1, Side::upper));
      }
    }
  } else if (da == db + 1 && dc == db + 1) {
    // b is a corner below a and c: look for a cube Y spanning a (entered
    // through a lower face) and c (left through an upper face).
    for (const auto& co : X.cofaces(a, Side::lower)) {
      const CubeId Y = co.cube;
      const unsigned e = co.k + 1;
      for (unsigned o = 1; o <= X.dim(Y); ++o) {
        if (o == e || X.face(Y, o - 1, Side::upper) != c) continue;
        const CubeId corner = e < o ? X.face(X.face(Y, o - 1, Side::upper), e - 1, Side::lower)
                                    : X.face(X.face(Y, e - 1, Side::lower), o - 1, Side::upper);
        if (corner == b) push_unique(out, Y);
      }
    }
  } else if (db == da + 1 && db == dc + 1 && db >= 2) {
    // a = d_e^0 b, c = d_o^1 b: pass through the corner instead.
    for (unsigned e = 1; e <= db; ++e) {
      if (X.face(b, e - 1, Side::lower) != a) continue;
      for (unsigned o = 1; o <= db; ++o) {
        if (o == e || X.face(b, o - 1, Side::upper) != c) continue;
        const CubeId corner = e < o ? X.face(X.face(b, o - 1, Side::upper), e - 1, Side::lower)
                                    : X.face(X.face(b, e - 1, Side::lower), o - 1, Side::upper);
        push_unique(out, corner);
      }
    }
  }
  std::erase(out, b);
  return out;
}

}  // namespace

std::optional<Adjacency> is_adjacent(const PrecubicalSet& X, std::span<const CubeId> rho,
                                     std::span<const CubeId> sigma) {
  if (rho.size() != sigma.size() || rho.size() < 3) return std::nullopt;
  if (rho.front() != sigma.front() || rho.back() != sigma.back()) return std::nullopt;
  std::size_t diff = 0, p = 0;
  for (std::size_t j = 0; j < rho.size(); ++j) {
    if (rho[j] != sigma[j]) ++diff, p = j;
  }
  if (diff != 1) return std::nullopt;
  if (auto a = match_clauses(X, rho, sigma, p)) return a;
  if (auto a = match_clauses(X, sigma, rho, p)) {
    a->mirrored = true;
    return a;
  }
  return std::nullopt;
}

std::vector<CubePath> adjacent_paths(const PrecubicalSet& X, std::span<const CubeId> rho) {
  std::vector<CubePath> out;
  for (std::size_t p = 1; p + 1 < rho.size(); ++p) {
    for (CubeId b : replacements(X, rho, p)) {
      CubePath q(rho.begin(), rho.end());
      q[p] = b;
      out.push_back(std::move(q));
    }
  }
  return out;
}

HomotopyOutcome are_homotopic(const PrecubicalSet& X, std::span<const CubeId> rho,
                              std::span<const CubeId> sigma, std::size_t cap) {
  if (rho.size() != sigma.size() || rho.front() != sigma.front() || rho.back() != sigma.back()) {
    return {HomotopyResult::not_homotopic, 1};
  }
  const CubePath target(sigma.begin(), sigma.end());
  bool found = false;
  std::size_t explored = 0;
  const bool complete = walk_homotopy_class(X, rho, cap, [&](const CubePath& p) {
    ++explored;
    found = p == target;
    return found;
  });
  if (found) return {HomotopyResult::homotopic, explored};
  return {complete ? HomotopyResult::not_homotopic : HomotopyResult::exhausted, explored};
}

std::vector<CubePath> homotopy_class(const PrecubicalSet& X, std::span<const CubeId> rho, std::size_t cap) {
  std::vector<CubePath> out;
  const bool complete = walk_homotopy_class(X, rho, cap, [&](const CubePath& p) {
    out.push_back(p);
    return false;
  });
  if (!complete) {
    throw CapExceeded("homotopy class of " + path_string(X, rho) + " exceeds " + std::to_string(cap) + " paths",
                      cap);
  }
  std::sort(out.begin(), out.end(), PathNameLess{&X});
  return out;
}

}  // namespace hda
