#include "hda/bisim/bisim.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hda/core/errors.hpp"
#include "hda/unfold/unfold.hpp"

namespace hda {

OpenMapCheck open_map_check(const Hda& X, const Hda& Y, const Morphism& f) {
  const auto reach = reachable_mask(X);
  for (CubeId x1 = 0; x1 < X.size(); ++x1) {
    if (!reach[x1]) continue;
    for (const auto& up : Y.cubes.cofaces(f(x1), Side::lower)) {
      bool lifted = false;
      for (const auto& cand : X.cubes.cofaces(x1, Side::lower)) {
        if (cand.k == up.k && f(cand.cube) == up.cube) {
          lifted = true;
          break;
        }
      }
      if (!lifted) return {false, OpenMapCounterexample{x1, up.cube, up.k}};
    }
  }
  return {};
}

namespace {

void require_same_events(const Hda& X, const Hda& Y) {
  if (!X.labeling || !Y.labeling) throw ModelError("labeled comparison needs labels on both models");
  if (X.labeling->events != Y.labeling->events) throw ModelError("models are labeled over different event lists");
}

/// Dense index over equal-dimension pairs.
class PairIndex {
 public:
  PairIndex(const PrecubicalSet& X, const PrecubicalSet& Y) : X_(X), Y_(Y) {
    const unsigned top = std::min(X.max_dim(), Y.max_dim());
    std::size_t offset = 0;
    for (unsigned n = 0; n <= top; ++n) {
      offsets_.push_back(offset);
      offset += X.count(n) * Y.count(n);
    }
    size_ = offset;
  }

  std::size_t size() const { return size_; }
  bool has(CubeId x, CubeId y) const {
    return X_.dim(x) == Y_.dim(y) && X_.dim(x) < offsets_.size();
  }
  std::size_t operator()(CubeId x, CubeId y) const {
    const unsigned n = X_.dim(x);
    return offsets_[n] + (x - X_.dim_range(n).first) * Y_.count(n) + (y - Y_.dim_range(n).first);
  }
  CubePair pair(std::size_t i) const {
    unsigned n = static_cast<unsigned>(std::upper_bound(offsets_.begin(), offsets_.end(), i) - offsets_.begin()) - 1;
    const std::size_t local = i - offsets_[n];
    return {X_.dim_range(n).first + static_cast<CubeId>(local / Y_.count(n)),
            Y_.dim_range(n).first + static_cast<CubeId>(local % Y_.count(n))};
  }

 private:
  const PrecubicalSet& X_;
  const PrecubicalSet& Y_;
  std::vector<std::size_t> offsets_;
  std::size_t size_ = 0;
};

BisimDecision decide(const Hda& X, const Hda& Y, bool labeled) {
  const auto& A = X.cubes;
  const auto& B = Y.cubes;
  const PairIndex index(A, B);
  const auto reach_x = reachable_mask(X);
  const auto reach_y = reachable_mask(Y);

  std::vector<char> alive(index.size(), 1);
  if (labeled) {
    for (std::size_t i = 0; i < index.size(); ++i) {
      auto [x, y] = index.pair(i);
      if (X.labeling->tuples[x] != Y.labeling->tuples[y]) alive[i] = 0;
    }
  }

  BisimDecision d;
  d.stats.universe = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), 1));

  auto is_alive = [&](CubeId x, CubeId y) { return alive[index(x, y)] != 0; };

  // Returns the first defect of a live pair, if any.
  auto evaluate = [&](CubeId x, CubeId y) -> std::optional<PairDefect> {
    ++d.stats.evaluations;
    for (Side s : kSides) {
      for (unsigned k = 0; k < A.dim(x); ++k) {
        if (!is_alive(A.face(x, k, s), B.face(y, k, s))) return PairDefect{PairDefect::Kind::face, k, side_bit(s), 0};
      }
    }
    if (!reach_x[x] || !reach_y[y]) return std::nullopt;
    for (const auto& cx : A.cofaces(x, Side::lower)) {
      bool matched = false;
      for (const auto& cy : B.cofaces(y, Side::lower)) {
        if (cy.k == cx.k && is_alive(cx.cube, cy.cube)) {
          matched = true;
          break;
        }
      }
      if (!matched) return PairDefect{PairDefect::Kind::forth, cx.k, 0, cx.cube};
    }
    for (const auto& cy : B.cofaces(y, Side::lower)) {
      bool matched = false;
      for (const auto& cx : A.cofaces(x, Side::lower)) {
        if (cx.k == cy.k && is_alive(cx.cube, cy.cube)) {
          matched = true;
          break;
        }
      }
      if (!matched) return PairDefect{PairDefect::Kind::back, cy.k, 0, cy.cube};
    }
    return std::nullopt;
  };

  std::vector<char> queued(index.size(), 0);
  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (alive[i]) work.push_back(i), queued[i] = 1;
  }
  // Initial processing order is by (dimension, id, id): cube ids are sorted
  // that way and the index is row-major per dimension.
  std::optional<PairDefect> initial_defect;
  const bool initial_in_universe = index.has(X.initial, Y.initial);
  const std::size_t initial_pair = initial_in_universe ? index(X.initial, Y.initial) : 0;

  auto enqueue = [&](CubeId x, CubeId y) {
    const std::size_t j = index(x, y);
    if (alive[j] && !queued[j]) queued[j] = 1, work.push_back(j);
  };

  while (!work.empty()) {
    const std::size_t i = work.front();
    work.pop_front();
    queued[i] = 0;
    if (!alive[i]) continue;
    auto [x, y] = index.pair(i);
    auto defect = evaluate(x, y);
    if (!defect) continue;
    alive[i] = 0;
    ++d.stats.deletions;
    if (i == initial_pair && initial_in_universe) initial_defect = defect;
    for (Side s : kSides) {
      for (const auto& cx : A.cofaces(x, s)) {
        for (const auto& cy : B.cofaces(y, s)) {
          if (cx.k == cy.k) enqueue(cx.cube, cy.cube);
        }
      }
    }
    for (unsigned k = 0; k < A.dim(x); ++k) {
      enqueue(A.face(x, k, Side::lower), B.face(y, k, Side::lower));
    }
  }

  d.bisimilar = initial_in_universe && alive[initial_pair];
  if (d.bisimilar) {
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (alive[i]) d.witness.push_back(index.pair(i));
    }
  } else {
    d.initial_defect = initial_defect;
  }
  return d;
}

}  // namespace

BisimDecision bisimilar(const Hda& X, const Hda& Y) {
  auto d = decide(X, Y, false);
  d.justification = "greatest face-closed relation with the one-step zig-zag on reachable pairs";
  return d;
}

BisimDecision labeled_bisimilar(const Hda& X, const Hda& Y) {
  require_same_events(X, Y);
  auto d = decide(X, Y, true);
  d.justification =
      "greatest face-closed relation with the one-step zig-zag on reachable pairs, "
      "restricted to pairs with equal label tuples (label component of the span is the identity)";
  return d;
}

BisimDecision hp_bisimilar(const Hda& X, const Hda& Y, bool labeled) {
  auto d = labeled ? labeled_bisimilar(X, Y) : bisimilar(X, Y);
  d.justification =
      "hp-bisimilar <=> homotopy bisimilar (unfoldings related by a zig-zag on homotopy classes) "
      "<=> bisimilar (span of open maps) <=> " +
      d.justification;
  return d;
}

RelationCheck check_bisim_relation(const Hda& X, const Hda& Y, const std::vector<CubePair>& pairs, bool labeled) {
  const auto& A = X.cubes;
  const auto& B = Y.cubes;
  std::set<CubePair> R(pairs.begin(), pairs.end());
  auto name = [&](CubePair p) { return pair_name(A.name(p.first), B.name(p.second)); };
  if (!R.count({X.initial, Y.initial})) return {false, "initial pair missing"};
  const auto reach_x = reachable_mask(X);
  const auto reach_y = reachable_mask(Y);
  for (auto [x, y] : R) {
    if (A.dim(x) != B.dim(y)) return {false, name({x, y}) + " has unequal dimensions"};
    if (labeled && X.labeling->tuples[x] != Y.labeling->tuples[y]) return {false, name({x, y}) + " has unequal labels"};
    for (Side s : kSides) {
      for (unsigned k = 0; k < A.dim(x); ++k) {
        if (!R.count({A.face(x, k, s), B.face(y, k, s)})) {
          return {false, name({x, y}) + " is missing face pair " + std::to_string(k + 1)};
        }
      }
    }
    if (!reach_x[x] || !reach_y[y]) continue;
    for (const auto& cx : A.cofaces(x, Side::lower)) {
      const bool ok = std::any_of(B.cofaces(y, Side::lower).begin(), B.cofaces(y, Side::lower).end(),
                                  [&](const Coface& cy) { return cy.k == cx.k && R.count({cx.cube, cy.cube}); });
      if (!ok) return {false, name({x, y}) + ": " + A.name(cx.cube) + " has no partner"};
    }
    for (const auto& cy : B.cofaces(y, Side::lower)) {
      const bool ok = std::any_of(A.cofaces(x, Side::lower).begin(), A.cofaces(x, Side::lower).end(),
                                  [&](const Coface& cx) { return cx.k == cy.k && R.count({cx.cube, cy.cube}); });
      if (!ok) return {false, name({x, y}) + ": " + B.name(cy.cube) + " has no partner"};
    }
  }
  return {};
}

RelationSpan relation_span(const Hda& X, const Hda& Y, const std::vector<CubePair>& pairs) {
  const auto& A = X.cubes;
  const auto& B = Y.cubes;
  ModelDecl decl;
  for (auto [x, y] : pairs) {
    CubeDecl d{pair_name(A.name(x), B.name(y)), static_cast<int>(A.dim(x)), {}, {}};
    for (unsigned k = 0; k < A.dim(x); ++k) {
      d.lower.push_back(pair_name(A.name(A.face(x, k, Side::lower)), B.name(B.face(y, k, Side::lower))));
      d.upper.push_back(pair_name(A.name(A.face(x, k, Side::upper)), B.name(B.face(y, k, Side::upper))));
    }
    decl.cubes.push_back(std::move(d));
  }
  decl.initial = pair_name(A.name(X.initial), B.name(Y.initial));
  RelationSpan span{build_hda(decl), {}, {}};
  span.left.map.resize(span.relation.size());
  span.right.map.resize(span.relation.size());
  for (auto [x, y] : pairs) {
    const CubeId r = span.relation.cubes.at(pair_name(A.name(x), B.name(y)));
    span.left.map[r] = x;
    span.right.map[r] = y;
  }
  return span;
}

OracleResult hp_oracle(const Hda& X, const Hda& Y, std::size_t depth, bool labeled, std::size_t cap) {
  if (labeled) require_same_events(X, Y);
  const Unfolding UX = unfold(X, depth, cap);
  const Unfolding UY = unfold(Y, depth, cap);
  const auto& A = UX.tree.cubes;
  const auto& B = UY.tree.cubes;

  // Plain round-based refinement over a set of node pairs.
  std::set<CubePair> R;
  for (CubeId x = 0; x < A.size(); ++x) {
    for (CubeId y = 0; y < B.size(); ++y) {
      if (A.dim(x) != B.dim(y)) continue;
      if (labeled && UX.tree.labeling->tuples[x] != UY.tree.labeling->tuples[y]) continue;
      R.insert({x, y});
    }
  }

  OracleResult out{OracleVerdict::inconclusive, UX.exact() && UY.exact(), depth, A.size(), B.size(), 0, 0};
  for (bool changed = true; changed;) {
    changed = false;
    ++out.rounds;
    std::set<CubePair> next;
    for (auto [x, y] : R) {
      bool keep = true;
      for (Side s : kSides) {
        for (unsigned k = 0; k < A.dim(x) && keep; ++k) keep = R.count({A.face(x, k, s), B.face(y, k, s)}) > 0;
      }
      if (keep && !UX.frontier[x] && !UY.frontier[y]) {
        for (const auto& cx : A.cofaces(x, Side::lower)) {
          bool found = false;
          for (const auto& cy : B.cofaces(y, Side::lower)) found = found || (cx.k == cy.k && R.count({cx.cube, cy.cube}));
          if (!found) keep = false;
        }
        for (const auto& cy : B.cofaces(y, Side::lower)) {
          bool found = false;
          for (const auto& cx : A.cofaces(x, Side::lower)) found = found || (cx.k == cy.k && R.count({cx.cube, cy.cube}));
          if (!found) keep = false;
        }
      }
      if (keep) next.insert({x, y});
      else changed = true;
    }
    R = std::move(next);
  }
  out.surviving = R.size();
  const bool root_survives = R.count({UX.tree.initial, UY.tree.initial}) > 0;
  if (!root_survives) out.verdict = OracleVerdict::not_bisimilar;
  else if (out.exact) out.verdict = OracleVerdict::bisimilar;
  return out;
}

std::string to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::bisimilar: return "true";
    case OracleVerdict::not_bisimilar: return "false";
    case OracleVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace hda
