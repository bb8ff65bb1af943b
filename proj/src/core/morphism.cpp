#include "hda/core/morphism.hpp"

#include <algorithm>
#include <numeric>

#include "hda/core/errors.hpp"

namespace hda {

Morphism morphism_from_names(const PrecubicalSet& source, const PrecubicalSet& target,
                             const std::map<std::string, std::string>& table) {
  Morphism f{std::vector<CubeId>(source.size(), 0)};
  std::vector<char> seen(source.size(), 0);
  for (const auto& [from, to] : table) {
    const CubeId x = source.at(from);
    f.map[x] = target.at(to);
    seen[x] = 1;
  }
  for (CubeId x = 0; x < source.size(); ++x) {
    if (!seen[x]) throw ModelError("map is not total: no image for '" + source.name(x) + "'");
  }
  return f;
}

Morphism identity_morphism(const PrecubicalSet& cubes) {
  Morphism f{std::vector<CubeId>(cubes.size())};
  std::iota(f.map.begin(), f.map.end(), 0);
  return f;
}

MorphismCheck check_morphism(const PrecubicalSet& source, const PrecubicalSet& target, const Morphism& f) {
  if (f.map.size() != source.size()) return {false, "map size does not match the source"};
  for (CubeId x = 0; x < source.size(); ++x) {
    const CubeId y = f(x);
    if (y >= target.size()) return {false, "image of '" + source.name(x) + "' is out of range"};
    if (source.dim(x) != target.dim(y)) {
      return {false, "'" + source.name(x) + "' (dim " + std::to_string(source.dim(x)) + ") maps to '" +
                         target.name(y) + "' (dim " + std::to_string(target.dim(y)) + ")"};
    }
    for (Side s : kSides) {
      for (unsigned k = 0; k < source.dim(x); ++k) {
        const CubeId image_of_face = f(source.face(x, k, s));
        const CubeId face_of_image = target.face(y, k, s);
        if (image_of_face != face_of_image) {
          return {false, "d" + std::to_string(k + 1) + "^" + std::to_string(side_bit(s)) + " of '" +
                             source.name(x) + "' maps to '" + target.name(image_of_face) + "', expected '" +
                             target.name(face_of_image) + "'"};
        }
      }
    }
  }
  return {};
}

MorphismCheck check_pointed_morphism(const Hda& source, const Hda& target, const Morphism& f) {
  auto check = check_morphism(source.cubes, target.cubes, f);
  if (!check.ok) return check;
  if (f(source.initial) != target.initial) return {false, "initial cube is not preserved"};
  return {};
}

std::string pair_name(const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; }

Product product(const PrecubicalSet& x, const PrecubicalSet& y) {
  std::vector<CubeDecl> decls;
  const unsigned top = std::min(x.max_dim(), y.max_dim());
  for (unsigned n = 0; n <= top && !x.empty() && !y.empty(); ++n) {
    auto [x0, x1] = x.dim_range(n);
    auto [y0, y1] = y.dim_range(n);
    for (CubeId a = x0; a < x1; ++a) {
      for (CubeId b = y0; b < y1; ++b) {
        CubeDecl d{pair_name(x.name(a), y.name(b)), static_cast<int>(n), {}, {}};
        for (unsigned k = 0; k < n; ++k) {
          d.lower.push_back(pair_name(x.name(x.face(a, k, Side::lower)), y.name(y.face(b, k, Side::lower))));
          d.upper.push_back(pair_name(x.name(x.face(a, k, Side::upper)), y.name(y.face(b, k, Side::upper))));
        }
        decls.push_back(std::move(d));
      }
    }
  }
  Product p;
  p.cubes = PrecubicalSet::build(decls);
  p.components.resize(p.cubes.size());
  std::size_t i = 0;
  for (unsigned n = 0; n <= top && !x.empty() && !y.empty(); ++n) {
    auto [x0, x1] = x.dim_range(n);
    auto [y0, y1] = y.dim_range(n);
    for (CubeId a = x0; a < x1; ++a) {
      for (CubeId b = y0; b < y1; ++b) p.components[p.cubes.at(decls[i++].id)] = {a, b};
    }
  }
  return p;
}

namespace {

/// Joint colour refinement over the disjoint union of two precubical sets.
class Refinement {
 public:
  Refinement(const Hda& x, const Hda& y) : x_(x), y_(y) {
    colours_x_.resize(x.size());
    colours_y_.resize(y.size());
    compress();
    for (std::size_t round = 0; round < x.size() + y.size(); ++round) {
      const std::size_t before = distinct_;
      refine();
      if (distinct_ == before) break;
    }
  }

  const std::vector<std::size_t>& x() const { return colours_x_; }
  const std::vector<std::size_t>& y() const { return colours_y_; }

 private:
  using Signature = std::vector<std::size_t>;

  static Signature seed(const Hda& h, CubeId c) {
    Signature s{h.cubes.dim(c), c == h.initial ? 1u : 0u};
    for (Side side : kSides) {
      std::vector<std::size_t> per_k;
      for (const auto& cf : h.cubes.cofaces(c, side)) {
        if (per_k.size() <= cf.k) per_k.resize(cf.k + 1, 0);
        ++per_k[cf.k];
      }
      s.push_back(per_k.size());
      s.insert(s.end(), per_k.begin(), per_k.end());
    }
    return s;
  }

  Signature signature(const Hda& h, const std::vector<std::size_t>& colours, CubeId c) const {
    Signature s{colours[c]};
    for (Side side : kSides) {
      for (CubeId f : h.cubes.faces(c, side)) s.push_back(colours[f]);
      std::vector<std::pair<std::size_t, std::size_t>> co;
      for (const auto& cf : h.cubes.cofaces(c, side)) co.emplace_back(cf.k, colours[cf.cube]);
      std::sort(co.begin(), co.end());
      s.push_back(co.size());
      for (auto [k, col] : co) {
        s.push_back(k);
        s.push_back(col);
      }
    }
    return s;
  }

  void refine() {
    std::vector<Signature> sx(x_.size()), sy(y_.size());
    for (CubeId c = 0; c < x_.size(); ++c) sx[c] = signature(x_, colours_x_, c);
    for (CubeId c = 0; c < y_.size(); ++c) sy[c] = signature(y_, colours_y_, c);
    std::map<Signature, std::size_t> ids;
    for (auto& s : sx) ids.emplace(s, 0);
    for (auto& s : sy) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (CubeId c = 0; c < x_.size(); ++c) colours_x_[c] = ids[sx[c]];
    for (CubeId c = 0; c < y_.size(); ++c) colours_y_[c] = ids[sy[c]];
    distinct_ = next;
  }

  void compress() {
    std::map<Signature, std::size_t> ids;
    std::vector<Signature> sx(x_.size()), sy(y_.size());
    for (CubeId c = 0; c < x_.size(); ++c) sx[c] = seed(x_, c);
    for (CubeId c = 0; c < y_.size(); ++c) sy[c] = seed(y_, c);
    for (auto& s : sx) ids.emplace(s, 0);
    for (auto& s : sy) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (CubeId c = 0; c < x_.size(); ++c) colours_x_[c] = ids[sx[c]];
    for (CubeId c = 0; c < y_.size(); ++c) colours_y_[c] = ids[sy[c]];
    distinct_ = next;
  }

  const Hda& x_;
  const Hda& y_;
  std::vector<std::size_t> colours_x_;
  std::vector<std::size_t> colours_y_;
  std::size_t distinct_ = 0;
};

class IsoSearch {
 public:
  IsoSearch(const Hda& x, const Hda& y, const Refinement& colours)
      : x_(x), y_(y), colours_(colours), forward_(x.size(), kNone), backward_(y.size(), kNone) {
    order_.resize(x.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](CubeId a, CubeId b) { return x.cubes.dim(a) > x.cubes.dim(b); });
  }

  std::optional<Morphism> run() {
    if (!assign(x_.initial, y_.initial)) return std::nullopt;
    if (!search(0)) return std::nullopt;
    return Morphism{forward_};
  }

 private:
  static constexpr CubeId kNone = static_cast<CubeId>(-1);

  // Maps a -> b and forces all faces; records every new binding on the trail.
  bool assign(CubeId a, CubeId b) {
    if (forward_[a] != kNone) return forward_[a] == b;
    if (backward_[b] != kNone) return false;
    if (colours_.x()[a] != colours_.y()[b]) return false;
    forward_[a] = b;
    backward_[b] = a;
    trail_.push_back(a);
    for (Side s : kSides) {
      for (unsigned k = 0; k < x_.cubes.dim(a); ++k) {
        if (!assign(x_.cubes.face(a, k, s), y_.cubes.face(b, k, s))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const CubeId a = trail_.back();
      trail_.pop_back();
      backward_[forward_[a]] = kNone;
      forward_[a] = kNone;
    }
  }

  bool search(std::size_t pos) {
    while (pos < order_.size() && forward_[order_[pos]] != kNone) ++pos;
    if (pos == order_.size()) return true;
    const CubeId a = order_[pos];
    auto [first, last] = y_.cubes.dim_range(x_.cubes.dim(a));
    for (CubeId b = first; b < last; ++b) {
      if (backward_[b] != kNone || colours_.y()[b] != colours_.x()[a]) continue;
      const std::size_t mark = trail_.size();
      if (assign(a, b) && search(pos + 1)) return true;
      undo(mark);
    }
    return false;
  }

  const Hda& x_;
  const Hda& y_;
  const Refinement& colours_;
  std::vector<CubeId> forward_;
  std::vector<CubeId> backward_;
  std::vector<CubeId> order_;
  std::vector<CubeId> trail_;
};

}  // namespace

std::optional<Morphism> find_pointed_isomorphism(const Hda& x, const Hda& y) {
  if (x.size() != y.size()) return std::nullopt;
  for (unsigned n = 0; n <= std::max(x.cubes.max_dim(), y.cubes.max_dim()); ++n) {
    if (x.cubes.count(n) != y.cubes.count(n)) return std::nullopt;
  }
  Refinement colours(x, y);
  auto iso = IsoSearch(x, y, colours).run();
  if (iso && !check_pointed_morphism(x, y, *iso).ok) return std::nullopt;
  return iso;
}

}  // namespace hda
