#include "hda/core/cube_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hda/core/errors.hpp"

namespace hda {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::duplicate_id: return "duplicate-id";
    case ViolationKind::bad_dimension: return "bad-dimension";
    case ViolationKind::arity: return "arity";
    case ViolationKind::dangling_face: return "dangling-face";
    case ViolationKind::face_dimension: return "face-dimension";
    case ViolationKind::identity: return "identity";
    case ViolationKind::initial_missing: return "initial-missing";
    case ViolationKind::initial_dimension: return "initial-dimension";
    case ViolationKind::label_missing: return "label-missing";
    case ViolationKind::label_length: return "label-length";
    case ViolationKind::label_unsorted: return "label-unsorted";
    case ViolationKind::label_range: return "label-range";
    case ViolationKind::label_face: return "label-face";
    case ViolationKind::label_unknown_cube: return "label-unknown-cube";
    case ViolationKind::events_duplicate: return "events-duplicate";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    const auto& v = violations[i];
    out << to_string(v.kind) << " at '" << v.cube << "'";
    if (!v.message.empty()) out << ": " << v.message;
  }
  return out.str();
}

namespace {

std::string face_name(int k, int nu) {
  return "d" + std::to_string(k) + "^" + std::to_string(nu);
}

}  // namespace

ValidationReport validate_precubical(std::span<const CubeDecl> cubes) {
  ValidationReport report;
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    if (!index.emplace(cubes[i].id, i).second) {
      report.violations.push_back({ViolationKind::duplicate_id, cubes[i].id, 0, 0, 0, 0, {}, {},
                                   "id declared more than once"});
    }
  }

  // A cube is "well formed" when its arity is right and every face resolves to
  // a cube of dimension dim-1; only those take part in the identity check.
  std::vector<char> well_formed(cubes.size(), 1);
  auto lookup = [&](const std::string& id) -> const CubeDecl* {
    auto it = index.find(id);
    return it == index.end() ? nullptr : &cubes[it->second];
  };

  for (std::size_t i = 0; i < cubes.size(); ++i) {
    const auto& c = cubes[i];
    if (c.dim < 0) {
      report.violations.push_back({ViolationKind::bad_dimension, c.id, 0, 0, 0, 0, {}, {},
                                   "negative dimension"});
      well_formed[i] = 0;
      continue;
    }
    const auto n = static_cast<std::size_t>(c.dim);
    if (c.lower.size() != n || c.upper.size() != n) {
      std::ostringstream msg;
      msg << "dimension " << n << " but " << c.lower.size() << " lower and " << c.upper.size()
          << " upper faces";
      report.violations.push_back({ViolationKind::arity, c.id, 0, 0, 0, 0, {}, {}, msg.str()});
      well_formed[i] = 0;
    }
    for (int nu = 0; nu < 2; ++nu) {
      const auto& list = nu == 0 ? c.lower : c.upper;
      for (std::size_t k = 0; k < list.size(); ++k) {
        const CubeDecl* f = lookup(list[k]);
        if (!f) {
          report.violations.push_back({ViolationKind::dangling_face, c.id, static_cast<int>(k + 1), 0, nu, 0,
                                       list[k], {},
                                       face_name(static_cast<int>(k + 1), nu) + " refers to unknown cube '" +
                                           list[k] + "'"});
          well_formed[i] = 0;
        } else if (f->dim != c.dim - 1) {
          report.violations.push_back({ViolationKind::face_dimension, c.id, static_cast<int>(k + 1), 0, nu, 0,
                                       list[k], {},
                                       face_name(static_cast<int>(k + 1), nu) + " has dimension " +
                                           std::to_string(f->dim)});
          well_formed[i] = 0;
        }
      }
    }
  }

  auto face_of = [&](const CubeDecl& c, int k, int nu) -> const std::string& {
    return (nu == 0 ? c.lower : c.upper)[static_cast<std::size_t>(k - 1)];
  };

  for (std::size_t i = 0; i < cubes.size(); ++i) {
    const auto& x = cubes[i];
    if (!well_formed[i] || x.dim < 2) continue;
    for (int k = 1; k <= x.dim; ++k) {
      for (int l = k + 1; l <= x.dim; ++l) {
        for (int nu = 0; nu < 2; ++nu) {
          for (int mu = 0; mu < 2; ++mu) {
            const auto fi = index.at(face_of(x, l, mu));
            const auto gi = index.at(face_of(x, k, nu));
            if (!well_formed[fi] || !well_formed[gi]) continue;
            // d_k^nu d_l^mu x  versus  d_{l-1}^mu d_k^nu x
            const std::string& lhs = face_of(cubes[fi], k, nu);
            const std::string& rhs = face_of(cubes[gi], l - 1, mu);
            if (lhs != rhs) {
              std::ostringstream msg;
              msg << face_name(k, nu) << face_name(l, mu) << " = '" << lhs << "' but " << face_name(l - 1, mu)
                  << face_name(k, nu) << " = '" << rhs << "'";
              report.violations.push_back({ViolationKind::identity, x.id, k, l, nu, mu, lhs, rhs, msg.str()});
            }
          }
        }
      }
    }
  }
  return report;
}

PrecubicalSet PrecubicalSet::build(std::span<const CubeDecl> cubes) {
  if (auto report = validate_precubical(cubes); !report.ok()) throw ModelError(report.summary());

  std::vector<std::size_t> order(cubes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cubes[a].dim != cubes[b].dim) return cubes[a].dim < cubes[b].dim;
    return cubes[a].id < cubes[b].id;
  });

  PrecubicalSet set;
  const std::size_t count = cubes.size();
  set.names_.reserve(count);
  set.dims_.reserve(count);
  for (std::size_t pos = 0; pos < count; ++pos) {
    const auto& c = cubes[order[pos]];
    set.index_.emplace(c.id, static_cast<CubeId>(pos));
    set.names_.push_back(c.id);
    set.dims_.push_back(static_cast<unsigned>(c.dim));
  }

  unsigned top = 0;
  for (auto d : set.dims_) top = std::max(top, d);
  set.dim_begin_.assign(count ? top + 2 : 0, static_cast<CubeId>(count));
  for (std::size_t pos = count; pos-- > 0;) set.dim_begin_[set.dims_[pos]] = static_cast<CubeId>(pos);
  for (std::size_t n = set.dim_begin_.size(); n-- > 1;) {
    set.dim_begin_[n - 1] = std::min(set.dim_begin_[n - 1], set.dim_begin_[n]);
  }

  set.face_offset_.resize(count + 1, 0);
  for (std::size_t pos = 0; pos < count; ++pos) set.face_offset_[pos + 1] = set.face_offset_[pos] + 2 * set.dims_[pos];
  set.faces_.resize(set.face_offset_[count]);
  for (std::size_t pos = 0; pos < count; ++pos) {
    const auto& c = cubes[order[pos]];
    std::size_t at = set.face_offset_[pos];
    for (const auto& f : c.lower) set.faces_[at++] = set.index_.at(f);
    for (const auto& f : c.upper) set.faces_[at++] = set.index_.at(f);
  }

  // Coface tables, grouped per face cube, in ascending (k, coface) order.
  for (Side s : kSides) {
    auto& offsets = s == Side::lower ? set.lower_coface_offset_ : set.upper_coface_offset_;
    auto& table = s == Side::lower ? set.lower_cofaces_ : set.upper_cofaces_;
    std::vector<std::vector<Coface>> buckets(count);
    for (CubeId y = 0; y < count; ++y) {
      const auto fs = set.faces(y, s);
      for (std::uint32_t k = 0; k < fs.size(); ++k) buckets[fs[k]].push_back({y, k});
    }
    offsets.assign(count + 1, 0);
    for (std::size_t x = 0; x < count; ++x) {
      auto& b = buckets[x];
      std::sort(b.begin(), b.end(), [](const Coface& p, const Coface& q) {
        return p.k != q.k ? p.k < q.k : p.cube < q.cube;
      });
      offsets[x + 1] = offsets[x] + b.size();
      table.insert(table.end(), b.begin(), b.end());
    }
  }
  return set;
}

std::optional<CubeId> PrecubicalSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CubeId PrecubicalSet::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw ParseError("unknown cube id '" + std::string(name) + "'");
}

std::vector<CubeDecl> PrecubicalSet::decls() const {
  std::vector<CubeDecl> out;
  out.reserve(size());
  for (CubeId x = 0; x < size(); ++x) {
    CubeDecl d{names_[x], static_cast<int>(dims_[x]), {}, {}};
    for (auto f : faces(x, Side::lower)) d.lower.push_back(names_[f]);
    for (auto f : faces(x, Side::upper)) d.upper.push_back(names_[f]);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace hda
