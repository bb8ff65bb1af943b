#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hda {

/// Dense index of a cube inside one PrecubicalSet. Cubes are numbered in
/// ascending (dimension, id) order, so every dimension is a contiguous range.
using CubeId = std::uint32_t;

enum class Side : std::uint8_t { lower = 0, upper = 1 };

inline constexpr Side kSides[] = {Side::lower, Side::upper};

inline int side_bit(Side s) { return s == Side::lower ? 0 : 1; }

/// A cube as written in a model file. Face lists are positional: entry k-1
/// holds the k-th face.
struct CubeDecl {
  std::string id;
  int dim = 0;
  std::vector<std::string> lower;
  std::vector<std::string> upper;
};

enum class ViolationKind {
  duplicate_id,
  bad_dimension,
  arity,
  dangling_face,
  face_dimension,
  identity,
  initial_missing,
  initial_dimension,
  label_missing,
  label_length,
  label_unsorted,
  label_range,
  label_face,
  label_unknown_cube,
  events_duplicate,
};

std::string_view to_string(ViolationKind kind);

/// One failed structural check. Face indices are 1-based here, as in model
/// files; fields that do not apply to the kind are left at zero/empty.
struct Violation {
  ViolationKind kind;
  std::string cube;
  int k = 0;
  int l = 0;
  int nu = 0;
  int mu = 0;
  std::string lhs;
  std::string rhs;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void append(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  std::string summary() const;
};

/// Checks face closure, arity, face dimensions and the precubical identity
///   d_k^nu d_l^mu x = d_{l-1}^mu d_k^nu x   for k < l
/// for every cube, all k < l and nu, mu in {0, 1}.
ValidationReport validate_precubical(std::span<const CubeDecl> cubes);

/// A cube `cube` together with the index k such that the queried cube is its
/// k-th face (0-based) on the given side.
struct Coface {
  CubeId cube;
  std::uint32_t k;
};

/// Immutable finite precubical set.
class PrecubicalSet {
 public:
  PrecubicalSet() = default;

  /// Builds from declarations; throws ModelError carrying the report summary
  /// if validate_precubical fails.
  static PrecubicalSet build(std::span<const CubeDecl> cubes);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  unsigned max_dim() const { return dim_begin_.empty() ? 0 : static_cast<unsigned>(dim_begin_.size() - 2); }

  unsigned dim(CubeId x) const { return dims_[x]; }
  const std::string& name(CubeId x) const { return names_[x]; }

  std::optional<CubeId> find(std::string_view name) const;
  /// Throws ParseError if the id is unknown.
  CubeId at(std::string_view name) const;

  /// k is 0-based.
  CubeId face(CubeId x, unsigned k, Side s) const {
    return faces_[face_offset_[x] + (s == Side::lower ? 0 : dims_[x]) + k];
  }
  std::span<const CubeId> faces(CubeId x, Side s) const {
    return {faces_.data() + face_offset_[x] + (s == Side::lower ? 0 : dims_[x]), dims_[x]};
  }
  /// Cubes y with x = d_k^s y.
  std::span<const Coface> cofaces(CubeId x, Side s) const {
    const auto& table = s == Side::lower ? lower_cofaces_ : upper_cofaces_;
    const auto& offsets = s == Side::lower ? lower_coface_offset_ : upper_coface_offset_;
    return {table.data() + offsets[x], offsets[x + 1] - offsets[x]};
  }

  /// Cubes of dimension n occupy [first, last).
  std::pair<CubeId, CubeId> dim_range(unsigned n) const {
    if (n + 1 >= dim_begin_.size()) return {static_cast<CubeId>(size()), static_cast<CubeId>(size())};
    return {dim_begin_[n], dim_begin_[n + 1]};
  }
  std::size_t count(unsigned n) const {
    auto [first, last] = dim_range(n);
    return last - first;
  }

  std::vector<CubeDecl> decls() const;

 private:
  std::vector<std::string> names_;
  std::vector<unsigned> dims_;
  std::vector<std::size_t> face_offset_;
  std::vector<CubeId> faces_;
  std::vector<std::size_t> lower_coface_offset_;
  std::vector<std::size_t> upper_coface_offset_;
  std::vector<Coface> lower_cofaces_;
  std::vector<Coface> upper_cofaces_;
  std::vector<CubeId> dim_begin_;
  std::unordered_map<std::string, CubeId> index_;
};

}  // namespace hda
