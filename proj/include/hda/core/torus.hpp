#pragma once

#include <span>
#include <string>

#include "hda/core/hda.hpp"

namespace hda {

/// Name of the torus cube for a sorted tuple of event positions: "t" followed
/// by ".<event>" per entry, e.g. "t", "t.a", "t.a.b".
std::string torus_cube_name(const EventSet& events, std::span<const std::uint32_t> tuple);

/// The event torus truncated at `maxdim`: n-cubes are the sorted n-tuples over
/// `events`, both face maps delete the k-th entry, and the labeling is the
/// identity assignment.
Hda torus(const EventSet& events, unsigned maxdim);

}  // namespace hda
