#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fibercover/permutation.hpp"

namespace fibercover {

using Orbit = std::vector<Point>;

// Orbits of the group generated by `generators` on {0..n-1}, each sorted, in
// order of least element. Throws Error(degree_mismatch) if a generator does
// not have degree n.
std::vector<Orbit> orbits(std::span<const Permutation> generators, std::size_t n);

bool is_transitive(std::span<const Permutation> generators, std::size_t n);

// Order of the generated group by breadth-first closure, or nullopt once the
// closure grows past `cap`.
std::optional<std::size_t> group_order_bounded(std::span<const Permutation> generators,
                                               std::size_t n, std::size_t cap);

// A permutation g with g * a[i] * g^-1 == b[i] for every i, or nullopt.
// Backtracks over the image of the least unassigned point, trying candidates
// in increasing order; the first consistent g is returned.
std::optional<Permutation> simultaneous_conjugator(std::span<const Permutation> a,
                                                   std::span<const Permutation> b,
                                                   std::size_t n);

}  // namespace fibercover
