#pragma once

// Data-parallel inner loops of the fiber engine. Each kernel has an OpenMP
// version and a serial reference kept for testing and benchmarking; both
// produce identical output.

#include <span>
#include <vector>

#include "fibercover/cover.hpp"
#include "fibercover/group.hpp"
#include "fibercover/permutation.hpp"

namespace fibercover {

enum class Execution { serial, parallel };

namespace kernels {

// (x, y) -> (p(x), q(y)) on the linear index x + n1 * y.
Permutation pair_permutation_serial(const Permutation& p, const Permutation& q);
Permutation pair_permutation_omp(const Permutation& p, const Permutation& q);

// Restriction of every generator to each orbit, relabelled by position in the
// sorted orbit. result[k][g] is generator g restricted to orbit k.
using Restrictions = std::vector<std::vector<Permutation>>;
Restrictions restrict_to_orbits_serial(std::span<const Permutation> generators,
                                       std::span<const Orbit> orbits, std::size_t n);
Restrictions restrict_to_orbits_omp(std::span<const Permutation> generators,
                                    std::span<const Orbit> orbits, std::size_t n);

// Orbit id of every point; orbit ids index `orbits`.
std::vector<std::size_t> orbit_membership(std::span<const Orbit> orbits, std::size_t n);

}  // namespace kernels
}  // namespace fibercover
