#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibercover/cover.hpp"
#include "fibercover/group.hpp"
#include "fibercover/kernels.hpp"

namespace fibercover {

// Two covers over one base carrying identical, identically ordered branch
// lists; a label where only one cover branches is padded in the other.
struct AlignedCovers {
  BranchedCover first;
  BranchedCover second;
  std::vector<BranchLabel> labels;
};

// Merges the two branch lists into one order that restricts to each cover's own
// relation order (for a genus-0 base, up to the cyclic rotation that puts the
// canonically greatest shared label last). Free choices follow canonical label
// order. Throws Error(base_genus_mismatch), Error(label_conflict), or
// Error(label_order_conflict) when shared labels occur in incompatible orders.
AlignedCovers align_branch_sets(const BranchedCover& c1, const BranchedCover& c2);

// Point (x, y) of the fiber product, 0-based; linear index x + n1 * y.
struct PairPoint {
  Point first;
  Point second;
};

inline std::size_t linear_index(PairPoint p, std::size_t n1) { return p.first + n1 * p.second; }
inline PairPoint pair_point(std::size_t index, std::size_t n1) {
  return {static_cast<Point>(index % n1), static_cast<Point>(index / n1)};
}

// Pair permutations for each handle generator and each aligned branch
// position, in BranchedCover::generators() order.
std::vector<Permutation> product_action(const AlignedCovers& aligned,
                                        Execution exec = Execution::parallel);

// The product action packaged as a (generally disconnected) cover of degree
// n1 * n2 over the aligned labels.
BranchedCover product_cover(const AlignedCovers& aligned, Execution exec = Execution::parallel);

struct FiberComponent {
  Orbit orbit;          // sorted linear indices
  BranchedCover cover;  // restriction, relabelled 1..|orbit|
  std::size_t d1 = 0;   // degree over the first surface
  std::size_t d2 = 0;   // degree over the second surface
  int genus = 0;
};

struct Cone {
  Point least_point;  // least linear index on the product cycle
  std::size_t length;
  std::size_t component;
};

// A pair of simultaneous critical points: cycle1 of the first monodromy and
// cycle2 of the second over one label, both of length >= 2. Locally
// gcd(n1, n2) cones of length lcm(n1, n2) meet at the point.
struct SingularPoint {
  BranchLabel label;
  Point cycle1;  // least point of the cycle in the first cover
  Point cycle2;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t cone_count = 0;
  std::vector<Cone> cones;

  bool disc_like() const { return cone_count == 1; }
};

struct LabelCriterion {
  BranchLabel label;
  std::size_t a1 = 1;
  std::size_t a2 = 1;
};

struct CriteriaReport {
  bool cond1 = false;  // gcd(n1, n2) == 1
  bool cond2 = false;  // gcd(a_q1, a_q2) == 1 at every aligned label
  bool predicted_irreducible = false;
  std::size_t actual_component_count = 0;
  std::vector<LabelCriterion> per_label;
};

struct FiberDecomposition {
  AlignedCovers aligned;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::vector<FiberComponent> components;
  std::vector<SingularPoint> singular_points;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;  // component ids, first < second
  bool connected = true;
  CriteriaReport criteria;
  std::size_t bound = 1;
};

// Full decomposition. Throws Error(validation) for invalid inputs and
// Error(internal_inconsistency) if an invariant of the result fails.
FiberDecomposition decompose(const BranchedCover& c1, const BranchedCover& c2,
                             Execution exec = Execution::parallel);

const std::vector<SingularPoint>& singular_catalog(const FiberDecomposition& dec);

CriteriaReport criteria(const BranchedCover& c1, const BranchedCover& c2);

std::size_t component_bound(const BranchedCover& c1, const BranchedCover& c2);

// Recomputes connectivity of the cone-sharing graph on components.
bool connectivity(const FiberDecomposition& dec);

struct IsomorphismReport {
  bool all_isomorphic = true;
  // witnesses[k] conjugates component 0's monodromy tuple onto component k's.
  std::vector<std::optional<Permutation>> witnesses;
};

IsomorphismReport components_pairwise_isomorphic(const FiberDecomposition& dec,
                                                 Execution exec = Execution::parallel);

struct JacobianReport {
  bool applicable = false;
  std::string failed_hypothesis;  // "regularity", "transitivity", "non-singularity"
  int g_component = 0;
  int g_base = 0;
  int g_first = 0;
  int g_second = 0;
  long dim_p = 0;
};

// dim P = g_C + g_0 - g_1 - g_2 for JC x JS0 ~ JS1 x JS2 x P. Throws
// Error(internal_inconsistency) if the dimension comes out negative.
JacobianReport jacobian_report(const BranchedCover& c1, const BranchedCover& c2,
                               const FiberDecomposition& dec);

}  // namespace fibercover
