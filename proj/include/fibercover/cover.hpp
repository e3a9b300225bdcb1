#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibercover/label.hpp"
#include "fibercover/permutation.hpp"

namespace fibercover {

struct HandlePair {
  Permutation a;
  Permutation b;
};

struct BranchPoint {
  BranchLabel label;
  Permutation monodromy;
  // Identity entries inserted by branch-set alignment. Only padding entries
  // may carry the identity.
  bool padding = false;
};

// A branched cover of a genus-g0 base by its monodromy: handle generators and
// an ordered list of local monodromies. The relation
//   [a_1,b_1] ... [a_g,b_g] * c_1 * ... * c_r = identity
// is taken in list order with [a,b] = a*b*a^-1*b^-1.
struct BranchedCover {
  int base_genus = 0;
  std::size_t degree = 1;
  std::vector<HandlePair> handles;
  std::vector<BranchPoint> branch_points;

  // Handles (a_1, b_1, ..., a_g, b_g) followed by branch monodromies.
  std::vector<Permutation> generators() const;
  // Product of the relation; the identity for a valid cover.
  Permutation relation_residual() const;
  const BranchPoint* find(const BranchLabel& label) const;
  // Branch points without the padding entries.
  std::vector<BranchLabel> branch_labels(bool include_padding = false) const;
};

// Degree-1 cover of a genus-g0 base: identity handles, no branch points.
BranchedCover trivial_cover(int base_genus);

enum class Violation {
  shape,            // degrees, handle count, negative genus
  duplicate_label,
  unflagged_identity,
  padding_not_identity,
  relation,
  transitivity,
};

const char* to_string(Violation v);

struct ValidationIssue {
  Violation kind;
  std::string message;
  std::optional<Permutation> residual;  // set for Violation::relation
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

ValidationReport validate(const BranchedCover& cover);

// Riemann-Hurwitz total n(2 - 2 g0) - sum_j (n - #cycles(c_j)), i.e. 2 - 2g for
// a connected cover.
long euler_characteristic(const BranchedCover& cover);

// Throws Error(inconsistent_cover) when the Riemann-Hurwitz genus is not a
// non-negative integer.
int genus(const BranchedCover& cover);

// Cycle type of the monodromy at `q`; all ones when q is not a branch label.
CycleType local_orders(const BranchedCover& cover, const BranchLabel& q);

// lcm of the local orders at q.
std::size_t a_lcm(const BranchedCover& cover, const BranchLabel& q);

// Monodromy group order equals the degree.
bool is_regular(const BranchedCover& cover);

}  // namespace fibercover
