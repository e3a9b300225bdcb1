#include "fibercover/cover.hpp"

#include "fibercover/error.hpp"
#include "fibercover/group.hpp"

namespace fibercover {

std::vector<Permutation> BranchedCover::generators() const {
  std::vector<Permutation> gens;
  gens.reserve(2 * handles.size() + branch_points.size());
  for (const auto& h : handles) {
    gens.push_back(h.a);
    gens.push_back(h.b);
  }
  for (const auto& bp : branch_points) gens.push_back(bp.monodromy);
  return gens;
}

Permutation BranchedCover::relation_residual() const {
  Permutation r(degree);
  for (const auto& h : handles) r = r * commutator(h.a, h.b);
  for (const auto& bp : branch_points) r = r * bp.monodromy;
  return r;
}

const BranchPoint* BranchedCover::find(const BranchLabel& label) const {
  for (const auto& bp : branch_points)
    if (bp.label.same_point(label)) return &bp;
  return nullptr;
}

std::vector<BranchLabel> BranchedCover::branch_labels(bool include_padding) const {
  std::vector<BranchLabel> out;
  for (const auto& bp : branch_points)
    if (include_padding || !bp.padding) out.push_back(bp.label);
  return out;
}

BranchedCover trivial_cover(int base_genus) {
  BranchedCover c;
  c.base_genus = base_genus;
  c.degree = 1;
  for (int i = 0; i < base_genus; ++i) c.handles.push_back({Permutation(1), Permutation(1)});
  return c;
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::shape: return "shape";
    case Violation::duplicate_label: return "duplicate-label";
    case Violation::unflagged_identity: return "unflagged-identity";
    case Violation::padding_not_identity: return "padding-not-identity";
    case Violation::relation: return "relation";
    case Violation::transitivity: return "transitivity";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(issue.kind)) + ": " + issue.message;
  }
  return out;
}

ValidationReport validate(const BranchedCover& cover) {
  ValidationReport report;
  auto add = [&](Violation kind, std::string msg) {
    report.issues.push_back({kind, std::move(msg), std::nullopt});
  };

  if (cover.base_genus < 0) add(Violation::shape, "negative base genus");
  if (cover.degree < 1) add(Violation::shape, "degree must be positive");
  if (cover.handles.size() != static_cast<std::size_t>(std::max(cover.base_genus, 0)))
    add(Violation::shape, "expected " + std::to_string(cover.base_genus) + " handle pairs, got " +
                              std::to_string(cover.handles.size()));
  bool degrees_ok = true;
  for (const auto& g : cover.generators())
    if (g.degree() != cover.degree) degrees_ok = false;
  if (!degrees_ok) add(Violation::shape, "permutation degree differs from cover degree");
  if (!report.ok()) return report;

  for (std::size_t i = 0; i < cover.branch_points.size(); ++i) {
    const auto& bp = cover.branch_points[i];
    for (std::size_t j = 0; j < i; ++j)
      if (cover.branch_points[j].label.same_point(bp.label))
        add(Violation::duplicate_label, "label " + bp.label.to_string() + " repeated");
    bool identity = bp.monodromy.is_identity();
    if (identity && !bp.padding)
      add(Violation::unflagged_identity,
          "identity monodromy at " + bp.label.to_string() + " without pad flag");
    if (!identity && bp.padding)
      add(Violation::padding_not_identity,
          "padding entry at " + bp.label.to_string() + " is not the identity");
  }

  Permutation residual = cover.relation_residual();
  if (!residual.is_identity())
    report.issues.push_back({Violation::relation,
                             "product relation residual " + residual.to_cycle_string(),
                             residual});

  auto gens = cover.generators();
  if (!is_transitive(gens, cover.degree))
    add(Violation::transitivity, "monodromy group has " +
                                     std::to_string(orbits(gens, cover.degree).size()) +
                                     " orbits");
  return report;
}

long euler_characteristic(const BranchedCover& cover) {
  long n = static_cast<long>(cover.degree);
  long chi = n * (2 - 2 * static_cast<long>(cover.base_genus));
  for (const auto& bp : cover.branch_points)
    chi -= n - static_cast<long>(bp.monodromy.cycle_count());
  return chi;
}

int genus(const BranchedCover& cover) {
  long chi = euler_characteristic(cover);
  if (chi % 2 != 0 || chi > 2)
    throw Error(ErrorKind::inconsistent_cover,
                "Riemann-Hurwitz gives 2 - 2g = " + std::to_string(chi));
  return static_cast<int>((2 - chi) / 2);
}

CycleType local_orders(const BranchedCover& cover, const BranchLabel& q) {
  if (const BranchPoint* bp = cover.find(q)) return cycle_type(bp->monodromy);
  return CycleType::trivial(cover.degree);
}

std::size_t a_lcm(const BranchedCover& cover, const BranchLabel& q) {
  return local_orders(cover, q).lcm();
}

bool is_regular(const BranchedCover& cover) {
  auto gens = cover.generators();
  auto order = group_order_bounded(gens, cover.degree, cover.degree);
  return order && *order == cover.degree;
}

}  // namespace fibercover
