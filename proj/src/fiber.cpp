#include "fibercover/fiber.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "fibercover/error.hpp"

namespace fibercover {

namespace {

struct Entry {
  BranchLabel label;
  Permutation monodromy;
  bool shared = false;
};

std::vector<Entry> branched_entries(const BranchedCover& c) {
  std::vector<Entry> out;
  for (const auto& bp : c.branch_points)
    if (!bp.padding) out.push_back({bp.label, bp.monodromy, false});
  return out;
}

// Rotates so that the entry at `last` ends the list. Valid only over a genus-0
// base, where the relation c_1 ... c_r = 1 is invariant under cyclic shifts.
void rotate_to_end(std::vector<Entry>& entries, std::size_t last) {
  std::rotate(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(last + 1),
              entries.end());
}

std::size_t greatest(const std::vector<Entry>& entries, bool shared_only) {
  std::size_t best = entries.size();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (shared_only && !entries[k].shared) continue;
    if (best == entries.size() || canonical_less(entries[best].label, entries[k].label)) best = k;
  }
  return best;
}

void require_valid(const BranchedCover& c, const char* which) {
  auto report = validate(c);
  if (!report.ok())
    throw Error(ErrorKind::validation, std::string(which) + " cover: " + report.summary());
}

std::vector<SingularPoint> singular_points_at(const AlignedCovers& aligned, std::size_t index,
                                              const Permutation& pair,
                                              const std::vector<std::size_t>& owner) {
  const auto& c1 = aligned.first.branch_points[index].monodromy;
  const auto& c2 = aligned.second.branch_points[index].monodromy;
  const std::size_t n1 = c1.degree();

  auto cycle_of = [](const Permutation& p) {
    std::vector<Point> least(p.degree());
    std::vector<std::size_t> length(p.degree());
    for (const auto& cyc : p.cycles())
      for (Point x : cyc) {
        least[x] = cyc.front();
        length[x] = cyc.size();
      }
    return std::pair{least, length};
  };
  auto [least1, len1] = cycle_of(c1);
  auto [least2, len2] = cycle_of(c2);

  std::vector<SingularPoint> out;
  auto find_or_add = [&](Point a, Point b) -> SingularPoint& {
    for (auto& sp : out)
      if (sp.cycle1 == a && sp.cycle2 == b) return sp;
    SingularPoint sp;
    sp.label = aligned.labels[index];
    sp.cycle1 = a;
    sp.cycle2 = b;
    sp.n1 = len1[a];
    sp.n2 = len2[b];
    sp.cone_count = std::gcd(sp.n1, sp.n2);
    out.push_back(std::move(sp));
    return out.back();
  };

  for (const auto& cyc : pair.cycles()) {
    PairPoint p = pair_point(cyc.front(), n1);
    if (len1[p.first] < 2 || len2[p.second] < 2) continue;
    auto& sp = find_or_add(least1[p.first], least2[p.second]);
    sp.cones.push_back({cyc.front(), cyc.size(), owner[cyc.front()]});
  }
  std::sort(out.begin(), out.end(), [](const SingularPoint& a, const SingularPoint& b) {
    return std::pair(a.cycle1, a.cycle2) < std::pair(b.cycle1, b.cycle2);
  });
  return out;
}

bool graph_connected(std::size_t nodes,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (nodes <= 1) return true;
  std::vector<std::size_t> parent(nodes);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t sets = nodes;
  for (auto [a, b] : edges) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --sets;
    }
  }
  return sets == 1;
}

CriteriaReport evaluate_criteria(const AlignedCovers& aligned, std::size_t components) {
  CriteriaReport r;
  r.cond1 = std::gcd(aligned.first.degree, aligned.second.degree) == 1;
  r.cond2 = true;
  for (std::size_t k = 0; k < aligned.labels.size(); ++k) {
    LabelCriterion lc{aligned.labels[k],
                      cycle_type(aligned.first.branch_points[k].monodromy).lcm(),
                      cycle_type(aligned.second.branch_points[k].monodromy).lcm()};
    if (std::gcd(lc.a1, lc.a2) != 1) r.cond2 = false;
    r.per_label.push_back(std::move(lc));
  }
  r.predicted_irreducible = r.cond1 || r.cond2;
  r.actual_component_count = components;
  return r;
}

}  // namespace

AlignedCovers align_branch_sets(const BranchedCover& c1, const BranchedCover& c2) {
  if (c1.base_genus != c2.base_genus)
    throw Error(ErrorKind::base_genus_mismatch,
                "covers over bases of genus " + std::to_string(c1.base_genus) + " and " +
                    std::to_string(c2.base_genus));

  auto l1 = branched_entries(c1);
  auto l2 = branched_entries(c2);
  for (auto& a : l1)
    for (auto& b : l2)
      if (a.label.same_point(b.label)) a.shared = b.shared = true;

  if (c1.base_genus == 0) {
    bool any_shared = std::any_of(l1.begin(), l1.end(), [](const Entry& e) { return e.shared; });
    if (any_shared) {
      std::size_t k1 = greatest(l1, true);
      std::size_t k2 = 0;
      while (!l2[k2].label.same_point(l1[k1].label)) ++k2;
      rotate_to_end(l1, k1);
      rotate_to_end(l2, k2);
    } else {
      if (!l1.empty()) rotate_to_end(l1, greatest(l1, false));
      if (!l2.empty()) rotate_to_end(l2, greatest(l2, false));
    }
  }

  std::vector<BranchLabel> order1, order2;
  for (const auto& e : l1)
    if (e.shared) order1.push_back(e.label);
  for (const auto& e : l2)
    if (e.shared) order2.push_back(e.label);
  for (std::size_t k = 0; k < order1.size(); ++k)
    if (!order1[k].same_point(order2[k]))
      throw Error(ErrorKind::label_order_conflict,
                  "shared branch labels occur in different orders (" + order1[k].to_string() +
                      " vs " + order2[k].to_string() + ")");

  AlignedCovers out;
  out.first.base_genus = out.second.base_genus = c1.base_genus;
  out.first.degree = c1.degree;
  out.second.degree = c2.degree;
  out.first.handles = c1.handles;
  out.second.handles = c2.handles;

  auto push = [&](const BranchLabel& label, const Entry* e1, const Entry* e2) {
    out.labels.push_back(label);
    out.first.branch_points.push_back(
        e1 ? BranchPoint{label, e1->monodromy, false} : BranchPoint{label, Permutation(c1.degree), true});
    out.second.branch_points.push_back(
        e2 ? BranchPoint{label, e2->monodromy, false} : BranchPoint{label, Permutation(c2.degree), true});
  };

  std::size_t i = 0, j = 0;
  while (i < l1.size() || j < l2.size()) {
    const Entry* a = i < l1.size() ? &l1[i] : nullptr;
    const Entry* b = j < l2.size() ? &l2[j] : nullptr;
    bool a_free = a && !a->shared;
    bool b_free = b && !b->shared;
    if (a_free && b_free) {
      if (canonical_less(b->label, a->label)) {
        push(b->label, nullptr, b);
        ++j;
      } else {
        push(a->label, a, nullptr);
        ++i;
      }
    } else if (a_free) {
      push(a->label, a, nullptr);
      ++i;
    } else if (b_free) {
      push(b->label, nullptr, b);
      ++j;
    } else {
      // Both heads are shared and, by the order check, the same point.
      if (!a || !b) throw Error(ErrorKind::internal_inconsistency, "branch merge out of step");
      push(a->label, a, b);
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Permutation> product_action(const AlignedCovers& aligned, Execution exec) {
  auto g1 = aligned.first.generators();
  auto g2 = aligned.second.generators();
  if (g1.size() != g2.size())
    throw Error(ErrorKind::invalid_argument, "covers are not aligned");
  std::vector<Permutation> out;
  out.reserve(g1.size());
  for (std::size_t k = 0; k < g1.size(); ++k)
    out.push_back(exec == Execution::parallel ? kernels::pair_permutation_omp(g1[k], g2[k])
                                              : kernels::pair_permutation_serial(g1[k], g2[k]));
  return out;
}

BranchedCover product_cover(const AlignedCovers& aligned, Execution exec) {
  auto gens = product_action(aligned, exec);
  BranchedCover c;
  c.base_genus = aligned.first.base_genus;
  c.degree = aligned.first.degree * aligned.second.degree;
  std::size_t k = 0;
  for (int h = 0; h < c.base_genus; ++h, k += 2) c.handles.push_back({gens[k], gens[k + 1]});
  for (const auto& label : aligned.labels) {
    bool id = gens[k].is_identity();
    c.branch_points.push_back({label, gens[k++], id});
  }
  return c;
}

FiberDecomposition decompose(const BranchedCover& c1, const BranchedCover& c2, Execution exec) {
  require_valid(c1, "first");
  require_valid(c2, "second");

  FiberDecomposition dec;
  dec.aligned = align_branch_sets(c1, c2);
  dec.n1 = c1.degree;
  dec.n2 = c2.degree;
  dec.bound = std::gcd(dec.n1, dec.n2);
  const std::size_t n = dec.n1 * dec.n2;
  const std::size_t handle_gens = 2 * static_cast<std::size_t>(c1.base_genus);

  auto gens = product_action(dec.aligned, exec);
  auto orbit_list = orbits(gens, n);
  auto restricted = exec == Execution::parallel
                        ? kernels::restrict_to_orbits_omp(gens, orbit_list, n)
                        : kernels::restrict_to_orbits_serial(gens, orbit_list, n);

  dec.components.resize(orbit_list.size());
  auto build = [&](std::size_t k) {
    FiberComponent& comp = dec.components[k];
    comp.orbit = orbit_list[k];
    comp.cover.base_genus = c1.base_genus;
    comp.cover.degree = comp.orbit.size();
    const auto& r = restricted[k];
    for (std::size_t h = 0; h < handle_gens; h += 2) comp.cover.handles.push_back({r[h], r[h + 1]});
    for (std::size_t l = 0; l < dec.aligned.labels.size(); ++l) {
      const auto& p = r[handle_gens + l];
      comp.cover.branch_points.push_back({dec.aligned.labels[l], p, p.is_identity()});
    }
    comp.d1 = comp.orbit.size() / dec.n1;
    comp.d2 = comp.orbit.size() / dec.n2;
    comp.genus = genus(comp.cover);
  };
  std::vector<std::string> failures(orbit_list.size());
  if (exec == Execution::parallel) {
    const std::int64_t count = static_cast<std::int64_t>(orbit_list.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
      try {
        build(static_cast<std::size_t>(k));
      } catch (const std::exception& e) {
        failures[k] = e.what();
      }
    }
  } else {
    for (std::size_t k = 0; k < orbit_list.size(); ++k) {
      try {
        build(k);
      } catch (const std::exception& e) {
        failures[k] = e.what();
      }
    }
  }
  for (std::size_t k = 0; k < failures.size(); ++k)
    if (!failures[k].empty())
      throw Error(ErrorKind::internal_inconsistency,
                  "component " + std::to_string(k + 1) + ": " + failures[k]);

  for (const auto& comp : dec.components) {
    if (comp.orbit.size() % dec.n1 != 0 || comp.orbit.size() % dec.n2 != 0)
      throw Error(ErrorKind::internal_inconsistency, "orbit size not divisible by both degrees");
    auto report = validate(comp.cover);
    if (!report.ok())
      throw Error(ErrorKind::internal_inconsistency, "component cover invalid: " + report.summary());
  }
  if (dec.components.size() > dec.bound)
    throw Error(ErrorKind::internal_inconsistency, "component count exceeds gcd bound");

  auto owner = kernels::orbit_membership(orbit_list, n);
  const std::size_t label_count = dec.aligned.labels.size();
  std::vector<std::vector<SingularPoint>> per_label(label_count);
  if (exec == Execution::parallel) {
    const std::int64_t count = static_cast<std::int64_t>(label_count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t l = 0; l < count; ++l)
      per_label[l] = singular_points_at(dec.aligned, static_cast<std::size_t>(l),
                                        gens[handle_gens + l], owner);
  } else {
    for (std::size_t l = 0; l < label_count; ++l)
      per_label[l] = singular_points_at(dec.aligned, l, gens[handle_gens + l], owner);
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto& points : per_label)
    for (auto& sp : points) {
      std::set<std::size_t> comps;
      for (const auto& cone : sp.cones) comps.insert(cone.component);
      for (auto a = comps.begin(); a != comps.end(); ++a)
        for (auto b = std::next(a); b != comps.end(); ++b) edges.emplace(*a, *b);
      dec.singular_points.push_back(std::move(sp));
    }
  dec.adjacency.assign(edges.begin(), edges.end());
  dec.connected = graph_connected(dec.components.size(), dec.adjacency);
  dec.criteria = evaluate_criteria(dec.aligned, dec.components.size());
  return dec;
}

const std::vector<SingularPoint>& singular_catalog(const FiberDecomposition& dec) {
  return dec.singular_points;
}

CriteriaReport criteria(const BranchedCover& c1, const BranchedCover& c2) {
  require_valid(c1, "first");
  require_valid(c2, "second");
  auto aligned = align_branch_sets(c1, c2);
  auto gens = product_action(aligned);
  return evaluate_criteria(aligned, orbits(gens, c1.degree * c2.degree).size());
}

std::size_t component_bound(const BranchedCover& c1, const BranchedCover& c2) {
  return std::gcd(c1.degree, c2.degree);
}

bool connectivity(const FiberDecomposition& dec) {
  return graph_connected(dec.components.size(), dec.adjacency);
}

IsomorphismReport components_pairwise_isomorphic(const FiberDecomposition& dec, Execution exec) {
  IsomorphismReport report;
  const std::size_t count = dec.components.size();
  report.witnesses.resize(count);
  if (count == 0) return report;
  const auto reference = dec.components[0].cover.generators();
  auto check = [&](std::size_t k) {
    const auto& comp = dec.components[k];
    if (comp.orbit.size() != dec.components[0].orbit.size()) return;
    auto target = comp.cover.generators();
    report.witnesses[k] = simultaneous_conjugator(reference, target, comp.orbit.size());
  };
  if (exec == Execution::parallel) {
    const std::int64_t n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < n; ++k) check(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < count; ++k) check(k);
  }
  report.all_isomorphic =
      std::all_of(report.witnesses.begin(), report.witnesses.end(),
                  [](const std::optional<Permutation>& w) { return w.has_value(); });
  return report;
}

JacobianReport jacobian_report(const BranchedCover& c1, const BranchedCover& c2,
                               const FiberDecomposition& dec) {
  JacobianReport r;
  if (!is_regular(c1) || !is_regular(c2)) {
    r.failed_hypothesis = "regularity";
    return r;
  }
  if (dec.components.size() != 1) {
    r.failed_hypothesis = "transitivity";
    return r;
  }
  if (!dec.singular_points.empty()) {
    r.failed_hypothesis = "non-singularity";
    return r;
  }
  r.applicable = true;
  r.g_component = dec.components[0].genus;
  r.g_base = c1.base_genus;
  r.g_first = genus(c1);
  r.g_second = genus(c2);
  r.dim_p = static_cast<long>(r.g_component) + r.g_base - r.g_first - r.g_second;
  if (r.dim_p < 0)
    throw Error(ErrorKind::internal_inconsistency,
                "negative abelian subvariety dimension " + std::to_string(r.dim_p));
  return r;
}

}  // namespace fibercover
