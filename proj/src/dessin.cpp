#include "fibercover/dessin.hpp"

#include <algorithm>
#include <numeric>

#include "fibercover/error.hpp"
#include "fibercover/group.hpp"

namespace fibercover {

namespace {

std::vector<std::size_t> ascending(const Permutation& p) {
  auto lengths = cycle_type(p).lengths();
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::size_t lcm_of(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{1},
                         [](std::size_t a, std::size_t b) { return std::lcm(a, b); });
}

// 0 -> 0, 1 -> 1, inf -> 2; anything else -> -1.
int belyi_slot(const BranchLabel& label) {
  if (label.same_point(BranchLabel::at(0))) return 0;
  if (label.same_point(BranchLabel::at(1))) return 1;
  if (label.is_infinity()) return 2;
  return -1;
}

}  // namespace

Dessin::Dessin(Permutation sigma0, Permutation sigma1)
    : sigma0_(std::move(sigma0)), sigma1_(std::move(sigma1)) {
  if (sigma0_.degree() != sigma1_.degree() || sigma0_.degree() == 0)
    throw Error(ErrorKind::inconsistent_dessin, "sigma0 and sigma1 act on different edge sets");
  sigma_inf_ = (sigma0_ * sigma1_).inverse();
  std::vector<Permutation> gens{sigma0_, sigma1_};
  if (!is_transitive(gens, sigma0_.degree()))
    throw Error(ErrorKind::inconsistent_dessin, "dessin is not connected");
}

std::string Valence::to_string() const {
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(v[k]);
    }
    return s;
  };
  return "(" + list(blacks) + ";" + list(whites) + ";" + list(faces) + ")";
}

Dessin dessin_from_cover(const BranchedCover& cover) {
  if (cover.base_genus != 0)
    throw Error(ErrorKind::not_belyi_pair, "dessins live over a genus-0 base");
  std::vector<int> slots;
  Permutation sigma[3] = {Permutation(cover.degree), Permutation(cover.degree),
                          Permutation(cover.degree)};
  for (const auto& bp : cover.branch_points) {
    int slot = belyi_slot(bp.label);
    if (slot < 0) {
      if (bp.padding) continue;
      throw Error(ErrorKind::not_belyi_pair,
                  "branch value " + bp.label.to_string() + " outside {0, 1, inf}");
    }
    sigma[slot] = bp.monodromy;
    if (!bp.padding) slots.push_back(slot);
  }
  if (slots.size() == 3) {
    auto first = std::find(slots.begin(), slots.end(), 0) - slots.begin();
    if (slots[(first + 1) % 3] != 1)
      throw Error(ErrorKind::not_belyi_pair, "branch list is not in the cyclic order 0, 1, inf");
  }
  Dessin d(sigma[0], sigma[1]);
  if (d.sigma_inf() != sigma[2])
    throw Error(ErrorKind::not_belyi_pair, "monodromy at inf disagrees with (sigma0 sigma1)^-1");
  return d;
}

BranchedCover cover_from_dessin(const Dessin& d) {
  BranchedCover c;
  c.base_genus = 0;
  c.degree = d.edges();
  const BranchLabel labels[3] = {BranchLabel::at(0), BranchLabel::at(1), BranchLabel::infinity()};
  const Permutation* perms[3] = {&d.sigma0(), &d.sigma1(), &d.sigma_inf()};
  for (int k = 0; k < 3; ++k)
    c.branch_points.push_back({labels[k], *perms[k], perms[k]->is_identity()});
  return c;
}

Valence valence(const Dessin& d) {
  return {ascending(d.sigma0()), ascending(d.sigma1()), ascending(d.sigma_inf())};
}

int euler_genus(const Dessin& d) {
  Valence v = valence(d);
  long chi = static_cast<long>(v.blacks.size() + v.whites.size() + v.faces.size()) -
             static_cast<long>(d.edges());
  if (chi % 2 != 0 || chi > 2)
    throw Error(ErrorKind::inconsistent_dessin, "Euler characteristic " + std::to_string(chi));
  return static_cast<int>((2 - chi) / 2);
}

DessinCriteria dessin_criteria(const Dessin& d1, const Dessin& d2) {
  Valence v1 = valence(d1), v2 = valence(d2);
  DessinCriteria r;
  r.cond1 = std::gcd(d1.edges(), d2.edges()) == 1;
  r.cond2 = std::gcd(lcm_of(v1.blacks), lcm_of(v2.blacks)) == 1 &&
            std::gcd(lcm_of(v1.whites), lcm_of(v2.whites)) == 1 &&
            std::gcd(lcm_of(v1.faces), lcm_of(v2.faces)) == 1;
  r.predicted_single_dessin = r.cond1 || r.cond2;
  return r;
}

std::vector<Dessin> dessin_fiber_product(const Dessin& d1, const Dessin& d2, Execution exec) {
  auto dec = decompose(cover_from_dessin(d1), cover_from_dessin(d2), exec);
  std::vector<Dessin> out;
  out.reserve(dec.components.size());
  for (const auto& comp : dec.components) out.push_back(dessin_from_cover(comp.cover));
  return out;
}

}  // namespace fibercover
