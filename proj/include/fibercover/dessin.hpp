#pragma once

#include <vector>

#include "fibercover/cover.hpp"
#include "fibercover/fiber.hpp"
#include "fibercover/permutation.hpp"

namespace fibercover {

// A dessin d'enfant on n edges: sigma0 rotates edges around black vertices,
// sigma1 around white vertices, and sigma_inf = (sigma0 * sigma1)^-1 around
// faces.
class Dessin {
public:
  // Throws Error(inconsistent_dessin) for degree mismatch or a
  // non-transitive pair.
  Dessin(Permutation sigma0, Permutation sigma1);

  std::size_t edges() const noexcept { return sigma0_.degree(); }
  const Permutation& sigma0() const noexcept { return sigma0_; }
  const Permutation& sigma1() const noexcept { return sigma1_; }
  const Permutation& sigma_inf() const noexcept { return sigma_inf_; }

private:
  Permutation sigma0_, sigma1_, sigma_inf_;
};

struct Valence {
  std::vector<std::size_t> blacks;  // ascending
  std::vector<std::size_t> whites;
  std::vector<std::size_t> faces;

  // "(3;1,1,1;3)"
  std::string to_string() const;
};

// Requires a genus-0 base, non-padding labels within {0, 1, inf}, and the
// relation read in the cyclic order 0, 1, inf. Throws Error(not_belyi_pair).
Dessin dessin_from_cover(const BranchedCover& cover);

// Cover over the sphere with labels 0, 1, inf in that order; identity entries
// are flagged as padding.
BranchedCover cover_from_dessin(const Dessin& d);

Valence valence(const Dessin& d);

// 2 - 2g = #blacks + #whites + #faces - n. Throws Error(inconsistent_dessin)
// for a non-integral or negative genus.
int euler_genus(const Dessin& d);

struct DessinCriteria {
  bool cond1 = false;  // gcd(n1, n2) == 1
  bool cond2 = false;  // gcd(A1,A2) == gcd(B1,B2) == gcd(C1,C2) == 1
  bool predicted_single_dessin = false;
};

DessinCriteria dessin_criteria(const Dessin& d1, const Dessin& d2);

// One dessin per irreducible component of the fiber product.
std::vector<Dessin> dessin_fiber_product(const Dessin& d1, const Dessin& d2,
                                         Execution exec = Execution::parallel);

}  // namespace fibercover
