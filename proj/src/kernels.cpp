#include "fibercover/kernels.hpp"

#include <cstdint>

namespace fibercover::kernels {

namespace {

std::vector<Point> position_in_orbit(std::span<const Orbit> orbits, std::size_t n) {
  std::vector<Point> pos(n);
  for (const auto& orbit : orbits)
    for (std::size_t k = 0; k < orbit.size(); ++k) pos[orbit[k]] = static_cast<Point>(k);
  return pos;
}

std::vector<Permutation> restrict_one(std::span<const Permutation> generators,
                                      const Orbit& orbit, const std::vector<Point>& pos) {
  std::vector<Permutation> out;
  out.reserve(generators.size());
  for (const auto& g : generators) {
    std::vector<Point> images(orbit.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) images[k] = pos[g(orbit[k])];
    out.push_back(Permutation::from_images(std::move(images)));
  }
  return out;
}

}  // namespace

Permutation pair_permutation_serial(const Permutation& p, const Permutation& q) {
  const std::size_t n1 = p.degree(), n2 = q.degree();
  std::vector<Point> images(n1 * n2);
  for (std::size_t y = 0; y < n2; ++y)
    for (std::size_t x = 0; x < n1; ++x)
      images[x + n1 * y] = static_cast<Point>(p(static_cast<Point>(x)) +
                                              n1 * q(static_cast<Point>(y)));
  return Permutation::from_images(std::move(images));
}

Permutation pair_permutation_omp(const Permutation& p, const Permutation& q) {
  const std::size_t n1 = p.degree(), n2 = q.degree();
  const std::int64_t total = static_cast<std::int64_t>(n1 * n2);
  std::vector<Point> images(n1 * n2);
  auto pi = p.images();
  auto qi = q.images();
  const std::int64_t rows = static_cast<std::int64_t>(n2);
#pragma omp parallel for schedule(static) if (total > 4096)
  for (std::int64_t y = 0; y < rows; ++y) {
    const std::size_t offset = n1 * static_cast<std::size_t>(y);
    const std::size_t shift = n1 * qi[static_cast<std::size_t>(y)];
    for (std::size_t x = 0; x < n1; ++x) images[offset + x] = static_cast<Point>(pi[x] + shift);
  }
  return Permutation::from_images(std::move(images));
}

Restrictions restrict_to_orbits_serial(std::span<const Permutation> generators,
                                       std::span<const Orbit> orbits, std::size_t n) {
  auto pos = position_in_orbit(orbits, n);
  Restrictions out;
  out.reserve(orbits.size());
  for (const auto& orbit : orbits) out.push_back(restrict_one(generators, orbit, pos));
  return out;
}

Restrictions restrict_to_orbits_omp(std::span<const Permutation> generators,
                                    std::span<const Orbit> orbits, std::size_t n) {
  auto pos = position_in_orbit(orbits, n);
  Restrictions out(orbits.size());
  const std::int64_t count = static_cast<std::int64_t>(orbits.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) out[k] = restrict_one(generators, orbits[k], pos);
  return out;
}

std::vector<std::size_t> orbit_membership(std::span<const Orbit> orbits, std::size_t n) {
  std::vector<std::size_t> owner(n);
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (Point x : orbits[k]) owner[x] = k;
  return owner;
}

}  // namespace fibercover::kernels
