#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fibercover/cover.hpp"
#include "fibercover/fiber.hpp"
#include "fibercover/group.hpp"
#include "fibercover/permutation.hpp"

namespace fixtures {

using namespace fibercover;

inline BranchPoint bp(const std::string& label, std::size_t n, const std::string& cycles,
                      bool padding = false) {
  return {BranchLabel::parse(label), parse_cycles(cycles, n), padding};
}

inline BranchedCover sphere_cover(std::size_t n, std::vector<BranchPoint> points) {
  BranchedCover c;
  c.degree = n;
  c.branch_points = std::move(points);
  return c;
}

inline Permutation shift(std::size_t n, long k) {
  std::vector<Point> images(n);
  long m = static_cast<long>(n);
  for (long x = 0; x < m; ++x) images[x] = static_cast<Point>(((x + k) % m + m) % m);
  return Permutation::from_images(std::move(images));
}

// Cyclic cover of the sphere: translations by the given shifts in Z_n.
inline BranchedCover cyclic(std::size_t n, const std::vector<std::pair<std::string, long>>& shifts) {
  BranchedCover c;
  c.degree = n;
  for (const auto& [label, k] : shifts) c.branch_points.push_back({BranchLabel::parse(label), shift(n, k), false});
  return c;
}

// Translations by (1,0), (0,1), (-1,-1) on Z_n x Z_n over 0, 1, inf.
inline BranchedCover fermat(std::size_t n) {
  std::size_t d = n * n;
  auto translation = [&](std::size_t dx, std::size_t dy) {
    std::vector<Point> images(d);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        images[x + n * y] = static_cast<Point>((x + dx) % n + n * ((y + dy) % n));
    return Permutation::from_images(std::move(images));
  };
  return sphere_cover(d, {{BranchLabel::at(0), translation(1, 0), false},
                          {BranchLabel::at(1), translation(0, 1), false},
                          {BranchLabel::infinity(), translation(n - 1, n - 1), false}});
}

inline BranchedCover z3_belyi() { return cyclic(3, {{"0", 1}, {"1", 1}, {"inf", 1}}); }

inline BranchedCover klein_belyi() {
  return sphere_cover(4, {bp("0", 4, "(1 2)(3 4)"), bp("1", 4, "(1 3)(2 4)"), bp("inf", 4, "(1 4)(2 3)")});
}

inline BranchedCover double_cover_01() { return sphere_cover(2, {bp("0", 2, "(1 2)"), bp("1", 2, "(1 2)")}); }

inline BranchedCover genus2_unbranched_z2() {
  BranchedCover c;
  c.base_genus = 2;
  c.degree = 2;
  c.handles = {{parse_cycles("(1 2)", 2), Permutation(2)}, {Permutation(2), Permutation(2)}};
  return c;
}

inline std::vector<int> genera(const FiberDecomposition& dec) {
  std::vector<int> g;
  for (const auto& c : dec.components) g.push_back(c.genus);
  std::sort(g.begin(), g.end());
  return g;
}

// Elements of the group generated by `gens` (natural action), by closure.
inline std::vector<Permutation> elements(const std::vector<Permutation>& gens) {
  std::size_t n = gens.front().degree();
  std::vector<Permutation> out{Permutation(n)};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      Permutation p = out[k] * g;
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  return out;
}

// Right-regular representation: x -> x * g on the listed elements.
inline Permutation regular_image(const std::vector<Permutation>& group, const Permutation& g) {
  std::vector<Point> images(group.size());
  for (std::size_t i = 0; i < group.size(); ++i)
    images[i] = static_cast<Point>(std::find(group.begin(), group.end(), group[i] * g) - group.begin());
  return Permutation::from_images(std::move(images));
}

struct SmallGroup {
  std::string name;
  std::vector<Permutation> elements;
};

inline std::vector<SmallGroup> small_groups() {
  auto g = [](std::size_t n, std::vector<std::string> cycles) {
    std::vector<Permutation> gens;
    for (const auto& c : cycles) gens.push_back(parse_cycles(c, n));
    return elements(gens);
  };
  std::vector<SmallGroup> out;
  for (std::size_t n = 2; n <= 10; ++n) out.push_back({"Z" + std::to_string(n), elements({shift(n, 1)})});
  out.push_back({"Z2xZ2", g(4, {"(1 2)", "(3 4)"})});
  out.push_back({"Z2xZ4", g(6, {"(1 2)", "(3 4 5 6)"})});
  out.push_back({"Z3xZ3", g(6, {"(1 2 3)", "(4 5 6)"})});
  out.push_back({"Z2^3", g(6, {"(1 2)", "(3 4)", "(5 6)"})});
  out.push_back({"S3", g(3, {"(1 2)", "(1 2 3)"})});
  out.push_back({"D4", g(4, {"(1 2 3 4)", "(1 3)"})});
  out.push_back({"D5", g(5, {"(1 2 3 4 5)", "(2 5)(3 4)"})});
  out.push_back({"Q8", g(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"})});
  return out;
}

// Random transitive constellations. Labels are drawn from a fixed pool in
// canonical order, so two covers from one generator never disagree on the
// relative order of shared labels.
class CoverGenerator {
public:
  explicit CoverGenerator(std::uint64_t seed) : rng_(seed), groups_(small_groups()) {}

  std::mt19937_64& rng() { return rng_; }

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  std::vector<BranchLabel> labels(std::size_t count) {
    static const char* pool[] = {"-1", "0", "1/2", "1", "2", "i", "p", "q", "inf"};
    std::vector<std::size_t> idx(std::size(pool));
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng_);
    idx.resize(std::min(count, idx.size()));
    std::sort(idx.begin(), idx.end());
    std::vector<BranchLabel> out;
    for (auto k : idx) out.push_back(BranchLabel::parse(pool[k]));
    return out;
  }

  Permutation random_permutation(std::size_t n) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng_);
    return Permutation::from_images(std::move(images));
  }

  Permutation random_non_identity(std::size_t n) {
    for (;;) {
      Permutation p = random_permutation(n);
      if (!p.is_identity() || n == 1) return p;
    }
  }

  // Random transitive cover of degree n over the genus-g0 base with the given
  // branch labels (r >= 1 when g0 == 0 and n > 1).
  BranchedCover random_cover(std::size_t n, int g0, const std::vector<BranchLabel>& labels,
                             const std::vector<Permutation>* group = nullptr, int attempts = 10000) {
    auto pick = [&]() { return group ? (*group)[uniform(0, group->size() - 1)] : random_permutation(n); };
    if (labels.empty() && g0 > 0 && !group && n > 1) {
      // Unbranched: commuting handles generated by one relabelled n-cycle.
      Permutation sigma = random_permutation(n);
      Permutation cycle = conjugate(sigma, shift(n, 1));
      BranchedCover c;
      c.base_genus = g0;
      c.degree = n;
      auto power = [&](std::size_t k) {
        Permutation p(n);
        for (std::size_t i = 0; i < k; ++i) p = p * cycle;
        return p;
      };
      for (int h = 0; h < g0; ++h)
        c.handles.push_back({h == 0 ? cycle : power(uniform(0, n - 1)), power(uniform(0, n - 1))});
      return c;
    }
    for (int attempt = 0; attempt < attempts; ++attempt) {
      BranchedCover c;
      c.base_genus = g0;
      c.degree = n;
      Permutation product(n);
      for (int h = 0; h < g0; ++h) {
        HandlePair hp{pick(), pick()};
        product = product * commutator(hp.a, hp.b);
        c.handles.push_back(hp);
      }
      bool ok = true;
      for (std::size_t k = 0; k + 1 < labels.size(); ++k) {
        Permutation p = pick();
        for (int tries = 0; p.is_identity() && tries < 50; ++tries) p = pick();
        if (p.is_identity()) ok = false;
        product = product * p;
        c.branch_points.push_back({labels[k], p, false});
      }
      if (!labels.empty()) {
        // An identity closing entry is kept as padding (parity can force it).
        Permutation last = product.inverse();
        c.branch_points.push_back({labels.back(), last, last.is_identity()});
      } else if (!product.is_identity()) {
        ok = false;
      }
      if (!ok && n > 1) continue;
      if (n == 1) {
        c.branch_points.clear();
        return c;
      }
      auto gens = c.generators();
      if (is_transitive(gens, n)) return c;
    }
    throw std::runtime_error("no transitive constellation found");
  }

  // A cover from the right-regular representation of a random small group.
  BranchedCover random_regular_cover(int g0, const std::vector<BranchLabel>& labels, int attempts = 10000) {
    const auto& group = groups_[uniform(0, groups_.size() - 1)].elements;
    std::vector<Permutation> regular;
    for (const auto& g : group) regular.push_back(regular_image(group, g));
    return random_cover(group.size(), g0, labels, &regular, attempts);
  }

private:
  std::mt19937_64 rng_;
  std::vector<SmallGroup> groups_;
};

}  // namespace fixtures
