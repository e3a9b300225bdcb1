#include "fibercover/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "fibercover/error.hpp"

namespace fibercover {

namespace {

void check_degrees(std::span<const Permutation> gens, std::size_t n) {
  for (const auto& g : gens)
    if (g.degree() != n)
      throw Error(ErrorKind::degree_mismatch,
                  "generator of degree " + std::to_string(g.degree()) + " acting on " +
                      std::to_string(n) + " points");
}

constexpr Point unassigned = std::numeric_limits<Point>::max();

class ConjugatorSearch {
public:
  ConjugatorSearch(std::span<const Permutation> a, std::span<const Permutation> b,
                   std::size_t n)
      : a_(a), b_(b), n_(n), image_(n, unassigned), used_(n, false) {
    for (const auto& p : a) a_inv_.push_back(p.inverse());
    for (const auto& p : b) b_inv_.push_back(p.inverse());
  }

  std::optional<Permutation> run() {
    if (!search()) return std::nullopt;
    return Permutation::from_images(image_);
  }

private:
  // Assigns g(x) = y and everything it forces; on conflict rolls back and
  // returns false.
  bool propagate(Point x, Point y, std::vector<Point>& trail) {
    std::deque<std::pair<Point, Point>> queue;
    auto assign = [&](Point u, Point v) {
      if (image_[u] != unassigned) return image_[u] == v;
      if (used_[v]) return false;
      image_[u] = v;
      used_[v] = true;
      trail.push_back(u);
      queue.emplace_back(u, v);
      return true;
    };
    if (!assign(x, y)) return false;
    while (!queue.empty()) {
      auto [u, v] = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (!assign(b_[i](u), a_[i](v))) return false;
        if (!assign(b_inv_[i](u), a_inv_[i](v))) return false;
      }
    }
    return true;
  }

  void rollback(std::vector<Point>& trail) {
    for (Point u : trail) {
      used_[image_[u]] = false;
      image_[u] = unassigned;
    }
    trail.clear();
  }

  bool search() {
    auto it = std::find(image_.begin(), image_.end(), unassigned);
    if (it == image_.end()) return true;
    Point x = static_cast<Point>(it - image_.begin());
    for (Point y = 0; y < n_; ++y) {
      if (used_[y]) continue;
      std::vector<Point> trail;
      if (propagate(x, y, trail) && search()) return true;
      rollback(trail);
    }
    return false;
  }

  std::span<const Permutation> a_, b_;
  std::vector<Permutation> a_inv_, b_inv_;
  std::size_t n_;
  std::vector<Point> image_;
  std::vector<bool> used_;
};

}  // namespace

std::vector<Orbit> orbits(std::span<const Permutation> generators, std::size_t n) {
  check_degrees(generators, n);
  std::vector<Orbit> result;
  std::vector<bool> seen(n, false);
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Orbit orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      Point x = orbit[k];
      for (const auto& g : generators) {
        Point y = g(x);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool is_transitive(std::span<const Permutation> generators, std::size_t n) {
  return n == 0 || orbits(generators, n).size() == 1;
}

std::optional<std::size_t> group_order_bounded(std::span<const Permutation> generators,
                                               std::size_t n, std::size_t cap) {
  check_degrees(generators, n);
  std::unordered_set<Permutation, PermutationHash> elements;
  std::vector<Permutation> frontier{Permutation(n)};
  elements.insert(frontier.front());
  if (elements.size() > cap) return std::nullopt;
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        Permutation q = p * g;
        if (elements.insert(q).second) {
          if (elements.size() > cap) return std::nullopt;
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return elements.size();
}

std::optional<Permutation> simultaneous_conjugator(std::span<const Permutation> a,
                                                   std::span<const Permutation> b,
                                                   std::size_t n) {
  if (a.size() != b.size())
    throw Error(ErrorKind::invalid_argument, "conjugator tuples differ in length");
  check_degrees(a, n);
  check_degrees(b, n);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (cycle_type(a[i]) != cycle_type(b[i])) return std::nullopt;
  return ConjugatorSearch(a, b, n).run();
}

}  // namespace fibercover
