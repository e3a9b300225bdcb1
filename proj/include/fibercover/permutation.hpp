#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibercover {

using Point = std::uint32_t;

// A bijection of {0..n-1}. Human-facing text is 1-based.
//
// Products compose left factor first: (p * q)(x) = q(p(x)). Every relation in
// the library (cover relations, commutators, conjugation) uses this order.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  // Throws Error(invalid_argument) unless `images` is a bijection of 0..n-1.
  static Permutation from_images(std::vector<Point> images);
  // 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  // All cycles including fixed points, each starting at its least point,
  // ordered by least point.
  std::vector<std::vector<Point>> cycles() const;
  std::size_t cycle_count() const;

  // "(1 2 3)(4 5)"; the identity prints as the empty string.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  explicit Permutation(std::vector<Point> images, int) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

Permutation commutator(const Permutation& a, const Permutation& b);
Permutation conjugate(const Permutation& g, const Permutation& a);  // g * a * g^-1

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Multiset of cycle lengths, fixed points included, in descending order.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::vector<std::size_t> lengths);

  static CycleType trivial(std::size_t degree);

  const std::vector<std::size_t>& lengths() const noexcept { return lengths_; }
  std::size_t degree() const noexcept;
  std::size_t cycle_count() const noexcept { return lengths_.size(); }
  std::size_t lcm() const;
  bool is_trivial() const noexcept;
  bool is_uniform() const noexcept;

  // "[4,1,1]"
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

private:
  std::vector<std::size_t> lengths_;
};

CycleType cycle_type(const Permutation& p);

// Cycle notation with 1-based symbols. Whitespace may separate symbols and
// cycles. Throws Error(malformed_cycle) on repeated symbols or bad syntax,
// Error(out_of_range) for symbols outside 1..degree. The error message starts
// with the 1-based column of the offending character.
Permutation parse_cycles(std::string_view text, std::size_t degree);

}  // namespace fibercover
