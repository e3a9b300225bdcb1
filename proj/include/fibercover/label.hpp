#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fibercover/gaussian_rational.hpp"

namespace fibercover {

// A point of the base surface: a symbolic name, an exact coordinate in Q(i),
// or both ("lambda=1/3"). "inf" is the point at infinity.
//
// Two labels are the same point when both carry names and the names agree, or
// otherwise when both carry coordinates and the coordinates agree. Equal names
// with different coordinates is a label conflict.
class BranchLabel {
public:
  static BranchLabel named(std::string name);
  static BranchLabel at(GaussianRational coordinate);
  static BranchLabel infinity() { return named("inf"); }
  static BranchLabel named_at(std::string name, GaussianRational coordinate);

  // Throws Error(syntax) for text that is neither identifier, number nor both.
  static BranchLabel parse(std::string_view text);

  const std::optional<std::string>& name() const noexcept { return name_; }
  const std::optional<GaussianRational>& coordinate() const noexcept { return coordinate_; }
  bool is_infinity() const { return name_ && *name_ == "inf"; }

  std::string to_string() const;

  // Same point; throws Error(label_conflict) on equal names with unequal
  // coordinates.
  bool same_point(const BranchLabel& other) const;

  // Canonical order: coordinates by (re, im), then names, then inf.
  friend bool canonical_less(const BranchLabel& a, const BranchLabel& b);

private:
  std::optional<std::string> name_;
  std::optional<GaussianRational> coordinate_;
};

}  // namespace fibercover
