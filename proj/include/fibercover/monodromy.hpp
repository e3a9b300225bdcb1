#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibercover/cover.hpp"
#include "fibercover/fiber.hpp"
#include "fibercover/polynomial.hpp"

namespace fibercover {

// f = P / Q with gcd(P, Q) = 1 after construction; degree = max(deg P, deg Q).
class RationalMap {
public:
  static constexpr int max_degree = 64;

  // Reduces by the gcd and makes Q monic. Throws Error(invalid_argument) for a
  // zero denominator, a constant map, or degree above max_degree.
  RationalMap(Polynomial numerator, Polynomial denominator = Polynomial::constant(1));

  const Polynomial& numerator() const noexcept { return p_; }
  const Polynomial& denominator() const noexcept { return q_; }
  int degree() const noexcept { return std::max(p_.degree(), q_.degree()); }
  bool is_polynomial() const noexcept { return q_.degree() == 0; }
  // Value at infinity; nullopt when f(inf) = inf.
  std::optional<GaussianRational> value_at_infinity() const;

  std::string to_string() const;
  friend bool operator==(const RationalMap&, const RationalMap&) = default;

private:
  Polynomial p_;
  Polynomial q_;
};

struct CriticalValue {
  BranchLabel label;                       // exact coordinate, "inf", or a name c1, c2, ...
  std::optional<GaussianRational> exact;   // set when the value is recognised exactly
  bool at_infinity = false;
  std::complex<double> approx;             // numerical value (unused at infinity)
  CycleType type;                          // local multiplicities of the full fiber
};

// Sorted finite values by (re, im), then infinity. The multiplicity data is
// exact for exact values (square-free factorisation of P - vQ) and otherwise
// read off the clustered critical points. Throws Error(resolution_failure)
// when two distinct values cannot be separated reliably and
// Error(internal_inconsistency) if the ramification total is not 2d - 2.
std::vector<CriticalValue> critical_values(const RationalMap& f);

struct TrackingOptions {
  int resolution = 1;          // step cap = min(loop length / 64, circle / 32) / resolution
  double min_step = 0x1p-20;   // fraction of the current path piece
};

// Genus-0 cover of degree deg f: one branch entry per finite critical value in
// loop order, infinity last. Throws Error(tracking_failure) or
// Error(monodromy_inconsistency).
BranchedCover monodromy(const RationalMap& f, const TrackingOptions& opts = {});

// Monodromy of two maps over one shared loop system on the union of their
// critical values; a value branched for one map only is padded in the other.
std::pair<BranchedCover, BranchedCover> monodromy_pair(const RationalMap& f1,
                                                       const RationalMap& f2,
                                                       const TrackingOptions& opts = {});

FiberDecomposition self_product_report(const RationalMap& f, const TrackingOptions& opts = {},
                                       Execution exec = Execution::parallel);

}  // namespace fibercover
