#include "fibercover/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>

#include "fibercover/error.hpp"
#include "fibercover/roots.hpp"

namespace fibercover {

namespace {

constexpr double merge_tolerance = 1e-8;      // relative; same critical value
constexpr double separation_tolerance = 1e-5; // relative; distinct values must be this far apart
constexpr double recognition_tolerance = 1e-9;
constexpr long max_denominator = 1000;
constexpr int angle_candidates = 720;

std::string show(Complex z) {
  std::ostringstream os;
  os.precision(8);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

double scale(Complex a, Complex b) { return 1.0 + std::max(std::abs(a), std::abs(b)); }

std::vector<Complex> complex_coefficients(const Polynomial& p, std::size_t size) {
  std::vector<Complex> c = p.to_complex();
  c.resize(size, Complex(0));
  return c;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() < 1) return Polynomial::constant(1);
  return divmod(p.monic(), gcd(p, p.derivative())).first;
}

// A critical point of f and its ramification index.
struct CriticalPoint {
  bool value_infinite = false;
  std::optional<GaussianRational> exact;
  Complex value;
  std::size_t e = 1;
};

std::vector<CriticalPoint> critical_points(const RationalMap& f) {
  const Polynomial& P = f.numerator();
  const Polynomial& Q = f.denominator();
  std::vector<CriticalPoint> out;
  Polynomial W = P.derivative() * Q - P * Q.derivative();
  auto parts = squarefree_decomposition(W);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Polynomial& a = parts[k];
    if (a.degree() < 1) continue;
    Polynomial poles = gcd(a, Q);
    Polynomial finite = divmod(a, poles).first;
    for (int r = 0; r < poles.degree(); ++r) out.push_back({true, std::nullopt, {}, k + 2});
    if (finite.degree() < 1) continue;
    for (Complex root : polynomial_roots(finite.to_complex())) {
      Complex value = P.evaluate(root) / Q.evaluate(root);
      out.push_back({false, std::nullopt, value, k + 2});
    }
  }
  auto at_inf = f.value_at_infinity();
  if (!at_inf) {
    auto e = static_cast<std::size_t>(P.degree() - Q.degree());
    if (e >= 2) out.push_back({true, std::nullopt, {}, e});
  } else {
    Polynomial shifted = P - *at_inf * Q;
    auto e = static_cast<std::size_t>(f.degree() - shifted.degree());
    if (e >= 2) out.push_back({false, *at_inf, at_inf->to_complex(), e});
  }
  return out;
}

struct Cluster {
  bool infinite = false;
  std::optional<GaussianRational> exact;
  Complex value;
  std::vector<std::size_t> indices;  // ramification indices >= 2
};

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * scale(a, b); }

void check_separation(const std::vector<Cluster>& clusters) {
  for (std::size_t i = 0; i < clusters.size(); ++i)
    for (std::size_t j = i + 1; j < clusters.size(); ++j) {
      const auto &a = clusters[i], &b = clusters[j];
      if (a.infinite || b.infinite) continue;
      if (close(a.value, b.value, separation_tolerance))
        throw Error(ErrorKind::resolution_failure, "critical values " + show(a.value) + " and " +
                                                       show(b.value) +
                                                       " are closer than the resolution");
    }
}

std::vector<Cluster> cluster_points(const RationalMap& f) {
  std::vector<Cluster> clusters;
  Cluster inf{true, std::nullopt, {}, {}};
  for (const auto& cp : critical_points(f)) {
    if (cp.value_infinite) {
      inf.indices.push_back(cp.e);
      continue;
    }
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& c) {
      if (cp.exact && c.exact) return *cp.exact == *c.exact;
      return close(c.value, cp.value, merge_tolerance);
    });
    if (it == clusters.end()) {
      clusters.push_back({false, cp.exact, cp.value, {cp.e}});
    } else {
      it->indices.push_back(cp.e);
      if (cp.exact && !it->exact) {
        it->exact = cp.exact;
        it->value = cp.value;
      }
    }
  }
  check_separation(clusters);

  const Polynomial& P = f.numerator();
  const Polynomial& Q = f.denominator();
  Polynomial W = P.derivative() * Q - P * Q.derivative();
  for (auto& c : clusters) {
    if (c.exact) continue;
    GaussianRational guess = GaussianRational::approximate(c.value, max_denominator);
    if (!close(guess.to_complex(), c.value, recognition_tolerance)) continue;
    if (gcd(P - guess * Q, W).degree() >= 1) {
      c.exact = guess;
      c.value = guess.to_complex();
    }
  }
  if (!inf.indices.empty()) clusters.push_back(std::move(inf));
  return clusters;
}

CycleType exact_type(const RationalMap& f, const Cluster& c) {
  const Polynomial& P = f.numerator();
  const Polynomial& Q = f.denominator();
  std::vector<std::size_t> m;
  int d = f.degree();
  if (c.infinite) {
    m = root_multiplicities(Q);
    if (P.degree() > Q.degree()) m.push_back(static_cast<std::size_t>(P.degree() - Q.degree()));
  } else {
    Polynomial g = P - *c.exact * Q;
    m = root_multiplicities(g);
    if (g.degree() < d) m.push_back(static_cast<std::size_t>(d - g.degree()));
  }
  return CycleType(std::move(m));
}

CycleType cluster_type(const RationalMap& f, const Cluster& c) {
  auto d = static_cast<std::size_t>(f.degree());
  std::vector<std::size_t> lengths = c.indices;
  std::size_t used = 0;
  for (auto e : lengths) used += e;
  if (used > d)
    throw Error(ErrorKind::resolution_failure,
                "ramification over " + show(c.value) + " exceeds the degree");
  lengths.resize(lengths.size() + (d - used), 1);
  CycleType numeric(std::move(lengths));
  if (!c.infinite && !c.exact) return numeric;
  CycleType exact = exact_type(f, c);
  if (!(exact == numeric))
    throw Error(ErrorKind::resolution_failure,
                "multiplicities over " + (c.infinite ? std::string("inf") : c.exact->to_string()) +
                    " disagree: exact " + exact.to_string() + ", clustered " + numeric.to_string());
  return exact;
}

bool before(const Cluster& a, const Cluster& b) {
  if (a.infinite != b.infinite) return b.infinite;
  if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
  return a.value.imag() < b.value.imag();
}

// One entry of a shared set of critical values, with the local type for each
// map (nullopt where the map is unbranched).
struct SharedValue {
  Cluster cluster;
  BranchLabel label;
  std::vector<std::optional<CycleType>> types;
};

std::vector<SharedValue> shared_values(const std::vector<const RationalMap*>& maps) {
  std::vector<SharedValue> out;
  for (std::size_t m = 0; m < maps.size(); ++m) {
    auto clusters = cluster_points(*maps[m]);
    std::size_t d = static_cast<std::size_t>(maps[m]->degree());
    std::size_t ramification = 0;
    for (auto& c : clusters) {
      CycleType type = cluster_type(*maps[m], c);
      ramification += d - type.cycle_count();
      auto it = std::find_if(out.begin(), out.end(), [&](const SharedValue& s) {
        if (s.cluster.infinite || c.infinite) return s.cluster.infinite == c.infinite;
        if (s.cluster.exact && c.exact) return *s.cluster.exact == *c.exact;
        return close(s.cluster.value, c.value, merge_tolerance);
      });
      if (it == out.end()) {
        out.push_back({c, BranchLabel::infinity(), std::vector<std::optional<CycleType>>(maps.size())});
        it = out.end() - 1;
      } else if (c.exact && !it->cluster.exact) {
        it->cluster.exact = c.exact;
        it->cluster.value = c.value;
      }
      it->types[m] = type;
    }
    if (ramification != 2 * d - 2)
      throw Error(ErrorKind::internal_inconsistency,
                  "total ramification " + std::to_string(ramification) + " of " +
                      maps[m]->to_string() + " is not 2d - 2");
  }
  std::vector<Cluster> all;
  for (const auto& s : out) all.push_back(s.cluster);
  check_separation(all);

  std::sort(out.begin(), out.end(),
            [](const SharedValue& a, const SharedValue& b) { return before(a.cluster, b.cluster); });
  int unnamed = 0;
  for (auto& s : out) {
    if (s.cluster.infinite)
      s.label = BranchLabel::infinity();
    else if (s.cluster.exact)
      s.label = BranchLabel::at(*s.cluster.exact);
    else
      s.label = BranchLabel::named("c" + std::to_string(++unnamed));
  }
  return out;
}

// Closed path from the base point: straight spoke to the entry point on a
// circle around `center`, once around it counterclockwise, and back.
struct Loop {
  Complex base, entry, center;
  double radius = 0, spoke = 0, length = 0;
  std::size_t value = 0;  // index into the shared values

  Loop(Complex b, Complex v, double r, std::size_t index)
      : base(b), center(v), radius(r), value(index) {
    entry = v + r * (b - v) / std::abs(b - v);
    spoke = std::abs(entry - b);
    length = 2 * spoke + 2 * std::numbers::pi * r;
  }

  Complex at(double s) const {
    if (s <= spoke) return base + (entry - base) * (s / spoke);
    double around = 2 * std::numbers::pi * radius;
    if (s <= spoke + around)
      return center + std::polar(radius, std::arg(entry - center) + (s - spoke) / radius);
    if (s >= length) return base;
    return entry + (base - entry) * ((s - spoke - around) / spoke);
  }
};

double segment_distance(Complex p, Complex a, Complex b) {
  Complex ab = b - a;
  double t = std::clamp(((p - a) * std::conj(ab)).real() / std::norm(ab), 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

struct LoopSystem {
  Complex base;
  double outer_radius = 2;
  std::vector<Loop> loops;  // composition order
};

// Base point on the circle |t| = 2 + max |v|; among candidate angles the one
// whose spokes keep the largest clearance from the other critical values.
LoopSystem loop_system(const std::vector<SharedValue>& values) {
  std::vector<std::size_t> finite;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (!values[k].cluster.infinite) finite.push_back(k);
  LoopSystem sys;
  double max_modulus = 0;
  for (auto k : finite) max_modulus = std::max(max_modulus, std::abs(values[k].cluster.value));
  sys.outer_radius = 2 + max_modulus;

  std::vector<double> radii;
  for (auto k : finite) {
    double nearest = std::numeric_limits<double>::infinity();
    for (auto j : finite)
      if (j != k) nearest = std::min(nearest, std::abs(values[k].cluster.value - values[j].cluster.value));
    radii.push_back(std::min(1.0, nearest / 3));
  }

  double best_score = -1;
  Complex best_base;
  for (int c = 0; c < angle_candidates; ++c) {
    double angle = 2 * std::numbers::pi * (c + 0.5) / angle_candidates;
    Complex b = std::polar(sys.outer_radius, angle);
    double score = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < finite.size(); ++j) {
      Loop spoke(b, values[finite[j]].cluster.value, radii[j], finite[j]);
      for (std::size_t k = 0; k < finite.size(); ++k) {
        if (k == j) continue;
        double d = segment_distance(values[finite[k]].cluster.value, b, spoke.entry);
        score = std::min(score, d / radii[k]);
      }
    }
    if (score > best_score) {
      best_score = score;
      best_base = b;
    }
    if (std::isinf(score)) break;
  }
  if (best_score <= 1.0)
    throw Error(ErrorKind::resolution_failure, "no base point keeps the loops apart");
  sys.base = best_base;
  for (std::size_t j = 0; j < finite.size(); ++j)
    sys.loops.emplace_back(best_base, values[finite[j]].cluster.value, radii[j], finite[j]);
  auto turn = [&](const Loop& l) { return std::arg((l.center - sys.base) / (-sys.base)); };
  std::sort(sys.loops.begin(), sys.loops.end(),
            [&](const Loop& a, const Loop& b) { return turn(a) < turn(b); });
  return sys;
}

// Fiber equation p(u) - t q(u) = 0 in a chart where no fiber point over the
// loop region sits at infinity.
struct Chart {
  std::vector<Complex> p, q;
};

std::vector<Complex> taylor_shift(std::vector<Complex> c, Complex shift) {
  std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += shift * c[j + 1];
  return c;
}

Chart make_chart(const RationalMap& f, double outer_radius) {
  auto d = static_cast<std::size_t>(f.degree());
  const Polynomial& P = f.numerator();
  const Polynomial& Q = f.denominator();
  if (P.degree() > Q.degree()) return {complex_coefficients(P, d + 1), complex_coefficients(Q, d + 1)};
  // f(inf) is finite: move infinity next to a pole, where |f| is large.
  Complex pole = polynomial_roots(squarefree_part(Q).to_complex()).front();
  Complex star = pole;
  for (double delta = 0.1 * (1 + std::abs(pole)); delta > 1e-10; delta /= 2) {
    star = pole + Complex(delta, delta / 3);
    if (std::abs(P.evaluate(star)) > 10 * outer_radius * std::abs(Q.evaluate(star))) break;
  }
  auto invert = [&](const Polynomial& poly) {
    auto shifted = taylor_shift(complex_coefficients(poly, d + 1), star);
    std::reverse(shifted.begin(), shifted.end());  // u^d * poly(star + 1/u)
    return shifted;
  };
  return {invert(P), invert(Q)};
}

double min_separation(const std::vector<Complex>& z) {
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) sep = std::min(sep, std::abs(z[i] - z[j]));
  return sep;
}

// Fiber points over one point of a path, carried along by predictor-corrector
// steps. Every accepted step moves each point by less than a third of the
// current separation, so the pairing with the previous fiber is unambiguous.
class TrackedFiber {
public:
  TrackedFiber(const Chart& chart, std::vector<Complex> points)
      : chart_(chart), points_(std::move(points)) {}

  const std::vector<Complex>& points() const { return points_; }

  bool step(Complex t0, Complex t1) {
    double sep = points_.size() > 1 ? min_separation(points_) : std::numeric_limits<double>::infinity();
    double radius = sep / 3;
    std::vector<Complex> next(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      Complex z = points_[i];
      Complex p, dp, q, dq;
      evaluate_with_derivative(chart_.p, z, p, dp);
      evaluate_with_derivative(chart_.q, z, q, dq);
      Complex dz = q / (dp - t0 * dq) * (t1 - t0);
      if (!std::isfinite(std::abs(dz)) || std::abs(dz) > sep / 4) return false;
      Complex w = z + dz;
      bool converged = false;
      for (int it = 0; it < 12 && !converged; ++it) {
        evaluate_with_derivative(chart_.p, w, p, dp);
        evaluate_with_derivative(chart_.q, w, q, dq);
        Complex delta = (p - t1 * q) / (dp - t1 * dq);
        if (!std::isfinite(std::abs(delta))) return false;
        w -= delta;
        converged = std::abs(delta) <= 1e-12 * std::max(1.0, std::abs(w));
      }
      if (!converged || std::abs(w - z) >= radius) return false;
      next[i] = w;
    }
    points_ = std::move(next);
    return true;
  }

private:
  const Chart& chart_;
  std::vector<Complex> points_;
};

std::vector<Complex> base_fiber(const Chart& chart, Complex base) {
  std::vector<Complex> c(chart.p.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = chart.p[k] - base * chart.q[k];
  auto roots = polynomial_roots(c);
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

Permutation track_loop(const Chart& chart, const std::vector<Complex>& fiber, const Loop& loop,
                       const TrackingOptions& opts) {
  TrackedFiber tracked(chart, fiber);
  // Inbound spoke, circle, outbound spoke; no step may cut across the circle.
  const double around = 2 * std::numbers::pi * loop.radius;
  const double breaks[] = {0, loop.spoke, loop.spoke + around, loop.length};
  for (int piece = 0; piece < 3; ++piece) {
    double start = breaks[piece], end = breaks[piece + 1];
    double cap = piece == 1 ? (end - start) / 32 : end - start;
    double h_max = std::min(cap, loop.length / 64.0) / std::max(1, opts.resolution);
    double h_min = (end - start) * opts.min_step;
    double h = h_max;
    double s = start;
    while (s < end) {
      double s1 = std::min(end, s + h);
      if (tracked.step(loop.at(s), loop.at(s1))) {
        s = s1;
        h = std::min(h_max, 2 * h);
        continue;
      }
      h /= 2;
      if (h < h_min)
        throw Error(ErrorKind::tracking_failure,
                    "path tracking stalled at t = " + show(loop.at(s)) + " on the loop around " +
                        show(loop.center));
    }
  }
  double radius = min_separation(fiber) / 3;
  std::vector<Point> images(fiber.size());
  std::vector<bool> hit(fiber.size(), false);
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    const Complex end = tracked.points()[i];
    std::size_t best = 0;
    for (std::size_t j = 1; j < fiber.size(); ++j)
      if (std::abs(end - fiber[j]) < std::abs(end - fiber[best])) best = j;
    if (fiber.size() > 1 && (std::abs(end - fiber[best]) >= radius || hit[best]))
      throw Error(ErrorKind::tracking_failure,
                  "loop around " + show(loop.center) + " does not close up on the base fiber");
    hit[best] = true;
    images[i] = static_cast<Point>(best);
  }
  return Permutation::from_images(std::move(images));
}

std::string describe(const BranchLabel& label, const std::optional<CycleType>& type,
                     const Permutation& sigma) {
  return "cycle type " + cycle_type(sigma).to_string() + " at " + label.to_string() +
         " differs from the multiplicity data " +
         (type ? type->to_string() : std::string("(unbranched)"));
}

std::vector<BranchedCover> compute_monodromy(const std::vector<const RationalMap*>& maps,
                                             const TrackingOptions& opts) {
  auto values = shared_values(maps);
  LoopSystem sys = loop_system(values);

  std::vector<Chart> charts;
  std::vector<std::vector<Complex>> fibers;
  for (const auto* f : maps) {
    charts.push_back(make_chart(*f, sys.outer_radius));
    fibers.push_back(base_fiber(charts.back(), sys.base));
    if (fibers.back().size() != static_cast<std::size_t>(f->degree()))
      throw Error(ErrorKind::internal_inconsistency, "base fiber has the wrong size");
  }

  const std::size_t loops = sys.loops.size();
  const std::size_t tasks = maps.size() * loops;
  std::vector<Permutation> sigma(tasks);
  std::vector<std::exception_ptr> failures(tasks);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t task = 0; task < tasks; ++task) {
    std::size_t m = task / loops, l = task % loops;
    try {
      sigma[task] = track_loop(charts[m], fibers[m], sys.loops[l], opts);
    } catch (...) {
      failures[task] = std::current_exception();
    }
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);

  auto at_infinity = std::find_if(values.begin(), values.end(),
                                  [](const SharedValue& s) { return s.cluster.infinite; });
  std::vector<BranchedCover> covers;
  for (std::size_t m = 0; m < maps.size(); ++m) {
    auto d = static_cast<std::size_t>(maps[m]->degree());
    BranchedCover cover;
    cover.base_genus = 0;
    cover.degree = d;
    Permutation product(d);
    auto check = [&](const SharedValue& value, const Permutation& s) {
      CycleType expected = value.types[m] ? *value.types[m] : CycleType::trivial(d);
      if (!(cycle_type(s) == expected))
        throw Error(ErrorKind::monodromy_inconsistency, describe(value.label, value.types[m], s));
      cover.branch_points.push_back({value.label, s, s.is_identity()});
    };
    for (std::size_t l = 0; l < loops; ++l) {
      const Permutation& s = sigma[m * loops + l];
      product = product * s;
      check(values[sys.loops[l].value], s);
    }
    Permutation closing = product.inverse();
    if (at_infinity != values.end()) {
      check(*at_infinity, closing);
    } else if (!closing.is_identity()) {
      throw Error(ErrorKind::monodromy_inconsistency,
                  "loop product is " + product.to_cycle_string() + ", not the identity");
    }
    auto report = validate(cover);
    if (!report.ok()) throw Error(ErrorKind::monodromy_inconsistency, report.summary());
    if (genus(cover) != 0)
      throw Error(ErrorKind::monodromy_inconsistency,
                  "monodromy of " + maps[m]->to_string() + " has genus " +
                      std::to_string(genus(cover)));
    covers.push_back(std::move(cover));
  }
  return covers;
}

}  // namespace

RationalMap::RationalMap(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) throw Error(ErrorKind::invalid_argument, "zero denominator");
  Polynomial g = gcd(numerator, denominator);
  p_ = divmod(numerator, g).first;
  q_ = divmod(denominator, g).first;
  GaussianRational lead = q_.leading().inverse();
  p_ = lead * p_;
  q_ = lead * q_;
  if (degree() < 1) throw Error(ErrorKind::invalid_argument, "constant map");
  if (degree() > max_degree)
    throw Error(ErrorKind::invalid_argument,
                "degree " + std::to_string(degree()) + " exceeds the cap of " +
                    std::to_string(max_degree));
}

std::optional<GaussianRational> RationalMap::value_at_infinity() const {
  if (p_.degree() > q_.degree()) return std::nullopt;
  if (p_.degree() < q_.degree()) return GaussianRational(0);
  return p_.leading() / q_.leading();
}

std::string RationalMap::to_string() const {
  if (is_polynomial()) return p_.to_string();
  return "(" + p_.to_string() + ")/(" + q_.to_string() + ")";
}

std::vector<CriticalValue> critical_values(const RationalMap& f) {
  std::vector<CriticalValue> out;
  for (auto& s : shared_values({&f}))
    out.push_back({s.label, s.cluster.exact, s.cluster.infinite, s.cluster.value, *s.types[0]});
  return out;
}

BranchedCover monodromy(const RationalMap& f, const TrackingOptions& opts) {
  return compute_monodromy({&f}, opts).front();
}

std::pair<BranchedCover, BranchedCover> monodromy_pair(const RationalMap& f1, const RationalMap& f2,
                                                       const TrackingOptions& opts) {
  auto covers = compute_monodromy({&f1, &f2}, opts);
  return {std::move(covers[0]), std::move(covers[1])};
}

FiberDecomposition self_product_report(const RationalMap& f, const TrackingOptions& opts,
                                       Execution exec) {
  BranchedCover c = monodromy(f, opts);
  return decompose(c, c, exec);
}

}  // namespace fibercover
