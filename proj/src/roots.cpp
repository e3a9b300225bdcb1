#include "fibercover/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fibercover/error.hpp"

namespace fibercover {

void evaluate_with_derivative(const std::vector<Complex>& coeffs, Complex z, Complex& value,
                              Complex& derivative) {
  value = 0;
  derivative = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    derivative = derivative * z + value;
    value = value * z + *it;
  }
}

namespace {

// Upper bound on root moduli (Fujiwara).
double root_radius(const std::vector<Complex>& monic) {
  std::size_t n = monic.size() - 1;
  double bound = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double c = std::abs(monic[k]);
    if (c == 0) continue;
    double scale = (k == 0) ? 2.0 : 1.0;
    bound = std::max(bound, std::pow(c / scale, 1.0 / static_cast<double>(n - k)));
  }
  return 2 * std::max(bound, 1e-3);
}

// Rounding-error bound for evaluating p at z: sum |c_k| |z|^k.
double evaluation_scale(const std::vector<Complex>& coeffs, double modulus) {
  double s = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * modulus + std::abs(*it);
  return s;
}

// Roots stop moving once the correction is negligible or the residual is at
// the rounding level.
bool aberth(const std::vector<Complex>& monic, std::vector<Complex>& z, int max_iterations) {
  std::size_t n = z.size();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex p, dp;
      evaluate_with_derivative(monic, z[i], p, dp);
      if (std::abs(p) <= 4 * eps * static_cast<double>(n) * evaluation_scale(monic, std::abs(z[i]))) {
        done[i] = true;
        continue;
      }
      Complex ratio = p / dp;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      Complex w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[i] -= w;
      if (std::abs(w) <= 1e-15 * std::max(1.0, std::abs(z[i])))
        done[i] = true;
      else
        all = false;
    }
    if (all) return true;
  }
  return false;
}

void polish(const std::vector<Complex>& coeffs, Complex& z, double tolerance) {
  for (int k = 0; k < 8; ++k) {
    Complex p, dp;
    evaluate_with_derivative(coeffs, z, p, dp);
    if (dp == Complex(0)) return;
    Complex step = p / dp;
    z -= step;
    if (std::abs(step) <= tolerance * std::max(1.0, std::abs(z))) return;
  }
}

}  // namespace

std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs, const RootOptions& opts) {
  while (!coeffs.empty() && coeffs.back() == Complex(0)) coeffs.pop_back();
  if (coeffs.empty()) throw Error(ErrorKind::invalid_argument, "roots of the zero polynomial");
  std::size_t n = coeffs.size() - 1;
  if (n == 0) return {};
  std::vector<Complex> monic(coeffs);
  for (auto& c : monic) c /= coeffs.back();

  double radius = root_radius(monic);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  std::vector<Complex> z(n);
  for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
    double phase = 0.4 + (attempt ? jitter(rng) : 0.0);
    double r = radius * (attempt ? 1.0 + 0.5 * jitter(rng) : 1.0);
    for (std::size_t k = 0; k < n; ++k) {
      double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + phase;
      z[k] = std::polar(r, angle);
      if (attempt) z[k] += Complex(jitter(rng), jitter(rng)) * (0.1 * r);
    }
    if (aberth(monic, z, opts.max_iterations)) {
      for (auto& root : z) polish(coeffs, root, opts.tolerance);
      return z;
    }
  }
  throw Error(ErrorKind::resolution_failure,
              "root finder did not converge for a degree " + std::to_string(n) + " polynomial");
}

}  // namespace fibercover
