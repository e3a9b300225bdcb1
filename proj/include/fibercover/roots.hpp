#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace fibercover {

using Complex = std::complex<double>;

struct RootOptions {
  double tolerance = 1e-12;  // relative, on the final Newton polish
  int max_iterations = 600;
  int max_restarts = 8;
  std::uint64_t seed = 0x5eed;
};

// Horner evaluation of p and p' at z; coefficients ascending.
void evaluate_with_derivative(const std::vector<Complex>& coeffs, Complex z, Complex& value,
                              Complex& derivative);

// All roots of a polynomial (ascending coefficients, nonzero leading term)
// by Aberth-Ehrlich simultaneous iteration. Stagnation triggers a restart from
// randomly perturbed starting points. Throws Error(resolution_failure) when no
// restart converges.
std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs, const RootOptions& opts = {});

}  // namespace fibercover
