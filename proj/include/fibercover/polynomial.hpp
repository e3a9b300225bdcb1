#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fibercover/gaussian_rational.hpp"

namespace fibercover {

// Univariate polynomial over Q(i); coefficients in ascending degree with no
// trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coefficients);
  static Polynomial constant(GaussianRational c);
  static Polynomial variable();

  const std::vector<GaussianRational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const GaussianRational& leading() const { return coeffs_.back(); }
  GaussianRational coefficient(int k) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  GaussianRational evaluate(const GaussianRational& z) const;
  std::complex<double> evaluate(std::complex<double> z) const;
  std::vector<std::complex<double>> to_complex() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  // Quotient and remainder; throws on division by zero.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  std::string to_string(char var = 'z') const;

private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Yun square-free decomposition: result[k] is the monic product of the
// distinct roots of multiplicity k + 1.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

// Multiset of root multiplicities, descending, read off the square-free
// decomposition (exact).
std::vector<std::size_t> root_multiplicities(const Polynomial& p);

}  // namespace fibercover
