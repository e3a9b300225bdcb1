#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fibercover {

// Exact element of Q(i).
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(implicit)
  GaussianRational(mpq_class re, mpq_class im = 0);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Lexicographic on (re, im); used only for canonical ordering.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ < b.re_ || (a.re_ == b.re_ && a.im_ < b.im_);
  }

  // "3", "-1/2", "2i", "1/2-3/4i", "i", "-i".
  std::string to_string() const;
  // Inverse of to_string; also accepts "a/b+c/di" with explicit "1i".
  static std::optional<GaussianRational> parse(std::string_view text);

  // Closest Gaussian rational with denominators <= max_denominator, found by
  // continued fractions on each part.
  static GaussianRational approximate(std::complex<double> z, long max_denominator);

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace fibercover
