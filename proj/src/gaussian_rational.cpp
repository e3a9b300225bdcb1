#include "fibercover/gaussian_rational.hpp"

#include <cctype>
#include <cmath>

#include "fibercover/error.hpp"

namespace fibercover {

namespace {

std::optional<mpq_class> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t slash = text.find('/');
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  bool negative = false;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    negative = num[0] == '-';
    num.remove_prefix(1);
  }
  if (!digits(num)) return std::nullopt;
  mpz_class n{std::string(num)}, d{1};
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!digits(den)) return std::nullopt;
    d = mpz_class(std::string(den));
    if (d == 0) return std::nullopt;
  }
  mpq_class q(n, d);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

// Continued-fraction best approximation with bounded denominator.
mpq_class approximate_real(double x, long max_den) {
  if (!std::isfinite(x)) throw Error(ErrorKind::invalid_argument, "non-finite value");
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  mpq_class q(h1, k1);
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  mpq_class norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw Error(ErrorKind::invalid_argument, "division by zero");
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = i;
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = im_.get_str() + "i";
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;
}

std::optional<GaussianRational> GaussianRational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    auto re = parse_rational(text);
    if (!re) return std::nullopt;
    return GaussianRational(*re);
  }
  // Split before the sign that introduces the imaginary part (not at index 0).
  std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_text = split == std::string_view::npos ? "" : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);
  mpq_class re = 0;
  if (!re_text.empty()) {
    auto r = parse_rational(re_text);
    if (!r) return std::nullopt;
    re = *r;
  }
  mpq_class im;
  if (im_text.empty() || im_text == "+")
    im = 1;
  else if (im_text == "-")
    im = -1;
  else {
    auto r = parse_rational(im_text);
    if (!r) return std::nullopt;
    im = *r;
  }
  return GaussianRational(re, im);
}

GaussianRational GaussianRational::approximate(std::complex<double> z, long max_denominator) {
  return {approximate_real(z.real(), max_denominator),
          approximate_real(z.imag(), max_denominator)};
}

}  // namespace fibercover
