#include "fibercover/polynomial.hpp"

#include <algorithm>

#include "fibercover/error.hpp"

namespace fibercover {

Polynomial::Polynomial(std::vector<GaussianRational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(GaussianRational c) { return Polynomial(std::vector<GaussianRational>{std::move(c)}); }

Polynomial Polynomial::variable() { return Polynomial(std::vector<GaussianRational>{GaussianRational(0), GaussianRational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return GaussianRational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::derivative() const {
  std::vector<GaussianRational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(GaussianRational(static_cast<long>(k)) * coeffs_[k]);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  GaussianRational inv = leading().inverse();
  return inv * *this;
}

GaussianRational Polynomial::evaluate(const GaussianRational& z) const {
  GaussianRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

std::vector<std::complex<double>> Polynomial::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_complex());
  return out;
}

Polynomial Polynomial::operator-() const {
  std::vector<GaussianRational> c;
  for (const auto& x : coeffs_) c.push_back(-x);
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const GaussianRational& s, const Polynomial& p) {
  std::vector<GaussianRational> c;
  for (const auto& x : p.coeffs_) c.push_back(s * x);
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::invalid_argument, "polynomial division by zero");
  std::vector<GaussianRational> rem = a.coeffs_;
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  GaussianRational lead_inv = b.leading().inverse();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    GaussianRational f = rem[static_cast<std::size_t>(k + b.degree())] * lead_inv;
    quot[static_cast<std::size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    GaussianRational shown = c;
    if (c.is_real() && c.re() < 0 && !out.empty()) {
      out += " - ";
      shown = -c;
    } else if (!out.empty()) {
      out += " + ";
    }
    std::string cs = shown.is_real() ? shown.to_string() : "(" + shown.to_string() + ")";
    if (k == 0) {
      out += cs;
      continue;
    }
    if (shown == GaussianRational(-1))
      out += "-";
    else if (!(shown == GaussianRational(1)))
      out += cs + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() < 1) return out;
  Polynomial f = p.monic();
  Polynomial fp = f.derivative();
  Polynomial a0 = gcd(f, fp);
  Polynomial b = divmod(f, a0).first;
  Polynomial c = divmod(fp, a0).first;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial a = gcd(b, d);
    out.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

std::vector<std::size_t> root_multiplicities(const Polynomial& p) {
  std::vector<std::size_t> out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (int r = 0; r < parts[k].degree(); ++r) out.push_back(k + 1);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace fibercover
