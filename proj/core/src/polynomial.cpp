#include "karp/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "karp/error.hpp"

namespace karp {

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  drop_trailing_zeros();
}

RealPolynomial RealPolynomial::monomial(double c, int k) {
  if (k < 0) throw DomainError("negative monomial degree");
  std::vector<double> coeffs(static_cast<std::size_t>(k) + 1, 0.0);
  coeffs.back() = c;
  return RealPolynomial(std::move(coeffs));
}

void RealPolynomial::drop_trailing_zeros() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double RealPolynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double RealPolynomial::operator()(double t) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::complex<double> RealPolynomial::operator()(std::complex<double> t) const noexcept {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = static_cast<double>(k) * coeffs_[k];
  return RealPolynomial(std::move(out));
}

RealPolynomial RealPolynomial::trimmed(double rel_tol) const {
  const double cutoff = rel_tol * max_abs_coeff();
  std::vector<double> out = coeffs_;
  while (!out.empty() && std::abs(out.back()) <= cutoff) out.pop_back();
  return RealPolynomial(std::move(out));
}

RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b) {
  std::vector<double> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
  return RealPolynomial(std::move(out));
}

RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b) {
  std::vector<double> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] - b[k];
  return RealPolynomial(std::move(out));
}

RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RealPolynomial(std::move(out));
}

RealPolynomial operator*(double c, const RealPolynomial& a) {
  std::vector<double> out = a.coeffs_;
  for (double& x : out) x *= c;
  return RealPolynomial(std::move(out));
}

PolynomialDivision divide(const RealPolynomial& dividend, const RealPolynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  const int dd = divisor.degree();
  std::vector<double> rem = dividend.coeffs();
  if (dividend.degree() < dd) return {RealPolynomial{}, dividend};

  std::vector<double> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1, 0.0);
  const double lead = divisor.leading();
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    const double c = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * divisor[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RealPolynomial(std::move(quot)), RealPolynomial(std::move(rem))};
}

double max_coeff_diff(const RealPolynomial& a, const RealPolynomial& b) {
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  double m = 0.0;
  for (std::size_t k = 0; k < len; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step
    const std::int64_t num = n - k + i;
    if (result > std::numeric_limits<std::int64_t>::max() / num) {
      throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
    }
    result = result * num / i;
  }
  return result;
}

ParametricPolynomial::ParametricPolynomial(std::vector<ParametricTerm> terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const ParametricTerm& t) { return t.coeff == 0; });
}

int ParametricPolynomial::degree() const noexcept {
  int d = -1;
  for (const auto& term : terms_) d = std::max(d, term.t_pow);
  return d;
}

namespace {

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

RealPolynomial ParametricPolynomial::at(double alpha) const {
  const double beta = 1.0 - alpha;
  std::vector<double> out(static_cast<std::size_t>(std::max(degree(), 0)) + 1, 0.0);
  for (const auto& term : terms_) {
    out[static_cast<std::size_t>(term.t_pow)] +=
        static_cast<double>(term.coeff) * ipow(alpha, term.alpha_pow) * ipow(beta, term.beta_pow);
  }
  return RealPolynomial(std::move(out));
}

RealPolynomial ParametricPolynomial::d_alpha(double alpha) const {
  const double beta = 1.0 - alpha;
  std::vector<double> out(static_cast<std::size_t>(std::max(degree(), 0)) + 1, 0.0);
  for (const auto& term : terms_) {
    const double c = static_cast<double>(term.coeff);
    double v = 0.0;
    if (term.alpha_pow > 0) v += c * term.alpha_pow * ipow(alpha, term.alpha_pow - 1) * ipow(beta, term.beta_pow);
    if (term.beta_pow > 0) v -= c * term.beta_pow * ipow(alpha, term.alpha_pow) * ipow(beta, term.beta_pow - 1);
    out[static_cast<std::size_t>(term.t_pow)] += v;
  }
  return RealPolynomial(std::move(out));
}

std::complex<double> ParametricPolynomial::operator()(std::complex<double> t, double alpha) const {
  return at(alpha)(t);
}

ParametricPolynomial ParametricPolynomial::operator-() const {
  std::vector<ParametricTerm> out = terms_;
  for (auto& term : out) term.coeff = -term.coeff;
  return ParametricPolynomial(std::move(out));
}

ParametricPolynomial operator+(const ParametricPolynomial& a, const ParametricPolynomial& b) {
  std::vector<ParametricTerm> out = a.terms_;
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  return ParametricPolynomial(std::move(out));
}

ParametricPolynomial operator-(const ParametricPolynomial& a, const ParametricPolynomial& b) { return a + (-b); }

ParametricPolynomial ParametricPolynomial::shifted(int k) const {
  std::vector<ParametricTerm> out = terms_;
  for (auto& term : out) term.t_pow += k;
  return ParametricPolynomial(std::move(out));
}

ParametricPolynomial ParametricPolynomial::shifted_power(int q, int m) {
  // (t^q - beta)^m = sum_j C(m, j) t^{qj} (-beta)^{m-j}
  std::vector<ParametricTerm> out;
  out.reserve(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    const std::int64_t sign = ((m - j) % 2 == 0) ? 1 : -1;
    out.push_back({sign * binomial(m, j), q * j, 0, m - j});
  }
  return ParametricPolynomial(std::move(out));
}

ParametricPolynomial ParametricPolynomial::term(std::int64_t coeff, int t_pow, int alpha_pow, int beta_pow) {
  return ParametricPolynomial({{coeff, t_pow, alpha_pow, beta_pow}});
}

}  // namespace karp
