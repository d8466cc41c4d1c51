#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace karp {

/// Dense univariate polynomial with real coefficients in ascending degree.
///
/// Trailing zeros are dropped on construction, so the zero polynomial has no
/// coefficients and degree -1. Near-zero trimming is explicit (trimmed()).
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coeffs);

  /// c * t^k
  static RealPolynomial monomial(double c, int k);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of t^k; zero past the degree.
  double operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

  double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
  double max_abs_coeff() const noexcept;

  double operator()(double t) const noexcept;
  std::complex<double> operator()(std::complex<double> t) const noexcept;

  RealPolynomial derivative() const;

  /// Drops leading coefficients with |c| <= rel_tol * max|coeff|.
  RealPolynomial trimmed(double rel_tol = 1e-12) const;

  friend RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator*(double c, const RealPolynomial& a);
  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

 private:
  void drop_trailing_zeros();

  std::vector<double> coeffs_;
};

struct PolynomialDivision {
  RealPolynomial quotient;
  RealPolynomial remainder;
};

/// Long division. Throws DomainError when the divisor is zero.
PolynomialDivision divide(const RealPolynomial& dividend, const RealPolynomial& divisor);

/// max_k |a_k - b_k| over the union of supports.
double max_coeff_diff(const RealPolynomial& a, const RealPolynomial& b);

/// One term  c * t^t_pow * alpha^alpha_pow * beta^beta_pow  with an exact
/// integer coefficient.
struct ParametricTerm {
  std::int64_t coeff = 0;
  int t_pow = 0;
  int alpha_pow = 0;
  int beta_pow = 0;
};

/// A polynomial F(t, alpha) whose coefficients are integer combinations of
/// monomials alpha^a beta^b, beta = 1 - alpha.
///
/// Keeping alpha and beta apart and the binomials exact means the only
/// rounding happens when a concrete alpha is substituted.
class ParametricPolynomial {
 public:
  ParametricPolynomial() = default;
  explicit ParametricPolynomial(std::vector<ParametricTerm> terms);

  const std::vector<ParametricTerm>& terms() const noexcept { return terms_; }
  int degree() const noexcept;

  /// F(., alpha) as a dense polynomial in t.
  RealPolynomial at(double alpha) const;

  /// dF/dalpha(., alpha) as a dense polynomial in t.
  RealPolynomial d_alpha(double alpha) const;

  std::complex<double> operator()(std::complex<double> t, double alpha) const;

  ParametricPolynomial operator-() const;
  friend ParametricPolynomial operator+(const ParametricPolynomial& a, const ParametricPolynomial& b);
  friend ParametricPolynomial operator-(const ParametricPolynomial& a, const ParametricPolynomial& b);

  /// Multiplies every term by t^k.
  ParametricPolynomial shifted(int k) const;

  /// (t^q - beta)^m, expanded with exact binomials.
  static ParametricPolynomial shifted_power(int q, int m);

  /// coeff * t^t_pow * alpha^alpha_pow * beta^beta_pow
  static ParametricPolynomial term(std::int64_t coeff, int t_pow, int alpha_pow = 0, int beta_pow = 0);

 private:
  std::vector<ParametricTerm> terms_;
};

/// Exact binomial coefficient; throws DomainError on int64 overflow.
std::int64_t binomial(int n, int k);

}  // namespace karp
