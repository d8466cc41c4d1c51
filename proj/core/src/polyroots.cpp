#include "karp/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "karp/error.hpp"

namespace karp {

namespace {

// Parlett-Reinsch balancing by powers of two, in place.
void balance(Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

}  // namespace

std::complex<double> polish_root(const RealPolynomial& p, std::complex<double> z, int max_iter) {
  const RealPolynomial dp = p.derivative();
  double best = std::abs(p(z));
  for (int it = 0; it < max_iter && best > 0.0; ++it) {
    const std::complex<double> d = dp(z);
    if (d == 0.0) break;
    const std::complex<double> next = z - p(z) / d;
    const double r = std::abs(p(next));
    if (!(r < best)) break;
    best = r;
    z = next;
  }
  return z;
}

RootSet roots(const RealPolynomial& p) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  if (p.degree() < 1) throw DomainError("roots of a constant polynomial");

  RootSet out;
  std::size_t zeros = 0;
  while (p[zeros] == 0.0) ++zeros;
  out.roots.assign(zeros, 0.0);

  const auto& c = p.coeffs();
  const RealPolynomial rest(std::vector<double>(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end()));
  const Eigen::Index d = rest.degree();
  if (d >= 1) {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < d; ++i) comp(i, d - 1) = -rest[static_cast<std::size_t>(i)] / rest.leading();
    balance(comp);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
    if (solver.info() != Eigen::Success) throw Error("companion eigenvalue iteration did not converge");
    for (Eigen::Index i = 0; i < d; ++i) out.roots.push_back(polish_root(rest, solver.eigenvalues()(i)));
  }
  for (const auto& z : out.roots) out.residual_bound = std::max(out.residual_bound, std::abs(p(z)));
  return out;
}

double min_root_separation(const RealPolynomial& p) {
  const auto rs = roots(p).roots;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = i + 1; j < rs.size(); ++j) best = std::min(best, std::abs(rs[i] - rs[j]));
  return best;
}

RealPolynomial basic_family(int n, double alpha) {
  if (n < 2) throw DomainError("t^n - beta t - alpha needs n >= 2");
  check_alpha(alpha);
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[0] = -alpha;
  c[1] = -(1.0 - alpha);
  c[static_cast<std::size_t>(n)] = 1.0;
  return RealPolynomial(std::move(c));
}

namespace {

void require_odd_order(int n) {
  if (n < 5 || n % 2 == 0) {
    throw DomainError("the resultant closed form needs odd n >= 5, got " + std::to_string(n));
  }
}

}  // namespace

double resultant_pi(int n, double alpha) {
  require_odd_order(n);
  const double nn = static_cast<double>(n);
  return std::pow(nn, nn) * std::pow(alpha, nn - 1.0) + std::pow(nn - 1.0, nn - 1.0) * std::pow(alpha - 1.0, nn);
}

double find_pi_root(int n) {
  require_odd_order(n);
  // pi(0) < 0 < pi(1) and pi' > 0 on (0, inf): exactly one sign change
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (resultant_pi(n, mid) < 0.0 ? lo : hi) = mid;
  }
  return std::abs(resultant_pi(n, lo)) <= std::abs(resultant_pi(n, hi)) ? lo : hi;
}

std::optional<DoubleRoot> multiple_root_witness(int n, double alpha) {
  if (n < 4) throw DomainError("multiple-root analysis needs n >= 4, got " + std::to_string(n));
  check_alpha(alpha);
  const double beta = 1.0 - alpha;
  if (n % 2 == 0 || alpha >= beta) return std::nullopt;

  const double lambda = -alpha * n / (beta * (n - 1));
  const double f = std::pow(lambda, n) - beta * lambda - alpha;
  const double df = n * std::pow(lambda, n - 1) - beta;
  const double ddf = static_cast<double>(n) * (n - 1) * std::pow(lambda, n - 2);
  if (std::abs(f) <= 1e-9 && std::abs(df) <= 1e-9 && ddf != 0.0) return DoubleRoot{lambda, 2};
  return std::nullopt;
}

std::complex<double> arc_tangent(const ArcDescriptor& desc, double alpha, std::complex<double> lambda) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParameterError("tangent needs 0 < alpha < 1, got " + std::to_string(alpha));
  }
  const auto family = reduced_ito_family(desc);
  const RealPolynomial f = family.at(alpha);
  if (std::abs(f(lambda)) > 1e-8) throw PreconditionError("lambda is not a root of the reduced Ito polynomial");
  const std::complex<double> ft = f.derivative()(lambda);
  if (std::abs(ft) < 1e-10) {
    throw MultipleRootError("multiple root at alpha = " + std::to_string(alpha) + ": the arc has no tangent there");
  }
  return -family.d_alpha(alpha)(lambda) / ft;
}

std::complex<double> pencil_tangent(const ArcDescriptor& desc, double alpha, std::complex<double> lambda) {
  if (desc.type != ArcType::TypeI) throw DomainError("the pencil formula applies to Type I arcs only");
  check_alpha(alpha);
  const int s = desc.s(), q = desc.q();
  const auto ts = std::pow(lambda, s);
  const std::complex<double> f = ts - 1.0;
  const std::complex<double> g = ts - std::pow(lambda, s - q);
  const std::complex<double> dc =
      static_cast<double>(s) * std::pow(lambda, s - 1) -
      (1.0 - alpha) * static_cast<double>(s - q) * (s - q >= 1 ? std::pow(lambda, s - q - 1) : 0.0);
  return (g - f) / dc;
}

}  // namespace karp
