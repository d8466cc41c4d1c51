#pragma once

// Polynomial roots and the local analysis of arcs: the basic family
// f_alpha(t) = t^n - beta t - alpha, its resultant with f_alpha', double-root
// witnesses and tangents dlambda/dalpha.

#include <complex>
#include <optional>
#include <vector>

#include "karp/arcs.hpp"
#include "karp/polynomial.hpp"

namespace karp {

struct RootSet {
  std::vector<std::complex<double>> roots;
  /// max |p(root)| over the returned roots.
  double residual_bound = 0.0;
};

/// All complex roots, with multiplicity. Exact zero roots are split off
/// first; the rest come from the balanced companion matrix and are polished
/// by Newton steps that are kept only when they reduce |p|.
/// Throws DomainError for zero or constant polynomials.
RootSet roots(const RealPolynomial& p);

/// Smallest pairwise distance between the roots of p (infinity for degree 1).
double min_root_separation(const RealPolynomial& p);

/// f_alpha(t) = t^n - beta t - alpha.
RealPolynomial basic_family(int n, double alpha);

/// n^n alpha^{n-1} + (n-1)^{n-1} (alpha - 1)^n, the resultant of f_alpha and
/// f_alpha' for odd n. Throws DomainError unless n is odd and n >= 5.
double resultant_pi(int n, double alpha);

/// The unique zero of resultant_pi(n, .) in (0, 1), by bisection.
/// Throws DomainError unless n is odd and n >= 5.
double find_pi_root(int n);

struct DoubleRoot {
  double lambda = 0.0;
  int multiplicity = 2;
};

/// The real double root -alpha n / (beta (n - 1)) of f_alpha, if f_alpha has
/// one at this alpha. Even n and alpha >= beta never have one.
/// Throws DomainError for n < 4 and ParameterError for alpha outside [0, 1].
std::optional<DoubleRoot> multiple_root_witness(int n, double alpha);

/// dlambda/dalpha = -F_alpha(lambda) / F_t(lambda) for the reduced Ito family
/// F of the arc. Throws ParameterError unless 0 < alpha < 1,
/// PreconditionError if |F(lambda)| > 1e-8 and MultipleRootError if
/// |F_t(lambda)| < 1e-10.
std::complex<double> arc_tangent(const ArcDescriptor& desc, double alpha, std::complex<double> lambda);

/// Type I arcs only: (g(r) - f(r)) / c_alpha'(r) for the pencil
/// c_alpha = alpha f + (1 - alpha) g, f = t^s - 1, g = t^s - t^{s-q}.
/// Throws DomainError for other types.
std::complex<double> pencil_tangent(const ArcDescriptor& desc, double alpha, std::complex<double> lambda);

/// One Newton step per iteration on p, kept only while |p| decreases.
std::complex<double> polish_root(const RealPolynomial& p, std::complex<double> z, int max_iter = 8);

}  // namespace karp
