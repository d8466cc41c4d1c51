#pragma once

// Boundary arcs of the region of eigenvalues of n-by-n stochastic matrices.
//
// Consecutive Farey fractions a < b of order n give an arc joining the unit
// circle points exp(2 pi i a) and exp(2 pi i b). Writing the endpoint with
// the smaller denominator as p/q and the other as r/s, the arc is the root
// locus, alpha in [0, 1], beta = 1 - alpha, of the Ito polynomial
//
//   t^s (t^q - beta)^m - alpha^m t^{q m},   m = floor(n / q).
//
// The Ito polynomial carries a spurious factor t^k; removing it gives the
// reduced polynomial, whose shape depends on the arc type:
//
//   Type 0   (q = 1)                (t - beta)^n - alpha^n
//   Type I   (m = 1)                t^s - beta t^{s-q} - alpha
//   Type II  (m > 1, s < q m)       (t^q - beta)^m - alpha^m t^{q m - s}
//   Type III (m > 1, s > q m)       t^{s - q m} (t^q - beta)^m - alpha^m

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "karp/farey.hpp"
#include "karp/polynomial.hpp"

namespace karp {

enum class ArcType { Type0, TypeI, TypeII, TypeIII };

/// "0", "I", "II" or "III".
std::string_view to_string(ArcType type) noexcept;

struct ArcDescriptor {
  int n = 0;
  Fraction lo;  ///< smaller endpoint fraction
  Fraction hi;  ///< larger endpoint fraction
  Fraction pq;  ///< endpoint with the smaller denominator (the alpha = 0 end)
  Fraction rs;  ///< endpoint with the larger denominator (the alpha = 1 end)
  int floor_nq = 0;
  ArcType type = ArcType::Type0;
  /// The arc lies in the closed lower half plane (lo >= 1/2). Traces are
  /// computed on mirror() and conjugated.
  bool conjugate = false;

  int q() const noexcept { return static_cast<int>(pq.q()); }
  int s() const noexcept { return static_cast<int>(rs.q()); }

  /// Dimension of the realizing matrix: n, s, q*floor(n/q) or s by type.
  int matrix_order() const noexcept;

  /// Exponent k with  Ito = t^k * reduced.
  int ito_reduction_power() const noexcept;

  /// "lo:hi", e.g. "2/7:1/3".
  std::string name() const;

  /// The arc reflected in the real axis: (1 - hi, 1 - lo) of the same order.
  ArcDescriptor mirror() const;

  friend bool operator==(const ArcDescriptor&, const ArcDescriptor&) = default;
};

/// Builds the descriptor of the arc joining a and b at order n; the
/// endpoints may be given in either order. Throws InvalidOrderError for
/// n < 2 and PreconditionError if the endpoints are not Farey neighbors.
ArcDescriptor make_arc(int n, const Fraction& a, const Fraction& b);

/// Parses "p/q:r/s" and calls make_arc.
ArcDescriptor parse_arc(int n, std::string_view text);

/// One descriptor per adjacent pair of farey_sequence(n), in circular order.
std::vector<ArcDescriptor> enumerate_arcs(int n);

/// Type from (n, q, s). Type 0 is tested first: with q = 1 the other rules
/// would route it into II/III.
ArcType classify_arc(const ArcDescriptor& desc) noexcept;

/// Ito polynomial as an exact family in (t, alpha).
ParametricPolynomial ito_family(const ArcDescriptor& desc);

/// Reduced Ito polynomial as an exact family in (t, alpha).
ParametricPolynomial reduced_ito_family(const ArcDescriptor& desc);

/// Ito polynomial at alpha. Throws ParameterError unless 0 <= alpha <= 1.
RealPolynomial ito_polynomial(const ArcDescriptor& desc, double alpha);

/// Reduced Ito polynomial at alpha. Throws ParameterError unless 0 <= alpha <= 1.
RealPolynomial reduced_ito_polynomial(const ArcDescriptor& desc, double alpha);

/// exp(2 pi i x), exact at multiples of 1/4.
std::complex<double> unit_root(const Fraction& x) noexcept;

/// (exp(2 pi i pq), exp(2 pi i rs)): the alpha = 0 and alpha = 1 ends.
std::pair<std::complex<double>, std::complex<double>> arc_endpoints(const ArcDescriptor& desc) noexcept;

void check_alpha(double alpha);

}  // namespace karp
