#include "karp/arcs.hpp"

#include <cmath>
#include <numbers>

#include "karp/error.hpp"

namespace karp {

std::string_view to_string(ArcType type) noexcept {
  switch (type) {
    case ArcType::Type0: return "0";
    case ArcType::TypeI: return "I";
    case ArcType::TypeII: return "II";
    case ArcType::TypeIII: return "III";
  }
  return "?";
}

int ArcDescriptor::matrix_order() const noexcept {
  switch (type) {
    case ArcType::Type0: return n;
    case ArcType::TypeII: return q() * floor_nq;
    case ArcType::TypeI:
    case ArcType::TypeIII: return s();
  }
  return 0;
}

int ArcDescriptor::ito_reduction_power() const noexcept {
  switch (type) {
    case ArcType::Type0: return n;
    case ArcType::TypeI: return q();
    case ArcType::TypeII: return s();
    case ArcType::TypeIII: return q() * floor_nq;
  }
  return 0;
}

std::string ArcDescriptor::name() const { return lo.str() + ":" + hi.str(); }

ArcDescriptor ArcDescriptor::mirror() const {
  return make_arc(n, Fraction(hi.q() - hi.p(), hi.q()), Fraction(lo.q() - lo.p(), lo.q()));
}

ArcType classify_arc(const ArcDescriptor& desc) noexcept {
  const int q = desc.q();
  if (q == 1) return ArcType::Type0;
  const int m = desc.n / q;
  if (m == 1) return ArcType::TypeI;
  // s == q m is impossible because gcd(q, s) = 1 and q > 1
  return desc.s() < q * m ? ArcType::TypeII : ArcType::TypeIII;
}

ArcDescriptor make_arc(int n, const Fraction& a, const Fraction& b) {
  if (n < 2) throw InvalidOrderError("arcs need order n >= 2, got " + std::to_string(n));
  ArcDescriptor d;
  d.n = n;
  d.lo = a < b ? a : b;
  d.hi = a < b ? b : a;
  if (d.lo == d.hi || d.lo.q() > n || d.hi.q() > n || !is_farey_pair(d.lo, d.hi, n)) {
    throw PreconditionError(d.lo.str() + ", " + d.hi.str() + " are not Farey neighbors of order " +
                            std::to_string(n));
  }
  const bool lo_small = d.lo.q() < d.hi.q();
  d.pq = lo_small ? d.lo : d.hi;
  d.rs = lo_small ? d.hi : d.lo;
  d.floor_nq = n / d.q();
  d.type = classify_arc(d);
  d.conjugate = d.lo >= Fraction(1, 2);
  return d;
}

ArcDescriptor parse_arc(int n, std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("malformed arc '" + std::string(text) + "' (expected p/q:r/s)");
  }
  return make_arc(n, Fraction::parse(text.substr(0, colon)), Fraction::parse(text.substr(colon + 1)));
}

std::vector<ArcDescriptor> enumerate_arcs(int n) {
  if (n < 2) throw InvalidOrderError("arcs need order n >= 2, got " + std::to_string(n));
  const auto seq = farey_sequence(n);
  std::vector<ArcDescriptor> arcs;
  arcs.reserve(seq.size() - 1);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) arcs.push_back(make_arc(n, seq[i], seq[i + 1]));
  return arcs;
}

ParametricPolynomial ito_family(const ArcDescriptor& desc) {
  const int q = desc.q(), s = desc.s(), m = desc.floor_nq;
  return ParametricPolynomial::shifted_power(q, m).shifted(s) - ParametricPolynomial::term(1, q * m, m, 0);
}

ParametricPolynomial reduced_ito_family(const ArcDescriptor& desc) {
  const int q = desc.q(), s = desc.s(), m = desc.floor_nq, n = desc.n;
  using P = ParametricPolynomial;
  switch (desc.type) {
    case ArcType::Type0:
      return P::shifted_power(1, n) - P::term(1, 0, n, 0);
    case ArcType::TypeI:
      return P::term(1, s) - P::term(1, s - q, 0, 1) - P::term(1, 0, 1, 0);
    case ArcType::TypeII:
      return P::shifted_power(q, m) - P::term(1, q * m - s, m, 0);
    case ArcType::TypeIII:
      return P::shifted_power(q, m).shifted(s - q * m) - P::term(1, 0, m, 0);
  }
  return {};
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ParameterError("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

RealPolynomial ito_polynomial(const ArcDescriptor& desc, double alpha) {
  check_alpha(alpha);
  return ito_family(desc).at(alpha);
}

RealPolynomial reduced_ito_polynomial(const ArcDescriptor& desc, double alpha) {
  check_alpha(alpha);
  return reduced_ito_family(desc).at(alpha);
}

std::complex<double> unit_root(const Fraction& x) noexcept {
  // split the angle into a whole number of quarter turns plus a remainder
  const std::int64_t q = x.q();
  const std::int64_t r = x.p() % q;
  const std::int64_t quarter = (4 * r) / q;
  const std::int64_t rest = 4 * r - quarter * q;
  const double theta = std::numbers::pi / 2.0 * static_cast<double>(rest) / static_cast<double>(q);
  const double c = rest == 0 ? 1.0 : std::cos(theta);
  const double s = rest == 0 ? 0.0 : std::sin(theta);
  switch (quarter) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

std::pair<std::complex<double>, std::complex<double>> arc_endpoints(const ArcDescriptor& desc) noexcept {
  return {unit_root(desc.pq), unit_root(desc.rs)};
}

}  // namespace karp
