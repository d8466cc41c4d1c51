#pragma once

// Farey fractions of order n and the neighbor relation between them.
//
// Everything in this header is exact integer arithmetic.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace karp {

/// A reduced fraction p/q with 0 <= p <= q and q > 0.
///
/// Zero is 0/1 and one is 1/1. Equality is structural, which coincides with
/// equality of value because the canonical form is unique. Ordering is by
/// value.
class Fraction {
 public:
  constexpr Fraction() = default;

  /// Reduces p/q. Throws DomainError unless 0 <= p <= q and q > 0.
  Fraction(std::int64_t p, std::int64_t q);

  constexpr std::int64_t p() const noexcept { return p_; }
  constexpr std::int64_t q() const noexcept { return q_; }

  double value() const noexcept { return static_cast<double>(p_) / static_cast<double>(q_); }

  /// "p/q"
  std::string str() const;

  /// Parses "p/q" (whitespace tolerated around the slash). Throws DomainError.
  static Fraction parse(std::string_view text);

  friend constexpr bool operator==(const Fraction&, const Fraction&) = default;
  friend constexpr std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return a.p_ * b.q_ <=> b.p_ * a.q_;
  }

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

std::int64_t euler_phi(std::int64_t k);

/// 1 + phi(1) + ... + phi(n), the length of farey_sequence(n).
std::int64_t farey_length(int n);

/// All reduced p/q with 0 <= p < q <= n in increasing order, followed by the
/// closing fraction 1/1. Generated by the neighbor recurrence
///   (a/b, c/d) -> (c/d, (k c - a)/(k d - b)),  k = floor((n + b) / d).
/// Throws InvalidOrderError for n < 1.
std::vector<Fraction> farey_sequence(int n);

/// True iff (a, b) is a Farey pair of order n, i.e. q r - p s = 1 and
/// q + s > n for a = p/q, b = r/s.
///
/// Throws OrderingError if a >= b and OutOfOrderError if either denominator
/// exceeds n.
bool is_farey_pair(const Fraction& a, const Fraction& b, int n);

/// True iff (d/n, d/(n-1)), both reduced, is a Farey pair of order n.
/// Equivalent to d | n or d | n-1. Throws DomainError unless 1 < d < n.
bool divisor_pair_check(int d, int n);

}  // namespace karp
