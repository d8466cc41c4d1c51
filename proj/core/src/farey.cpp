#include "karp/farey.hpp"

#include <charconv>
#include <numeric>

#include "karp/error.hpp"

namespace karp {

Fraction::Fraction(std::int64_t p, std::int64_t q) {
  if (q <= 0 || p < 0 || p > q) {
    throw DomainError("fraction " + std::to_string(p) + "/" + std::to_string(q) +
                      " is outside [0, 1] or has a nonpositive denominator");
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

std::string Fraction::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError("malformed fraction '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw DomainError("malformed fraction '" + std::string(text) + "' (expected p/q)");
  }
  return Fraction(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::int64_t euler_phi(std::int64_t k) {
  std::int64_t result = k;
  for (std::int64_t p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      result -= result / p;
    }
  }
  if (k > 1) result -= result / k;
  return result;
}

std::int64_t farey_length(int n) {
  std::int64_t total = 1;
  for (int k = 1; k <= n; ++k) total += euler_phi(k);
  return total;
}

std::vector<Fraction> farey_sequence(int n) {
  if (n < 1) throw InvalidOrderError("Farey order must be at least 1, got " + std::to_string(n));

  std::vector<Fraction> out;
  out.reserve(static_cast<std::size_t>(farey_length(n)));
  std::int64_t a = 0, b = 1, c = 1, d = n;
  out.emplace_back(a, b);
  while (true) {
    out.emplace_back(c, d);
    if (c == d) break;
    const std::int64_t k = (n + b) / d;
    const std::int64_t next_c = k * c - a;
    const std::int64_t next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
  }
  return out;
}

bool is_farey_pair(const Fraction& a, const Fraction& b, int n) {
  if (!(a < b)) throw OrderingError("Farey pair needs " + a.str() + " < " + b.str());
  if (a.q() > n || b.q() > n) {
    throw OutOfOrderError("denominators of " + a.str() + ", " + b.str() + " exceed order " +
                          std::to_string(n));
  }
  return a.q() * b.p() - a.p() * b.q() == 1 && a.q() + b.q() > n;
}

bool divisor_pair_check(int d, int n) {
  if (d <= 1 || d >= n) {
    throw DomainError("divisor check needs 1 < d < n, got d=" + std::to_string(d) +
                      ", n=" + std::to_string(n));
  }
  return is_farey_pair(Fraction(d, n), Fraction(d, n - 1), n);
}

}  // namespace karp
