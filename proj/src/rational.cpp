#include "tripoint/rational.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace tripoint {

double Rational::value() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::optional<long long> parse_ll(std::string_view text) {
  long long out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return out;
}

Rational reduced(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos || slash == 0 ||
      slash + 1 == text.size()) {
    return std::nullopt;
  }
  auto num = parse_ll(text.substr(0, slash));
  auto den = parse_ll(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return reduced(*num, *den);
}

std::optional<Rational> to_short_rational(double x, long long max_den) {
  if (!std::isfinite(x) || max_den < 1) return std::nullopt;
  const bool neg = x < 0;
  double r = neg ? -x : x;
  if (r > 9e15) return std::nullopt;

  // Continued-fraction convergents p/q of r; accept the first whose double
  // quotient reproduces x exactly.
  long long p_prev = 0, q_prev = 1;
  long long p = 1, q = 0;
  double rem = r;
  constexpr long long kMax = std::numeric_limits<long long>::max();
  for (int step = 0; step < 64; ++step) {
    double fa = std::floor(rem);
    if (fa > 9e15) return std::nullopt;
    long long a = static_cast<long long>(fa);
    if ((p != 0 && a > (kMax - p_prev) / p) ||
        (q != 0 && a > (kMax - q_prev) / q)) {
      return std::nullopt;
    }
    long long p_next = a * p + p_prev;
    long long q_next = a * q + q_prev;
    if (q_next > max_den) return std::nullopt;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    double approx = static_cast<double>(p) / static_cast<double>(q);
    if (approx == r) {
      return Rational{neg ? -p : p, q};
    }
    double frac = rem - fa;
    if (frac <= 0) return std::nullopt;
    rem = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace tripoint
