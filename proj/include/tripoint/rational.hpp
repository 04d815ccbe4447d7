#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace tripoint {

// Exact fraction p/q with q > 0, used when entering values and when echoing
// them in reports. Doubles are the working representation everywhere else.
struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const;
  std::string str() const;
};

// Parses "p/q" with integer p, q and q != 0. Anything else yields nullopt.
std::optional<Rational> parse_rational(std::string_view text);

// Recovers a short fraction (den <= max_den) whose double quotient equals x
// bit for bit, via continued-fraction convergents. Values without a short
// exact form (square roots, accumulated sums) yield nullopt.
std::optional<Rational> to_short_rational(double x, long long max_den = 10000);

}  // namespace tripoint
