#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tripoint {

// Gauge function for contraction bounds: nondecreasing on [0, inf) with
// summable iterates, which forces phi(t) < t for t > 0. Four families:
//
//   linear(lambda)            lambda * t, lambda in [0, 1)
//   log_half()                log(1 + t) / 2
//   arctan_piecewise(l1, l2)  atan(l1 * t) for t <= 1/l1, atan(l2 * t)
//                             beyond; 0 < l1 < l2 < 1, so the graph jumps
//                             upward at the seam and stays nondecreasing
//   tabulated(rows)           step function through sample rows
//
// Construction rejects parameters outside the family's range, so a built
// object is always a member of the class.
class ComparisonFunction {
 public:
  static ComparisonFunction linear(double lambda);
  static ComparisonFunction log_half();
  static ComparisonFunction arctan_piecewise(double lambda1, double lambda2);
  // Rows are (abscissa, ordinate) pairs with strictly increasing abscissae,
  // nondecreasing ordinates, and ordinate < abscissa wherever the abscissa
  // is positive (equal to it only at 0). Evaluation carries each ordinate
  // forward until the next abscissa; below the first row the value is 0.
  static ComparisonFunction tabulated(std::vector<std::array<double, 2>> rows);

  // Evaluation at t >= 0 (std::domain_error otherwise).
  double operator()(double t) const;

  // k-fold application, iterate(0, t) == t.
  double iterate(std::size_t k, double t) const;

  struct Tail {
    double sum = 0;        // sum of iterate(m, t) for m = from .. from+horizon-1
    bool converged = false;
  };
  // Tail of the iterate series starting at `from`, t > 0, horizon >= 1.
  // The linear family replaces the partial sum with its closed form
  // lambda^from * t / (1 - lambda) and is always converged; the others are
  // converged when the last summand drops below 1e-15.
  Tail tail_sum(std::size_t from, double t, std::size_t horizon = 64) const;

  bool is_linear() const;
  // Slope of a linear gauge; std::logic_error for the other families.
  double linear_coefficient() const;

  // Short display form, e.g. "linear(23/25)" or "log_half".
  std::string describe() const;

 private:
  struct Linear {
    double lambda;
  };
  struct LogHalf {};
  struct ArctanPiecewise {
    double lambda1;
    double lambda2;
  };
  struct Tabulated {
    std::vector<std::array<double, 2>> rows;
  };
  using Rep = std::variant<Linear, LogHalf, ArctanPiecewise, Tabulated>;

  explicit ComparisonFunction(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

// Sample-based membership check. All three flags must hold for the gauge
// to certify; each failure records its first witness.
struct PhiCertificate {
  bool nondecreasing = false;
  bool strictly_below_identity = false;
  bool iterates_vanish = false;

  std::optional<std::array<double, 2>> monotonicity_witness;  // phi(s) > phi(s')
  std::optional<double> identity_witness;                     // phi(s) >= s
  std::optional<double> vanish_witness;                       // iterates stall at s

  bool ok() const {
    return nondecreasing && strictly_below_identity && iterates_vanish;
  }
};

// Checks the class conditions at the given positive sample points:
// monotonicity across every sample pair, phi(s) < s at every sample, and
// vanishing iterates (below 1e-6 * s after `depth` steps, or failing that a
// strictly decreasing trend over the whole depth). The verdict is only as
// fine as the sample set.
PhiCertificate certify(const ComparisonFunction& phi,
                       std::span<const double> samples,
                       std::size_t depth = 64);

// count samples multiplicatively spaced over [lo, hi], endpoints included.
std::vector<double> log_spaced_samples(double lo, double hi,
                                       std::size_t count);

}  // namespace tripoint
