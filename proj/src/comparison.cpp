#include "tripoint/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "tripoint/rational.hpp"

namespace tripoint {

namespace {

void require_nonnegative(double t) {
  if (!(t >= 0) || !std::isfinite(t)) {
    throw std::domain_error("gauge argument must be finite and >= 0");
  }
}

}  // namespace

ComparisonFunction ComparisonFunction::linear(double lambda) {
  if (!(lambda >= 0.0) || lambda >= 1.0) {
    throw std::invalid_argument("linear gauge needs lambda in [0, 1)");
  }
  return ComparisonFunction(Rep{Linear{lambda}});
}

ComparisonFunction ComparisonFunction::log_half() {
  return ComparisonFunction(Rep{LogHalf{}});
}

ComparisonFunction ComparisonFunction::arctan_piecewise(double lambda1,
                                                        double lambda2) {
  if (!(lambda1 > 0.0) || !(lambda1 < lambda2) || lambda2 >= 1.0) {
    throw std::invalid_argument(
        "arctan gauge needs 0 < lambda1 < lambda2 < 1");
  }
  return ComparisonFunction(Rep{ArctanPiecewise{lambda1, lambda2}});
}

ComparisonFunction ComparisonFunction::tabulated(
    std::vector<std::array<double, 2>> rows) {
  if (rows.empty()) {
    throw std::invalid_argument("tabulated gauge needs at least one row");
  }
  double prev_t = -1;
  double prev_y = 0;
  for (const auto& [t, y] : rows) {
    if (!std::isfinite(t) || !std::isfinite(y)) {
      throw std::invalid_argument("tabulated gauge rows must be finite");
    }
    if (t < 0 || t <= prev_t) {
      throw std::invalid_argument(
          "tabulated abscissae must be nonnegative and strictly increasing");
    }
    if (y < prev_y) {
      throw std::invalid_argument("tabulated ordinates must be nondecreasing");
    }
    if (t == 0 ? y != 0 : y >= t) {
      throw std::invalid_argument(
          "tabulated ordinate must stay below its abscissa (0 at 0)");
    }
    prev_t = t;
    prev_y = y;
  }
  return ComparisonFunction(Rep{Tabulated{std::move(rows)}});
}

double ComparisonFunction::operator()(double t) const {
  require_nonnegative(t);
  return std::visit(
      [t](const auto& g) -> double {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Linear>) {
          return g.lambda * t;
        } else if constexpr (std::is_same_v<G, LogHalf>) {
          return 0.5 * std::log1p(t);
        } else if constexpr (std::is_same_v<G, ArctanPiecewise>) {
          // The seam belongs to the first branch; lambda1 < lambda2 makes
          // the graph jump upward there, never down.
          if (t <= 1.0 / g.lambda1) return std::atan(g.lambda1 * t);
          return std::atan(g.lambda2 * t);
        } else {
          // Carry each ordinate forward to the next abscissa; 0 below the
          // first row. With ordinate < abscissa per row this keeps the
          // value below t everywhere.
          double y = 0;
          for (const auto& row : g.rows) {
            if (row[0] > t) break;
            y = row[1];
          }
          return y;
        }
      },
      rep_);
}

double ComparisonFunction::iterate(std::size_t k, double t) const {
  require_nonnegative(t);
  double v = t;
  for (std::size_t i = 0; i < k; ++i) v = (*this)(v);
  return v;
}

ComparisonFunction::Tail ComparisonFunction::tail_sum(
    std::size_t from, double t, std::size_t horizon) const {
  if (!(t > 0) || !std::isfinite(t)) {
    throw std::domain_error("tail sum needs t > 0");
  }
  if (horizon == 0) {
    throw std::domain_error("tail sum needs horizon >= 1");
  }
  if (const auto* lin = std::get_if<Linear>(&rep_)) {
    double head = std::pow(lin->lambda, static_cast<double>(from)) * t;
    return Tail{head / (1.0 - lin->lambda), true};
  }
  double term = iterate(from, t);
  double sum = 0;
  for (std::size_t i = 0; i < horizon; ++i) {
    sum += term;
    if (i + 1 < horizon) term = (*this)(term);
  }
  return Tail{sum, term < 1e-15};
}

bool ComparisonFunction::is_linear() const {
  return std::holds_alternative<Linear>(rep_);
}

double ComparisonFunction::linear_coefficient() const {
  if (const auto* lin = std::get_if<Linear>(&rep_)) return lin->lambda;
  throw std::logic_error("gauge is not linear");
}

std::string ComparisonFunction::describe() const {
  return std::visit(
      [](const auto& g) -> std::string {
        using G = std::decay_t<decltype(g)>;
        std::ostringstream out;
        if constexpr (std::is_same_v<G, Linear>) {
          if (auto r = to_short_rational(g.lambda)) {
            out << "linear(" << r->str() << ")";
          } else {
            out << "linear(" << g.lambda << ")";
          }
        } else if constexpr (std::is_same_v<G, LogHalf>) {
          out << "log_half";
        } else if constexpr (std::is_same_v<G, ArctanPiecewise>) {
          out << "arctan_piecewise(" << g.lambda1 << ", " << g.lambda2 << ")";
        } else {
          out << "tabulated[" << g.rows.size() << " rows]";
        }
        return out.str();
      },
      rep_);
}

PhiCertificate certify(const ComparisonFunction& phi,
                       std::span<const double> samples, std::size_t depth) {
  if (samples.empty()) {
    throw std::domain_error("certification needs at least one sample");
  }
  if (depth == 0) {
    throw std::domain_error("certification needs depth >= 1");
  }
  std::vector<double> pts(samples.begin(), samples.end());
  for (double s : pts) {
    if (!(s > 0) || !std::isfinite(s)) {
      throw std::domain_error("certification samples must be positive");
    }
  }
  std::sort(pts.begin(), pts.end());

  PhiCertificate cert;
  cert.nondecreasing = true;
  for (std::size_t i = 0; i + 1 < pts.size() && cert.nondecreasing; ++i) {
    if (phi(pts[i]) > phi(pts[i + 1])) {
      cert.nondecreasing = false;
      cert.monotonicity_witness = {pts[i], pts[i + 1]};
    }
  }

  cert.strictly_below_identity = true;
  for (double s : pts) {
    if (!(phi(s) < s)) {
      cert.strictly_below_identity = false;
      cert.identity_witness = s;
      break;
    }
  }

  cert.iterates_vanish = true;
  for (double s : pts) {
    double v = s;
    bool monotone = true;
    for (std::size_t k = 0; k < depth; ++k) {
      double next = phi(v);
      if (next > v) monotone = false;
      v = next;
    }
    bool vanished = v < 1e-6 * s;
    bool trending = monotone && v < s;
    if (!vanished && !trending) {
      cert.iterates_vanish = false;
      cert.vanish_witness = s;
      break;
    }
  }
  return cert;
}

std::vector<double> log_spaced_samples(double lo, double hi,
                                       std::size_t count) {
  if (!(lo > 0) || !(hi > lo)) {
    throw std::domain_error("log spacing needs 0 < lo < hi");
  }
  if (count < 2) {
    throw std::domain_error("log spacing needs at least two samples");
  }
  std::vector<double> out;
  out.reserve(count);
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    double f = static_cast<double>(i) / static_cast<double>(count - 1);
    out.push_back(std::exp(llo + f * (lhi - llo)));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace tripoint
