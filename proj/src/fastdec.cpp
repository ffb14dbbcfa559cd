#include "cornerlight/fastdec.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cornerlight/parallel.hpp"

namespace cornerlight::fastdec {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

double wrap_phase(double x) {
  double r = std::remainder(x, 2.0 * kPi);  // lands in [-pi, pi]
  if (r <= -kPi) r = kPi;
  return r;
}

double LogComplex::magnitude() const { return std::exp(logMagnitude); }

Complex LogComplex::value() const {
  if (logMagnitude == kNegInf) return Complex(0.0, 0.0);
  return std::polar(std::exp(logMagnitude), phase);
}

LogComplex log_from_value(Complex v) {
  const double m = std::abs(v);
  if (m == 0.0) return {kNegInf, 0.0};
  return {std::log(m), std::arg(v)};
}

Complex eval_base(Complex z) { return (1.0 + z) * (1.0 + z * z); }

LogComplex eval_reference(long n, Complex z) {
  if (n < 0) throw std::invalid_argument("power must be nonnegative");
  if (n == 0) return {0.0, 0.0};
  const Complex r = eval_base(z);
  const double m = std::abs(r);
  if (m == 0.0) return {kNegInf, 0.0};
  return {static_cast<double>(n) * std::log(m),
          wrap_phase(static_cast<double>(n) * std::arg(r))};
}

LogComplex eval_anchored(const AnchoredFastDec& fd, Complex z) {
  if (fd.degreeParam < 1) throw std::invalid_argument("degree parameter must be >= 1");
  if (!(fd.square.halfSide > 0.0)) throw std::invalid_argument("square half-side must be positive");
  const Complex w = std::polar(1.0, -fd.square.rotation) * (z - fd.square.anchor) /
                    (3.0 * fd.square.halfSide);
  return eval_reference(fd.degreeParam / 3, w);
}

LogComplex eval_bowtie(long n, Complex zeta, Complex z, double rotation, double halfSide) {
  const AnchoredFastDec fd{n, geometry::AnchoredSquare{zeta * zeta, rotation, halfSide}};
  return eval_anchored(fd, z * z);
}

BoundReport certify_bounds(long n, int gridDensity) {
  if (n < 1) throw std::invalid_argument("certify_bounds: n must be >= 1");
  if (gridDensity < 10) throw std::invalid_argument("certify_bounds: grid density must be >= 10");

  const auto grid_sup = [&](double xLo, double xHi, double yLo, double yHi) {
    std::vector<double> rowMax(gridDensity, 0.0);
    parallel_for(static_cast<std::size_t>(gridDensity), [&](std::size_t i) {
      const double x = xLo + (xHi - xLo) * static_cast<double>(i) / (gridDensity - 1.0);
      double best = 0.0;
      for (int j = 0; j < gridDensity; ++j) {
        const double y = yLo + (yHi - yLo) * static_cast<double>(j) / (gridDensity - 1.0);
        const double lm = eval_reference(n, Complex(x, y)).logMagnitude;
        best = std::max(best, lm);
      }
      rowMax[i] = best;
    });
    double lm = kNegInf;
    for (double v : rowMax) lm = std::max(lm, v);
    return std::exp(lm);
  };

  BoundReport report;
  report.n = n;
  report.supInner = grid_sup(-2.0 / 3.0, 0.0, -1.0 / 3.0, 1.0 / 3.0);
  const double t = 1.0 / static_cast<double>(n);
  report.supExtended = grid_sup(-2.0 / 3.0 - t, t, -1.0 / 3.0 - t, 1.0 / 3.0 + t);
  for (double eps : {0.25, 0.5, 1.0}) {
    const Complex probe(-eps / 3.0, 0.0);
    const double lm = eval_reference(n, probe).logMagnitude;
    report.probes.push_back({eps, -lm / static_cast<double>(n)});
  }
  return report;
}

void to_json(nlohmann::json& j, const DecayProbe& p) {
  j = nlohmann::json{{"epsilon", p.epsilon}, {"cHat", p.cHat}};
}

void to_json(nlohmann::json& j, const BoundReport& r) {
  j = nlohmann::json{
      {"n", r.n}, {"supInner", r.supInner}, {"supExtended", r.supExtended}, {"probes", r.probes}};
}

}  // namespace cornerlight::fastdec
