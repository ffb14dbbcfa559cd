#include "cornerlight/lightning.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gauss_legendre.hpp"

namespace cornerlight::lightning {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPosInf = std::numeric_limits<double>::infinity();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kDiagonalGuard = 1e-14;
constexpr double kQuadratureCutoff = 1e-16;
constexpr int kNodesPerPanel = 16;

// Log-space phi without the pole check: a pole hit yields logMagnitude +inf,
// a node hit -inf. Phase is wrapped once at the end.
fastdec::LogComplex phi_log(const LightningScheme& scheme, Complex z) {
  double logMag = 0.0;
  double phase = 0.0;
  for (long j = 0; j < scheme.n; ++j) {
    const Complex num = z - Complex(scheme.nodes[j], 0.0);
    const Complex den = z - Complex(scheme.poles[j], 0.0);
    const double an = std::abs(num);
    const double ad = std::abs(den);
    if (an == 0.0) return {kNegInf, 0.0};
    if (ad == 0.0) return {kPosInf, 0.0};
    logMag += std::log(an) - std::log(ad);
    phase += std::arg(num) - std::arg(den);
  }
  return {logMag, fastdec::wrap_phase(phase)};
}

Complex ratio_from_logs(const fastdec::LogComplex& numerator,
                        const fastdec::LogComplex& denominator) {
  if (numerator.logMagnitude == kNegInf || denominator.logMagnitude == kPosInf) {
    return Complex(0.0, 0.0);
  }
  return fastdec::LogComplex{numerator.logMagnitude - denominator.logMagnitude,
                             fastdec::wrap_phase(numerator.phase - denominator.phase)}
      .value();
}

Complex kernel_value(const fastdec::LogComplex& phiZ, const fastdec::LogComplex& phiZeta,
                     const fastdec::LogComplex& fastdecLog, Complex zeta, Complex z) {
  // Combined form of the two-term kernel: (1 - (phi(z)/phi(zeta)) R(zeta,z)) / (zeta - z).
  const Complex ratio = ratio_from_logs(phiZ, phiZeta);
  return (1.0 - ratio * fastdecLog.value()) / (zeta - z);
}

}  // namespace

LightningScheme build_scheme(long n, double sigma) {
  if (n < 1) throw std::invalid_argument("scheme size must be >= 1");
  if (!(sigma > 0.0)) throw std::invalid_argument("clustering constant sigma must be positive");
  LightningScheme s;
  s.n = n;
  s.sigma = sigma;
  s.poles.resize(n);
  s.nodes.resize(n);
  const double sqrtN = std::sqrt(static_cast<double>(n));
  for (long j = 0; j < n; ++j) {
    s.poles[j] = -std::exp(-sigma * static_cast<double>(j) / sqrtN);
    s.nodes[j] = j == 0 ? 0.0 : -s.poles[j];
  }
  s.epsilonSplit = -s.poles[n - 1];  // = exp(-sigma (n-1)/sqrt(n)) exactly
  return s;
}

fastdec::LogComplex eval_phi(const LightningScheme& scheme, Complex z) {
  if (scheme.n < 1) throw std::invalid_argument("empty scheme");
  for (double b : scheme.poles) {
    if (z == Complex(b, 0.0)) throw std::domain_error("evaluation at pole");
  }
  return phi_log(scheme, z);
}

QuadratureRule slit_quadrature(double minScale, int nodesPerPanel) {
  if (!(minScale > 0.0) || !(minScale < 1.0)) {
    throw std::invalid_argument("minScale must lie in (0, 1)");
  }
  if (nodesPerPanel < 4) throw std::invalid_argument("need at least 4 nodes per panel");

  const int panelCount = static_cast<int>(std::ceil(-std::log(minScale)));
  std::vector<double> gx, gw;
  detail::gauss_legendre(nodesPerPanel, gx, gw);

  QuadratureRule rule;
  rule.nodesPerPanel = nodesPerPanel;
  rule.panels.reserve(panelCount);
  rule.nodes.reserve(static_cast<std::size_t>(panelCount) * nodesPerPanel);
  rule.weights.reserve(static_cast<std::size_t>(panelCount) * nodesPerPanel);
  for (int k = 0; k < panelCount; ++k) {
    const double lo = -std::exp(-static_cast<double>(k));
    const double hi = -std::exp(-static_cast<double>(k + 1));
    rule.panels.push_back({lo, hi});
    const double mid = (lo + hi) / 2.0;
    const double half = (hi - lo) / 2.0;
    for (int i = 0; i < nodesPerPanel; ++i) {
      rule.nodes.push_back(mid + half * gx[i]);
      rule.weights.push_back(half * gw[i]);
    }
  }
  return rule;
}

Complex eval_kernel_q(const LightningScheme& scheme, long fastdecDegree,
                      const geometry::AnchoredSquare& square, Complex zeta, Complex z) {
  if (std::abs(zeta - z) < kDiagonalGuard) {
    throw std::domain_error("kernel evaluated on diagonal");
  }
  for (double b : scheme.poles) {
    if (z == Complex(b, 0.0)) throw std::domain_error("evaluation at pole");
  }
  const fastdec::LogComplex phiZeta = phi_log(scheme, zeta);
  const fastdec::LogComplex phiZ = phi_log(scheme, z);
  // fastdecDegree == 0 means no fast-decreasing factor (R identically 1).
  const fastdec::LogComplex fd =
      fastdecDegree == 0 ? fastdec::LogComplex{0.0, 0.0}
                         : fastdec::eval_anchored({fastdecDegree, square}, z);
  return kernel_value(phiZ, phiZeta, fd, zeta, z);
}

std::vector<Complex> circular_part(const SlitFunction& target,
                                   const geometry::SectorDomain& domain, int degree) {
  if (degree < 0) throw std::invalid_argument("circular degree must be >= 0");
  (void)domain;  // degree controls the geometric tail on the closed sector

  // Composite Gauss-Legendre in the angle; enough panels to resolve the
  // oscillation of e^{-i degree theta}.
  const int panels = std::max(8, degree / 3 + 4);
  const int perPanel = 20;
  std::vector<double> gx, gw;
  detail::gauss_legendre(perPanel, gx, gw);

  std::vector<Complex> coeffs(degree + 1, Complex(0.0, 0.0));
  for (int p = 0; p < panels; ++p) {
    const double lo = -kPi + 2.0 * kPi * static_cast<double>(p) / panels;
    const double hi = -kPi + 2.0 * kPi * static_cast<double>(p + 1) / panels;
    const double mid = (lo + hi) / 2.0;
    const double half = (hi - lo) / 2.0;
    for (int i = 0; i < perPanel; ++i) {
      const double theta = mid + half * gx[i];
      const double w = half * gw[i];
      const Complex value = target.boundaryValue(std::polar(1.0, theta));
      const Complex down = std::polar(1.0, -theta);
      Complex harmonic(1.0, 0.0);  // e^{-i k theta}
      for (int k = 0; k <= degree; ++k) {
        coeffs[k] += w * value * harmonic / (2.0 * kPi);
        harmonic *= down;
      }
    }
  }
  return coeffs;
}

RationalApproximant::RationalApproximant(
    LightningScheme scheme, QuadratureRule quadrature, geometry::SectorDomain domain,
    SlitFunction target, double squareHalfSide, long degreeBudget,
    std::vector<Complex> slitCoefficients, std::vector<fastdec::LogComplex> phiAtNodes,
    std::vector<geometry::AnchoredSquare> squares, std::vector<Complex> circularCoeffs)
    : scheme_(std::move(scheme)),
      quadrature_(std::move(quadrature)),
      domain_(domain),
      target_(std::move(target)),
      squareHalfSide_(squareHalfSide),
      degreeBudget_(degreeBudget),
      slitCoefficients_(std::move(slitCoefficients)),
      phiAtNodes_(std::move(phiAtNodes)),
      squares_(std::move(squares)),
      circularCoeffs_(std::move(circularCoeffs)) {}

Complex RationalApproximant::slit_part(Complex z) const {
  return slit_part_below(z, std::numeric_limits<double>::infinity());
}

Complex RationalApproximant::slit_part_below(Complex z, double radius) const {
  const fastdec::LogComplex phiZ = phi_log(scheme_, z);
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < quadrature_.nodes.size(); ++i) {
    const double t = quadrature_.nodes[i];
    if (!(-t < radius)) continue;
    const fastdec::LogComplex fd = fastdec::eval_anchored({scheme_.n, squares_[i]}, z);
    sum += slitCoefficients_[i] * kernel_value(phiZ, phiAtNodes_[i], fd, Complex(t, 0.0), z);
  }
  return sum;
}

RationalApproximant build_approximant(const SlitFunction& target,
                                      const geometry::SectorDomain& domain, long n,
                                      double sigma) {
  if (n < 2) throw std::invalid_argument("degree budget must be >= 2");
  if (!target.boundaryValue || !target.jump) {
    throw std::invalid_argument("target needs boundary and jump evaluators");
  }

  const long m = n / 2;
  LightningScheme scheme = build_scheme(m, sigma);
  QuadratureRule rule = slit_quadrature(kQuadratureCutoff, kNodesPerPanel);
  const double lambda = 2.0 * (1.0 + domain.rho());

  const std::size_t count = rule.nodes.size();
  std::vector<Complex> coeffs(count);
  std::vector<fastdec::LogComplex> phiNodes(count);
  std::vector<geometry::AnchoredSquare> squares(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = rule.nodes[i];
    squares[i] = geometry::anchor_square(domain, Complex(t, 0.0), lambda);
    phiNodes[i] = phi_log(scheme, Complex(t, 0.0));
    coeffs[i] = rule.weights[i] * target.jump(t) / Complex(0.0, 2.0 * kPi);
  }
  std::vector<Complex> circ = circular_part(target, domain, static_cast<int>(n));

  return RationalApproximant(std::move(scheme), std::move(rule), domain, target, lambda, n,
                             std::move(coeffs), std::move(phiNodes), std::move(squares),
                             std::move(circ));
}

Complex evaluate(const RationalApproximant& approx, Complex z) {
  for (double b : approx.scheme_.poles) {
    if (z == Complex(b, 0.0)) throw std::domain_error("evaluation at pole");
  }
  Complex value = approx.slit_part(z);
  const auto& c = approx.circularCoeffs_;
  Complex poly(0.0, 0.0);
  for (std::size_t k = c.size(); k-- > 0;) poly = poly * z + c[k];
  return value + poly;
}

nlohmann::json metadata(const RationalApproximant& approx) {
  return nlohmann::json{{"n", approx.degreeBudget()},
                        {"sigma", approx.scheme().sigma},
                        {"schemeSize", approx.scheme().n},
                        {"poles", approx.scheme().poles},
                        {"epsilonSplit", approx.scheme().epsilonSplit},
                        {"slitOrder", approx.slitOrder()},
                        {"circularDegree", approx.circularDegree()},
                        {"squareHalfSide", approx.squareHalfSide()},
                        {"quadratureNodes", approx.quadrature().nodes.size()}};
}

}  // namespace cornerlight::lightning
