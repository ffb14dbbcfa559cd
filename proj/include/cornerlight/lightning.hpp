#pragma once

#include <functional>
#include <vector>

#include <nlohmann/json.hpp>

#include "cornerlight/fastdec.hpp"
#include "cornerlight/geometry.hpp"

namespace cornerlight::lightning {

// Poles beta_j = -exp(-sigma j / sqrt(n)) clustered toward the origin along
// the negative axis, interpolation nodes alpha_0 = 0, alpha_j = -beta_j, and
// the contour-split radius epsilon = exp(-sigma (n-1)/sqrt(n)) = |beta_{n-1}|.
struct LightningScheme {
  long n = 0;
  double sigma = 0.0;
  std::vector<double> poles;  // beta_j, in (-1, 0) united with {-1}
  std::vector<double> nodes;  // alpha_j >= 0
  double epsilonSplit = 0.0;
};

LightningScheme build_scheme(long n, double sigma);

// Node function phi(z) = prod (z - alpha_j) / prod (z - beta_j), log space.
// Exact zero at every node; throws when z hits a pole.
fastdec::LogComplex eval_phi(const LightningScheme& scheme, Complex z);

// Target on the slit disc: values up to the boundary (upper-side limits on
// the slit), the jump f+(t) - f-(t) across the slit, and the growth exponent
// delta with f(z) = O(|z|^delta) at the corner.
struct SlitFunction {
  std::function<Complex(Complex)> boundaryValue;
  std::function<Complex(double)> jump;
  double holderExponent = 0.0;
};

// Composite Gauss-Legendre rule over [-1, -cutoff] with panels
// [-e^{-k}, -e^{-(k+1)}] shrinking geometrically into the corner.
struct QuadratureRule {
  struct Panel {
    double lo = 0.0;
    double hi = 0.0;
  };
  std::vector<Panel> panels;
  int nodesPerPanel = 0;
  std::vector<double> nodes;    // ascending within each panel
  std::vector<double> weights;  // positive
};

QuadratureRule slit_quadrature(double minScale, int nodesPerPanel);

// Modified Cauchy kernel
//   q(zeta, z) = (1/phi(zeta)) (phi(zeta) - phi(z))/(zeta - z)
//              + (phi(z)/phi(zeta)) (1 - R(zeta, z))/(zeta - z),
// a rational function of order at most 2n in z. R is the anchored
// fast-decreasing factor of degree parameter fastdecDegree on `square`
// (anchored at zeta). At a pole of phi the whole phi(z)/phi(zeta) ratio
// vanishes and q collapses to the plain Cauchy kernel.
Complex eval_kernel_q(const LightningScheme& scheme, long fastdecDegree,
                      const geometry::AnchoredSquare& square, Complex zeta, Complex z);

// Taylor coefficients c_0..c_degree of the Cauchy integral over the circular
// part of the slit-disc boundary; the truncated sum approximates that
// integral on the closed sector with geometric rate in the degree.
std::vector<Complex> circular_part(const SlitFunction& target,
                                   const geometry::SectorDomain& domain, int degree);

// Slit-part quadrature data plus circular-part polynomial coefficients.
class RationalApproximant {
 public:
  RationalApproximant(LightningScheme scheme, QuadratureRule quadrature,
                      geometry::SectorDomain domain, SlitFunction target,
                      double squareHalfSide, long degreeBudget,
                      std::vector<Complex> slitCoefficients,
                      std::vector<fastdec::LogComplex> phiAtNodes,
                      std::vector<geometry::AnchoredSquare> squares,
                      std::vector<Complex> circularCoeffs);

  const LightningScheme& scheme() const { return scheme_; }
  const QuadratureRule& quadrature() const { return quadrature_; }
  const geometry::SectorDomain& domain() const { return domain_; }
  const SlitFunction& target() const { return target_; }
  const std::vector<Complex>& circularCoeffs() const { return circularCoeffs_; }
  double squareHalfSide() const { return squareHalfSide_; }

  long degreeBudget() const { return degreeBudget_; }
  long slitOrder() const { return 2 * scheme_.n; }
  long circularDegree() const { return static_cast<long>(circularCoeffs_.size()) - 1; }

  // Slit-part sum alone (the discretized jump integral against q).
  Complex slit_part(Complex z) const;
  // Same sum restricted to quadrature nodes with |zeta| < radius.
  Complex slit_part_below(Complex z, double radius) const;

  friend Complex evaluate(const RationalApproximant& approx, Complex z);

 private:
  LightningScheme scheme_;
  QuadratureRule quadrature_;
  geometry::SectorDomain domain_;
  SlitFunction target_;
  double squareHalfSide_;
  long degreeBudget_;
  std::vector<Complex> slitCoefficients_;  // w_i jump(t_i) / (2 pi i)
  std::vector<fastdec::LogComplex> phiAtNodes_;
  std::vector<geometry::AnchoredSquare> squares_;
  std::vector<Complex> circularCoeffs_;
};

// Full construction: scheme of size n/2, kernel q_{n/2} with the
// fast-decreasing factor anchored at each quadrature node against the domain
// with half-side 2(1+rho), circular part of degree n.
RationalApproximant build_approximant(const SlitFunction& target,
                                      const geometry::SectorDomain& domain, long n,
                                      double sigma);

// Pointwise evaluation; deterministic, throws at the poles.
Complex evaluate(const RationalApproximant& approx, Complex z);

// Scheme and degree metadata (n, sigma, poles, epsilon, slit order, circular degree).
nlohmann::json metadata(const RationalApproximant& approx);

}  // namespace cornerlight::lightning
