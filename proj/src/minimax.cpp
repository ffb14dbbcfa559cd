#include "cornerlight/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace cornerlight::minimax {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// Vandermonde-with-Arnoldi basis: columns orthonormal in the discrete
// (1/N) sum inner product over the samples. Column k+1 is x * q_k
// re-orthogonalized; the recurrence coefficients allow evaluation elsewhere.
void arnoldi(const std::vector<Complex>& pts, int degree, MatrixXcd& Q,
             std::vector<std::vector<Complex>>& H) {
  const int N = static_cast<int>(pts.size());
  Q = MatrixXcd::Zero(N, degree + 1);
  Q.col(0).setOnes();
  H.assign(degree, {});
  VectorXcd x(N);
  for (int i = 0; i < N; ++i) x(i) = pts[i];
  for (int k = 0; k < degree; ++k) {
    VectorXcd q = x.cwiseProduct(Q.col(k));
    H[k].resize(k + 2);
    for (int j = 0; j <= k; ++j) {
      const Complex h = Q.col(j).dot(q) / static_cast<double>(N);
      H[k][j] = h;
      q -= h * Q.col(j);
    }
    const double norm = q.norm() / std::sqrt(static_cast<double>(N));
    if (!(norm > 1e-14)) {
      throw std::runtime_error("rank-deficient basis: samples do not support the degree");
    }
    H[k][k + 1] = norm;
    Q.col(k + 1) = q / norm;
  }
}

// Re-run the recurrence at arbitrary points.
std::vector<Complex> basis_row(const std::vector<std::vector<Complex>>& H, Complex z) {
  const int degree = static_cast<int>(H.size());
  std::vector<Complex> w(degree + 1);
  w[0] = Complex(1.0, 0.0);
  for (int k = 0; k < degree; ++k) {
    Complex v = z * w[k];
    for (int j = 0; j <= k; ++j) v -= H[k][j] * w[j];
    w[k + 1] = v / H[k][k + 1];
  }
  return w;
}

}  // namespace

MinimaxResult solve_minimax(const MinimaxProblem& problem) {
  const int N = static_cast<int>(problem.samples.size());
  const int degree = problem.degree;
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (problem.values.size() != problem.samples.size()) {
    throw std::invalid_argument("samples and values must have equal length");
  }
  if (N < 2 * (degree + 1)) {
    throw std::invalid_argument("need at least 2(degree+1) samples");
  }
  {
    std::vector<Complex> sorted = problem.samples;
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate sample points: rank-deficient basis");
    }
  }

  MatrixXcd Q;
  MinimaxResult result;
  arnoldi(problem.samples, degree, Q, result.hessenberg);
  result.sampleCount = N;

  VectorXcd values(N);
  double scale = 0.0;
  for (int i = 0; i < N; ++i) {
    values(i) = problem.values[i];
    scale = std::max(scale, std::abs(problem.values[i]));
  }

  VectorXd lambda = VectorXd::Constant(N, 1.0 / N);
  VectorXcd coeff;
  VectorXd residualAbs(N);
  result.converged = false;

  for (int it = 0; it < problem.maxIterations; ++it) {
    result.iterations = it + 1;
    const VectorXcd s = lambda.cwiseSqrt().cast<Complex>();
    const MatrixXcd A = s.asDiagonal() * Q;
    const VectorXcd b = s.cwiseProduct(values);
    coeff = A.householderQr().solve(b);
    const VectorXcd residual = values - Q * coeff;
    residualAbs = residual.cwiseAbs();
    result.errorEstimate = residualAbs.maxCoeff();
    result.weightedErrorTrace.push_back(
        std::sqrt(lambda.dot(residualAbs.cwiseProduct(residualAbs))));

    if (result.errorEstimate <= 1e-13 * std::max(1.0, scale)) {
      result.converged = true;  // target is representable to rounding
      break;
    }
    // Oscillation over the weight-supported samples.
    const double lamMax = lambda.maxCoeff();
    double lo = result.errorEstimate, hi = 0.0;
    for (int i = 0; i < N; ++i) {
      if (lambda(i) > 1e-6 * lamMax) {
        lo = std::min(lo, residualAbs(i));
        hi = std::max(hi, residualAbs(i));
      }
    }
    if (hi - lo <= problem.oscillationTol * result.errorEstimate) {
      result.converged = true;
      break;
    }
    lambda = lambda.cwiseProduct(residualAbs);
    const double total = lambda.sum();
    if (!(total > 0.0)) {
      result.converged = true;  // exact interpolation everywhere
      break;
    }
    lambda /= total;
  }

  result.coefficients.assign(coeff.data(), coeff.data() + coeff.size());
  result.weights.assign(lambda.data(), lambda.data() + lambda.size());
  return result;
}

Complex eval_polynomial(const MinimaxResult& result, Complex z) {
  const auto row = basis_row(result.hessenberg, z);
  Complex sum(0.0, 0.0);
  for (std::size_t k = 0; k < row.size(); ++k) sum += result.coefficients[k] * row[k];
  return sum;
}

std::vector<Complex> eval_basis(const MinimaxResult& result, Complex z) {
  return basis_row(result.hessenberg, z);
}

std::vector<Complex> eval_polynomial(const MinimaxResult& result,
                                     const std::vector<Complex>& zs) {
  std::vector<Complex> out(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) out[i] = eval_polynomial(result, zs[i]);
  return out;
}

double near_best_certificate(const MinimaxResult& result,
                             const std::vector<Complex>& finePoints,
                             const std::vector<Complex>& fineValues) {
  if (finePoints.size() != fineValues.size()) {
    throw std::invalid_argument("fine grid points and values must have equal length");
  }
  if (static_cast<int>(finePoints.size()) <= result.sampleCount) {
    throw std::invalid_argument("fine grid must be denser than the solve grid");
  }
  double sup = 0.0;
  for (std::size_t i = 0; i < finePoints.size(); ++i) {
    sup = std::max(sup, std::abs(eval_polynomial(result, finePoints[i]) - fineValues[i]));
  }
  if (result.errorEstimate == 0.0) {
    return sup == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return sup / result.errorEstimate;
}

}  // namespace cornerlight::minimax
