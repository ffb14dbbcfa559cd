#pragma once

#include <vector>

#include "cornerlight/geometry.hpp"

namespace cornerlight::minimax {

// Discrete minimax polynomial fit: samples with target values, degree bound,
// and the Lawson stopping parameters.
struct MinimaxProblem {
  std::vector<Complex> samples;
  std::vector<Complex> values;
  int degree = 0;
  int maxIterations = 200;
  double oscillationTol = 1e-3;
};

// Coefficients live in the sample-orthogonalized basis; the Hessenberg
// recurrence columns let the polynomial be re-evaluated anywhere.
struct MinimaxResult {
  std::vector<Complex> coefficients;
  std::vector<std::vector<Complex>> hessenberg;  // column k holds k+2 entries
  std::vector<double> weights;                   // final Lawson weights
  std::vector<double> weightedErrorTrace;        // sqrt(sum w |r|^2) per iteration
  double errorEstimate = 0.0;                    // max |residual| over the samples
  bool converged = false;
  int iterations = 0;
  int sampleCount = 0;
};

// Lawson iteratively reweighted least squares on an Arnoldi-orthogonalized
// polynomial basis. Converged means the |residual| spread over the
// weight-supported samples is within oscillationTol of the estimate.
MinimaxResult solve_minimax(const MinimaxProblem& problem);

Complex eval_polynomial(const MinimaxResult& result, Complex z);
std::vector<Complex> eval_polynomial(const MinimaxResult& result,
                                     const std::vector<Complex>& zs);

// Values of the orthonormal basis polynomials at z (degree+1 entries).
std::vector<Complex> eval_basis(const MinimaxResult& result, Complex z);

// Ratio (sup error over a finer grid) / errorEstimate; >= 1 up to rounding
// when the fine grid contains the solve grid.
double near_best_certificate(const MinimaxResult& result,
                             const std::vector<Complex>& finePoints,
                             const std::vector<Complex>& fineValues);

}  // namespace cornerlight::minimax
