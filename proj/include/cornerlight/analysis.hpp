#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cornerlight/geometry.hpp"
#include "cornerlight/lightning.hpp"

namespace cornerlight::analysis {

enum class RateModel { ExpSqrt, ExpLinear };

// Least-squares line through (sqrt(n), log err) or (n, log err).
struct RateFit {
  RateModel model = RateModel::ExpSqrt;
  double slope = 0.0;
  double intercept = 0.0;
  double rSquared = 0.0;
  int pointsUsed = 0;
  int pointsDropped = 0;
};

using Evaluator = std::function<Complex(Complex)>;

// max over the grid of |candidate - reference|; order-independent.
// Evaluation failures are rethrown with the offending point identified.
double sup_error(const Evaluator& candidate, const Evaluator& reference,
                 const geometry::EvaluationGrid& grid);
double sup_error(const Evaluator& candidate, const std::vector<Complex>& exact,
                 const geometry::EvaluationGrid& grid);

// Nonpositive errors are dropped with a warning; fewer than 3 survivors throw.
RateFit fit_rate(const std::vector<std::pair<double, double>>& points, RateModel model);

struct SweepConfig {
  geometry::SectorDomain domain{0.5, 0.78539816339744831};
  lightning::SlitFunction target;
  std::string targetLabel;
  std::vector<long> nValues;
  double sigma = 2.0;
  int boundaryCount = 300;
  std::vector<std::string> interiorLabels;
  std::vector<geometry::EvaluationGrid> interiorGrids;
  long minFitN = 16;  // rows below this are kept but excluded from fits
};

struct ConvergenceRow {
  long n = 0;
  double boundaryError = 0.0;
  std::vector<double> interiorErrors;
};

struct ConvergenceTable {
  std::vector<std::string> interiorLabels;
  std::vector<ConvergenceRow> rows;
  std::optional<RateFit> boundaryFit;                 // exp-sqrt model
  std::vector<std::optional<RateFit>> interiorFits;   // exp-linear model
};

// One approximant per n against fixed grids; fits attached when at least
// three usable rows exist.
ConvergenceTable convergence_sweep(const SweepConfig& config);

// Header `n,boundary_err,interior_<label>_err,...`, one row per n.
std::string to_csv(const ConvergenceTable& table);

void to_json(nlohmann::json& j, const RateFit& f);
void to_json(nlohmann::json& j, const ConvergenceTable& table);

}  // namespace cornerlight::analysis
