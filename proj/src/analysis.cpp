#include "cornerlight/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "cornerlight/parallel.hpp"

namespace cornerlight::analysis {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

double sup_from_values(const std::vector<double>& values) {
  double sup = 0.0;
  for (double v : values) sup = std::max(sup, v);
  return sup;
}

}  // namespace

double sup_error(const Evaluator& candidate, const Evaluator& reference,
                 const geometry::EvaluationGrid& grid) {
  if (grid.points.empty()) throw std::invalid_argument("sup_error: empty grid");
  std::vector<double> diffs(grid.points.size(), 0.0);
  std::vector<std::string> failures(grid.points.size());
  parallel_for(grid.points.size(), [&](std::size_t i) {
    const Complex z = grid.points[i];
    try {
      diffs[i] = std::abs(candidate(z) - reference(z));
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << e.what() << " at grid point (" << z.real() << ", " << z.imag() << ")";
      failures[i] = os.str();
    }
  });
  for (const auto& f : failures) {
    if (!f.empty()) throw std::runtime_error(f);
  }
  return sup_from_values(diffs);
}

double sup_error(const Evaluator& candidate, const std::vector<Complex>& exact,
                 const geometry::EvaluationGrid& grid) {
  if (grid.points.empty()) throw std::invalid_argument("sup_error: empty grid");
  if (grid.points.size() != exact.size()) {
    throw std::invalid_argument("sup_error: grid and reference sizes differ");
  }
  std::vector<double> diffs(grid.points.size(), 0.0);
  std::vector<std::string> failures(grid.points.size());
  parallel_for(grid.points.size(), [&](std::size_t i) {
    const Complex z = grid.points[i];
    try {
      diffs[i] = std::abs(candidate(z) - exact[i]);
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << e.what() << " at grid point (" << z.real() << ", " << z.imag() << ")";
      failures[i] = os.str();
    }
  });
  for (const auto& f : failures) {
    if (!f.empty()) throw std::runtime_error(f);
  }
  return sup_from_values(diffs);
}

RateFit fit_rate(const std::vector<std::pair<double, double>>& points, RateModel model) {
  std::vector<double> xs, ys;
  int dropped = 0;
  for (const auto& [n, err] : points) {
    if (!(err > 0.0) || !std::isfinite(err)) {
      ++dropped;
      continue;
    }
    xs.push_back(model == RateModel::ExpSqrt ? std::sqrt(n) : n);
    ys.push_back(std::log(err));
  }
  if (dropped > 0) {
    std::fprintf(stderr, "fit_rate: dropped %d point(s) with nonpositive error\n", dropped);
  }
  const std::size_t k = xs.size();
  if (k < 3) throw std::invalid_argument("fit_rate: fewer than 3 usable points");

  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / k, my = sy / k;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  RateFit fit;
  fit.model = model;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssRes = 0.0, ssTot = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double pred = fit.intercept + fit.slope * xs[i];
    ssRes += (ys[i] - pred) * (ys[i] - pred);
    ssTot += (ys[i] - my) * (ys[i] - my);
  }
  fit.rSquared = ssTot == 0.0 ? (ssRes == 0.0 ? 1.0 : 0.0) : 1.0 - ssRes / ssTot;
  fit.pointsUsed = static_cast<int>(k);
  fit.pointsDropped = dropped;
  return fit;
}

ConvergenceTable convergence_sweep(const SweepConfig& config) {
  if (config.nValues.empty()) throw std::invalid_argument("sweep needs a nonempty n list");
  for (std::size_t i = 1; i < config.nValues.size(); ++i) {
    if (config.nValues[i] <= config.nValues[i - 1]) {
      throw std::invalid_argument("sweep n list must be strictly increasing");
    }
  }
  if (config.interiorLabels.size() != config.interiorGrids.size()) {
    throw std::invalid_argument("interior labels and grids must pair up");
  }

  const geometry::EvaluationGrid boundary = geometry::boundary_grid(
      config.domain, config.boundaryCount, geometry::Clustering::ExponentialTowardOrigin);

  ConvergenceTable table;
  table.interiorLabels = config.interiorLabels;
  for (long n : config.nValues) {
    ConvergenceRow row;
    row.n = n;
    const auto approx = lightning::build_approximant(config.target, config.domain, n,
                                                     config.sigma);
    const Evaluator candidate = [&](Complex z) { return lightning::evaluate(approx, z); };
    try {
      row.boundaryError = sup_error(candidate, config.target.boundaryValue, boundary);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "sweep n=%ld boundary: %s\n", n, e.what());
      row.boundaryError = std::nan("");
    }
    for (const auto& grid : config.interiorGrids) {
      try {
        row.interiorErrors.push_back(
            sup_error(candidate, config.target.boundaryValue, grid));
      } catch (const std::exception& e) {
        std::fprintf(stderr, "sweep n=%ld interior: %s\n", n, e.what());
        row.interiorErrors.push_back(std::nan(""));
      }
    }
    table.rows.push_back(std::move(row));
  }

  // Rows at the rounding floor carry no rate information; they stay in the
  // table but are excluded from fits (a target may converge to machine
  // precision mid-sweep).
  constexpr double kFitFloor = 1e-14;
  auto fit_column = [&](RateModel model, auto getter) -> std::optional<RateFit> {
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : table.rows) {
      if (row.n >= config.minFitN && getter(row) > kFitFloor) {
        pts.push_back({static_cast<double>(row.n), getter(row)});
      }
    }
    try {
      return fit_rate(pts, model);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  };
  table.boundaryFit =
      fit_column(RateModel::ExpSqrt, [](const ConvergenceRow& r) { return r.boundaryError; });
  for (std::size_t c = 0; c < config.interiorGrids.size(); ++c) {
    table.interiorFits.push_back(fit_column(
        RateModel::ExpLinear, [c](const ConvergenceRow& r) { return r.interiorErrors[c]; }));
  }
  return table;
}

std::string to_csv(const ConvergenceTable& table) {
  std::ostringstream os;
  os << "n,boundary_err";
  for (const auto& label : table.interiorLabels) os << ",interior_" << label << "_err";
  os << "\n";
  for (const auto& row : table.rows) {
    os << row.n << "," << format_double(row.boundaryError);
    for (double e : row.interiorErrors) os << "," << format_double(e);
    os << "\n";
  }
  return os.str();
}

void to_json(nlohmann::json& j, const RateFit& f) {
  j = nlohmann::json{{"model", f.model == RateModel::ExpSqrt ? "exp-sqrt" : "exp-linear"},
                     {"slope", f.slope},
                     {"intercept", f.intercept},
                     {"rSquared", f.rSquared},
                     {"pointsUsed", f.pointsUsed},
                     {"pointsDropped", f.pointsDropped}};
}

void to_json(nlohmann::json& j, const ConvergenceTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r{{"n", row.n}, {"boundary_err", row.boundaryError}};
    for (std::size_t c = 0; c < table.interiorLabels.size(); ++c) {
      r["interior_" + table.interiorLabels[c] + "_err"] = row.interiorErrors[c];
    }
    rows.push_back(std::move(r));
  }
  nlohmann::json fits;
  if (table.boundaryFit) fits["boundary"] = *table.boundaryFit;
  for (std::size_t c = 0; c < table.interiorFits.size(); ++c) {
    if (table.interiorFits[c]) {
      fits["interior_" + table.interiorLabels[c]] = *table.interiorFits[c];
    }
  }
  j = nlohmann::json{{"rows", std::move(rows)}, {"fits", std::move(fits)}};
}

}  // namespace cornerlight::analysis
