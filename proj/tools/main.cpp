// corner-lightning: batch experiments for fast-decreasing polynomial bounds,
// lightning rational approximation sweeps, and the discrete minimax baseline.
//
// Exit codes: 0 success, 1 numerical criteria failed, 2 usage error.

#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cornerlight/analysis.hpp"
#include "cornerlight/fastdec.hpp"
#include "cornerlight/geometry.hpp"
#include "cornerlight/lightning.hpp"
#include "cornerlight/minimax.hpp"
#include "cornerlight/targets.hpp"

namespace {

using cornerlight::Complex;
namespace analysis = cornerlight::analysis;
namespace fastdec = cornerlight::fastdec;
namespace geometry = cornerlight::geometry;
namespace lightning = cornerlight::lightning;
namespace minimax = cornerlight::minimax;
namespace targets = cornerlight::targets;

constexpr int kExitSuccess = 0;
constexpr int kExitCriteriaFailed = 1;
constexpr int kExitUsage = 2;

struct CertifyOptions {
  std::vector<long> nValues;
  int grid = 200;
  std::string outPath;
};

struct SweepOptions {
  std::string target = "zsqrt";
  double rho = 0.5;
  double theta = std::numbers::pi / 4.0;
  double sigma = 2.0;
  std::vector<long> nValues;
  int boundaryGrid = 300;
  double interiorRmin = 0.1;
  double interiorRmax = 0.25;
  double interiorPhiHalf = std::numbers::pi / 8.0;
  double r2FloorBoundary = 0.95;
  double r2FloorInterior = 0.90;
  std::string outPath;
  std::string jsonPath;
};

struct MinimaxOptions {
  std::string target = "pole2";
  std::vector<long> degrees;
  int samples = 256;
  int fineMultiplier = 4;
  int maxIterations = 200;
  std::string outPath;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

int run_certify(const CertifyOptions& opt) {
  nlohmann::json reports = nlohmann::json::array();
  bool allPass = true;
  for (long n : opt.nValues) {
    const fastdec::BoundReport report = fastdec::certify_bounds(n, opt.grid);
    std::cout << "n=" << n << " supInner=" << report.supInner
              << " supExtended=" << report.supExtended << "\n";
    allPass = allPass && report.supInner <= 1.0 + 1e-10;
    reports.push_back(report);
  }
  nlohmann::json doc{{"command", "fastdec-certify"},
                     {"grid", opt.grid},
                     {"reports", std::move(reports)}};
  write_file(opt.outPath, doc.dump(2) + "\n");
  return allPass ? kExitSuccess : kExitCriteriaFailed;
}

int run_sweep(const SweepOptions& opt) {
  analysis::SweepConfig config;
  config.domain = geometry::SectorDomain(opt.rho, opt.theta);
  config.target = targets::make(opt.target);
  config.targetLabel = opt.target;
  config.nValues = opt.nValues;
  config.sigma = opt.sigma;
  config.boundaryCount = opt.boundaryGrid;
  config.interiorLabels = {"annular_sector"};
  config.interiorGrids = {geometry::polar_box_grid(opt.interiorRmin, opt.interiorRmax,
                                                   opt.interiorPhiHalf, 10, 15)};

  const analysis::ConvergenceTable table = analysis::convergence_sweep(config);
  write_file(opt.outPath, analysis::to_csv(table));

  if (!opt.jsonPath.empty()) {
    nlohmann::json doc;
    to_json(doc, table);
    nlohmann::json approximants = nlohmann::json::array();
    for (long n : opt.nValues) {
      approximants.push_back(lightning::metadata(
          lightning::build_approximant(config.target, config.domain, n, config.sigma)));
    }
    doc["approximants"] = std::move(approximants);
    doc["config"] = {{"command", "lightning-sweep"},
                     {"target", opt.target},
                     {"rho", opt.rho},
                     {"theta", opt.theta},
                     {"sigma", opt.sigma},
                     {"n", opt.nValues},
                     {"boundary_grid", opt.boundaryGrid},
                     {"interior_rmin", opt.interiorRmin},
                     {"interior_rmax", opt.interiorRmax},
                     {"interior_phi_half", opt.interiorPhiHalf},
                     {"r2_floor_boundary", opt.r2FloorBoundary},
                     {"r2_floor_interior", opt.r2FloorInterior}};
    write_file(opt.jsonPath, doc.dump(2) + "\n");
  }

  // Fits are optional (short n lists); when present they must show decay.
  bool pass = true;
  if (table.boundaryFit) {
    pass = pass && table.boundaryFit->slope < 0.0 &&
           table.boundaryFit->rSquared >= opt.r2FloorBoundary;
  }
  for (const auto& fit : table.interiorFits) {
    if (fit) pass = pass && fit->slope < 0.0 && fit->rSquared >= opt.r2FloorInterior;
  }
  for (const auto& row : table.rows) {
    std::cout << "n=" << row.n << " boundary_err=" << row.boundaryError;
    for (std::size_t c = 0; c < row.interiorErrors.size(); ++c) {
      std::cout << " " << table.interiorLabels[c] << "_err=" << row.interiorErrors[c];
    }
    std::cout << "\n";
  }
  if (table.boundaryFit) {
    std::cout << "boundary fit: slope=" << table.boundaryFit->slope
              << " R2=" << table.boundaryFit->rSquared << "\n";
  }
  return pass ? kExitSuccess : kExitCriteriaFailed;
}

int run_minimax(const MinimaxOptions& opt) {
  std::vector<Complex> samples(opt.samples);
  for (int k = 0; k < opt.samples; ++k) {
    samples[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / double(opt.samples));
  }
  const int fineCount = opt.samples * opt.fineMultiplier;
  std::vector<Complex> fine(fineCount);
  for (int k = 0; k < fineCount; ++k) {
    fine[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / double(fineCount));
  }

  std::function<Complex(Complex)> f;
  if (opt.target == "pole2") {
    f = [](Complex z) { return 1.0 / (z - 2.0); };
  } else if (opt.target == "poly3") {
    f = [](Complex z) { return Complex(0.3, 0.1) + z - 0.5 * z * z + Complex(2.0, -1.0) * z * z * z; };
  } else {
    throw CLI::ValidationError("--target", "unknown minimax target: " + opt.target);
  }

  std::vector<Complex> sampleValues(samples.size()), fineValues(fine.size());
  for (std::size_t i = 0; i < samples.size(); ++i) sampleValues[i] = f(samples[i]);
  for (std::size_t i = 0; i < fine.size(); ++i) fineValues[i] = f(fine[i]);

  std::ostringstream csv;
  csv << "n,e_n,near_best_ratio\n";
  for (long degree : opt.degrees) {
    minimax::MinimaxProblem problem;
    problem.samples = samples;
    problem.values = sampleValues;
    problem.degree = static_cast<int>(degree);
    problem.maxIterations = opt.maxIterations;
    const minimax::MinimaxResult result = minimax::solve_minimax(problem);
    const double ratio = minimax::near_best_certificate(result, fine, fineValues);
    char line[96];
    std::snprintf(line, sizeof(line), "%ld,%.16e,%.16e\n", degree, result.errorEstimate,
                  ratio);
    csv << line;
    std::cout << "n=" << degree << " E_n=" << result.errorEstimate << " ratio=" << ratio
              << (result.converged ? "" : " (not converged)") << "\n";
  }
  write_file(opt.outPath, csv.str());
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lightning rational approximation on sectors and slit discs"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "INI config file with [subcommand] sections, given before the "
                 "subcommand; command-line flags win");

  CertifyOptions certify;
  auto* certifyCmd = app.add_subcommand(
      "fastdec-certify", "certify the uniform bounds and interior decay of R_n");
  certifyCmd->add_option("--n", certify.nValues, "degree parameters")
      ->required()
      ->delimiter(',');
  certifyCmd->add_option("--grid", certify.grid, "samples per axis (>= 10)")
      ->check(CLI::Range(10, 100000));
  certifyCmd->add_option("--out", certify.outPath, "JSON report path")->required();

  SweepOptions sweep;
  auto* sweepCmd =
      app.add_subcommand("lightning-sweep", "convergence sweep of the rational approximant");
  sweepCmd->add_option("--target", sweep.target, "target id from the catalog")
      ->check(CLI::IsMember(targets::catalog()));
  sweepCmd->add_option("--rho", sweep.rho, "sector radius in (0,1)");
  sweepCmd->add_option("--theta", sweep.theta, "sector half-angle in radians");
  sweepCmd->add_option("--sigma", sweep.sigma, "pole clustering constant");
  sweepCmd->add_option("--n", sweep.nValues, "strictly increasing degree budgets")
      ->required()
      ->delimiter(',');
  sweepCmd->add_option("--boundary-grid", sweep.boundaryGrid, "boundary sample count");
  sweepCmd->add_option("--interior-rmin", sweep.interiorRmin, "interior compact inner radius");
  sweepCmd->add_option("--interior-rmax", sweep.interiorRmax, "interior compact outer radius");
  sweepCmd->add_option("--interior-phi-half", sweep.interiorPhiHalf,
                       "interior compact half-angle");
  sweepCmd->add_option("--r2-floor-boundary", sweep.r2FloorBoundary,
                       "minimum R^2 for the boundary fit");
  sweepCmd->add_option("--r2-floor-interior", sweep.r2FloorInterior,
                       "minimum R^2 for interior fits");
  sweepCmd->add_option("--out", sweep.outPath, "CSV output path")->required();
  sweepCmd->add_option("--json", sweep.jsonPath, "optional JSON mirror with fits and config");

  MinimaxOptions mm;
  auto* mmCmd = app.add_subcommand("minimax-sweep",
                                   "discrete best-polynomial baseline on the unit circle");
  mmCmd->add_option("--target", mm.target, "pole2 | poly3");
  mmCmd->add_option("--n", mm.degrees, "polynomial degrees")->required()->delimiter(',');
  mmCmd->add_option("--samples", mm.samples, "unit circle sample count")
      ->check(CLI::Range(4, 1 << 20));
  mmCmd->add_option("--fine-mult", mm.fineMultiplier, "fine grid densification factor")
      ->check(CLI::Range(2, 64));
  mmCmd->add_option("--max-iter", mm.maxIterations, "Lawson iteration cap");
  mmCmd->add_option("--out", mm.outPath, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (certifyCmd->parsed()) return run_certify(certify);
    if (sweepCmd->parsed()) return run_sweep(sweep);
    if (mmCmd->parsed()) return run_minimax(mm);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCriteriaFailed;
  }
  return kExitUsage;
}
