// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The first argument is the CLI binary path (used by the
// determinism criterion); defaults to ./tools/corner-lightning.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cornerlight/analysis.hpp"
#include "cornerlight/fastdec.hpp"
#include "cornerlight/geometry.hpp"
#include "cornerlight/lightning.hpp"
#include "cornerlight/minimax.hpp"
#include "cornerlight/targets.hpp"

using cornerlight::Complex;
namespace analysis = cornerlight::analysis;
namespace fastdec = cornerlight::fastdec;
namespace geometry = cornerlight::geometry;
namespace lightning = cornerlight::lightning;
namespace minimax = cornerlight::minimax;
namespace targets = cornerlight::targets;

namespace {

constexpr double kPi = std::numbers::pi;

std::string g_cliPath = "./tools/corner-lightning";

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      out.pass = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += "FAILED " + what;
    }
  }
  void note(const std::string& what) {
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += what;
  }
  Outcome out;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// Shared fixtures ------------------------------------------------------------

const std::vector<fastdec::BoundReport>& certification_reports() {
  static const std::vector<fastdec::BoundReport> reports = [] {
    std::vector<fastdec::BoundReport> r;
    for (long n : {10L, 100L, 1000L}) r.push_back(fastdec::certify_bounds(n, 400));
    return r;
  }();
  return reports;
}

analysis::SweepConfig sweep_config(const std::string& target) {
  analysis::SweepConfig config;
  config.domain = geometry::SectorDomain(0.5, kPi / 4.0);
  config.target = targets::make(target);
  config.targetLabel = target;
  config.nValues = {16, 36, 64, 100, 144, 196};
  config.sigma = 2.0;
  config.boundaryCount = 300;
  config.interiorLabels = {"annular_sector"};
  config.interiorGrids = {geometry::polar_box_grid(0.1, 0.25, kPi / 8.0, 10, 15)};
  return config;
}

const analysis::ConvergenceTable& zsqrt_sweep() {
  static const analysis::ConvergenceTable table =
      analysis::convergence_sweep(sweep_config("zsqrt"));
  return table;
}

// Criteria -------------------------------------------------------------------

Outcome criterion1() {
  Check c;
  for (const auto& r : certification_reports()) {
    c.require(r.supInner <= 1.0 + 1e-10,
              "supInner(n=" + std::to_string(r.n) + ") = " + fmt(r.supInner));
  }
  c.note("sup over S_{1/3} grid <= 1+1e-10 for n in {10,100,1000}");
  return c.out;
}

Outcome criterion2() {
  Check c;
  double worst = 0.0;
  for (const auto& r : certification_reports()) {
    worst = std::max(worst, r.supExtended);
    c.require(r.supExtended < 20.0,
              "supExtended(n=" + std::to_string(r.n) + ") = " + fmt(r.supExtended));
  }
  c.note("uniform extended-square constant " + fmt(worst) + " (c3 = " +
         fmt(std::log(worst)) + ")");
  return c.out;
}

Outcome criterion3() {
  Check c;
  // Exact rational power oracle for (20/27)^50.
  long double num = 1.0L, den = 1.0L;
  for (int i = 0; i < 50; ++i) {
    num *= 20.0L;
    den *= 27.0L;
  }
  const double expected = static_cast<double>(num / den);
  const double got = fastdec::eval_reference(50, Complex(-1.0 / 3.0, 0.0)).magnitude();
  c.require(std::fabs(got - expected) <= 1e-9 * expected,
            "|R_50(-1/3)| = " + fmt(got) + " vs oracle " + fmt(expected));
  const double cRef = -std::log(20.0 / 27.0);
  for (long n : {10L, 50L, 1000L}) {
    const double cHat =
        -fastdec::eval_reference(n, Complex(-1.0 / 3.0, 0.0)).logMagnitude / double(n);
    c.require(std::fabs(cHat - cRef) <= 1e-9, "cHat(n=" + std::to_string(n) + ")");
  }
  c.note("cHat = " + fmt(cRef));
  return c.out;
}

Outcome criterion4() {
  Check c;
  const auto rule = lightning::slit_quadrature(1e-16, 16);
  for (long n : {16L, 64L, 196L}) {
    const auto scheme = lightning::build_scheme(n, 2.0);
    double worstUpper = -1e300;
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 100; ++j) {
        const double r = (i + 1.0) / 101.0;
        const double phi = -kPi / 4.0 + kPi / 2.0 * (j + 0.5) / 100.0;
        const Complex z = r * std::polar(1.0, phi);
        worstUpper = std::max(
            worstUpper, lightning::eval_phi(scheme, z).logMagnitude - std::log(std::abs(z)));
      }
    }
    c.require(worstUpper <= 1e-12,
              "|phi(z)| <= |z| on A_{pi/4} for n=" + std::to_string(n) +
                  " (excess " + fmt(worstUpper) + ")");
    double worstLower = 1e300;
    int counted = 0;
    for (double t : rule.nodes) {
      if (-t < scheme.epsilonSplit) {
        ++counted;
        worstLower = std::min(worstLower, lightning::eval_phi(scheme, Complex(t, 0.0))
                                                  .logMagnitude -
                                              std::log(-t));
      }
    }
    c.require(counted > 0, "clustered-piece nodes exist for n=" + std::to_string(n));
    c.require(worstLower >= -1e-12,
              "|phi(zeta)| >= |zeta| on the clustered piece for n=" + std::to_string(n));
  }
  c.note("log-scale tolerance 1e-12, schemes n in {16,64,196}");
  return c.out;
}

Outcome criterion5() {
  Check c;
  const geometry::SectorDomain domain(0.5, kPi / 4.0);
  const auto f = targets::make("entire-z2");
  const auto boundary =
      geometry::boundary_grid(domain, 30, geometry::Clustering::ExponentialTowardOrigin);
  const auto interior = geometry::interior_compact_grid(domain, 0.05, 20);
  double worst = 0.0;
  for (long n : {64L, 100L}) {
    const auto approx = lightning::build_approximant(f, domain, n, 2.0);
    for (const auto& grid : {boundary, interior}) {
      for (Complex z : grid.points) {
        worst = std::max(worst, std::abs(lightning::evaluate(approx, z) - z * z));
      }
    }
  }
  c.require(worst <= 1e-10, "jump-free reconstruction error " + fmt(worst));
  c.note("50-point closed-sector grid, error " + fmt(worst));
  return c.out;
}

Outcome criterion6() {
  Check c;
  const auto& table = zsqrt_sweep();
  c.require(table.boundaryFit.has_value(), "boundary fit exists");
  if (table.boundaryFit) {
    c.require(table.boundaryFit->slope < 0.0, "boundary slope negative");
    c.require(table.boundaryFit->rSquared >= 0.95,
              "boundary R^2 = " + fmt(table.boundaryFit->rSquared));
    c.note("slope " + fmt(table.boundaryFit->slope) + " per sqrt(n), R^2 " +
           fmt(table.boundaryFit->rSquared));
  }
  const auto& last = table.rows.back();
  c.require(last.n == 196, "last row is n=196");
  c.require(last.boundaryError <= 1e-4,
            "boundary error at n=196 is " + fmt(last.boundaryError));
  c.note("err(196) = " + fmt(last.boundaryError));
  return c.out;
}

Outcome criterion7() {
  Check c;
  const auto& table = zsqrt_sweep();
  c.require(!table.interiorFits.empty() && table.interiorFits[0].has_value(),
            "interior fit exists");
  if (!table.interiorFits.empty() && table.interiorFits[0]) {
    const auto& fit = *table.interiorFits[0];
    c.require(fit.slope < 0.0, "interior slope negative");
    c.require(fit.rSquared >= 0.90, "interior R^2 = " + fmt(fit.rSquared));
    c.note("slope " + fmt(fit.slope) + " per n, R^2 " + fmt(fit.rSquared));
  }
  for (const auto& row : table.rows) {
    if (row.n >= 64) {
      c.require(row.interiorErrors[0] <= row.boundaryError,
                "interior <= boundary at n=" + std::to_string(row.n));
    }
  }
  return c.out;
}

Outcome criterion8() {
  Check c;
  const auto& sqrtTable = zsqrt_sweep();
  const auto table03 = analysis::convergence_sweep(sweep_config("zpow03"));
  c.require(sqrtTable.boundaryFit.has_value() && table03.boundaryFit.has_value(),
            "both fits exist");
  if (sqrtTable.boundaryFit && table03.boundaryFit) {
    const double s05 = sqrtTable.boundaryFit->slope;
    const double s03 = table03.boundaryFit->slope;
    c.require(s03 < 0.0, "z^{0.3} slope negative");
    c.require(s03 > s05, "z^{0.3} slope " + fmt(s03) + " shallower than z^{1/2} slope " +
                             fmt(s05));
    c.note("slopes: z^{0.3} " + fmt(s03) + " vs z^{1/2} " + fmt(s05));
  }
  return c.out;
}

Outcome criterion9() {
  Check c;
  std::vector<Complex> samples(256);
  for (int k = 0; k < 256; ++k) samples[k] = std::polar(1.0, 2.0 * kPi * k / 256.0);
  auto f = [](Complex z) { return 1.0 / (z - 2.0); };
  std::vector<Complex> values(256);
  for (int k = 0; k < 256; ++k) values[k] = f(samples[k]);

  std::vector<double> estimates;
  for (int degree = 4; degree <= 13; ++degree) {
    minimax::MinimaxProblem p;
    p.samples = samples;
    p.values = values;
    p.degree = degree;
    estimates.push_back(minimax::solve_minimax(p).errorEstimate);
  }
  for (std::size_t i = 0; i + 1 < estimates.size(); ++i) {
    const double ratio = estimates[i] / estimates[i + 1];
    c.require(ratio >= 1.8 && ratio <= 2.2,
              "ratio E_" + std::to_string(i + 4) + "/E_" + std::to_string(i + 5) + " = " +
                  fmt(ratio));
  }

  // Degree-exact recovery.
  auto cubic = [](Complex z) {
    return Complex(0.3, 0.1) + z - 0.5 * z * z + Complex(2.0, -1.0) * z * z * z;
  };
  for (int degree : {3, 6}) {
    minimax::MinimaxProblem p;
    p.samples = samples;
    p.values.resize(256);
    for (int k = 0; k < 256; ++k) p.values[k] = cubic(samples[k]);
    p.degree = degree;
    const auto r = minimax::solve_minimax(p);
    c.require(r.errorEstimate <= 1e-10,
              "degree-exact estimate " + fmt(r.errorEstimate) + " at degree " +
                  std::to_string(degree));
  }
  c.note("ratios within [1.8, 2.2] across n = 4..12");
  return c.out;
}

Outcome criterion10() {
  Check c;
  std::mt19937 rng(20240929);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> rot(-kPi, kPi);
  std::uniform_real_distribution<double> side(0.5, 4.0);
  double worstMag = 0.0, worstPhase = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex zeta(u(rng), u(rng));
    const Complex z(u(rng), u(rng));
    const double rotation = rot(rng);
    const double halfSide = side(rng);
    const auto lhs = fastdec::eval_bowtie(150, zeta, z, rotation, halfSide);
    // Composed oracle: transform then reference evaluation.
    const Complex w =
        std::polar(1.0, -rotation) * (z * z - zeta * zeta) / (3.0 * halfSide);
    const auto rhs = fastdec::eval_reference(150 / 3, w);
    worstMag = std::max(worstMag, std::fabs(lhs.logMagnitude - rhs.logMagnitude) /
                                      std::max(1.0, std::fabs(rhs.logMagnitude)));
    worstPhase = std::max(worstPhase, std::fabs(lhs.phase - rhs.phase));
  }
  c.require(worstMag <= 1e-12, "log-magnitude deviation " + fmt(worstMag));
  c.require(worstPhase <= 1e-9, "phase deviation " + fmt(worstPhase));

  const Complex zeta(0.37, -0.12);
  for (Complex z : {zeta, -zeta}) {
    const auto lc = fastdec::eval_bowtie(150, zeta, z, 0.3, 2.0);
    c.require(lc.logMagnitude == 0.0 && lc.phase == 0.0, "modulus 1 at z = +-zeta");
  }
  c.note("1000 random samples; exact identity at z = +-zeta");
  return c.out;
}

Outcome criterion11() {
  Check c;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cornerlight_acceptance";
  fs::create_directories(dir);
  const fs::path out1 = dir / "sweep1.csv";
  const fs::path out2 = dir / "sweep2.csv";
  const std::string base =
      "\"" + g_cliPath +
      "\" lightning-sweep --target zsqrt --rho 0.5 --theta 0.7853981633974483 "
      "--sigma 2 --n 16,36,64,100,144,196 --out ";
  const int rc1 = std::system((base + "\"" + out1.string() + "\"").c_str());
  const int rc2 = std::system((base + "\"" + out2.string() + "\"").c_str());
  c.require(rc1 == 0, "first CLI run exit code " + std::to_string(rc1));
  c.require(rc2 == 0, "second CLI run exit code " + std::to_string(rc2));

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = slurp(out1);
  const std::string b = slurp(out2);
  c.require(!a.empty(), "first CSV nonempty");
  c.require(a == b, "byte-identical CSV across runs");
  c.note(std::to_string(a.size()) + " bytes");
  return c.out;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
  double limitSeconds;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cliPath = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "uniform bound on the reference square", criterion1, 10.0},
      {2, "uniform bound on the extended square", criterion2, 10.0},
      {3, "interior decay at the exact anchor", criterion3, 1.0},
      {4, "node-function bounds", criterion4, 5.0},
      {5, "jump-free reconstruction identity", criterion5, 30.0},
      {6, "root-exponential boundary rate (z^{1/2})", criterion6, 300.0},
      {7, "geometric interior rate", criterion7, 300.0},
      {8, "Holder-exponent sensitivity (z^{0.3})", criterion8, 300.0},
      {9, "minimax baseline on the pole target", criterion9, 30.0},
      {10, "square-composed identity", criterion10, 1.0},
      {11, "CLI determinism", criterion11, 300.0},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = crit.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > crit.limitSeconds) {
      out.pass = false;
      out.detail += "; runtime " + fmt(seconds) + "s over limit " +
                    fmt(crit.limitSeconds) + "s";
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %2d. %s (%.2fs) %s\n", out.pass ? "PASS" : "FAIL", crit.id,
                crit.name.c_str(), seconds, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
