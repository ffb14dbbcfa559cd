// Python bindings for the main operations: domains and grids, fast-decreasing
// polynomial evaluation/certification, the lightning scheme and approximant,
// the minimax baseline, and rate fitting.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cornerlight/analysis.hpp"
#include "cornerlight/fastdec.hpp"
#include "cornerlight/geometry.hpp"
#include "cornerlight/lightning.hpp"
#include "cornerlight/minimax.hpp"
#include "cornerlight/targets.hpp"

namespace py = pybind11;

using cornerlight::Complex;
namespace geometry = cornerlight::geometry;
namespace fastdec = cornerlight::fastdec;
namespace lightning = cornerlight::lightning;
namespace minimax = cornerlight::minimax;
namespace analysis = cornerlight::analysis;
namespace targets = cornerlight::targets;

PYBIND11_MODULE(_core, m) {
  m.doc() = "lightning rational approximation on sectors and slit discs";

  // ---- geometry ----
  py::enum_<geometry::Clustering>(m, "Clustering")
      .value("NONE", geometry::Clustering::None)
      .value("EXPONENTIAL_TOWARD_ORIGIN", geometry::Clustering::ExponentialTowardOrigin);

  py::class_<geometry::SectorDomain>(m, "SectorDomain")
      .def(py::init<double, double>(), py::arg("rho"), py::arg("theta"))
      .def_property_readonly("rho", &geometry::SectorDomain::rho)
      .def_property_readonly("theta", &geometry::SectorDomain::theta)
      .def("strictly_inside", &geometry::SectorDomain::strictly_inside)
      .def("contains", &geometry::SectorDomain::contains)
      .def("inradius", &geometry::SectorDomain::inradius)
      .def("diameter", &geometry::SectorDomain::diameter);

  py::class_<geometry::ConvexPolygon>(m, "ConvexPolygon")
      .def(py::init<std::vector<Complex>>(), py::arg("vertices"))
      .def_property_readonly("vertices", &geometry::ConvexPolygon::vertices)
      .def("strictly_inside", &geometry::ConvexPolygon::strictly_inside)
      .def("inradius", &geometry::ConvexPolygon::inradius)
      .def("diameter", &geometry::ConvexPolygon::diameter);

  py::class_<geometry::AnchoredSquare>(m, "AnchoredSquare")
      .def(py::init([](Complex anchor, double rotation, double halfSide) {
             return geometry::AnchoredSquare{anchor, rotation, halfSide};
           }),
           py::arg("anchor"), py::arg("rotation"), py::arg("half_side"))
      .def_readonly("anchor", &geometry::AnchoredSquare::anchor)
      .def_readonly("rotation", &geometry::AnchoredSquare::rotation)
      .def_readonly("half_side", &geometry::AnchoredSquare::halfSide);

  py::class_<geometry::EvaluationGrid>(m, "EvaluationGrid")
      .def_readonly("points", &geometry::EvaluationGrid::points)
      .def_readonly("description", &geometry::EvaluationGrid::description);

  auto closest = [](py::object domain, Complex zeta) {
    if (py::isinstance<geometry::SectorDomain>(domain)) {
      auto cp = geometry::closest_point(domain.cast<const geometry::SectorDomain&>(), zeta);
      return py::make_tuple(cp.point, cp.distance);
    }
    auto cp = geometry::closest_point(domain.cast<const geometry::ConvexPolygon&>(), zeta);
    return py::make_tuple(cp.point, cp.distance);
  };
  m.def("closest_point", closest, py::arg("domain"), py::arg("zeta"));

  m.def("anchor_square",
        [](py::object domain, Complex zeta, py::object halfSide) {
          const bool haveSide = !halfSide.is_none();
          if (py::isinstance<geometry::SectorDomain>(domain)) {
            const auto& d = domain.cast<const geometry::SectorDomain&>();
            return haveSide ? geometry::anchor_square(d, zeta, halfSide.cast<double>())
                            : geometry::anchor_square(d, zeta);
          }
          const auto& d = domain.cast<const geometry::ConvexPolygon&>();
          return haveSide ? geometry::anchor_square(d, zeta, halfSide.cast<double>())
                          : geometry::anchor_square(d, zeta);
        },
        py::arg("domain"), py::arg("zeta"), py::arg("half_side") = py::none());

  m.def("boundary_grid",
        [](py::object domain, int count, geometry::Clustering clustering) {
          if (py::isinstance<geometry::SectorDomain>(domain)) {
            return geometry::boundary_grid(domain.cast<const geometry::SectorDomain&>(),
                                           count, clustering);
          }
          return geometry::boundary_grid(domain.cast<const geometry::ConvexPolygon&>(),
                                         count, clustering);
        },
        py::arg("domain"), py::arg("count"),
        py::arg("clustering") = geometry::Clustering::None);

  m.def("interior_compact_grid",
        [](py::object domain, double margin, int count) {
          if (py::isinstance<geometry::SectorDomain>(domain)) {
            return geometry::interior_compact_grid(
                domain.cast<const geometry::SectorDomain&>(), margin, count);
          }
          return geometry::interior_compact_grid(
              domain.cast<const geometry::ConvexPolygon&>(), margin, count);
        },
        py::arg("domain"), py::arg("margin"), py::arg("count"));

  m.def("polar_box_grid", &geometry::polar_box_grid, py::arg("rmin"), py::arg("rmax"),
        py::arg("phi_half"), py::arg("radial_count"), py::arg("angular_count"));

  // ---- fastdec ----
  py::class_<fastdec::LogComplex>(m, "LogComplex")
      .def_readonly("log_magnitude", &fastdec::LogComplex::logMagnitude)
      .def_readonly("phase", &fastdec::LogComplex::phase)
      .def("magnitude", &fastdec::LogComplex::magnitude)
      .def("value", &fastdec::LogComplex::value)
      .def("__repr__", [](const fastdec::LogComplex& lc) {
        return "LogComplex(log_magnitude=" + std::to_string(lc.logMagnitude) +
               ", phase=" + std::to_string(lc.phase) + ")";
      });

  m.def("eval_base", &fastdec::eval_base, py::arg("z"));
  m.def("eval_reference", &fastdec::eval_reference, py::arg("n"), py::arg("z"));
  m.def("eval_anchored",
        [](long degreeParam, const geometry::AnchoredSquare& square, Complex z) {
          return fastdec::eval_anchored({degreeParam, square}, z);
        },
        py::arg("degree_param"), py::arg("square"), py::arg("z"));
  m.def("eval_bowtie", &fastdec::eval_bowtie, py::arg("n"), py::arg("zeta"), py::arg("z"),
        py::arg("rotation"), py::arg("half_side"));

  py::class_<fastdec::DecayProbe>(m, "DecayProbe")
      .def_readonly("epsilon", &fastdec::DecayProbe::epsilon)
      .def_readonly("c_hat", &fastdec::DecayProbe::cHat);

  py::class_<fastdec::BoundReport>(m, "BoundReport")
      .def_readonly("n", &fastdec::BoundReport::n)
      .def_readonly("sup_inner", &fastdec::BoundReport::supInner)
      .def_readonly("sup_extended", &fastdec::BoundReport::supExtended)
      .def_readonly("probes", &fastdec::BoundReport::probes);

  m.def("certify_bounds", &fastdec::certify_bounds, py::arg("n"), py::arg("grid_density"));

  // ---- lightning ----
  py::class_<lightning::LightningScheme>(m, "LightningScheme")
      .def_readonly("n", &lightning::LightningScheme::n)
      .def_readonly("sigma", &lightning::LightningScheme::sigma)
      .def_readonly("poles", &lightning::LightningScheme::poles)
      .def_readonly("nodes", &lightning::LightningScheme::nodes)
      .def_readonly("epsilon_split", &lightning::LightningScheme::epsilonSplit);

  m.def("build_scheme", &lightning::build_scheme, py::arg("n"), py::arg("sigma"));
  m.def("eval_phi", &lightning::eval_phi, py::arg("scheme"), py::arg("z"));

  py::class_<lightning::SlitFunction>(m, "SlitFunction")
      .def(py::init([](std::function<Complex(Complex)> boundary,
                       std::function<Complex(double)> jump, double holder) {
             lightning::SlitFunction f;
             f.boundaryValue = std::move(boundary);
             f.jump = std::move(jump);
             f.holderExponent = holder;
             return f;
           }),
           py::arg("boundary_value"), py::arg("jump"), py::arg("holder_exponent"))
      .def_readonly("holder_exponent", &lightning::SlitFunction::holderExponent)
      .def("boundary_value",
           [](const lightning::SlitFunction& f, Complex z) { return f.boundaryValue(z); })
      .def("jump", [](const lightning::SlitFunction& f, double t) { return f.jump(t); });

  m.def("make_target", &targets::make, py::arg("id"));
  m.def("target_catalog", [] { return targets::catalog(); });

  py::class_<lightning::QuadratureRule>(m, "QuadratureRule")
      .def_readonly("nodes", &lightning::QuadratureRule::nodes)
      .def_readonly("weights", &lightning::QuadratureRule::weights)
      .def_readonly("nodes_per_panel", &lightning::QuadratureRule::nodesPerPanel)
      .def_property_readonly("panel_count", [](const lightning::QuadratureRule& r) {
        return r.panels.size();
      });

  m.def("slit_quadrature", &lightning::slit_quadrature, py::arg("min_scale"),
        py::arg("nodes_per_panel"));
  m.def("eval_kernel_q", &lightning::eval_kernel_q, py::arg("scheme"),
        py::arg("fastdec_degree"), py::arg("square"), py::arg("zeta"), py::arg("z"));
  m.def("circular_part", &lightning::circular_part, py::arg("target"), py::arg("domain"),
        py::arg("degree"));

  py::class_<lightning::RationalApproximant>(m, "RationalApproximant")
      .def_property_readonly("scheme", &lightning::RationalApproximant::scheme)
      .def_property_readonly("circular_coeffs",
                             &lightning::RationalApproximant::circularCoeffs)
      .def_property_readonly("degree_budget", &lightning::RationalApproximant::degreeBudget)
      .def_property_readonly("slit_order", &lightning::RationalApproximant::slitOrder)
      .def_property_readonly("circular_degree",
                             &lightning::RationalApproximant::circularDegree)
      .def("metadata", [](const lightning::RationalApproximant& a) {
        return lightning::metadata(a).dump();
      });

  m.def("build_approximant", &lightning::build_approximant, py::arg("target"),
        py::arg("domain"), py::arg("n"), py::arg("sigma") = 2.0);
  m.def("evaluate", &lightning::evaluate, py::arg("approximant"), py::arg("z"));

  // ---- minimax ----
  py::class_<minimax::MinimaxProblem>(m, "MinimaxProblem")
      .def(py::init([](std::vector<Complex> samples, std::vector<Complex> values, int degree,
                       int maxIterations, double oscillationTol) {
             minimax::MinimaxProblem p;
             p.samples = std::move(samples);
             p.values = std::move(values);
             p.degree = degree;
             p.maxIterations = maxIterations;
             p.oscillationTol = oscillationTol;
             return p;
           }),
           py::arg("samples"), py::arg("values"), py::arg("degree"),
           py::arg("max_iterations") = 200, py::arg("oscillation_tol") = 1e-3);

  py::class_<minimax::MinimaxResult>(m, "MinimaxResult")
      .def_readonly("error_estimate", &minimax::MinimaxResult::errorEstimate)
      .def_readonly("converged", &minimax::MinimaxResult::converged)
      .def_readonly("iterations", &minimax::MinimaxResult::iterations)
      .def_readonly("weights", &minimax::MinimaxResult::weights)
      .def_readonly("weighted_error_trace", &minimax::MinimaxResult::weightedErrorTrace);

  m.def("solve_minimax", &minimax::solve_minimax, py::arg("problem"));
  m.def("eval_polynomial",
        [](const minimax::MinimaxResult& r, Complex z) { return eval_polynomial(r, z); },
        py::arg("result"), py::arg("z"));
  m.def("near_best_certificate", &minimax::near_best_certificate, py::arg("result"),
        py::arg("fine_points"), py::arg("fine_values"));

  // ---- analysis ----
  py::enum_<analysis::RateModel>(m, "RateModel")
      .value("EXP_SQRT", analysis::RateModel::ExpSqrt)
      .value("EXP_LINEAR", analysis::RateModel::ExpLinear);

  py::class_<analysis::RateFit>(m, "RateFit")
      .def_readonly("model", &analysis::RateFit::model)
      .def_readonly("slope", &analysis::RateFit::slope)
      .def_readonly("intercept", &analysis::RateFit::intercept)
      .def_readonly("r_squared", &analysis::RateFit::rSquared)
      .def_readonly("points_used", &analysis::RateFit::pointsUsed);

  m.def("fit_rate", &analysis::fit_rate, py::arg("points"), py::arg("model"));
  m.def("sup_error",
        [](const std::function<Complex(Complex)>& candidate,
           const std::function<Complex(Complex)>& reference,
           const geometry::EvaluationGrid& grid) {
          return analysis::sup_error(candidate, reference, grid);
        },
        py::arg("candidate"), py::arg("reference"), py::arg("grid"));

  py::class_<analysis::ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("n", &analysis::ConvergenceRow::n)
      .def_readonly("boundary_error", &analysis::ConvergenceRow::boundaryError)
      .def_readonly("interior_errors", &analysis::ConvergenceRow::interiorErrors);

  py::class_<analysis::ConvergenceTable>(m, "ConvergenceTable")
      .def_readonly("rows", &analysis::ConvergenceTable::rows)
      .def_readonly("interior_labels", &analysis::ConvergenceTable::interiorLabels)
      .def_property_readonly("boundary_fit",
                             [](const analysis::ConvergenceTable& t) {
                               return t.boundaryFit ? py::cast(*t.boundaryFit)
                                                    : py::object(py::none());
                             })
      .def("to_csv", [](const analysis::ConvergenceTable& t) { return analysis::to_csv(t); });

  m.def("convergence_sweep",
        [](const std::string& targetId, double rho, double theta, double sigma,
           std::vector<long> nValues, int boundaryCount) {
          analysis::SweepConfig config;
          config.domain = geometry::SectorDomain(rho, theta);
          config.target = targets::make(targetId);
          config.targetLabel = targetId;
          config.nValues = std::move(nValues);
          config.sigma = sigma;
          config.boundaryCount = boundaryCount;
          config.interiorLabels = {"annular_sector"};
          config.interiorGrids = {geometry::polar_box_grid(0.1, 0.25, 0.39269908169872414,
                                                           10, 15)};
          return analysis::convergence_sweep(config);
        },
        py::arg("target"), py::arg("rho") = 0.5, py::arg("theta") = 0.78539816339744831,
        py::arg("sigma") = 2.0, py::arg("n_values") = std::vector<long>{16, 36, 64},
        py::arg("boundary_grid") = 300);
}
