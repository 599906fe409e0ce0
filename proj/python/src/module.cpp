#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pluri/capacity.hpp"
#include "pluri/envelope.hpp"
#include "pluri/extremal.hpp"
#include "pluri/foliation.hpp"
#include "pluri/ma_verify.hpp"
#include "pluri/metric_density.hpp"
#include "pluri/sphere_lift.hpp"
#include "pluri/suites.hpp"

namespace py = pybind11;
using namespace pluri;

namespace {

CPoint pt(const CVec& z) { return CPoint(z); }

Chart chartOf(const std::string& name) {
  if (name == "affine") return Chart::affine;
  if (name == "infinity") return Chart::infinity;
  throw py::value_error("chart must be 'affine' or 'infinity'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weighted extremal functions of R^n, sphere lifts and verification suites";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("v_kq", [](const CVec& z) { return vKQ(pt(z)); }, py::arg("z"),
        "Weighted extremal function of R^n with weight 1/2 log(1 + x^2).");
  m.def("weight_q", [](const CVec& z) { return weightQ(pt(z)).value; }, py::arg("z"),
        "1/2 log|1 + z^2| (-inf on 1 + z^2 = 0).");
  m.def("v_ball", [](const CVec& W) { return vBall(pt(W)); }, py::arg("w"),
        "Extremal function of the real unit ball.");
  m.def("lie_u", [](const CVec& Z) { return lieU(pt(Z)); }, py::arg("z"));
  m.def("lie_norm", [](const CVec& Z) { return lieNorm(pt(Z)); }, py::arg("z"));
  m.def("omega_extremal",
        [](const CVec& z, const std::string& chart) { return omegaExtremal(chartOf(chart), pt(z)); },
        py::arg("z"), py::arg("chart") = "affine");
  m.def("one_var_exact", &oneVarExact, py::arg("z"));

  m.def("lift",
        [](const CVec& z, double s) { return liftF(StripPoint(pt(z), s)).W().coords(); },
        py::arg("z"), py::arg("strip") = kDefaultStrip, "F(z) = (f, z f), f = (1 + z^2)^{-1/2}.");
  m.def("fullin_residual", [](const CVec& z, double s) { return fullinResidual(StripPoint(pt(z), s)); },
        py::arg("z"), py::arg("strip") = kDefaultStrip);

  m.def("baran_delta", &baranDeltaClosed, py::arg("x"), py::arg("y"));
  m.def(
      "baran_delta_numeric",
      [](const RVec& x, const RVec& y) {
        const DeltaEstimate d = baranDeltaNumeric([](const CPoint& p) { return vKQ(p); }, x, y);
        return py::make_tuple(d.value, d.converged);
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "metric_tensor",
      [](const RVec& x) {
        const MetricTensor t = metricTensorAt(x);
        return py::make_tuple(t.G, t.eigenvalues, t.detG);
      },
      py::arg("x"), "(G, ascending eigenvalues, det G) at x.");
  m.def("ma_density", [](const RVec& x) { return maDensity(x, static_cast<int>(x.size())).lambda; },
        py::arg("x"));
  m.def("total_mass", [](int n) { return totalMass(n).value; }, py::arg("n"));
  m.def("ball_density", [](const RVec& x) { return ballDensityPipeline(x).lambda; }, py::arg("x"));

  m.def(
      "maximality",
      [](const CVec& z, double step, bool richardson) {
        const MaxReport r = maximalityCheck(pt(z), {step, richardson});
        py::dict d;
        d["kernel_residual"] = r.kernelResidual;
        d["normalized_det"] = r.normalizedDet;
        d["min_eigenvalue"] = r.minEigenvalue;
        return d;
      },
      py::arg("z"), py::arg("step") = 1e-3, py::arg("richardson") = true);

  m.def(
      "linear_lower_bound",
      [](const CVec& z) {
        const EnvelopeCertificate c = linearFamilyLB(pt(z));
        return py::make_tuple(c.lowerBound, c.witness.factors.front());
      },
      py::arg("z"), "Best (1/1) log|1 - i a.z| over real unit a, with the witness a.");

  m.def(
      "alexander_sup",
      [](int n) {
        const CapacityResult r = alexanderSup(n);
        return py::make_tuple(r.supValue, r.capacity);
      },
      py::arg("n"));

  m.def("suite_names", &suiteNames);
  m.def(
      "run_suite",
      [](const std::string& name, int n, std::uint64_t seed, double tolScale) {
        if (!isSuite(name)) throw py::value_error("unknown suite: " + name);
        RunConfig cfg;
        cfg.n = n;
        cfg.seed = seed;
        cfg.tolScale = tolScale;
        SuiteResult r;
        {
          py::gil_scoped_release release;
          r = runSuite(name, cfg);
        }
        py::list checks;
        for (const Check& c : r.checks) {
          py::dict d;
          d["name"] = c.name;
          d["residual"] = c.residual;
          d["tolerance"] = c.tolerance;
          d["pass"] = c.pass;
          checks.append(d);
        }
        py::dict out;
        out["suite"] = r.name;
        out["pass"] = r.pass;
        out["error"] = r.error;
        out["checks"] = checks;
        return out;
      },
      py::arg("name"), py::arg("n") = 0, py::arg("seed") = 20261015, py::arg("tol_scale") = 1.0);
}
