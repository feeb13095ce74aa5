#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jacobsthal/charsums.hpp"
#include "jacobsthal/cli.hpp"
#include "jacobsthal/curves.hpp"
#include "jacobsthal/errors.hpp"
#include "jacobsthal/quadforms.hpp"
#include "jacobsthal/verify.hpp"

namespace py = pybind11;
using namespace jacobsthal;

namespace {

CurveId curve_from_name(const std::string& name) {
  if (name == "e1") return CurveId::E1;
  if (name == "e2") return CurveId::E2;
  if (name == "x1") return CurveId::X1;
  if (name == "x2") return CurveId::X2;
  if (name == "congruent") return CurveId::Congruent;
  throw Error(Errc::InvalidArgument, "unknown curve '" + name + "'");
}

Theorem theorem_from_name(const std::string& name) {
  if (auto t = theorem_from_string(name)) return *t;
  throw Error(Errc::InvalidArgument, "unknown theorem '" + name + "'");
}

py::dict report_dict(const VerifyReport& r) {
  py::dict values;
  for (const auto& v : r.values) values[py::str(v.name)] = v.value;
  py::dict d;
  d["prime"] = r.p.value();
  d["theorem"] = std::string(to_string(r.theorem));
  d["holds"] = r.holds;
  d["values"] = values;
  d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_jacobsthal, m) {
  m.doc() = "Jacobsthal sums, prime representations and CM curve local factors";

  static py::handle error_type = py::exception<Error>(m, "JacobsthalError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object exc = error_type(e.what());  // an instance, so attributes can be set
      exc.attr("code") = std::string(to_string(e.code()));
      exc.attr("falsification") = is_falsification(e.code());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("legendre_symbol", [](int64_t a, uint64_t p) { return legendre_symbol(a, OddPrime(p)); },
        py::arg("a"), py::arg("p"));
  m.def("jacobi_symbol", &jacobi_symbol, py::arg("a"), py::arg("m"));
  m.def("sqrt_mod", [](uint64_t a, uint64_t p) {
    const OddPrime P(p);
    return sqrt_mod(FpElement(a, P)).value();
  }, py::arg("a"), py::arg("p"));
  m.def("least_nonresidue", [](uint64_t p) { return least_nonresidue(OddPrime(p)).value(); }, py::arg("p"));

  m.def("jacobsthal_sum", [](const std::vector<int64_t>& coeffs, uint64_t p) {
    return jacobsthal_sum(coeffs, OddPrime(p)).raw_sum;
  }, py::arg("coefficients"), py::arg("p"), "Raw sum; coefficients from the constant term up.");
  m.def("sum_A", [](uint64_t p) { return sum_A(OddPrime(p)).value; }, py::arg("p"));
  m.def("sum_B1", [](uint64_t p, uint64_t n) {
    const OddPrime P(p);
    return sum_B1(P, FpElement(n, P)).value;
  }, py::arg("p"), py::arg("n"));
  m.def("sum_B2", [](uint64_t p) { return sum_B2(OddPrime(p)).value; }, py::arg("p"));
  m.def("sum_classical", [](uint64_t p, int64_t n) { return sum_classical(OddPrime(p), n); },
        py::arg("p"), py::arg("n"));
  m.def("sum_cubic", [](uint64_t p, int64_t n) {
    const CubicSums s = sum_cubic(OddPrime(p), n);
    return std::pair{s.A, s.B};
  }, py::arg("p"), py::arg("n"));

  m.def("cornacchia", [](uint64_t p, int D) {
    const QuadRep r = cornacchia(OddPrime(p), D);
    return std::pair{r.a, r.b};
  }, py::arg("p"), py::arg("D"));
  m.def("cubic_rep", [](uint64_t p) {
    const CubicRep r = cubic_rep(OddPrime(p));
    return std::pair{r.A, r.B};
  }, py::arg("p"));

  m.def("count_points", [](const std::string& curve, uint64_t p, int degree) {
    return count_points(HyperellipticModel::named(curve_from_name(curve)), OddPrime(p), degree);
  }, py::arg("curve"), py::arg("p"), py::arg("extension_degree") = 1);
  m.def("local_factor", [](const std::string& curve, uint64_t p) {
    return local_factor(HyperellipticModel::named(curve_from_name(curve)), OddPrime(p)).coefficients;
  }, py::arg("curve"), py::arg("p"), "Coefficients c1..c2g.");
  m.def("kummer_character", [](uint64_t p, int k) { return kummer_character(OddPrime(p), k).exponent; },
        py::arg("p"), py::arg("k"), "Exponent e with chi_k = i^e.");

  m.def("verify", [](const std::string& theorem, uint64_t p) {
    return report_dict(run_theorem(theorem_from_name(theorem), QrTable(OddPrime(p))));
  }, py::arg("theorem"), py::arg("p"));
  m.def("scan", [](const std::vector<std::string>& names, uint64_t lo, uint64_t hi, unsigned jobs) {
    std::vector<Theorem> theorems;
    for (const auto& n : names) theorems.push_back(theorem_from_name(n));
    ScanOptions opts;
    opts.jobs = jobs;
    std::vector<RangeSummary> summaries;
    {
      py::gil_scoped_release release;
      summaries = scan_range(lo, hi, theorems, opts);
    }
    py::list out;
    for (const auto& s : summaries) {
      py::dict d;
      d["theorem"] = std::string(to_string(s.theorem));
      d["lo"] = s.lo;
      d["hi"] = s.hi;
      d["tested"] = s.tested;
      d["passed"] = s.passed;
      py::list failures;
      for (const auto& f : s.failures) failures.append(report_dict(f));
      d["failures"] = failures;
      out.append(d);
    }
    return out;
  }, py::arg("theorems"), py::arg("lo"), py::arg("hi"), py::arg("jobs") = 1);

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "jacobsthal");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Returns (exit_code, stdout, stderr).");
}
