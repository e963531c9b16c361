#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "trunclin/bounds.hpp"
#include "trunclin/cli.hpp"
#include "trunclin/data.hpp"
#include "trunclin/errors.hpp"
#include "trunclin/growth_analysis.hpp"
#include "trunclin/robust_oracle.hpp"
#include "trunclin/sign_coding.hpp"
#include "trunclin/training.hpp"

namespace py = pybind11;
using namespace trunclin;

namespace {

Dataset to_dataset(const std::vector<std::vector<double>>& xs, const std::vector<int>& ys) {
  if (xs.size() != ys.size()) throw DimensionMismatch("xs and ys differ in length");
  Dataset data(xs.empty() ? 0 : xs.front().size());
  for (std::size_t i = 0; i < xs.size(); ++i) data.add(xs[i], ys[i]);
  return data;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Truncated linear classifiers under sparse (l0) adversarial perturbations.";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);

  m.def("trunc_inner", [](std::vector<double> w, const std::vector<double>& x, std::size_t k) {
    return trunc_inner(WeightVector(std::move(w)), x, TruncationConfig(x.size(), k));
  }, py::arg("w"), py::arg("x"), py::arg("k"));
  m.def("tsum", [](const std::vector<double>& u, std::size_t k) { return tsum(u, TruncationConfig(u.size(), k)); },
        py::arg("u"), py::arg("k"));
  m.def("lower_sum", [](const std::vector<double>& u, std::size_t k) {
    return lower_sum(u, TruncationConfig(u.size(), k));
  }, py::arg("u"), py::arg("k"));
  m.def("upper_sum", [](const std::vector<double>& u, std::size_t k) {
    return upper_sum(u, TruncationConfig(u.size(), k));
  }, py::arg("u"), py::arg("k"));

  m.def("robust_misclassified", [](std::vector<double> w, const std::vector<double>& x, int y, std::size_t k) {
    return robust_misclassified(WeightVector(std::move(w)), x, y, TruncationConfig(x.size(), k));
  }, py::arg("w"), py::arg("x"), py::arg("y"), py::arg("k"));
  m.def("brute_force_robust", [](std::vector<double> w, const std::vector<double>& x, int y, std::size_t k) {
    return brute_force_robust(WeightVector(std::move(w)), x, y, TruncationConfig(x.size(), k));
  }, py::arg("w"), py::arg("x"), py::arg("y"), py::arg("k"));
  m.def("evaluate_robust", [](std::vector<double> w, const std::vector<double>& x, int y, std::size_t k) {
    const auto e = evaluate_robust(WeightVector(std::move(w)), x, y, TruncationConfig(x.size(), k));
    py::dict out;
    out["clean_value"] = e.clean_value;
    out["clean_sign"] = e.clean_sign;
    out["lo"] = e.lo;
    out["hi"] = e.hi;
    out["lo_attained"] = e.lo_attained;
    out["hi_attained"] = e.hi_attained;
    out["support_size"] = e.support_size;
    out["misclassified"] = e.misclassified;
    out["witness"] = e.witness ? py::cast(*e.witness) : py::none();
    return out;
  }, py::arg("w"), py::arg("x"), py::arg("y"), py::arg("k"));

  m.def("encode", [](std::vector<double> w, const std::vector<double>& x, std::size_t k) {
    const auto code = encode(WeightVector(std::move(w)), x, TruncationConfig(x.size(), k));
    return py::make_tuple(code.alpha_signs, code.beta_signs);
  }, py::arg("w"), py::arg("x"), py::arg("k"), "(alpha_signs, beta_signs)");

  m.def("theorem1_bound", [](std::uint64_t n, std::size_t d, std::size_t k, double delta) {
    const auto r = theorem1_bound(n, d, k, delta);
    py::dict out;
    out["n"] = r.n;
    out["d"] = r.d;
    out["k"] = r.k;
    out["delta"] = r.delta;
    out["c"] = r.c;
    out["complexity_term"] = r.complexity_term;
    out["confidence_term"] = r.confidence_term;
    out["total"] = r.total;
    return out;
  }, py::arg("n"), py::arg("d"), py::arg("k"), py::arg("delta") = 0.05);
  m.def("sample_complexity", &sample_complexity, py::arg("epsilon"), py::arg("delta"), py::arg("d"), py::arg("k"));
  m.def("universal_constant", &universal_constant);
  m.def("log_growth_bound_T", [](std::uint64_t n, std::size_t d, std::size_t k) {
    return growth_bound_T(n, d, k).log_value;
  }, py::arg("n"), py::arg("d"), py::arg("k"));

  m.def("sample_mixture", [](std::vector<double> mu, std::vector<double> var, std::size_t n, std::uint64_t seed) {
    const Dataset data = sample_mixture({std::move(mu), std::move(var), n, seed});
    std::vector<std::vector<double>> xs;
    for (std::size_t i = 0; i < data.size(); ++i) xs.emplace_back(data.x(i).begin(), data.x(i).end());
    return py::make_tuple(xs, std::vector<int>(data.labels().begin(), data.labels().end()));
  }, py::arg("mu"), py::arg("variance"), py::arg("n"), py::arg("seed") = 0, "(xs, ys)");

  m.def("train", [](const std::vector<std::vector<double>>& xs, const std::vector<int>& ys, std::size_t k,
                    std::size_t epochs, double step, std::size_t restarts, std::uint64_t seed) {
    const Dataset data = to_dataset(xs, ys);
    TrainConfig tc;
    tc.epochs = epochs;
    tc.initial_step = step;
    tc.restarts = restarts;
    tc.seed = seed;
    const auto r = train(data, TruncationConfig(data.dim(), k), tc);
    return py::make_tuple(std::vector<double>(r.model.w.values().begin(), r.model.w.values().end()),
                          r.best_empirical_robust_loss);
  }, py::arg("xs"), py::arg("ys"), py::arg("k"), py::arg("epochs") = 100, py::arg("step") = 1.0,
     py::arg("restarts") = 1, py::arg("seed") = 0, "(w, best_empirical_robust_loss)");
  m.def("empirical_robust_loss", [](std::vector<double> w, const std::vector<std::vector<double>>& xs,
                                    const std::vector<int>& ys, std::size_t k) {
    const Dataset data = to_dataset(xs, ys);
    return empirical_robust_loss(WeightVector(std::move(w)), data, TruncationConfig(data.dim(), k));
  }, py::arg("w"), py::arg("xs"), py::arg("ys"), py::arg("k"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "(exit_code, stdout, stderr)");
}
