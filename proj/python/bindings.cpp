#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grasshilb/components.hpp"
#include "grasshilb/error.hpp"
#include "grasshilb/ideal.hpp"
#include "grasshilb/serialize.hpp"
#include "grasshilb/verify.hpp"

namespace py = pybind11;
using namespace grasshilb;

namespace {

std::vector<std::string> coefficient_strings(const HilbertPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

GradedIdeal ideal_from_text(std::size_t nvars, const std::vector<std::string>& generators) {
  std::vector<HomogeneousPoly> gens;
  for (const auto& g : generators) gens.push_back(parse_polynomial(g, nvars));
  return GradedIdeal(nvars, std::move(gens));
}

std::map<std::string, std::int64_t> sum_to_dict(const ClassSum& s) {
  std::map<std::string, std::int64_t> out;
  for (const auto& [p, c] : s.terms()) out.emplace(to_string(p), c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations for Hilbert schemes of hypersurfaces in linear subspaces of Grassmannians";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("hilbert_poly", [](int d, int dim) { return coefficient_strings(hilbert_poly(d, dim)); },
        py::arg("d"), py::arg("m"), "Coefficients of P_{d,m}(T), constant term first, as rational strings.");
  m.def("hilbert_poly_text", [](int d, int dim) { return to_string(hilbert_poly(d, dim)); },
        py::arg("d"), py::arg("m"));
  m.def("planar_curve_poly", [](int d) { return coefficient_strings(planar_curve_poly(d)); },
        py::arg("d"));

  m.def("component_report_json",
        [](int d, int k, int n, int dim) { return dump_canonical(to_json(component_count(d, k, n, dim))); },
        py::arg("d"), py::arg("k"), py::arg("n"), py::arg("m"));

  m.def("tangent_formula", &tangent_formula, py::arg("N"), py::arg("m"), py::arg("d"));
  m.def("tangent_oracle",
        [](int ambient, int dim, int d, std::uint64_t seed) {
          const HypersurfaceIdealSpec spec(ambient, dim,
                                           random_dense_form(static_cast<std::size_t>(dim) + 1, d, seed));
          return hom_dimension(spec.ideal(), 2 * d);
        },
        py::arg("N"), py::arg("m"), py::arg("d"), py::arg("seed") = 1);

  m.def("hilbert_function",
        [](std::size_t nvars, const std::vector<std::string>& gens, int e) {
          return hilbert_function(ideal_from_text(nvars, gens), e);
        },
        py::arg("nvars"), py::arg("generators"), py::arg("e"));
  m.def("hom_dimension",
        [](std::size_t nvars, const std::vector<std::string>& gens, int bound) {
          return hom_dimension(ideal_from_text(nvars, gens), bound);
        },
        py::arg("nvars"), py::arg("generators"), py::arg("bound"));

  m.def("plucker_relations",
        [](int k, int n) {
          std::vector<std::string> out;
          for (const auto& q : plucker_relations(GrassmannianContext(k, n))) out.push_back(to_string(q, "p"));
          return out;
        },
        py::arg("k"), py::arg("n"), "Relations in variables p0..pN (lexicographic k-subsets).");

  m.def("pieri",
        [](int k, int n, int h, const std::string& a) {
          const BoxContext box(k, n);
          return sum_to_dict(pieri(h, parse_partition(a, box), box));
        },
        py::arg("k"), py::arg("n"), py::arg("h"), py::arg("a"));
  m.def("lr_multiply",
        [](int k, int n, const std::string& a, const std::string& b) {
          const BoxContext box(k, n);
          return sum_to_dict(lr_multiply(parse_partition(a, box), parse_partition(b, box), box));
        },
        py::arg("k"), py::arg("n"), py::arg("a"), py::arg("b"));

  m.def("classify_json",
        [](const std::string& text, std::uint64_t seed) {
          Json j;
          try {
            j = Json::parse(text);
          } catch (const Json::exception& e) {
            throw Error(ErrorKind::Parse, e.what());
          }
          return dump_canonical(classify_report(classify_input_from_json(j), seed));
        },
        py::arg("text"), py::arg("seed") = 0x5eed);

  m.def("verify",
        [](const std::string& scope, std::uint64_t seed) {
          std::vector<std::tuple<int, std::string, bool, std::string, double>> out;
          for (const auto& r : run_acceptance(parse_scope(scope), seed))
            out.emplace_back(r.id, r.name, r.passed, r.detail, r.seconds);
          return out;
        },
        py::arg("scope") = "fast", py::arg("seed") = 42,
        py::call_guard<py::gil_scoped_release>());
}
