#include <esb/betti.hpp>
#include <esb/binomial.hpp>
#include <esb/complex.hpp>
#include <esb/empty_simplices.hpp>
#include <esb/errors.hpp>
#include <esb/homology.hpp>
#include <esb/monomial_ideal.hpp>
#include <esb/vectors.hpp>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

// Python int <-> cpp_int through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<esb::Integer> {
  PYBIND11_TYPE_CASTER(esb::Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = esb::Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const esb::Integer& x, return_value_policy, handle) {
    return PyLong_FromString(x.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using esb::Integer;
using esb::IntVector;
using Table = std::map<std::pair<long, long>, Integer>;

Table table(const esb::BettiTable& t) { return t.entries(); }

py::dict check(const esb::CheckResult& r) {
  py::dict out;
  out["ok"] = r.ok;
  out["index"] = r.index ? py::cast(*r.index) : py::none();
  out["reason"] = r.reason;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bounds on graded Betti numbers and empty simplices of simplicial polytopes";

  auto error = py::register_exception<esb::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<esb::ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<esb::PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<esb::SizeLimitError>(m, "SizeLimitError", error.ptr());
  py::register_exception<esb::BoundViolation>(m, "BoundViolation", error.ptr());

  // binomial coefficients and Macaulay operators
  m.def("binom", &esb::binom, py::arg("a"), py::arg("j"));
  m.def(
      "binomial_expansion",
      [](const Integer& b, long d) {
        const auto expansion = esb::binomial_expansion(b, d);
        std::vector<std::pair<Integer, long>> out;
        for (const auto& t : expansion.terms()) out.emplace_back(t.top, t.bottom);
        return out;
      },
      py::arg("b"), py::arg("d"), "[(m_d, d), (m_{d-1}, d-1), ...] with b = sum binom(m_k, k)");
  m.def("macaulay_shift", &esb::macaulay_shift, py::arg("b"), py::arg("d"), py::arg("j"));
  m.def("macaulay_upper", &esb::macaulay_upper, py::arg("b"), py::arg("d"));
  m.def("macaulay_lower", &esb::macaulay_lower, py::arg("b"), py::arg("d"));

  // face vectors
  m.def("is_o_sequence", [](const IntVector& s) { return check(esb::is_o_sequence(s)); }, py::arg("seq"));
  m.def("is_si_sequence", [](const IntVector& h) { return check(esb::is_si_sequence(h)); }, py::arg("h"));
  m.def(
      "f_to_h", [](const IntVector& f, long d) { return esb::f_to_h(esb::FVector(d, f)).entries(); }, py::arg("f"),
      py::arg("d"), "f = (f_{-1}, f_0, ..., f_{d-1})");
  m.def(
      "h_to_f", [](const IntVector& h, long d) { return esb::h_to_f(esb::HVector(h), d).entries(); }, py::arg("h"),
      py::arg("d"));
  m.def("h_to_g", [](const IntVector& h) { return esb::h_to_g(esb::HVector(h)).entries(); }, py::arg("h"));
  m.def(
      "g_to_h", [](const IntVector& g, long d) { return esb::g_to_h(esb::GVector(g), d).entries(); }, py::arg("g"),
      py::arg("d"));

  // Betti numbers
  m.def(
      "betti_bound",
      [](const IntVector& h, long n, long i, long d, bool max_growth) {
        return esb::betti_bound(esb::OSequence(h, max_growth), n, i, d);
      },
      py::arg("h"), py::arg("n"), py::arg("i"), py::arg("d"), py::arg("max_growth") = false,
      "beta_{i+1, i+d} of the lex-segment ideal with Hilbert function h in n variables");
  m.def(
      "betti_table_bound",
      [](const IntVector& h, long n, bool max_growth) {
        return table(esb::betti_table_bound(esb::OSequence(h, max_growth), n));
      },
      py::arg("h"), py::arg("n"), py::arg("max_growth") = false);
  m.def("lex_betti_single_degree", &esb::lex_betti_single_degree, py::arg("b"), py::arg("d"), py::arg("n"),
        py::arg("i"));
  m.def(
      "linear_resolution_betti",
      [](const std::function<Integer(long)>& hilbert, long d, long n, long i) {
        return esb::linear_resolution_betti(hilbert, d, n, i);
      },
      py::arg("hilbert"), py::arg("d"), py::arg("n"), py::arg("i"));
  m.def(
      "gorenstein_wlp_bound",
      [](const IntVector& h, long n, long dim, long i, long j) {
        return esb::gorenstein_wlp_bound(esb::HVector(h), n, dim, i, j);
      },
      py::arg("h"), py::arg("n"), py::arg("dim"), py::arg("i"), py::arg("j"));
  m.def(
      "gorenstein_wlp_table",
      [](const IntVector& h, long n, long dim) { return table(esb::gorenstein_wlp_table(esb::HVector(h), n, dim)); },
      py::arg("h"), py::arg("n"), py::arg("dim"));

  // empty simplices
  auto gv = [](const IntVector& g) { return esb::GVector(g); };
  m.def(
      "generator_degree_bound", [gv](const IntVector& g, long d, long j) { return esb::generator_degree_bound(gv(g), d, j); },
      py::arg("g"), py::arg("d"), py::arg("j"));
  m.def(
      "empty_dimension_bound",
      [gv](const IntVector& g, long d, long dim) { return esb::empty_dimension_bound(gv(g), d, dim); }, py::arg("g"),
      py::arg("d"), py::arg("dim"));
  m.def(
      "cumulative_bound", [gv](const IntVector& g, long d, long k) { return esb::cumulative_bound(gv(g), d, k); },
      py::arg("g"), py::arg("d"), py::arg("k"));
  m.def("total_bound", [gv](const IntVector& g) { return esb::total_bound(gv(g)); }, py::arg("g"));
  m.def("vertex_count_bound", &esb::vertex_count_bound, py::arg("g1"), py::arg("d"), py::arg("k"));
  m.def("dimension_free_bound", &esb::dimension_free_bound, py::arg("g1"), py::arg("k"));
  m.def("gk_bound", &esb::gk_bound, py::arg("b"), py::arg("k"), py::arg("j"), py::arg("d"));
  m.def("gk_dimension_free_bound", &esb::gk_dimension_free_bound, py::arg("b"), py::arg("k"), py::arg("j"));
  m.def(
      "bound_report",
      [gv](const IntVector& g, long d) {
        const auto r = esb::bound_report(gv(g), d);
        py::dict out;
        out["d"] = r.d;
        out["g"] = r.g.entries();
        out["per_degree"] = r.per_degree;
        out["per_dimension"] = r.per_dimension();
        out["cumulative"] = r.cumulative;
        out["total"] = r.total;
        out["vanishing_range"] = r.vanishing_range ? py::cast(*r.vanishing_range) : py::none();
        return out;
      },
      py::arg("g"), py::arg("d"));

  // oracles
  py::class_<esb::SimplicialComplex>(m, "SimplicialComplex")
      .def(py::init<int, const std::vector<std::vector<int>>&>(), py::arg("n_vertices"), py::arg("facets"),
           "vertices are 0-based")
      .def_property_readonly("n_vertices", &esb::SimplicialComplex::n_vertices)
      .def_property_readonly("facets", &esb::SimplicialComplex::facet_lists)
      .def_property_readonly("dimension", &esb::SimplicialComplex::dimension)
      .def("f_vector", [](const esb::SimplicialComplex& c) { return esb::f_vector(c).entries(); })
      .def("minimal_nonfaces", [](const esb::SimplicialComplex& c) { return esb::minimal_nonfaces(c); })
      .def(
          "reduced_homology",
          [](const esb::SimplicialComplex& c, long characteristic, int vertex_limit) {
            return esb::reduced_homology_ranks(c, {characteristic, vertex_limit, 1});
          },
          py::arg("characteristic") = 0, py::arg("vertex_limit") = esb::kDefaultVertexLimit)
      .def(
          "hochster_betti",
          [](const esb::SimplicialComplex& c, long characteristic, int vertex_limit, unsigned threads) {
            py::gil_scoped_release release;
            return table(esb::hochster_betti(c, {characteristic, vertex_limit, threads}));
          },
          py::arg("characteristic") = 0, py::arg("vertex_limit") = esb::kDefaultVertexLimit, py::arg("threads") = 1)
      .def("__repr__", [](const esb::SimplicialComplex& c) {
        return "SimplicialComplex(n_vertices=" + std::to_string(c.n_vertices()) +
               ", facets=" + std::to_string(c.facets().size()) + ")";
      });

  m.def("cyclic_polytope_boundary", &esb::cyclic_polytope_boundary, py::arg("n"), py::arg("d"));
  m.def("cross_polytope_boundary", &esb::cross_polytope_boundary, py::arg("d"));
  m.def("polygon_boundary", &esb::polygon_boundary, py::arg("n"));
  m.def("simplex_boundary", &esb::simplex_boundary, py::arg("d"));

  m.def(
      "lex_segment_ideal",
      [](const IntVector& h, int n, bool max_growth, std::size_t generator_limit) {
        return esb::lex_segment_ideal(esb::OSequence(h, max_growth), n, generator_limit).generators();
      },
      py::arg("h"), py::arg("n"), py::arg("max_growth") = false,
      py::arg("generator_limit") = esb::kDefaultGeneratorLimit, "minimal generators as exponent vectors");
  m.def(
      "is_stable", [](int n, const std::vector<esb::Monomial>& gens) { return esb::is_stable(esb::MonomialIdeal(n, gens)); },
      py::arg("n"), py::arg("gens"));
  m.def(
      "eliahou_kervaire_betti",
      [](int n, const std::vector<esb::Monomial>& gens) {
        return table(esb::eliahou_kervaire_betti(esb::MonomialIdeal(n, gens)));
      },
      py::arg("n"), py::arg("gens"));
}
