// Python bindings for the main operations: exact counts, packing and
// covering bounds, constructions, oracles, and table reproduction.
// Arbitrary-precision integers cross the boundary as Python ints (via
// decimal strings); exact rationals as "p/q" strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ssc/code.hpp"
#include "ssc/constructions.hpp"
#include "ssc/covering.hpp"
#include "ssc/oracle.hpp"
#include "ssc/packing.hpp"
#include "ssc/tables.hpp"

namespace py = pybind11;
using namespace ssc;

namespace {

py::int_ to_int(const BigCount& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

std::string to_str(const mpq_class& v) { return v.get_str(); }

Metric metric_arg(const std::string& name) {
    if (name == "subspace") return Metric::subspace;
    if (name == "injection") return Metric::injection;
    throw py::value_error("metric must be 'subspace' or 'injection'");
}

py::dict interval_dict(const BoundInterval& b) {
    py::dict d;
    d["lower"] = to_int(b.lower);
    d["upper"] = to_int(b.upper);
    d["lower_provenance"] = b.lower_provenance;
    d["upper_provenance"] = b.upper_provenance;
    return d;
}

} // namespace

PYBIND11_MODULE(_sscode, m) {
    m.doc() = "subspace-code bounds, constructions, and brute-force oracles";

    m.def("gaussian_binomial",
          [](unsigned long q, uint32_t n, int64_t r) {
              return to_int(gaussian_binomial(q, n, r));
          },
          py::arg("q"), py::arg("n"), py::arg("r"));

    m.def("projective_space_size",
          [](unsigned long q, uint32_t n) {
              return to_int(projective_space_size(q, n));
          },
          py::arg("q"), py::arg("n"));

    m.def("pair_count",
          [](unsigned long q, uint32_t n, uint32_t r, uint32_t s, uint32_t d,
             const std::string& metric) {
              return to_int(metric_arg(metric) == Metric::subspace
                                ? n_subspace(q, n, r, s, d)
                                : n_injection(q, n, r, s, d));
          },
          py::arg("q"), py::arg("n"), py::arg("r"), py::arg("s"), py::arg("d"),
          py::arg("metric") = "subspace");

    m.def("ball_volume",
          [](unsigned long q, uint32_t n, uint32_t r, uint32_t t,
             const std::string& metric) {
              return to_int(ball_volume(q, n, r, t, metric_arg(metric)));
          },
          py::arg("q"), py::arg("n"), py::arg("r"), py::arg("t"),
          py::arg("metric") = "subspace");

    m.def("packing_bounds",
          [](unsigned long q, uint32_t n, uint32_t d, const std::string& metric) {
              return interval_dict(metric_arg(metric) == Metric::subspace
                                       ? subspace_packing_bounds(q, n, d)
                                       : injection_packing_bounds(q, n, d));
          },
          py::arg("q"), py::arg("n"), py::arg("d"), py::arg("metric") = "subspace");

    m.def("cdc_bounds",
          [](unsigned long q, uint32_t n, uint32_t r, uint32_t d) {
              return interval_dict(cdc_bounds(q, n, r, d));
          },
          py::arg("q"), py::arg("n"), py::arg("r"), py::arg("d"));

    m.def("covering_bounds",
          [](unsigned long q, uint32_t n, uint32_t rho, const std::string& metric,
             bool ilp) {
              CoveringBoundReport r = covering_bounds(q, n, rho, metric_arg(metric), ilp);
              py::dict d;
              d["lower"] = to_int(r.lower);
              d["upper"] = to_int(r.upper);
              d["lp_value"] = to_str(r.lp_value);
              if (r.ilp_value) d["ilp_value"] = to_int(*r.ilp_value);
              d["lower_provenance"] = r.lower_provenance;
              d["upper_provenance"] = r.upper_provenance;
              return d;
          },
          py::arg("q"), py::arg("n"), py::arg("rho"), py::arg("metric") = "subspace",
          py::arg("ilp") = false);

    m.def("asymptotic_rate",
          [](const std::string& kind, const std::string& dprime,
             const std::string& rprime) {
              RateQuery query;
              query.kind = kind == "a_S"       ? RateQuery::Kind::a_S
                           : kind == "a_S_cdc" ? RateQuery::Kind::a_S_cdc
                           : kind == "a_I"     ? RateQuery::Kind::a_I
                           : kind == "a_I_cdc" ? RateQuery::Kind::a_I_cdc
                           : kind == "k_S"     ? RateQuery::Kind::k_S
                           : kind == "k_I"
                               ? RateQuery::Kind::k_I
                               : throw py::value_error("unknown rate kind: " + kind);
              if (query.dprime.set_str(dprime, 10) != 0)
                  throw py::value_error("bad rational: " + dprime);
              if (query.rprime.set_str(rprime, 10) != 0)
                  throw py::value_error("bad rational: " + rprime);
              query.dprime.canonicalize();
              query.rprime.canonicalize();
              return to_str(asymptotic_rate(query));
          },
          py::arg("kind"), py::arg("dprime"), py::arg("rprime") = "0");

    m.def("reproduce_table",
          [](int which) {
              TableReport rep = reproduce_table(which);
              py::list rows;
              for (const auto& r : rep.rows) {
                  py::dict row;
                  row["d"] = r.d;
                  row["published_lower"] = to_int(r.published_lower_refined);
                  row["published_upper"] = to_int(r.published_upper);
                  row["our_lower"] = to_int(r.our_lower);
                  row["our_upper"] = to_int(r.our_upper);
                  row["lower_relation"] = relation_name(r.lower_relation);
                  row["upper_relation"] = relation_name(r.upper_relation);
                  row["ok"] = r.lower_ok && r.upper_ok;
                  rows.append(row);
              }
              py::dict d;
              d["table"] = rep.which;
              d["ok"] = rep.ok;
              d["rows"] = rows;
              return d;
          },
          py::arg("which"));

    m.def("construct",
          [](const std::string& name, unsigned long q, uint32_t n, uint32_t r,
             uint32_t d, uint32_t rho, const std::string& metric, uint64_t limit,
             const std::string& output) {
              Code code;
              if (name == "kk") code = kk_code(q, n, r, d, limit);
              else if (name == "layered")
                  code = layered_packing_code(q, n, d, metric_arg(metric), limit);
              else if (name == "union") code = grassmann_union_code(q, n, rho, limit);
              else if (name == "greedy")
                  code = greedy_cover(q, n, rho, metric_arg(metric), limit);
              else if (name == "trivial") code = trivial_covering_code(q, n);
              else throw py::value_error("unknown construction: " + name);
              if (!output.empty()) write_code_file(code, output);
              py::dict info;
              info["size"] = (uint64_t)code.size();
              info["construction"] = code.meta.construction;
              if (code.meta.min_distance) info["min_distance"] = *code.meta.min_distance;
              if (code.meta.covering_radius)
                  info["covering_radius"] = *code.meta.covering_radius;
              return info;
          },
          py::arg("name"), py::arg("q"), py::arg("n"), py::arg("r") = 0,
          py::arg("d") = 0, py::arg("rho") = 0, py::arg("metric") = "subspace",
          py::arg("limit") = (uint64_t)100000000, py::arg("output") = "");

    m.def("code_min_distance",
          [](const std::string& path, const std::string& metric) {
              Code code = read_code_file(path);
              return brute_min_distance(code, metric_arg(metric));
          },
          py::arg("path"), py::arg("metric") = "subspace");

    m.def("code_covering_radius",
          [](const std::string& path, const std::string& metric, uint64_t limit) {
              Code code = read_code_file(path);
              return brute_covering_radius(code, metric_arg(metric), limit);
          },
          py::arg("path"), py::arg("metric") = "subspace",
          py::arg("limit") = (uint64_t)100000000);

    m.def("max_packing",
          [](unsigned long q, uint32_t n, uint32_t d, const std::string& metric) {
              return to_int(brute_max_packing(q, n, d, metric_arg(metric)));
          },
          py::arg("q"), py::arg("n"), py::arg("d"), py::arg("metric") = "subspace");

    // Translators run newest-first, so the base goes first and the derived
    // resource-limit errors shadow it.
    py::register_exception<Error>(m, "SscError");
    py::register_exception<EnumerationTooLarge>(m, "EnumerationTooLarge");
    py::register_exception<NodeBudgetExceeded>(m, "NodeBudgetExceeded");
}
