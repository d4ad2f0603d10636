#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bshm/bshm_core.hpp"
#include "bshm/constructions.hpp"
#include "bshm/error.hpp"
#include "bshm/param_rules.hpp"
#include "bshm/pds.hpp"
#include "bshm/pm_matrix.hpp"
#include "bshm/search.hpp"
#include "bshm/tables.hpp"
#include "bshm/z2_algebra.hpp"

namespace py = pybind11;
using namespace bshm;

namespace {

py::dict srg_dict(const SrgParams& g) {
  py::dict d;
  d["v"] = g.v;
  d["k"] = g.k;
  d["lambda"] = g.lambda;
  d["mu"] = g.mu;
  return d;
}

py::dict cert_dict(const BshmCertificate& c) {
  py::dict d;
  d["n"] = c.n;
  d["ell"] = c.ell;
  d["rows"] = c.rows.indices();
  d["a"] = c.a;
  d["b"] = c.b;
  d["kind"] = kind_name(c.kind);
  d["k_a"] = c.k_a;
  d["graph"] = c.graph ? py::object(srg_dict(*c.graph)) : py::object(py::none());
  d["primitive"] = c.primitive;
  d["allones_row"] = allones_name(c.allones_row);
  d["trivial"] = c.trivial;
  return d;
}

py::dict pds_dict(const PdsParams& p) {
  py::dict d;
  d["v"] = p.v;
  d["ell"] = p.ell;
  d["alpha"] = p.alpha;
  d["beta"] = p.beta;
  d["a"] = p.a;
  d["b"] = p.b;
  d["contains_identity"] = p.contains_identity;
  d["gamma"] = p.gamma;
  return d;
}

py::dict classification_dict(const Classification& c) {
  py::dict d;
  if (const auto* inf = std::get_if<Infeasible>(&c)) {
    d["feasible"] = false;
    d["rule"] = inf->rule;
    d["detail"] = inf->detail;
    return d;
  }
  const auto& p = std::get<ParamClass>(c);
  d["feasible"] = true;
  d["class"] = class_name(p.id);
  d["params"] = py::make_tuple(p.n, p.ell, p.a, p.b);
  py::list graphs;
  for (const auto& g : p.graph_options) graphs.append(srg_dict(g));
  d["graphs"] = graphs;
  d["switched"] = p.switched;
  py::dict checks;
  for (const auto& ic : p.integrality) checks[py::str(ic.name)] = ic.integral;
  d["integrality"] = checks;
  if (p.r) d["r"] = p.r, d["s"] = p.s;
  return d;
}

py::tuple construction_tuple(const Construction& c) {
  return py::make_tuple(c.h, c.rows.indices(), cert_dict(c.cert));
}

RowSubset rows_for(const PmMatrix& h, const std::vector<std::size_t>& rows) { return RowSubset(rows, h.rows()); }

std::vector<std::vector<int>> to_lists(const PmMatrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
  return out;
}

PmMatrix from_lists(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) fail(ErrorCode::InvalidArgument, "empty matrix");
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) fail(ErrorCode::InvalidArgument, "ragged rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return PmMatrix::from_signs(rows.size(), rows[0].size(), flat);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Balanced splittable Hadamard matrices";

  auto err = py::register_exception<Error>(m, "BshmError", PyExc_ValueError);
  (void)err;

  py::class_<PmMatrix>(m, "PmMatrix")
      .def(py::init(&from_lists), py::arg("rows"))
      .def_static("parse", py::overload_cast<const std::string&>(&parse_matrix))
      .def_property_readonly("shape", [](const PmMatrix& a) { return py::make_tuple(a.rows(), a.cols()); })
      .def("at", &PmMatrix::at)
      .def("tolist", &to_lists)
      .def("format", &format_matrix)
      .def("is_hadamard", &is_hadamard)
      .def("normalize_first_row", &normalize_first_row)
      .def("kron", [](const PmMatrix& a, const PmMatrix& b) { return kronecker(a, b); })
      .def("column_dot", [](const PmMatrix& a, const std::vector<std::size_t>& rows, std::size_t i,
                            std::size_t j) { return column_dot(a, rows_for(a, rows), i, j); })
      .def("__eq__", &PmMatrix::operator==)
      .def("__repr__", [](const PmMatrix& a) {
        return "<PmMatrix " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ">";
      });

  m.def("sylvester", &sylvester, py::arg("r"));
  m.def("character_table", &character_table, py::arg("r"));
  m.def("hadamard_matrix", &hadamard_matrix, py::arg("n"));
  m.def(
      "paley_hadamard",
      [](std::int64_t q, int kind) { return paley_hadamard(q, kind == 2 ? PaleyKind::II : PaleyKind::I); },
      py::arg("q"), py::arg("kind") = 1);

  m.def("walsh_spectrum", [](unsigned r, const std::vector<std::uint32_t>& d) { return walsh_spectrum(Z2Subset(r, d)); },
        py::arg("rank"), py::arg("elements"));
  m.def("verify_pds", [](unsigned r, const std::vector<std::uint32_t>& d) { return pds_dict(verify_pds_char(Z2Subset(r, d))); },
        py::arg("rank"), py::arg("elements"));
  m.def(
      "verify_pds_definition",
      [](unsigned r, const std::vector<std::uint32_t>& d) { return pds_dict(verify_pds_definition(Z2Subset(r, d))); },
      py::arg("rank"), py::arg("elements"));
  m.def("bent_difference_set", [](unsigned mm) { return bent_difference_set(mm).elements(); }, py::arg("m"));
  m.def(
      "spread_union_pds",
      [](unsigned mm, unsigned s, std::vector<std::size_t> which) { return spread_union_pds(mm, s, std::move(which)).elements(); },
      py::arg("m"), py::arg("s"), py::arg("which") = std::vector<std::size_t>{});
  m.def(
      "search_difference_set",
      [](unsigned r, unsigned k, unsigned lambda) {
        std::vector<std::vector<std::uint32_t>> out;
        for (const auto& d : search_difference_set(r, k, lambda)) out.push_back(d.elements());
        return out;
      },
      py::arg("r"), py::arg("k"), py::arg("lambda_"));

  m.def(
      "verify_bshm", [](const PmMatrix& h, const std::vector<std::size_t>& rows) { return cert_dict(verify_bshm(h, rows_for(h, rows))); },
      py::arg("h"), py::arg("rows"));
  m.def(
      "srg_params",
      [](const PmMatrix& h, const std::vector<std::size_t>& rows, std::int64_t a) {
        return srg_dict(srg_params(associated_graph(h, rows_for(h, rows), a)));
      },
      py::arg("h"), py::arg("rows"), py::arg("a"));
  m.def(
      "add_allones_row", [](const PmMatrix& h, const std::vector<std::size_t>& rows) { return cert_dict(add_allones_row(h, rows_for(h, rows))); },
      py::arg("h"), py::arg("rows"));
  m.def(
      "remove_allones_row",
      [](const PmMatrix& h, const std::vector<std::size_t>& rows) { return cert_dict(remove_allones_row(h, rows_for(h, rows))); },
      py::arg("h"), py::arg("rows"));
  m.def(
      "to_regular_form",
      [](const PmMatrix& h, const std::vector<std::size_t>& rows, std::size_t pivot) {
        return to_regular_form(h, rows_for(h, rows), pivot);
      },
      py::arg("h"), py::arg("rows"), py::arg("pivot_row"));
  m.def(
      "extract_unbiased_mate",
      [](const PmMatrix& h, const std::vector<std::size_t>& rows) { return extract_unbiased_mate(h, rows_for(h, rows)); },
      py::arg("h"), py::arg("rows"));

  m.def("pds_to_bshm", [](unsigned r, const std::vector<std::uint32_t>& d) { return construction_tuple(pds_to_bshm(Z2Subset(r, d))); },
        py::arg("rank"), py::arg("elements"));
  m.def(
      "packing_to_multibshm",
      [](unsigned mm, const std::vector<std::vector<std::size_t>>& partition, std::size_t j) {
        auto mc = packing_to_multibshm(mm, partition, j);
        py::list certs;
        for (const auto& c : mc.certs) certs.append(cert_dict(c));
        py::list blocks;
        for (const auto& b : mc.blocks) blocks.append(b.indices());
        return py::make_tuple(mc.h, blocks, certs);
      },
      py::arg("m"), py::arg("partition"), py::arg("j"));
  m.def("construct_ns_n_n_0", [](const PmMatrix& hn, const PmMatrix& hs) { return construction_tuple(construct_ns_n_n_0(hn, hs)); });
  m.def("construct_b0", [](std::int64_t r, std::int64_t s) { return construction_tuple(construct_b0(r, s)); }, py::arg("r"), py::arg("s"));
  m.def("construct_bm1", [](std::int64_t r, std::int64_t s) { return construction_tuple(construct_bm1(r, s)); }, py::arg("r"), py::arg("s"));
  m.def(
      "b0_to_bm1",
      [](const PmMatrix& h, const std::vector<std::size_t>& rows) { return construction_tuple(b0_to_bm1(h, rows_for(h, rows))); },
      py::arg("h"), py::arg("rows"));

  m.def("classify_params", [](std::int64_t n, std::int64_t l, std::int64_t a, std::int64_t b) {
    return classification_dict(classify_params(n, l, a, b));
  });
  m.def(
      "table_tsv",
      [](int t, bool assume_conjecture, std::int64_t range_limit) {
        HadamardOraclePolicy p;
        p.assume_conjecture = assume_conjecture;
        p.range_limit = range_limit;
        return table_tsv(t, p);
      },
      py::arg("table"), py::arg("assume_conjecture") = true, py::arg("range_limit") = 668);
  m.def(
      "search_bshm_rows",
      [](const PmMatrix& h, std::size_t ell, std::optional<std::pair<std::int64_t, std::int64_t>> targets,
         std::size_t threads) {
        SearchOptions opt;
        opt.targets = targets;
        opt.threads = threads;
        py::list out;
        {
          py::gil_scoped_release release;
          auto rep = search_bshm_rows(h, ell, opt);
          py::gil_scoped_acquire acquire;
          for (const auto& hit : rep.hits) out.append(cert_dict(hit.cert));
        }
        return out;
      },
      py::arg("h"), py::arg("ell"), py::arg("targets") = py::none(), py::arg("threads") = 1);
}
