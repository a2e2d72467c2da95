#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "blockcheck/abelian2.hpp"
#include "blockcheck/blockinv.hpp"
#include "blockcheck/centralj.hpp"
#include "blockcheck/latquot.hpp"
#include "blockcheck/matgrp.hpp"
#include "blockcheck/rootsys.hpp"
#include "blockcheck/verify.hpp"
#include "blockcheck/version.hpp"
#include "blockcheck/weylorb.hpp"

namespace py = pybind11;
using json = nlohmann::json;

namespace {

namespace bc = blockcheck;

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

bc::rootsys::RootSystem build(const std::string& type_letter, int rank) {
  if (type_letter.size() != 1)
    throw std::invalid_argument("type must be a single letter A..G");
  return bc::rootsys::build_root_system(
      bc::rootsys::make_lie_type(type_letter[0], rank));
}

py::dict shape_dict(const bc::matgrp::TwoGroupShape& s) {
  py::dict d;
  d["label"] = bc::matgrp::to_string(s.label);
  d["order"] = s.order;
  d["type"] = s.abelian_type;
  return d;
}

}  // namespace

PYBIND11_MODULE(_blockcheck, m) {
  m.doc() =
      "Exact verification of root-system, lattice, matrix-group, and block "
      "invariants";
  m.attr("__version__") = bc::kVersion;

  m.def(
      "classify_central",
      [](const std::string& type, int rank) {
        const auto rs = build(type, rank);
        std::vector<std::vector<int>> out;
        for (const auto& s : bc::centralj::classify_central_orthogonal(rs))
          out.push_back(s.indices);
        return out;
      },
      py::arg("type"), py::arg("rank"),
      "All nonempty pairwise-orthogonal simple-root subsets whose involution "
      "product is central, as sorted 1-based index lists.");

  m.def(
      "lattice_quotient",
      [](const std::string& type, int rank, std::vector<int> subset) {
        const auto rs = build(type, rank);
        if (subset.empty())
          for (int i = 1; i <= rank; ++i) subset.push_back(i);
        const auto q = bc::latquot::quotient_invariants(
            rs, bc::centralj::make_subset(subset, rank));
        py::dict d;
        py::list factors;
        for (const auto& f : q.invariant_factors)
          factors.append(py::int_(py::str(f.str())));
        d["factors"] = factors;
        d["free_rank"] = q.free_rank;
        d["torsion_free"] = q.torsion_free;
        return d;
      },
      py::arg("type"), py::arg("rank"), py::arg("subset") = std::vector<int>{},
      "Invariant factors (> 1) and free rank of the weight lattice modulo the "
      "span of the chosen simple roots; an empty subset means all of them.");

  m.def(
      "weyl_orbit_size",
      [](const std::string& type, int rank, int index) {
        const auto rs = build(type, rank);
        if (index < 1 || index > rank)
          throw std::invalid_argument("index must be in 1..rank");
        return bc::weylorb::weyl_orbit(rs, rs.simple_roots[index - 1])
            .members.size();
      },
      py::arg("type"), py::arg("rank"), py::arg("index"),
      "Size of the reflection-group orbit of the given simple root.");

  m.def(
      "same_orbit",
      [](const std::string& type, int rank, int i, int j) {
        const auto rs = build(type, rank);
        if (i < 1 || i > rank || j < 1 || j > rank)
          throw std::invalid_argument("indices must be in 1..rank");
        return bc::weylorb::same_orbit(rs, rs.simple_roots[i - 1],
                                       rs.simple_roots[j - 1]);
      },
      py::arg("type"), py::arg("rank"), py::arg("i"), py::arg("j"));

  m.def(
      "sl2_shapes",
      [](unsigned q) {
        const auto g = bc::matgrp::enumerate_sl2(q);
        py::dict d;
        d["order"] = g.order();
        d["sylow"] = shape_dict(bc::matgrp::sylow2(g).shape);
        d["central_quotient"] =
            shape_dict(bc::matgrp::central_quotient_sylow2_shape(g));
        return d;
      },
      py::arg("q"),
      "Order, Sylow 2-shape, and central-quotient Sylow shape of SL_2(q), by "
      "exhaustive enumeration (q <= 32).");

  m.def("gl42_certificate", [] {
    const auto c = bc::matgrp::verify_c15_maximal_odd();
    py::dict d;
    d["group_order"] = c.group_order;
    d["spectrum"] = c.spectrum;
    d["order15_elements"] = c.order15_elements;
    d["centralizers_all_order_15"] = c.centralizers_all_order_15;
    d["certified"] = c.certified();
    return d;
  });

  m.def(
      "aut_order",
      [](const std::vector<unsigned>& exponents) {
        const auto d = bc::abelian2::make_abelian_two_group(exponents);
        return py::int_(py::str(bc::abelian2::aut_order(d).value.str()));
      },
      py::arg("exponents"),
      "|Aut| of the direct product of cyclic 2-groups with the given "
      "exponents; every feasible computation path is run and must agree.");

  m.def(
      "aut_is_two_group",
      [](const std::vector<unsigned>& exponents) {
        return bc::abelian2::aut_is_two_group(
            bc::abelian2::make_abelian_two_group(exponents));
      },
      py::arg("exponents"));

  m.def(
      "rank2_invariants",
      [](const std::vector<unsigned>& exponents, unsigned e) {
        const auto d = bc::abelian2::make_abelian_two_group(exponents);
        const auto c = bc::blockinv::rank2_invariants(d, e);
        py::dict out;
        out["k"] = py::int_(py::str(c.k.str()));
        out["l"] = py::int_(py::str(c.l.str()));
        if (c.k0) out["k0"] = py::int_(py::str(c.k0->str()));
        return out;
      },
      py::arg("exponents"), py::arg("e"));

  m.def(
      "torus_fixed_order",
      [](long long q, unsigned t, bool twisted) {
        return py::int_(
            py::str(bc::blockinv::torus_fixed_order(q, t, twisted).str()));
      },
      py::arg("q"), py::arg("t"), py::arg("twisted") = false);

  m.def(
      "classify_case",
      [](const std::string& type, int rank, long long q, bool twisted,
         const std::string& centralizer) {
        bc::blockinv::BlockDescriptor desc;
        desc.family = bc::rootsys::make_lie_type(
                          type.empty() ? '?' : type[0], rank)
                          .family;
        desc.rank = rank;
        desc.q = q;
        desc.twisted = twisted;
        if (centralizer == "unipotent")
          desc.label = bc::blockinv::CentralizerLabel::unipotent;
        else if (centralizer == "quasi_isolated_nontoral")
          desc.label = bc::blockinv::CentralizerLabel::quasi_isolated_nontoral;
        else if (centralizer == "toral_connected")
          desc.label = bc::blockinv::CentralizerLabel::toral_connected;
        else if (centralizer == "toral_disconnected")
          desc.label = bc::blockinv::CentralizerLabel::toral_disconnected;
        else
          throw std::invalid_argument("unknown centralizer label");
        const auto r = bc::blockinv::classify_block_case(desc);
        py::dict out;
        out["label"] = bc::blockinv::to_string(r.label);
        out["reason"] = r.reason;
        if (r.t) out["t"] = *r.t;
        if (r.defect_shape) out["defect"] = shape_dict(*r.defect_shape);
        if (r.central_quotient_shape)
          out["central_quotient"] = shape_dict(*r.central_quotient_shape);
        return out;
      },
      py::arg("type"), py::arg("rank"), py::arg("q"),
      py::arg("twisted") = false, py::arg("centralizer") = "unipotent");

  m.def(
      "run_checks",
      [](const std::string& module) {
        py::list out;
        for (const auto& r : bc::verify::run_checks(module)) {
          py::dict d;
          d["id"] = r.id;
          d["module"] = r.module_name;
          d["claim"] = r.claim;
          d["inputs"] = json_to_py(r.inputs);
          d["expected"] = json_to_py(r.expected);
          d["computed"] = json_to_py(r.computed);
          d["pass"] = r.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("module") = std::string(),
      "Every registered consistency check (optionally restricted to one "
      "module) as a list of records.");

  m.def("module_names", [] { return bc::verify::module_names(); });
}
