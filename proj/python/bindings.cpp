#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcubed/combinat.hpp"
#include "pcubed/export.hpp"
#include "pcubed/groups.hpp"
#include "pcubed/irreps.hpp"
#include "pcubed/solver.hpp"

namespace py = pybind11;
using namespace pcubed;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10))); }

IrrepSet build(const std::string& family, int p) { return IrrepSet::build(Group::make(parse_family(family), p)); }

MultVec make_vec(const std::string& family, int p, std::vector<long> k) {
  return MultVec::make(IrrepLayout::canonical(parse_family(family), p), std::move(k));
}

std::vector<std::vector<std::string>> matrix_strings(const CycloMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c).is_zero() ? "0" : m(r, c).to_compact_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_pcubed, m) {
  m.doc() = "Groups of order p^3: irreps, representation counts and invariant bilinear forms";

  py::register_exception<IrrepVerificationError>(m, "IrrepVerificationError");
  py::register_exception<SolverError>(m, "SolverError");

  m.def("families", [] {
    std::vector<std::string> out;
    for (Family f : kAllFamilies) out.emplace_back(family_name(f));
    return out;
  });
  m.def("count_reps", [](const std::string& family, int p, long n) { return to_py(count_reps(parse_family(family), p, n)); },
        py::arg("family"), py::arg("p"), py::arg("n"));
  m.def("count_nondegenerate",
        [](const std::string& family, int p, long n) { return to_py(count_nondegenerate(parse_family(family), p, n)); },
        py::arg("family"), py::arg("p"), py::arg("n"));
  m.def("census", [](const std::string& family, int p, long n) {
    const Census c = census(parse_family(family), p, n);
    py::dict d;
    d["n"] = c.n;
    d["total"] = to_py(c.total);
    d["nondegenerate"] = to_py(c.nondegenerate_admitting);
    d["degenerate_only"] = to_py(c.degenerate_only);
    return d;
  }, py::arg("family"), py::arg("p"), py::arg("n"));
  m.def("enumerate_tally", [](const std::string& family, int p, long n) {
    const EnumerationTally t = tally_enumeration(IrrepLayout::canonical(parse_family(family), p), n);
    return std::make_pair(t.total, t.nondegenerate);
  }, py::arg("family"), py::arg("p"), py::arg("n"), "(stream length, vectors admitting a non-degenerate form)");
  m.def("layout", [](const std::string& family, int p) {
    const IrrepLayout l = IrrepLayout::canonical(parse_family(family), p);
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= l.r(); ++i) out.emplace_back(l.degree(i), l.pairing.dual_of(i));
    return out;
  }, py::arg("family"), py::arg("p"), "(degree, dual index) per irrep, in irrep order");

  m.def("invariant_dim", [](const std::string& family, int p, std::vector<long> k) {
    const MultVec v = make_vec(family, p, std::move(k));
    return invariant_dim(v, IrrepLayout::canonical(v.family, p).pairing);
  }, py::arg("family"), py::arg("p"), py::arg("k"));
  m.def("symmetric_dim", [](const std::string& family, int p, std::vector<long> k) {
    const MultVec v = make_vec(family, p, std::move(k));
    return symmetric_dim(v, IrrepLayout::canonical(v.family, p).pairing);
  }, py::arg("family"), py::arg("p"), py::arg("k"));
  m.def("skew_dim", [](const std::string& family, int p, std::vector<long> k) {
    const MultVec v = make_vec(family, p, std::move(k));
    return skew_dim(v, IrrepLayout::canonical(v.family, p).pairing);
  }, py::arg("family"), py::arg("p"), py::arg("k"));
  m.def("admits_nondegenerate", [](const std::string& family, int p, std::vector<long> k) {
    const MultVec v = make_vec(family, p, std::move(k));
    return admits_nondegenerate(v, IrrepLayout::canonical(v.family, p).pairing);
  }, py::arg("family"), py::arg("p"), py::arg("k"));

  m.def("character_table_csv", [](const std::string& family, int p) { return character_table_csv(build(family, p)); },
        py::arg("family"), py::arg("p"));
  m.def("irreps_json", [](const std::string& family, int p) { return irreps_to_json(build(family, p)).dump(); },
        py::arg("family"), py::arg("p"));

  m.def("invariant_space", [](const std::string& family, int p, std::vector<long> k) {
    const IrrepSet irreps = build(family, p);
    const InvSpace s = invariant_space(assemble(MultVec::make(irreps.layout(), std::move(k)), irreps), irreps);
    py::dict d;
    d["dimension"] = s.dimension;
    d["symmetric"] = symmetric_part_dim(s);
    d["skew"] = skew_part_dim(s);
    std::vector<std::vector<std::vector<std::string>>> basis;
    for (const auto& x : s.basis) basis.push_back(matrix_strings(x));
    d["basis"] = basis;
    d["block_support"] = std::vector<std::pair<int, int>>(s.block_support.begin(), s.block_support.end());
    return d;
  }, py::arg("family"), py::arg("p"), py::arg("k"), "solve the invariance equations exactly");
  m.def("witness", [](const std::string& family, int p, std::vector<long> k) -> py::object {
    const IrrepSet irreps = build(family, p);
    const auto w = nondegenerate_witness(MultVec::make(irreps.layout(), std::move(k)), irreps);
    if (!w) return py::none();
    return py::cast(matrix_strings(*w));
  }, py::arg("family"), py::arg("p"), py::arg("k"));
  m.def("charp_dimension", [](long n, int p) { return charp_mode(n, p).dimension; }, py::arg("n"), py::arg("p") = 3);
}
