#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "akblocks/reports.hpp"
#include "akblocks/selftest.hpp"

namespace py = pybind11;
using namespace akblocks;

namespace {

ResidueParams make_params(uint32_t e, const std::vector<int64_t>& a) {
    return ResidueParams(e, a);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact block combinatorics and verification for Ariki-Koike algebras";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<resource_cap_error>(m, "ResourceCapError", PyExc_RuntimeError);
    py::register_exception<theorem_violation>(m, "TheoremViolation", PyExc_RuntimeError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);

    m.def(
        "weight",
        [](const std::string& mp, uint32_t e, const std::vector<int64_t>& a) {
            ResidueParams params = make_params(e, a);
            return weight(MultiPartition::parse(mp, params.r), params);
        },
        py::arg("multipartition"), py::arg("e"), py::arg("a"));

    m.def("conjugate", [](const std::string& mp) {
        return MultiPartition::parse(mp).conjugate().to_string();
    });

    m.def("dominates", [](const std::string& x, const std::string& y) {
        return dominates(MultiPartition::parse(x), MultiPartition::parse(y));
    });

    m.def("quantum_characteristic",
          [](uint32_t p, uint32_t q) { return quantum_characteristic(Fp(p), q); });

    m.def("conjugate_params", [](uint32_t e, const std::vector<int64_t>& a) {
        return conjugate_params(make_params(e, a)).a;
    });

    m.def("count_standard_tableaux", [](const std::string& mp) {
        return count_standard_tableaux(MultiPartition::parse(mp)).str();
    });

    m.def(
        "blocks_json",
        [](uint32_t n, uint32_t e, const std::vector<int64_t>& a) {
            ResidueParams params = make_params(e, a);
            return blocks_report(n, params, partition_into_blocks(n, params)).dump();
        },
        py::arg("n"), py::arg("e"), py::arg("a"));

    m.def(
        "classify_weight_one_json",
        [](uint32_t n, uint32_t e, const std::vector<int64_t>& a, const std::string& member) {
            ResidueParams params = make_params(e, a);
            MultiPartition mp = MultiPartition::parse(member, params.r);
            for (const BlockClass& b : partition_into_blocks(n, params))
                for (const MultiPartition& m2 : b.members)
                    if (m2 == mp)
                        return weight_one_report_json(classify_weight_one(b, params)).dump();
            throw precondition_error("no block of the r-partitions of n contains " + member);
        },
        py::arg("n"), py::arg("e"), py::arg("a"), py::arg("member"));

    m.def("smallest_element_of_order",
          [](uint32_t p, uint32_t e) { return smallest_element_of_order(Fp(p), e); });

    m.def(
        "verify_block_json",
        [](uint32_t p, uint32_t q, const std::vector<int64_t>& a, uint32_t n,
           const std::vector<int64_t>& content, uint32_t cap) {
            FieldContext fc(p, q);
            AKParams params(fc, a, n, cap);
            ResidueContent target;
            if (content.size() != fc.e)
                throw precondition_error("content must list one count per residue class");
            for (int64_t v : content) {
                if (v < 0) throw precondition_error("content counts must be non-negative");
                target.push_back(static_cast<uint32_t>(v));
            }
            return verdict_json(verify_weight_one_block(params, target, true)).dump();
        },
        py::arg("p"), py::arg("q"), py::arg("a"), py::arg("n"), py::arg("content"),
        py::arg("cap") = 1000);

    m.def(
        "search_json",
        [](uint32_t r, uint32_t n_min, uint32_t n_max, const std::vector<uint32_t>& e_values) {
            return search_report(search_weight_one(r, n_min, n_max, e_values)).dump();
        },
        py::arg("r"), py::arg("n_min"), py::arg("n_max"), py::arg("e_values"));

    m.def("selftest_quick", [] {
        SelftestOptions options;
        options.quick = true;
        for (const CheckResult& result : run_selftest(options))
            if (!result.pass) return false;
        return true;
    });
}
