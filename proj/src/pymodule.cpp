#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "repart/bijection.hpp"
#include "repart/families.hpp"
#include "repart/partition.hpp"
#include "repart/verify.hpp"

namespace py = pybind11;
using namespace repart;

namespace {

Partition from_list(std::vector<Part> parts) { return Partition(std::move(parts)); }

std::vector<std::vector<Part>> to_lists(const std::vector<Partition>& ps) {
    std::vector<std::vector<Part>> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(p.parts());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Partition families, statistics and the diagonal-hook correspondence";

    m.def(
        "make_partition",
        [](std::vector<Part> parts) { return Partition(std::move(parts)).parts(); },
        py::arg("parts"), "Validate a part list (positive, weakly decreasing) and return it.");
    m.def("partition_count", &partition_count, py::arg("n"));
    m.def(
        "enumerate_partitions", [](Part n) { return to_lists(enumerate_partitions(n)); },
        py::arg("n"));
    m.def(
        "multiplicity",
        [](std::vector<Part> parts, Part k) { return multiplicity(from_list(std::move(parts)), k); },
        py::arg("parts"), py::arg("k"));
    m.def(
        "distinct_part_count",
        [](std::vector<Part> parts) { return distinct_part_count(from_list(std::move(parts))); },
        py::arg("parts"));
    m.def(
        "consecutive_run_count",
        [](std::vector<Part> parts) { return consecutive_run_count(from_list(std::move(parts))); },
        py::arg("parts"));
    m.def(
        "conjugate",
        [](std::vector<Part> parts) { return conjugate(from_list(std::move(parts))).parts(); },
        py::arg("parts"));
    m.def(
        "quot_rem",
        [](Part part, Part r) {
            const auto qr = quot_rem(part, r);
            return py::make_tuple(qr.quotient, qr.remainder);
        },
        py::arg("part"), py::arg("r"));
    m.def(
        "exponent_blocks",
        [](std::vector<Part> parts) {
            std::vector<std::pair<Part, Part>> out;
            for (const auto& b : exponent_blocks(from_list(std::move(parts)))) {
                out.emplace_back(b.value, b.count);
            }
            return out;
        },
        py::arg("parts"));

    m.def(
        "in_family",
        [](std::vector<Part> parts, const std::string& selector) {
            return in_family(from_list(std::move(parts)), FamilySelector::parse(selector));
        },
        py::arg("parts"), py::arg("selector"));
    m.def(
        "enumerate_family",
        [](Part n, const std::string& selector) {
            return to_lists(enumerate_family(n, FamilySelector::parse(selector)));
        },
        py::arg("n"), py::arg("selector"));
    m.def(
        "count_family",
        [](Part n, const std::string& selector) {
            return count_family(n, FamilySelector::parse(selector));
        },
        py::arg("n"), py::arg("selector"));
    m.def(
        "generate_rp_pattern",
        [](Part n, Part r, std::vector<Part> s, const std::string& variant) {
            return to_lists(generate_rp_pattern(n, PeriodPattern(r, std::move(s)),
                                                parse_variant(variant)));
        },
        py::arg("n"), py::arg("r"), py::arg("s"), py::arg("variant") = "free");
    m.def("count_cp_legacy_dp", &count_cp_legacy_dp, py::arg("n"), py::arg("r"), py::arg("j"));

    m.def(
        "build_tableau",
        [](std::vector<Part> parts, Part r) {
            return build_tableau(from_list(std::move(parts)), r).rows();
        },
        py::arg("parts"), py::arg("r"));
    m.def(
        "hook_strip_sizes",
        [](std::vector<Part> parts, Part r) {
            return hook_strip_sizes(from_list(std::move(parts)), r);
        },
        py::arg("parts"), py::arg("r"));
    m.def(
        "forward_map",
        [](std::vector<Part> parts, Part r) {
            return forward_map(from_list(std::move(parts)), r).parts();
        },
        py::arg("parts"), py::arg("r"));
    m.def(
        "inverse_map",
        [](std::vector<Part> parts, Part r) {
            return inverse_map(from_list(std::move(parts)), r).parts();
        },
        py::arg("parts"), py::arg("r"));
    m.def(
        "split_groups",
        [](std::vector<Part> parts, Part r) {
            return to_lists(split_groups(from_list(std::move(parts)), r));
        },
        py::arg("parts"), py::arg("r"));
    m.def(
        "group_sequence",
        [](std::vector<Part> parts, Part r) {
            return group_sequence(from_list(std::move(parts)), r).values;
        },
        py::arg("parts"), py::arg("r"));
    m.def(
        "brute_force_inverse",
        [](std::vector<Part> parts, Part r,
           const std::string& selector) -> std::optional<std::vector<Part>> {
            const auto found =
                brute_force_inverse(from_list(std::move(parts)), r, FamilySelector::parse(selector));
            if (!found) return std::nullopt;
            return found->parts();
        },
        py::arg("parts"), py::arg("r"), py::arg("selector"));

    py::class_<CountRecord>(m, "CountRecord")
        .def_readonly("n", &CountRecord::n)
        .def_readonly("m", &CountRecord::m)
        .def_readonly("left", &CountRecord::left)
        .def_readonly("right", &CountRecord::right)
        .def_readonly("match", &CountRecord::match);

    py::class_<FailureWitness>(m, "FailureWitness")
        .def_readonly("n", &FailureWitness::n)
        .def_readonly("m", &FailureWitness::m)
        .def_readonly("left", &FailureWitness::left)
        .def_readonly("right", &FailureWitness::right)
        .def_readonly("note", &FailureWitness::note);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("theorem", &VerificationReport::theorem)
        .def_readonly("params", &VerificationReport::params)
        .def_readonly("records", &VerificationReport::records)
        .def_readonly("witnesses", &VerificationReport::witnesses)
        .def_property_readonly("all_match", &VerificationReport::all_match)
        .def("to_csv", [](const VerificationReport& r) { return reports_to_csv({r}); })
        .def("to_json", [](const VerificationReport& r) { return reports_to_json({r}); });

    m.def("verify_theorem1", &verify_theorem1, py::arg("n_max"));
    m.def("verify_theorem2", &verify_theorem2, py::arg("r"), py::arg("j"), py::arg("n_max"));
    m.def(
        "verify_theorem3",
        [](Part r, std::vector<Part> s, const std::string& variant, Part n_max) {
            return verify_theorem3(PeriodPattern(r, std::move(s)), parse_variant(variant), n_max);
        },
        py::arg("r"), py::arg("s"), py::arg("variant"), py::arg("n_max"));
    m.def("verify_theorem4", &verify_theorem4, py::arg("r"), py::arg("n_max"));
    m.def(
        "verify_bijection",
        [](Part r, std::vector<Part> s, const std::string& variant, Part n_max) {
            return verify_bijection(PeriodPattern(r, std::move(s)), parse_variant(variant), n_max);
        },
        py::arg("r"), py::arg("s"), py::arg("variant"), py::arg("n_max"));
    m.def(
        "run_campaign", [](Part r_max, Part n_max) { return run_campaign({r_max, n_max}); },
        py::arg("r_max") = 5, py::arg("n_max") = 22);
    m.def("reports_to_csv", &reports_to_csv, py::arg("reports"));
    m.def("reports_to_json", &reports_to_json, py::arg("reports"));
    m.def("reports_exit_code", &reports_exit_code, py::arg("reports"));
}
