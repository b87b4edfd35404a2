#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "entrogeo/contractions.hpp"
#include "entrogeo/entropy.hpp"
#include "entrogeo/io.hpp"
#include "entrogeo/oracle.hpp"
#include "entrogeo/profile.hpp"
#include "entrogeo/spectral.hpp"
#include "entrogeo/states.hpp"

namespace py = pybind11;
using namespace entrogeo;

namespace {

std::vector<std::vector<double>> plane_rows(const std::vector<double>& flat, std::size_t d) {
    std::vector<std::vector<double>> rows(d, std::vector<double>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rows[i][j] = flat[i * d + j];
    return rows;
}

py::object element_to_py(const Element& e) {
    return std::visit([](const auto& x) { return py::cast(x); }, e);
}

py::object decomposition_to_py(const Decomposition& d) {
    py::dict out;
    out["u"] = element_to_py(d.u);
    out["v"] = element_to_py(d.v);
    return out;
}

py::dict verdict_to_py(const SeparationVerdict& v) {
    py::dict out;
    out["intersects"] = v.intersects;
    out["best_found_norm1"] = v.best_found_norm1 ? py::cast(*v.best_found_norm1) : py::none();
    out["witness"] = v.witness ? decomposition_to_py(*v.witness) : py::none();
    return out;
}

template <class StateT>
py::dict jordan_to_py(const JordanParts<StateT>& parts) {
    py::dict out;
    out["alpha_plus"] = parts.alpha_plus;
    out["alpha_minus"] = parts.alpha_minus;
    out["omega_plus"] = parts.omega_plus ? py::cast(*parts.omega_plus) : py::none();
    out["omega_minus"] = parts.omega_minus ? py::cast(*parts.omega_minus) : py::none();
    return out;
}

py::dict consistency_to_py(const ConsistencyReport& r) {
    py::list points;
    for (const OraclePointCheck& p : r.points) {
        py::dict d;
        d["r1"] = p.r1;
        d["rinf"] = p.rinf;
        d["boundary_r1"] = p.boundary_r1;
        d["witness_found"] = p.witness_found;
        d["consistent"] = p.consistent;
        points.append(d);
    }
    py::dict out;
    out["points"] = points;
    out["violations"] = r.violations;
    out["ok"] = r.ok();
    return out;
}

}  // namespace

PYBIND11_MODULE(_entrogeo, m) {
    m.doc() = "Entropy of states via the boundary of a ball-separation region";

    py::register_exception<error>(m, "EntrogeoError");

    py::class_<RealSequence>(m, "RealSequence")
        .def(py::init<std::vector<double>>(), py::arg("entries"))
        .def_property_readonly("entries", &RealSequence::entries)
        .def("__len__", &RealSequence::dim);

    py::class_<DiscreteDistribution>(m, "DiscreteDistribution")
        .def(py::init([](std::vector<double> weights, double tol) {
                 return make_distribution(std::move(weights), tol);
             }),
             py::arg("weights"), py::arg("tol") = default_tol)
        .def_property_readonly("weights",
                               [](const DiscreteDistribution& w) { return w.weights().entries(); })
        .def("__len__", &DiscreteDistribution::dim);

    py::class_<HermitianMatrix>(m, "HermitianMatrix")
        .def(py::init<const std::vector<std::vector<double>>&,
                      const std::vector<std::vector<double>>&, double>(),
             py::arg("re"), py::arg("im"), py::arg("tol") = default_tol)
        .def_property_readonly(
            "re", [](const HermitianMatrix& h) { return plane_rows(h.re_plane(), h.dim()); })
        .def_property_readonly(
            "im", [](const HermitianMatrix& h) { return plane_rows(h.im_plane(), h.dim()); })
        .def_property_readonly("dim", &HermitianMatrix::dim)
        .def("trace", &HermitianMatrix::trace);

    py::class_<DensityOperator>(m, "DensityOperator")
        .def(py::init([](const std::vector<std::vector<double>>& re,
                         const std::vector<std::vector<double>>& im, double tol) {
                 return make_density(re, im, tol);
             }),
             py::arg("re"), py::arg("im"), py::arg("tol") = default_tol)
        .def_property_readonly("matrix", &DensityOperator::matrix)
        .def_property_readonly("dim", &DensityOperator::dim);

    py::class_<Spectrum>(m, "Spectrum")
        .def(py::init<std::vector<double>>(), py::arg("values"))
        .def_property_readonly("values", &Spectrum::values)
        .def("__len__", &Spectrum::size);

    py::class_<Breakpoint>(m, "Breakpoint")
        .def_readonly("r1", &Breakpoint::r1)
        .def_readonly("rinf", &Breakpoint::rinf)
        .def("__repr__", [](const Breakpoint& b) {
            return "Breakpoint(r1=" + io::format_double(b.r1) +
                   ", rinf=" + io::format_double(b.rinf) + ")";
        });

    py::class_<EntropyProfile>(m, "EntropyProfile")
        .def_property_readonly("breakpoints", &EntropyProfile::breakpoints)
        .def_property_readonly("multiplicities", &EntropyProfile::multiplicities)
        .def("value_at", &EntropyProfile::value_at, py::arg("rinf"))
        .def_property_readonly("max_rinf", &EntropyProfile::max_rinf)
        .def_property_readonly("total_mass", &EntropyProfile::total_mass);

    py::class_<SequenceMap>(m, "SequenceMap")
        .def(py::init<const std::vector<std::vector<double>>&>(), py::arg("rows"))
        .def_property_readonly("dim", &SequenceMap::dim);

    py::class_<Partition>(m, "Partition")
        .def(py::init<std::vector<std::vector<std::size_t>>>(), py::arg("blocks"))
        .def_property_readonly("blocks", &Partition::blocks)
        .def_property_readonly("dim", &Partition::dim);

    py::class_<BlockStructure>(m, "BlockStructure")
        .def(py::init<std::vector<std::size_t>>(), py::arg("sizes"))
        .def_property_readonly("sizes", &BlockStructure::sizes)
        .def_property_readonly("dim", &BlockStructure::dim);

    py::class_<MonotonicityReport>(m, "MonotonicityReport")
        .def_readonly("entropy_before", &MonotonicityReport::entropy_before)
        .def_readonly("entropy_after", &MonotonicityReport::entropy_after)
        .def_readonly("region_shrank", &MonotonicityReport::region_shrank)
        .def_readonly("verdict", &MonotonicityReport::verdict);

    m.def("spectrum_of", [](const DiscreteDistribution& w) { return spectrum_of(w); });
    m.def("spectrum_of", [](const DensityOperator& rho) { return spectrum_of(rho); });

    m.def("norm_one", [](const RealSequence& a) { return norm_one(a); });
    m.def("norm_one", [](const HermitianMatrix& a) { return norm_one(a); });
    m.def("norm_inf", [](const RealSequence& a) { return norm_inf(a); });
    m.def("norm_inf", [](const HermitianMatrix& a) { return norm_inf(a); });
    m.def("pairing", [](const RealSequence& a, const RealSequence& b) { return pairing(a, b); });
    m.def("pairing",
          [](const HermitianMatrix& a, const HermitianMatrix& b) { return pairing(a, b); });
    m.def("jordan_decompose",
          [](const RealSequence& a, double tol) { return jordan_to_py(jordan_decompose(a, tol)); },
          py::arg("a"), py::arg("tol") = default_tol);
    m.def("jordan_decompose",
          [](const HermitianMatrix& a, double tol) { return jordan_to_py(jordan_decompose(a, tol)); },
          py::arg("a"), py::arg("tol") = default_tol);

    m.def("build_profile", &build_profile, py::arg("spectrum"));
    m.def("eval_F", &eval_F, py::arg("spectrum"), py::arg("rinf"));
    m.def("in_region", &in_region, py::arg("spectrum"), py::arg("r1"), py::arg("rinf"));
    m.def("profile_dominates", &profile_dominates, py::arg("a"), py::arg("b"));

    m.def("entropy_direct", [](const Spectrum& s) { return entropy_direct(s).nats; },
          py::arg("spectrum"));
    m.def("entropy_boundary", [](const EntropyProfile& p) { return entropy_boundary(p).nats; },
          py::arg("profile"));
    m.def("entropy_quadrature",
          [](const EntropyProfile& p, std::int64_t steps) {
              return entropy_quadrature(p, steps).nats;
          },
          py::arg("profile"), py::arg("steps"));

    m.def("induced_norm_1", &induced_norm_1, py::arg("map"));
    m.def("induced_norm_inf", &induced_norm_inf, py::arg("map"));
    m.def("apply_map", &apply_map, py::arg("map"), py::arg("omega"), py::arg("tol") = default_tol);
    m.def("random_doubly_stochastic", &random_doubly_stochastic, py::arg("n"), py::arg("k"),
          py::arg("seed"));
    m.def("pinch", &pinch, py::arg("rho"), py::arg("blocks"));
    m.def("cond_exp_partition", &cond_exp_partition, py::arg("omega"), py::arg("partition"));
    m.def("project_partition", &project_partition, py::arg("a"), py::arg("partition"));
    m.def("project_blocks", &project_blocks, py::arg("a"), py::arg("blocks"));
    m.def("monotonicity_report",
          [](const SequenceMap& t, const DiscreteDistribution& w) {
              return monotonicity_report(t, w);
          },
          py::arg("transform"), py::arg("omega"));
    m.def("monotonicity_report",
          [](const Partition& p, const DiscreteDistribution& w) {
              return monotonicity_report(p, w);
          },
          py::arg("transform"), py::arg("omega"));
    m.def("monotonicity_report",
          [](const BlockStructure& b, const DensityOperator& rho) {
              return monotonicity_report(b, rho);
          },
          py::arg("transform"), py::arg("omega"));

    m.def("clip_decomposition",
          [](const DiscreteDistribution& w, double level) {
              return decomposition_to_py(clip_decomposition(w, level));
          },
          py::arg("omega"), py::arg("level"));
    m.def("clip_decomposition",
          [](const DensityOperator& rho, double level) {
              return decomposition_to_py(clip_decomposition(rho, level));
          },
          py::arg("omega"), py::arg("level"));
    m.def("witness_search",
          [](const DiscreteDistribution& w, double r1, double rinf, std::size_t samples,
             std::uint64_t seed) { return verdict_to_py(witness_search(w, r1, rinf, samples, seed)); },
          py::arg("omega"), py::arg("r1"), py::arg("rinf"), py::arg("samples"), py::arg("seed"));
    m.def("witness_search",
          [](const DensityOperator& rho, double r1, double rinf, std::size_t samples,
             std::uint64_t seed) {
              return verdict_to_py(witness_search(rho, r1, rinf, samples, seed));
          },
          py::arg("omega"), py::arg("r1"), py::arg("rinf"), py::arg("samples"), py::arg("seed"));
    m.def("oracle_consistency",
          [](const DiscreteDistribution& w, const std::vector<std::pair<double, double>>& grid,
             std::size_t samples, std::uint64_t seed) {
              return consistency_to_py(oracle_consistency(w, grid, samples, seed));
          },
          py::arg("omega"), py::arg("grid"), py::arg("samples"), py::arg("seed"));
    m.def("oracle_consistency",
          [](const DensityOperator& rho, const std::vector<std::pair<double, double>>& grid,
             std::size_t samples, std::uint64_t seed) {
              return consistency_to_py(oracle_consistency(rho, grid, samples, seed));
          },
          py::arg("omega"), py::arg("grid"), py::arg("samples"), py::arg("seed"));

    m.def("parse_state_json",
          [](const std::string& text, double tol) {
              return std::visit([](const auto& s) { return py::cast(s); },
                                io::parse_state(text, tol));
          },
          py::arg("text"), py::arg("tol") = default_tol);
    m.def("state_to_json", [](const DiscreteDistribution& w) { return io::to_json(io::State(w)); });
    m.def("state_to_json", [](const DensityOperator& rho) { return io::to_json(io::State(rho)); });
    m.def("profile_csv", &io::profile_csv, py::arg("profile"));
    m.def("profile_from_csv", &io::profile_from_csv, py::arg("text"));
}
