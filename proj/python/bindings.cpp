#include <cmath>
#include <stdexcept>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steerseq/cli.hpp"
#include "steerseq/linalg.hpp"
#include "steerseq/measurements.hpp"
#include "steerseq/sequence.hpp"
#include "steerseq/states.hpp"
#include "steerseq/verify.hpp"

namespace py = pybind11;
using namespace steerseq;

namespace {

int side_dimension(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols()) {
        throw std::invalid_argument("state must be a square matrix");
    }
    const int d = static_cast<int>(std::lround(std::sqrt(double(rho.rows()))));
    if (static_cast<long>(d) * d != rho.rows() || d < 2) {
        throw std::invalid_argument("state dimension must be a perfect square d*d with d >= 2");
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sequential steering of shared entangled states: analytic recursion "
              "and brute-force channel verification.";
    m.attr("__version__") = "0.1.0";

    py::register_exception<TheoryGapError>(m, "TheoryGapError");

    py::enum_<Family>(m, "Family")
        .value("isotropic", Family::isotropic)
        .value("werner", Family::werner);

    py::enum_<ThresholdKind>(m, "ThresholdKind")
        .value("steer_all_projective", ThresholdKind::steer_all_projective)
        .value("steer_mub", ThresholdKind::steer_mub)
        .value("separability", ThresholdKind::separability)
        .value("local_qubit", ThresholdKind::local_qubit)
        .value("nonlocal_qubit", ThresholdKind::nonlocal_qubit);

    py::enum_<VerifyMode>(m, "VerifyMode")
        .value("haar", VerifyMode::haar)
        .value("mub", VerifyMode::mub);

    py::class_<SymmetricState>(m, "SymmetricState")
        .def(py::init<Family, int, double>(), py::arg("family"), py::arg("d"), py::arg("p"))
        .def_readwrite("family", &SymmetricState::family)
        .def_readwrite("d", &SymmetricState::d)
        .def_readwrite("p", &SymmetricState::p);

    py::class_<SequenceEntry>(m, "SequenceEntry")
        .def_readonly("index", &SequenceEntry::index)
        .def_readonly("p", &SequenceEntry::p)
        .def_readonly("eta", &SequenceEntry::eta)
        .def_readonly("steers", &SequenceEntry::steers)
        .def("__repr__", [](const SequenceEntry& e) {
            return "SequenceEntry(index=" + std::to_string(e.index) +
                   ", p=" + std::to_string(e.p) + ", eta=" + std::to_string(e.eta) +
                   ", steers=" + (e.steers ? "True" : "False") + ")";
        });

    py::class_<SequenceReport>(m, "SequenceReport")
        .def_readonly("d", &SequenceReport::d)
        .def_readonly("family", &SequenceReport::family)
        .def_readonly("threshold", &SequenceReport::threshold)
        .def_readonly("entries", &SequenceReport::entries)
        .def_readonly("n_bob", &SequenceReport::n_bob);

    py::class_<AnonymousGridPoint>(m, "AnonymousGridPoint")
        .def_readonly("eta", &AnonymousGridPoint::eta)
        .def_readonly("f", &AnonymousGridPoint::f)
        .def_readonly("count", &AnonymousGridPoint::count);

    py::class_<AnonymousReport>(m, "AnonymousReport")
        .def_readonly("d", &AnonymousReport::d)
        .def_readonly("threshold", &AnonymousReport::threshold)
        .def_readonly("eta_grid", &AnonymousReport::eta_grid)
        .def_readonly("eta_star", &AnonymousReport::eta_star)
        .def_readonly("count_star", &AnonymousReport::count_star);

    py::class_<ScalingRow>(m, "ScalingRow")
        .def_readonly("d", &ScalingRow::d)
        .def_readonly("n_bob_all", &ScalingRow::n_bob_all)
        .def_readonly("n_bob_mub", &ScalingRow::n_bob_mub)
        .def_readonly("d_over_log_d", &ScalingRow::d_over_log_d)
        .def_readonly("ratio_all", &ScalingRow::ratio_all)
        .def_readonly("lower_all", &ScalingRow::lower_all)
        .def_readonly("lower_mub", &ScalingRow::lower_mub)
        .def_readonly("csmub_known", &ScalingRow::csmub_known);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("d", &VerificationReport::d)
        .def_readonly("family", &VerificationReport::family)
        .def_readonly("eta", &VerificationReport::eta)
        .def_readonly("p_in", &VerificationReport::p_in)
        .def_readonly("p_analytic", &VerificationReport::p_analytic)
        .def_readonly("p_measured", &VerificationReport::p_measured)
        .def_readonly("family_distance", &VerificationReport::family_distance)
        .def_readonly("samples", &VerificationReport::samples)
        .def_readonly("seed", &VerificationReport::seed);

    py::class_<NoisyBasisMeasurement>(m, "NoisyBasisMeasurement")
        .def(py::init<int, double, ComplexMatrix>(), py::arg("d"), py::arg("eta"),
             py::arg("basis"))
        .def_readwrite("d", &NoisyBasisMeasurement::d)
        .def_readwrite("eta", &NoisyBasisMeasurement::eta)
        .def_readwrite("basis", &NoisyBasisMeasurement::basis);

    py::class_<KrausSet>(m, "KrausSet")
        .def_readonly("operators", &KrausSet::operators);

    py::class_<MubSet>(m, "MubSet")
        .def_readonly("d", &MubSet::d)
        .def_readonly("bases", &MubSet::bases);

    m.def("ratio", &ratio, py::arg("eta"), py::arg("d"),
          "One-step visibility ratio: p_next = ratio(eta, d) * p.");
    m.def("threshold", &threshold, py::arg("kind"), py::arg("family"), py::arg("d"),
          "Visibility threshold for the given criterion, family and dimension.");
    m.def("saturating_sequence", &saturating_sequence, py::arg("d"), py::arg("p_steer"),
          py::arg("p1") = 1.0, py::arg("family") = Family::isotropic,
          "Greedy sequence with every observer saturating the steering threshold.");
    m.def("count_bobs", &count_bobs, py::arg("d"), py::arg("family"), py::arg("kind"),
          "Saturating-sequence observer count at the named threshold, p1 = 1.");
    m.def("f_ano", &f_ano, py::arg("eta"), py::arg("d"), py::arg("p_steer"),
          "Constant-strength position bound: observer i steers iff i < f_ano.");
    m.def("anonymous_count", &anonymous_count, py::arg("eta"), py::arg("d"),
          py::arg("p_steer"));
    m.def("anonymous_optimum", &anonymous_optimum, py::arg("d"), py::arg("kind"),
          "Grid search for the constant strength maximizing the observer count.");
    m.def("scaling_table", &scaling_table, py::arg("d_values"));
    m.def("is_prime_power", &is_prime_power, py::arg("n"));

    m.def("max_entangled_vector", &max_entangled_vector, py::arg("d"));
    m.def("swap_operator", &swap_operator, py::arg("d"));
    m.def("to_density_matrix", &to_density_matrix, py::arg("state"));
    m.def(
        "to_density_matrix",
        [](Family family, int d, double p) {
            return to_density_matrix(SymmetricState{family, d, p});
        },
        py::arg("family"), py::arg("d"), py::arg("p"));
    m.def("extract_p", &extract_p, py::arg("rho"), py::arg("family"), py::arg("d"),
          "Linear inversion of the family visibility from a two-qudit state.");

    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def("partial_trace_b", &partial_trace_b, py::arg("rho"), py::arg("d"));
    m.def(
        "haar_unitary",
        [](int d, std::uint64_t seed) {
            RngStream rng(seed);
            return haar_unitary(d, rng);
        },
        py::arg("d"), py::arg("seed"),
        "Haar-distributed unitary, deterministic for a fixed seed.");
    m.def("is_density_matrix", &is_density_matrix, py::arg("m"), py::arg("tol") = 1e-10);
    m.def("trace_distance", &trace_distance, py::arg("a"), py::arg("b"));

    m.def("povm_elements", &povm_elements, py::arg("measurement"));
    m.def("luders_kraus", &luders_kraus, py::arg("measurement"));
    m.def("mub_bases", &mub_bases, py::arg("d"),
          "Complete set of d+1 mutually unbiased bases (prime d, or d = 4).");
    m.def("verify_projective_2design", &verify_projective_2design, py::arg("vectors"),
          py::arg("d"));
    m.def("qubit_merit", &qubit_merit, py::arg("eta"),
          "Information-disturbance pair (F, G) with F*F + G*G == 1.0 exactly.");

    m.def("apply_luders_step", &apply_luders_step, py::arg("rho"), py::arg("kraus"));
    m.def(
        "haar_averaged_step",
        [](const ComplexMatrix& rho, double eta, long samples, std::uint64_t seed) {
            RngStream rng(seed);
            return haar_averaged_step(rho, eta, samples, rng);
        },
        py::arg("rho"), py::arg("eta"), py::arg("samples"), py::arg("seed"),
        "Monte-Carlo average of one unsharp measurement step over Haar bases.");
    m.def("mub_averaged_step", &mub_averaged_step, py::arg("rho"), py::arg("eta"),
          py::arg("mubs"));
    m.def(
        "mub_averaged_step",
        [](const ComplexMatrix& rho, double eta) {
            const MubSet mubs = mub_bases(side_dimension(rho));
            return mub_averaged_step(rho, eta, mubs);
        },
        py::arg("rho"), py::arg("eta"),
        "Exact average over a complete MUB set inferred from the state dimension.");
    m.def("verify_sequence", &verify_sequence, py::arg("d"), py::arg("family"),
          py::arg("mode"), py::arg("etas"), py::arg("samples"), py::arg("seed"),
          "Brute-force channel chain checked against the scalar recursion.");
}
