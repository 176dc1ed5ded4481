#include "steerseq/states.hpp"

#include <cmath>
#include <string>

namespace steerseq {

const char* family_name(Family f) {
    return f == Family::isotropic ? "isotropic" : "werner";
}

const char* threshold_kind_name(ThresholdKind k) {
    switch (k) {
        case ThresholdKind::steer_all_projective: return "steer_all_projective";
        case ThresholdKind::steer_mub: return "steer_mub";
        case ThresholdKind::separability: return "separability";
        case ThresholdKind::local_qubit: return "local_qubit";
        case ThresholdKind::nonlocal_qubit: return "nonlocal_qubit";
    }
    return "unknown";
}

ComplexVector max_entangled_vector(int d) {
    if (d < 2) {
        throw std::invalid_argument("max_entangled_vector: d must be >= 2");
    }
    ComplexVector phi = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
        phi(i * d + i) = amp;
    }
    return phi;
}

ComplexMatrix swap_operator(int d) {
    if (d < 2) {
        throw std::invalid_argument("swap_operator: d must be >= 2");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    ComplexMatrix v = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            v(j * d + i, i * d + j) = 1.0;
        }
    }
    return v;
}

ComplexMatrix to_density_matrix(const SymmetricState& s) {
    if (s.d < 2) {
        throw std::invalid_argument("to_density_matrix: d must be >= 2");
    }
    if (!(s.p >= 0.0 && s.p <= 1.0)) {
        throw std::invalid_argument("to_density_matrix: p must lie in [0,1]");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(s.d) * s.d;
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    if (s.family == Family::isotropic) {
        const ComplexVector phi = max_entangled_vector(s.d);
        return s.p * (phi * phi.adjoint()) +
               ((1.0 - s.p) / static_cast<double>(n)) * id;
    }
    const double d = static_cast<double>(s.d);
    return ((d - 1.0 + s.p) / d * id - s.p * swap_operator(s.d)) / (d * (d - 1.0));
}

double extract_p(const ComplexMatrix& rho, Family family, int d) {
    if (d < 2 || rho.rows() != rho.cols() ||
        rho.rows() != static_cast<Eigen::Index>(d) * d) {
        throw std::invalid_argument("extract_p: rho must be (d*d) x (d*d)");
    }
    const double dd = static_cast<double>(d);
    if (family == Family::isotropic) {
        const ComplexVector phi = max_entangled_vector(d);
        const double fidelity = (phi.adjoint() * rho * phi)(0, 0).real();
        return (dd * dd * fidelity - 1.0) / (dd * dd - 1.0);
    }
    // tr(rho V) = (1 - p(d+1))/d on the family, inverted for p.
    const double overlap = (rho * swap_operator(d)).trace().real();
    return (1.0 - dd * overlap) / (dd + 1.0);
}

double threshold(ThresholdKind kind, Family family, int d) {
    if (d < 2) {
        throw std::invalid_argument("threshold: d must be >= 2");
    }
    const double dd = static_cast<double>(d);
    switch (kind) {
        case ThresholdKind::steer_all_projective:
            if (family == Family::werner) {
                return (dd - 1.0) / dd;
            } else {
                double harmonic = 0.0;
                for (int i = 2; i <= d; ++i) {
                    harmonic += 1.0 / static_cast<double>(i);
                }
                return harmonic / (dd - 1.0);
            }
        case ThresholdKind::steer_mub:
            if (family == Family::werner) {
                throw TheoryGapError(
                    "threshold: no steering threshold is known for Werner states "
                    "under complete MUB measurements");
            }
            return (std::sqrt(dd) / (dd + 1.0) + 1.0) / (std::sqrt(dd) + 1.0);
        case ThresholdKind::separability:
            return 1.0 / (dd + 1.0);
        case ThresholdKind::local_qubit:
            if (d != 2) {
                throw TheoryGapError(
                    "threshold: the locality bound is only known for d = 2");
            }
            return 0.6829;
        case ThresholdKind::nonlocal_qubit:
            if (d != 2) {
                throw TheoryGapError(
                    "threshold: the nonlocality bound is only known for d = 2");
            }
            return 0.7012;
    }
    throw std::invalid_argument("threshold: unknown kind");
}

}  // namespace steerseq
