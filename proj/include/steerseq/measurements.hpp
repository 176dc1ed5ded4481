#pragma once

#include <utility>
#include <vector>

#include "steerseq/linalg.hpp"

namespace steerseq {

// Unsharp basis measurement: a projective measurement along the columns of
// `basis`, mixed with white noise of weight 1 - eta.
struct NoisyBasisMeasurement {
    int d;
    double eta;
    ComplexMatrix basis;  // unitary; column b is the outcome-b vector
};

struct KrausSet {
    std::vector<ComplexMatrix> operators;  // one per outcome
};

struct MubSet {
    int d;
    std::vector<ComplexMatrix> bases;  // d + 1 pairwise unbiased bases
};

// POVM element b: eta |phi_b><phi_b| + (1 - eta) I/d.
std::vector<ComplexMatrix> povm_elements(const NoisyBasisMeasurement& m);

// Square-root (Luders) Kraus operators of the POVM above:
// K_b = (a - c)|phi_b><phi_b| + c I with a = sqrt((1+(d-1)eta)/d),
// c = sqrt((1-eta)/d), so that K_b^2 equals element b.
KrausSet luders_kraus(const NoisyBasisMeasurement& m);

// Complete set of d+1 mutually unbiased bases. Supported for prime d
// (quadratic-phase construction; for d = 2 the standard Z, X, Y eigenbases)
// and for d = 4 (tabulated). Other dimensions throw TheoryGapError.
MubSet mub_bases(int d);

// Max-entry distance of (1/N) sum (|v><v|)^(x)2 from the symmetric-subspace
// average 2 P_sym / (d(d+1)); < 1e-10 certifies a projective 2-design.
double verify_projective_2design(const std::vector<ComplexVector>& vectors, int d);

// Information-disturbance pair (F, G) close to (sqrt(1 - eta^2), eta) with
// the components nudged at the ulp level so that F*F + G*G == 1.0 holds
// exactly in double arithmetic. For eta below ~1e-3 an exact pair may not be
// representable; the raw pair is returned then.
std::pair<double, double> qubit_merit(double eta);

}  // namespace steerseq
