#pragma once

#include <stdexcept>

#include "steerseq/linalg.hpp"

namespace steerseq {

enum class Family { isotropic, werner };

enum class ThresholdKind {
    steer_all_projective,
    steer_mub,
    separability,
    local_qubit,
    nonlocal_qubit,
};

// Two-qudit state family parametrized by a single visibility p in [0,1].
struct SymmetricState {
    Family family;
    int d;
    double p;
};

// A requested quantity whose value is simply not known (as opposed to a
// malformed argument).
class TheoryGapError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

const char* family_name(Family f);
const char* threshold_kind_name(ThresholdKind k);

// |phi+> = (1/sqrt(d)) sum_i |ii>, fixed in the computational basis.
ComplexVector max_entangled_vector(int d);

// Swap operator V|ij> = |ji> on C^d (x) C^d.
ComplexMatrix swap_operator(int d);

ComplexMatrix to_density_matrix(const SymmetricState& s);

// Linear inversion of the family parametrization; exact on family members,
// a projection for arbitrary Hermitian input.
double extract_p(const ComplexMatrix& rho, Family family, int d);

// Visibility thresholds per family and dimension. Combinations without a
// known value throw TheoryGapError.
double threshold(ThresholdKind kind, Family family, int d);

}  // namespace steerseq
