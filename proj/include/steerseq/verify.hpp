#pragma once

#include <cstdint>
#include <vector>

#include "steerseq/measurements.hpp"
#include "steerseq/sequence.hpp"

namespace steerseq {

enum class VerifyMode { haar, mub };

// One brute-force step checked against the scalar recursion. p_in is the
// analytic input visibility, so p_analytic = ratio(eta, d) * p_in exactly
// and the chain of p_analytic values is the cumulative ratio product.
struct VerificationReport {
    int d;
    Family family;
    double eta;
    double p_in;
    double p_analytic;
    double p_measured;
    double family_distance;  // trace distance to the family member at p_measured
    long samples;            // 0 for exact averages
    std::uint64_t seed;
};

// sum_b (I (x) K_b) rho (I (x) K_b^dagger) on two qudits.
ComplexMatrix apply_luders_step(const ComplexMatrix& rho, const KrausSet& kraus);

// Monte-Carlo average of apply_luders_step over Haar-random measurement
// bases; deterministic for a fixed rng seed.
ComplexMatrix haar_averaged_step(const ComplexMatrix& rho, double eta, long samples,
                                 RngStream& rng);

// Exact uniform average over the d+1 bases of a complete MUB set.
ComplexMatrix mub_averaged_step(const ComplexMatrix& rho, double eta, const MubSet& mubs);

// Start from the family state at p = 1 and apply one averaged step per eta.
// Report 0 describes the initial state (eta = 0, values 1, distance 0).
std::vector<VerificationReport> verify_sequence(int d, Family family, VerifyMode mode,
                                                const std::vector<double>& etas,
                                                long samples, std::uint64_t seed);

}  // namespace steerseq
