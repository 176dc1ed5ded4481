#include "steerseq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace steerseq {

namespace {

int side_dimension(const ComplexMatrix& rho) {
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rho.rows()))));
    if (d < 2 || rho.rows() != rho.cols() ||
        rho.rows() != static_cast<Eigen::Index>(d) * d) {
        throw std::invalid_argument("expected a (d*d) x (d*d) matrix with d >= 2");
    }
    return d;
}

double family_distance_to(const ComplexMatrix& rho, Family family, int d, double p) {
    const double clamped = std::clamp(p, 0.0, 1.0);
    return trace_distance(rho, to_density_matrix({family, d, clamped}));
}

}  // namespace

ComplexMatrix apply_luders_step(const ComplexMatrix& rho, const KrausSet& kraus) {
    const int d = side_dimension(rho);
    if (kraus.operators.empty()) {
        throw std::invalid_argument("apply_luders_step: empty Kraus set");
    }
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (const ComplexMatrix& k : kraus.operators) {
        if (k.rows() != d || k.cols() != d) {
            throw std::invalid_argument("apply_luders_step: Kraus dimension mismatch");
        }
        const ComplexMatrix lifted = kron(id, k);
        out += lifted * rho * lifted.adjoint();
    }
    return out;
}

ComplexMatrix haar_averaged_step(const ComplexMatrix& rho, double eta, long samples,
                                 RngStream& rng) {
    const int d = side_dimension(rho);
    if (samples < 1) {
        throw std::invalid_argument("haar_averaged_step: samples must be >= 1");
    }
    ComplexMatrix acc = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (long s = 0; s < samples; ++s) {
        const NoisyBasisMeasurement m{d, eta, haar_unitary(d, rng)};
        acc += apply_luders_step(rho, luders_kraus(m));
    }
    return acc / static_cast<double>(samples);
}

ComplexMatrix mub_averaged_step(const ComplexMatrix& rho, double eta, const MubSet& mubs) {
    const int d = side_dimension(rho);
    if (mubs.d != d || mubs.bases.size() != static_cast<std::size_t>(d) + 1) {
        throw std::invalid_argument("mub_averaged_step: MUB set does not match dimension");
    }
    ComplexMatrix acc = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (const ComplexMatrix& basis : mubs.bases) {
        acc += apply_luders_step(rho, luders_kraus({d, eta, basis}));
    }
    return acc / static_cast<double>(d + 1);
}

std::vector<VerificationReport> verify_sequence(int d, Family family, VerifyMode mode,
                                                const std::vector<double>& etas,
                                                long samples, std::uint64_t seed) {
    ComplexMatrix rho = to_density_matrix({family, d, 1.0});
    const long effective_samples = mode == VerifyMode::haar ? samples : 0;

    std::vector<VerificationReport> reports;
    reports.reserve(etas.size() + 1);
    reports.push_back({d, family, 0.0, 1.0, 1.0, 1.0, 0.0, effective_samples, seed});

    MubSet mubs;
    if (mode == VerifyMode::mub) {
        mubs = mub_bases(d);
    }
    RngStream rng(seed);

    double p_chain = 1.0;
    for (double eta : etas) {
        rho = mode == VerifyMode::mub
                  ? mub_averaged_step(rho, eta, mubs)
                  : haar_averaged_step(rho, eta, samples, rng);
        const double p_in = p_chain;
        p_chain = ratio(eta, d) * p_in;
        const double p_measured = extract_p(rho, family, d);
        reports.push_back({d, family, eta, p_in, p_chain, p_measured,
                           family_distance_to(rho, family, d, p_measured),
                           effective_samples, seed});
    }
    return reports;
}

}  // namespace steerseq
