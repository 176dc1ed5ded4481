#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace steerseq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Deterministic random stream: a fixed seed reproduces the exact sample
// sequence. Parallel consumers must take independent substreams and keep a
// fixed reduction order.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // Substream k is an independent stream seeded with seed + k.
    RngStream substream(std::uint64_t k) const { return RngStream(seed_ + k); }

    double normal() { return normal_(gen_); }
    double uniform() { return uniform_(gen_); }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace over the second tensor factor of a (d*d) x (d*d) matrix.
ComplexMatrix partial_trace_b(const ComplexMatrix& rho, int d);

// Haar-distributed d x d unitary: complex Ginibre matrix, QR decomposition,
// and the R-diagonal phase correction (plain QR alone is biased).
ComplexMatrix haar_unitary(int d, RngStream& rng);

// Hermitian within tol, minimum eigenvalue >= -tol, trace within tol of 1.
bool is_density_matrix(const ComplexMatrix& m, double tol = 1e-10);

// (1/2) sum of |eigenvalues| of a - b; inputs must be Hermitian.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace steerseq
