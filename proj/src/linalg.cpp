#include "steerseq/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace steerseq {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    return Eigen::kroneckerProduct(a, b);
}

ComplexMatrix partial_trace_b(const ComplexMatrix& rho, int d) {
    if (d < 1 || rho.rows() != rho.cols() ||
        rho.rows() != static_cast<Eigen::Index>(d) * d) {
        throw std::invalid_argument("partial_trace_b: rho must be (d*d) x (d*d)");
    }
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                out(i, j) += rho(i * d + k, j * d + k);
            }
        }
    }
    return out;
}

ComplexMatrix haar_unitary(int d, RngStream& rng) {
    if (d < 2) {
        throw std::invalid_argument("haar_unitary: d must be >= 2");
    }
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = Complex(re * s, im * s);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
    const ComplexMatrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const Complex rjj = r(j, j);
        q.col(j) *= rjj / std::abs(rjj);
    }
    return q;
}

bool is_density_matrix(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        return false;
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) {
        return false;
    }
    const Complex tr = m.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a - b, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace steerseq
