#include "steerseq/measurements.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "steerseq/states.hpp"

namespace steerseq {

namespace {

void check_measurement(const NoisyBasisMeasurement& m) {
    if (m.d < 2 || m.basis.rows() != m.d || m.basis.cols() != m.d) {
        throw std::invalid_argument("measurement basis must be d x d with d >= 2");
    }
    if (!(m.eta >= 0.0 && m.eta <= 1.0)) {
        throw std::invalid_argument("eta must lie in [0,1]");
    }
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
    }
    return true;
}

// Quadratic-phase bases for odd prime d: basis a has column k with entries
// omega^(a j^2 + j k) / sqrt(d), omega = exp(2 pi i / d).
ComplexMatrix odd_prime_basis(int d, int a) {
    ComplexMatrix u(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) {
        for (int j = 0; j < d; ++j) {
            const long long e = (static_cast<long long>(a) * j * j +
                                 static_cast<long long>(j) * k) % d;
            u(j, k) = std::polar(norm, 2.0 * std::numbers::pi * e / d);
        }
    }
    return u;
}

// Entries of the four non-computational bases for d = 4 as powers of i,
// column-major; every entry has magnitude 1/2.
constexpr int kMub4[4][4][4] = {
    {{0, 2, 2, 0}, {0, 2, 0, 2}, {0, 0, 2, 2}, {0, 0, 0, 0}},
    {{0, 3, 3, 2}, {0, 3, 1, 0}, {0, 1, 3, 0}, {0, 1, 1, 2}},
    {{0, 2, 3, 3}, {0, 0, 3, 1}, {0, 0, 1, 3}, {0, 2, 1, 1}},
    {{0, 3, 2, 3}, {0, 3, 0, 1}, {0, 1, 2, 1}, {0, 1, 0, 3}},
};

// Representable (F, G) with F*F + G*G == 1.0: for the candidate G, locate
// the values of fl(F^2) whose rounded sum with G*G is exactly 1 and test
// whether any of them is an exact square of a double.
bool exact_merit_for(double g, double& f_out) {
    const double g2 = g * g;
    const double a0 = 1.0 - g2;
    const double cands[3] = {std::nextafter(a0, -1.0), a0, std::nextafter(a0, 2.0)};
    for (double a : cands) {
        if (a < 0.0 || a > 1.0 || a + g2 != 1.0) continue;
        const double fc = std::sqrt(a);
        const double fs[3] = {std::nextafter(fc, -1.0), fc, std::nextafter(fc, 2.0)};
        for (double f : fs) {
            if (f >= 0.0 && f <= 1.0 && f * f == a) {
                f_out = f;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

std::vector<ComplexMatrix> povm_elements(const NoisyBasisMeasurement& m) {
    check_measurement(m);
    const ComplexMatrix noise =
        ((1.0 - m.eta) / m.d) * ComplexMatrix::Identity(m.d, m.d);
    std::vector<ComplexMatrix> elements;
    elements.reserve(m.d);
    for (int b = 0; b < m.d; ++b) {
        const ComplexVector phi = m.basis.col(b);
        elements.push_back(m.eta * (phi * phi.adjoint()) + noise);
    }
    return elements;
}

KrausSet luders_kraus(const NoisyBasisMeasurement& m) {
    check_measurement(m);
    const double d = static_cast<double>(m.d);
    const double a = std::sqrt((1.0 + (d - 1.0) * m.eta) / d);
    const double c = std::sqrt((1.0 - m.eta) / d);
    const ComplexMatrix noise = c * ComplexMatrix::Identity(m.d, m.d);
    KrausSet set;
    set.operators.reserve(m.d);
    for (int b = 0; b < m.d; ++b) {
        const ComplexVector phi = m.basis.col(b);
        set.operators.push_back((a - c) * (phi * phi.adjoint()) + noise);
    }
    return set;
}

MubSet mub_bases(int d) {
    if (d < 2) {
        throw std::invalid_argument("mub_bases: d must be >= 2");
    }
    MubSet set;
    set.d = d;
    set.bases.push_back(ComplexMatrix::Identity(d, d));
    if (d == 2) {
        const double s = 1.0 / std::sqrt(2.0);
        ComplexMatrix x(2, 2), y(2, 2);
        x << s, s, s, -s;
        y << Complex(s, 0), Complex(s, 0), Complex(0, s), Complex(0, -s);
        set.bases.push_back(x);
        set.bases.push_back(y);
        return set;
    }
    if (d == 4) {
        for (const auto& table : kMub4) {
            static const Complex unit[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            ComplexMatrix u(4, 4);
            for (int k = 0; k < 4; ++k) {
                for (int j = 0; j < 4; ++j) {
                    u(j, k) = 0.5 * unit[table[k][j]];
                }
            }
            set.bases.push_back(u);
        }
        return set;
    }
    if (!is_prime(d)) {
        throw TheoryGapError(
            "mub_bases: complete MUB construction implemented only for prime "
            "dimensions and d = 4");
    }
    for (int a = 0; a < d; ++a) {
        set.bases.push_back(odd_prime_basis(d, a));
    }
    return set;
}

double verify_projective_2design(const std::vector<ComplexVector>& vectors, int d) {
    if (d < 2 || vectors.empty()) {
        throw std::invalid_argument("verify_projective_2design: need vectors and d >= 2");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (const auto& v : vectors) {
        if (v.size() != d) {
            throw std::invalid_argument("verify_projective_2design: vector has wrong dimension");
        }
        const ComplexMatrix proj = v * v.adjoint();
        sum += kron(proj, proj);
    }
    sum /= static_cast<double>(vectors.size());
    const ComplexMatrix p_sym =
        0.5 * (ComplexMatrix::Identity(n, n) + swap_operator(d));
    const ComplexMatrix target = (2.0 / (d * (d + 1.0))) * p_sym;
    return (sum - target).cwiseAbs().maxCoeff();
}

std::pair<double, double> qubit_merit(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("qubit_merit: eta must lie in [0,1]");
    }
    double f = 0.0;
    if (exact_merit_for(eta, f)) {
        return {f, eta};
    }
    // Walk G away from eta one ulp at a time until a candidate admits an
    // exact F. The worst case over eta >= 0.01 is a few thousand steps.
    double g_up = eta;
    double g_down = eta;
    for (long k = 0; k < 4000000; ++k) {
        g_up = std::nextafter(g_up, 2.0);
        if (g_up <= 1.0 && exact_merit_for(g_up, f)) {
            return {f, g_up};
        }
        g_down = std::nextafter(g_down, -1.0);
        if (g_down >= 0.0 && exact_merit_for(g_down, f)) {
            return {f, g_down};
        }
    }
    return {std::sqrt((1.0 - eta) * (1.0 + eta)), eta};
}

}  // namespace steerseq
