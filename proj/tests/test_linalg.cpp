#include <doctest.h>

#include <cmath>

#include "steerseq/linalg.hpp"
#include "steerseq/states.hpp"

using namespace steerseq;

TEST_CASE("rng stream is deterministic and substreams are offset") {
    RngStream a(42);
    RngStream b(42);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.normal() == b.normal());
        CHECK(a.uniform() == b.uniform());
    }
    RngStream base(7);
    CHECK(base.substream(5).seed() == 12);
    RngStream direct(12);
    RngStream sub = base.substream(5);
    CHECK(sub.normal() == direct.normal());
}

TEST_CASE("kron matches a hand-computed 2x2 example") {
    ComplexMatrix a(2, 2);
    a << 1.0, 2.0, 3.0, 4.0;
    ComplexMatrix b(2, 2);
    b << 0.0, 1.0, 1.0, 0.0;
    const ComplexMatrix k = kron(a, b);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 4);
    ComplexMatrix expected(4, 4);
    expected << 0.0, 1.0, 0.0, 2.0,
                1.0, 0.0, 2.0, 0.0,
                0.0, 3.0, 0.0, 4.0,
                3.0, 0.0, 4.0, 0.0;
    CHECK((k - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("partial trace over the second factor inverts kron up to trace") {
    ComplexMatrix a(3, 3);
    a.setZero();
    a(0, 0) = Complex(0.5, 0.0);
    a(1, 1) = Complex(0.25, 0.0);
    a(2, 2) = Complex(0.25, 0.0);
    a(0, 2) = Complex(0.1, 0.2);
    a(2, 0) = Complex(0.1, -0.2);
    ComplexMatrix b(3, 3);
    b.setZero();
    b(0, 0) = Complex(0.7, 0.0);
    b(1, 1) = Complex(0.3, 0.0);
    b(0, 1) = Complex(0.0, 0.1);
    b(1, 0) = Complex(0.0, -0.1);
    const ComplexMatrix reduced = partial_trace_b(kron(a, b), 3);
    CHECK((reduced - a).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial trace of the maximally entangled state is maximally mixed") {
    for (int d : {2, 3, 5}) {
        const ComplexVector phi = max_entangled_vector(d);
        const ComplexMatrix rho = phi * phi.adjoint();
        const ComplexMatrix reduced = partial_trace_b(rho, d);
        const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / double(d);
        CHECK((reduced - mixed).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("haar unitaries are unitary and seed-reproducible") {
    for (int d : {2, 3, 7}) {
        RngStream rng(11);
        const ComplexMatrix u = haar_unitary(d, rng);
        const ComplexMatrix gram = u.adjoint() * u;
        CHECK((gram - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);
    }
    RngStream r1(5);
    RngStream r2(5);
    const ComplexMatrix u1 = haar_unitary(3, r1);
    const ComplexMatrix u2 = haar_unitary(3, r2);
    CHECK((u1 - u2).cwiseAbs().maxCoeff() == 0.0);
    const ComplexMatrix u3 = haar_unitary(3, r1);  // stream advanced
    CHECK((u1 - u3).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("haar first moments: mean entry near zero, mean |entry|^2 near 1/d") {
    const int d = 2;
    const int samples = 10000;
    RngStream rng(123);
    Complex mean00(0.0, 0.0);
    double mean_abs2 = 0.0;
    for (int s = 0; s < samples; ++s) {
        const ComplexMatrix u = haar_unitary(d, rng);
        mean00 += u(0, 0);
        mean_abs2 += std::norm(u(0, 0));
    }
    mean00 /= double(samples);
    mean_abs2 /= double(samples);
    CHECK(std::abs(mean00) < 0.05);
    CHECK(mean_abs2 == doctest::Approx(1.0 / d).epsilon(0.05));
}

TEST_CASE("is_density_matrix accepts states and rejects non-states") {
    CHECK(is_density_matrix(to_density_matrix({Family::isotropic, 2, 0.7})));
    CHECK(is_density_matrix(to_density_matrix({Family::werner, 3, 1.0})));

    ComplexMatrix not_unit_trace = ComplexMatrix::Identity(4, 4);
    CHECK_FALSE(is_density_matrix(not_unit_trace));

    ComplexMatrix not_hermitian = ComplexMatrix::Identity(4, 4) / 4.0;
    not_hermitian(0, 1) = Complex(0.1, 0.0);
    CHECK_FALSE(is_density_matrix(not_hermitian));

    ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_FALSE(is_density_matrix(negative));
}

TEST_CASE("trace distance: identity of indiscernibles and a pinned value") {
    const ComplexMatrix a = to_density_matrix({Family::isotropic, 2, 1.0});
    const ComplexMatrix b = to_density_matrix({Family::isotropic, 2, 0.0});
    CHECK(trace_distance(a, a) < 1e-14);
    // a - b has eigenvalues 3/4 and three times -1/4.
    CHECK(trace_distance(a, b) == doctest::Approx(0.75).epsilon(1e-12));
}
