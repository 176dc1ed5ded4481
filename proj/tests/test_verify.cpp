#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "steerseq/verify.hpp"

using namespace steerseq;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("a zero-strength step is the identity channel") {
    for (int d : {2, 3}) {
        const ComplexMatrix rho = to_density_matrix({Family::isotropic, d, 0.83});
        RngStream rng(3);
        const NoisyBasisMeasurement m{d, 0.0, haar_unitary(d, rng)};
        const ComplexMatrix out = apply_luders_step(rho, luders_kraus(m));
        CHECK(max_abs(out - rho) < 1e-14);
    }
}

TEST_CASE("single steps preserve trace and positivity") {
    const ComplexMatrix rho = to_density_matrix({Family::isotropic, 3, 0.9});
    RngStream rng(17);
    const NoisyBasisMeasurement m{3, 0.7, haar_unitary(3, rng)};
    const ComplexMatrix out = apply_luders_step(rho, luders_kraus(m));
    CHECK(is_density_matrix(out));
    CHECK(std::abs(out.trace().real() - 1.0) < 1e-12);
}

TEST_CASE("the averaged channel is unital") {
    for (int d : {2, 3}) {
        const Eigen::Index n = Eigen::Index(d) * d;
        const ComplexMatrix mixed = ComplexMatrix::Identity(n, n) / double(n);
        const ComplexMatrix out = mub_averaged_step(mixed, 0.73, mub_bases(d));
        CHECK(max_abs(out - mixed) < 1e-12);
    }
}

TEST_CASE("mub-averaged step reproduces the scalar recursion exactly") {
    // d = 2, eta = 0.6: the ratio is 13/15, so p goes 0.8 -> 0.69333...
    const MubSet mubs = mub_bases(2);
    const ComplexMatrix rho = to_density_matrix({Family::isotropic, 2, 0.8});
    const ComplexMatrix out = mub_averaged_step(rho, 0.6, mubs);
    const double p_out = extract_p(out, Family::isotropic, 2);
    CHECK(p_out == doctest::Approx(13.0 / 15.0 * 0.8).epsilon(1e-12));
    CHECK(trace_distance(out, to_density_matrix({Family::isotropic, 2, p_out})) < 1e-10);
}

TEST_CASE("mub-averaged step stays on-family for several dimensions") {
    for (int d : {2, 3, 5}) {
        for (double eta : {0.3, 0.8, 1.0}) {
            const MubSet mubs = mub_bases(d);
            const ComplexMatrix rho = to_density_matrix({Family::isotropic, d, 0.95});
            const ComplexMatrix out = mub_averaged_step(rho, eta, mubs);
            const double expected = ratio(eta, d) * 0.95;
            CHECK(extract_p(out, Family::isotropic, d) ==
                  doctest::Approx(expected).epsilon(1e-12));
            CHECK(trace_distance(out, to_density_matrix({Family::isotropic, d, expected})) <
                  1e-10);
        }
    }
}

TEST_CASE("werner states follow the same recursion under the mub average") {
    const MubSet mubs = mub_bases(3);
    const ComplexMatrix rho = to_density_matrix({Family::werner, 3, 0.8});
    const ComplexMatrix half = mub_averaged_step(rho, 0.5, mubs);
    CHECK(extract_p(half, Family::werner, 3) ==
          doctest::Approx(ratio(0.5, 3) * 0.8).epsilon(1e-12));
    CHECK(trace_distance(half, to_density_matrix({Family::werner, 3, ratio(0.5, 3) * 0.8})) <
          1e-10);
    const ComplexMatrix sharp = mub_averaged_step(rho, 1.0, mubs);
    CHECK(extract_p(sharp, Family::werner, 3) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("haar averaging is deterministic in the seed") {
    const ComplexMatrix rho = to_density_matrix({Family::isotropic, 2, 1.0});
    RngStream r1(99);
    RngStream r2(99);
    const ComplexMatrix a = haar_averaged_step(rho, 0.5, 200, r1);
    const ComplexMatrix b = haar_averaged_step(rho, 0.5, 200, r2);
    CHECK(max_abs(a - b) == 0.0);
    RngStream r3(100);
    const ComplexMatrix c = haar_averaged_step(rho, 0.5, 200, r3);
    CHECK(max_abs(a - c) > 0.0);
}

TEST_CASE("haar averaging recovers the visibility exactly and the family in the mean") {
    // The extracted visibility of a single-basis step is basis-independent,
    // so it matches the recursion to rounding error at any sample count.
    const ComplexMatrix rho = to_density_matrix({Family::isotropic, 2, 1.0});
    RngStream rng(5);
    const ComplexMatrix out = haar_averaged_step(rho, 0.5, 500, rng);
    CHECK(extract_p(out, Family::isotropic, 2) ==
          doctest::Approx(ratio(0.5, 2)).epsilon(1e-12));
    // Off-family fluctuations shrink with averaging.
    CHECK(trace_distance(out, to_density_matrix({Family::isotropic, 2, ratio(0.5, 2)})) <
          0.1);
}

TEST_CASE("monte-carlo family distance shrinks like one over sqrt samples") {
    // Mean family distance over 12 seeds at 1e4 vs 4e4 samples: the ratio
    // should sit near 1/2 for 1/sqrt(N) convergence.
    const ComplexMatrix rho = to_density_matrix({Family::isotropic, 2, 1.0});
    const double target = ratio(0.5, 2);
    const ComplexMatrix family_target = to_density_matrix({Family::isotropic, 2, target});
    double mean_small = 0.0;
    double mean_large = 0.0;
    for (int seed = 1; seed <= 12; ++seed) {
        RngStream r_small(seed);
        RngStream r_large(1000 + seed);
        mean_small +=
            trace_distance(haar_averaged_step(rho, 0.5, 10000, r_small), family_target);
        mean_large +=
            trace_distance(haar_averaged_step(rho, 0.5, 40000, r_large), family_target);
    }
    const double ratio_of_means = mean_large / mean_small;
    CHECK(ratio_of_means > 0.35);
    CHECK(ratio_of_means < 0.65);
}

TEST_CASE("verify_sequence in mub mode tracks the analytic chain to rounding error") {
    const std::vector<double> etas = {0.5, 0.549038105676658, 0.616528530770414,
                                      0.718379088671261, 0.901239470689473};
    const auto reports = verify_sequence(2, Family::isotropic, VerifyMode::mub, etas, 0, 1);
    REQUIRE(reports.size() == 6);
    CHECK(reports[0].eta == 0.0);
    CHECK(reports[0].p_analytic == 1.0);
    CHECK(reports[0].p_measured == 1.0);
    CHECK(reports[0].family_distance == 0.0);
    CHECK(reports[0].samples == 0);  // exact averages
    double p = 1.0;
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const auto& r = reports[i];
        CHECK(r.p_in == p);                       // chain input is the previous output
        CHECK(r.p_analytic == ratio(r.eta, 2) * r.p_in);  // bitwise recursion
        p = r.p_analytic;
        CHECK(std::abs(r.p_measured - r.p_analytic) < 1e-9);
        CHECK(r.family_distance < 1e-9);
    }
    CHECK(p == doctest::Approx(0.34519917963677).epsilon(1e-9));
}

TEST_CASE("verify_sequence in haar mode is seeded and close to the chain") {
    const std::vector<double> etas = {0.5, 0.7};
    const auto a = verify_sequence(2, Family::isotropic, VerifyMode::haar, etas, 2000, 7);
    const auto b = verify_sequence(2, Family::isotropic, VerifyMode::haar, etas, 2000, 7);
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].p_measured == b[i].p_measured);
        CHECK(a[i].family_distance == b[i].family_distance);
        CHECK(a[i].samples == 2000);
    }
    // Step 1 acts on an exact family state, where the extracted visibility of
    // a single-basis step is basis-independent; later steps inherit sampling
    // noise through their off-family input and only obey a statistical bound.
    CHECK(std::abs(a[1].p_measured - a[1].p_analytic) < 1e-10);
    for (std::size_t i = 1; i < a.size(); ++i) {
        CHECK(std::abs(a[i].p_measured - a[i].p_analytic) < 1e-3);
        CHECK(a[i].family_distance < 0.1);
    }
}

TEST_CASE("verify_sequence rejects dimensions without a complete mub set") {
    CHECK_THROWS_AS(verify_sequence(6, Family::isotropic, VerifyMode::mub, {0.5}, 0, 1),
                    TheoryGapError);
}
