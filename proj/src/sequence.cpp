#include "steerseq/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace steerseq {

namespace {

constexpr double kCountTol = 1e-12;

}  // namespace

double ratio(double eta, int d) {
    if (d < 2) {
        throw std::invalid_argument("ratio: d must be >= 2");
    }
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("ratio: eta must lie in [0,1]");
    }
    const double dd = static_cast<double>(d);
    return (eta + (1.0 - eta) * (dd - 1.0) +
            2.0 * std::sqrt(1.0 - eta) * std::sqrt(1.0 + (dd - 1.0) * eta)) /
           (dd + 1.0);
}

SequenceReport saturating_sequence(int d, double p_steer, double p1, Family family) {
    if (d < 2) {
        throw std::invalid_argument("saturating_sequence: d must be >= 2");
    }
    if (!(p_steer > 0.0 && p_steer <= 1.0) || !(p1 >= 0.0 && p1 <= 1.0)) {
        throw std::invalid_argument("saturating_sequence: need 0 < p_steer <= 1 and p1 in [0,1]");
    }
    SequenceReport report{d, family, p_steer, {}, 0};
    double p = p1;
    int i = 1;
    while (p >= p_steer - kCountTol) {
        const double eta = std::min(1.0, p_steer / p);
        report.entries.push_back({i, p, eta, true});
        p = ratio(eta, d) * p;
        ++i;
    }
    // Terminal row: the first position that can no longer reach threshold.
    // Its eta column keeps the raw quotient (> 1 flags infeasibility).
    report.entries.push_back({i, p, p_steer / p, false});
    report.n_bob = static_cast<int>(report.entries.size()) - 1;
    return report;
}

int count_bobs(int d, Family family, ThresholdKind kind) {
    return saturating_sequence(d, threshold(kind, family, d), 1.0, family).n_bob;
}

double f_ano(double eta, int d, double p_steer) {
    if (d < 2) {
        throw std::invalid_argument("f_ano: d must be >= 2");
    }
    if (!(p_steer > 0.0 && p_steer < 1.0)) {
        throw std::invalid_argument("f_ano: p_steer must lie in (0,1)");
    }
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("f_ano: eta must lie in [0,1]");
    }
    if (eta == p_steer) {
        return 1.0;  // removable limit of the quotient below
    }
    if (eta == 0.0) {
        throw std::invalid_argument("f_ano: eta = 0 gives ratio 1 (log ratio = 0)");
    }
    return 1.0 + std::log(p_steer / eta) / std::log(ratio(eta, d));
}

int anonymous_count(double eta, int d, double p_steer) {
    if (eta <= p_steer) {
        return 0;
    }
    const double f = f_ano(eta, d, p_steer);
    if (f <= 1.0) {
        return 0;
    }
    // Number of integers i >= 1 with i < f; an integral f excludes itself.
    return static_cast<int>(std::ceil(f)) - 1;
}

AnonymousReport anonymous_optimum(int d, ThresholdKind kind) {
    const double p_steer = threshold(kind, Family::isotropic, d);
    AnonymousReport report{d, p_steer, {}, 1.0, 0};
    constexpr double kStep = 1e-4;
    const long n_steps = static_cast<long>(std::floor((1.0 - p_steer) / kStep));
    bool seen = false;
    for (long k = 1; k <= n_steps + 1; ++k) {
        const double eta = std::min(1.0, p_steer + kStep * k);
        const double f = f_ano(eta, d, p_steer);
        const int count = anonymous_count(eta, d, p_steer);
        report.eta_grid.push_back({eta, f, count});
        if (!seen || count > report.count_star) {
            seen = true;
            report.count_star = count;
            report.eta_star = eta;
        }
        if (eta == 1.0) {
            break;
        }
    }
    return report;
}

std::vector<ScalingRow> scaling_table(const std::vector<int>& d_values) {
    std::vector<ScalingRow> rows;
    rows.reserve(d_values.size());
    const double half_log2 = 0.5 * std::log(2.0);
    for (int d : d_values) {
        if (d < 2) {
            throw std::invalid_argument("scaling_table: d must be >= 2");
        }
        const double dd = static_cast<double>(d);
        const double d_over_log = dd / std::log(dd);
        ScalingRow row{};
        row.d = d;
        row.n_bob_all = count_bobs(d, Family::isotropic, ThresholdKind::steer_all_projective);
        row.n_bob_mub = count_bobs(d, Family::isotropic, ThresholdKind::steer_mub);
        row.d_over_log_d = d_over_log;
        row.ratio_all = row.n_bob_all / d_over_log;
        row.lower_all = half_log2 * d_over_log;
        row.lower_mub = half_log2 * std::sqrt(dd);
        row.csmub_known = is_prime_power(d);
        rows.push_back(row);
    }
    return rows;
}

bool is_prime_power(int n) {
    if (n < 2) {
        return false;
    }
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            return n == 1;
        }
    }
    return true;  // prime
}

}  // namespace steerseq
