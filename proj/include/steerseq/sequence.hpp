#pragma once

#include <vector>

#include "steerseq/states.hpp"

namespace steerseq {

struct SequenceEntry {
    int index;    // 1-based observer position
    double p;     // visibility seen by this observer
    double eta;   // measurement strength chosen at this position
    bool steers;
};

struct SequenceReport {
    int d;
    Family family;
    double threshold;
    std::vector<SequenceEntry> entries;  // steering prefix plus one terminal row
    int n_bob;
};

struct AnonymousGridPoint {
    double eta;
    double f;   // position bound: observer i steers iff i < f
    int count;
};

struct AnonymousReport {
    int d;
    double threshold;
    std::vector<AnonymousGridPoint> eta_grid;
    double eta_star;
    int count_star;
};

struct ScalingRow {
    int d;
    int n_bob_all;
    int n_bob_mub;
    double d_over_log_d;
    double ratio_all;   // n_bob_all / (d / log d)
    double lower_all;   // (log 2 / 2) d / log d
    double lower_mub;   // (log 2 / 2) sqrt(d)
    bool csmub_known;   // complete MUB set known to exist (prime power d)
};

// One-step visibility ratio of the basis-averaged unsharp measurement:
// p_{i+1} = ratio(eta, d) * p_i.
double ratio(double eta, int d);

// Greedy sequence where every observer just saturates the steering
// threshold: eta_i = p_steer / p_i while p_i stays above threshold
// (closed comparison with tolerance 1e-12). The final entry records the
// first non-steering position.
SequenceReport saturating_sequence(int d, double p_steer, double p1 = 1.0,
                                   Family family = Family::isotropic);

// Saturating-sequence observer count at the named threshold, p1 = 1.
int count_bobs(int d, Family family, ThresholdKind kind);

// Constant-strength scenario: observer i can steer iff i < f_ano(eta, d).
// Equals 1 at eta = p_steer (removable limit); below it no observer steers.
double f_ano(double eta, int d, double p_steer);

int anonymous_count(double eta, int d, double p_steer);

// Dense grid search (step 1e-4 over (p_steer, 1]) for the strength
// maximizing the constant-strength count; ties break toward smaller eta.
AnonymousReport anonymous_optimum(int d, ThresholdKind kind);

std::vector<ScalingRow> scaling_table(const std::vector<int>& d_values);

bool is_prime_power(int n);

}  // namespace steerseq
