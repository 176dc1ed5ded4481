#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "steerseq/verify.hpp"

namespace steerseq {

enum class OutputFormat { csv, json };

struct RunConfig {
    std::string command;  // thresholds|sequence|anonymous|scaling|verify|fig2|fig3|fig4
    int d_min = 2;
    int d_max = 2;
    Family family = Family::isotropic;
    ThresholdKind kind = ThresholdKind::steer_all_projective;
    double p_steer = -1.0;  // < 0: use threshold(kind, family, d)
    double p1 = 1.0;
    std::vector<double> etas;  // verify only; empty: saturating sequence strengths
    long samples = 10000;
    std::uint64_t seed = 1;
    VerifyMode mode = VerifyMode::mub;
    bool strict = false;
    double tol = -1.0;  // < 0: 1e-9 in mub mode, 0.02 in haar mode
    OutputFormat format = OutputFormat::csv;
};

// Executes one subcommand, writing the data to `body` and diagnostics to
// `diag`. Returns 0 on success, 1 when the required theory is unavailable,
// 2 on invalid arguments, 3 when --strict verification fails tolerance.
int run(const RunConfig& config, std::ostream& body, std::ostream& diag);

}  // namespace steerseq
