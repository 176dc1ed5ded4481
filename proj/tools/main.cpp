#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "steerseq/cli.hpp"

namespace {

using steerseq::Family;
using steerseq::OutputFormat;
using steerseq::RunConfig;
using steerseq::ThresholdKind;
using steerseq::VerifyMode;

// Accepts "7" or "2..150".
bool parse_d_range(const std::string& text, int& lo, int& hi) {
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 2 && hi >= lo;
}

void add_output_options(CLI::App* cmd, RunConfig& config, std::string& out_path) {
    static const std::map<std::string, OutputFormat> formats{
        {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
    cmd->add_option("--format", config.format, "Output format (csv|json)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "steerseq: how many sequential observers can steer half of a shared "
        "entangled state"};
    app.require_subcommand(1);

    RunConfig config;
    std::string out_path;
    std::string d_range = "2";

    static const std::map<std::string, Family> families{
        {"isotropic", Family::isotropic}, {"werner", Family::werner}};
    static const std::map<std::string, ThresholdKind> kinds{
        {"steer_all_projective", ThresholdKind::steer_all_projective},
        {"steer_mub", ThresholdKind::steer_mub},
        {"separability", ThresholdKind::separability},
        {"local_qubit", ThresholdKind::local_qubit},
        {"nonlocal_qubit", ThresholdKind::nonlocal_qubit}};
    static const std::map<std::string, VerifyMode> modes{{"haar", VerifyMode::haar},
                                                         {"mub", VerifyMode::mub}};

    auto* thresholds = app.add_subcommand(
        "thresholds", "Visibility thresholds per dimension, family, and kind");
    auto* thresholds_d =
        thresholds->add_option("--d", d_range, "Dimension or range, e.g. 4 or 2..16");
    add_output_options(thresholds, config, out_path);

    auto* sequence = app.add_subcommand(
        "sequence", "Saturating measurement sequence and observer count");
    sequence->add_option("--d", d_range, "Local dimension");
    sequence->add_option("--family", config.family, "State family")
        ->transform(CLI::CheckedTransformer(families, CLI::ignore_case));
    sequence->add_option("--kind", config.kind, "Threshold kind")
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
    sequence->add_option("--p-steer", config.p_steer,
                         "Threshold override (default: threshold of --kind)");
    sequence->add_option("--p1", config.p1, "Initial visibility (default 1)");
    add_output_options(sequence, config, out_path);

    auto* anonymous = app.add_subcommand(
        "anonymous", "Constant-strength scenario: f_ano grid and optimum");
    anonymous->add_option("--d", d_range, "Local dimension");
    anonymous->add_option("--kind", config.kind, "Threshold kind")
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
    add_output_options(anonymous, config, out_path);

    auto* scaling = app.add_subcommand(
        "scaling", "Observer counts against d/log d benchmarks");
    auto* scaling_d = scaling->add_option("--d", d_range, "Dimension range, e.g. 2..150");
    add_output_options(scaling, config, out_path);

    auto* verify = app.add_subcommand(
        "verify", "Brute-force channel average against the scalar recursion");
    verify->add_option("--d", d_range, "Local dimension");
    verify->add_option("--family", config.family, "State family")
        ->transform(CLI::CheckedTransformer(families, CLI::ignore_case));
    verify->add_option("--mode", config.mode, "Averaging mode (haar|mub)")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    verify->add_option("--eta", config.etas,
                       "Measurement strength per step (repeatable; default: "
                       "saturating sequence strengths)");
    verify->add_option("--samples", config.samples, "Haar-mode Monte Carlo samples");
    verify->add_option("--seed", config.seed, "RNG seed")->envname("STEERSEQ_SEED");
    verify->add_option("--kind", config.kind, "Threshold kind for the default etas")
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
    verify->add_option("--p-steer", config.p_steer, "Threshold override");
    verify->add_option("--p1", config.p1, "Initial visibility (default 1)");
    verify->add_flag("--strict", config.strict,
                     "Exit 3 if any step misses tolerance");
    verify->add_option("--tol", config.tol,
                       "Strict tolerance (default 1e-9 mub, 0.02 haar)");
    add_output_options(verify, config, out_path);

    auto* fig2 = app.add_subcommand("fig2", "Saturating staircase, d = 2");
    add_output_options(fig2, config, out_path);
    auto* fig3 = app.add_subcommand("fig3", "Saturating staircases, d = 2, 4, 16");
    add_output_options(fig3, config, out_path);
    auto* fig4 = app.add_subcommand("fig4", "f_ano curves over eta, d = 2..16");
    add_output_options(fig4, config, out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    config.command = app.get_subcommands().front()->get_name();
    // Table commands default to a dimension sweep rather than a single d.
    if ((config.command == "thresholds" && thresholds_d->count() == 0) ||
        (config.command == "scaling" && scaling_d->count() == 0)) {
        d_range = "2..16";
    }
    if (!parse_d_range(d_range, config.d_min, config.d_max)) {
        std::cerr << "invalid --d value: " << d_range << '\n';
        return 2;
    }

    if (out_path.empty()) {
        return steerseq::run(config, std::cout, std::cerr);
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "cannot open output file: " << out_path << '\n';
        return 2;
    }
    return steerseq::run(config, file, std::cerr);
}
