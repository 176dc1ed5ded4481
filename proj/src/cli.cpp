#include "steerseq/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

namespace steerseq {

namespace {

using nlohmann::json;

// Fixed 12-significant-digit rendering; parsing a cell and re-rendering it
// reproduces the byte sequence, which keeps emitted CSV stable under
// round-trips.
std::string fmt12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

const char* mode_name(VerifyMode m) { return m == VerifyMode::haar ? "haar" : "mub"; }

void emit(const RunConfig& config, std::ostream& body, const std::string& csv,
          const json& j) {
    if (config.format == OutputFormat::csv) {
        body << csv;
    } else {
        body << j.dump(2) << '\n';
    }
}

json sequence_json(const SequenceReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"i", e.index}, {"p", e.p}, {"eta", e.eta}, {"steers", e.steers}});
    }
    return {{"d", report.d},
            {"family", family_name(report.family)},
            {"threshold", report.threshold},
            {"n_bob", report.n_bob},
            {"entries", entries}};
}

void append_sequence_csv(std::string& csv, const SequenceReport& report) {
    for (const auto& e : report.entries) {
        csv += std::to_string(report.d) + ',' + std::to_string(e.index) + ',' +
               fmt12(e.p) + ',' + fmt12(e.eta) + ',' + bool_name(e.steers) + '\n';
    }
}

int run_thresholds(const RunConfig& config, std::ostream& body) {
    std::string csv = "d,family,kind,value\n";
    json rows = json::array();
    constexpr ThresholdKind kinds[] = {
        ThresholdKind::steer_all_projective, ThresholdKind::steer_mub,
        ThresholdKind::separability, ThresholdKind::local_qubit,
        ThresholdKind::nonlocal_qubit};
    constexpr Family families[] = {Family::isotropic, Family::werner};
    for (int d = config.d_min; d <= config.d_max; ++d) {
        for (ThresholdKind kind : kinds) {
            for (Family family : families) {
                double value = 0.0;
                try {
                    value = threshold(kind, family, d);
                } catch (const TheoryGapError&) {
                    continue;  // combination without a known value: no row
                }
                if (kind == ThresholdKind::separability && family == Family::werner) {
                    continue;  // family-independent value, avoid duplicate rows
                }
                csv += std::to_string(d) + ',' + family_name(family) + ',' +
                       threshold_kind_name(kind) + ',' + fmt12(value) + '\n';
                rows.push_back({{"d", d},
                                {"family", family_name(family)},
                                {"kind", threshold_kind_name(kind)},
                                {"value", value}});
            }
        }
    }
    emit(config, body, csv, rows);
    return 0;
}

int run_sequence(const RunConfig& config, std::ostream& body) {
    const double p_steer = config.p_steer > 0.0
                               ? config.p_steer
                               : threshold(config.kind, config.family, config.d_min);
    const SequenceReport report =
        saturating_sequence(config.d_min, p_steer, config.p1, config.family);
    std::string csv = "d,i,p_i,eta_i,steers\n";
    append_sequence_csv(csv, report);
    emit(config, body, csv, sequence_json(report));
    return 0;
}

int run_anonymous(const RunConfig& config, std::ostream& body) {
    const AnonymousReport report = anonymous_optimum(config.d_min, config.kind);
    std::string csv = "eta,f_ano,count,is_optimum\n";
    json grid = json::array();
    for (const auto& point : report.eta_grid) {
        const bool opt = point.eta == report.eta_star;
        csv += fmt12(point.eta) + ',' + fmt12(point.f) + ',' +
               std::to_string(point.count) + ',' + bool_name(opt) + '\n';
        grid.push_back({{"eta", point.eta}, {"f_ano", point.f}, {"count", point.count}});
    }
    const json j = {{"d", report.d},
                    {"threshold", report.threshold},
                    {"grid", grid},
                    {"optimum", {{"eta", report.eta_star}, {"count", report.count_star}}}};
    emit(config, body, csv, j);
    return 0;
}

int run_scaling(const RunConfig& config, std::ostream& body) {
    std::vector<int> ds;
    for (int d = config.d_min; d <= config.d_max; ++d) {
        ds.push_back(d);
    }
    std::string csv =
        "d,n_bob_all,n_bob_mub,d_over_log_d,ratio_all,lower_all,lower_mub,csmub_known\n";
    json rows = json::array();
    for (const ScalingRow& r : scaling_table(ds)) {
        csv += std::to_string(r.d) + ',' + std::to_string(r.n_bob_all) + ',' +
               std::to_string(r.n_bob_mub) + ',' + fmt12(r.d_over_log_d) + ',' +
               fmt12(r.ratio_all) + ',' + fmt12(r.lower_all) + ',' +
               fmt12(r.lower_mub) + ',' + bool_name(r.csmub_known) + '\n';
        rows.push_back({{"d", r.d},
                        {"n_bob_all", r.n_bob_all},
                        {"n_bob_mub", r.n_bob_mub},
                        {"d_over_log_d", r.d_over_log_d},
                        {"ratio_all", r.ratio_all},
                        {"lower_all", r.lower_all},
                        {"lower_mub", r.lower_mub},
                        {"csmub_known", r.csmub_known}});
    }
    emit(config, body, csv, rows);
    return 0;
}

int run_verify(const RunConfig& config, std::ostream& body, std::ostream& diag) {
    std::vector<double> etas = config.etas;
    if (etas.empty()) {
        // Default: the strengths of the saturating sequence for this setup.
        const double p_steer = config.p_steer > 0.0
                                   ? config.p_steer
                                   : threshold(config.kind, config.family, config.d_min);
        for (const auto& e : saturating_sequence(config.d_min, p_steer, config.p1,
                                                 config.family).entries) {
            if (e.steers) {
                etas.push_back(e.eta);
            }
        }
    }
    const auto reports = verify_sequence(config.d_min, config.family, config.mode, etas,
                                         config.samples, config.seed);
    std::string csv = "step,eta,p_in,p_analytic,p_measured,family_distance\n";
    json rows = json::array();
    int step = 0;
    for (const auto& r : reports) {
        csv += std::to_string(step) + ',' + fmt12(r.eta) + ',' + fmt12(r.p_in) + ',' +
               fmt12(r.p_analytic) + ',' + fmt12(r.p_measured) + ',' +
               fmt12(r.family_distance) + '\n';
        rows.push_back({{"step", step},
                        {"eta", r.eta},
                        {"p_in", r.p_in},
                        {"p_analytic", r.p_analytic},
                        {"p_measured", r.p_measured},
                        {"family_distance", r.family_distance}});
        ++step;
    }
    const json j = {{"d", config.d_min},
                    {"family", family_name(config.family)},
                    {"mode", mode_name(config.mode)},
                    {"samples", config.samples},
                    {"seed", config.seed},
                    {"reports", rows}};
    emit(config, body, csv, j);

    if (config.strict) {
        const double tol = config.tol > 0.0
                               ? config.tol
                               : (config.mode == VerifyMode::mub ? 1e-9 : 0.02);
        for (std::size_t i = 1; i < reports.size(); ++i) {
            const double err = std::abs(reports[i].p_measured - reports[i].p_analytic);
            if (err > tol || reports[i].family_distance > tol) {
                diag << "verification breach at step " << i << ": |p_measured - p_analytic| = "
                     << fmt12(err) << ", family_distance = "
                     << fmt12(reports[i].family_distance) << ", tolerance = " << fmt12(tol)
                     << '\n';
                return 3;
            }
        }
    }
    return 0;
}

int run_fig2_fig3(const RunConfig& config, std::ostream& body) {
    const std::vector<int> ds =
        config.command == "fig2" ? std::vector<int>{2} : std::vector<int>{2, 4, 16};
    std::string csv = "d,i,p_i,eta_i,steers\n";
    json series = json::array();
    for (int d : ds) {
        const double p_steer =
            threshold(ThresholdKind::steer_all_projective, Family::isotropic, d);
        const SequenceReport report = saturating_sequence(d, p_steer, 1.0);
        append_sequence_csv(csv, report);
        series.push_back(sequence_json(report));
    }
    emit(config, body, csv, series);
    return 0;
}

int run_fig4(const RunConfig& config, std::ostream& body) {
    std::string csv = "d,eta,eta_rescaled,f_ano\n";
    json series = json::array();
    constexpr double kStep = 1e-3;
    for (int d = 2; d <= 16; ++d) {
        const double p_steer =
            threshold(ThresholdKind::steer_all_projective, Family::isotropic, d);
        json points = json::array();
        const long n_steps = static_cast<long>(std::floor((1.0 - p_steer) / kStep));
        for (long k = 1; k <= n_steps + 1; ++k) {
            const double eta = std::min(1.0, p_steer + kStep * k);
            const double f = f_ano(eta, d, p_steer);
            const double rescaled = (eta - p_steer) / (1.0 - p_steer);
            csv += std::to_string(d) + ',' + fmt12(eta) + ',' + fmt12(rescaled) + ',' +
                   fmt12(f) + '\n';
            points.push_back({{"eta", eta}, {"eta_rescaled", rescaled}, {"f_ano", f}});
            if (eta == 1.0) {
                break;
            }
        }
        series.push_back({{"d", d}, {"threshold", p_steer}, {"points", points}});
    }
    emit(config, body, csv, series);
    return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& body, std::ostream& diag) {
    try {
        if (config.command == "thresholds") return run_thresholds(config, body);
        if (config.command == "sequence") return run_sequence(config, body);
        if (config.command == "anonymous") return run_anonymous(config, body);
        if (config.command == "scaling") return run_scaling(config, body);
        if (config.command == "verify") return run_verify(config, body, diag);
        if (config.command == "fig2" || config.command == "fig3")
            return run_fig2_fig3(config, body);
        if (config.command == "fig4") return run_fig4(config, body);
        diag << "unknown command: " << config.command << '\n';
        return 2;
    } catch (const TheoryGapError& e) {
        diag << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        diag << e.what() << '\n';
        return 2;
    }
}

}  // namespace steerseq
