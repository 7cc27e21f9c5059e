#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nkdet/config.hpp"
#include "nkdet/report.hpp"
#include "nkdet/sweep.hpp"
#include "nkdet/verify.hpp"

namespace {

using namespace nkdet;

struct CommonFlags {
    std::string config_path;
    double zero_tol = -1;
    double boundary_tol = -1;
    std::uint64_t seed = 0;
    int samples = -1;
    bool exact = false;
    bool seed_set = false, samples_set = false, exact_set = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "config file (key=value lines)");
    cmd->add_option("--zero-tol", f.zero_tol, "absolute zero threshold for sign decisions");
    cmd->add_option("--boundary-tol", f.boundary_tol, "unit-circle band half-width");
    cmd->add_option("--seed", f.seed, "RNG seed")->each([&](const std::string&) { f.seed_set = true; });
    cmd->add_option("--samples", f.samples, "draws per family")
        ->each([&](const std::string&) { f.samples_set = true; });
    cmd->add_flag("--exact", f.exact, "exact rational sign evaluation")
        ->each([&](const std::string&) { f.exact_set = true; });
}

/// defaults < config file < flags
ReportConfig resolve_config(const CommonFlags& f) {
    ReportConfig cfg;
    if (!f.config_path.empty())
        apply_config_entries(parse_config_file(f.config_path), cfg);
    if (f.zero_tol > 0) cfg.zero_tol = f.zero_tol;
    if (f.boundary_tol > 0) cfg.boundary_tol = f.boundary_tol;
    if (f.seed_set) cfg.seed = f.seed;
    if (f.samples_set) cfg.sample_count = f.samples;
    if (f.exact_set) cfg.exact_mode = f.exact;
    return cfg;
}

struct ParamFlags {
    std::map<std::string, double> values;
    std::string entries;  // gabaix-matrix: 9 comma-separated values
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
    static const char* names[] = {"k", "sigma", "eta", "beta", "phi-x", "phi-pi",
                                  "phi-r", "b", "c", "d", "gamma", "rho-r",
                                  "varphi", "phi-y", "m11", "m12", "m13", "m21",
                                  "m22", "m23", "m31", "m32", "m33"};
    for (const char* n : names) {
        const std::string name = n;
        cmd->add_option_function<double>(
            "--" + name, [&pf, name](double v) { pf.values[name] = v; });
    }
    cmd->add_option("--entries", pf.entries,
                    "nine comma-separated matrix entries, row-major (gabaix-matrix)");
}

void fill_matrix_entries(ParamFlags& pf) {
    if (pf.entries.empty()) return;
    std::stringstream ss(pf.entries);
    std::string tok;
    const char* names[9] = {"m11", "m12", "m13", "m21", "m22", "m23", "m31", "m32", "m33"};
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 9) throw InvalidParams("--entries: expected exactly 9 values");
        pf.values[names[i++]] = std::stod(tok);
    }
    if (i != 9) throw InvalidParams("--entries: expected exactly 9 values");
}

Family parse_family(const std::string& name) {
    const auto f = family_from_name(name);
    if (!f)
        throw InvalidParams("unknown family '" + name
                            + "' (expected gali, bm-noninertial, bm-inertial, "
                              "bm-forward, gabaix-cubic, gabaix-matrix or blp)");
    return *f;
}

AxisSpec parse_axis(const std::string& text) {
    // name=start:stop:step
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw InvalidParams("--axis: expected name=start:stop:step, got '" + text + "'");
    AxisSpec ax;
    ax.param = text.substr(0, eq);
    const std::string rest = text.substr(eq + 1);
    const auto c1 = rest.find(':');
    const auto c2 = rest.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw InvalidParams("--axis: expected name=start:stop:step, got '" + text + "'");
    ax.start = std::stod(rest.substr(0, c1));
    ax.stop = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
    ax.step = std::stod(rest.substr(c2 + 1));
    return ax;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial root-location and model determinacy toolkit"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "single-point determinacy report");
    std::string analyze_family;
    analyze->add_option("family", analyze_family, "model family")->required();
    CommonFlags analyze_common;
    add_common(analyze, analyze_common);
    ParamFlags analyze_params;
    add_param_flags(analyze, analyze_params);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "parameter sweep to a CSV determinacy map");
    std::string sweep_family;
    sweep->add_option("family", sweep_family, "model family")->required();
    std::vector<std::string> axis_texts;
    sweep->add_option("--axis", axis_texts, "axis as name=start:stop:step (1 or 2)");
    std::string output_path;
    sweep->add_option("--output", output_path, "output CSV path")->required();
    CommonFlags sweep_common;
    add_common(sweep, sweep_common);
    ParamFlags sweep_params;
    add_param_flags(sweep, sweep_params);

    // verify
    auto* verify = app.add_subcommand("verify", "randomized analytic-vs-oracle verification");
    std::string families_text = "gali,bm-noninertial,bm-inertial,bm-forward,gabaix-cubic,blp";
    verify->add_option("--families", families_text, "comma-separated family list");
    CommonFlags verify_common;
    add_common(verify, verify_common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            const ReportConfig cfg = resolve_config(analyze_common);
            const Family family = parse_family(analyze_family);
            fill_matrix_entries(analyze_params);
            const ParamSet params = params_from_map(family, analyze_params.values);
            const AnalyzeResult res = analyze_point(family, params, cfg);
            std::cout << res.text;
            return res.exit_code;
        }
        if (*sweep) {
            const ReportConfig cfg = resolve_config(sweep_common);
            SweepSpec spec;
            spec.family = parse_family(sweep_family);
            for (const auto& t : axis_texts) spec.axes.push_back(parse_axis(t));
            fill_matrix_entries(sweep_params);
            spec.fixed = sweep_params.values;
            spec.output_path = output_path;
            spec.validate();
            std::ofstream out(spec.output_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open output file: " + spec.output_path);
            run_sweep(spec, cfg, out);
            if (!out) throw std::runtime_error("write failed: " + spec.output_path);
            return 0;
        }
        if (*verify) {
            const ReportConfig cfg = resolve_config(verify_common);
            if (cfg.sample_count < 1)
                throw InvalidParams("--samples must be >= 1");
            std::vector<Family> families;
            std::stringstream ss(families_text);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) families.push_back(parse_family(tok));
            if (families.empty()) throw InvalidParams("--families: empty list");
            const VerifySummary summary = run_verification(families, cfg);
            std::cout << summary.str();
            return summary.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
