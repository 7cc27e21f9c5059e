#include "nkdet/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nkdet/report.hpp"

namespace nkdet {

const std::vector<std::string>& family_params(Family f) {
    static const std::vector<std::string> gali{"k", "sigma", "eta", "beta"};
    static const std::vector<std::string> bmn{"k", "sigma", "beta", "phi-x", "phi-pi"};
    static const std::vector<std::string> bmi{"k", "sigma", "beta", "phi-x", "phi-pi", "phi-r"};
    static const std::vector<std::string> cubic{"b", "c", "d"};
    static const std::vector<std::string> matrix{"m11", "m12", "m13", "m21", "m22",
                                                 "m23", "m31", "m32", "m33"};
    static const std::vector<std::string> blp{"beta", "eta", "gamma", "rho-r",
                                              "k", "varphi", "phi-y", "phi-pi"};
    switch (f) {
        case Family::Gali: return gali;
        case Family::BmNonInertial: return bmn;
        case Family::BmInertial:
        case Family::BmForward: return bmi;
        case Family::GabaixCubic: return cubic;
        case Family::GabaixMatrix: return matrix;
        case Family::Blp: return blp;
    }
    throw std::logic_error("family_params: unknown family");
}

ParamSet params_from_map(Family f, const std::map<std::string, double>& v) {
    const auto get = [&](const char* name) {
        const auto it = v.find(name);
        if (it == v.end())
            throw InvalidParams(std::string("missing parameter --") + name);
        return it->second;
    };
    switch (f) {
        case Family::Gali:
            return GaliParams{get("k"), get("sigma"), get("eta"), get("beta")};
        case Family::BmNonInertial:
            return BmNonInertialParams{get("k"), get("sigma"), get("beta"),
                                       get("phi-x"), get("phi-pi")};
        case Family::BmInertial:
            return BmInertialParams{get("k"), get("sigma"), get("beta"),
                                    get("phi-x"), get("phi-pi"), get("phi-r")};
        case Family::BmForward:
            return BmForwardParams{get("k"), get("sigma"), get("beta"),
                                   get("phi-x"), get("phi-pi"), get("phi-r")};
        case Family::GabaixCubic:
            return GabaixCubic{get("b"), get("c"), get("d")};
        case Family::GabaixMatrix: {
            Matrix3 m;
            const char* names[9] = {"m11", "m12", "m13", "m21", "m22",
                                    "m23", "m31", "m32", "m33"};
            for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = get(names[i]);
            return m;
        }
        case Family::Blp:
            return BlpParams{get("beta"), get("eta"), get("gamma"), get("rho-r"),
                             get("k"), get("varphi"), get("phi-y"), get("phi-pi")};
    }
    throw std::logic_error("params_from_map: unknown family");
}

void SweepSpec::validate() const {
    if (axes.empty() || axes.size() > 2)
        throw InvalidParams("sweep requires one or two axes");
    const auto& names = family_params(family);
    std::set<std::string> assigned;
    for (const auto& ax : axes) {
        if (std::find(names.begin(), names.end(), ax.param) == names.end())
            throw InvalidParams("axis parameter '" + ax.param + "' is not a "
                                + family_name(family) + " parameter");
        if (!(ax.step > 0)) throw InvalidParams("axis step must be > 0");
        if (!(ax.start <= ax.stop)) throw InvalidParams("axis start must be <= stop");
        if (!assigned.insert(ax.param).second)
            throw InvalidParams("axis parameter '" + ax.param + "' repeated");
    }
    for (const auto& [name, value] : fixed) {
        (void)value;
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw InvalidParams("parameter '" + name + "' is not a "
                                + family_name(family) + " parameter");
        if (!assigned.insert(name).second)
            throw InvalidParams("parameter '" + name + "' assigned twice");
    }
    for (const auto& name : names)
        if (!assigned.count(name))
            throw InvalidParams("parameter '" + name + "' is unassigned");
}

std::vector<double> axis_values(const AxisSpec& axis) {
    std::vector<double> vals;
    const double span = axis.stop - axis.start;
    const auto n = static_cast<long long>(std::floor(span / axis.step * (1.0 + 1e-12))) + 1;
    for (long long i = 0; i < n; ++i) {
        double v = axis.start + static_cast<double>(i) * axis.step;
        if (std::abs(v - axis.stop) <= axis.step * 1e-9) v = axis.stop;
        vals.push_back(v);
    }
    if (vals.back() < axis.stop - axis.step * 1e-9) vals.push_back(axis.stop);
    return vals;
}

namespace {

std::string csv_safe(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n') c = ';';
    return s;
}

struct RowResult {
    std::string verdict;
    std::string counts;  // "inside,outside,boundary" or ",,"
    std::string condition;
};

RowResult evaluate_row(Family f, const std::map<std::string, double>& values,
                       const ReportConfig& config) {
    RowResult row;
    try {
        const ParamSet params = params_from_map(f, values);
        const ModelSystem sys = build_system(f, params);
        const RootSet roots = all_roots(sys.charpoly, config.oracle());
        RootProfile profile = unit_disk_profile(roots, config.oracle());
        if (sys.poly_is_inverse) std::swap(profile.inside, profile.outside);
        const Verdict oracle_v = blanchard_kahn(profile, sys.required_outside);

        Outcome headline = oracle_v.outcome;
        std::string condition = oracle_v.evidence.condition;
        switch (f) {
            case Family::Gali: {
                const Verdict a = gali_classify(std::get<GaliParams>(params));
                headline = a.outcome;
                condition = a.evidence.condition;
                break;
            }
            case Family::BmNonInertial: {
                const Verdict a = bm_noninertial_classify(std::get<BmNonInertialParams>(params),
                                                          config.zero_tol);
                headline = a.outcome;
                condition = a.evidence.condition;
                break;
            }
            case Family::BmInertial: {
                const Verdict a = bm_inertial_classify(std::get<BmInertialParams>(params),
                                                       config.zero_tol);
                headline = a.outcome;
                condition = a.evidence.condition;
                break;
            }
            case Family::GabaixCubic:
            case Family::GabaixMatrix: {
                const CubicView cv = cubic_view(sys.charpoly);
                const GabaixCubic g{cv.b, cv.c, cv.d_minus};
                if (g.b > 0 && g.c > 0 && g.d > 0) {
                    try {
                        const Verdict a = gabaix_stability_test(g, config.zero_tol);
                        headline = a.outcome;
                        condition = a.evidence.condition;
                    } catch (const HypothesisNotMetError& e) {
                        headline = Outcome::HypothesisNotMet;
                        condition = e.what();
                    }
                } else {
                    condition = "cubic shape hypotheses not met; oracle verdict: " + condition;
                }
                break;
            }
            case Family::BmForward: {
                const CertifiedResult cr =
                    bm_forward_classify(std::get<BmForwardParams>(params), config.zero_tol);
                condition = std::string(certainty_name(cr.certainty)) + ": " + cr.condition;
                break;
            }
            case Family::Blp: {
                const BlpNecessaryReport nr =
                    blp_necessary_check(std::get<BlpParams>(params), config.zero_tol);
                condition = std::string(certainty_name(nr.certainty))
                          + ": P(1) " + (nr.p1_positive ? "> 0" : "<= 0")
                          + "; v1 = " + std::to_string(nr.v1);
                break;
            }
        }
        row.verdict = outcome_name(headline);
        row.counts = std::to_string(profile.inside) + "," + std::to_string(profile.outside)
                   + "," + std::to_string(profile.boundary);
        row.condition = csv_safe(condition);
    } catch (const std::exception& e) {
        row.verdict = "invalid";
        row.counts = ",,";
        row.condition = csv_safe(e.what());
    }
    return row;
}

}  // namespace

void run_sweep(const SweepSpec& spec, const ReportConfig& config, std::ostream& out) {
    spec.validate();
    const bool two_d = spec.axes.size() == 2;

    out << spec.axes[0].param;
    if (two_d) out << "," << spec.axes[1].param;
    out << ",verdict,inside,outside,boundary,condition\n";

    const std::vector<double> v1 = axis_values(spec.axes[0]);
    const std::vector<double> v2 = two_d ? axis_values(spec.axes[1])
                                         : std::vector<double>{0.0};
    std::map<std::string, double> values = spec.fixed;
    for (const double a : v1) {
        values[spec.axes[0].param] = a;
        for (const double b : v2) {
            if (two_d) values[spec.axes[1].param] = b;
            const RowResult row = evaluate_row(spec.family, values, config);
            out << format_full(a);
            if (two_d) out << "," << format_full(b);
            out << "," << row.verdict << "," << row.counts << "," << row.condition << "\n";
        }
    }
}

}  // namespace nkdet
