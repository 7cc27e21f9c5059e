#include "nkdet/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "nkdet/sweep.hpp"

namespace nkdet {

int exit_code_for(Outcome o) {
    switch (o) {
        case Outcome::Determinate: return 0;
        case Outcome::Indeterminate:
        case Outcome::NoStableSolution: return 2;
        case Outcome::Boundary:
        case Outcome::HypothesisNotMet: return 3;
    }
    return 3;
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string fmt4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string roots_line(const RootSet& rs) {
    std::string out;
    for (const auto& z : rs.roots) {
        if (!out.empty()) out += ", ";
        if (std::abs(z.imag()) <= 1e-8) {
            out += fmt4(z.real());
        } else {
            out += fmt4(z.real()) + (z.imag() >= 0 ? " + " : " - ")
                 + fmt4(std::abs(z.imag())) + "i";
        }
    }
    return out;
}

void print_fourier(std::ostream& os, const Poly& p, double x, const ReportConfig& cfg) {
    const FourierTable t = fourier_table(p, x, cfg.zero_tol);
    os << "fourier table at x=" << fmt4(x) << ": (";
    for (size_t i = 0; i < t.entries.values.size(); ++i)
        os << (i ? ", " : "") << fmt4(t.entries.values[i]);
    const int v = cfg.exact_mode ? exact::sign_variations_at(p, x)
                                 : sign_variations(t.entries);
    os << ")  variations = " << v << (cfg.exact_mode ? "  [exact]" : "") << "\n";
}

std::vector<double> decision_points(Family f, const ModelSystem& sys) {
    switch (f) {
        case Family::Gali: return {1.0, -sys.charpoly[2]};  // 1 and b
        case Family::BmNonInertial:
        case Family::BmInertial: return {-1.0, 0.0, 1.0};
        case Family::BmForward:
        case Family::GabaixCubic:
        case Family::GabaixMatrix:
        case Family::Blp: return {0.0, 1.0};
    }
    return {0.0, 1.0};
}

}  // namespace

AnalyzeResult analyze_point(Family f, const ParamSet& params, const ReportConfig& config) {
    std::ostringstream os;
    AnalyzeResult result;

    const ModelSystem sys = build_system(f, params);
    os << "family: " << family_name(f) << "\n";
    if (sys.matrix) {
        os << (sys.poly_is_inverse ? "transition matrix (analysis uses its inverse's polynomial):\n"
                                   : "transition matrix:\n");
        os << sys.matrix->str();
    }
    os << "characteristic polynomial"
       << (sys.poly_is_inverse ? " (of the inverse matrix): " : ": ")
       << sys.charpoly.str() << "\n";
    os << "required explosive roots: " << sys.required_outside << "\n\n";

    for (const double x : decision_points(f, sys))
        print_fourier(os, sys.charpoly, x, config);

    const RootSet roots = all_roots(sys.charpoly, config.oracle());
    RootProfile profile = unit_disk_profile(roots, config.oracle());
    if (sys.poly_is_inverse) std::swap(profile.inside, profile.outside);
    const Verdict oracle_v = blanchard_kahn(profile, sys.required_outside);

    os << "\noracle roots: " << roots_line(roots)
       << "  (max residual " << format_full(roots.max_residual())
       << (roots.converged ? ", converged)" : ", NOT converged)") << "\n";
    os << "unit-disk profile (model matrix side): inside " << profile.inside
       << ", outside " << profile.outside << ", boundary " << profile.boundary << "\n";
    os << "oracle verdict: " << outcome_name(oracle_v.outcome)
       << " (" << oracle_v.evidence.condition << ")\n";

    const AgreementReport agreement = cross_validate(f, params, config);
    os << "analytic: " << agreement.analytic_summary << "\n";
    os << "agreement: " << agreement_name(agreement.agreement);
    if (!agreement.reason.empty()) os << " (" << agreement.reason << ")";
    os << "\n";

    // Headline: analytic verdict where the statement is two-sided,
    // oracle counting where it is sufficient/necessary-only.
    Outcome headline = oracle_v.outcome;
    switch (f) {
        case Family::Gali:
            headline = gali_classify(std::get<GaliParams>(params)).outcome;
            break;
        case Family::BmNonInertial:
            headline = bm_noninertial_classify(std::get<BmNonInertialParams>(params),
                                               config.zero_tol).outcome;
            break;
        case Family::BmInertial:
            headline = bm_inertial_classify(std::get<BmInertialParams>(params),
                                            config.zero_tol).outcome;
            break;
        case Family::GabaixCubic:
        case Family::GabaixMatrix: {
            const CubicView cv = cubic_view(sys.charpoly);
            if (cv.b > 0 && cv.c > 0 && cv.d_minus > 0) {
                try {
                    headline = gabaix_stability_test(GabaixCubic{cv.b, cv.c, cv.d_minus},
                                                     config.zero_tol).outcome;
                } catch (const HypothesisNotMetError&) {
                    headline = Outcome::HypothesisNotMet;
                }
            }
            break;
        }
        case Family::BmForward:
        case Family::Blp:
            break;  // oracle counting is the headline
    }
    os << "verdict: " << outcome_name(headline) << "\n";

    result.text = os.str();
    result.headline = headline;
    result.exit_code = exit_code_for(headline);
    return result;
}

}  // namespace nkdet
