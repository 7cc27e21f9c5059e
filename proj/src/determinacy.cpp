#include "nkdet/determinacy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace nkdet {

namespace {

int sign3(double v, double tol) {
    if (v > tol) return 1;
    if (v < -tol) return -1;
    return 0;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Determinate: return "determinate";
        case Outcome::Indeterminate: return "indeterminate";
        case Outcome::NoStableSolution: return "no-stable-solution";
        case Outcome::Boundary: return "boundary";
        case Outcome::HypothesisNotMet: return "hypothesis-not-met";
    }
    return "?";
}

const char* certainty_name(Certainty c) {
    switch (c) {
        case Certainty::Proved: return "proved";
        case Certainty::NecessaryFailed: return "necessary-failed";
        case Certainty::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* agreement_name(Agreement a) {
    switch (a) {
        case Agreement::Agree: return "agree";
        case Agreement::Disagree: return "disagree";
        case Agreement::Skipped: return "skipped";
    }
    return "?";
}

RegionPredicate::Result RegionPredicate::evaluate(std::span<const double> args,
                                                  double zero_tol) const {
    const double m = margin_fn(args);
    return Result{m >= 0.0, m, std::abs(m) <= zero_tol};
}

CubicCaseProfile cubic_profile(double b, double c, double d, double zero_tol) {
    if (!(b > 0) || !(d > 0))
        throw HypothesisNotMetError("cubic_profile: requires b > 0 and d > 0");
    const Poly p{d, c, -b, 1.0};
    const Poly dp = derivative(p);
    const double pm1 = eval(p, -1.0);
    const double pp1 = eval(p, 1.0);

    CubicCaseProfile r;
    r.sign_m1 = sign3(pm1, zero_tol);
    r.sign_p1 = sign3(pp1, zero_tol);
    r.b_gt_2 = b > 2.0;

    if (r.sign_m1 < 0 && r.sign_p1 < 0) {
        r.case_id = CubicCase::VI;
        r.inside = 2; r.outside = 1; r.boundary = 0;
        r.description = "two real roots in (-1,1), one real root > 1";
    } else if (r.sign_m1 < 0 && r.sign_p1 > 0) {
        if (r.b_gt_2) {
            r.case_id = CubicCase::VII;
            r.inside = 1; r.outside = 2; r.boundary = 0;
            r.description = "one root in (-1,0), two roots outside the unit disk";
        } else {
            r.case_id = CubicCase::III;
            r.description = "exactly one real root in (-1,0) (P(-1)<0); full layout needs b>2";
        }
    } else if (r.sign_m1 > 0 && r.sign_p1 < 0) {
        if (r.b_gt_2) {
            r.case_id = CubicCase::VIII;
            r.inside = 1; r.outside = 2; r.boundary = 0;
            r.description = "one root in (0,1), two roots with |Re| > 1";
        } else {
            r.case_id = CubicCase::IV;
            r.description = "exactly one real root in (0,1) (P(1)<0); full layout needs b>2";
        }
    } else if (r.sign_m1 > 0 && r.sign_p1 > 0) {
        if (r.b_gt_2) {
            r.case_id = CubicCase::IX;
            r.inside = 0; r.outside = 3; r.boundary = 0;
            r.description = "all roots outside the unit disk";
        } else {
            r.case_id = CubicCase::Unclassified;
            r.description = "P(-1)>0 and P(1)>0 but b<=2: no case applies";
        }
    } else if (r.sign_m1 == 0 && r.sign_p1 < 0
               && std::abs(eval(dp, -1.0)) > zero_tol) {
        r.case_id = CubicCase::X_ROOT_AT_M1;
        r.inside = 1; r.outside = 1; r.boundary = 1;
        r.description = "simple root at -1 (on the circle), one root in (0,1), one root > 2";
    } else if (r.sign_p1 == 0 && r.sign_m1 > 0
               && std::abs(eval(dp, 1.0)) > zero_tol) {
        r.case_id = CubicCase::X_ROOT_AT_P1;
        r.inside = 0; r.outside = 2; r.boundary = 1;
        r.description = "simple root at 1 (on the circle), two roots outside";
    } else {
        r.case_id = CubicCase::Unclassified;
        r.description = "P(-1) or P(1) within zero_tol of 0 without a boundary disjunct";
    }
    return r;
}

Verdict blanchard_kahn(const RootProfile& profile, int required_outside) {
    Verdict v;
    v.evidence.inside = profile.inside;
    v.evidence.outside = profile.outside;
    v.evidence.boundary = profile.boundary;
    if (profile.boundary > 0) {
        v.outcome = Outcome::Boundary;
        v.evidence.condition = "root(s) on the unit circle";
    } else if (profile.outside == required_outside) {
        v.outcome = Outcome::Determinate;
        v.evidence.condition = "explosive-root count matches requirement ("
                               + std::to_string(required_outside) + ")";
    } else if (profile.outside < required_outside) {
        v.outcome = Outcome::Indeterminate;
        v.evidence.condition = "too few explosive roots (" + std::to_string(profile.outside)
                               + " < " + std::to_string(required_outside) + ")";
    } else {
        v.outcome = Outcome::NoStableSolution;
        v.evidence.condition = "too many explosive roots (" + std::to_string(profile.outside)
                               + " > " + std::to_string(required_outside) + ")";
    }
    return v;
}

Verdict gali_classify(const GaliParams& p) {
    const ModelSystem sys = gali_system(p);
    const double b = -sys.charpoly[2];
    Verdict v;
    v.outcome = Outcome::Determinate;
    v.evidence.condition = "unconditional determinacy: unique explosive root in (1, "
                           + fmt(b) + ")";
    v.evidence.inside = 2;
    v.evidence.outside = 1;
    v.evidence.boundary = 0;
    v.evidence.poly = sys.charpoly;
    v.evidence.margin = std::numeric_limits<double>::infinity();
    return v;
}

namespace {

// Shared sign logic of the two lagged-data theorems. E1 and E2 carry the
// signs of P(-1) and P(1) of the relevant cubic (positive weights); d3m1
// and d3p1 are the derivative nondegeneracy values for the zero-locus
// disjuncts. The root layout of the cubic pins the model-side counts
// (swapped when the cubic belongs to the inverse matrix), and the
// explosive-root requirement turns those counts into the verdict.
Verdict lagged_rule_verdict(const char* rule, double E1, double E2,
                            double d3m1, double d3p1, const ModelSystem& sys,
                            double zero_tol) {
    const int s1 = sign3(E1, zero_tol);
    const int s2 = sign3(E2, zero_tol);
    Verdict v;
    v.evidence.poly = sys.charpoly;
    v.evidence.margin = std::min(std::abs(E1), std::abs(E2));

    const auto layout = [&](int in_poly, int out_poly) {
        v.evidence.inside = sys.poly_is_inverse ? out_poly : in_poly;
        v.evidence.outside = sys.poly_is_inverse ? in_poly : out_poly;
        v.evidence.boundary = 0;
        if (v.evidence.outside == sys.required_outside)
            v.outcome = Outcome::Determinate;
        else if (v.evidence.outside < sys.required_outside)
            v.outcome = Outcome::Indeterminate;
        else
            v.outcome = Outcome::NoStableSolution;
    };

    if (s1 < 0 && s2 > 0) {
        layout(1, 2);
        v.evidence.condition = std::string(rule) + ": condition (i) [P(-1)<0, P(1)>0]";
    } else if (s1 > 0 && s2 < 0) {
        layout(1, 2);
        v.evidence.condition = std::string(rule) + ": condition (iii) [P(-1)>0, P(1)<0]";
    } else if (s1 == 0 || s2 == 0) {
        v.outcome = Outcome::Boundary;
        std::string which;
        if (s1 == 0 && s2 < 0 && std::abs(d3m1) > zero_tol)
            which = "; zero-locus condition (ii) pattern holds [P(-1)=0, P'(-1)!=0, P(1)<0]";
        else if (s1 > 0 && s2 == 0 && std::abs(d3p1) > zero_tol)
            which = "; zero-locus condition (iv) pattern holds [P(-1)>0, P(1)=0, P'(1)!=0]";
        v.evidence.condition = std::string(rule)
            + ": decisive expression within zero_tol of 0" + which;
    } else if (s1 > 0 && s2 > 0) {
        layout(0, 3);  // all cubic roots outside the unit disk
        v.evidence.condition = std::string(rule) + ": no condition holds [P(-1)>0, P(1)>0]";
    } else {
        layout(2, 1);  // two cubic roots in (-1,1), one real root > 1
        v.evidence.condition = std::string(rule) + ": no condition holds [P(-1)<0, P(1)<0]";
    }
    return v;
}

}  // namespace

Verdict bm_noninertial_classify(const BmNonInertialParams& p, double zero_tol) {
    const ModelSystem sys = bm_noninertial_system(p);
    const double E1 = p.k * (p.phi_pi - 1.0) + (p.phi_x - 2.0 * p.sigma) * (1.0 + p.beta);
    const double E2 = p.k * (p.phi_pi - 1.0) + p.phi_x * (1.0 - p.beta);
    const double d3m1 = p.beta * p.phi_x - (p.sigma * (3.0 + 5.0 * p.beta) + 2.0 * p.k);
    const double d3p1 = p.beta * p.phi_x - (p.sigma * (p.beta - 1.0) - 2.0 * p.k);
    return lagged_rule_verdict("non-inertial rule", E1, E2, d3m1, d3p1, sys, zero_tol);
}

Verdict bm_inertial_classify(const BmInertialParams& p, double zero_tol) {
    const ModelSystem sys = bm_inertial_system(p);
    const double hyp = p.sigma * (p.k * p.phi_pi + p.phi_x) - p.phi_r;
    if (hyp <= zero_tol) {
        Verdict v;
        v.outcome = Outcome::HypothesisNotMet;
        v.evidence.condition =
            "inertial rule: hypothesis phi_r < sigma*(k*phi_pi + phi_x) not met";
        v.evidence.poly = sys.charpoly;
        v.evidence.margin = std::abs(hyp);
        return v;
    }
    const double E1 = p.k * p.sigma * (p.phi_pi - 1.0)
                    + (p.sigma * p.phi_x - 2.0) * (1.0 + p.beta)
                    - p.phi_r * (2.0 * p.beta + p.k * p.sigma + 2.0);
    const double E2 = p.k * (p.phi_pi - 1.0 + p.phi_r) + p.phi_x * (1.0 - p.beta);
    const double d3m1 = p.sigma * p.beta * p.phi_x
                      - (3.0 + 5.0 * p.beta + 2.0 * p.k * p.sigma
                         + p.phi_r * (1.0 + 3.0 * p.beta + p.k * p.sigma));
    const double d3p1 = p.sigma * p.beta * p.phi_x
                      - (p.beta - 2.0 * p.k * p.sigma - 1.0
                         + p.phi_r * (1.0 + p.k * p.sigma - p.beta));
    Verdict v = lagged_rule_verdict("inertial rule", E1, E2, d3m1, d3p1, sys, zero_tol);
    v.evidence.margin = std::min(v.evidence.margin, std::abs(hyp));
    return v;
}

Verdict gabaix_stability_test(const GabaixCubic& g, double zero_tol) {
    if (!(g.b > 0) || !(g.c > 0) || !(g.d > 0))
        throw HypothesisNotMetError("gabaix_stability_test: requires b, c, d > 0");
    const double e3 = 1.0 - g.b + g.c - g.d;  // = P(1)
    const double e2 = 3.0 - g.b - g.c + 3.0 * g.d;
    const double e1 = 3.0 + g.b - g.c - 3.0 * g.d;
    const double e0 = 1.0 + g.b + g.c + g.d;
    const double m = e2 * e1 - e3 * e0;

    if (std::abs(e3) <= zero_tol)
        throw HypothesisNotMetError("gabaix_stability_test: P(1) is within zero_tol of 0");

    Verdict v;
    v.evidence.poly = g.poly();
    const std::string evals = " [e3=" + fmt(e3) + ", e2=" + fmt(e2) + ", e1="
                            + fmt(e1) + ", e0=" + fmt(e0) + "]";

    if (e3 < 0) {
        v.outcome = Outcome::Indeterminate;
        v.evidence.condition = "necessary condition P(1)>0 fails" + evals;
        v.evidence.margin = std::abs(e3);
        v.evidence.direction_resolved = false;
        return v;
    }
    const int s2 = sign3(e2, zero_tol);
    if (s2 <= 0) {
        v.outcome = Outcome::Determinate;
        v.evidence.condition = "stability criterion: P(1)>0 and e2<=0" + evals;
        v.evidence.inside = 1; v.evidence.outside = 2; v.evidence.boundary = 0;
        v.evidence.margin = (s2 == 0) ? std::abs(e3) : std::min(std::abs(e3), std::abs(e2));
        return v;
    }
    const int sm = sign3(m, zero_tol);
    if (sm == 0) {
        v.outcome = Outcome::Boundary;
        v.evidence.condition = "e2*e1 - e3*e0 within zero_tol of 0" + evals;
        v.evidence.margin = std::abs(m);
        return v;
    }
    if (sm < 0) {
        v.outcome = Outcome::Determinate;
        v.evidence.condition = "stability criterion: P(1)>0 and e2*e1-e3*e0<=0" + evals;
        v.evidence.inside = 1; v.evidence.outside = 2; v.evidence.boundary = 0;
    } else {
        v.outcome = Outcome::Indeterminate;
        v.evidence.condition = "stability criterion fails: e2>0 and e2*e1-e3*e0>0" + evals;
        v.evidence.direction_resolved = false;
    }
    v.evidence.margin = std::min({std::abs(e3), std::abs(e2), std::abs(m)});
    return v;
}

CertifiedResult sufficient_linear_check(const GabaixCubic& g, double zero_tol) {
    if (!(g.b > 0) || !(g.c > 0) || !(g.d > 0))
        throw HypothesisNotMetError("sufficient_linear_check: requires b, c, d > 0");
    CertifiedResult r;
    r.poly = g.poly();
    const double p1 = 1.0 - g.b + g.c - g.d;
    if (p1 < -zero_tol) {
        r.certainty = Certainty::NecessaryFailed;
        r.condition = "P(1) < 0: no single root in (0,1) is possible";
        r.margin = std::abs(p1);
        return r;
    }
    if (std::abs(p1) <= zero_tol) {
        r.certainty = Certainty::Inconclusive;
        r.condition = "P(1) within zero_tol of 0";
        r.margin = std::abs(p1);
        return r;
    }
    const double curv = 3.0 - 2.0 * g.b + g.c;
    if (curv <= zero_tol || g.b >= 3.0 - zero_tol) {
        r.certainty = Certainty::Proved;
        r.condition = (g.b >= 3.0 - zero_tol)
            ? "single real root in (0,1): b >= 3 and P(1) > 0"
            : "single real root in (0,1): 3 - 2b + c <= 0 and P(1) > 0";
        r.margin = std::min(p1, std::max(std::abs(curv), std::abs(g.b - 3.0)));
        return r;
    }
    if (g.b - g.c > zero_tol) {
        r.certainty = Certainty::Proved;
        r.condition = "single real root in (0,1): b - c > 0 and P(1) > 0";
        r.margin = std::min(p1, g.b - g.c);
        return r;
    }
    r.certainty = Certainty::Inconclusive;
    r.condition = "no linear sufficient condition fires";
    r.margin = std::min({p1, std::abs(curv), std::abs(g.b - g.c)});
    return r;
}

CertifiedResult bm_forward_classify(const BmForwardParams& p, double zero_tol) {
    const ModelSystem sys = bm_forward_system(p);  // throws SingularPrefactor
    CertifiedResult r;
    r.poly = sys.charpoly;

    const double hyp1 = 1.0 - p.sigma * p.phi_x;  // phi_x < 1/sigma
    if (hyp1 <= zero_tol) {
        r.condition = "hypothesis phi_x < 1/sigma fails";
        r.margin = std::abs(hyp1);
        return r;
    }
    if (p.phi_pi > 1.0 + zero_tol) {  // phi_pi <= 1, non-strict
        r.condition = "hypothesis phi_pi <= 1 fails";
        r.margin = p.phi_pi - 1.0;
        return r;
    }

    const CubicView cv = cubic_view(sys.charpoly);
    const double b = cv.b, c = cv.c, d = cv.d_minus;  // x^3 - b x^2 + c x - d
    if (b <= zero_tol || c <= zero_tol || d <= zero_tol) {
        r.condition = "cubic shape hypotheses (b, c, d > 0) not met";
        r.margin = std::min({b, c, d});
        return r;
    }
    const double p1 = eval(sys.charpoly, 1.0);
    if (p1 <= zero_tol) {
        r.condition = "P(1) > 0 fails";
        r.margin = std::abs(p1);
        return r;
    }

    // The linear disjuncts pin the count only when the Fourier variation
    // drop across (0,1) is exactly one; certify it directly.
    const int v0 = sign_variations(fourier_table(sys.charpoly, 0.0, zero_tol).entries);
    const int v1 = sign_variations(fourier_table(sys.charpoly, 1.0, zero_tol).entries);
    std::string disjunct;
    if (b >= 3.0 - zero_tol)
        disjunct = "b >= 3";
    else if (3.0 - 2.0 * b + c <= zero_tol)
        disjunct = "3 - 2b + c <= 0";
    else if (b - c > zero_tol)
        disjunct = "b - c > 0";

    if (v0 - v1 == 1 && !disjunct.empty()) {
        r.certainty = Certainty::Proved;
        r.condition = "exactly one eigenvalue in (0,1): " + disjunct
                    + "; variation certificate v0-v1=1";
        r.margin = std::min(hyp1, p1);
        return r;
    }
    r.condition = disjunct.empty()
        ? "no linear disjunct fires"
        : ("disjunct " + disjunct + " fires but variation drop is "
           + std::to_string(v0 - v1) + ", count not pinned");
    r.margin = std::min(hyp1, p1);
    return r;
}

RegionMembership gabaix_region_membership(const GabaixCubic& g,
                                          const GabaixStructuralParams& s,
                                          double zero_tol) {
    const double mbf = s.M * s.beta_f;
    if (std::abs(mbf) <= zero_tol)
        throw InvalidParams("gabaix_region_membership: M * beta_f must be nonzero");

    RegionMembership r;

    // Necessary outer set.
    const double necessary =
        (1.0 - s.beta_f - s.alpha * s.chi * (1.0 - s.rho)) * (1.0 - s.M + s.sigma * s.phi_x)
        + s.k * s.sigma * (s.phi_pi - 1.0);
    r.necessary = RegionPredicate::Result{necessary >= 0.0, necessary,
                                          std::abs(necessary) <= zero_tol};

    // Inner set from the b - c > 0 condition (strict).
    const double bc =
        (s.sigma * ((s.beta_f - 1.0) + s.beta * (s.eta - 1.0) - s.eta * s.alpha_f * s.rho * s.chi)) / mbf
        - (s.k * s.sigma / mbf) * s.phi_pi
        + ((s.eta - 1.0) * (s.k * s.sigma + 1.0 + s.beta + s.M - s.M * s.beta_f)
           + s.eta * (s.alpha_f * s.chi * (s.rho * (s.M - 1.0) - s.M) - 1.0)
           + s.M + s.beta_f + s.k * s.sigma) / mbf;
    r.sufficient_bc = RegionPredicate::Result{bc > 0.0, bc, std::abs(bc) <= zero_tol};

    // Inner set from the b >= 3 condition.
    const double b_expr = (s.sigma / s.M) * s.phi_x
        + ((1.0 - s.eta) * s.M * s.beta_f + s.eta * s.alpha_f * s.rho * s.chi * s.M
           + s.M + s.beta_f + s.k * s.sigma) / mbf;
    const double b3 = b_expr - 3.0;
    r.sufficient_b3 = RegionPredicate::Result{b3 >= 0.0, b3, std::abs(b3) <= zero_tol};

    // Inner set from the 3 - 2b + c <= 0 condition (sum display >= 3).
    const double curv = (bc + b_expr) - 3.0;
    r.sufficient_curv = RegionPredicate::Result{curv >= 0.0, curv, std::abs(curv) <= zero_tol};

    r.in_necessary = r.necessary.satisfied;
    r.in_sufficient = r.in_necessary
        && (r.sufficient_bc.satisfied || r.sufficient_b3.satisfied || r.sufficient_curv.satisfied);
    r.boundary = r.necessary.boundary
        || (r.in_necessary && (r.sufficient_bc.boundary || r.sufficient_b3.boundary
                               || r.sufficient_curv.boundary));
    r.cubic_check = sufficient_linear_check(g, zero_tol);
    return r;
}

BlpNecessaryReport blp_necessary_check(const BlpParams& p, double zero_tol) {
    BlpNecessaryReport r;
    r.poly = blp_coefficients(p);
    r.p1 = eval(r.poly, 1.0);
    r.p1_positive = r.p1 > zero_tol;
    r.taylor_expression = p.phi_pi
        + (1.0 - p.gamma) * (1.0 - p.beta) / (p.k * (p.varphi + 1.0)) * p.phi_y;
    r.taylor_passes = r.taylor_expression > 1.0;
    r.v0 = sign_variations(fourier_table(r.poly, 0.0, zero_tol).entries);
    r.v1 = sign_variations(fourier_table(r.poly, 1.0, zero_tol).entries);
    r.v1_admissible = (r.v1 == 0 || r.v1 == 2 || r.v1 == 4);
    r.certainty = (!r.p1_positive || !r.v1_admissible) ? Certainty::NecessaryFailed
                                                       : Certainty::Inconclusive;
    return r;
}

ModelSystem build_system(Family f, const ParamSet& params) {
    switch (f) {
        case Family::Gali: return gali_system(std::get<GaliParams>(params));
        case Family::BmNonInertial: return bm_noninertial_system(std::get<BmNonInertialParams>(params));
        case Family::BmInertial: return bm_inertial_system(std::get<BmInertialParams>(params));
        case Family::BmForward: return bm_forward_system(std::get<BmForwardParams>(params));
        case Family::GabaixCubic: return gabaix_cubic_system(std::get<GabaixCubic>(params));
        case Family::GabaixMatrix: return gabaix_matrix_system(std::get<Matrix3>(params));
        case Family::Blp: return blp_system(std::get<BlpParams>(params));
    }
    throw std::logic_error("build_system: unknown family");
}

namespace {

RootProfile model_side_profile(const ModelSystem& sys, const RootProfile& poly_profile) {
    if (!sys.poly_is_inverse) return poly_profile;
    RootProfile flipped = poly_profile;
    std::swap(flipped.inside, flipped.outside);
    return flipped;
}

}  // namespace

AgreementReport cross_validate(Family f, const ParamSet& params,
                               const ReportConfig& config) {
    AgreementReport rep;
    rep.family = f;

    ModelSystem sys = build_system(f, params);
    const RootSet roots = all_roots(sys.charpoly, config.oracle());
    if (!roots.converged) {
        rep.agreement = Agreement::Skipped;
        rep.reason = "oracle did not converge";
        return rep;
    }
    const RootProfile poly_profile = unit_disk_profile(roots, config.oracle());
    rep.model_profile = model_side_profile(sys, poly_profile);
    const Verdict oracle_v = blanchard_kahn(rep.model_profile, sys.required_outside);
    rep.oracle_outcome = oracle_v.outcome;

    const double circle_dist = min_unit_circle_distance(roots);
    const bool near_circle = poly_profile.boundary > 0 || circle_dist < kSkipBand;

    const auto skip = [&](const std::string& why) {
        rep.agreement = Agreement::Skipped;
        rep.reason = why;
        return rep;
    };

    switch (f) {
        case Family::Gali:
        case Family::BmNonInertial:
        case Family::BmInertial: {
            Verdict analytic;
            if (f == Family::Gali)
                analytic = gali_classify(std::get<GaliParams>(params));
            else if (f == Family::BmNonInertial)
                analytic = bm_noninertial_classify(std::get<BmNonInertialParams>(params), config.zero_tol);
            else
                analytic = bm_inertial_classify(std::get<BmInertialParams>(params), config.zero_tol);
            rep.analytic_summary = std::string(outcome_name(analytic.outcome))
                                 + " (" + analytic.evidence.condition + ")";
            rep.analytic_determinate = analytic.determinate();
            if (analytic.outcome == Outcome::HypothesisNotMet)
                return skip("classification hypothesis not met");
            if (analytic.outcome == Outcome::Boundary)
                return skip("analytic expression within the zero band");
            if (analytic.evidence.margin < kSkipBand)
                return skip("analytic margin below the skip band");
            if (near_circle) return skip("root modulus within the unit-circle band");
            rep.agreement = (analytic.outcome == oracle_v.outcome) ? Agreement::Agree
                                                                   : Agreement::Disagree;
            if (rep.agreement == Agreement::Disagree)
                rep.reason = "analytic " + std::string(outcome_name(analytic.outcome))
                           + " vs oracle " + outcome_name(oracle_v.outcome);
            return rep;
        }
        case Family::GabaixCubic:
        case Family::GabaixMatrix: {
            GabaixCubic g;
            if (f == Family::GabaixCubic) {
                g = std::get<GabaixCubic>(params);
            } else {
                const CubicView cv = cubic_view(sys.charpoly);
                g = GabaixCubic{cv.b, cv.c, cv.d_minus};
                if (!(g.b > 0 && g.c > 0 && g.d > 0))
                    return skip("matrix characteristic polynomial leaves the b,c,d>0 shape");
            }
            Verdict analytic;
            try {
                analytic = gabaix_stability_test(g, config.zero_tol);
            } catch (const HypothesisNotMetError& e) {
                rep.analytic_summary = e.what();
                return skip("stability-test hypothesis not met");
            }
            rep.analytic_summary = std::string(outcome_name(analytic.outcome))
                                 + " (" + analytic.evidence.condition + ")";
            rep.analytic_determinate = analytic.determinate();
            if (analytic.outcome == Outcome::Boundary)
                return skip("criterion expression within the zero band");
            if (analytic.evidence.margin < kSkipBand)
                return skip("analytic margin below the skip band");
            if (near_circle) return skip("root modulus within the unit-circle band");
            const bool oracle_det = (oracle_v.outcome == Outcome::Determinate);
            rep.agreement = (analytic.determinate() == oracle_det) ? Agreement::Agree
                                                                   : Agreement::Disagree;
            if (rep.agreement == Agreement::Disagree)
                rep.reason = "analytic " + std::string(analytic.determinate() ? "determinate" : "not determinate")
                           + " vs oracle " + outcome_name(oracle_v.outcome);
            return rep;
        }
        case Family::BmForward: {
            const CertifiedResult cr =
                bm_forward_classify(std::get<BmForwardParams>(params), config.zero_tol);
            rep.analytic_summary = std::string(certainty_name(cr.certainty))
                                 + " (" + cr.condition + ")";
            rep.analytic_determinate = (cr.certainty == Certainty::Proved);
            if (cr.certainty != Certainty::Proved)
                return skip("sufficient conditions did not fire");
            if (cr.margin < kSkipBand) return skip("analytic margin below the skip band");
            const int n01 = count_real_roots_in(roots, 0.0, 1.0, config.oracle().reality_tol);
            rep.agreement = (n01 == 1) ? Agreement::Agree : Agreement::Disagree;
            if (rep.agreement == Agreement::Disagree)
                rep.reason = "proved single root in (0,1) but oracle counts "
                           + std::to_string(n01);
            return rep;
        }
        case Family::Blp: {
            const BlpNecessaryReport nr =
                blp_necessary_check(std::get<BlpParams>(params), config.zero_tol);
            rep.analytic_summary = std::string(certainty_name(nr.certainty))
                                 + " (P(1)=" + std::to_string(nr.p1)
                                 + ", v1=" + std::to_string(nr.v1) + ")";
            if (near_circle) return skip("root modulus within the unit-circle band");
            if (std::abs(nr.p1) < kSkipBand) return skip("P(1) below the skip band");
            const auto& f1 = fourier_table(nr.poly, 1.0, config.zero_tol).entries.values;
            for (double v : f1)
                if (std::abs(v) < kSkipBand)
                    return skip("Fourier entry at 1 below the skip band");
            const bool oracle_det = (rep.model_profile.inside == 3
                                     && rep.model_profile.boundary == 0);
            if (!oracle_det) {
                rep.agreement = Agreement::Agree;
                rep.reason = "necessity vacuous (oracle not determinate)";
                return rep;
            }
            rep.agreement = (nr.p1_positive && nr.v1_admissible) ? Agreement::Agree
                                                                 : Agreement::Disagree;
            if (rep.agreement == Agreement::Disagree)
                rep.reason = "oracle determinate but a necessary condition fails";
            return rep;
        }
    }
    throw std::logic_error("cross_validate: unknown family");
}

}  // namespace nkdet
