#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nkdet/models.hpp"
#include "nkdet/rootoracle.hpp"

namespace nkdet {

enum class Outcome {
    Determinate,
    Indeterminate,
    NoStableSolution,
    Boundary,
    HypothesisNotMet,
};

const char* outcome_name(Outcome o);

/// What fired and what it implies. Counts are the asserted model-side
/// root layout (-1 where the statement does not pin them).
struct Evidence {
    std::string condition;
    int inside = -1;
    int outside = -1;
    int boundary = -1;
    Poly poly;
    double margin = std::numeric_limits<double>::quiet_NaN();
    /// False when "not determinate" is proved but the statement cannot
    /// tell too-few from too-many explosive roots.
    bool direction_resolved = true;
};

struct Verdict {
    Outcome outcome = Outcome::Boundary;
    Evidence evidence;
    bool determinate() const { return outcome == Outcome::Determinate; }
};

/// Named boolean-with-margin predicate over a parameter vector. The
/// margin is the minimum slack among the predicate's inequalities:
/// positive inside the region, negative outside, continuous in between.
struct RegionPredicate {
    std::string name;
    std::vector<std::string> arity;
    std::function<double(std::span<const double>)> margin_fn;

    struct Result {
        bool satisfied = false;
        double margin = 0;
        bool boundary = false;  // |margin| within zero_tol
    };
    Result evaluate(std::span<const double> args, double zero_tol = kDefaultZeroTol) const;
};

/// Which part of the generalized cubic classification applies to
/// P(x) = x^3 - b x^2 + c x + d (b > 0, d > 0), given the signs of
/// P(-1), P(1) and the b > 2 flag.
enum class CubicCase {
    III,          // exactly one root in (-1,0)  <=>  P(-1)<0
    IV,           // P(1)<0: exactly one root in (0,1)
    VI,           // P(-1)<0, P(1)<0: two roots in (-1,1), one root > 1
    VII,          // b>2, P(-1)<0, P(1)>0: one root in (-1,0), two outside
    VIII,         // b>2, P(-1)>0, P(1)<0: one root in (0,1), two with |Re|>1
    IX,           // b>2, P(-1)>0, P(1)>0: all roots outside the unit disk
    X_ROOT_AT_M1, // boundary disjunct: P(-1)=0, P'(-1)!=0, P(1)<0
    X_ROOT_AT_P1, // boundary disjunct: P(-1)>0, P(1)=0, P'(1)!=0
    Unclassified,
};

struct CubicCaseProfile {
    CubicCase case_id = CubicCase::Unclassified;
    int sign_m1 = 0;      // sign of P(-1) under zero_tol
    int sign_p1 = 0;      // sign of P(1)
    bool b_gt_2 = false;
    int inside = -1;      // asserted unit-disk layout where the case pins it
    int outside = -1;
    int boundary = -1;
    std::string description;
};

/// Throws HypothesisNotMetError when b <= 0 or d <= 0.
CubicCaseProfile cubic_profile(double b, double c, double d,
                               double zero_tol = kDefaultZeroTol);

/// Explosive-root counting verdict: Determinate iff outside equals the
/// requirement with nothing on the circle; Boundary overrides.
Verdict blanchard_kahn(const RootProfile& profile, int required_outside);

/// Always Determinate on the valid parameter space; the evidence records
/// the unique explosive root's interval (1, b).
Verdict gali_classify(const GaliParams& p);

Verdict bm_noninertial_classify(const BmNonInertialParams& p,
                                double zero_tol = kDefaultZeroTol);

/// HypothesisNotMet when phi_r >= sigma*(k*phi_pi + phi_x); the
/// classification is silent there.
Verdict bm_inertial_classify(const BmInertialParams& p,
                             double zero_tol = kDefaultZeroTol);

/// Necessary-and-sufficient stability test for x^3 - b x^2 + c x - d,
/// b,c,d > 0: Determinate iff P(1) > 0 and (e2 <= 0 or e2*e1 - e3*e0 <= 0).
/// Throws HypothesisNotMetError when P(1) is within zero_tol of 0 or any
/// coefficient is nonpositive.
Verdict gabaix_stability_test(const GabaixCubic& g,
                              double zero_tol = kDefaultZeroTol);

enum class Certainty { Proved, NecessaryFailed, Inconclusive };
const char* certainty_name(Certainty c);

/// Sufficient-only / necessary-only results carry a certainty level so a
/// caller can never mistake "not proved" for "disproved".
struct CertifiedResult {
    Certainty certainty = Certainty::Inconclusive;
    std::string condition;
    double margin = std::numeric_limits<double>::quiet_NaN();
    Poly poly;
};

/// Linear-in-coefficients sufficient conditions for a single real root in
/// (0,1) of x^3 - b x^2 + c x - d (plus the P(1) >= 0 necessity).
/// Addresses only the real-root part, not the outside-disk part.
CertifiedResult sufficient_linear_check(const GabaixCubic& g,
                                        double zero_tol = kDefaultZeroTol);

/// Sufficient conditions for the forward-expectations rule to have
/// exactly one eigenvalue in (0,1): hypotheses phi_x < 1/sigma and
/// phi_pi <= 1, positive cubic shape with P(1) > 0, and one of the three
/// linear disjuncts certified by the Fourier variation count.
CertifiedResult bm_forward_classify(const BmForwardParams& p,
                                    double zero_tol = kDefaultZeroTol);

/// Structural inputs for the behavioral-model region inequalities,
/// supplied as raw reals.
struct GabaixStructuralParams {
    double k = 0, sigma = 0;
    double alpha = 0, alpha_f = 0;
    double beta = 0, beta_f = 0;
    double M = 0, M_f = 0;
    double eta = 0, rho = 0, chi = 0;
    double phi_x = 0, phi_pi = 0;
};

struct RegionMembership {
    RegionPredicate::Result necessary;        // outer set: containment is necessary
    RegionPredicate::Result sufficient_bc;    // inner set from the b-c>0 condition
    RegionPredicate::Result sufficient_b3;    // inner set from the b>=3 condition
    RegionPredicate::Result sufficient_curv;  // inner set from the 3-2b+c<=0 condition
    bool in_necessary = false;
    bool in_sufficient = false;
    bool boundary = false;                    // some layer sits on its edge
    CertifiedResult cubic_check;              // linear check on the supplied cubic
};

RegionMembership gabaix_region_membership(const GabaixCubic& g,
                                          const GabaixStructuralParams& s,
                                          double zero_tol = kDefaultZeroTol);

/// Necessary determinacy conditions for the degree-5 model: P(1) > 0 and
/// the variation count at 1 restricted to {0, 2, 4}. Never asserts
/// determinacy.
struct BlpNecessaryReport {
    Poly poly;
    double p1 = 0;
    bool p1_positive = false;
    /// The published linear display phi_pi + (1-gamma)(1-beta)/(k(varphi+1)) phi_Y,
    /// reported for reference (it is implied by, not equivalent to, P(1)>0).
    double taylor_expression = 0;
    bool taylor_passes = false;
    int v0 = 0;
    int v1 = 0;
    bool v1_admissible = false;
    Certainty certainty = Certainty::Inconclusive;
};

BlpNecessaryReport blp_necessary_check(const BlpParams& p,
                                       double zero_tol = kDefaultZeroTol);

struct ReportConfig {
    double zero_tol = kDefaultZeroTol;
    double boundary_tol = 1e-7;
    std::uint64_t seed = 42;
    int sample_count = 10000;
    bool exact_mode = false;

    OracleOptions oracle() const {
        OracleOptions o;
        o.boundary_tol = boundary_tol;
        o.zero_tol = zero_tol;
        return o;
    }
};

/// Margin / circle-distance band below which cross-validation draws are
/// skipped rather than judged.
inline constexpr double kSkipBand = 1e-6;

using ParamSet = std::variant<GaliParams, BmNonInertialParams, BmInertialParams,
                              BmForwardParams, GabaixCubic, Matrix3, BlpParams>;

ModelSystem build_system(Family f, const ParamSet& params);

enum class Agreement { Agree, Disagree, Skipped };
const char* agreement_name(Agreement a);

/// One analytic-vs-oracle comparison: the analytic classifier on one
/// side, the root oracle plus explosive-root counting on the other.
struct AgreementReport {
    Family family;
    Agreement agreement = Agreement::Skipped;
    std::string analytic_summary;
    bool analytic_determinate = false;
    Outcome oracle_outcome = Outcome::Boundary;
    RootProfile model_profile;  // model-matrix side (inverse flip applied)
    std::string reason;
};

AgreementReport cross_validate(Family f, const ParamSet& params,
                               const ReportConfig& config);

}  // namespace nkdet
