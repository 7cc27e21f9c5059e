#pragma once

#include <optional>
#include <string>

#include "nkdet/matrix3.hpp"
#include "nkdet/polyalg.hpp"

namespace nkdet {

enum class Family {
    Gali,
    BmNonInertial,
    BmInertial,
    BmForward,
    GabaixCubic,
    GabaixMatrix,
    Blp,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// Canonical NK model with an exogenous money growth rule (CWID timing).
struct GaliParams {
    double k = 0;      // slope of the Phillips curve
    double sigma = 0;
    double eta = 0;
    double beta = 0;
    void validate() const;  // k>0, sigma>0, eta>0, 0<beta<1
};

/// Non-inertial lagged-data interest rate rule.
struct BmNonInertialParams {
    double k = 0;
    double sigma = 0;
    double beta = 0;
    double phi_x = 0;
    double phi_pi = 0;
    void validate() const;  // k>0, sigma>0, 0<beta<1, phi_x,phi_pi>=0, phi_x+phi_pi>0
};

/// Inertial lagged-data rule (adds the lagged interest rate response).
struct BmInertialParams {
    double k = 0;
    double sigma = 0;
    double beta = 0;
    double phi_x = 0;
    double phi_pi = 0;
    double phi_r = 0;
    void validate() const;  // as above with phi_x+phi_pi+phi_r>0
};

/// Forward-expectations rule; the matrix carries a 1/(1 - phi_x*sigma)
/// prefactor which must stay finite.
struct BmForwardParams {
    double k = 0;
    double sigma = 0;
    double beta = 0;
    double phi_x = 0;
    double phi_pi = 0;
    double phi_r = 0;
    void validate() const;
};

/// Cubic x^3 - b x^2 + c x - d with strictly positive coefficients; the
/// carrier for the behavioral-model stability tests.
struct GabaixCubic {
    double b = 0;
    double c = 0;
    double d = 0;
    void validate() const;  // b,c,d > 0
    Poly poly() const;      // x^3 - b x^2 + c x - d
};

/// Degree-5 hybrid model parameters.
struct BlpParams {
    double beta = 0;
    double eta = 0;
    double gamma = 0;
    double rho_r = 0;
    double k = 0;
    double varphi = 0;
    double phi_y = 0;
    double phi_pi = 0;
    void validate() const;
};

/// A model family instance reduced to the objects the root analysis
/// needs: the transition matrix (when one exists), the characteristic
/// polynomial under study, and how many explosive roots determinacy
/// requires of the model matrix.
struct ModelSystem {
    Family family;
    std::optional<Matrix3> matrix;
    Poly charpoly;
    int required_outside = 1;
    /// When true the charpoly belongs to the *inverse* of `matrix`
    /// (the analysis object for the non-inertial rule); inside/outside
    /// counts of its roots must be swapped to speak about the matrix.
    bool poly_is_inverse = false;
};

ModelSystem gali_system(const GaliParams& p);
ModelSystem bm_noninertial_system(const BmNonInertialParams& p);
ModelSystem bm_inertial_system(const BmInertialParams& p);
ModelSystem bm_forward_system(const BmForwardParams& p);
ModelSystem gabaix_cubic_system(const GabaixCubic& g);
ModelSystem gabaix_matrix_system(const Matrix3& M);
ModelSystem blp_system(const BlpParams& p);

/// a5 x^5 - a4 x^4 + a3 x^3 - a2 x^2 + a1 x - a0 with the coefficient
/// formulas of the degree-5 model, signs exactly as displayed.
Poly blp_coefficients(const BlpParams& p);

/// The cubic coefficient triple (b, c, d) of the model families writing
/// their polynomial as x^3 - b x^2 + c x + d (lagged-data rules) or
/// x^3 - b x^2 + c x - d (Gali / behavioral): b = -coeff2, c = coeff1.
struct CubicView {
    double b = 0;
    double c = 0;
    double d_plus = 0;   // constant term as written with +d
    double d_minus = 0;  // constant term as written with -d
};
CubicView cubic_view(const Poly& p);

}  // namespace nkdet
