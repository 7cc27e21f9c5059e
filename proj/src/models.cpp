#include "nkdet/models.hpp"

#include <cmath>

namespace nkdet {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw InvalidParams(what);
}

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw InvalidParams(std::string(name) + " must be finite");
}

// |formula-built minus matrix-built| per coefficient, relative to scale.
void check_consistency(const Poly& from_formula, const Matrix3& m, double tol) {
    const Poly from_matrix = m.charpoly();
    for (int i = 0; i <= 3; ++i) {
        const double scale = 1.0 + std::abs(from_formula[i]);
        if (std::abs(from_formula[i] - from_matrix[i]) > tol * scale)
            throw std::logic_error("model builder: matrix and formula polynomials disagree");
    }
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Gali: return "gali";
        case Family::BmNonInertial: return "bm-noninertial";
        case Family::BmInertial: return "bm-inertial";
        case Family::BmForward: return "bm-forward";
        case Family::GabaixCubic: return "gabaix-cubic";
        case Family::GabaixMatrix: return "gabaix-matrix";
        case Family::Blp: return "blp";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::Gali, Family::BmNonInertial, Family::BmInertial,
                     Family::BmForward, Family::GabaixCubic, Family::GabaixMatrix,
                     Family::Blp})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

void GaliParams::validate() const {
    require_finite(k, "k"); require_finite(sigma, "sigma");
    require_finite(eta, "eta"); require_finite(beta, "beta");
    require(k > 0, "k must satisfy k > 0");
    require(sigma > 0, "sigma must satisfy sigma > 0");
    require(eta > 0, "eta must satisfy eta > 0");
    require(beta > 0 && beta < 1, "beta must satisfy 0 < beta < 1");
}

void BmNonInertialParams::validate() const {
    require_finite(k, "k"); require_finite(sigma, "sigma"); require_finite(beta, "beta");
    require_finite(phi_x, "phi_x"); require_finite(phi_pi, "phi_pi");
    require(k > 0, "k must satisfy k > 0");
    require(sigma > 0, "sigma must satisfy sigma > 0");
    require(beta > 0 && beta < 1, "beta must satisfy 0 < beta < 1");
    require(phi_x >= 0, "phi_x must satisfy phi_x >= 0");
    require(phi_pi >= 0, "phi_pi must satisfy phi_pi >= 0");
    require(phi_x + phi_pi > 0, "phi_x + phi_pi must be strictly positive");
}

void BmInertialParams::validate() const {
    require_finite(k, "k"); require_finite(sigma, "sigma"); require_finite(beta, "beta");
    require_finite(phi_x, "phi_x"); require_finite(phi_pi, "phi_pi"); require_finite(phi_r, "phi_r");
    require(k > 0, "k must satisfy k > 0");
    require(sigma > 0, "sigma must satisfy sigma > 0");
    require(beta > 0 && beta < 1, "beta must satisfy 0 < beta < 1");
    require(phi_x >= 0, "phi_x must satisfy phi_x >= 0");
    require(phi_pi >= 0, "phi_pi must satisfy phi_pi >= 0");
    require(phi_r >= 0, "phi_r must satisfy phi_r >= 0");
    require(phi_x + phi_pi + phi_r > 0, "phi_x + phi_pi + phi_r must be strictly positive");
}

void BmForwardParams::validate() const {
    BmInertialParams same{k, sigma, beta, phi_x, phi_pi, phi_r};
    same.validate();
}

void GabaixCubic::validate() const {
    require_finite(b, "b"); require_finite(c, "c"); require_finite(d, "d");
    require(b > 0, "b must satisfy b > 0");
    require(c > 0, "c must satisfy c > 0");
    require(d > 0, "d must satisfy d > 0");
}

Poly GabaixCubic::poly() const { return Poly{-d, c, -b, 1.0}; }

void BlpParams::validate() const {
    for (auto [v, n] : {std::pair{beta, "beta"}, {eta, "eta"}, {gamma, "gamma"},
                        {rho_r, "rho_r"}, {k, "k"}, {varphi, "varphi"},
                        {phi_y, "phi_y"}, {phi_pi, "phi_pi"}})
        require_finite(v, n);
    require(beta > 0 && beta < 1, "beta must satisfy 0 < beta < 1");
    require(eta >= 0 && eta < 1, "eta must satisfy 0 <= eta < 1");
    require(gamma >= 0 && gamma <= 1, "gamma must satisfy 0 <= gamma <= 1");
    require(rho_r >= 0 && rho_r < 1, "rho_r must satisfy 0 <= rho_r < 1");
    require(k > 0, "k must satisfy k > 0");
    require(varphi > 0, "varphi must satisfy varphi > 0");
    require(phi_y > 0, "phi_y must satisfy phi_y > 0");
    require(phi_pi > 0, "phi_pi must satisfy phi_pi > 0");
}

ModelSystem gali_system(const GaliParams& p) {
    p.validate();
    const double se = p.sigma * p.eta;
    const double den = 1.0 + se;

    Matrix3 A;
    A(0, 0) = se / den;         A(0, 1) = p.eta / den;                 A(0, 2) = 1.0 / den;
    A(1, 0) = p.k * se / den;   A(1, 1) = p.k * p.eta / den + p.beta;  A(1, 2) = p.k / den;
    A(2, 0) = p.k * se / den;   A(2, 1) = p.k * p.eta / den + p.beta;  A(2, 2) = p.k / den + 1.0;

    const double b = (se + p.k * (1.0 + p.eta)) / den + 1.0 + p.beta;
    const double c = (1.0 + p.beta) * se / den + p.k * p.eta / den + p.beta;
    const double d = p.beta * se / den;
    const Poly charpoly{-d, c, -b, 1.0};

    check_consistency(charpoly, A, 1e-10);
    return ModelSystem{Family::Gali, A, charpoly, 1, false};
}

ModelSystem bm_noninertial_system(const BmNonInertialParams& p) {
    p.validate();
    const double w = p.phi_x + p.k * p.phi_pi;
    require(w > 0, "phi_x + k*phi_pi must be strictly positive");

    Matrix3 B;
    B(0, 0) = 0;                      B(0, 1) = -p.beta * p.phi_pi / w;
    B(0, 2) = 1.0 / w;
    B(1, 0) = 0;                      B(1, 1) = p.beta * p.phi_x / w;
    B(1, 2) = p.k / w;
    B(2, 0) = p.sigma;                B(2, 1) = (p.phi_x + (p.k + p.beta * p.sigma) * p.phi_pi) / w;
    B(2, 2) = -p.sigma / w;

    // The analysis object is the characteristic polynomial of B^{-1}.
    const double b = 1.0 + 1.0 / p.beta + p.k / (p.beta * p.sigma);
    const double c = 1.0 / p.beta - p.phi_x / p.sigma;
    const double d = w / (p.beta * p.sigma);
    const Poly charpoly{d, c, -b, 1.0};  // x^3 - b x^2 + c x + d

    return ModelSystem{Family::BmNonInertial, B, charpoly, 1, true};
}

ModelSystem bm_inertial_system(const BmInertialParams& p) {
    p.validate();

    Matrix3 B;
    B(0, 0) = 1.0 + p.k * p.sigma / p.beta;  B(0, 1) = -p.sigma / p.beta;  B(0, 2) = p.sigma;
    B(1, 0) = -p.k / p.beta;                 B(1, 1) = 1.0 / p.beta;       B(1, 2) = 0;
    B(2, 0) = p.phi_x;                       B(2, 1) = p.phi_pi;           B(2, 2) = p.phi_r;

    const double shared = 1.0 + 1.0 / p.beta + p.k * p.sigma / p.beta;
    const double b = shared + p.phi_r;
    const double c = 1.0 / p.beta + shared * p.phi_r - p.sigma * p.phi_x;
    const double d = p.sigma * (p.phi_x + p.k * p.phi_pi - p.phi_r / p.sigma) / p.beta;
    const Poly charpoly{d, c, -b, 1.0};

    check_consistency(charpoly, B, 1e-10);
    // determinacy needs a single eigenvalue inside the disk, i.e. two outside
    return ModelSystem{Family::BmInertial, B, charpoly, 2, false};
}

ModelSystem bm_forward_system(const BmForwardParams& p) {
    p.validate();
    const double pref_den = 1.0 - p.phi_x * p.sigma;
    if (std::abs(pref_den) <= kDefaultZeroTol)
        throw SingularPrefactor("sigma*phi_x == 1: matrix prefactor is singular");
    const double pref = 1.0 / pref_den;
    const double bi = 1.0 / p.beta;

    Matrix3 M;
    M(0, 0) = pref * (1.0 - bi * p.k * p.sigma * (p.phi_pi - 1.0));
    M(0, 1) = pref * (bi * p.sigma * (p.phi_pi - 1.0));
    M(0, 2) = pref * (p.sigma * p.phi_r);
    M(1, 0) = pref * (-p.k * bi * pref_den);
    M(1, 1) = pref * (bi * pref_den);
    M(1, 2) = 0;
    M(2, 0) = pref * (p.phi_x * (1.0 + bi * p.k * p.sigma) - bi * p.k * p.phi_pi);
    M(2, 1) = pref * (bi * (p.phi_pi - p.phi_x * p.sigma));
    M(2, 2) = pref * p.phi_r;

    // no closed-form coefficients for this family; cofactor expansion only
    return ModelSystem{Family::BmForward, M, M.charpoly(), 2, false};
}

ModelSystem gabaix_cubic_system(const GabaixCubic& g) {
    g.validate();
    return ModelSystem{Family::GabaixCubic, std::nullopt, g.poly(), 2, false};
}

ModelSystem gabaix_matrix_system(const Matrix3& M) {
    if (!M.all_finite()) throw InvalidParams("matrix entries must be finite");
    return ModelSystem{Family::GabaixMatrix, M, M.charpoly(), 2, false};
}

Poly blp_coefficients(const BlpParams& p) {
    p.validate();
    const double b = p.beta, e = p.eta, g = p.gamma, r = p.rho_r;
    const double k = p.k, f = p.varphi, y = p.phi_y, pi = p.phi_pi;

    const double a5 = b;
    const double a4 = b + 1.0 + b * (e + g + r)
                    + (1.0 - e) * k * (f + 1.0 / (1.0 - e) + (1.0 - r) * y * b / k);
    const double a3 = 1.0 + (b + 1.0) * (e + g + r) + b * (e * g + e * r + g * r)
                    + (1.0 - e) * (1.0 - r) * k
                        * ((pi + r / (1.0 - r)) * (f + 1.0 / (1.0 - e))
                           + (1.0 + b * g) * y / k
                           + (1.0 / (1.0 - r)) * (e / (1.0 - e)));
    const double a2 = (e + g + r) + (b + 1.0) * (e * g + e * r + g * r) + b * e * g * r
                    + (1.0 - e) * (1.0 - r) * k
                        * ((pi + r / (1.0 - r)) * (f + 1.0 / (1.0 - e)) + y * g / k);
    const double a1 = e * g + r * (e + g + e * g + b * e * g);
    const double a0 = e * g * r;

    return Poly{-a0, a1, -a2, a3, -a4, a5};
}

ModelSystem blp_system(const BlpParams& p) {
    // determinacy needs exactly 3 of 5 roots inside the disk
    return ModelSystem{Family::Blp, std::nullopt, blp_coefficients(p), 2, false};
}

CubicView cubic_view(const Poly& p) {
    if (p.degree() != 3) throw std::invalid_argument("cubic_view: degree != 3");
    CubicView v;
    const double lead = p.leading();
    v.b = -p[2] / lead;
    v.c = p[1] / lead;
    v.d_plus = p[0] / lead;
    v.d_minus = -p[0] / lead;
    return v;
}

}  // namespace nkdet
