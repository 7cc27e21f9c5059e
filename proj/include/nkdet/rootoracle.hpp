#pragma once

#include <complex>
#include <vector>

#include "nkdet/matrix3.hpp"
#include "nkdet/polyalg.hpp"

namespace nkdet {

struct OracleOptions {
    int max_iterations = 500;
    double step_tol = 1e-13;        // Aberth stops when the largest update is below this
    double boundary_tol = 1e-7;     // |modulus - 1| band treated as "on the circle"
    double reality_tol = 1e-8;      // |Im| below this counts as a real root
    double zero_tol = kDefaultZeroTol;
};

/// All complex roots of a polynomial, with residuals |p(root)|.
/// converged=false after the iteration cap is the NoConvergence outcome;
/// the caller decides what to do with it.
struct RootSet {
    std::vector<std::complex<double>> roots;
    std::vector<double> residuals;
    bool converged = false;

    double max_residual() const;
};

/// Unit-disk classification of a root set. inside + outside + boundary
/// always equals the polynomial degree.
struct RootProfile {
    int inside = 0;
    int outside = 0;
    int boundary = 0;
    std::vector<double> real_roots;  // real parts of (numerically) real roots
};

/// Simultaneous Aberth-Ehrlich iteration from initial guesses spread on a
/// circle of radius cauchy_bound(p)/2. Requires degree >= 1.
RootSet all_roots(const Poly& p, const OracleOptions& opts = {});

RootProfile unit_disk_profile(const RootSet& rs, const OracleOptions& opts = {});

/// Real roots in the open interval (a, b), isolated by recursive
/// subdivision guided by budan_fourier_bound and refined by bisection to
/// width 1e-12. Returns them sorted ascending. Throws DegenerateEndpoint
/// if an endpoint is a root, UnresolvedCluster when an interval cannot be
/// resolved (multiple root).
std::vector<double> real_roots_in(const Poly& p, double a, double b,
                                  const OracleOptions& opts = {});

/// Roots of the cofactor-expanded characteristic polynomial of M.
RootSet eigenvalues_3x3(const Matrix3& M, const OracleOptions& opts = {});

/// Count of (numerically) real roots lying in the open interval (a, b).
int count_real_roots_in(const RootSet& rs, double a, double b,
                        double reality_tol = 1e-8);

/// Smallest distance | |root| - 1 | over the set; the boundary-band test
/// used when skipping draws too close to the unit circle.
double min_unit_circle_distance(const RootSet& rs);

}  // namespace nkdet
