#include "nkdet/rootoracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nkdet {

namespace {

using Complex = std::complex<double>;
using ComplexL = std::complex<long double>;

Complex eval_c(const std::vector<double>& c, Complex x) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ComplexL eval_l(const std::vector<double>& c, ComplexL x) {
    ComplexL acc = 0.0L;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + static_cast<long double>(*it);
    return acc;
}

// Extended-precision Newton polish; tightens simple roots to the double
// noise floor and sharpens the reported residuals.
Complex polish_root(const Poly& p, const Poly& dp, Complex z0) {
    ComplexL z(z0.real(), z0.imag());
    for (int i = 0; i < 3; ++i) {
        const ComplexL pv = eval_l(p.coeffs(), z);
        if (pv == ComplexL(0.0L)) break;
        const ComplexL dv = eval_l(dp.coeffs(), z);
        if (std::abs(dv) < 1e-300L) break;
        z -= pv / dv;
    }
    return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

}  // namespace

double RootSet::max_residual() const {
    double worst = 0.0;
    for (double r : residuals) worst = std::max(worst, r);
    return worst;
}

RootSet all_roots(const Poly& p, const OracleOptions& opts) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("all_roots: requires degree >= 1");

    RootSet rs;
    if (d == 1) {
        rs.roots = {Complex(-p[0] / p[1], 0.0)};
        rs.residuals = {std::abs(eval(p, -p[0] / p[1]))};
        rs.converged = true;
        return rs;
    }

    // Monic copy for the iteration; residuals are taken on the original.
    std::vector<double> mc(p.coeffs());
    for (double& v : mc) v /= p.leading();
    std::vector<double> md(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i) md[static_cast<size_t>(i - 1)] = i * mc[static_cast<size_t>(i)];

    const double radius = std::max(cauchy_bound(p) / 2.0, 1e-3);
    std::vector<Complex> z(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / d + 0.4;
        z[static_cast<size_t>(i)] = std::polar(radius, angle);
    }

    bool converged = false;
    for (int iter = 0; iter < opts.max_iterations && !converged; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < d; ++i) {
            Complex& zi = z[static_cast<size_t>(i)];
            const Complex pv = eval_c(mc, zi);
            if (pv == 0.0) continue;
            Complex dv = eval_c(md, zi);
            if (dv == 0.0) {
                // sitting on a critical point: nudge off it
                zi += Complex(1e-8 * (1.0 + std::abs(zi)), 1e-8);
                max_step = std::max(max_step, 1.0);
                continue;
            }
            const Complex newton = pv / dv;
            Complex repulsion = 0.0;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                const Complex diff = zi - z[static_cast<size_t>(j)];
                if (diff == 0.0) continue;
                repulsion += 1.0 / diff;
            }
            const Complex denom = 1.0 - newton * repulsion;
            const Complex step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
            zi -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        converged = max_step < opts.step_tol;
    }

    const Poly dp = derivative(p);
    for (Complex& zi : z) zi = polish_root(p, dp, zi);

    rs.roots = std::move(z);
    rs.converged = converged;
    rs.residuals.reserve(static_cast<size_t>(d));
    for (const Complex& r : rs.roots) {
        const ComplexL value = eval_l(p.coeffs(), ComplexL(r.real(), r.imag()));
        rs.residuals.push_back(static_cast<double>(std::abs(value)));
    }
    std::sort(rs.roots.begin(), rs.roots.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return rs;
}

RootProfile unit_disk_profile(const RootSet& rs, const OracleOptions& opts) {
    RootProfile pr;
    for (const auto& z : rs.roots) {
        const double mod = std::abs(z);
        if (mod < 1.0 - opts.boundary_tol)
            ++pr.inside;
        else if (mod > 1.0 + opts.boundary_tol)
            ++pr.outside;
        else
            ++pr.boundary;
        if (std::abs(z.imag()) <= opts.reality_tol) pr.real_roots.push_back(z.real());
    }
    std::sort(pr.real_roots.begin(), pr.real_roots.end());
    return pr;
}

namespace {

constexpr double kIsolationWidth = 1e-12;

double bisect_root(const Poly& p, double lo, double hi) {
    double flo = eval(p, lo);
    for (int i = 0; i < 200 && hi - lo > kIsolationWidth; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = eval(p, mid);
        if (fm == 0.0) return mid;
        if ((flo < 0) != (fm < 0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

// A subdivision point strictly inside (a,b) where p is safely nonzero.
double interior_split_point(const Poly& p, double a, double b, double zero_tol) {
    static constexpr double fractions[] = {0.5, 0.55, 0.45, 0.6, 0.4, 0.65, 0.35, 0.7, 0.3};
    for (double f : fractions) {
        const double m = a + (b - a) * f;
        if (std::abs(eval(p, m)) > zero_tol) return m;
    }
    throw UnresolvedCluster("real_roots_in: polynomial is numerically zero across ("
                            + std::to_string(a) + ", " + std::to_string(b)
                            + "); possible multiple root");
}

// Proves the interval root-free when |p(mid)| clears the Lipschitz bound
// max|p'| * width; variation bounds alone never shrink the even slack a
// nearby complex pair (or a derivative sign flip) leaves behind.
bool provably_root_free(const Poly& p, double a, double b) {
    const Poly dp = derivative(p);
    const double reach = std::max(std::abs(a), std::abs(b));
    double lipschitz = 0.0;
    double power = 1.0;
    for (double c : dp.coeffs()) {
        lipschitz += std::abs(c) * power;
        power *= reach;
    }
    return std::abs(eval(p, 0.5 * (a + b))) > lipschitz * (b - a);
}

void isolate(const Poly& p, double a, double b, const OracleOptions& opts,
             std::vector<double>& out) {
    const RootBound bound = budan_fourier_bound(p, a, b, opts.zero_tol);
    if (bound.max_roots == 0) return;
    const bool sign_change = (eval(p, a) < 0) != (eval(p, b) < 0);
    if (bound.max_roots == 1 && sign_change) {
        out.push_back(bisect_root(p, a, b));
        return;
    }
    if (provably_root_free(p, a, b)) return;
    if (b - a < kIsolationWidth) {
        if (bound.max_roots >= 2)
            throw UnresolvedCluster("real_roots_in: interval narrower than 1e-12 still bounds "
                                    + std::to_string(bound.max_roots) + " roots near x="
                                    + std::to_string(a));
        out.push_back(0.5 * (a + b));  // bound 1 without a visible sign change
        return;
    }
    const double m = interior_split_point(p, a, b, opts.zero_tol);
    isolate(p, a, m, opts, out);
    isolate(p, m, b, opts, out);
}

}  // namespace

std::vector<double> real_roots_in(const Poly& p, double a, double b,
                                  const OracleOptions& opts) {
    if (!(a < b)) throw std::invalid_argument("real_roots_in: requires a < b");
    std::vector<double> out;
    isolate(p, a, b, opts, out);
    std::sort(out.begin(), out.end());
    return out;
}

RootSet eigenvalues_3x3(const Matrix3& M, const OracleOptions& opts) {
    if (!M.all_finite()) throw std::invalid_argument("eigenvalues_3x3: non-finite entry");
    return all_roots(M.charpoly(), opts);
}

int count_real_roots_in(const RootSet& rs, double a, double b, double reality_tol) {
    int n = 0;
    for (const auto& z : rs.roots)
        if (std::abs(z.imag()) <= reality_tol && z.real() > a && z.real() < b) ++n;
    return n;
}

double min_unit_circle_distance(const RootSet& rs) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& z : rs.roots) best = std::min(best, std::abs(std::abs(z) - 1.0));
    return best;
}

}  // namespace nkdet
