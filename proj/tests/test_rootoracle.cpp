#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "nkdet/rng.hpp"
#include "nkdet/rootoracle.hpp"

using namespace nkdet;

namespace {

// Greedy nearest-match distance between computed roots and expected ones.
double match_distance(const RootSet& rs, std::vector<std::complex<double>> expected) {
    double worst = 0.0;
    std::vector<bool> used(rs.roots.size(), false);
    for (const auto& want : expected) {
        double best = 1e18;
        size_t best_i = 0;
        for (size_t i = 0; i < rs.roots.size(); ++i) {
            if (used[i]) continue;
            const double dist = std::abs(rs.roots[i] - want);
            if (dist < best) { best = dist; best_i = i; }
        }
        used[best_i] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

// Leading coefficient bounded away from zero: a near-zero lead pushes a
// root to ~1/lead where the *absolute* residual of any representable
// point exceeds the bound by evaluation noise alone. The model
// polynomials this oracle serves are monic.
Poly random_poly(Rng& rng, int max_degree) {
    const int deg = 1 + static_cast<int>(rng.next_u64() % static_cast<unsigned>(max_degree));
    std::vector<double> c(static_cast<size_t>(deg) + 1);
    for (double& v : c) v = rng.uniform(-10, 10);
    const double lead = rng.uniform(1.0, 10.0);
    c.back() = (rng.next_u64() & 1) ? lead : -lead;
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("all_roots on printed fixtures") {
    SUBCASE("money-growth calibration") {
        const RootSet rs = all_roots(Poly::from_descending({1, -2.7775, 1.9612, -0.3712}));
        REQUIRE(rs.converged);
        CHECK(match_distance(rs, {{0.3107, 0}, {0.6620, 0}, {1.8048, 0}}) < 1e-3);
    }
    SUBCASE("cube roots of unity") {
        const RootSet rs = all_roots(Poly{-1, 0, 0, 1});
        REQUIRE(rs.converged);
        const double s = std::sqrt(3.0) / 2;
        CHECK(match_distance(rs, {{1, 0}, {-0.5, s}, {-0.5, -s}}) < 1e-10);
    }
    SUBCASE("behavioral-model complex pair (from the printed matrix)") {
        // the near-circle pair is ill-conditioned, so the matrix is the
        // faithful source; the 4-decimal cubic drifts the pair by ~1.5e-3
        Matrix3 B;
        B.m = {{{1.4244, 0.2323, 1.1488}, {-0.0535, 1.0177, -0.3371}, {0, 0.0150, 0.9500}}};
        const RootSet rs = all_roots(B.charpoly());
        REQUIRE(rs.converged);
        CHECK(match_distance(rs, {{1.3861, 0}, {1.0030, 0.0240}, {1.0030, -0.0240}}) < 5e-4);
    }
    SUBCASE("degree one") {
        const RootSet rs = all_roots(Poly{-3.0, 1.5});
        REQUIRE(rs.converged);
        CHECK(rs.roots[0].real() == doctest::Approx(2.0));
    }
    SUBCASE("degree zero refused") {
        CHECK_THROWS_AS(all_roots(Poly{4.0}), std::invalid_argument);
    }
}

TEST_CASE("unit disk profile") {
    SUBCASE("two inside one outside") {
        const RootSet rs = all_roots(Poly::from_descending({1, -2.7775, 1.9612, -0.3712}));
        const RootProfile pr = unit_disk_profile(rs);
        CHECK(pr.inside == 2);
        CHECK(pr.outside == 1);
        CHECK(pr.boundary == 0);
        REQUIRE(pr.real_roots.size() == 3);
    }
    SUBCASE("all outside") {
        const RootSet rs = all_roots(Poly::from_descending({1, -2.3131, -1.3899, 3.3939}));
        const RootProfile pr = unit_disk_profile(rs);
        CHECK(pr.inside == 0);
        CHECK(pr.outside == 3);
    }
    SUBCASE("root on the circle") {
        RootSet rs;
        rs.roots = {{1.0, 0.0}};
        rs.residuals = {0.0};
        rs.converged = true;
        const RootProfile pr = unit_disk_profile(rs);
        CHECK(pr.boundary == 1);
        CHECK(pr.inside + pr.outside == 0);
    }
}

TEST_CASE("real root isolation in an interval") {
    SUBCASE("unique explosive root") {
        const Poly p = Poly::from_descending({1, -2.7775, 1.9612, -0.3712});
        const auto roots = real_roots_in(p, 1.0, 2.7775);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == doctest::Approx(1.8048).epsilon(1e-3));
    }
    SUBCASE("no real roots") {
        CHECK(real_roots_in(Poly{1, 0, 1}, -5, 5).empty());
    }
    SUBCASE("forward-rule roots inside (-1,1)") {
        const Poly p = Poly::from_descending({1, -0.6309, -0.6566, 0.1530});
        const auto roots = real_roots_in(p, -1.0, 1.0);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == doctest::Approx(-0.6758).epsilon(1e-3));
        CHECK(roots[1] == doctest::Approx(0.2057).epsilon(1e-3));
    }
    SUBCASE("three known roots in a unit interval") {
        // (x-0.25)(x-0.5)(x-0.75)
        const Poly p = Poly::from_descending({1, -1.5, 0.6875, -0.09375});
        const auto roots = real_roots_in(p, 0.0, 1.0);
        REQUIRE(roots.size() == 3);
        CHECK(roots[0] == doctest::Approx(0.25).epsilon(1e-9));
        CHECK(roots[1] == doctest::Approx(0.50).epsilon(1e-9));
        CHECK(roots[2] == doctest::Approx(0.75).epsilon(1e-9));
    }
    SUBCASE("endpoint root refused") {
        const Poly p = Poly{-1, 0, 0, 1};  // x^3 - 1
        CHECK_THROWS_AS(real_roots_in(p, 1.0, 2.0), DegenerateEndpoint);
    }
    SUBCASE("double root reported as unresolved") {
        const Poly p = Poly::from_descending({1, -1.0, 0.25});  // (x - 0.5)^2
        CHECK_THROWS_AS(real_roots_in(p, 0.0, 1.0), UnresolvedCluster);
    }
}

TEST_CASE("eigenvalues of 3x3 matrices") {
    SUBCASE("printed inverse matrix") {
        Matrix3 B;
        B.m = {{{1.3030, -1.0101, 1.0}, {-0.3030, 1.0101, 0.0}, {2.4, 3.2, 0.0}}};
        const RootSet rs = eigenvalues_3x3(B);
        REQUIRE(rs.converged);
        CHECK(match_distance(rs, {{-1.2003, 0}, {1.2482, 0}, {2.2653, 0}}) < 1e-3);
    }
    SUBCASE("identity") {
        Matrix3 I;
        I.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        const RootSet rs = eigenvalues_3x3(I);
        for (const auto& z : rs.roots) CHECK(std::abs(z - 1.0) < 2e-5);  // triple root
    }
    SUBCASE("trace and determinant identities on random matrices") {
        Rng rng(31337);
        for (int trial = 0; trial < 400; ++trial) {
            Matrix3 M;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) M(r, c) = rng.uniform(-3, 3);
            const RootSet rs = eigenvalues_3x3(M);
            if (!rs.converged) continue;
            std::complex<double> sum = 0.0, prod = 1.0;
            for (const auto& z : rs.roots) { sum += z; prod *= z; }
            CHECK(std::abs(sum - M.trace()) < 1e-8 * (1 + std::abs(M.trace())));
            CHECK(std::abs(prod - M.det()) < 1e-8 * (1 + std::abs(M.det())));
            CHECK(std::abs(sum.imag()) < 1e-8);
        }
    }
}

TEST_CASE("residuals, reconstruction and conjugate closure on random polynomials") {
    Rng rng(6021023);
    int converged_count = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const Poly p = random_poly(rng, 6);
        const RootSet rs = all_roots(p);
        if (!rs.converged) continue;
        ++converged_count;
        double max_abs_coeff = 0.0;
        for (double c : p.coeffs()) max_abs_coeff = std::max(max_abs_coeff, std::abs(c));
        CHECK(rs.max_residual() <= 1e-8 * (1.0 + max_abs_coeff));

        // expanding prod (x - r_i) recovers the monic coefficients
        std::vector<std::complex<double>> expanded{1.0};
        for (const auto& r : rs.roots) {
            std::vector<std::complex<double>> next(expanded.size() + 1, 0.0);
            for (size_t i = 0; i < expanded.size(); ++i) {
                next[i + 1] += expanded[i];
                next[i] -= expanded[i] * r;
            }
            expanded = std::move(next);
        }
        for (int i = 0; i <= p.degree(); ++i) {
            const double monic = p[i] / p.leading();
            const auto got = expanded[static_cast<size_t>(i)];
            CHECK(std::abs(got - monic) <= 1e-7 * (1.0 + std::abs(monic)));
        }

        // nonreal roots pair up under conjugation
        for (const auto& z : rs.roots) {
            if (std::abs(z.imag()) <= 1e-8) continue;
            double best = 1e18;
            for (const auto& w : rs.roots) best = std::min(best, std::abs(w - std::conj(z)));
            CHECK(best < 1e-8 * (1.0 + std::abs(z)));
        }
    }
    CHECK(converged_count > 1900);
}

TEST_CASE("interval isolation is consistent with the variation bound") {
    Rng rng(777222);
    int checked = 0;
    for (int trial = 0; trial < 800; ++trial) {
        const Poly p = random_poly(rng, 6);
        double a = rng.uniform(-4, 4), b = rng.uniform(-4, 4);
        if (a > b) std::swap(a, b);
        if (b - a < 0.1) continue;
        if (std::abs(eval(p, a)) < 1e-6 || std::abs(eval(p, b)) < 1e-6) continue;
        std::vector<double> roots;
        try {
            roots = real_roots_in(p, a, b);
        } catch (const UnresolvedCluster&) {
            continue;
        }
        const RootBound rb = budan_fourier_bound(p, a, b);
        ++checked;
        CHECK(static_cast<int>(roots.size()) <= rb.max_roots);
        CHECK((rb.max_roots - static_cast<int>(roots.size())) % 2 == 0);
        for (double r : roots) CHECK(std::abs(eval(p, r)) < 1e-5);
    }
    CHECK(checked > 600);
}
