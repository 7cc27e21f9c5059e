#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nkdet/polyalg.hpp"
#include "nkdet/rng.hpp"
#include "nkdet/rootoracle.hpp"

using namespace nkdet;

namespace {

Poly gali_example_poly() {
    // x^3 - 2.7775 x^2 + 1.9612 x - 0.3712, built from the exact rationals
    const double se = 0.5 * 1.2, den = 1.0 + se, k = 0.3, beta = 0.99, eta = 1.2;
    const double b = (se + k * (1 + eta)) / den + 1 + beta;
    const double c = (1 + beta) * se / den + k * eta / den + beta;
    const double d = beta * se / den;
    return Poly{-d, c, -b, 1.0};
}

}  // namespace

TEST_CASE("poly construction and normalization") {
    CHECK(Poly{}.is_zero());
    CHECK(Poly{0.0}.is_zero());
    CHECK(Poly({1.0, 2.0, 0.0, 0.0}).degree() == 1);
    CHECK(Poly({5.0}).degree() == 0);
    const Poly p = Poly::from_descending({1.0, -2.0, 3.0});
    CHECK(p.degree() == 2);
    CHECK(p[2] == 1.0);
    CHECK(p[1] == -2.0);
    CHECK(p[0] == 3.0);
    CHECK(p[7] == 0.0);
}

TEST_CASE("poly printing") {
    CHECK(Poly::from_descending({1, -2.7775, 1.9612, -0.3712}).str()
          == "x^3 - 2.7775x^2 + 1.9612x - 0.3712");
    CHECK(Poly{}.str() == "0");
    CHECK(Poly{0.0, 1.0}.str() == "x");
}

TEST_CASE("eval by Horner") {
    // P(1) = -k/(1+sigma*eta) for the money-growth model cubic
    CHECK(eval(gali_example_poly(), 1.0) == doctest::Approx(-0.3 / 1.6).epsilon(1e-12));
    CHECK(eval(Poly{0, 0, 0, 1}, 0.0) == 0.0);
    CHECK(eval(Poly::from_descending({1, -2.8131, -2.1333, 4.3899}), -1.0)
          == doctest::Approx(2.7101).epsilon(1e-4));
}

TEST_CASE("derivative") {
    const double b = 2.5, c = 1.5, d = 0.7;
    const Poly p{-d, c, -b, 1.0};
    const Poly dp = derivative(p);
    CHECK(dp.degree() == 2);
    CHECK(dp[2] == 3.0);
    CHECK(dp[1] == -2.0 * b);
    CHECK(dp[0] == c);
    CHECK(derivative(Poly{5.0}).is_zero());
    // +d variant has the same derivative
    const Poly q{d, c, -b, 1.0};
    CHECK(derivative(q)[0] == c);
}

TEST_CASE("fourier table") {
    const double b = 1.7, c = 2.3, d = 0.4;
    SUBCASE("minus-d cubic at b") {
        const auto t = fourier_table(Poly{-d, c, -b, 1.0}, b);
        REQUIRE(t.entries.values.size() == 4);
        CHECK(t.entries.values[0] == doctest::Approx(b * c - d).epsilon(1e-12));
        CHECK(t.entries.values[1] == doctest::Approx(b * b + c).epsilon(1e-12));
        CHECK(t.entries.values[2] == doctest::Approx(4 * b).epsilon(1e-12));
        CHECK(t.entries.values[3] == 6.0);
    }
    SUBCASE("plus-d cubic at 0") {
        const auto t = fourier_table(Poly{d, c, -b, 1.0}, 0.0);
        CHECK(t.entries.values[0] == d);
        CHECK(t.entries.values[1] == c);
        CHECK(t.entries.values[2] == -2 * b);
        CHECK(t.entries.values[3] == 6.0);
    }
    SUBCASE("x^2 at 0") {
        const auto t = fourier_table(Poly{0, 0, 1}, 0.0);
        REQUIRE(t.entries.values.size() == 3);
        CHECK(t.entries.values[0] == 0.0);
        CHECK(t.entries.values[1] == 0.0);
        CHECK(t.entries.values[2] == 2.0);
    }
    SUBCASE("last entry is d! * leading") {
        const auto t = fourier_table(Poly{1, 0, 0, 0, 2.5}, 0.3);
        CHECK(t.entries.values.back() == doctest::Approx(24.0 * 2.5));
    }
}

TEST_CASE("sign variations") {
    const auto count = [](std::vector<double> v) {
        return sign_variations(SignSeq{std::move(v), kDefaultZeroTol});
    };
    CHECK(count({1, -1, 1}) == 2);
    CHECK(count({1, 0, 0, -1}) == 1);
    CHECK(count({0, 0, 0}) == 0);
    CHECK(count({}) == 0);
    CHECK(count({0, 0, 1, 0, -1, 0}) == 1);  // end runs of zeros contribute nothing
    CHECK(count({1, 1e-12, -1}) == 1);       // sub-threshold entries are zeros
    // (bc-d, b^2+c, 4b, 6) all positive when b,c,d>0 and bc>d
    CHECK(count({1.7 * 2.3 - 0.4, 1.7 * 1.7 + 2.3, 4 * 1.7, 6}) == 0);
}

TEST_CASE("scale invariance of sign variations") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> v(static_cast<size_t>(2 + rng.next_u64() % 6));
        for (double& x : v) x = rng.uniform(-3, 3);
        const double scale = std::exp(rng.uniform(0.0, 3.0));
        SignSeq base{v, 0.0};
        std::vector<double> scaled = v;
        for (double& x : scaled) x *= scale;
        CHECK(sign_variations(base) == sign_variations(SignSeq{scaled, 0.0}));
    }
}

TEST_CASE("budan-fourier bound") {
    SUBCASE("unique explosive root interval") {
        const Poly p = gali_example_poly();
        const double b = -p[2];
        const RootBound rb = budan_fourier_bound(p, 1.0, b);
        CHECK(rb.max_roots == 1);
        CHECK(rb.parity_fixed);
    }
    SUBCASE("no real roots: even slack absorbed by the complex pair") {
        // v_{-10} = 2, v_{10} = 0: the bound is 2 and parity makes the
        // actual count 0 or 2; the oracle confirms 0.
        const RootBound rb = budan_fourier_bound(Poly{1, 0, 1}, -10, 10);
        CHECK(rb.max_roots == 2);
        CHECK(rb.parity_fixed);
        CHECK(real_roots_in(Poly{1, 0, 1}, -10, 10).empty());
    }
    SUBCASE("negative interval with no roots") {
        const Poly p = Poly::from_descending({1, -2.3131, -1.3899, 3.3939});
        const RootBound rb = budan_fourier_bound(p, -1.0, 0.0);
        CHECK(rb.max_roots == 0);
        const int vm1 = sign_variations(fourier_table(p, -1.0).entries);
        const int v0 = sign_variations(fourier_table(p, 0.0).entries);
        CHECK(vm1 == 2);
        CHECK(v0 == 2);
    }
    SUBCASE("degenerate endpoint refused") {
        const Poly p{-1.0, 0.0, 0.0, 1.0};  // x^3 - 1
        CHECK_THROWS_AS(budan_fourier_bound(p, 1.0, 2.0), DegenerateEndpoint);
        CHECK_THROWS_AS(budan_fourier_bound(p, 0.0, 1.0), DegenerateEndpoint);
    }
    SUBCASE("requires a < b") {
        CHECK_THROWS_AS(budan_fourier_bound(Poly{1, 1}, 2.0, 1.0), std::invalid_argument);
    }
}

TEST_CASE("descartes bound") {
    SUBCASE("one negative root via Q(x) = P(-x)") {
        // Q(x) = -x^3 - b x^2 - c x + d has exactly one variation
        const double b = 1.3, c = 0.2, d = 2.0;
        const RootBound rb = descartes_positive_bound(Poly{d, -c, -b, -1.0});
        CHECK(rb.max_roots == 1);
        CHECK(std::isinf(rb.b));
    }
    SUBCASE("no positive roots") {
        CHECK(descartes_positive_bound(Poly{1, 0, 1}).max_roots == 0);
    }
    SUBCASE("two positive roots") {
        const Poly p = Poly::from_descending({1, -2.3131, -1.3899, 3.3939});
        CHECK(descartes_positive_bound(p).max_roots == 2);
    }
}

TEST_CASE("cauchy bound") {
    const double b = 1.9, c = 0.4, d = 0.8;
    CHECK(cauchy_bound(Poly{-d, c, -b, 1.0}) == doctest::Approx(1.0 + b));
    CHECK(cauchy_bound(Poly{0, 0, 0, 1}) == 1.0);
    CHECK(cauchy_bound(gali_example_poly()) == doctest::Approx(3.7775).epsilon(1e-4));
    CHECK_THROWS_AS(cauchy_bound(Poly{3.0}), std::invalid_argument);
}

TEST_CASE("reciprocal polynomial") {
    SUBCASE("x - 2 -> x - 1/2") {
        const Poly r = reciprocal_poly(Poly{-2.0, 1.0});
        CHECK(r.degree() == 1);
        CHECK(r.leading() == 1.0);
        CHECK(eval(r, 0.5) == doctest::Approx(0.0));
    }
    SUBCASE("roots become reciprocals") {
        // monic cubic with roots 2, -3, 0.5
        const Poly p = Poly::from_descending({1, -(2.0 - 3.0 + 0.5),
                                              (2 * -3.0 + 2 * 0.5 + -3.0 * 0.5),
                                              -(2 * -3.0 * 0.5)});
        const Poly r = reciprocal_poly(p);
        for (double root : {0.5, -1.0 / 3.0, 2.0})
            CHECK(std::abs(eval(r, root)) < 1e-12);
    }
    SUBCASE("printed inverse-matrix eigenvalues") {
        const Poly p = Poly::from_descending({1, -2.3131, -1.3899, 3.3939});
        const Poly r = reciprocal_poly(p);
        const RootSet rs = all_roots(r);
        REQUIRE(rs.converged);
        std::vector<double> expected{-0.8331, 0.4414, 0.8012};
        for (double want : expected) {
            double best = 1e9;
            for (const auto& z : rs.roots) best = std::min(best, std::abs(z - want));
            CHECK(best < 5e-4);
        }
    }
    SUBCASE("zero constant term refused") {
        CHECK_THROWS_AS(reciprocal_poly(Poly{0.0, 1.0, 1.0}), ZeroConstantTerm);
    }
}

TEST_CASE("variation monotonicity and bound soundness on random polynomials") {
    Rng rng(20240601);
    int checked = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int deg = 1 + static_cast<int>(rng.next_u64() % 6);
        std::vector<double> c(static_cast<size_t>(deg) + 1);
        for (double& v : c) v = rng.uniform(-10, 10);
        if (std::abs(c.back()) < 1e-3) c.back() = 1.0;
        const Poly p(std::move(c));
        double a = rng.uniform(-6, 6), b = rng.uniform(-6, 6);
        if (a > b) std::swap(a, b);
        if (b - a < 1e-3) continue;
        if (std::abs(eval(p, a)) <= 1e-7 || std::abs(eval(p, b)) <= 1e-7) continue;

        const RootBound rb = budan_fourier_bound(p, a, b);
        CHECK(rb.max_roots >= 0);  // v_b <= v_a

        const RootSet rs = all_roots(p);
        if (!rs.converged) continue;
        int real_in = 0;
        bool marginal = false;
        for (const auto& z : rs.roots) {
            if (std::abs(z.imag()) > 1e-8) continue;
            if (std::min(std::abs(z.real() - a), std::abs(z.real() - b)) < 1e-6) marginal = true;
            if (z.real() > a && z.real() < b) ++real_in;
        }
        if (marginal) continue;
        ++checked;
        CHECK(real_in <= rb.max_roots);
        CHECK((rb.max_roots - real_in) % 2 == 0);

        // Descartes: positive-root count bounded with matching parity
        const RootBound db = descartes_positive_bound(p);
        int pos_real = 0;
        bool near_zero_root = false;
        for (const auto& z : rs.roots) {
            if (std::abs(z.imag()) > 1e-8) continue;
            if (std::abs(z.real()) < 1e-8) near_zero_root = true;
            if (z.real() > 0) ++pos_real;
        }
        if (!near_zero_root) {
            CHECK(pos_real <= db.max_roots);
            CHECK((db.max_roots - pos_real) % 2 == 0);
        }

        // Cauchy containment
        const double bound = cauchy_bound(p);
        for (const auto& z : rs.roots) CHECK(std::abs(z) <= bound + 1e-9);
    }
    CHECK(checked > 500);
}

TEST_CASE("reciprocal duality against the oracle") {
    Rng rng(5150);
    for (int trial = 0; trial < 300; ++trial) {
        const int deg = 2 + static_cast<int>(rng.next_u64() % 4);
        std::vector<double> c(static_cast<size_t>(deg) + 1);
        for (double& v : c) v = rng.uniform(-5, 5);
        if (std::abs(c[0]) < 1e-2) c[0] = 1.0;
        if (std::abs(c.back()) < 1e-2) c.back() = 1.0;
        const Poly p(std::move(c));
        const RootSet rp = all_roots(p);
        const RootSet rq = all_roots(reciprocal_poly(p));
        if (!rp.converged || !rq.converged) continue;
        for (const auto& z : rp.roots) {
            const auto want = 1.0 / z;
            double best = 1e9;
            for (const auto& w : rq.roots) best = std::min(best, std::abs(w - want));
            CHECK(best < 1e-8 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("exact rational sign evaluation") {
    SUBCASE("matches double arithmetic away from cancellation") {
        const Poly p = gali_example_poly();
        CHECK(exact::sign_variations_at(p, 1.0)
              == sign_variations(fourier_table(p, 1.0).entries));
        CHECK(exact::sign_variations_at(p, -2.5)
              == sign_variations(fourier_table(p, -2.5).entries));
    }
    SUBCASE("correct sign where double Horner cancels catastrophically") {
        // (x-1)^6 expanded; near x=1 the double evaluation is noise while
        // the true value is a tiny positive number.
        const Poly p{1, -6, 15, -20, 15, -6, 1};
        const double x = 1.0 + std::ldexp(1.0, -10);  // exactly representable
        CHECK(exact::sign_at(p, x) == 1);
        CHECK(exact::sign_at(p, 1.0) == 0);
        const RootBound rb = exact::budan_fourier_bound(p, 0.5, 0.875);
        CHECK(rb.max_roots == 0);
    }
    SUBCASE("exact endpoint-root detection") {
        const Poly p{-1.0, 0.0, 0.0, 1.0};  // x^3 - 1
        CHECK_THROWS_AS(exact::budan_fourier_bound(p, 1.0, 2.0), DegenerateEndpoint);
    }
    SUBCASE("agrees with double bound on random instances") {
        Rng rng(99);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> c(4);
            for (double& v : c) v = rng.uniform(-4, 4);
            if (std::abs(c.back()) < 1e-2) c.back() = 1.0;
            const Poly p(std::move(c));
            const double a = -3.0, b = 3.0;
            if (std::abs(eval(p, a)) < 1e-6 || std::abs(eval(p, b)) < 1e-6) continue;
            CHECK(exact::budan_fourier_bound(p, a, b).max_roots
                  == budan_fourier_bound(p, a, b).max_roots);
        }
    }
}
