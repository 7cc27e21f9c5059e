#include "nkdet/polyalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace nkdet {

namespace {

int sign_of(double v, double tol) {
    if (v > tol) return 1;
    if (v < -tol) return -1;
    return 0;
}

}  // namespace

Poly::Poly(std::vector<double> ascending) : c_(std::move(ascending)) {
    while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
    if (c_.empty()) c_.push_back(0.0);
}

Poly Poly::from_descending(std::vector<double> descending) {
    std::reverse(descending.begin(), descending.end());
    return Poly(std::move(descending));
}

std::string Poly::str(int precision) const {
    if (is_zero()) return "0";
    std::string out;
    char buf[64];
    for (int i = degree(); i >= 0; --i) {
        const double v = (*this)[i];
        if (v == 0.0 && degree() > 0) continue;
        const bool first = out.empty();
        if (first) {
            out += (v < 0) ? "-" : "";
        } else {
            out += (v < 0) ? " - " : " + ";
        }
        const double a = std::abs(v);
        if (i == 0) {
            std::snprintf(buf, sizeof buf, "%.*f", precision, a);
            out += buf;
        } else {
            if (a != 1.0) {
                std::snprintf(buf, sizeof buf, "%.*f", precision, a);
                out += buf;
            }
            out += (i == 1) ? "x" : ("x^" + std::to_string(i));
        }
    }
    return out;
}

double eval(const Poly& p, double x) {
    const auto& c = p.coeffs();
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly derivative(const Poly& p) {
    if (p.degree() == 0) return Poly{};
    std::vector<double> d(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i)
        d[static_cast<size_t>(i - 1)] = i * p[i];
    return Poly(std::move(d));
}

FourierTable fourier_table(const Poly& p, double x, double zero_tol) {
    if (p.is_zero())
        throw std::invalid_argument("fourier_table: zero polynomial");
    FourierTable t;
    t.source = p;
    t.at = x;
    t.entries.zero_tol = zero_tol;
    Poly q = p;
    t.entries.values.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        t.entries.values.push_back(eval(q, x));
        q = derivative(q);
    }
    return t;
}

int sign_variations(const SignSeq& s) {
    int count = 0;
    int prev = 0;
    for (double v : s.values) {
        const int sg = sign_of(v, s.zero_tol);
        if (sg == 0) continue;  // zeros between nonzero entries are skipped
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

RootBound budan_fourier_bound(const Poly& p, double a, double b, double zero_tol) {
    if (p.is_zero()) throw std::invalid_argument("budan_fourier_bound: zero polynomial");
    if (!(a < b)) throw std::invalid_argument("budan_fourier_bound: requires a < b");
    if (std::abs(eval(p, a)) <= zero_tol)
        throw DegenerateEndpoint("budan_fourier_bound: p(a) ~ 0 at a=" + std::to_string(a));
    if (std::abs(eval(p, b)) <= zero_tol)
        throw DegenerateEndpoint("budan_fourier_bound: p(b) ~ 0 at b=" + std::to_string(b));
    const int va = sign_variations(fourier_table(p, a, zero_tol).entries);
    const int vb = sign_variations(fourier_table(p, b, zero_tol).entries);
    if (vb > va)
        throw std::runtime_error("budan_fourier_bound: variation count increased from a to b (numerical sign flip)");
    return RootBound{a, b, va - vb, true};
}

RootBound descartes_positive_bound(const Poly& p, double zero_tol) {
    if (p.is_zero()) throw std::invalid_argument("descartes_positive_bound: zero polynomial");
    SignSeq s{p.coeffs(), zero_tol};
    return RootBound{0.0, std::numeric_limits<double>::infinity(),
                     sign_variations(s), true};
}

double cauchy_bound(const Poly& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("cauchy_bound: requires a nonconstant polynomial");
    double worst = 0.0;
    for (int i = 0; i < p.degree(); ++i)
        worst = std::max(worst, std::abs(p[i] / p.leading()));
    return 1.0 + worst;
}

Poly reciprocal_poly(const Poly& p, double zero_tol) {
    if (std::abs(p[0]) <= zero_tol)
        throw ZeroConstantTerm("reciprocal_poly: constant term is (numerically) zero");
    std::vector<double> rev(p.coeffs().rbegin(), p.coeffs().rend());
    const double lead = rev.back();  // = p(0)
    for (double& v : rev) v /= lead;
    return Poly(std::move(rev));
}

namespace exact {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Every finite double is an exact binary rational.
Rational to_rational(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("exact: non-finite input");
    if (v == 0.0) return Rational(0);
    int exp = 0;
    const double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    Rational r(scaled);
    const int shift = exp - 53;
    if (shift >= 0)
        r *= Rational(boost::multiprecision::cpp_int(1) << shift);
    else
        r /= Rational(boost::multiprecision::cpp_int(1) << -shift);
    return r;
}

std::vector<Rational> rational_coeffs(const Poly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (double v : p.coeffs()) c.push_back(to_rational(v));
    return c;
}

Rational eval_rational(const std::vector<Rational>& c, const Rational& x) {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int variations_of(const std::vector<Rational>& vals) {
    int count = 0, prev = 0;
    for (const auto& v : vals) {
        const int sg = v.sign();
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

std::vector<Rational> fourier_values(const Poly& p, double x) {
    auto c = rational_coeffs(p);
    const Rational rx = to_rational(x);
    std::vector<Rational> vals;
    vals.reserve(c.size());
    for (size_t n = c.size(); n >= 1; --n) {
        vals.push_back(eval_rational(c, rx));
        std::vector<Rational> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = Rational(static_cast<int>(i)) * c[i];
        c = std::move(d);
        if (c.empty()) break;
    }
    return vals;
}

}  // namespace

int sign_at(const Poly& p, double x) {
    return eval_rational(rational_coeffs(p), to_rational(x)).sign();
}

int sign_variations_at(const Poly& p, double x) {
    if (p.is_zero()) throw std::invalid_argument("exact::sign_variations_at: zero polynomial");
    return variations_of(fourier_values(p, x));
}

RootBound budan_fourier_bound(const Poly& p, double a, double b) {
    if (p.is_zero()) throw std::invalid_argument("exact::budan_fourier_bound: zero polynomial");
    if (!(a < b)) throw std::invalid_argument("exact::budan_fourier_bound: requires a < b");
    if (sign_at(p, a) == 0)
        throw DegenerateEndpoint("exact::budan_fourier_bound: p(a) == 0");
    if (sign_at(p, b) == 0)
        throw DegenerateEndpoint("exact::budan_fourier_bound: p(b) == 0");
    const int va = sign_variations_at(p, a);
    const int vb = sign_variations_at(p, b);
    return RootBound{a, b, va - vb, true};
}

}  // namespace exact

}  // namespace nkdet
