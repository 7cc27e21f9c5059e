#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "nkdet/errors.hpp"

namespace nkdet {

/// Absolute threshold below which an evaluated quantity is treated as zero
/// when deciding signs. Exact arithmetic needs no threshold; doubles do.
inline constexpr double kDefaultZeroTol = 1e-9;

/// Dense real-coefficient univariate polynomial, coefficients stored in
/// ascending degree order. The trailing coefficient is nonzero unless the
/// polynomial is identically zero (stored as the single coefficient 0).
class Poly {
public:
    Poly() : c_{0.0} {}
    explicit Poly(std::vector<double> ascending);
    Poly(std::initializer_list<double> ascending)
        : Poly(std::vector<double>(ascending)) {}

    /// Convenience for literals written highest degree first.
    static Poly from_descending(std::vector<double> descending);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0.0; }
    double leading() const { return c_.back(); }
    const std::vector<double>& coeffs() const { return c_; }

    /// Coefficient of x^i; zero beyond the degree.
    double operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : 0.0;
    }

    std::string str(int precision = 4) const;

private:
    std::vector<double> c_;
};

/// A finite sequence of reals together with the threshold that decides
/// which entries count as zero when looking for sign variations.
struct SignSeq {
    std::vector<double> values;
    double zero_tol = kDefaultZeroTol;
};

/// A polynomial and all of its derivatives evaluated at one point:
/// entries = (P(at), P'(at), ..., P^(d)(at)), exactly degree+1 values.
/// The last entry is d! * leading coefficient, hence nonzero.
struct FourierTable {
    Poly source;
    double at = 0.0;
    SignSeq entries;
};

/// Budan-Fourier / Descartes style root-count bound on an open interval:
/// the actual count r satisfies r <= max_roots, and when parity_fixed is
/// true, max_roots - r is even.
struct RootBound {
    double a = 0.0;
    double b = 0.0;  // may be +infinity (Descartes)
    int max_roots = 0;
    bool parity_fixed = false;
};

/// Horner evaluation.
double eval(const Poly& p, double x);

Poly derivative(const Poly& p);

FourierTable fourier_table(const Poly& p, double x, double zero_tol = kDefaultZeroTol);

/// Number of sign variations: pairs of opposite-signed nonzero entries
/// separated only by zeros. Entries with |v| <= zero_tol count as zero;
/// an all-zero sequence has no variations.
int sign_variations(const SignSeq& s);

/// v_a - v_b of the Fourier tables at the endpoints. Throws
/// DegenerateEndpoint when either endpoint is (numerically) a root.
RootBound budan_fourier_bound(const Poly& p, double a, double b,
                              double zero_tol = kDefaultZeroTol);

/// Descartes' rule of signs: coefficient sign variations bound the count
/// of positive real roots with matching parity. Interval is (0, +inf).
RootBound descartes_positive_bound(const Poly& p, double zero_tol = kDefaultZeroTol);

/// 1 + max |c_i / leading| over i < degree; every complex root has
/// modulus at most this.
double cauchy_bound(const Poly& p);

/// Coefficient-reversed polynomial, normalized monic; its roots are the
/// reciprocals of p's roots. Requires p(0) != 0.
Poly reciprocal_poly(const Poly& p, double zero_tol = kDefaultZeroTol);

namespace exact {

/// Sign variations of the Fourier sequence at x, evaluated in exact
/// rational arithmetic (finite doubles are exact binary rationals, so no
/// threshold is needed; only true zeros count as zero).
int sign_variations_at(const Poly& p, double x);

/// As budan_fourier_bound but with exact sign decisions. Endpoint roots
/// are detected exactly.
RootBound budan_fourier_bound(const Poly& p, double a, double b);

/// Exact sign of p(x): -1, 0, or +1.
int sign_at(const Poly& p, double x);

}  // namespace exact

}  // namespace nkdet
