#pragma once

#include <array>
#include <string>

#include "nkdet/polyalg.hpp"

namespace nkdet {

/// 3x3 real matrix with the few operations the characteristic-polynomial
/// path needs. All entries must be finite.
struct Matrix3 {
    std::array<std::array<double, 3>, 3> m{};

    double operator()(int r, int c) const { return m[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
    double& operator()(int r, int c) { return m[static_cast<size_t>(r)][static_cast<size_t>(c)]; }

    double trace() const;
    double det() const;
    /// Sum of the three principal 2x2 minors.
    double principal_minor_sum() const;

    /// Monic characteristic polynomial det(xI - M) by cofactor expansion:
    /// x^3 - trace x^2 + minor_sum x - det.
    Poly charpoly() const;

    bool all_finite() const;
    std::string str(int precision = 4) const;
};

}  // namespace nkdet
