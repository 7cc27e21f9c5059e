#include "nkdet/matrix3.hpp"

#include <cmath>
#include <cstdio>

namespace nkdet {

double Matrix3::trace() const { return m[0][0] + m[1][1] + m[2][2]; }

double Matrix3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double Matrix3::principal_minor_sum() const {
    return (m[0][0] * m[1][1] - m[0][1] * m[1][0])
         + (m[0][0] * m[2][2] - m[0][2] * m[2][0])
         + (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
}

Poly Matrix3::charpoly() const {
    return Poly{-det(), principal_minor_sum(), -trace(), 1.0};
}

bool Matrix3::all_finite() const {
    for (const auto& row : m)
        for (double v : row)
            if (!std::isfinite(v)) return false;
    return true;
}

std::string Matrix3::str(int precision) const {
    std::string out;
    char buf[64];
    for (int r = 0; r < 3; ++r) {
        out += "  [";
        for (int c = 0; c < 3; ++c) {
            std::snprintf(buf, sizeof buf, " %*.*f", precision + 4, precision,
                          m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
            out += buf;
        }
        out += " ]\n";
    }
    return out;
}

}  // namespace nkdet
