#pragma once

#include <map>
#include <string>
#include <vector>

#include "nkdet/determinacy.hpp"
#include "nkdet/rng.hpp"

namespace nkdet {

/// Uniform parameter draw for a family over its documented sampling box:
///   gali           beta in (0.5, 0.999); sigma, eta, k in (0.01, 5)
///   bm-*           k, sigma in (0.01, 5); beta in (0.5, 0.999);
///                  phi_x, phi_pi (and phi_r) in [0, 5]
///   gabaix-cubic   b, c, d in (0.01, 5)
///   gabaix-matrix  entries in [-2, 2]
///   blp            beta in (0.5, 0.999), eta in [0, 0.9], gamma in [0, 1],
///                  rho_R in [0, 0.9], k in (0.01, 1), varphi in (0.1, 3),
///                  phi_Y in (0.01, 2), phi_pi in (0.01, 3)
ParamSet sample_params(Family f, Rng& rng);

struct FamilyTally {
    int agree = 0;
    int disagree = 0;
    int skipped = 0;
    int total() const { return agree + disagree + skipped; }
};

struct VerifySummary {
    std::vector<std::pair<Family, FamilyTally>> tallies;
    bool ok() const;
    std::string str() const;
};

/// Runs config.sample_count cross-validation draws per family with the
/// configured seed. Draw sequences are independent per family (seed is
/// combined with the family index) so adding a family does not perturb
/// the others.
VerifySummary run_verification(const std::vector<Family>& families,
                               const ReportConfig& config);

}  // namespace nkdet
