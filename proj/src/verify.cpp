#include "nkdet/verify.hpp"

#include <cstdio>

namespace nkdet {

ParamSet sample_params(Family f, Rng& rng) {
    switch (f) {
        case Family::Gali:
            return GaliParams{rng.uniform(0.01, 5.0), rng.uniform(0.01, 5.0),
                              rng.uniform(0.01, 5.0), rng.uniform(0.5, 0.999)};
        case Family::BmNonInertial: {
            BmNonInertialParams p;
            p.k = rng.uniform(0.01, 5.0);
            p.sigma = rng.uniform(0.01, 5.0);
            p.beta = rng.uniform(0.5, 0.999);
            p.phi_x = rng.uniform(0.0, 5.0);
            p.phi_pi = rng.uniform(0.0, 5.0);
            return p;
        }
        case Family::BmInertial:
        case Family::BmForward: {
            BmInertialParams p;
            p.k = rng.uniform(0.01, 5.0);
            p.sigma = rng.uniform(0.01, 5.0);
            p.beta = rng.uniform(0.5, 0.999);
            p.phi_x = rng.uniform(0.0, 5.0);
            p.phi_pi = rng.uniform(0.0, 5.0);
            p.phi_r = rng.uniform(0.0, 5.0);
            if (f == Family::BmInertial) return p;
            return BmForwardParams{p.k, p.sigma, p.beta, p.phi_x, p.phi_pi, p.phi_r};
        }
        case Family::GabaixCubic:
            return GabaixCubic{rng.uniform(0.01, 5.0), rng.uniform(0.01, 5.0),
                               rng.uniform(0.01, 5.0)};
        case Family::GabaixMatrix: {
            Matrix3 m;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) m(r, c) = rng.uniform(-2.0, 2.0);
            return m;
        }
        case Family::Blp: {
            BlpParams p;
            p.beta = rng.uniform(0.5, 0.999);
            p.eta = rng.uniform(0.0, 0.9);
            p.gamma = rng.uniform(0.0, 1.0);
            p.rho_r = rng.uniform(0.0, 0.9);
            p.k = rng.uniform(0.01, 1.0);
            p.varphi = rng.uniform(0.1, 3.0);
            p.phi_y = rng.uniform(0.01, 2.0);
            p.phi_pi = rng.uniform(0.01, 3.0);
            return p;
        }
    }
    throw std::logic_error("sample_params: unknown family");
}

bool VerifySummary::ok() const {
    for (const auto& [f, t] : tallies)
        if (t.disagree > 0) return false;
    return true;
}

std::string VerifySummary::str() const {
    std::string out;
    char buf[160];
    for (const auto& [f, t] : tallies) {
        std::snprintf(buf, sizeof buf, "%-16s agree %-7d disagree %-5d skipped %d\n",
                      family_name(f), t.agree, t.disagree, t.skipped);
        out += buf;
    }
    out += ok() ? "result: PASS (zero disagreements)\n"
                : "result: FAIL (disagreements found)\n";
    return out;
}

VerifySummary run_verification(const std::vector<Family>& families,
                               const ReportConfig& config) {
    VerifySummary summary;
    for (Family f : families) {
        FamilyTally tally;
        Rng rng(config.seed * 0x9e3779b97f4a7c15ULL
                + static_cast<std::uint64_t>(f) * 0xbf58476d1ce4e5b9ULL + 1);
        for (int i = 0; i < config.sample_count; ++i) {
            const ParamSet params = sample_params(f, rng);
            AgreementReport rep;
            try {
                rep = cross_validate(f, params, config);
            } catch (const std::exception&) {
                ++tally.skipped;  // hypothesis violations from raw draws
                continue;
            }
            switch (rep.agreement) {
                case Agreement::Agree: ++tally.agree; break;
                case Agreement::Disagree: ++tally.disagree; break;
                case Agreement::Skipped: ++tally.skipped; break;
            }
        }
        summary.tallies.emplace_back(f, tally);
    }
    return summary;
}

}  // namespace nkdet
