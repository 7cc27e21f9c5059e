#pragma once

#include <string>

#include "nkdet/determinacy.hpp"

namespace nkdet {

/// Single-point analysis: the full report text plus the verdict that
/// drives the process exit code.
struct AnalyzeResult {
    std::string text;
    Outcome headline = Outcome::Boundary;
    int exit_code = 0;
};

/// Renders matrix (when present), characteristic polynomial, the Fourier
/// tables at the decision points of the relevant statement, oracle roots,
/// the analytic verdict with its named condition, and agreement status.
/// Report numbers use 4 decimals.
AnalyzeResult analyze_point(Family f, const ParamSet& params, const ReportConfig& config);

/// 0 Determinate, 2 Indeterminate/NoStableSolution, 3 Boundary/HypothesisNotMet.
int exit_code_for(Outcome o);

/// Full-precision (17 significant digits) formatting used by the CSV.
std::string format_full(double v);

}  // namespace nkdet
