#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "nkdet/determinacy.hpp"

namespace nkdet {

struct AxisSpec {
    std::string param;
    double start = 0;
    double stop = 0;
    double step = 0;
};

struct SweepSpec {
    Family family = Family::Gali;
    std::map<std::string, double> fixed;
    std::vector<AxisSpec> axes;  // 1 or 2 entries
    std::string output_path;

    /// step > 0, start <= stop, axis params disjoint from fixed, and every
    /// family parameter assigned exactly once. Throws InvalidParams.
    void validate() const;
};

/// Ordered parameter names of a family (the sweepable scalar surface).
const std::vector<std::string>& family_params(Family f);

/// Grid values including both endpoints; deterministic.
std::vector<double> axis_values(const AxisSpec& axis);

/// Writes the CSV rows (header first) in row-major axis order.
/// Byte-for-byte deterministic given spec + config.
void run_sweep(const SweepSpec& spec, const ReportConfig& config, std::ostream& out);

/// Builds the ParamSet of a family from a full name->value assignment.
ParamSet params_from_map(Family f, const std::map<std::string, double>& values);

}  // namespace nkdet
