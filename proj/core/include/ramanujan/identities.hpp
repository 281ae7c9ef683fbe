#pragma once

// Registry of the verifiable identities: each id maps to a parameter schema and
// evaluators for both sides, assembled as printed without algebraic rearrangement.

#include "ramanujan/numerics.hpp"
#include "ramanujan/result.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramanujan {

struct ParamSpec {
    std::string name;
    ParamKind kind = ParamKind::Real;
    std::optional<cplx> default_value;
    std::string description;
};

struct IdentityInfo {
    std::string id;
    std::vector<ParamSpec> schema;
    std::string hypotheses;
    std::string anchor;      // name of the result being checked
    double tolerance = 0.0;  // relative tolerance used to grade the residual
};

using ParamMap = std::map<std::string, cplx>;

// All 17 identities in a fixed order.
const std::vector<IdentityInfo>& list_identities();

// Throws SpecError naming the valid ids when `id` is unknown.
const IdentityInfo& identity_info(const std::string& id);

// Evaluates both sides at `params`. Dependent parameters (beta from alpha) are always
// derived. Throws SpecError on unknown or missing parameters and on violated hypotheses.
IdentityCheckResult check(const std::string& id, const ParamMap& params, const PrecisionConfig& cfg = {},
                          std::optional<double> tolerance = std::nullopt);

struct GridAxis {
    std::string name;
    std::vector<cplx> values;
};

struct GridReport {
    std::vector<IdentityCheckResult> results;  // cartesian order, last axis fastest
    double max_abs_residual = 0.0;
    double max_rel_residual = 0.0;
    long failures = 0;
    long degraded = 0;
};

// Cartesian product of the axes; no axes, or an empty axis, gives an empty report.
// Points are evaluated on up to `jobs` threads; per-point errors become failed rows
// with diagnostics.error set.
GridReport grid_check(const std::string& id, const std::vector<GridAxis>& grid, const PrecisionConfig& cfg = {},
                      int jobs = 1, std::optional<double> tolerance = std::nullopt);

}  // namespace ramanujan
