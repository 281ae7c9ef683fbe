#pragma once

#include "ramanujan/numerics.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace ramanujan {

enum class ParamKind { Integer, Real, Complex };

struct ParamValue {
    std::string name;
    ParamKind kind = ParamKind::Real;
    cplx value{};
};

enum class Status { pass, fail, degraded };

const char* to_string(Status s);

struct Diagnostics {
    long terms = 0;  // series terms summed, all series combined
    long cells = 0;  // quadrature cells or panels integrated
    std::array<double, 2> tail_bounds{0.0, 0.0};  // neglected remainder on the lhs and rhs
    std::string note;
    std::string error;  // set when evaluation threw; the result then has status fail
    std::vector<std::pair<std::string, cplx>> parts;  // named components of the two sides
};

struct IdentityCheckResult {
    std::string identity;
    std::vector<ParamValue> params;
    cplx lhs{};
    cplx rhs{};
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tolerance = 0.0;
    double near_zero = 0.0;  // below this, both sides are compared by absolute residual
    Status status = Status::fail;
    Diagnostics diagnostics;
};

// Fills residuals and status from lhs, rhs, tolerance and near_zero.
void grade(IdentityCheckResult& r, double abs_tol);

}  // namespace ramanujan
