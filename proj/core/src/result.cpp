#include "ramanujan/result.hpp"

namespace ramanujan {

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::degraded: return "degraded";
    }
    return "fail";
}

void grade(IdentityCheckResult& r, double abs_tol) {
    r.abs_residual = std::abs(r.lhs - r.rhs);
    const double scale = std::max({std::abs(r.lhs), std::abs(r.rhs), abs_tol});
    r.rel_residual = r.abs_residual / scale;
    const double floor = r.near_zero > 0.0 ? r.near_zero : 1e3 * abs_tol;
    const bool near_zero = std::abs(r.lhs) < floor && std::abs(r.rhs) < floor;
    const bool ok = r.rel_residual <= r.tolerance || (near_zero && r.abs_residual <= floor);
    r.near_zero = floor;
    r.status = ok ? Status::pass : Status::fail;
}

}  // namespace ramanujan
