#include "ramanujan/identities.hpp"

#include "ramanujan/asymptotics.hpp"
#include "ramanujan/detail.hpp"
#include "ramanujan/lambert.hpp"
#include "ramanujan/pv_quad.hpp"
#include "ramanujan/raabe.hpp"

#include <atomic>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

namespace ramanujan {

using detail::cpow;

namespace {

constexpr double series_tol = 1e-8;
constexpr double quadrature_tol = 1e-5;

// Validated view of the parameters of one check.
class Args {
public:
    Args(const IdentityInfo& info, const ParamMap& given) : info_(info) {
        for (const auto& [name, value] : given) {
            if (!find(name)) throw SpecError(info.id + ": unknown parameter '" + name + "'");
            (void)value;
        }
        for (const auto& spec : info.schema) {
            auto it = given.find(spec.name);
            cplx v;
            if (it != given.end())
                v = it->second;
            else if (spec.default_value)
                v = *spec.default_value;
            else
                throw SpecError(info.id + ": missing parameter '" + spec.name + "'");
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw SpecError(info.id + ": parameter '" + spec.name + "' is not finite");
            if (spec.kind != ParamKind::Complex && v.imag() != 0.0)
                throw SpecError(info.id + ": parameter '" + spec.name + "' must be real");
            if (spec.kind == ParamKind::Integer && (v.real() != std::round(v.real()) || std::abs(v.real()) > 1e6))
                throw SpecError(info.id + ": parameter '" + spec.name + "' must be an integer");
            values_[spec.name] = v;
            echo_.push_back({spec.name, spec.kind, v});
        }
    }

    int integer(const std::string& n) const { return static_cast<int>(values_.at(n).real()); }
    double real(const std::string& n) const { return values_.at(n).real(); }
    cplx complex(const std::string& n) const { return values_.at(n); }
    const std::vector<ParamValue>& echo() const { return echo_; }

    void require(bool ok, const std::string& condition) const {
        if (!ok) throw SpecError(info_.id + ": requires " + condition);
    }

private:
    const ParamSpec* find(const std::string& name) const {
        for (const auto& s : info_.schema)
            if (s.name == name) return &s;
        return nullptr;
    }

    const IdentityInfo& info_;
    std::map<std::string, cplx> values_;
    std::vector<ParamValue> echo_;
};

using Evaluator = std::function<void(const Args&, const PrecisionConfig&, IdentityCheckResult&)>;

struct Entry {
    IdentityInfo info;
    Evaluator eval;
};

void add_series(IdentityCheckResult& r, const SeriesValue& v, int side) {
    r.diagnostics.terms += v.terms;
    r.diagnostics.tail_bounds[side] += v.tail_bound;
}

// zeta(2m+1) for any integer m != 0, through zeta(1-2k) = -B_{2k}/(2k) for m < 0.
double zeta_odd(int m, const PrecisionConfig& cfg) {
    if (m > 0) return riemann_zeta(2.0 * m + 1.0, cfg).real();
    const int k = -m;
    return -bernoulli_double(2 * k) / (2.0 * k);
}

cplx gamma_zeta_scaled(cplx s, const PrecisionConfig& cfg) {
    return gamma(s) * riemann_zeta(s, cfg) / cpow(2.0 * pi, s);
}

void require_alpha(const Args& a, cplx alpha) { a.require(alpha.real() > 0.0, "Re(alpha) > 0"); }

void eval_ram_zeta_odd(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const int m = a.integer("m");
    const cplx alpha = a.complex("alpha");
    a.require(m != 0, "m != 0");
    require_alpha(a, alpha);
    const cplx beta = pi * pi / alpha;
    const double half_zeta = 0.5 * zeta_odd(m, cfg);
    const SeriesValue sa = lambert_shifted({-2.0 * m, 2.0 * alpha, 0.0}, cfg);
    const SeriesValue sb = lambert_shifted({-2.0 * m, 2.0 * beta, 0.0}, cfg);
    add_series(r, sa, 0);
    add_series(r, sb, 1);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;  // (-beta)^{-m} = (-1)^m beta^{-m}
    r.lhs = std::pow(alpha, -m) * (half_zeta + sa.value);
    const cplx transformed = sign * std::pow(beta, -m) * (half_zeta + sb.value);
    ComplexSum poly;
    for (int k = 0; k <= m + 1; ++k) {
        const double c = bernoulli_double(2 * k) * bernoulli_double(2 * m + 2 - 2 * k) /
                         (factorial(2 * k) * factorial(2 * m + 2 - 2 * k));
        poly += ((k % 2 == 0) ? c : -c) * std::pow(alpha, m + 1 - k) * std::pow(beta, k);
    }
    const cplx polynomial = -std::pow(4.0, m) * poly.value();
    r.rhs = transformed + polynomial;
    r.diagnostics.parts = {{"beta", beta}, {"transformed_series", transformed}, {"bernoulli_polynomial", polynomial}};
}

// Both sides of the general transformation at shift a; a = 0 gives the unshifted form
// with the cosine and sine factors written out.
void eval_ram(const Args& args, double a, bool shifted, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const cplx s = args.complex("s");
    const cplx alpha = args.complex("alpha");
    args.require(s.real() > 2.0, "Re(s) > 2");
    require_alpha(args, alpha);
    args.require(a >= 0.0 && a < 1.0, "0 <= a < 1");
    const cplx beta = 4.0 * pi * pi / alpha;
    const cplx gz = gamma_zeta_scaled(s, cfg);
    const cplx cos_s = detail::cos_pi(0.5 * s);
    const cplx sin_s = detail::sin_pi(0.5 * s);

    SeriesValue left_series, right_series;
    cplx left_const, right_const, pv_term = 0.0;
    if (shifted) {
        left_series = lambert_twisted(s, alpha, a, cfg);
        left_const = gz;
        right_const = gamma(s) / cpow(2.0 * pi, s) * cosine_zeta(s, a, cfg);
        right_series = lambert_shifted({s, beta, a}, cfg);
        const PVResult pv = pv_integral({PVKernel::ShiftedCot, s, beta, a, 0.0}, cfg);
        pv_term = -pv.value;
        r.diagnostics.cells += pv.cells;
        r.diagnostics.tail_bounds[1] += pv.tail_bound;
    } else {
        const SeriesValue plain = lambert_shifted({s, alpha, 0.0}, cfg);
        left_series = {cos_s * plain.value, std::abs(cos_s) * plain.tail_bound, plain.terms};
        left_const = gz;
        right_const = cos_s * gz;
        right_series = lambert_shifted({s, beta, 0.0}, cfg);
        if (sin_s != 0.0) {
            const PVResult pv = pv_integral({PVKernel::RamanujanCot, s, beta, 0.0, 0.0}, cfg);
            pv_term = -sin_s * pv.value;
            r.diagnostics.cells += pv.cells;
            r.diagnostics.tail_bounds[1] += std::abs(sin_s) * pv.tail_bound;
        } else {
            r.diagnostics.note = "principal-value term vanishes: sin(pi s/2) = 0";
        }
    }
    add_series(r, left_series, 0);
    add_series(r, right_series, 1);
    const cplx left_scale = cpow(alpha, 0.5 * s);
    const cplx right_scale = cpow(beta, 0.5 * s);
    r.lhs = left_scale * (left_const + left_series.value);
    r.rhs = right_scale * (right_const + right_series.value + pv_term);
    r.diagnostics.parts = {{"beta", beta},
                           {"lhs_constant", left_scale * left_const},
                           {"lhs_series", left_scale * left_series.value},
                           {"rhs_constant", right_scale * right_const},
                           {"rhs_series", right_scale * right_series.value},
                           {"rhs_pv", right_scale * pv_term}};
}

void eval_hybrid_half(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const int m = a.integer("m");
    const cplx alpha = a.complex("alpha");
    a.require(m >= 1, "m >= 1");
    require_alpha(a, alpha);
    const cplx beta = 4.0 * pi * pi / alpha;
    const SeriesValue alt = lambert_alternating(2.0 * m, alpha, cfg);
    const SeriesValue half = lambert_shifted({2.0 * m, beta, 0.5}, cfg);
    add_series(r, alt, 0);
    add_series(r, half, 0);
    const cplx am = std::pow(alpha, m);
    const cplx mbm = std::pow(-beta, m);
    r.lhs = am * alt.value + mbm * half.value;
    r.rhs = -(am - (std::pow(2.0, 1 - 2 * m) - 1.0) * mbm) * bernoulli_double(2 * m) / (4.0 * m);
    r.diagnostics.parts = {{"beta", beta}, {"alternating", am * alt.value}, {"half_shifted", mbm * half.value}};
    if (m == 1) r.diagnostics.note = "boundary case s = 2, outside Re(s) > 2";
}

void eval_closed_odd(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const int m = a.integer("m");
    a.require(m > 1 && m % 2 == 1, "m odd and m > 1");
    const SeriesValue alt = lambert_alternating(2.0 * m, 2.0 * pi, cfg);
    const SeriesValue plain = lambert_shifted({2.0 * m, pi, 0.0}, cfg);
    add_series(r, alt, 0);
    add_series(r, plain, 0);
    const double c = std::pow(2.0, 1 - 2 * m);
    r.lhs = alt.value - c * plain.value;
    r.rhs = -(1.0 + c) * bernoulli_double(2 * m) / (4.0 * m);
}

void eval_closed_m1(const Args&, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const SeriesValue alt = lambert_alternating(2.0, 2.0 * pi, cfg);
    const SeriesValue plain = lambert_shifted({2.0, pi, 0.0}, cfg);
    add_series(r, alt, 0);
    add_series(r, plain, 0);
    r.lhs = alt.value - 0.5 * plain.value;
    r.rhs = -3.0 / 48.0 + 1.0 / (8.0 * pi);
}

void eval_quarter_sum(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const int m = a.integer("m");
    const cplx alpha = a.complex("alpha");
    a.require(m > 1, "m > 1");
    require_alpha(a, alpha);
    const cplx beta = 4.0 * pi * pi / alpha;
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m+1}
    const double gz = gamma_zeta_scaled(2.0 * m, cfg).real();
    const SeriesValue alt = lambert_alternating(2.0 * m, 2.0 * alpha, cfg);
    const SeriesValue odd = lambert_odd(2.0 * m, 0.25 * beta, cfg);
    add_series(r, alt, 0);
    add_series(r, odd, 1);
    r.lhs = std::pow(alpha, m) * std::pow(2.0, 4 * m - 1) * (gz + sign * alt.value);
    r.rhs = std::pow(beta, m) * (sign * gz * (std::pow(2.0, 2 * m - 1) - 1.0) + odd.value);
    r.diagnostics.parts = {{"beta", beta}};
}

void eval_quarter_pv(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const int m = a.integer("m");
    const cplx beta = a.complex("beta");
    a.require(m > 1, "m > 1");
    a.require(beta.real() > 0.0, "Re(beta) > 0");
    const PVResult pv = pv_integral({PVKernel::SechCot, 2.0 * m, beta, 0.0, 0.0}, cfg);
    const SeriesValue chi = lambert_char4(m, beta, cfg);
    r.diagnostics.cells += pv.cells;
    r.diagnostics.tail_bounds[0] += pv.tail_bound;
    add_series(r, chi, 1);
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    r.lhs = pv.value;
    r.rhs = sign * std::pow(4.0, 1 - 2 * m) * chi.value;
}

void eval_sigma_2m(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const int m = a.integer("m");
    const cplx y = a.complex("y");
    a.require(m >= 1, "m >= 1");
    a.require(y.real() > 0.0, "Re(y) > 0");
    const SeriesValue lam = lambert_sigma2m(m, y, cfg);
    const SeriesValue tr = sigma2m_transformed(m, y, 0, cfg);
    add_series(r, lam, 0);
    add_series(r, tr, 1);
    const cplx leading = factorial(2 * m) * riemann_zeta(2.0 * m + 1.0, cfg).real() / std::pow(y, 2 * m + 1);
    const cplx second = bernoulli_double(2 * m) / (2.0 * m * y);
    r.lhs = lam.value - leading + second;
    r.rhs = tr.value;
    r.diagnostics.parts = {{"lambert_series", lam.value}, {"leading_term", leading}, {"bernoulli_term", second}};
}

void eval_dgkm(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const cplx u = a.complex("u");
    a.require(u.real() > 0.0, "Re(u) > 0");
    r = dgkm_identity(u, cfg);
}

void eval_raabe_sum(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const cplx z = a.complex("z");
    const cplx w = a.complex("w");
    a.require(z.real() > 0.0, "Re(z) > 0");
    a.require(w.real() > 0.0, "Re(w) > 0");
    const SeriesValue direct = raabe_sum(z, w, cfg);
    add_series(r, direct, 0);
    r.lhs = direct.value;
    r.rhs = raabe_sum_closed(z, w, cfg);
}

void eval_raabe_int(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const cplx z = a.complex("z");
    const cplx w = a.complex("w");
    a.require(z.real() > 0.0, "Re(z) > 0");
    a.require(w.real() > 0.0, "Re(w) > 0");
    r = raabe_integral_check(z, w, cfg);
}

void eval_raabe_closed(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const int m = a.integer("m");
    const cplx w = a.complex("w");
    const double y = a.real("y");
    a.require(m >= 0, "m >= 0");
    a.require(w.real() > 0.0, "Re(w) > 0");
    a.require(y > 0.0, "y > 0");
    const QuadValue q = raabe_direct({static_cast<double>(m), y, w}, cfg);
    r.diagnostics.cells += q.cells;
    r.diagnostics.tail_bounds[0] = q.error_estimate;
    r.lhs = q.value;
    r.rhs = raabe_closed_integer(m, y, w, cfg);
}

void eval_lipschitz(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const double shift = a.real("a");
    const cplx s = a.complex("s");
    const cplx tau = a.complex("tau");
    const int K = a.integer("K");
    a.require(shift >= 0.0 && shift < 1.0, "0 <= a < 1");
    a.require(s.real() > 1.0, "Re(s) > 1");
    a.require(tau.imag() > 0.0, "Im(tau) > 0");
    a.require(K >= 0, "K >= 0");
    const SeriesValue l = lipschitz_lhs(shift, s, tau, cfg);
    const SeriesValue rr = lipschitz_rhs(shift, s, tau, K, cfg);
    add_series(r, l, 0);
    add_series(r, rr, 1);
    r.lhs = l.value;
    r.rhs = rr.value;
}

void eval_lambert_routes(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const cplx s = a.complex("s");
    const cplx y = a.complex("y");
    const double shift = a.real("a");
    a.require(s.real() > 1.0, "Re(s) > 1");
    a.require(y.real() > 0.0, "Re(y) > 0");
    a.require(shift >= 0.0 && shift < 1.0, "0 <= a < 1");
    if (shift == 0.0) a.require(s.real() > 2.0, "Re(s) > 2 when a = 0");
    const SeriesValue direct = lambert_shifted({s, y, shift}, cfg);
    const SeriesValue route = lambert_via_hurwitz({s, y, shift}, 8, cfg);
    add_series(r, direct, 0);
    add_series(r, route, 1);
    r.lhs = direct.value;
    r.rhs = route.value;
}

void eval_glaisher(const Args& a, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const int m = a.integer("m");
    a.require(m > 1 && m % 2 == 1, "m odd and m > 1");
    const SeriesValue v = lambert_shifted({2.0 * m, 2.0 * pi, 0.0}, cfg);
    add_series(r, v, 0);
    r.lhs = v.value;
    r.rhs = bernoulli_double(2 * m) / (4.0 * m);
}

void eval_schlomilch(const Args&, const PrecisionConfig& cfg, IdentityCheckResult& r) {
    const SeriesValue v = lambert_shifted({2.0, 2.0 * pi, 0.0}, cfg);
    add_series(r, v, 0);
    r.lhs = v.value;
    r.rhs = 1.0 / 24.0 - 1.0 / (8.0 * pi);
}

ParamSpec integer_param(std::string name, std::string d) { return {std::move(name), ParamKind::Integer, std::nullopt, std::move(d)}; }
ParamSpec real_param(std::string name, std::string d) { return {std::move(name), ParamKind::Real, std::nullopt, std::move(d)}; }
ParamSpec complex_param(std::string name, std::string d) { return {std::move(name), ParamKind::Complex, std::nullopt, std::move(d)}; }

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        const std::string alpha_d = "scale alpha; beta is derived from alpha";
        std::vector<Entry> e;
        e.push_back({{"RAM_ZETA_ODD",
                      {integer_param("m", "integer m != 0"), complex_param("alpha", alpha_d + " by alpha beta = pi^2")},
                      "m != 0, Re(alpha) > 0",
                      "Ramanujan's formula for zeta(2m+1)",
                      series_tol},
                     eval_ram_zeta_odd});
        e.push_back({{"RAM_GEN",
                      {complex_param("s", "exponent s"), complex_param("alpha", alpha_d + " by alpha beta = 4 pi^2")},
                      "Re(s) > 2, Re(alpha) > 0",
                      "generalized Ramanujan formula with principal-value cot integral",
                      quadrature_tol},
                     [](const Args& a, const PrecisionConfig& c, IdentityCheckResult& r) { eval_ram(a, 0.0, false, c, r); }});
        e.push_back({{"RAM_SHIFTED",
                      {real_param("a", "shift 0 <= a < 1"), complex_param("s", "exponent s"),
                       complex_param("alpha", alpha_d + " by alpha beta = 4 pi^2")},
                      "0 <= a < 1, Re(s) > 2, Re(alpha) > 0",
                      "shifted Ramanujan-type transformation",
                      quadrature_tol},
                     [](const Args& a, const PrecisionConfig& c, IdentityCheckResult& r) {
                         eval_ram(a, a.real("a"), true, c, r);
                     }});
        e.push_back({{"HYBRID_HALF",
                      {integer_param("m", "positive integer m"), complex_param("alpha", alpha_d + " by alpha beta = 4 pi^2")},
                      "m >= 1, Re(alpha) > 0; m = 1 is the boundary s = 2",
                      "hybrid transformation at a = 1/2, s = 2m",
                      series_tol},
                     eval_hybrid_half});
        e.push_back({{"CLOSED_ODD", {integer_param("m", "odd integer m > 1")}, "m odd, m > 1",
                      "closed form at alpha = beta = 2 pi for odd m", series_tol},
                     eval_closed_odd});
        e.push_back({{"CLOSED_M1", {}, "none", "closed form at m = 1 (transcendence witness)", series_tol},
                     eval_closed_m1});
        e.push_back({{"QUARTER_SUM",
                      {integer_param("m", "integer m > 1"), complex_param("alpha", alpha_d + " by alpha beta = 4 pi^2")},
                      "m > 1, Re(alpha) > 0",
                      "combination of the shifts a = 1/4 and a = 3/4: series form",
                      series_tol},
                     eval_quarter_sum});
        e.push_back({{"QUARTER_PV",
                      {integer_param("m", "integer m > 1"), complex_param("beta", "scale beta")},
                      "m > 1, Re(beta) > 0",
                      "sech-cot principal value against the chi mod 4 Lambert series",
                      quadrature_tol},
                     eval_quarter_pv});
        e.push_back({{"SIGMA_2M",
                      {integer_param("m", "positive integer m"), complex_param("y", "rate y")},
                      "m >= 1, Re(y) > 0",
                      "sigma_2m Lambert series transformation with Shi/Chi kernel",
                      series_tol},
                     eval_sigma_2m});
        e.push_back({{"DGKM", {complex_param("u", "scale u")}, "Re(u) > 0",
                      "digamma evaluation of the summed Raabe integrals", series_tol},
                     eval_dgkm});
        e.push_back({{"RAABE_SUM", {complex_param("z", "order z"), complex_param("w", "parameter w")},
                      "Re(z) > 0, Re(w) > 0", "summation law of the generalized Raabe transform", quadrature_tol},
                     eval_raabe_sum});
        e.push_back({{"RAABE_INT", {complex_param("z", "order z"), complex_param("w", "parameter w")},
                      "Re(z) > 0, Re(w) > 0", "integral law of the generalized Raabe transform", 1e-4},
                     eval_raabe_int});
        e.push_back({{"RAABE_CLOSED",
                      {integer_param("m", "nonnegative integer order"), complex_param("w", "parameter w"),
                       {"y", ParamKind::Real, cplx(1.0), "frequency y"}},
                      "m >= 0, Re(w) > 0, y > 0",
                      "integer-order Raabe transform through Shi and Chi",
                      quadrature_tol},
                     eval_raabe_closed});
        e.push_back({{"LIPSCHITZ",
                      {real_param("a", "shift 0 <= a < 1"), complex_param("s", "exponent s"),
                       complex_param("tau", "tau in the upper half plane"),
                       {"K", ParamKind::Integer, cplx(20.0), "terms summed directly on each side of k = 0"}},
                      "0 <= a < 1, Re(s) > 1, Im(tau) > 0",
                      "Lipschitz summation formula",
                      series_tol},
                     eval_lipschitz});
        e.push_back({{"LAMBERT_ROUTES",
                      {complex_param("s", "exponent s"), complex_param("y", "rate y"), real_param("a", "shift 0 <= a < 1")},
                      "Re(s) > 1 (Re(s) > 2 at a = 0), Re(y) > 0, 0 <= a < 1",
                      "Hurwitz zeta evaluation of the shifted Lambert series",
                      series_tol},
                     eval_lambert_routes});
        e.push_back({{"GLAISHER", {integer_param("m", "odd integer m > 1")}, "m odd, m > 1",
                      "Glaisher's evaluation", series_tol},
                     eval_glaisher});
        e.push_back({{"SCHLOMILCH", {}, "none", "Schlomilch's evaluation", series_tol}, eval_schlomilch});
        return e;
    }();
    return entries;
}

const Entry& entry(const std::string& id) {
    for (const auto& e : registry())
        if (e.info.id == id) return e;
    std::ostringstream msg;
    msg << "unknown identity '" << id << "'; valid ids:";
    for (const auto& e : registry()) msg << ' ' << e.info.id;
    throw SpecError(msg.str());
}

}  // namespace

const std::vector<IdentityInfo>& list_identities() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

const IdentityInfo& identity_info(const std::string& id) { return entry(id).info; }

IdentityCheckResult check(const std::string& id, const ParamMap& params, const PrecisionConfig& cfg,
                          std::optional<double> tolerance) {
    cfg.validate();
    const Entry& e = entry(id);
    const Args args(e.info, params);
    IdentityCheckResult r;
    r.tolerance = e.info.tolerance;
    e.eval(args, cfg, r);
    r.identity = e.info.id;
    r.params = args.echo();
    if (tolerance) r.tolerance = *tolerance;
    if (r.tolerance <= 0.0) r.tolerance = e.info.tolerance;
    grade(r, cfg.abs_tol);
    if (r.status == Status::pass && id == "HYBRID_HALF" && args.integer("m") == 1) r.status = Status::degraded;
    return r;
}

GridReport grid_check(const std::string& id, const std::vector<GridAxis>& grid, const PrecisionConfig& cfg, int jobs,
                      std::optional<double> tolerance) {
    const IdentityInfo& info = identity_info(id);
    GridReport report;
    if (grid.empty()) return report;
    std::size_t count = 1;
    for (const auto& axis : grid) count *= axis.values.size();
    if (count == 0) return report;

    std::vector<ParamMap> points(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t rest = i;
        for (std::size_t k = grid.size(); k-- > 0;) {
            const auto& axis = grid[k];
            points[i][axis.name] = axis.values[rest % axis.values.size()];
            rest /= axis.values.size();
        }
    }

    report.results.resize(count);
    auto run_point = [&](std::size_t i) {
        try {
            report.results[i] = check(id, points[i], cfg, tolerance);
        } catch (const std::exception& ex) {
            IdentityCheckResult& r = report.results[i];
            r.identity = info.id;
            for (const auto& [name, value] : points[i]) {
                ParamKind kind = ParamKind::Complex;
                for (const auto& s : info.schema)
                    if (s.name == name) kind = s.kind;
                r.params.push_back({name, kind, value});
            }
            const double nan = std::numeric_limits<double>::quiet_NaN();
            r.lhs = r.rhs = {nan, nan};
            r.abs_residual = r.rel_residual = nan;
            r.tolerance = tolerance.value_or(info.tolerance);
            r.status = Status::fail;
            r.diagnostics.error = ex.what();
        }
    };

    const std::size_t workers = std::min<std::size_t>(std::max(1, jobs), count);
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) run_point(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) run_point(i);
            });
        for (auto& th : pool) th.join();
    }

    for (const auto& r : report.results) {
        if (r.status == Status::fail) ++report.failures;
        if (r.status == Status::degraded) ++report.degraded;
        if (std::isfinite(r.abs_residual)) report.max_abs_residual = std::max(report.max_abs_residual, r.abs_residual);
        if (std::isfinite(r.rel_residual)) report.max_rel_residual = std::max(report.max_rel_residual, r.rel_residual);
    }
    return report;
}

}  // namespace ramanujan
