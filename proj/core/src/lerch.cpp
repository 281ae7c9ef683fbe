#include "ramanujan/numerics.hpp"

#include <limits>

namespace ramanujan {

cplx periodic_zeta_tail(double a, cplx p, cplx q, const PrecisionConfig& cfg) {
    a -= std::floor(a);
    if (a == 0.0) return hurwitz_zeta(p, q, cfg);
    if (q.imag() == 0.0 && q.real() <= 0.0)
        throw DomainError("periodic_zeta_tail: q must lie off the closed negative real axis");

    const cplx z = std::exp(2.0 * pi * I * a);
    const double radius = 2.0 * pi * std::min(a, 1.0 - a);

    // Direct terms until radius*|M+q| is large enough for the expansion in 1/(M+q).
    const double need = (40.0 + std::abs(p)) / radius;
    long m = 0;
    while (std::abs(static_cast<double>(m) + q) < need) {
        ++m;
        if (m > cfg.max_series_terms)
            throw ConvergenceError("periodic_zeta_tail: shift exceeds max_series_terms", 0.0, 0.0);
    }
    ComplexSum sum;
    cplx zk = 1.0;
    for (long k = 0; k < m; ++k) {
        sum += zk * std::exp(-p * std::log(static_cast<double>(k) + q));
        // recompute the phase periodically to stop rounding drift
        zk = (k + 1) % 64 == 0 ? std::exp(2.0 * pi * I * std::fmod(a * (k + 1), 1.0)) : zk * z;
    }

    // sum_{k>=0} z^k (k+Q)^{-p} = sum_j b_j (-1)^j (p)_j Q^{-p-j}, where 1/(1 - z e^t) = sum b_j t^j.
    const cplx big_q = static_cast<double>(m) + q;
    const cplx phase = std::exp(2.0 * pi * I * std::fmod(a * static_cast<double>(m), 1.0));
    const cplx inv_q = 1.0 / big_q;
    std::vector<cplx> b{1.0 / (1.0 - z)};
    std::vector<double> inv_fact{1.0};
    cplx poch = 1.0;
    cplx qpow = std::exp(-p * std::log(big_q));
    ComplexSum tail;
    // b_j vanishes at every other j when a = 1/2, so growth is judged on the larger of
    // two consecutive terms
    double prev_pair = std::numeric_limits<double>::infinity();
    double last = 0.0;
    for (int j = 0; j < 400; ++j) {
        if (j > 0) {
            inv_fact.push_back(inv_fact.back() / j);
            ComplexSum acc;
            for (int i = 0; i < j; ++i) acc += b[i] * inv_fact[j - i];
            b.push_back(z * acc.value() / (1.0 - z));
        }
        const cplx term = (j % 2 == 0 ? 1.0 : -1.0) * b[j] * poch * qpow;
        const double size = std::abs(term);
        const double pair = std::max(size, last);
        if (pair > prev_pair && j > 2) break;
        tail += term;
        if (j > 0) prev_pair = pair;
        last = size;
        if (pair <= 1e-18 * std::abs(tail.value())) break;
        poch *= p + static_cast<double>(j);
        qpow *= inv_q;
    }
    sum += phase * tail.value();
    return sum.value();
}

}  // namespace ramanujan
