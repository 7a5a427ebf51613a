#include "entrovar/maxvar.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace entrovar {

namespace {

// g(v) = f(v) - 2 + v * slope_log. log1p keeps both factors accurate as
// |v| -> 1, where f diverges.
double condition_residual(double v, double slope_log) {
    return v * (std::log1p(v) - std::log1p(-v) + slope_log) - 2.0;
}

// Illinois false position with a bisection fallback; the bracket shrinks to
// adjacent doubles, so the residual at the returned root is a few ulps.
double refine_root(double lo, double hi, double slope_log) {
    double glo = condition_residual(lo, slope_log);
    double ghi = condition_residual(hi, slope_log);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo < 0.0) == (ghi < 0.0)) {
        throw Error(ErrorKind::DomainError, "stationarity condition not bracketed");
    }
    int held_side = 0;
    for (int iter = 0; iter < 200 && std::nextafter(lo, hi) < hi; ++iter) {
        double x = (lo * ghi - hi * glo) / (ghi - glo);
        if (!(x > lo && x < hi)) x = lo + 0.5 * (hi - lo);
        const double gx = condition_residual(x, slope_log);
        if (gx == 0.0) return x;
        if ((gx < 0.0) == (glo < 0.0)) {
            lo = x;
            glo = gx;
            if (held_side == 1) ghi *= 0.5;
            held_side = 1;
        } else {
            hi = x;
            ghi = gx;
            if (held_side == -1) glo *= 0.5;
            held_side = -1;
        }
    }
    return std::abs(glo) <= std::abs(ghi) ? lo : hi;
}

constexpr double kBracketEdge = 1e-12;

} // namespace

double f_of_v(double v) {
    if (!(std::abs(v) < 1.0)) {
        throw Error(ErrorKind::DomainError, "f(v) requires |v| < 1, got " + std::to_string(v));
    }
    return v * (std::log1p(v) - std::log1p(-v));
}

MaxVarSolution solve_stationary(std::size_t m, std::size_t k) {
    if (m < 2) {
        throw Error(ErrorKind::DomainError, "support size must be at least 2");
    }
    if (k < 1 || k > m - 1) {
        throw Error(ErrorKind::DomainError,
                    "k must lie in [1, m-1], got k=" + std::to_string(k) +
                        " for m=" + std::to_string(m));
    }
    const double slope_log =
        std::log(static_cast<double>(m - k) / static_cast<double>(k));

    MaxVarSolution sol;
    sol.m = m;
    sol.k = k;
    sol.v_pos = refine_root(0.0, 1.0 - kBracketEdge, slope_log);
    sol.v_neg = refine_root(-1.0 + kBracketEdge, 0.0, slope_log);
    sol.v = std::abs(sol.v_pos) <= std::abs(sol.v_neg) ? sol.v_pos : sol.v_neg;
    sol.p0 = (1.0 + sol.v) / (2.0 * static_cast<double>(k));
    sol.q0 = (1.0 - sol.v) / (2.0 * static_cast<double>(m - k));
    sol.lambda0 = 1.0 / (sol.v * sol.v) - 1.0;
    return sol;
}

MaxVarSolution max_variance(std::size_t m) {
    if (m < 2) {
        throw Error(ErrorKind::DomainError, "support size must be at least 2");
    }
    static std::mutex cache_mutex;
    static std::unordered_map<std::size_t, MaxVarSolution> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        const auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    const MaxVarSolution sol = solve_stationary(m, 1);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(m, sol);
    return sol;
}

double approx_root(std::size_t m) {
    if (m < 2) {
        throw Error(ErrorKind::DomainError, "support size must be at least 2");
    }
    const double l = std::log(static_cast<double>(m - 1));
    return std::sqrt(l * l / 16.0 + 1.0) - l / 4.0;
}

double lambda0_max_asymptotic(std::size_t m) {
    if (m < 2) {
        throw Error(ErrorKind::DomainError, "support size must be at least 2");
    }
    const double l = std::log(static_cast<double>(m));
    return l * l / 4.0;
}

ProbabilityDistribution build_stationary_distribution(const MaxVarSolution& sol,
                                                      std::size_t outlier_index) {
    if (outlier_index >= sol.m) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "outlier index " + std::to_string(outlier_index) + " for m=" +
                        std::to_string(sol.m));
    }
    std::vector<double> probs(sol.m, sol.q0);
    for (std::size_t j = 0; j < sol.k; ++j) {
        probs[(outlier_index + j) % sol.m] = sol.p0;
    }
    return make_distribution(probs, false);
}

Eigen::MatrixXd hessian_at_max(std::size_t m) {
    const MaxVarSolution sol = max_variance(m);
    const double r = std::log(sol.p0 / sol.q0);
    const double off = -r * (2.0 * r - 1.0 / sol.p0);
    const auto n = static_cast<Eigen::Index>(m - 1);
    Eigen::MatrixXd h = Eigen::MatrixXd::Constant(n, n, off);
    h.diagonal().array() -= r / sol.q0;
    return h;
}

} // namespace entrovar
