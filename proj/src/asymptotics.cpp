#include "partsamp/asymptotics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "partsamp/limit_laws.hpp"

namespace partsamp {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kZeta2 = 1.6449340668482264365;  // pi^2/6
constexpr double kLog2Pi = 1.8378770664093454836;

std::size_t term_cap(double d) {
    return static_cast<std::size_t>(std::ceil(60.0 / d)) + 1;
}

void check_d(double d, const char* who) {
    if (!(d > 0.0)) throw std::invalid_argument(std::string(who) + ": d must be > 0");
}

}  // namespace

double a_of(double d) {
    check_d(d, "a_of");
    double acc = 0.0;
    const std::size_t cap = term_cap(d);
    for (std::size_t k = 1; k <= cap; ++k) {
        const double e = std::exp(-static_cast<double>(k) * d);
        const double term = static_cast<double>(k) * e / (1.0 - e);
        acc += term;
        if (term < 1e-20 * acc) break;
    }
    return acc;
}

double b_of(double d) {
    check_d(d, "b_of");
    double acc = 0.0;
    const std::size_t cap = term_cap(d);
    for (std::size_t k = 1; k <= cap; ++k) {
        const double e = std::exp(-static_cast<double>(k) * d);
        const double om = 1.0 - e;
        const double term = static_cast<double>(k) * static_cast<double>(k) * e / (om * om);
        acc += term;
        if (term < 1e-20 * acc) break;
    }
    return acc;
}

double log_g_at(double d) {
    check_d(d, "log_g_at");
    double acc = 0.0;
    const std::size_t cap = term_cap(d);
    for (std::size_t k = 1; k <= cap; ++k) {
        const double e = std::exp(-static_cast<double>(k) * d);
        const double term = -std::log1p(-e);
        acc += term;
        if (term < 1e-20 * acc) break;
    }
    return acc;
}

double meinardus_log_g(double d) {
    check_d(d, "meinardus_log_g");
    return kZeta2 / d + 0.5 * std::log(d) - 0.5 * kLog2Pi;
}

SaddleSolution solve_saddle(std::uint64_t n, double tol) {
    if (n < 1) throw std::invalid_argument("solve_saddle: n must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("solve_saddle: tol must be > 0");
    const double target = static_cast<double>(n);
    const double d0 = kPi / std::sqrt(6.0 * target);

    // a is strictly decreasing in d; widen until bracketed
    double lo = d0 / 2.0, hi = d0 * 2.0;
    int widen = 0;
    while (a_of(lo) < target) {
        lo /= 2.0;
        if (++widen > 200) throw std::runtime_error("solve_saddle: bracketing failed (lo)");
    }
    while (a_of(hi) > target) {
        hi *= 2.0;
        if (++widen > 200) throw std::runtime_error("solve_saddle: bracketing failed (hi)");
    }

    double d = 0.5 * (lo + hi);
    for (int it = 0; it < 80; ++it) {
        d = 0.5 * (lo + hi);
        if (a_of(d) > target) lo = d;
        else hi = d;
        if ((hi - lo) < 1e-14 * d) break;
    }
    // Newton polish: da/dd = -b(d)
    for (int it = 0; it < 4; ++it) {
        const double resid = a_of(d) - target;
        const double step = resid / b_of(d);
        const double next = d + step;
        if (next > 0.0) d = next;
    }

    SaddleSolution sol;
    sol.n = n;
    sol.d_n = d;
    sol.a_val = a_of(d);
    sol.b_val = b_of(d);
    sol.log_g = log_g_at(d);
    sol.p_estimate_log = target * d + sol.log_g - 0.5 * std::log(2.0 * kPi * sol.b_val);
    if (std::abs(sol.a_val - target) > tol * target) {
        throw std::runtime_error("solve_saddle: residual " + std::to_string(sol.a_val - target) +
                                 " above tolerance in bracket [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
    }
    return sol;
}

double hayman_p_estimate_log(std::uint64_t n) {
    if (n < 10) throw std::invalid_argument("hayman_p_estimate_log: n must be >= 10");
    return solve_saddle(n).p_estimate_log;
}

double hardy_ramanujan_log(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("hardy_ramanujan_log: n must be >= 1");
    const double nd = static_cast<double>(n);
    return kPi * std::sqrt(2.0 * nd / 3.0) - std::log(4.0 * nd * std::sqrt(3.0));
}

double hardy_ramanujan(std::uint64_t n) { return std::exp(hardy_ramanujan_log(n)); }

double expectation_X_asymptotic(std::uint64_t n, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("expectation_X_asymptotic: t must be > 0");
    // (6n/pi^2) * int_0^t u/(e^u-1) du = n * DebyeCDF(t)
    return static_cast<double>(n) * cdf_sigma2(t);
}

/* ---------------------------------------------------------------------
   |g| on the circle of radius e^{-d}:
   Re log g = -(1/2) sum_k log(1 - 2 e^{-kd} cos(k theta) + e^{-2kd})
   --------------------------------------------------------------------- */

namespace {

double re_log_g_on_circle(double d, double theta) {
    double acc = 0.0;
    const std::size_t cap = term_cap(d);
    for (std::size_t k = 1; k <= cap; ++k) {
        const double e = std::exp(-static_cast<double>(k) * d);
        const double term =
            -0.5 * std::log1p(e * (e - 2.0 * std::cos(static_cast<double>(k) * theta)));
        acc += term;
        if (e < 1e-20) break;
    }
    return acc;
}

}  // namespace

std::vector<LocalityRow> locality_diagnostic(std::uint64_t n, double omega,
                                             std::size_t inside_points) {
    if (n < 100) throw std::invalid_argument("locality_diagnostic: n must be >= 100");
    if (!(omega > 1.0)) throw std::invalid_argument("locality_diagnostic: omega must be > 1");
    const SaddleSolution sol = solve_saddle(n);
    const double delta = std::pow(sol.d_n, 4.0 / 3.0) / omega;
    const double base = log_g_at(sol.d_n);

    std::vector<LocalityRow> rows;
    auto probe = [&](double theta, bool inside) {
        LocalityRow row;
        row.theta = theta;
        row.measured_ratio = std::exp(re_log_g_on_circle(sol.d_n, theta) - base);
        row.gaussian_prediction = std::exp(-0.5 * theta * theta * sol.b_val);
        row.inside = inside;
        rows.push_back(row);
    };

    for (std::size_t i = 0; i <= inside_points; ++i)
        probe(delta * static_cast<double>(i) / static_cast<double>(inside_points), true);
    for (double mult : {2.0, 8.0, 32.0}) {
        const double theta = delta * mult;
        if (theta < kPi) probe(theta, false);
    }
    probe(kPi / 2.0, false);
    probe(kPi, false);
    return rows;
}

}  // namespace partsamp
