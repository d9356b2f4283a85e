#ifndef PARTSAMP_ASYMPTOTICS_HPP
#define PARTSAMP_ASYMPTOTICS_HPP

#include <cstdint>
#include <vector>

namespace partsamp {

/* ---------------------------------------------------------------------
   Saddle-point machinery for the partition generating function
   g(x) = prod (1-x^k)^{-1} on the positive axis x = e^{-d}:

     a(d) = sum_k k e^{-kd} / (1 - e^{-kd})        (= r g'(r)/g(r))
     b(d) = sum_k k^2 e^{-kd} / (1 - e^{-kd})^2    (= r d/dr a(r))

   All series truncate at relative term size 1e-20 with a hard cap of
   ceil(60/d) terms.
   --------------------------------------------------------------------- */

double a_of(double d);
double b_of(double d);

// log g(e^{-d}) = -sum_k log(1 - e^{-kd})
double log_g_at(double d);

// Meinardus small-d form: zeta(2)/d + (1/2) log d - (1/2) log 2pi
double meinardus_log_g(double d);

struct SaddleSolution {
    std::uint64_t n = 0;
    double d_n = 0.0;            // solution of a(d_n) = n
    double a_val = 0.0;          // a at the solution (residual check)
    double b_val = 0.0;
    double log_g = 0.0;
    double p_estimate_log = 0.0; // n d_n + log g - (1/2) log(2 pi b)
};

// bisection (a is strictly decreasing in d) plus Newton polish;
// |a_val - n| <= tol * n on return
SaddleSolution solve_saddle(std::uint64_t n, double tol = 1e-9);

// log of the coefficient estimate p(n) ~ e^{n d} g(e^{-d}) / sqrt(2 pi b)
double hayman_p_estimate_log(std::uint64_t n);

// (1/(4 n sqrt 3)) exp(pi sqrt(2n/3)); _log form never overflows
double hardy_ramanujan_log(std::uint64_t n);
double hardy_ramanujan(std::uint64_t n);

// E(X_{s,n}) ~ n * DebyeCDF(t) at s = t sqrt(6n)/pi
double expectation_X_asymptotic(std::uint64_t n, double t);

/* ---------------------------------------------------------------------
   Locality diagnostic: |g(e^{-d_n + i theta}) / g(e^{-d_n})| against the
   Gaussian e^{-theta^2 b / 2} inside |theta| <= delta_n = d_n^{4/3}/Omega,
   plus decay spot checks outside.  Output only; the proof constants are
   not asserted.
   --------------------------------------------------------------------- */

struct LocalityRow {
    double theta = 0.0;
    double measured_ratio = 0.0;
    double gaussian_prediction = 0.0;
    bool inside = true;  // |theta| <= delta_n
};

std::vector<LocalityRow> locality_diagnostic(std::uint64_t n, double omega = 10.0,
                                             std::size_t inside_points = 8);

}  // namespace partsamp

#endif
