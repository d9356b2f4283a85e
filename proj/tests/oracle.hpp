#ifndef PARTSAMP_TESTS_ORACLE_HPP
#define PARTSAMP_TESTS_ORACLE_HPP

// Test-side oracles, independent of the implementation paths they check:
// brute-force enumeration averages and adaptive quadrature.

#include <cmath>
#include <cstdint>
#include <functional>

#include "partsamp/exact_stats.hpp"
#include "partsamp/partition.hpp"

namespace partsamp::oracle {

// exact E(Y_{s,n}/Y_n), E(X_{s,n}/n), E(Z_{s,n}/Z_n) by full enumeration
struct EnumerationAverages {
    Rational sigma1;
    Rational sigma2;
    Rational sigma3;
};

inline EnumerationAverages enumeration_cdfs(std::uint64_t n, double s) {
    EnumerationAverages avg{Rational(0), Rational(0), Rational(0)};
    std::uint64_t count = 0;
    for_each_partition(n, [&](const Partition& lam) {
        ++count;
        const PartitionStats st = stats_of(lam, std::max(s, 1.0));
        const bool none = s < 1.0;
        avg.sigma1 += none ? Rational(0)
                           : Rational(BigCount(st.distinct_le_s), BigCount(st.distinct_sizes));
        avg.sigma2 += none ? Rational(0) : Rational(BigCount(st.weight_le_s), BigCount(st.n));
        avg.sigma3 += none ? Rational(0)
                           : Rational(BigCount(st.parts_le_s), BigCount(st.total_parts));
    });
    const Rational inv(1, count);
    avg.sigma1 = avg.sigma1 * inv;
    avg.sigma2 = avg.sigma2 * inv;
    avg.sigma3 = avg.sigma3 * inv;
    avg.sigma1.canonicalize();
    avg.sigma2.canonicalize();
    avg.sigma3.canonicalize();
    return avg;
}

// adaptive Simpson quadrature (the Debye-series cross-check)
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-13, int depth = 40) {
    auto simpson = [&](double lo, double hi) {
        return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(0.5 * (lo + hi)) + f(hi));
    };
    std::function<double(double, double, double, int)> rec =
        [&](double lo, double hi, double whole, int d) -> double {
        const double mid = 0.5 * (lo + hi);
        const double left = simpson(lo, mid), right = simpson(mid, hi);
        if (d <= 0 || std::abs(left + right - whole) < 15.0 * tol) return left + right;
        return rec(lo, mid, left, d - 1) + rec(mid, hi, right, d - 1);
    };
    return rec(a, b, simpson(a, b), depth);
}

inline double debye_cdf_quadrature(double t) {
    if (t <= 0.0) return 0.0;
    const double pi = 3.14159265358979323846;
    auto integrand = [](double u) { return u == 0.0 ? 1.0 : u / std::expm1(u); };
    return 6.0 / (pi * pi) * adaptive_simpson(integrand, 0.0, t);
}

}  // namespace partsamp::oracle

#endif
