#include "partsamp/exact_stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace partsamp {

namespace {

// floor(s) clamped to [0, n]
std::uint64_t threshold(std::uint64_t n, double s) {
    if (s < 1.0) return 0;
    double f = std::floor(s);
    if (f >= static_cast<double>(n)) return n;
    return static_cast<std::uint64_t>(f);
}

// largest y with y(y+1)/2 <= n: a partition of n has at most y distinct sizes
std::uint64_t max_distinct(std::uint64_t n) {
    std::uint64_t y = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
    while ((y + 1) * (y + 2) / 2 <= n) ++y;
    while (y > 0 && y * (y + 1) / 2 > n) --y;
    return y;
}

}  // namespace

PartitionStats stats_of(const Partition& lam, double s) {
    if (s < 1.0) throw std::invalid_argument("stats_of: s must be >= 1");
    PartitionStats st;
    st.n = lam.n;
    st.s = s;
    const std::uint64_t cut = threshold(lam.n, s);
    for (const auto& [j, m] : lam.mults) {
        st.distinct_sizes += 1;
        st.total_parts += m;
        if (j <= cut) {
            st.distinct_le_s += 1;
            st.parts_le_s += m;
            st.weight_le_s += j * m;
        }
    }
    return st;
}

BigCount coeff_g_hs(const PartitionTable& tab, std::uint64_t n, double s) {
    const std::uint64_t cut = threshold(n, s);
    // h[m] = sum of divisors j of m with j <= cut
    std::vector<std::uint64_t> h(n + 1, 0);
    for (std::uint64_t j = 1; j <= cut; ++j)
        for (std::uint64_t m = j; m <= n; m += j) h[m] += j;
    BigCount acc = 0;
    for (std::uint64_t m = 1; m <= n; ++m) {
        if (h[m] == 0) continue;
        mpz_addmul_ui(acc.get_mpz_t(), tab.p(n - m).get_mpz_t(), h[m]);
    }
    return acc;
}

ExactProbability sigma2_cdf_exact(const PartitionTable& tab, std::uint64_t n, double s) {
    Rational r(coeff_g_hs(tab, n, s), BigCount(n) * tab.p(n));
    r.canonicalize();
    return {r};
}

Rational expected_Y(const PartitionTable& tab, std::uint64_t n) {
    return expected_Ysn(tab, n, static_cast<double>(n));
}

Rational expected_Ysn(const PartitionTable& tab, std::uint64_t n, double s) {
    const std::uint64_t cut = threshold(n, s);
    BigCount acc = 0;
    for (std::uint64_t j = 1; j <= cut; ++j) acc += tab.p(n - j);
    Rational r(acc, tab.p(n));
    r.canonicalize();
    return r;
}

Rational expected_Z(const PartitionTable& tab, std::uint64_t n) {
    // partitions with at least k parts of size j <-> partitions of n - jk
    BigCount acc = 0;
    for (std::uint64_t j = 1; j <= n; ++j)
        for (std::uint64_t k = 1; j * k <= n; ++k) acc += tab.p(n - j * k);
    Rational r(acc, tab.p(n));
    r.canonicalize();
    return r;
}

/* ---------------------------------------------------------------------
   sigma1: DP over part sizes j = 1..n with the distinct-size marker
   factor 1 + u^{[j<=s]} v x^j/(1-x^j).  dp[m][ys][y] counts partitions
   of m with y distinct sizes, ys of them <= s.
   --------------------------------------------------------------------- */

ExactProbability sigma1_cdf_exact(const PartitionTable& tab, std::uint64_t n, double s) {
    if (n < 1) throw std::invalid_argument("sigma1_cdf_exact: n must be >= 1");
    if (n > kSigma1ExactLimit)
        throw std::invalid_argument("sigma1_cdf_exact: n=" + std::to_string(n) +
                                    " exceeds the exact-DP limit " +
                                    std::to_string(kSigma1ExactLimit) +
                                    "; use the Monte Carlo path");
    const std::uint64_t cut = threshold(n, s);
    const std::uint64_t Y = max_distinct(n);
    const std::size_t W = Y + 1;
    auto at = [&](std::uint64_t m, std::uint64_t ys, std::uint64_t y) -> std::size_t {
        return (m * W + ys) * W + y;
    };
    std::vector<std::uint64_t> dp((n + 1) * W * W, 0);
    dp[at(0, 0, 0)] = 1;
    std::vector<std::uint64_t> aux(n + 1);

    for (std::uint64_t j = 1; j <= n; ++j) {
        const std::uint64_t e = (j <= cut) ? 1 : 0;
        // descending marker order keeps source planes pre-j
        for (std::uint64_t ys = Y + 1; ys-- > e;) {
            for (std::uint64_t y = Y; y >= 1; --y) {
                if (ys > y) continue;
                const std::uint64_t sys = ys - e, sy = y - 1;
                if (sys > sy) continue;
                // aux[m] = sum_{c>=1} dp[m - c*j][sys][sy]
                std::fill(aux.begin(), aux.begin() + std::min<std::uint64_t>(j, n + 1), 0);
                bool any = false;
                for (std::uint64_t m = j; m <= n; ++m) {
                    aux[m] = dp[at(m - j, sys, sy)] + aux[m - j];
                    any |= aux[m] != 0;
                }
                if (!any) continue;
                for (std::uint64_t m = j; m <= n; ++m)
                    if (aux[m]) dp[at(m, ys, y)] += aux[m];
            }
        }
    }

    Rational acc(0);
    for (std::uint64_t y = 1; y <= Y; ++y)
        for (std::uint64_t ys = 0; ys <= y; ++ys) {
            const std::uint64_t w = dp[at(n, ys, y)];
            if (w == 0 || ys == 0) continue;
            Rational term(BigCount(w) * BigCount(ys), BigCount(y));
            term.canonicalize();
            acc += term;
        }
    Rational r = acc / Rational(tab.p(n));
    r.canonicalize();
    return {r};
}

/* ---------------------------------------------------------------------
   sigma3: DP over (Z_{s,n}, Z_n).  Complete-knapsack update: the forward
   pass over m lets dp[m-j] already contain parts equal to j, which is
   exactly the geometric factor 1/(1 - u^{[j<=s]} v x^j).
   --------------------------------------------------------------------- */

ExactProbability sigma3_cdf_exact(const PartitionTable& tab, std::uint64_t n, double s) {
    if (n < 1) throw std::invalid_argument("sigma3_cdf_exact: n must be >= 1");
    if (n > kSigma3ExactLimit)
        throw std::invalid_argument("sigma3_cdf_exact: n=" + std::to_string(n) +
                                    " exceeds the exact-DP limit " +
                                    std::to_string(kSigma3ExactLimit) +
                                    "; use the Monte Carlo path");
    const std::uint64_t cut = threshold(n, s);
    const std::size_t W = n + 1;
    auto at = [&](std::uint64_t m, std::uint64_t zs, std::uint64_t z) -> std::size_t {
        return (m * W + zs) * W + z;
    };
    std::vector<std::uint64_t> dp(W * W * W, 0);
    dp[at(0, 0, 0)] = 1;

    for (std::uint64_t j = 1; j <= n; ++j) {
        const std::uint64_t e = (j <= cut) ? 1 : 0;
        for (std::uint64_t m = j; m <= n; ++m)
            for (std::uint64_t z = 1; z <= m; ++z)
                for (std::uint64_t zs = e; zs <= z; ++zs) {
                    const std::uint64_t src = dp[at(m - j, zs - e, z - 1)];
                    if (src) dp[at(m, zs, z)] += src;
                }
    }

    Rational acc(0);
    for (std::uint64_t z = 1; z <= n; ++z)
        for (std::uint64_t zs = 1; zs <= z; ++zs) {
            const std::uint64_t w = dp[at(n, zs, z)];
            if (w == 0) continue;
            Rational term(BigCount(w) * BigCount(zs), BigCount(z));
            term.canonicalize();
            acc += term;
        }
    Rational r = acc / Rational(tab.p(n));
    r.canonicalize();
    return {r};
}

}  // namespace partsamp
