#ifndef PARTSAMP_EXACT_STATS_HPP
#define PARTSAMP_EXACT_STATS_HPP

#include <cstdint>

#include "partsamp/partition.hpp"

namespace partsamp {

// The part-size statistics of a single partition at threshold s.  Only
// floor(s) matters anywhere (all definitions sum over integer sizes j <= s,
// inclusive); for s >= n the *_le_s fields clamp to their totals.
struct PartitionStats {
    std::uint64_t n = 0;
    double s = 1.0;
    std::uint64_t distinct_sizes = 0;  // Y_n
    std::uint64_t total_parts = 0;     // Z_n
    std::uint64_t distinct_le_s = 0;   // Y_{s,n}
    std::uint64_t parts_le_s = 0;      // Z_{s,n}
    std::uint64_t weight_le_s = 0;     // X_{s,n}
};

PartitionStats stats_of(const Partition& lam, double s);

// An exact probability.  GMP rationals never overflow, so the exact value
// is always retained; value() is the double projection.
struct ExactProbability {
    Rational exact;
    double value() const { return exact.get_d(); }
};

/* ---------------------------------------------------------------------
   Coefficient extraction.

   [x^n] g(x) h_s(x) = p(n) E(X_{s,n}) with h_s(x) = sum_{j<=s} j x^j/(1-x^j).
   The coefficient of x^m in h_s is the divisor sum over j | m, j <= s, so
   the product coefficient is an O(n log n) sieve plus n bigint mul-adds.
   --------------------------------------------------------------------- */

BigCount coeff_g_hs(const PartitionTable& tab, std::uint64_t n, double s);

// P(sigma_{n,2} <= s) = E(X_{s,n})/n, exact
ExactProbability sigma2_cdf_exact(const PartitionTable& tab, std::uint64_t n, double s);

// E(Y_n) = sum_{j=1..n} p(n-j)/p(n), and friends
Rational expected_Y(const PartitionTable& tab, std::uint64_t n);
Rational expected_Z(const PartitionTable& tab, std::uint64_t n);
Rational expected_Ysn(const PartitionTable& tab, std::uint64_t n, double s);

/* ---------------------------------------------------------------------
   Exact CDFs of the biased selections that have no closed coefficient
   form: joint-distribution DPs over (Y_{s,n}, Y_n) resp. (Z_{s,n}, Z_n).
   Both carry explicit n limits; the state counts fit std::uint64_t well
   inside those limits (p(300) < 2^63), so the DPs run on machine words
   and only the final expectation is assembled as a rational.
   --------------------------------------------------------------------- */

inline constexpr std::uint64_t kSigma1ExactLimit = 300;
inline constexpr std::uint64_t kSigma3ExactLimit = 60;

// P(sigma_{n,1} <= s) = E(Y_{s,n}/Y_n), exact; n <= kSigma1ExactLimit
ExactProbability sigma1_cdf_exact(const PartitionTable& tab, std::uint64_t n, double s);

// P(sigma_{n,3} <= s) = E(Z_{s,n}/Z_n), exact; n <= kSigma3ExactLimit
ExactProbability sigma3_cdf_exact(const PartitionTable& tab, std::uint64_t n, double s);

}  // namespace partsamp

#endif
