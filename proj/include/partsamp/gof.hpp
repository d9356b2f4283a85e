#ifndef PARTSAMP_GOF_HPP
#define PARTSAMP_GOF_HPP

#include <cstdint>
#include <vector>

namespace partsamp {

// regularized upper incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a)
double regularized_gamma_q(double a, double x);

// P(Chi2_dof > statistic)
double chi_square_pvalue(double statistic, double dof);

struct ChiSquareResult {
    double statistic = 0.0;
    double pvalue = 1.0;
    std::size_t cells = 0;
};

// observed counts against expected probabilities (same length, probs sum to 1)
ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& expected_probs);

}  // namespace partsamp

#endif
