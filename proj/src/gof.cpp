#include "partsamp/gof.hpp"

#include <cmath>
#include <stdexcept>

namespace partsamp {

namespace {

// lower regularized P(a,x) by series, for x < a + 1
double gamma_p_series(double a, double x) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// upper regularized Q(a,x) by continued fraction, for x >= a + 1
double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("regularized_gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

double chi_square_pvalue(double statistic, double dof) {
    return regularized_gamma_q(dof / 2.0, statistic / 2.0);
}

ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& expected_probs) {
    if (observed.size() != expected_probs.size() || observed.size() < 2)
        throw std::invalid_argument("chi_square_test: mismatched or trivial inputs");
    std::uint64_t total = 0;
    for (auto c : observed) total += c;
    if (total == 0) throw std::invalid_argument("chi_square_test: no observations");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double expect = expected_probs[i] * static_cast<double>(total);
        if (expect <= 0.0) throw std::invalid_argument("chi_square_test: zero expected cell");
        const double diff = static_cast<double>(observed[i]) - expect;
        stat += diff * diff / expect;
    }
    ChiSquareResult res;
    res.statistic = stat;
    res.cells = observed.size();
    res.pvalue = chi_square_pvalue(stat, static_cast<double>(observed.size() - 1));
    return res;
}

}  // namespace partsamp
