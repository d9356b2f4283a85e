#include "partsamp/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace partsamp {

namespace {

constexpr double kPiSqOver6 = 1.6449340668482264365;
constexpr double kSixOverPiSq = 0.60792710185402662866;

// int_0^t u/(e^u - 1) du for 0 <= t < ~1.5 via the Bernoulli expansion
// t - t^2/4 + sum_k B_{2k} t^{2k+1} / ((2k+1)(2k)!); radius 2*pi.
double debye_integral_series(double t) {
    static constexpr double coeff[] = {
        2.7777777777777777778e-2,   // t^3
        -2.7777777777777777778e-4,  // t^5
        4.7241118669690098262e-6,   // t^7
        -9.1857730746619635509e-8,  // t^9
        1.8978869988970999072e-9,   // t^11
        -4.0647616451442255268e-11, // t^13
        8.9216910204564525552e-13,  // t^15
        -1.9939295860721075687e-14, // t^17
        4.5189800296199181917e-16,  // t^19
        -1.0356517612181247014e-17, // t^21
        2.3952186210261867457e-19,  // t^23
        -5.5817858743250093363e-21, // t^25
    };
    const double t2 = t * t;
    double acc = 0.0, pw = t * t2;  // t^3
    for (double c : coeff) {
        acc += c * pw;
        pw *= t2;
    }
    return t - 0.25 * t2 + acc;
}

// int_0^t u/(e^u-1) du = pi^2/6 - sum_{k>=1} e^{-kt} (t/k + 1/k^2); fast
// for t >= ~1.
double debye_integral_expsum(double t) {
    double tail = 0.0;
    for (int k = 1; k <= 64; ++k) {
        const double term = std::exp(-k * t) * (t / k + 1.0 / (static_cast<double>(k) * k));
        tail += term;
        if (term < 1e-18) break;
    }
    return kPiSqOver6 - tail;
}

}  // namespace

double cdf_sigma1(double t) {
    if (t <= 0.0) return 0.0;
    return -std::expm1(-t);
}

double cdf_sigma2(double t) {
    if (t <= 0.0) return 0.0;
    const double raw = (t < 1.0) ? debye_integral_series(t) : debye_integral_expsum(t);
    return std::clamp(kSixOverPiSq * raw, 0.0, 1.0);
}

double cdf_sigma3_normalized(double t) { return std::clamp(t, 0.0, 1.0); }

double pmf_mult1(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("pmf_mult1: m must be >= 1");
    const double md = static_cast<double>(m);
    return 1.0 / (md * (md + 1.0));
}

double pmf_mult2(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("pmf_mult2: m must be >= 1");
    const double md = static_cast<double>(m);
    return kSixOverPiSq * (2.0 * md + 1.0) / (md * (md + 1.0) * (md + 1.0));
}

double cdf_mult3_normalized(double t) { return std::clamp(t, 0.0, 1.0); }

double LimitLaw::cdf(double t) const {
    switch (kind) {
        case LawKind::Sigma1Exponential: return cdf_sigma1(t);
        case LawKind::Sigma2Debye: return cdf_sigma2(t);
        case LawKind::Sigma3LogUniform: return cdf_sigma3_normalized(t);
        case LawKind::Mult3LogUniform: return cdf_mult3_normalized(t);
        default: throw std::logic_error("LimitLaw::cdf: law has no continuous CDF");
    }
}

double LimitLaw::pmf(std::uint64_t m) const {
    switch (kind) {
        case LawKind::Mult1ZipfLike: return pmf_mult1(m);
        case LawKind::Mult2DebyeType: return pmf_mult2(m);
        default: throw std::logic_error("LimitLaw::pmf: law has no PMF");
    }
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("EmpiricalCdf: no samples");
    std::sort(samples.begin(), samples.end());
    total_ = samples.size();
    const double inv = 1.0 / static_cast<double>(total_);
    std::size_t i = 0;
    while (i < samples.size()) {
        std::size_t j = i;
        while (j < samples.size() && samples[j] == samples[i]) ++j;
        jumps_.push_back({samples[i], static_cast<double>(i) * inv, static_cast<double>(j) * inv});
        i = j;
    }
}

double EmpiricalCdf::operator()(double x) const {
    auto it = std::upper_bound(jumps_.begin(), jumps_.end(), x,
                               [](double v, const Jump& jp) { return v < jp.x; });
    if (it == jumps_.begin()) return 0.0;
    return std::prev(it)->after;
}

double ks_distance(const EmpiricalCdf& emp, const std::function<double(double)>& cdf) {
    double sup = 0.0;
    for (const auto& jp : emp.jumps()) {
        const double f = cdf(jp.x);
        sup = std::max(sup, std::abs(jp.after - f));
        sup = std::max(sup, std::abs(jp.before - f));
    }
    return sup;
}

double ks_distance_windowed(const EmpiricalCdf& emp, const std::function<double(double)>& cdf,
                            double lo, double hi) {
    double sup = std::max(std::abs(emp(lo) - cdf(lo)), std::abs(emp(hi) - cdf(hi)));
    for (const auto& jp : emp.jumps()) {
        if (jp.x < lo || jp.x > hi) continue;
        const double f = cdf(jp.x);
        sup = std::max(sup, std::abs(jp.after - f));
        sup = std::max(sup, std::abs(jp.before - f));
    }
    return sup;
}

}  // namespace partsamp
