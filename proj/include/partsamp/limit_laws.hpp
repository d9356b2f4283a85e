#ifndef PARTSAMP_LIMIT_LAWS_HPP
#define PARTSAMP_LIMIT_LAWS_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace partsamp {

/* ---------------------------------------------------------------------
   Limiting distributions of the selected part size (Theorems 1-3) and of
   its multiplicity.  All CDFs clamp into [0,1] for any finite input.
   --------------------------------------------------------------------- */

// size law, procedure 1: P(pi*sigma/sqrt(6n) <= t) -> 1 - e^{-t}
double cdf_sigma1(double t);

// size law, procedure 2: Debye CDF (6/pi^2) int_0^t u/(e^u - 1) du,
// absolute error <= 1e-12
double cdf_sigma2(double t);

// size law, procedure 3: P(2 log sigma / log n <= t) -> t on (0,1)
double cdf_sigma3_normalized(double t);

// multiplicity laws: 1/(m(m+1)); 6(2m+1)/(pi^2 m (m+1)^2); identity CDF
double pmf_mult1(std::uint64_t m);
double pmf_mult2(std::uint64_t m);
double cdf_mult3_normalized(double t);

enum class LawKind {
    Sigma1Exponential,
    Sigma2Debye,
    Sigma3LogUniform,
    Mult1ZipfLike,
    Mult2DebyeType,
    Mult3LogUniform,
};

struct LimitLaw {
    LawKind kind;
    double cdf(double t) const;
    double pmf(std::uint64_t m) const;  // only for the multiplicity laws
};

/* ---------------------------------------------------------------------
   Empirical step CDF and Kolmogorov-Smirnov sup distance.
   --------------------------------------------------------------------- */

class EmpiricalCdf {
public:
    explicit EmpiricalCdf(std::vector<double> samples);  // sorts, merges ties

    double operator()(double x) const;      // right-continuous F-hat(x)
    std::size_t size() const { return total_; }

    struct Jump {
        double x;
        double before;  // F-hat(x-)
        double after;   // F-hat(x)
    };
    const std::vector<Jump>& jumps() const { return jumps_; }

private:
    std::vector<Jump> jumps_;
    std::size_t total_ = 0;
};

// sup over all jump points, both one-sided limits
double ks_distance(const EmpiricalCdf& emp, const std::function<double(double)>& cdf);

// same, with evaluation restricted to x in [lo, hi] (endpoints included)
double ks_distance_windowed(const EmpiricalCdf& emp, const std::function<double(double)>& cdf,
                            double lo, double hi);

}  // namespace partsamp

#endif
