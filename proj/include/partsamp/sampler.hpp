#ifndef PARTSAMP_SAMPLER_HPP
#define PARTSAMP_SAMPLER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "partsamp/partition.hpp"
#include "partsamp/rng.hpp"

namespace partsamp {

enum class SampleMethod { FristedtRejection, ExactUnranking, Auto };

// Auto picks unranking for n <= this, rejection above
inline constexpr std::uint64_t kAutoUnrankingLimit = 1000;
// unranking refuses n above this (quadratic bigint table)
inline constexpr std::uint64_t kMaxUnrankingN = 2000;

struct SamplerConfig {
    std::uint64_t n = 1;
    double q = 0.0;  // geometric base in (0,1); <= 0 selects e^{-pi/sqrt(6n)}
    SampleMethod method = SampleMethod::Auto;
    std::uint64_t max_rejections = 1'000'000;

    double effective_q() const;
    SampleMethod effective_method() const {
        if (method != SampleMethod::Auto) return method;
        return n <= kAutoUnrankingLimit ? SampleMethod::ExactUnranking
                                        : SampleMethod::FristedtRejection;
    }
};

enum class ProcedureId { P1Distinct = 1, P2Area = 2, P3UniformPart = 3 };

const char* procedure_name(ProcedureId proc);

struct RejectionStats {
    std::uint64_t trials = 0;
    std::uint64_t accepts = 0;
};

class SamplerError : public std::runtime_error {
public:
    SamplerError(std::uint64_t trials_used, const std::string& what)
        : std::runtime_error(what), trials_used(trials_used) {}
    std::uint64_t trials_used;
};

/* ---------------------------------------------------------------------
   Exact uniform sampling over Lambda(n).

   Rejection backend: independent geometric multiplicities gamma_j with
   Pr(gamma_j = k) = (1-q^j) q^{jk}, conditioned on sum j gamma_j = n.
   The trial draws gamma_j for j >= 2 (inversion for the dense low-j band,
   cumulative-hazard skipping for the sparse tail, early abort once the
   running sum exceeds n) and then accepts with probability q^r where
   r = n - sum is the forced value of gamma_1.  That acceptance equals
   Pr(gamma_1 = r)/max_k Pr(gamma_1 = k), so the accepted output follows
   the exact conditional law, i.e. is exactly uniform, while the trial
   count drops by the factor 1/(1-q) versus drawing gamma_1 directly.

   Unranking backend: descend over largest part first, weighting each
   branch by bounded-part counts; rejection-free.
   --------------------------------------------------------------------- */

class FristedtSampler {
public:
    FristedtSampler(std::uint64_t n, double q);

    // one uniform partition; trial count accumulates into stats
    Partition sample(Rng& rng, std::uint64_t max_rejections, RejectionStats& stats) const;

    std::uint64_t n() const { return n_; }
    double q() const { return q_; }

private:
    bool trial(Rng& rng, std::vector<std::pair<std::uint64_t, std::uint64_t>>& parts) const;

    std::uint64_t n_;
    double q_;
    double log_q_;
    std::uint64_t dense_limit_;  // per-j inversion for 2 <= j <= dense_limit_
    std::uint64_t cap_;          // gamma_j = 0 surely for j > cap_ (uniform granularity)
    std::vector<double> hazard_cum_;  // cumulative -log(1-q^j), j in (dense_limit_, cap_]
};

class UnrankingSampler {
public:
    explicit UnrankingSampler(std::uint64_t n);
    Partition sample(Rng& rng) const;
    std::uint64_t n() const { return table_->n(); }

private:
    std::shared_ptr<const BoundedCountTable> table_;
};

// Owns whichever backend the config selects; shareable across threads.
class UniformPartitionSampler {
public:
    explicit UniformPartitionSampler(const SamplerConfig& cfg);
    Partition sample(Rng& rng, RejectionStats& stats) const;
    const SamplerConfig& config() const { return cfg_; }
    const char* method_name() const;

private:
    SamplerConfig cfg_;
    std::optional<FristedtSampler> rejection_;
    std::optional<UnrankingSampler> unranking_;
};

/* ---------------------------------------------------------------------
   Part selection (the three procedures) and experiment driver.
   --------------------------------------------------------------------- */

struct SelectedPart {
    std::uint64_t size = 0;
    std::uint64_t mult = 0;
};

// P1: uniform over distinct sizes; P2: size j with probability j m_j / n;
// P3: size j with probability m_j / Z_n.  Integer draws, so the conditional
// laws are exact.
SelectedPart select_part(const Partition& lam, ProcedureId proc, Rng& rng);

struct SampleSummary {
    std::uint64_t n = 0;
    ProcedureId procedure = ProcedureId::P1Distinct;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string method;
    double q = 0.0;
    std::map<std::uint64_t, std::uint64_t> part_sizes;      // sigma -> count
    std::map<std::uint64_t, std::uint64_t> multiplicities;  // mu -> count
    RejectionStats rejection;

    std::vector<double> size_samples_sorted() const;  // expanded from counts
    std::vector<double> mult_samples_sorted() const;
};

void to_json(nlohmann::json& j, const SampleSummary& summary);

// N independent (partition, part) draws.  Sample index i uses the rng
// stream (seed, i), so the output is identical for any worker count.
// workers = 0 picks PARTSAMP_WORKERS or hardware concurrency.
SampleSummary run_experiment(const SamplerConfig& cfg, ProcedureId proc, std::uint64_t samples,
                             std::uint64_t seed, unsigned workers = 0);

// empirical frequency of |pi Y_n / sqrt(6n) - 1| > eps over N uniform draws
double concentration_diagnostic(std::uint64_t n, std::uint64_t samples, double eps,
                                std::uint64_t seed, unsigned workers = 0);

unsigned default_workers();

}  // namespace partsamp

#endif
