#include "partsamp/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace partsamp {

namespace {

constexpr double kPi = 3.14159265358979323846;

// dense/skip crossover: per-j inversion while q^j >= e^{-1.2}
constexpr double kDenseHazardCut = 1.2;

}  // namespace

double SamplerConfig::effective_q() const {
    if (q > 0.0) {
        if (q >= 1.0) throw std::invalid_argument("SamplerConfig: q must be in (0,1)");
        return q;
    }
    return std::exp(-kPi / std::sqrt(6.0 * static_cast<double>(n)));
}

const char* procedure_name(ProcedureId proc) {
    switch (proc) {
        case ProcedureId::P1Distinct: return "P1-distinct";
        case ProcedureId::P2Area: return "P2-area";
        case ProcedureId::P3UniformPart: return "P3-uniform-part";
    }
    return "?";
}

/* ------------------------------ rejection ------------------------------ */

FristedtSampler::FristedtSampler(std::uint64_t n, double q) : n_(n), q_(q) {
    if (n < 1) throw std::invalid_argument("FristedtSampler: n must be >= 1");
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("FristedtSampler: q must be in (0,1)");
    log_q_ = std::log(q);
    const double neg_log_q = -log_q_;
    // gamma_j = floor(log U / (j log q)) can only be >= 1 while
    // j * (-log q) <= -log(min uniform)
    cap_ = std::min<std::uint64_t>(
        n, static_cast<std::uint64_t>(std::floor(-kMinLogUniform / neg_log_q)));
    dense_limit_ = std::min<std::uint64_t>(
        cap_, std::max<std::uint64_t>(
                  1, static_cast<std::uint64_t>(std::ceil(kDenseHazardCut / neg_log_q))));
    // cumulative hazard over the sparse tail; hazard_cum_[t] covers
    // j = dense_limit_ + 1 .. dense_limit_ + t
    const std::uint64_t tail = cap_ > dense_limit_ ? cap_ - dense_limit_ : 0;
    hazard_cum_.resize(tail + 1);
    hazard_cum_[0] = 0.0;
    long double acc = 0.0L;
    for (std::uint64_t t = 1; t <= tail; ++t) {
        const double qj = std::exp(static_cast<double>(dense_limit_ + t) * log_q_);
        acc += -std::log1p(-qj);
        hazard_cum_[t] = static_cast<double>(acc);
    }
}

bool FristedtSampler::trial(Rng& rng,
                            std::vector<std::pair<std::uint64_t, std::uint64_t>>& parts) const {
    parts.clear();
    std::uint64_t sum = 0;

    // dense band: one inversion per j
    for (std::uint64_t j = 2; j <= dense_limit_; ++j) {
        const double u = rng.uniform01();
        const std::uint64_t g =
            static_cast<std::uint64_t>(std::log(u) / (static_cast<double>(j) * log_q_));
        if (g == 0) continue;
        sum += j * g;
        if (sum > n_) return false;
        parts.emplace_back(j, g);
    }

    // sparse tail: jump straight to the next j with gamma_j >= 1
    if (hazard_cum_.size() > 1) {
        std::uint64_t t = 0;
        const std::uint64_t tail = hazard_cum_.size() - 1;
        while (t < tail) {
            // smallest t' > t with cum[t'] - cum[t] >= Exp(1): survival
            // beyond t' is exp(-(cum[t'] - cum[t])) = prod (1 - q^j)
            const double target = hazard_cum_[t] - std::log(rng.uniform01());
            auto it = std::lower_bound(hazard_cum_.begin() + static_cast<std::ptrdiff_t>(t) + 1,
                                       hazard_cum_.end(), target);
            if (it == hazard_cum_.end()) break;  // no further hit up to cap_
            t = static_cast<std::uint64_t>(it - hazard_cum_.begin());
            const std::uint64_t j = dense_limit_ + t;
            const double v = rng.uniform01();
            const std::uint64_t g =
                1 + static_cast<std::uint64_t>(std::log(v) / (static_cast<double>(j) * log_q_));
            sum += j * g;
            if (sum > n_) return false;
            parts.emplace_back(j, g);
        }
    }

    // residual acceptance: gamma_1 is forced to r; accept w.p. q^r
    const std::uint64_t r = n_ - sum;
    if (std::log(rng.uniform01()) >= static_cast<double>(r) * log_q_) return false;
    if (r > 0) parts.emplace_back(1, r);
    return true;
}

Partition FristedtSampler::sample(Rng& rng, std::uint64_t max_rejections,
                                  RejectionStats& stats) const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
    parts.reserve(64);
    for (std::uint64_t attempt = 1; attempt <= max_rejections; ++attempt) {
        ++stats.trials;
        if (!trial(rng, parts)) continue;
        ++stats.accepts;
        Partition lam;
        lam.n = n_;
        std::sort(parts.begin(), parts.end());
        for (const auto& [j, m] : parts) lam.mults.emplace_hint(lam.mults.end(), j, m);
        return lam;
    }
    throw SamplerError(max_rejections,
                       "FristedtSampler: rejection budget exhausted after " +
                           std::to_string(max_rejections) + " trials at n=" + std::to_string(n_) +
                           "; retry with a new seed or a larger max_rejections");
}

/* ------------------------------ unranking ------------------------------ */

namespace {

// uniform bigint in [0, bound) from whole rng words, by rejection
BigCount uniform_below(Rng& rng, const BigCount& bound) {
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    std::vector<std::uint64_t> buf(words);
    BigCount z;
    for (;;) {
        for (auto& w : buf) w = rng.next();
        mpz_import(z.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
        mpz_fdiv_r_2exp(z.get_mpz_t(), z.get_mpz_t(), bits);
        if (z < bound) return z;
    }
}

}  // namespace

UnrankingSampler::UnrankingSampler(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("UnrankingSampler: n must be >= 1");
    if (n > kMaxUnrankingN)
        throw std::invalid_argument("UnrankingSampler: n=" + std::to_string(n) +
                                    " exceeds the unranking limit " +
                                    std::to_string(kMaxUnrankingN));
    table_ = std::make_shared<const BoundedCountTable>(n);
}

Partition UnrankingSampler::sample(Rng& rng) const {
    const std::uint64_t n = table_->n();
    Partition lam;
    lam.n = n;
    std::uint64_t m = n, k = n;
    while (m > 0) {
        k = std::min(k, m);
        // q(m,k) = q(m,k-1) + q(m-k,k): take a part k with the second weight
        const BigCount u = uniform_below(rng, table_->q(m, k));
        if (u < table_->q(m - k, k)) {
            auto [pos, inserted] = lam.mults.try_emplace(k, 1);
            if (!inserted) ++pos->second;
            m -= k;
        } else {
            --k;
        }
    }
    return lam;
}

/* ------------------------------ facade ------------------------------ */

UniformPartitionSampler::UniformPartitionSampler(const SamplerConfig& cfg) : cfg_(cfg) {
    if (cfg.n < 1) throw std::invalid_argument("UniformPartitionSampler: n must be >= 1");
    if (cfg_.effective_method() == SampleMethod::ExactUnranking)
        unranking_.emplace(cfg.n);
    else
        rejection_.emplace(cfg.n, cfg.effective_q());
}

Partition UniformPartitionSampler::sample(Rng& rng, RejectionStats& stats) const {
    if (unranking_) {
        ++stats.trials;
        ++stats.accepts;
        return unranking_->sample(rng);
    }
    return rejection_->sample(rng, cfg_.max_rejections, stats);
}

const char* UniformPartitionSampler::method_name() const {
    return unranking_ ? "exact-unranking" : "fristedt-rejection";
}

/* ------------------------------ selection ------------------------------ */

SelectedPart select_part(const Partition& lam, ProcedureId proc, Rng& rng) {
    if (lam.mults.empty()) throw std::invalid_argument("select_part: empty partition");
    switch (proc) {
        case ProcedureId::P1Distinct: {
            std::uint64_t idx = rng.below(lam.mults.size());
            auto it = lam.mults.begin();
            std::advance(it, static_cast<std::ptrdiff_t>(idx));
            return {it->first, it->second};
        }
        case ProcedureId::P2Area: {
            // block areas j*m_j sum to n exactly
            std::uint64_t w = rng.below(lam.n);
            for (const auto& [j, m] : lam.mults) {
                const std::uint64_t area = j * m;
                if (w < area) return {j, m};
                w -= area;
            }
            break;
        }
        case ProcedureId::P3UniformPart: {
            std::uint64_t w = rng.below(lam.total_parts());
            for (const auto& [j, m] : lam.mults) {
                if (w < m) return {j, m};
                w -= m;
            }
            break;
        }
    }
    throw std::logic_error("select_part: weight walk fell through");
}

/* ------------------------------ experiments ------------------------------ */

unsigned default_workers() {
    if (const char* env = std::getenv("PARTSAMP_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 4096) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace {

// fan out sample indices [0,N) over workers; fn(index, rng) must only touch
// worker-local state.  Sampler failures are rethrown for the lowest index.
template <class PerSample>
void parallel_samples(std::uint64_t samples, std::uint64_t seed, unsigned workers,
                      PerSample&& fn) {
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, std::max<std::uint64_t>(samples, 1)));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::uint64_t> error_index(workers, ~0ULL);
    const std::uint64_t chunk = (samples + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = static_cast<std::uint64_t>(w) * chunk;
        const std::uint64_t hi = std::min(samples, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, w, lo, hi] {
            for (std::uint64_t i = lo; i < hi; ++i) {
                try {
                    Rng rng(seed, i);
                    fn(w, i, rng);
                } catch (...) {
                    errors[w] = std::current_exception();
                    error_index[w] = i;
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    std::size_t first = errors.size();
    std::uint64_t best = ~0ULL;
    for (std::size_t w = 0; w < errors.size(); ++w)
        if (errors[w] && error_index[w] < best) {
            best = error_index[w];
            first = w;
        }
    if (first < errors.size()) std::rethrow_exception(errors[first]);
}

}  // namespace

SampleSummary run_experiment(const SamplerConfig& cfg, ProcedureId proc, std::uint64_t samples,
                             std::uint64_t seed, unsigned workers) {
    if (samples < 1) throw std::invalid_argument("run_experiment: samples must be >= 1");
    if (workers == 0) workers = default_workers();
    const UniformPartitionSampler sampler(cfg);

    struct Local {
        std::map<std::uint64_t, std::uint64_t> sizes;
        std::map<std::uint64_t, std::uint64_t> mults;
        RejectionStats stats;
    };
    std::vector<Local> locals(workers);

    parallel_samples(samples, seed, workers, [&](unsigned w, std::uint64_t, Rng& rng) {
        Local& local = locals[w];
        const Partition lam = sampler.sample(rng, local.stats);
        const SelectedPart part = select_part(lam, proc, rng);
        ++local.sizes[part.size];
        ++local.mults[part.mult];
    });

    SampleSummary summary;
    summary.n = cfg.n;
    summary.procedure = proc;
    summary.samples = samples;
    summary.seed = seed;
    summary.method = sampler.method_name();
    summary.q = cfg.effective_q();
    for (const Local& local : locals) {
        for (const auto& [k, v] : local.sizes) summary.part_sizes[k] += v;
        for (const auto& [k, v] : local.mults) summary.multiplicities[k] += v;
        summary.rejection.trials += local.stats.trials;
        summary.rejection.accepts += local.stats.accepts;
    }
    return summary;
}

double concentration_diagnostic(std::uint64_t n, std::uint64_t samples, double eps,
                                std::uint64_t seed, unsigned workers) {
    if (!(eps > 0.0)) throw std::invalid_argument("concentration_diagnostic: eps must be > 0");
    if (samples < 1) throw std::invalid_argument("concentration_diagnostic: samples must be >= 1");
    if (workers == 0) workers = default_workers();
    SamplerConfig cfg;
    cfg.n = n;
    const UniformPartitionSampler sampler(cfg);
    const double scale = kPi / std::sqrt(6.0 * static_cast<double>(n));

    std::vector<std::uint64_t> hits(workers, 0);
    std::vector<RejectionStats> stats(workers);
    parallel_samples(samples, seed, workers, [&](unsigned w, std::uint64_t, Rng& rng) {
        const Partition lam = sampler.sample(rng, stats[w]);
        const double dev = std::abs(scale * static_cast<double>(lam.distinct_sizes()) - 1.0);
        if (dev > eps) ++hits[w];
    });
    std::uint64_t total = 0;
    for (auto h : hits) total += h;
    return static_cast<double>(total) / static_cast<double>(samples);
}

/* ------------------------------ summaries ------------------------------ */

std::vector<double> SampleSummary::size_samples_sorted() const {
    std::vector<double> out;
    out.reserve(samples);
    for (const auto& [size, count] : part_sizes)
        out.insert(out.end(), count, static_cast<double>(size));
    return out;
}

std::vector<double> SampleSummary::mult_samples_sorted() const {
    std::vector<double> out;
    out.reserve(samples);
    for (const auto& [mult, count] : multiplicities)
        out.insert(out.end(), count, static_cast<double>(mult));
    return out;
}

void to_json(nlohmann::json& j, const SampleSummary& summary) {
    nlohmann::json sizes = nlohmann::json::object();
    for (const auto& [k, v] : summary.part_sizes) sizes[std::to_string(k)] = v;
    nlohmann::json mults = nlohmann::json::object();
    for (const auto& [k, v] : summary.multiplicities) mults[std::to_string(k)] = v;
    j = nlohmann::json{
        {"n", summary.n},
        {"procedure", procedure_name(summary.procedure)},
        {"samples", summary.samples},
        {"seed", summary.seed},
        {"method", summary.method},
        {"q", summary.q},
        {"part_sizes", sizes},
        {"multiplicities", mults},
        {"rejection", {{"trials", summary.rejection.trials}, {"accepts", summary.rejection.accepts}}},
    };
}

}  // namespace partsamp
