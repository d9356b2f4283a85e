#ifndef PARTSAMP_PARTITION_HPP
#define PARTSAMP_PARTITION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace partsamp {

using BigCount = mpz_class;   // exact non-negative integer, never rounded
using Rational = mpq_class;

// A partition of n in multiplicity form: mults[j] = number of parts equal
// to j.  Stored sizes always have multiplicity >= 1 and sum j*m_j == n.
struct Partition {
    std::uint64_t n = 0;
    std::map<std::uint64_t, std::uint64_t> mults;

    std::uint64_t mult_of(std::uint64_t j) const {
        auto it = mults.find(j);
        return it == mults.end() ? 0 : it->second;
    }

    std::uint64_t distinct_sizes() const { return mults.size(); }

    std::uint64_t total_parts() const {
        std::uint64_t z = 0;
        for (const auto& [j, m] : mults) { (void)j; z += m; }
        return z;
    }

    void validate() const {
        std::uint64_t sum = 0;
        for (const auto& [j, m] : mults) {
            if (m == 0) throw std::invalid_argument("Partition: zero multiplicity stored");
            if (j < 1 || j > n) throw std::invalid_argument("Partition: part size out of range");
            sum += j * m;
        }
        if (sum != n) throw std::invalid_argument("Partition: parts do not sum to n");
    }
};

void to_json(nlohmann::json& j, const Partition& lam);
void from_json(const nlohmann::json& j, Partition& lam);

/* ---------------------------------------------------------------------
   Counting.  Two independent algorithms:
     - pentagonal-number recurrence (primary, O(n^{3/2}) bigint adds)
     - bounded-part DP q(n,k) = q(n,k-1) + q(n-k,k) (cross-check, and the
       backbone of exact unranking)
   --------------------------------------------------------------------- */

// p(0..max_n) by the pentagonal recurrence.  Build once (single-threaded),
// then read-only from any number of threads.
class PartitionTable {
public:
    explicit PartitionTable(std::size_t max_n) { extend(max_n); }

    void extend(std::size_t max_n);

    const BigCount& p(std::size_t m) const {
        if (m >= values_.size()) throw std::out_of_range("PartitionTable::p beyond table");
        return values_[m];
    }

    std::size_t max_n() const { return values_.size() - 1; }

    double log_p(std::size_t m) const;  // natural log of p(m)

private:
    std::vector<BigCount> values_;
};

// p(n) through a process-wide memoized table (grown under a lock)
BigCount partition_count(std::uint64_t n);

// number of partitions of n with all parts <= k (rolling DP, O(nk))
BigCount bounded_count(std::uint64_t n, std::uint64_t k);

// Full triangle q(m,k) for m <= n, used by the unranking sampler.
class BoundedCountTable {
public:
    explicit BoundedCountTable(std::size_t n);

    // q(m,k); k is clamped to m internally (parts larger than m are moot)
    const BigCount& q(std::size_t m, std::size_t k) const {
        if (m > n_) throw std::out_of_range("BoundedCountTable::q beyond table");
        if (k > m) k = m;
        return tri_[m * (m + 1) / 2 + k];
    }

    std::size_t n() const { return n_; }

private:
    std::size_t n_;
    std::vector<BigCount> tri_;  // row m holds k = 0..m
};

/* ---------------------------------------------------------------------
   Enumeration oracle.  Emits every partition of n exactly once, largest
   part first.  Kept independent of the counting code paths on purpose.
   --------------------------------------------------------------------- */

inline constexpr std::size_t kEnumerationLimit = 40;

template <class Fn>
void for_each_partition(std::uint64_t n, Fn&& fn) {
    if (n == 0) return;
    // parts[] holds the current partition as a weakly decreasing list
    std::vector<std::uint64_t> parts;
    parts.reserve(n);
    // descend: place the largest remaining part, never exceeding the last
    std::uint64_t rem = n, cap = n;
    for (;;) {
        while (rem > 0) {
            std::uint64_t take = std::min(cap, rem);
            parts.push_back(take);
            rem -= take;
            cap = take;
        }
        Partition lam;
        lam.n = n;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            auto [pos, inserted] = lam.mults.try_emplace(*it, 1);
            if (!inserted) ++pos->second;
        }
        fn(lam);
        // backtrack: shrink the deepest part that is > 1
        while (!parts.empty() && parts.back() == 1) {
            rem += 1;
            parts.pop_back();
        }
        if (parts.empty()) return;
        parts.back() -= 1;
        rem += 1;
        cap = parts.back();
    }
}

std::vector<Partition> enumerate_partitions(std::uint64_t n,
                                            std::size_t limit = kEnumerationLimit);

}  // namespace partsamp

#endif
