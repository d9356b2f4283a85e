#include "partsamp/partition.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace partsamp {

void to_json(nlohmann::json& j, const Partition& lam) {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [size, mult] : lam.mults) m[std::to_string(size)] = mult;
    j = nlohmann::json{{"n", lam.n}, {"mults", m}};
}

void from_json(const nlohmann::json& j, Partition& lam) {
    lam.n = j.at("n").get<std::uint64_t>();
    lam.mults.clear();
    for (const auto& [key, val] : j.at("mults").items())
        lam.mults[std::stoull(key)] = val.get<std::uint64_t>();
    lam.validate();
}

void PartitionTable::extend(std::size_t max_n) {
    if (values_.empty()) values_.emplace_back(1);  // p(0) = 1
    for (std::size_t n = values_.size(); n <= max_n; ++n) {
        BigCount acc = 0;
        // p(n) = sum_{k>=1} (-1)^{k-1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
        for (std::size_t k = 1;; ++k) {
            std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            std::size_t g2 = k * (3 * k + 1) / 2;
            if (k % 2 == 1) {
                acc += values_[n - g1];
                if (g2 <= n) acc += values_[n - g2];
            } else {
                acc -= values_[n - g1];
                if (g2 <= n) acc -= values_[n - g2];
            }
        }
        values_.push_back(std::move(acc));
    }
}

double PartitionTable::log_p(std::size_t m) const {
    signed long exp2;
    double frac = mpz_get_d_2exp(&exp2, p(m).get_mpz_t());
    return std::log(frac) + static_cast<double>(exp2) * 0.6931471805599453;
}

BigCount partition_count(std::uint64_t n) {
    static PartitionTable table(0);
    static std::mutex lock;
    std::scoped_lock guard(lock);
    table.extend(n);
    return table.p(n);
}

BigCount bounded_count(std::uint64_t n, std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("bounded_count: k must be >= 1");
    if (n == 0) return 1;
    std::vector<BigCount> f(n + 1);
    f[0] = 1;
    for (std::uint64_t part = 1; part <= std::min(k, n); ++part)
        for (std::uint64_t m = part; m <= n; ++m) f[m] += f[m - part];
    return f[n];
}

BoundedCountTable::BoundedCountTable(std::size_t n) : n_(n) {
    tri_.resize((n + 1) * (n + 2) / 2);
    tri_[0] = 1;  // q(0,0) = 1
    for (std::size_t m = 1; m <= n; ++m) {
        std::size_t row = m * (m + 1) / 2;
        tri_[row] = 0;  // q(m,0) = 0 for m > 0
        for (std::size_t k = 1; k <= m; ++k) {
            std::size_t rest = m - k;
            tri_[row + k] = tri_[row + k - 1] + tri_[rest * (rest + 1) / 2 + std::min(k, rest)];
        }
    }
}

std::vector<Partition> enumerate_partitions(std::uint64_t n, std::size_t limit) {
    if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be >= 1");
    if (n > limit)
        throw std::invalid_argument("enumerate_partitions: n=" + std::to_string(n) +
                                    " exceeds the oracle limit " + std::to_string(limit));
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& lam) { out.push_back(lam); });
    return out;
}

}  // namespace partsamp
