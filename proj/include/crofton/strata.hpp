#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "crofton/estimate.hpp"
#include "crofton/parallel.hpp"

namespace crofton {

struct McConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    std::uint32_t strata = 64;
    double near_curve_fraction = 0.5;
    int threads = 0;  // 0 = all available
    Execution exec = Execution::parallel;
};

void validate(const McConfig& cfg);

inline std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-based substream: output k is a hash of (seed, tag, stratum, k).
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t stratum)
        : key_(splitmix(seed ^ splitmix(tag ^ splitmix(stratum)))) {}

    std::uint64_t next() { return splitmix(key_ + 0xD1B54A32D192ED03ULL * counter_++); }
    // Uniform on the open interval (0, 1).
    double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }
    std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Welford running moments; merge() is Chan's pairwise update.
struct Accumulator {
    std::uint64_t n = 0;
    double mean = 0;
    double m2 = 0;

    void add(double x) {
        ++n;
        double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    void merge(const Accumulator& o) {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        double nn = static_cast<double>(n + o.n);
        double d = o.mean - mean;
        mean += d * static_cast<double>(o.n) / nn;
        m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / nn;
        n += o.n;
    }
    double std_error() const {
        if (n < 2) return 0;
        return std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
    }
};

// Walker/Vose alias table over nonnegative weights.
class AliasTable {
public:
    AliasTable() = default;
    explicit AliasTable(const std::vector<double>& weights);

    bool empty() const { return prob_.empty(); }
    double total() const { return total_; }
    std::size_t sample(Stream& s) const;

private:
    std::vector<double> prob_;
    std::vector<std::uint32_t> alias_;
    double total_ = 0;
};

std::uint64_t stratum_size(const McConfig& cfg, std::uint32_t k);

// One pass over all strata; `sample(stream)` returns one weighted draw.
// Strata are folded in index order, so the result does not depend on the thread count.
template <class F>
McEstimate run_strata(const McConfig& cfg, std::uint64_t tag, const F& sample) {
    validate(cfg);
    std::vector<Accumulator> parts(cfg.strata);
    auto one = [&](std::uint32_t k) {
        Stream s(cfg.seed, tag, k);
        Accumulator a;
        const std::uint64_t m = stratum_size(cfg, k);
        for (std::uint64_t i = 0; i < m; ++i) a.add(sample(s));
        parts[k] = a;
    };
    const int strata = static_cast<int>(cfg.strata);
    if (cfg.exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(cfg.threads))
        for (int k = 0; k < strata; ++k) one(static_cast<std::uint32_t>(k));
    } else {
        for (int k = 0; k < strata; ++k) one(static_cast<std::uint32_t>(k));
    }
    Accumulator total;
    for (const auto& a : parts) total.merge(a);
    return {total.mean, total.std_error(), total.n, cfg.seed};
}

}  // namespace crofton
