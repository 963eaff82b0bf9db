#include "crofton/strata.hpp"

#include <stdexcept>

namespace crofton {

void validate(const McConfig& cfg) {
    if (cfg.strata == 0) throw std::invalid_argument("strata must be positive");
    if (cfg.samples < cfg.strata) throw std::invalid_argument("samples must be at least the number of strata");
    if (!(cfg.near_curve_fraction >= 0 && cfg.near_curve_fraction <= 1))
        throw std::invalid_argument("near_curve_fraction must lie in [0, 1]");
    if (cfg.threads < 0) throw std::invalid_argument("threads must be nonnegative");
}

std::uint64_t stratum_size(const McConfig& cfg, std::uint32_t k) {
    return cfg.samples / cfg.strata + (k < cfg.samples % cfg.strata ? 1 : 0);
}

AliasTable::AliasTable(const std::vector<double>& weights) {
    const std::size_t n = weights.size();
    total_ = 0;
    for (double w : weights) {
        if (!(w >= 0)) throw std::invalid_argument("alias weights must be nonnegative");
        total_ += w;
    }
    if (n == 0 || !(total_ > 0)) return;
    prob_.assign(n, 0);
    alias_.assign(n, 0);
    std::vector<double> scaled(n);
    std::vector<std::uint32_t> small, large;
    for (std::size_t i = 0; i < n; ++i) {
        scaled[i] = weights[i] * static_cast<double>(n) / total_;
        (scaled[i] < 1 ? small : large).push_back(static_cast<std::uint32_t>(i));
    }
    while (!small.empty() && !large.empty()) {
        std::uint32_t s = small.back(), l = large.back();
        small.pop_back();
        prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] = (scaled[l] + scaled[s]) - 1;
        if (scaled[l] < 1) {
            large.pop_back();
            small.push_back(l);
        }
    }
    for (auto i : large) prob_[i] = 1;
    for (auto i : small) prob_[i] = 1;
}

std::size_t AliasTable::sample(Stream& s) const {
    const double u = s.uniform() * static_cast<double>(prob_.size());
    std::size_t i = static_cast<std::size_t>(u);
    if (i >= prob_.size()) i = prob_.size() - 1;
    return (u - static_cast<double>(i)) < prob_[i] ? i : alias_[i];
}

}  // namespace crofton
