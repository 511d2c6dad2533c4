#include "repute/features.hpp"

#include <cmath>

namespace repute {

bool AccountFeatures::in_range() const {
    for (double x : as_array()) {
        if (!(x >= 0.0 && x <= 1.0)) return false;
    }
    return true;
}

const char* to_string(BotTag tag) {
    switch (tag) {
        case BotTag::Bot: return "bot";
        case BotTag::Doubtful: return "doubtful";
        case BotTag::Medium: return "medium";
        case BotTag::Real: return "real";
    }
    return "?";
}

BotTag classify_bot(double bot_score) {
    if (bot_score <= 0.2) return BotTag::Bot;
    if (bot_score <= 0.5) return BotTag::Doubtful;
    if (bot_score <= 0.8) return BotTag::Medium;
    return BotTag::Real;
}

CorrelationMatrix feature_correlations(const std::vector<AccountFeatures>& population) {
    const std::size_t n = population.size();
    if (n < 2) throw InsufficientData("correlation needs at least 2 accounts");

    std::array<double, 5> mean{};
    for (const auto& f : population) {
        const auto v = f.as_array();
        for (std::size_t i = 0; i < 5; ++i) mean[i] += v[i];
    }
    for (double& m : mean) m /= static_cast<double>(n);

    // second pass: centered cross products
    std::array<std::array<double, 5>, 5> cov{};
    for (const auto& f : population) {
        const auto v = f.as_array();
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = i; j < 5; ++j) {
                cov[i][j] += (v[i] - mean[i]) * (v[j] - mean[j]);
            }
        }
    }

    CorrelationMatrix result;
    for (std::size_t i = 0; i < 5; ++i) {
        result.degenerate[i] = cov[i][i] <= 0.0;
        result.entries[i][i] = 1.0;
    }
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            if (result.degenerate[i] || result.degenerate[j]) continue;
            double r = cov[i][j] / std::sqrt(cov[i][i] * cov[j][j]);
            r = std::min(1.0, std::max(-1.0, r));
            result.entries[i][j] = r;
            result.entries[j][i] = r;
        }
    }
    return result;
}

}  // namespace repute
