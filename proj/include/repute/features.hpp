#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "repute/errors.hpp"

namespace repute {

/// The five unit-interval feature scores of one account.
struct AccountFeatures {
    double user = 0.0;
    double sentiment = 0.0;
    double content = 0.0;
    double temporal = 0.0;
    double bot = 0.0;

    std::array<double, 5> as_array() const {
        return {user, sentiment, content, temporal, bot};
    }
    bool in_range() const;
};

inline constexpr std::array<const char*, 5> kFeatureNames = {
    "user", "sentiment", "content", "temporal", "bot"};

/// Bot-score buckets, ordered most to least automated. Low bot scores mean
/// automation: the score measures humanness.
enum class BotTag { Bot, Doubtful, Medium, Real };

const char* to_string(BotTag tag);

/// Bucket a bot score: [0,0.2] Bot, (0.2,0.5] Doubtful, (0.5,0.8] Medium,
/// (0.8,1] Real.
BotTag classify_bot(double bot_score);
inline BotTag classify_bot(const AccountFeatures& f) { return classify_bot(f.bot); }

/// Pairwise Pearson coefficients over the five features. Entries touching a
/// zero-variance feature are left undefined instead of NaN; the diagonal is
/// always 1.
struct CorrelationMatrix {
    std::array<std::array<std::optional<double>, 5>, 5> entries{};
    std::array<bool, 5> degenerate{};  // true when that feature has zero variance

    std::optional<double> at(std::size_t i, std::size_t j) const {
        return entries[i][j];
    }
};

/// Throws InsufficientData for fewer than two accounts.
CorrelationMatrix feature_correlations(const std::vector<AccountFeatures>& population);

}  // namespace repute
