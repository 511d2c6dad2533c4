#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "repute/ingest.hpp"

namespace repute {

/// Truncated-normal feature distribution of one account class, per feature in
/// the order user, sentiment, content, temporal, bot.
struct FeatureProfile {
    std::array<double, 5> mean{};
    std::array<double, 5> spread{};
    std::array<double, 5> lo{};
    std::array<double, 5> hi{};
};

FeatureProfile low_activity_bot_profile();   // bot-tagged and non-reputed
FeatureProfile social_bot_profile();         // bot-tagged, high other features
FeatureProfile genuine_account_profile();    // real accounts

/// Everything the deterministic generator needs. Identical specs (seed
/// included) produce byte-identical account/tweet files and ledger.
struct SyntheticSpec {
    std::size_t n_accounts = 100;
    double bot_fraction = 0.1;
    /// Non-reputed share; must not exceed bot_fraction (non-reputed accounts
    /// are drawn from the bot class). Negative means "equal to bot_fraction".
    double non_reputed_fraction = -1.0;
    double edge_probability = 0.02;
    bool bot_clique = false;
    std::uint64_t seed = 0;

    std::size_t n_tweets = 0;  // 0 means one tweet per account
    double retweet_rate = 0.5;  // retweet share among non-bot tweets
    double share_gap = 0.05;    // bot retweet share = retweet_rate + share_gap

    std::int64_t start_time = 1573171200;  // 2019-11-08T00:00:00Z
    std::int64_t duration_seconds = 30 * 86400;

    FeatureProfile bot_profile = low_activity_bot_profile();
    FeatureProfile social_bot_profile_ = social_bot_profile();
    FeatureProfile human_profile = genuine_account_profile();

    void validate() const;  // throws InvalidSpec
};

struct SyntheticResult {
    std::vector<AccountRecord> accounts;
    std::vector<TweetNode> tweets;
    nlohmann::json ledger;  // planted ground truth
};

SyntheticResult generate_synthetic(const SyntheticSpec& spec);

/// Writes accounts.jsonl, tweets.jsonl, ledger.json under dir.
void write_synthetic(const std::string& dir, const SyntheticResult& result);

}  // namespace repute
