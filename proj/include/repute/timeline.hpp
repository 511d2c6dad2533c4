#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "repute/features.hpp"
#include "repute/graph.hpp"
#include "repute/reputation.hpp"

namespace repute {

enum class TweetKind { Original, Retweet };

const char* to_string(TweetKind kind);

struct TweetNode {
    std::string tweet_id;
    std::string author_id;
    std::optional<std::string> parent_id;  // present iff kind == Retweet
    std::int64_t created_at = 0;           // unix seconds, UTC
    TweetKind kind = TweetKind::Original;
};

/// Tweet-retweet forest. Retweets whose parent cannot be resolved inside the
/// capture (directly or through a quarantined ancestor) are quarantined:
/// counted and kept aside, never grafted onto the tree.
struct TimelineTree {
    std::vector<TweetNode> nodes;  // accepted, sorted by tweet_id
    std::vector<std::optional<std::size_t>> parent;
    std::vector<std::vector<std::size_t>> children;
    std::vector<std::size_t> roots;
    std::vector<TweetNode> quarantined;

    std::size_t size() const { return nodes.size(); }
    std::size_t edge_count() const;
};

/// Throws DuplicateTweetId and CycleDetected; a node whose kind disagrees
/// with parent_id presence is rejected with Error.
TimelineTree build_tree(const std::vector<TweetNode>& nodes);

/// Tweet graph with edges oriented parent -> child; ids[i] is the tweet id of
/// graph vertex i.
struct TweetGraph {
    DirectedGraph graph;
    std::vector<std::string> tweet_ids;
};

TweetGraph to_graph(const TimelineTree& tree);

NodeScores tree_centralities(const TimelineTree& tree, const ScoringConfig& config);

struct FractionResult {
    double fraction = 0.0;
    std::size_t matching = 0;
    std::size_t known = 0;    // denominator
    std::size_t unknown = 0;  // authors (or tweets) without data, excluded
};

/// Share of Bot-tagged authors among authors with known features. With
/// per_tweet the unit is tweets instead of distinct authors.
/// Throws NoKnownAccounts when the denominator is empty.
FractionResult bot_account_fraction(
    const TimelineTree& tree,
    const std::unordered_map<std::string, AccountFeatures>& features_of,
    bool per_tweet = false);

/// Same with ReputationTag::NonReputed over the given active reputations.
FractionResult non_reputed_fraction(
    const TimelineTree& tree,
    const std::unordered_map<std::string, double>& active_of,
    bool per_tweet = false);

enum class GapBaseline {
    BotVsOthers,  // bot retweet rate minus everyone else's retweet rate
    WithinBots,   // bot retweet rate minus bot original rate
};

/// Positive result means bot-authored tweets skew toward sharing.
/// Throws InsufficientData without at least one tweet on each side.
double share_create_gap(
    const TimelineTree& tree,
    const std::unordered_map<std::string, AccountFeatures>& features_of,
    GapBaseline baseline = GapBaseline::BotVsOthers);

struct HourlyActivity {
    std::array<std::uint64_t, 24> bins{};
    double night_share = 0.0;  // fraction of tweets between 00:00 and 06:00 local

    std::uint64_t total() const;
};

/// Histogram over local clock hours; offset defaults to UTC+01:00.
HourlyActivity hourly_activity(const TimelineTree& tree, int utc_offset_minutes = 60);

struct TimelineReport {
    std::size_t node_count = 0;
    std::size_t quarantined = 0;
    std::size_t distinct_accounts = 0;
    FractionResult bot_accounts;
    FractionResult non_reputed;
    double share_create_gap = 0.0;
    HourlyActivity hourly;
};

TimelineReport make_report(
    const TimelineTree& tree,
    const std::unordered_map<std::string, AccountFeatures>& features_of,
    int utc_offset_minutes = 60, bool per_tweet = false);

}  // namespace repute
