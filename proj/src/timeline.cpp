#include "repute/timeline.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace repute {

const char* to_string(TweetKind kind) {
    return kind == TweetKind::Original ? "original" : "retweet";
}

std::size_t TimelineTree::edge_count() const {
    std::size_t edges = 0;
    for (const auto& p : parent) {
        if (p.has_value()) ++edges;
    }
    return edges;
}

TimelineTree build_tree(const std::vector<TweetNode>& input) {
    std::vector<TweetNode> nodes = input;
    std::sort(nodes.begin(), nodes.end(),
              [](const TweetNode& a, const TweetNode& b) { return a.tweet_id < b.tweet_id; });
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (nodes[i].tweet_id == nodes[i - 1].tweet_id)
            throw DuplicateTweetId(nodes[i].tweet_id);
    }

    std::unordered_map<std::string, std::size_t> index;
    index.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const TweetNode& node = nodes[i];
        if ((node.kind == TweetKind::Retweet) != node.parent_id.has_value())
            throw Error("tweet " + node.tweet_id + ": kind disagrees with parent_id");
        index.emplace(node.tweet_id, i);
    }

    // resolve parent links, cycle check by walking the ancestor chain
    std::vector<std::optional<std::size_t>> parent_of(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].parent_id) continue;
        const auto it = index.find(*nodes[i].parent_id);
        if (it == index.end()) continue;  // orphan, quarantined below
        parent_of[i] = it->second;
        std::size_t slow = i, fast = i;
        while (true) {
            if (!parent_of[fast]) break;
            fast = *parent_of[fast];
            if (!parent_of[fast]) break;
            fast = *parent_of[fast];
            slow = *parent_of[slow];
            if (slow == fast) throw CycleDetected(nodes[i].tweet_id);
        }
    }

    // quarantine: missing parent, time inversion, or a quarantined ancestor
    std::vector<bool> bad(nodes.size(), false);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].parent_id && !parent_of[i]) bad[i] = true;
        if (parent_of[i] && nodes[i].created_at < nodes[*parent_of[i]].created_at)
            bad[i] = true;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (!bad[i] && parent_of[i] && bad[*parent_of[i]]) {
                bad[i] = true;
                changed = true;
            }
        }
    }

    TimelineTree tree;
    std::vector<std::size_t> keep_index(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (bad[i]) {
            tree.quarantined.push_back(nodes[i]);
        } else {
            keep_index[i] = tree.nodes.size();
            tree.nodes.push_back(nodes[i]);
        }
    }
    tree.parent.resize(tree.nodes.size());
    tree.children.resize(tree.nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (bad[i]) continue;
        const std::size_t self = keep_index[i];
        if (parent_of[i]) {
            const std::size_t p = keep_index[*parent_of[i]];
            tree.parent[self] = p;
            tree.children[p].push_back(self);
        } else {
            tree.roots.push_back(self);
        }
    }
    return tree;
}

TweetGraph to_graph(const TimelineTree& tree) {
    std::vector<VertexId> vertices(tree.size());
    std::iota(vertices.begin(), vertices.end(), 0);
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(tree.edge_count());
    for (std::size_t i = 0; i < tree.size(); ++i) {
        if (tree.parent[i]) edges.emplace_back(*tree.parent[i], i);
    }
    TweetGraph tg{DirectedGraph(std::move(vertices), edges), {}};
    tg.tweet_ids.reserve(tree.size());
    for (const auto& node : tree.nodes) tg.tweet_ids.push_back(node.tweet_id);
    return tg;
}

NodeScores tree_centralities(const TimelineTree& tree, const ScoringConfig& config) {
    return all_node_scores(to_graph(tree).graph, config);
}

namespace {

template <typename Known, typename Matches>
FractionResult author_fraction(const TimelineTree& tree, bool per_tweet,
                               Known known, Matches matches) {
    FractionResult r;
    if (per_tweet) {
        for (const auto& node : tree.nodes) {
            if (!known(node.author_id)) {
                ++r.unknown;
                continue;
            }
            ++r.known;
            if (matches(node.author_id)) ++r.matching;
        }
    } else {
        std::set<std::string> authors;
        for (const auto& node : tree.nodes) authors.insert(node.author_id);
        for (const auto& id : authors) {
            if (!known(id)) {
                ++r.unknown;
                continue;
            }
            ++r.known;
            if (matches(id)) ++r.matching;
        }
    }
    if (r.known == 0) throw NoKnownAccounts();
    r.fraction = static_cast<double>(r.matching) / static_cast<double>(r.known);
    return r;
}

}  // namespace

FractionResult bot_account_fraction(
    const TimelineTree& tree,
    const std::unordered_map<std::string, AccountFeatures>& features_of,
    bool per_tweet) {
    return author_fraction(
        tree, per_tweet,
        [&](const std::string& id) { return features_of.count(id) > 0; },
        [&](const std::string& id) {
            return classify_bot(features_of.at(id)) == BotTag::Bot;
        });
}

FractionResult non_reputed_fraction(
    const TimelineTree& tree,
    const std::unordered_map<std::string, double>& active_of, bool per_tweet) {
    return author_fraction(
        tree, per_tweet,
        [&](const std::string& id) { return active_of.count(id) > 0; },
        [&](const std::string& id) {
            return classify_reputation(active_of.at(id)) == ReputationTag::NonReputed;
        });
}

double share_create_gap(
    const TimelineTree& tree,
    const std::unordered_map<std::string, AccountFeatures>& features_of,
    GapBaseline baseline) {
    std::size_t bot_total = 0, bot_retweets = 0;
    std::size_t other_total = 0, other_retweets = 0;
    for (const auto& node : tree.nodes) {
        const auto it = features_of.find(node.author_id);
        if (it == features_of.end()) continue;
        const bool is_retweet = node.kind == TweetKind::Retweet;
        if (classify_bot(it->second) == BotTag::Bot) {
            ++bot_total;
            bot_retweets += is_retweet;
        } else {
            ++other_total;
            other_retweets += is_retweet;
        }
    }
    if (bot_total == 0)
        throw InsufficientData("no tweets from bot-tagged accounts");
    const double bot_rate =
        static_cast<double>(bot_retweets) / static_cast<double>(bot_total);
    if (baseline == GapBaseline::WithinBots) return bot_rate - (1.0 - bot_rate);
    if (other_total == 0)
        throw InsufficientData("no tweets from non-bot accounts");
    return bot_rate -
           static_cast<double>(other_retweets) / static_cast<double>(other_total);
}

std::uint64_t HourlyActivity::total() const {
    return std::accumulate(bins.begin(), bins.end(), std::uint64_t{0});
}

HourlyActivity hourly_activity(const TimelineTree& tree, int utc_offset_minutes) {
    HourlyActivity h;
    std::uint64_t night = 0;
    for (const auto& node : tree.nodes) {
        const std::int64_t local = node.created_at + std::int64_t{60} * utc_offset_minutes;
        const std::int64_t seconds_of_day = ((local % 86400) + 86400) % 86400;
        const int hour = static_cast<int>(seconds_of_day / 3600);
        ++h.bins[hour];
        if (hour < 6) ++night;
    }
    const std::uint64_t total = h.total();
    h.night_share = total == 0 ? 0.0
                               : static_cast<double>(night) / static_cast<double>(total);
    return h;
}

TimelineReport make_report(
    const TimelineTree& tree,
    const std::unordered_map<std::string, AccountFeatures>& features_of,
    int utc_offset_minutes, bool per_tweet) {
    TimelineReport report;
    report.node_count = tree.size();
    report.quarantined = tree.quarantined.size();

    std::set<std::string> authors;
    for (const auto& node : tree.nodes) authors.insert(node.author_id);
    report.distinct_accounts = authors.size();

    std::unordered_map<std::string, double> active_of;
    active_of.reserve(features_of.size());
    for (const auto& [id, f] : features_of) active_of.emplace(id, active_reputation(f));

    report.bot_accounts = bot_account_fraction(tree, features_of, per_tweet);
    report.non_reputed = non_reputed_fraction(tree, active_of, per_tweet);
    report.share_create_gap = share_create_gap(tree, features_of);
    report.hourly = hourly_activity(tree, utc_offset_minutes);
    return report;
}

}  // namespace repute
