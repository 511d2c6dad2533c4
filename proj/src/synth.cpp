#include "repute/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

namespace repute {

using nlohmann::json;

FeatureProfile low_activity_bot_profile() {
    // means near the observed bot sample rows, support capped below the bot
    // threshold so the class is Bot-tagged and non-reputed by construction
    FeatureProfile p;
    p.mean = {0.04, 0.10, 0.15, 0.08, 0.03};
    p.spread = {0.02, 0.05, 0.08, 0.04, 0.015};
    p.lo = {0.01, 0.01, 0.01, 0.01, 0.01};
    p.hi = {0.20, 0.30, 0.34, 0.20, 0.18};
    return p;
}

FeatureProfile social_bot_profile() {
    // automated but well-groomed: bot score stays in the Bot bucket while the
    // behavioural features sit high enough to clear the non-reputed band
    FeatureProfile p;
    p.mean = {0.90, 0.90, 0.90, 0.90, 0.12};
    p.spread = {0.03, 0.03, 0.03, 0.03, 0.03};
    p.lo = {0.85, 0.85, 0.85, 0.85, 0.05};
    p.hi = {0.98, 0.98, 0.98, 0.98, 0.18};
    return p;
}

FeatureProfile genuine_account_profile() {
    FeatureProfile p;
    p.mean = {0.93, 0.94, 0.94, 0.91, 0.93};
    p.spread = {0.03, 0.03, 0.03, 0.03, 0.03};
    p.lo = {0.85, 0.85, 0.85, 0.85, 0.85};
    p.hi = {0.99, 0.99, 0.99, 0.99, 0.99};
    return p;
}

void SyntheticSpec::validate() const {
    if (n_accounts == 0) throw InvalidSpec("n_accounts must be positive");
    if (bot_fraction < 0.0 || bot_fraction > 1.0)
        throw InvalidSpec("bot_fraction must lie in [0,1]");
    const double nr = non_reputed_fraction < 0.0 ? bot_fraction : non_reputed_fraction;
    if (nr > bot_fraction + 1e-12)
        throw InvalidSpec("non_reputed_fraction cannot exceed bot_fraction");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw InvalidSpec("edge_probability must lie in [0,1]");
    if (retweet_rate < 0.0 || retweet_rate >= 1.0)
        throw InvalidSpec("retweet_rate must lie in [0,1)");
    if (retweet_rate + share_gap < 0.0 || retweet_rate + share_gap >= 1.0)
        throw InvalidSpec("retweet_rate + share_gap must lie in [0,1)");
    if (duration_seconds <= 0) throw InvalidSpec("duration must be positive");
}

namespace {

// all randomness is drawn through these two helpers so the byte stream only
// depends on the engine, not on library distribution internals
double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(u01(rng) * static_cast<double>(bound)) % bound;
}

double truncated_normal(std::mt19937_64& rng, double mean, double spread, double lo,
                        double hi) {
    for (int tries = 0; tries < 256; ++tries) {
        const double a = u01(rng), b = u01(rng);
        const double z =
            std::sqrt(-2.0 * std::log(a + 1e-300)) * std::cos(6.283185307179586 * b);
        const double x = mean + spread * z;
        if (x >= lo && x <= hi) return x;
    }
    return std::clamp(mean, lo, hi);
}

template <typename T>
void shuffle_vec(std::mt19937_64& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[uniform_index(rng, i)]);
    }
}

std::string account_id(std::size_t i) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "acct_%06zu", i);
    return buf;
}

std::string tweet_id(std::size_t i) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "tw_%06zu", i);
    return buf;
}

enum class AccountClass { LowBot, SocialBot, Genuine };

}  // namespace

SyntheticResult generate_synthetic(const SyntheticSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    const std::size_t n = spec.n_accounts;

    const double nr_frac =
        spec.non_reputed_fraction < 0.0 ? spec.bot_fraction : spec.non_reputed_fraction;
    const std::size_t n_bots =
        static_cast<std::size_t>(std::llround(spec.bot_fraction * static_cast<double>(n)));
    const std::size_t n_low =
        static_cast<std::size_t>(std::llround(nr_frac * static_cast<double>(n)));
    if (n_low > n_bots) throw InvalidSpec("rounded non-reputed count exceeds bot count");
    const std::size_t n_social = n_bots - n_low;

    std::vector<AccountClass> cls;
    cls.reserve(n);
    cls.insert(cls.end(), n_low, AccountClass::LowBot);
    cls.insert(cls.end(), n_social, AccountClass::SocialBot);
    cls.insert(cls.end(), n - n_bots, AccountClass::Genuine);
    shuffle_vec(rng, cls);

    SyntheticResult result;
    result.accounts.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const FeatureProfile& prof = cls[i] == AccountClass::LowBot ? spec.bot_profile
                                     : cls[i] == AccountClass::SocialBot
                                         ? spec.social_bot_profile_
                                         : spec.human_profile;
        AccountRecord& rec = result.accounts[i];
        rec.id = account_id(i);
        rec.handle = "user_" + std::to_string(i);
        double* slots[5] = {&rec.features.user, &rec.features.sentiment,
                            &rec.features.content, &rec.features.temporal,
                            &rec.features.bot};
        for (std::size_t f = 0; f < 5; ++f) {
            *slots[f] = truncated_normal(rng, prof.mean[f], prof.spread[f], prof.lo[f],
                                         prof.hi[f]);
        }
        rec.verified = cls[i] == AccountClass::Genuine;
    }

    // friend -> follower edges, G(n,p) by geometric skips over ordered pairs
    std::set<std::pair<std::size_t, std::size_t>> edges;
    if (spec.edge_probability > 0.0 && n > 1) {
        const double total_pairs = static_cast<double>(n) * static_cast<double>(n - 1);
        if (spec.edge_probability >= 1.0) {
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v)
                    if (u != v) edges.emplace(u, v);
        } else {
            const double log_q = std::log(1.0 - spec.edge_probability);
            double pos = -1.0;
            while (true) {
                pos += 1.0 + std::floor(std::log(1.0 - u01(rng)) / log_q);
                if (pos >= total_pairs) break;
                const auto linear = static_cast<std::size_t>(pos);
                const std::size_t u = linear / (n - 1);
                std::size_t v = linear % (n - 1);
                if (v >= u) ++v;
                edges.emplace(u, v);
            }
        }
    }
    if (spec.bot_clique) {
        std::vector<std::size_t> bots;
        for (std::size_t i = 0; i < n; ++i)
            if (cls[i] != AccountClass::Genuine) bots.push_back(i);
        for (std::size_t a : bots)
            for (std::size_t b : bots)
                if (a != b) edges.emplace(a, b);
    }
    for (const auto& [u, v] : edges) {
        result.accounts[v].friends.push_back(account_id(u));
        result.accounts[u].followers.push_back(account_id(v));
    }

    // tweets: authors round-robin over a shuffled account order so every
    // account authors one before any authors twice
    const std::size_t n_tweets = spec.n_tweets == 0 ? n : spec.n_tweets;
    std::vector<std::size_t> author_order(n);
    for (std::size_t i = 0; i < n; ++i) author_order[i] = i;
    shuffle_vec(rng, author_order);

    std::vector<std::int64_t> times(n_tweets);
    for (auto& t : times)
        t = spec.start_time +
            static_cast<std::int64_t>(u01(rng) * static_cast<double>(spec.duration_seconds));
    std::sort(times.begin(), times.end());

    std::vector<std::size_t> bot_slots, other_slots;
    for (std::size_t k = 0; k < n_tweets; ++k) {
        const std::size_t author = author_order[k % n];
        (cls[author] == AccountClass::Genuine ? other_slots : bot_slots).push_back(k);
    }

    // exact retweet quotas per group, never sampled, so planted rates are hit
    // up to rounding
    std::vector<bool> is_retweet(n_tweets, false);
    auto assign_retweets = [&](std::vector<std::size_t>& slots, double rate) {
        const auto quota = static_cast<std::size_t>(
            std::llround(rate * static_cast<double>(slots.size())));
        shuffle_vec(rng, slots);
        std::size_t assigned = 0;
        for (std::size_t i = 0; i < slots.size() && assigned < quota; ++i) {
            if (slots[i] == 0) continue;  // the first tweet has no possible parent
            is_retweet[slots[i]] = true;
            ++assigned;
        }
        return assigned;
    };
    const std::size_t bot_retweets =
        assign_retweets(bot_slots, spec.retweet_rate + spec.share_gap);
    const std::size_t other_retweets = assign_retweets(other_slots, spec.retweet_rate);

    result.tweets.resize(n_tweets);
    std::vector<std::size_t> originals_so_far;
    for (std::size_t k = 0; k < n_tweets; ++k) {
        TweetNode& node = result.tweets[k];
        node.tweet_id = tweet_id(k);
        node.author_id = account_id(author_order[k % n]);
        node.created_at = times[k];
        if (is_retweet[k]) {
            node.kind = TweetKind::Retweet;
            node.parent_id =
                tweet_id(originals_so_far[uniform_index(rng, originals_so_far.size())]);
        } else {
            node.kind = TweetKind::Original;
            originals_so_far.push_back(k);
        }
    }

    // planted ground truth
    std::size_t author_count = std::min(n, n_tweets);
    std::size_t bot_authors = 0, non_reputed_authors = 0;
    json classes = json::object();
    classes["low_bot"] = json::array();
    classes["social_bot"] = json::array();
    classes["genuine"] = json::array();
    for (std::size_t k = 0; k < author_count; ++k) {
        const std::size_t i = author_order[k];
        if (cls[i] != AccountClass::Genuine) ++bot_authors;
        if (cls[i] == AccountClass::LowBot) ++non_reputed_authors;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const char* key = cls[i] == AccountClass::LowBot      ? "low_bot"
                          : cls[i] == AccountClass::SocialBot ? "social_bot"
                                                              : "genuine";
        classes[key].push_back(account_id(i));
    }

    json edge_list = json::array();
    for (const auto& [u, v] : edges)
        edge_list.push_back(json::array({account_id(u), account_id(v)}));

    const double bot_rate = bot_slots.empty()
                                ? 0.0
                                : static_cast<double>(bot_retweets) /
                                      static_cast<double>(bot_slots.size());
    const double other_rate = other_slots.empty()
                                  ? 0.0
                                  : static_cast<double>(other_retweets) /
                                        static_cast<double>(other_slots.size());

    json& ledger = result.ledger;
    ledger["seed"] = spec.seed;
    ledger["n_accounts"] = n;
    ledger["n_low_bot"] = n_low;
    ledger["n_social_bot"] = n_social;
    ledger["n_genuine"] = n - n_bots;
    ledger["bot_fraction_planted"] = spec.bot_fraction;
    ledger["non_reputed_fraction_planted"] = nr_frac;
    ledger["distinct_authors"] = author_count;
    ledger["bot_author_fraction"] =
        static_cast<double>(bot_authors) / static_cast<double>(author_count);
    ledger["non_reputed_author_fraction"] =
        static_cast<double>(non_reputed_authors) / static_cast<double>(author_count);
    ledger["n_tweets"] = n_tweets;
    ledger["n_originals"] = n_tweets - bot_retweets - other_retweets;
    ledger["n_retweets"] = bot_retweets + other_retweets;
    ledger["bot_tweets"] = bot_slots.size();
    ledger["bot_retweets"] = bot_retweets;
    ledger["other_tweets"] = other_slots.size();
    ledger["other_retweets"] = other_retweets;
    ledger["share_create_gap"] = bot_rate - other_rate;
    ledger["bot_clique"] = spec.bot_clique;
    ledger["edge_count"] = edges.size();
    ledger["edges"] = std::move(edge_list);
    ledger["classes"] = std::move(classes);
    return result;
}

void write_synthetic(const std::string& dir, const SyntheticResult& result) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir + "/accounts.jsonl", std::ios::binary);
        write_accounts(out, result.accounts);
    }
    {
        std::ofstream out(dir + "/tweets.jsonl", std::ios::binary);
        write_tweets(out, result.tweets);
    }
    {
        std::ofstream out(dir + "/ledger.json", std::ios::binary);
        out << result.ledger.dump(2) << '\n';
    }
}

}  // namespace repute
