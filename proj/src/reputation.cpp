#include "repute/reputation.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace repute {

const char* to_string(ReputationTag tag) {
    switch (tag) {
        case ReputationTag::NonReputed: return "non-reputed";
        case ReputationTag::Doubtful: return "doubtful";
        case ReputationTag::Trustworthy: return "trustworthy";
        case ReputationTag::Reputed: return "reputed";
    }
    return "?";
}

double active_reputation(const AccountFeatures& f) {
    double log_sum = 0.0;
    for (double x : f.as_array()) {
        if (x == 0.0) return 0.0;
        log_sum += std::log(x);
    }
    return std::exp(log_sum / 5.0);
}

double total_reputation(double r_active, double r_passive, const ScoringConfig& config) {
    return config.gamma * r_active + (1.0 - config.gamma) * r_passive;
}

ReputationTag classify_reputation(double r_active) {
    if (r_active <= 0.35) return ReputationTag::NonReputed;
    if (r_active <= 0.5) return ReputationTag::Doubtful;
    if (r_active <= 0.85) return ReputationTag::Trustworthy;
    return ReputationTag::Reputed;
}

namespace {

struct NetMean {
    double mean = 0.0;
    bool empty = false;
    std::size_t missing = 0;
};

NetMean net_mean(const std::vector<std::string>& ids, double fallback,
                 const std::unordered_map<std::string, AccountFeatures>& features_of) {
    double sum = 0.0;
    std::size_t count = 0;
    NetMean r;
    for (const auto& id : ids) {
        const auto it = features_of.find(id);
        if (it == features_of.end()) {
            ++r.missing;
            continue;
        }
        sum += active_reputation(it->second);
        ++count;
    }
    if (count == 0) {
        r.mean = fallback;
        r.empty = true;
    } else {
        r.mean = sum / static_cast<double>(count);
    }
    return r;
}

}  // namespace

PassiveResult passive_reputation(
    const AccountFeatures& own, const Neighborhood& net,
    const std::unordered_map<std::string, AccountFeatures>& features_of,
    const ScoringConfig& config) {
    config.validate();
    const double own_active = active_reputation(own);
    const NetMean in = net_mean(net.friends, own_active, features_of);
    const NetMean out = net_mean(net.followers, own_active, features_of);
    PassiveResult r;
    r.passive_in = in.mean;
    r.passive_out = out.mean;
    r.passive = config.omega_in * in.mean + config.omega_out * out.mean;
    r.empty_friends = in.empty;
    r.empty_followers = out.empty;
    r.missing_neighbors = in.missing + out.missing;
    return r;
}

std::vector<ScoredAccount> score_population(
    const std::vector<AccountInput>& accounts,
    const std::unordered_map<std::string, Neighborhood>& neighborhoods,
    const ScoringConfig& config, unsigned threads) {
    config.validate();

    // phase 1: all active reputations
    std::unordered_map<std::string, AccountFeatures> features_of;
    features_of.reserve(accounts.size());
    for (const auto& a : accounts) features_of.emplace(a.id, a.features);

    static const Neighborhood kEmptyNet;
    std::vector<ScoredAccount> out(accounts.size());

    // phase 2: passive and total, over disjoint slots per worker
    auto score_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const AccountInput& a = accounts[i];
            const auto net_it = neighborhoods.find(a.id);
            const Neighborhood& net =
                net_it == neighborhoods.end() ? kEmptyNet : net_it->second;
            const PassiveResult p = passive_reputation(a.features, net, features_of, config);

            ScoredAccount& s = out[i];
            s.id = a.id;
            s.handle = a.handle;
            s.features = a.features;
            s.rep.active = active_reputation(a.features);
            s.rep.passive_in = p.passive_in;
            s.rep.passive_out = p.passive_out;
            s.rep.passive = p.passive;
            s.rep.total = total_reputation(s.rep.active, s.rep.passive, config);
            s.bot_tag = classify_bot(a.features);
            s.reputation_tag = classify_reputation(s.rep.active);
            s.empty_friends = p.empty_friends;
            s.empty_followers = p.empty_followers;
            s.missing_neighbors = p.missing_neighbors;
        }
    };

    if (threads <= 1 || accounts.size() < 2) {
        score_range(0, accounts.size());
    } else {
        const std::size_t n = accounts.size();
        const unsigned workers = std::min<std::size_t>(threads, n);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (unsigned t = 0; t < workers; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(score_range, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    std::sort(out.begin(), out.end(), [](const ScoredAccount& a, const ScoredAccount& b) {
        if (a.rep.total != b.rep.total) return a.rep.total < b.rep.total;
        return a.id < b.id;
    });
    return out;
}

}  // namespace repute
