#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "repute/features.hpp"
#include "repute/graph.hpp"

namespace repute {

enum class ReputationTag { NonReputed, Doubtful, Trustworthy, Reputed };

const char* to_string(ReputationTag tag);

/// The five reputation versions of one account.
struct ReputationVector {
    double active = 0.0;       // R_A
    double passive_out = 0.0;  // mean over followers net
    double passive_in = 0.0;   // mean over friends net
    double passive = 0.0;      // omega_in * passive_in + omega_out * passive_out
    double total = 0.0;        // gamma * active + (1 - gamma) * passive
};

/// Friends (accounts v follows, information sources) and followers
/// (accounts following v). Deduplicated, never containing the account itself.
struct Neighborhood {
    std::vector<std::string> friends;
    std::vector<std::string> followers;
};

/// Geometric mean of the five features; exactly 0 when any feature is 0,
/// otherwise evaluated in log space.
double active_reputation(const AccountFeatures& f);

double total_reputation(double r_active, double r_passive, const ScoringConfig& config);

/// Bucket an active reputation: [0,0.35] non-reputed, (0.35,0.5] doubtful,
/// (0.5,0.85] trustworthy, (0.85,1] reputed.
ReputationTag classify_reputation(double r_active);

struct PassiveResult {
    double passive_in = 0.0;
    double passive_out = 0.0;
    double passive = 0.0;
    bool empty_friends = false;    // friends net empty, fell back to own R_A
    bool empty_followers = false;  // followers net empty, fell back to own R_A
    std::size_t missing_neighbors = 0;  // neighbor ids without features, skipped
};

/// One-hop passive reputation: per-net mean of the neighbors' ACTIVE
/// reputations, no recursion. A net with no usable neighbor falls back to the
/// account's own R_A and raises the matching flag.
PassiveResult passive_reputation(
    const AccountFeatures& own, const Neighborhood& net,
    const std::unordered_map<std::string, AccountFeatures>& features_of,
    const ScoringConfig& config);

struct AccountInput {
    std::string id;
    std::string handle;
    AccountFeatures features;
};

struct ScoredAccount {
    std::string id;
    std::string handle;
    AccountFeatures features;
    ReputationVector rep;
    BotTag bot_tag = BotTag::Real;
    ReputationTag reputation_tag = ReputationTag::NonReputed;
    bool empty_friends = false;
    bool empty_followers = false;
    std::size_t missing_neighbors = 0;
};

/// Score every account: phase 1 computes all active reputations, phase 2 the
/// passive and total ones against the immutable phase-1 results. Output is
/// sorted by total reputation, ties by id, and does not depend on `threads`.
std::vector<ScoredAccount> score_population(
    const std::vector<AccountInput>& accounts,
    const std::unordered_map<std::string, Neighborhood>& neighborhoods,
    const ScoringConfig& config, unsigned threads = 1);

}  // namespace repute
