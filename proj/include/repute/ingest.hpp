#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "repute/features.hpp"
#include "repute/graph.hpp"
#include "repute/reputation.hpp"
#include "repute/timeline.hpp"

namespace repute {

/// One account as stored in an account dump line.
struct AccountRecord {
    std::string id;
    std::string handle;
    AccountFeatures features;
    std::vector<std::string> friends;    // deduplicated at parse
    std::vector<std::string> followers;  // deduplicated at parse
    bool verified = false;
};

struct ParseIssue {
    std::size_t line_no = 0;
    std::string message;
};

struct ParseReport {
    std::vector<ParseIssue> errors;  // rejected lines, with reason
    std::size_t unknown_keys = 0;    // ignored with a warning counter

    bool ok() const { return errors.empty(); }
};

/// Parse a JSON Lines account dump. Bad lines are rejected whole and recorded
/// in the report; good lines are kept. With invert_bot_score the ingested bot
/// value is flipped to 1-x for upstream tools that emit bot likelihood
/// instead of humanness.
std::vector<AccountRecord> parse_accounts(std::istream& in, ParseReport& report,
                                          bool invert_bot_score = false);

void write_accounts(std::ostream& out, const std::vector<AccountRecord>& accounts);

/// Parse a JSON Lines tweet dump ({"tweet_id", "author_id", "parent_id",
/// "created_at", "kind"}).
std::vector<TweetNode> parse_tweets(std::istream& in, ParseReport& report);

void write_tweets(std::ostream& out, const std::vector<TweetNode>& tweets);

/// User graph with friend -> follower edge orientation. ids[i] is the account
/// id of vertex i; ids referenced only as neighbors become feature-less
/// boundary vertices.
struct UserGraph {
    DirectedGraph graph;
    std::vector<std::string> ids;
    std::size_t boundary_vertices = 0;
};

UserGraph build_user_graph(const std::vector<AccountRecord>& accounts);

enum class GraphFormat { Dot, GraphML, EdgeCsv };

GraphFormat parse_graph_format(const std::string& name);  // throws UnsupportedFormat

/// Deterministic serialization; labels, when given, must have one entry per
/// vertex. scores attaches the per-vertex metrics as attributes where the
/// format supports them.
std::string export_graph(const DirectedGraph& g, GraphFormat format,
                         const std::vector<std::string>* labels = nullptr,
                         const NodeScores* scores = nullptr);

/// Scoring output, column order fixed:
/// id,handle,a_u,a_s,a_c,a_t,a_b,R_A,R_P_out,R_P_in,R_P,R,bot_tag,reputation_tag
void write_scores_csv(std::ostream& out, const std::vector<ScoredAccount>& scores);
void write_scores_jsonl(std::ostream& out, const std::vector<ScoredAccount>& scores);

/// "2019-11-10T13:05:00Z" (or +hh:mm offset) -> unix seconds. Throws Error.
std::int64_t parse_iso8601_utc(const std::string& text);
std::string format_iso8601_utc(std::int64_t unix_seconds);

/// "+01:00" / "-05:30" / "Z" -> minutes east of UTC. Throws Error.
int parse_utc_offset(const std::string& text);

/// Shortest decimal representation that round-trips the exact double.
std::string format_double(double value);

}  // namespace repute
