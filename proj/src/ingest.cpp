#include "repute/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace repute {

using nlohmann::json;

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

double feature_value(const json& obj, const char* key, std::size_t line_no) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_number())
        throw MalformedLine(line_no, std::string("missing numeric feature '") + key + "'");
    const double x = it->get<double>();
    if (!(x >= 0.0 && x <= 1.0)) throw FeatureOutOfRange(line_no, key, x);
    return x;
}

std::vector<std::string> id_list(const json& obj, const char* key) {
    std::vector<std::string> ids;
    const auto it = obj.find(key);
    if (it == obj.end()) return ids;
    for (const auto& v : *it) ids.push_back(v.get<std::string>());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::size_t count_unknown_keys(const json& obj,
                               std::initializer_list<const char*> known) {
    std::size_t unknown = 0;
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find_if(known.begin(), known.end(), [&](const char* k) {
                return key == k;
            }) == known.end())
            ++unknown;
    }
    return unknown;
}

void csv_field(std::ostream& out, const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        out << s;
        return;
    }
    out << '"';
    for (char c : s) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

}  // namespace

std::vector<AccountRecord> parse_accounts(std::istream& in, ParseReport& report,
                                          bool invert_bot_score) {
    std::vector<AccountRecord> accounts;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            const json obj = json::parse(line);
            if (!obj.is_object()) throw MalformedLine(line_no, "not a JSON object");
            AccountRecord rec;
            rec.id = obj.at("id").get<std::string>();
            if (!seen_ids.insert(rec.id).second)
                throw MalformedLine(line_no, "duplicate account id " + rec.id);
            rec.handle = obj.value("handle", rec.id);
            const auto fit = obj.find("features");
            if (fit == obj.end() || !fit->is_object())
                throw MalformedLine(line_no, "missing 'features' object");
            rec.features.user = feature_value(*fit, "user", line_no);
            rec.features.sentiment = feature_value(*fit, "sentiment", line_no);
            rec.features.content = feature_value(*fit, "content", line_no);
            rec.features.temporal = feature_value(*fit, "temporal", line_no);
            rec.features.bot = feature_value(*fit, "bot", line_no);
            if (invert_bot_score) rec.features.bot = 1.0 - rec.features.bot;
            rec.friends = id_list(obj, "friends");
            rec.followers = id_list(obj, "followers");
            rec.verified = obj.value("verified", false);
            report.unknown_keys += count_unknown_keys(
                obj, {"id", "handle", "features", "friends", "followers", "verified"});
            report.unknown_keys += count_unknown_keys(
                *fit, {"user", "sentiment", "content", "temporal", "bot"});
            accounts.push_back(std::move(rec));
        } catch (const Error& e) {
            report.errors.push_back({line_no, e.what()});
        } catch (const json::exception& e) {
            report.errors.push_back({line_no, e.what()});
        }
    }
    return accounts;
}

void write_accounts(std::ostream& out, const std::vector<AccountRecord>& accounts) {
    for (const auto& rec : accounts) {
        json obj;
        obj["id"] = rec.id;
        obj["handle"] = rec.handle;
        obj["features"] = {{"user", rec.features.user},
                           {"sentiment", rec.features.sentiment},
                           {"content", rec.features.content},
                           {"temporal", rec.features.temporal},
                           {"bot", rec.features.bot}};
        obj["friends"] = rec.friends;
        obj["followers"] = rec.followers;
        obj["verified"] = rec.verified;
        out << obj.dump() << '\n';
    }
}

std::vector<TweetNode> parse_tweets(std::istream& in, ParseReport& report) {
    std::vector<TweetNode> tweets;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            const json obj = json::parse(line);
            TweetNode node;
            node.tweet_id = obj.at("tweet_id").get<std::string>();
            node.author_id = obj.at("author_id").get<std::string>();
            const auto pit = obj.find("parent_id");
            if (pit != obj.end() && !pit->is_null())
                node.parent_id = pit->get<std::string>();
            node.created_at = parse_iso8601_utc(obj.at("created_at").get<std::string>());
            const std::string kind = obj.at("kind").get<std::string>();
            if (kind == "original")
                node.kind = TweetKind::Original;
            else if (kind == "retweet")
                node.kind = TweetKind::Retweet;
            else
                throw MalformedLine(line_no, "unknown kind '" + kind + "'");
            if ((node.kind == TweetKind::Retweet) != node.parent_id.has_value())
                throw MalformedLine(line_no, "kind disagrees with parent_id");
            report.unknown_keys += count_unknown_keys(
                obj, {"tweet_id", "author_id", "parent_id", "created_at", "kind"});
            tweets.push_back(std::move(node));
        } catch (const Error& e) {
            report.errors.push_back({line_no, e.what()});
        } catch (const json::exception& e) {
            report.errors.push_back({line_no, e.what()});
        }
    }
    return tweets;
}

void write_tweets(std::ostream& out, const std::vector<TweetNode>& tweets) {
    for (const auto& node : tweets) {
        json obj;
        obj["tweet_id"] = node.tweet_id;
        obj["author_id"] = node.author_id;
        if (node.parent_id)
            obj["parent_id"] = *node.parent_id;
        else
            obj["parent_id"] = nullptr;
        obj["created_at"] = format_iso8601_utc(node.created_at);
        obj["kind"] = to_string(node.kind);
        out << obj.dump() << '\n';
    }
}

UserGraph build_user_graph(const std::vector<AccountRecord>& accounts) {
    std::set<std::string> all_ids;
    for (const auto& rec : accounts) {
        all_ids.insert(rec.id);
        all_ids.insert(rec.friends.begin(), rec.friends.end());
        all_ids.insert(rec.followers.begin(), rec.followers.end());
    }
    UserGraph ug;
    ug.ids.assign(all_ids.begin(), all_ids.end());
    std::unordered_map<std::string, VertexId> index;
    index.reserve(ug.ids.size());
    for (std::size_t i = 0; i < ug.ids.size(); ++i) index.emplace(ug.ids[i], i);
    ug.boundary_vertices = ug.ids.size() - accounts.size();

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& rec : accounts) {
        const VertexId self = index.at(rec.id);
        // information flows friend -> follower
        for (const auto& f : rec.friends) edges.emplace_back(index.at(f), self);
        for (const auto& f : rec.followers) edges.emplace_back(self, index.at(f));
    }
    std::vector<VertexId> vertices(ug.ids.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) vertices[i] = i;
    ug.graph = DirectedGraph(std::move(vertices), edges);
    return ug;
}

void write_scores_csv(std::ostream& out, const std::vector<ScoredAccount>& scores) {
    out << "id,handle,a_u,a_s,a_c,a_t,a_b,R_A,R_P_out,R_P_in,R_P,R,"
           "bot_tag,reputation_tag\n";
    for (const auto& s : scores) {
        csv_field(out, s.id);
        out << ',';
        csv_field(out, s.handle);
        for (double x : {s.features.user, s.features.sentiment, s.features.content,
                         s.features.temporal, s.features.bot, s.rep.active,
                         s.rep.passive_out, s.rep.passive_in, s.rep.passive,
                         s.rep.total}) {
            out << ',' << format_double(x);
        }
        out << ',' << to_string(s.bot_tag) << ',' << to_string(s.reputation_tag)
            << '\n';
    }
}

void write_scores_jsonl(std::ostream& out, const std::vector<ScoredAccount>& scores) {
    for (const auto& s : scores) {
        json obj;
        obj["id"] = s.id;
        obj["handle"] = s.handle;
        obj["a_u"] = s.features.user;
        obj["a_s"] = s.features.sentiment;
        obj["a_c"] = s.features.content;
        obj["a_t"] = s.features.temporal;
        obj["a_b"] = s.features.bot;
        obj["R_A"] = s.rep.active;
        obj["R_P_out"] = s.rep.passive_out;
        obj["R_P_in"] = s.rep.passive_in;
        obj["R_P"] = s.rep.passive;
        obj["R"] = s.rep.total;
        obj["bot_tag"] = to_string(s.bot_tag);
        obj["reputation_tag"] = to_string(s.reputation_tag);
        out << obj.dump() << '\n';
    }
}

namespace {

// Howard Hinnant's civil-date algorithms, days since 1970-01-01.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

}  // namespace

std::int64_t parse_iso8601_utc(const std::string& text) {
    int y, mo, d, h, mi, s;
    char tail[16] = {0};
    const int fields =
        std::sscanf(text.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%15s", &y, &mo, &d, &h,
                    &mi, &s, tail);
    if (fields < 6) throw Error("bad timestamp '" + text + "'");
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || s > 60)
        throw Error("bad timestamp '" + text + "'");
    int offset_minutes = 0;
    if (fields == 7 && tail[0] != '\0' && std::string(tail) != "Z")
        offset_minutes = parse_utc_offset(tail);
    return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + s -
           std::int64_t{60} * offset_minutes;
}

std::string format_iso8601_utc(std::int64_t unix_seconds) {
    std::int64_t days = unix_seconds / 86400;
    std::int64_t rem = unix_seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d,
                  static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                  static_cast<int>(rem % 60));
    return buf;
}

int parse_utc_offset(const std::string& text) {
    if (text == "Z" || text == "z") return 0;
    int h, m;
    char sign;
    if (std::sscanf(text.c_str(), "%c%2d:%2d", &sign, &h, &m) != 3 ||
        (sign != '+' && sign != '-') || h > 14 || m > 59)
        throw Error("bad UTC offset '" + text + "'");
    const int minutes = h * 60 + m;
    return sign == '-' ? -minutes : minutes;
}

}  // namespace repute
