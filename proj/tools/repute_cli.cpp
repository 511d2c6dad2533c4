#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "repute/ingest.hpp"
#include "repute/synth.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;
using namespace repute;

struct CommonOptions {
    ScoringConfig config;
    std::uint64_t seed = 0;
    unsigned threads = 1;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--omega-in", config.omega_in, "Friends-net weight")
            ->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--omega-out", config.omega_out, "Followers-net weight")
            ->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--gamma", config.gamma, "Active-vs-passive blend")
            ->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--alpha", config.alpha, "PageRank damping");
        cmd->add_option("--tol", config.tol, "PageRank L1 tolerance");
        cmd->add_option("--max-iter", config.max_iter, "PageRank iteration cap");
        cmd->add_option("--seed", seed, "Random seed");
        cmd->add_option("--threads", threads, "Worker thread cap");
    }

    void banner(const std::string& subcommand) const {
        std::cerr << "repute " << kVersion << " " << subcommand
                  << " omega_in=" << config.omega_in
                  << " omega_out=" << config.omega_out << " gamma=" << config.gamma
                  << " alpha=" << config.alpha << " tol=" << config.tol
                  << " max_iter=" << config.max_iter << " seed=" << seed
                  << " threads=" << threads << "\n";
    }
};

std::vector<AccountRecord> load_accounts(const std::string& path, bool invert_bot) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    ParseReport report;
    auto accounts = parse_accounts(in, report, invert_bot);
    for (const auto& issue : report.errors) {
        std::cerr << "warning: parse: " << path << ": " << issue.message << "\n";
    }
    if (report.unknown_keys > 0)
        std::cerr << "warning: parse: " << path << ": " << report.unknown_keys
                  << " unknown key(s) ignored\n";
    if (accounts.empty()) throw Error(path + ": no valid account records");
    return accounts;
}

std::vector<TweetNode> load_tweets(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    ParseReport report;
    auto tweets = parse_tweets(in, report);
    for (const auto& issue : report.errors) {
        std::cerr << "warning: parse: " << path << ": " << issue.message << "\n";
    }
    return tweets;
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

std::unordered_map<std::string, Neighborhood> neighborhoods_of(
    const std::vector<AccountRecord>& accounts) {
    std::unordered_map<std::string, Neighborhood> nets;
    nets.reserve(accounts.size());
    for (const auto& rec : accounts) {
        Neighborhood net{rec.friends, rec.followers};
        std::erase(net.friends, rec.id);
        std::erase(net.followers, rec.id);
        nets.emplace(rec.id, std::move(net));
    }
    return nets;
}

int run_score(const CommonOptions& opts, const std::string& accounts_path,
              const std::string& format, const std::string& out_path,
              bool invert_bot) {
    const auto accounts = load_accounts(accounts_path, invert_bot);
    std::vector<AccountInput> inputs;
    inputs.reserve(accounts.size());
    for (const auto& rec : accounts)
        inputs.push_back({rec.id, rec.handle, rec.features});
    const auto scored =
        score_population(inputs, neighborhoods_of(accounts), opts.config, opts.threads);
    std::ostringstream out;
    if (format == "csv")
        write_scores_csv(out, scored);
    else
        write_scores_jsonl(out, scored);
    write_output(out_path, out.str());
    return 0;
}

int run_classify(const CommonOptions& opts, const std::string& accounts_path,
                 const std::string& out_path, bool invert_bot) {
    (void)opts;
    const auto accounts = load_accounts(accounts_path, invert_bot);
    std::ostringstream out;
    out << "id,handle,a_b,bot_tag,R_A,reputation_tag\n";
    for (const auto& rec : accounts) {
        const double active = active_reputation(rec.features);
        out << rec.id << ',' << rec.handle << ',' << format_double(rec.features.bot)
            << ',' << to_string(classify_bot(rec.features)) << ','
            << format_double(active) << ',' << to_string(classify_reputation(active))
            << '\n';
    }
    write_output(out_path, out.str());
    return 0;
}

int run_graph(const CommonOptions& opts, const std::string& accounts_path,
              const std::string& format, const std::string& out_path) {
    const auto accounts = load_accounts(accounts_path, false);
    const UserGraph ug = build_user_graph(accounts);
    const NodeScores scores = all_node_scores(ug.graph, opts.config);
    std::ostringstream out;
    if (format == "csv") {
        out << "id,in_degree,out_degree,degree,closeness,betweenness,pagerank\n";
        for (std::size_t v = 0; v < scores.ids.size(); ++v) {
            out << ug.ids[v] << ',' << scores.in_degree[v] << ','
                << scores.out_degree[v] << ','
                << scores.in_degree[v] + scores.out_degree[v] << ','
                << format_double(scores.closeness[v]) << ','
                << format_double(scores.betweenness[v]) << ','
                << format_double(scores.pagerank[v]) << '\n';
        }
    } else if (format == "json") {
        json rows = json::array();
        for (std::size_t v = 0; v < scores.ids.size(); ++v) {
            rows.push_back({{"id", ug.ids[v]},
                            {"in_degree", scores.in_degree[v]},
                            {"out_degree", scores.out_degree[v]},
                            {"degree", scores.in_degree[v] + scores.out_degree[v]},
                            {"closeness", scores.closeness[v]},
                            {"betweenness", scores.betweenness[v]},
                            {"pagerank", scores.pagerank[v]}});
        }
        out << rows.dump(2) << '\n';
    } else {
        throw UnsupportedFormat(format);
    }
    write_output(out_path, out.str());
    return 0;
}

int run_timeline(const CommonOptions& opts, const std::string& tweets_path,
                 const std::string& accounts_path, const std::string& utc_offset,
                 bool per_tweet, const std::string& out_path,
                 const std::string& hourly_csv) {
    (void)opts;
    const auto tweets = load_tweets(tweets_path);
    const auto accounts = load_accounts(accounts_path, false);
    std::unordered_map<std::string, AccountFeatures> features_of;
    for (const auto& rec : accounts) features_of.emplace(rec.id, rec.features);

    const TimelineTree tree = build_tree(tweets);
    const int offset = parse_utc_offset(utc_offset);
    const TimelineReport report = make_report(tree, features_of, offset, per_tweet);

    json doc;
    doc["node_count"] = report.node_count;
    doc["quarantined"] = report.quarantined;
    doc["distinct_accounts"] = report.distinct_accounts;
    doc["bot_account_fraction"] = report.bot_accounts.fraction;
    doc["bot_accounts_matching"] = report.bot_accounts.matching;
    doc["known_accounts"] = report.bot_accounts.known;
    doc["unknown_accounts"] = report.bot_accounts.unknown;
    doc["non_reputed_fraction"] = report.non_reputed.fraction;
    doc["share_create_gap"] = report.share_create_gap;
    doc["hourly_histogram"] = report.hourly.bins;
    doc["night_share"] = report.hourly.night_share;
    write_output(out_path, doc.dump(2) + "\n");

    if (!hourly_csv.empty()) {
        std::ostringstream out;
        out << "hour,count\n";
        for (int h = 0; h < 24; ++h) out << h << ',' << report.hourly.bins[h] << '\n';
        write_output(hourly_csv, out.str());
    }
    return 0;
}

int run_gen(const SyntheticSpec& spec, const std::string& out_dir) {
    write_synthetic(out_dir, generate_synthetic(spec));
    return 0;
}

int run_export(const CommonOptions& opts, const std::string& accounts_path,
               const std::string& format, const std::string& out_path,
               bool with_scores) {
    const auto accounts = load_accounts(accounts_path, false);
    const UserGraph ug = build_user_graph(accounts);
    const GraphFormat fmt = parse_graph_format(format);
    std::optional<NodeScores> scores;
    if (with_scores) scores = all_node_scores(ug.graph, opts.config);
    write_output(out_path,
                 export_graph(ug.graph, fmt, &ug.ids, scores ? &*scores : nullptr));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Offline social-graph reputation engine"};
    app.require_subcommand(1);

    CommonOptions opts;

    std::string accounts_path, tweets_path, out_path = "-", out_dir = "synthetic";
    std::string format = "csv", export_format = "dot";
    std::string utc_offset = "+01:00", hourly_csv;
    bool invert_bot = false, per_tweet = false, with_scores = false;
    SyntheticSpec spec;

    auto* score = app.add_subcommand("score", "Score a population of accounts");
    score->add_option("--accounts", accounts_path, "Account JSONL file")->required();
    score->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));
    score->add_option("--out", out_path, "Output path, '-' for stdout");
    score->add_flag("--invert-bot-score", invert_bot,
                    "Ingested bot value is a bot likelihood, flip to humanness");
    opts.add_flags(score);

    auto* classify = app.add_subcommand("classify", "Tag accounts on the bot and reputation scales");
    classify->add_option("--accounts", accounts_path)->required();
    classify->add_option("--out", out_path);
    classify->add_flag("--invert-bot-score", invert_bot);
    opts.add_flags(classify);

    auto* graph = app.add_subcommand("graph", "Per-vertex node scores of the user graph");
    graph->add_option("--accounts", accounts_path)->required();
    graph->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    graph->add_option("--out", out_path);
    opts.add_flags(graph);

    auto* timeline = app.add_subcommand("timeline", "Tweet-tree forensics report");
    timeline->add_option("--tweets", tweets_path, "Tweet JSONL file")->required();
    timeline->add_option("--accounts", accounts_path)->required();
    timeline->add_option("--utc-offset", utc_offset, "Local clock offset, e.g. +01:00");
    timeline->add_flag("--per-tweet", per_tweet, "Fractions over tweets, not authors");
    timeline->add_option("--out", out_path);
    timeline->add_option("--hourly-csv", hourly_csv, "Also write the per-hour table");
    opts.add_flags(timeline);

    auto* gen = app.add_subcommand("gen", "Generate a synthetic dataset with ledger");
    gen->add_option("--out-dir", out_dir);
    gen->add_option("--seed", spec.seed);
    gen->add_option("--n-accounts", spec.n_accounts)->check(CLI::PositiveNumber);
    gen->add_option("--bot-fraction", spec.bot_fraction)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--non-reputed-fraction", spec.non_reputed_fraction);
    gen->add_option("--edge-prob", spec.edge_probability)->check(CLI::Range(0.0, 1.0));
    gen->add_flag("--bot-clique", spec.bot_clique);
    gen->add_option("--n-tweets", spec.n_tweets);
    gen->add_option("--retweet-rate", spec.retweet_rate);
    gen->add_option("--share-gap", spec.share_gap);

    auto* exp = app.add_subcommand("export", "Serialize the user graph");
    exp->add_option("--accounts", accounts_path)->required();
    exp->add_option("--format", export_format)
        ->check(CLI::IsMember({"dot", "graphml", "edge-csv"}));
    exp->add_option("--out", out_path);
    exp->add_flag("--with-scores", with_scores, "Attach node scores (GraphML)");
    opts.add_flags(exp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        opts.config.validate();
        if (gen->parsed()) {
            opts.seed = spec.seed;
            opts.banner("gen");
            return run_gen(spec, out_dir);
        }
        opts.banner(app.get_subcommands().front()->get_name());
        if (score->parsed())
            return run_score(opts, accounts_path, format, out_path, invert_bot);
        if (classify->parsed())
            return run_classify(opts, accounts_path, out_path, invert_bot);
        if (graph->parsed()) return run_graph(opts, accounts_path, format, out_path);
        if (timeline->parsed())
            return run_timeline(opts, tweets_path, accounts_path, utc_offset,
                                per_tweet, out_path, hourly_csv);
        if (exp->parsed())
            return run_export(opts, accounts_path, export_format, out_path, with_scores);
        return 1;
    } catch (const repute::Error& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 2;
    }
}
