#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "repute/ingest.hpp"
#include "repute/synth.hpp"

using namespace repute;

TEST_CASE("parse the published sample accounts") {
    std::stringstream io;
    std::vector<AccountRecord> source;
    for (const auto& row : fixtures::sample_rows()) {
        AccountRecord rec;
        rec.id = row.handle;
        rec.handle = row.handle;
        rec.features = row.features;
        source.push_back(rec);
    }
    write_accounts(io, source);

    ParseReport report;
    const auto parsed = parse_accounts(io, report);
    CHECK(report.ok());
    REQUIRE(parsed.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(parsed[i].id == source[i].id);
        CHECK(parsed[i].features.as_array() == source[i].features.as_array());
    }
}

TEST_CASE("feature range violations reject the line, not the file") {
    std::stringstream in(
        R"({"id": "good", "handle": "good", "features": {"user": 0.5, "sentiment": 0.5, "content": 0.5, "temporal": 0.5, "bot": 0.5}})"
        "\n"
        R"({"id": "bad", "handle": "bad", "features": {"user": 0.5, "sentiment": 0.5, "content": 0.5, "temporal": 0.5, "bot": 1.3}})"
        "\n"
        R"({"id": "good2", "handle": "good2", "features": {"user": 0.1, "sentiment": 0.1, "content": 0.1, "temporal": 0.1, "bot": 0.1}})"
        "\n");
    ParseReport report;
    const auto parsed = parse_accounts(in, report);
    CHECK(parsed.size() == 2);
    REQUIRE(report.errors.size() == 1);
    CHECK(report.errors[0].line_no == 2);
    CHECK(report.errors[0].message.find("bot") != std::string::npos);
}

TEST_CASE("malformed lines and duplicates are reported with line numbers") {
    std::stringstream in(
        "not json at all\n"
        R"({"id": "a", "features": {"user": 0.5, "sentiment": 0.5, "content": 0.5, "temporal": 0.5, "bot": 0.5}})"
        "\n"
        R"({"id": "a", "features": {"user": 0.5, "sentiment": 0.5, "content": 0.5, "temporal": 0.5, "bot": 0.5}})"
        "\n");
    ParseReport report;
    const auto parsed = parse_accounts(in, report);
    CHECK(parsed.size() == 1);
    CHECK(report.errors.size() == 2);
    CHECK(report.errors[0].line_no == 1);
    CHECK(report.errors[1].line_no == 3);
}

TEST_CASE("unknown keys are counted, not fatal") {
    std::stringstream in(
        R"({"id": "a", "surprise": 1, "features": {"user": 0.5, "sentiment": 0.5, "content": 0.5, "temporal": 0.5, "bot": 0.5, "extra": 0.9}})"
        "\n");
    ParseReport report;
    const auto parsed = parse_accounts(in, report);
    CHECK(parsed.size() == 1);
    CHECK(report.unknown_keys == 2);
}

TEST_CASE("bot score inversion switch") {
    std::stringstream in(
        R"({"id": "a", "features": {"user": 0.5, "sentiment": 0.5, "content": 0.5, "temporal": 0.5, "bot": 0.9}})"
        "\n");
    ParseReport report;
    const auto parsed = parse_accounts(in, report, true);
    CHECK(parsed[0].features.bot == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("account round trip is bit exact") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<AccountRecord> source;
    for (int i = 0; i < 500; ++i) {
        AccountRecord rec;
        rec.id = "acct" + std::to_string(i);
        rec.handle = "handle_" + std::to_string(i);
        rec.features = {unit(rng), unit(rng), unit(rng), unit(rng), unit(rng)};
        rec.friends = {"acct" + std::to_string(rng() % 500)};
        rec.followers = {"acct" + std::to_string(rng() % 500)};
        rec.verified = rng() % 2 == 0;
        std::erase(rec.friends, rec.id);
        std::erase(rec.followers, rec.id);
        source.push_back(rec);
    }
    std::stringstream io;
    write_accounts(io, source);
    ParseReport report;
    const auto parsed = parse_accounts(io, report);
    CHECK(report.ok());
    REQUIRE(parsed.size() == source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        CHECK(parsed[i].id == source[i].id);
        CHECK(parsed[i].features.as_array() == source[i].features.as_array());
        CHECK(parsed[i].friends == source[i].friends);
        CHECK(parsed[i].followers == source[i].followers);
        CHECK(parsed[i].verified == source[i].verified);
    }
}

TEST_CASE("tweet round trip") {
    std::vector<TweetNode> source{
        {"t0", "a", std::nullopt, 1573171200, TweetKind::Original},
        {"t1", "b", "t0", 1573171260, TweetKind::Retweet},
    };
    std::stringstream io;
    write_tweets(io, source);
    ParseReport report;
    const auto parsed = parse_tweets(io, report);
    CHECK(report.ok());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].created_at == source[0].created_at);
    CHECK(parsed[1].parent_id == source[1].parent_id);
    CHECK(parsed[1].kind == TweetKind::Retweet);
}

TEST_CASE("timestamp parsing") {
    CHECK(parse_iso8601_utc("1970-01-01T00:00:00Z") == 0);
    CHECK(parse_iso8601_utc("2019-11-10T12:00:00Z") ==
          parse_iso8601_utc("2019-11-10T13:00:00+01:00"));
    for (std::int64_t t : {0L, 1573171200L, 86399L, 1700000000L}) {
        CHECK(parse_iso8601_utc(format_iso8601_utc(t)) == t);
    }
    CHECK_THROWS_AS(parse_iso8601_utc("yesterday"), Error);
    CHECK(parse_utc_offset("+01:00") == 60);
    CHECK(parse_utc_offset("-05:30") == -330);
    CHECK(parse_utc_offset("Z") == 0);
    CHECK_THROWS_AS(parse_utc_offset("later"), Error);
}

TEST_CASE("user graph orientation is friend to follower") {
    AccountRecord v;
    v.id = "v";
    v.features = {0.5, 0.5, 0.5, 0.5, 0.5};
    v.friends = {"a"};
    v.followers = {"b"};
    const auto ug = build_user_graph({v});
    CHECK(ug.ids == std::vector<std::string>{"a", "b", "v"});
    CHECK(ug.boundary_vertices == 2);
    const auto at = [&](const std::string& id) {
        return static_cast<VertexId>(
            std::find(ug.ids.begin(), ug.ids.end(), id) - ug.ids.begin());
    };
    CHECK(ug.graph.has_edge(at("a"), at("v")));
    CHECK(ug.graph.has_edge(at("v"), at("b")));
    CHECK(ug.graph.edge_count() == 2);
}

TEST_CASE("mutual follow yields both directed edges once") {
    AccountRecord a, b;
    a.id = "a";
    b.id = "b";
    a.friends = {"b"};
    a.followers = {"b"};
    b.friends = {"a"};
    b.followers = {"a"};
    const auto ug = build_user_graph({a, b});
    CHECK(ug.graph.edge_count() == 2);
    CHECK(ug.graph.has_edge(0, 1));
    CHECK(ug.graph.has_edge(1, 0));
}

TEST_CASE("user graph does not depend on record order") {
    SyntheticSpec spec;
    spec.n_accounts = 50;
    spec.seed = 3;
    spec.edge_probability = 0.08;
    auto data = generate_synthetic(spec);
    const auto ug = build_user_graph(data.accounts);
    std::mt19937_64 rng(8);
    std::shuffle(data.accounts.begin(), data.accounts.end(), rng);
    const auto ug2 = build_user_graph(data.accounts);
    CHECK(ug.ids == ug2.ids);
    CHECK(export_graph(ug.graph, GraphFormat::EdgeCsv, &ug.ids) ==
          export_graph(ug2.graph, GraphFormat::EdgeCsv, &ug2.ids));
}

TEST_CASE("graph export formats") {
    DirectedGraph g({0, 1}, {{0, 1}});
    const std::vector<std::string> labels{"alpha", "beta"};

    const std::string dot = export_graph(g, GraphFormat::Dot, &labels);
    CHECK(dot.find("\"alpha\" -> \"beta\";") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 1);

    const std::string csv = export_graph(g, GraphFormat::EdgeCsv, &labels);
    CHECK(csv == "source,target\nalpha,beta\n");

    const auto scores = all_node_scores(g, ScoringConfig{});
    const std::string gml = export_graph(g, GraphFormat::GraphML, &labels, &scores);
    CHECK(gml.find("<edge source=\"alpha\" target=\"beta\"/>") != std::string::npos);
    CHECK(gml.find("pagerank") != std::string::npos);

    const DirectedGraph empty;
    CHECK(export_graph(empty, GraphFormat::Dot) == "digraph G {\n}\n");
    CHECK(export_graph(empty, GraphFormat::EdgeCsv) == "source,target\n");

    CHECK_THROWS_AS(parse_graph_format("png"), UnsupportedFormat);
}

TEST_CASE("edge-csv export round trips to the same edge set") {
    SyntheticSpec spec;
    spec.n_accounts = 30;
    spec.seed = 9;
    spec.edge_probability = 0.1;
    const auto data = generate_synthetic(spec);
    const auto ug = build_user_graph(data.accounts);

    std::set<std::pair<std::string, std::string>> exported;
    std::istringstream csv(export_graph(ug.graph, GraphFormat::EdgeCsv, &ug.ids));
    std::string line;
    std::getline(csv, line);  // header
    while (std::getline(csv, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        exported.emplace(line.substr(0, comma), line.substr(comma + 1));
    }

    std::set<std::pair<std::string, std::string>> expected;
    for (std::uint32_t u = 0; u < ug.graph.vertex_count(); ++u)
        for (std::uint32_t v : ug.graph.successors(u))
            expected.emplace(ug.ids[u], ug.ids[v]);
    CHECK(exported == expected);
}

TEST_CASE("generator determinism and ledger") {
    SyntheticSpec spec;
    spec.n_accounts = 80;
    spec.seed = 7;
    spec.bot_fraction = 0.25;
    spec.edge_probability = 0.05;

    const auto a = generate_synthetic(spec);
    const auto b = generate_synthetic(spec);
    std::stringstream sa, sb;
    write_accounts(sa, a.accounts);
    write_accounts(sb, b.accounts);
    CHECK(sa.str() == sb.str());
    std::stringstream ta, tb;
    write_tweets(ta, a.tweets);
    write_tweets(tb, b.tweets);
    CHECK(ta.str() == tb.str());
    CHECK(a.ledger == b.ledger);

    spec.seed = 8;
    const auto c = generate_synthetic(spec);
    CHECK(a.ledger.at("edges") != c.ledger.at("edges"));

    // the user graph equals the ledger's planted edge set
    const auto ug = build_user_graph(a.accounts);
    std::set<std::pair<std::string, std::string>> graph_edges;
    for (std::uint32_t u = 0; u < ug.graph.vertex_count(); ++u)
        for (std::uint32_t v : ug.graph.successors(u))
            graph_edges.emplace(ug.ids[u], ug.ids[v]);
    std::set<std::pair<std::string, std::string>> ledger_edges;
    for (const auto& e : a.ledger.at("edges"))
        ledger_edges.emplace(e[0].get<std::string>(), e[1].get<std::string>());
    CHECK(graph_edges == ledger_edges);
}

TEST_CASE("bot clique raises bot pagerank") {
    SyntheticSpec spec;
    spec.n_accounts = 60;
    spec.seed = 21;
    spec.bot_fraction = 0.2;
    spec.edge_probability = 0.06;

    auto mean_bot_pagerank = [](const SyntheticResult& data) {
        const auto ug = build_user_graph(data.accounts);
        const auto pr =
            pagerank(ug.graph, 0.85, 1e-12, 5000);
        std::set<std::string> bots;
        for (const auto& id : data.ledger.at("classes").at("low_bot"))
            bots.insert(id.get<std::string>());
        for (const auto& id : data.ledger.at("classes").at("social_bot"))
            bots.insert(id.get<std::string>());
        double sum = 0.0;
        std::size_t count = 0;
        for (std::uint32_t v = 0; v < ug.graph.vertex_count(); ++v) {
            if (bots.count(ug.ids[v])) {
                sum += pr[v];
                ++count;
            }
        }
        return sum / static_cast<double>(count);
    };

    const auto baseline = generate_synthetic(spec);
    spec.bot_clique = true;
    const auto clique = generate_synthetic(spec);

    // the induced bot subgraph is complete
    const auto ug = build_user_graph(clique.accounts);
    std::vector<std::string> bots;
    for (const auto& id : clique.ledger.at("classes").at("low_bot"))
        bots.push_back(id.get<std::string>());
    const auto at = [&](const std::string& id) {
        return static_cast<VertexId>(
            std::find(ug.ids.begin(), ug.ids.end(), id) - ug.ids.begin());
    };
    for (const auto& x : bots)
        for (const auto& y : bots)
            if (x != y) CHECK(ug.graph.has_edge(at(x), at(y)));

    CHECK(mean_bot_pagerank(clique) > mean_bot_pagerank(baseline));
}

TEST_CASE("invalid specs are rejected") {
    SyntheticSpec spec;
    spec.bot_fraction = 0.1;
    spec.non_reputed_fraction = 0.5;
    CHECK_THROWS_AS(generate_synthetic(spec), InvalidSpec);
    spec.non_reputed_fraction = -1.0;
    spec.retweet_rate = 1.2;
    CHECK_THROWS_AS(generate_synthetic(spec), InvalidSpec);
}
