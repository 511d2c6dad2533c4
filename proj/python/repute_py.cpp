#include <fstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "repute/ingest.hpp"
#include "repute/synth.hpp"

namespace py = pybind11;
using namespace repute;

namespace {

AccountFeatures features_from_dict(const py::dict& d) {
    AccountFeatures f;
    f.user = d["user"].cast<double>();
    f.sentiment = d["sentiment"].cast<double>();
    f.content = d["content"].cast<double>();
    f.temporal = d["temporal"].cast<double>();
    f.bot = d["bot"].cast<double>();
    if (!f.in_range()) throw py::value_error("features must lie in [0,1]");
    return f;
}

py::dict scores_to_dict(const NodeScores& s) {
    py::dict d;
    d["ids"] = s.ids;
    d["in_degree"] = s.in_degree;
    d["out_degree"] = s.out_degree;
    d["closeness"] = s.closeness;
    d["betweenness"] = s.betweenness;
    d["pagerank"] = s.pagerank;
    return d;
}

}  // namespace

PYBIND11_MODULE(_repute, m) {
    m.doc() = "Social-graph reputation engine core";

    py::register_exception<Error>(m, "ReputeError");

    py::class_<ScoringConfig>(m, "ScoringConfig")
        .def(py::init<>())
        .def_readwrite("omega_in", &ScoringConfig::omega_in)
        .def_readwrite("omega_out", &ScoringConfig::omega_out)
        .def_readwrite("gamma", &ScoringConfig::gamma)
        .def_readwrite("alpha", &ScoringConfig::alpha)
        .def_readwrite("tol", &ScoringConfig::tol)
        .def_readwrite("max_iter", &ScoringConfig::max_iter)
        .def("validate", &ScoringConfig::validate);

    py::class_<DirectedGraph>(m, "DirectedGraph")
        .def(py::init([](std::vector<VertexId> vertices,
                         std::vector<std::pair<VertexId, VertexId>> edges) {
                 return DirectedGraph(std::move(vertices), edges);
             }),
             py::arg("vertices"), py::arg("edges"))
        .def_property_readonly("vertex_count", &DirectedGraph::vertex_count)
        .def_property_readonly("edge_count", &DirectedGraph::edge_count)
        .def("vertices", &DirectedGraph::vertices)
        .def("has_edge", &DirectedGraph::has_edge);

    m.def("distance", [](const DirectedGraph& g, VertexId u, VertexId v) {
        return distance(g, u, v).hops;  // None when unreachable
    });
    m.def("diagonal", &diagonal);
    m.def("degrees", [](const DirectedGraph& g) {
        py::list out;
        for (const auto& d : degrees(g)) out.append(py::make_tuple(d.in, d.out, d.total()));
        return out;
    });
    m.def("closeness", py::overload_cast<const DirectedGraph&, VertexId>(&closeness));
    m.def("betweenness", py::overload_cast<const DirectedGraph&, VertexId>(&betweenness));
    m.def("pagerank", &pagerank, py::arg("graph"), py::arg("alpha") = 0.85,
          py::arg("tol") = 1e-10, py::arg("max_iter") = 1000);
    m.def("all_node_scores", [](const DirectedGraph& g, const ScoringConfig& c) {
        return scores_to_dict(all_node_scores(g, c));
    }, py::arg("graph"), py::arg("config") = ScoringConfig{});

    m.def("classify_bot", [](double score) {
        return std::string(to_string(classify_bot(score)));
    });
    m.def("classify_reputation", [](double active) {
        return std::string(to_string(classify_reputation(active)));
    });
    m.def("active_reputation", [](const py::dict& features) {
        return active_reputation(features_from_dict(features));
    });
    m.def("total_reputation", [](double active, double passive, const ScoringConfig& c) {
        return total_reputation(active, passive, c);
    }, py::arg("active"), py::arg("passive"), py::arg("config") = ScoringConfig{});

    m.def("feature_correlations", [](const std::vector<py::dict>& population) {
        std::vector<AccountFeatures> rows;
        rows.reserve(population.size());
        for (const auto& d : population) rows.push_back(features_from_dict(d));
        const CorrelationMatrix mat = feature_correlations(rows);
        py::dict out;
        for (std::size_t i = 0; i < 5; ++i) {
            py::dict row;
            for (std::size_t j = 0; j < 5; ++j) {
                row[kFeatureNames[j]] =
                    mat.entries[i][j] ? py::object(py::float_(*mat.entries[i][j]))
                                      : py::object(py::none());
            }
            out[kFeatureNames[i]] = row;
        }
        return out;
    });

    m.def("score_accounts_file", [](const std::string& path, const ScoringConfig& c,
                                    unsigned threads) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open " + path);
        ParseReport report;
        const auto accounts = parse_accounts(in, report);
        std::vector<AccountInput> inputs;
        std::unordered_map<std::string, Neighborhood> nets;
        for (const auto& rec : accounts) {
            inputs.push_back({rec.id, rec.handle, rec.features});
            nets.emplace(rec.id, Neighborhood{rec.friends, rec.followers});
        }
        py::list out;
        for (const auto& s : score_population(inputs, nets, c, threads)) {
            py::dict row;
            row["id"] = s.id;
            row["handle"] = s.handle;
            row["R_A"] = s.rep.active;
            row["R_P_out"] = s.rep.passive_out;
            row["R_P_in"] = s.rep.passive_in;
            row["R_P"] = s.rep.passive;
            row["R"] = s.rep.total;
            row["bot_tag"] = std::string(to_string(s.bot_tag));
            row["reputation_tag"] = std::string(to_string(s.reputation_tag));
            out.append(row);
        }
        return out;
    }, py::arg("path"), py::arg("config") = ScoringConfig{}, py::arg("threads") = 1);

    m.def("timeline_report_files", [](const std::string& tweets_path,
                                      const std::string& accounts_path,
                                      int utc_offset_minutes, bool per_tweet) {
        std::ifstream tin(tweets_path, std::ios::binary);
        if (!tin) throw Error("cannot open " + tweets_path);
        std::ifstream ain(accounts_path, std::ios::binary);
        if (!ain) throw Error("cannot open " + accounts_path);
        ParseReport rep;
        const auto tweets = parse_tweets(tin, rep);
        const auto accounts = parse_accounts(ain, rep);
        std::unordered_map<std::string, AccountFeatures> features_of;
        for (const auto& rec : accounts) features_of.emplace(rec.id, rec.features);
        const auto report =
            make_report(build_tree(tweets), features_of, utc_offset_minutes, per_tweet);
        py::dict d;
        d["node_count"] = report.node_count;
        d["quarantined"] = report.quarantined;
        d["distinct_accounts"] = report.distinct_accounts;
        d["bot_account_fraction"] = report.bot_accounts.fraction;
        d["non_reputed_fraction"] = report.non_reputed.fraction;
        d["share_create_gap"] = report.share_create_gap;
        d["hourly_histogram"] = report.hourly.bins;
        d["night_share"] = report.hourly.night_share;
        return d;
    }, py::arg("tweets_path"), py::arg("accounts_path"),
       py::arg("utc_offset_minutes") = 60, py::arg("per_tweet") = false);

    m.def("generate_synthetic", [](const std::string& out_dir, std::size_t n_accounts,
                                   double bot_fraction, double non_reputed_fraction,
                                   double edge_probability, bool bot_clique,
                                   std::uint64_t seed, std::size_t n_tweets,
                                   double retweet_rate, double share_gap) {
        SyntheticSpec spec;
        spec.n_accounts = n_accounts;
        spec.bot_fraction = bot_fraction;
        spec.non_reputed_fraction = non_reputed_fraction;
        spec.edge_probability = edge_probability;
        spec.bot_clique = bot_clique;
        spec.seed = seed;
        spec.n_tweets = n_tweets;
        spec.retweet_rate = retweet_rate;
        spec.share_gap = share_gap;
        write_synthetic(out_dir, generate_synthetic(spec));
    }, py::arg("out_dir"), py::arg("n_accounts") = 100, py::arg("bot_fraction") = 0.1,
       py::arg("non_reputed_fraction") = -1.0, py::arg("edge_probability") = 0.02,
       py::arg("bot_clique") = false, py::arg("seed") = 0, py::arg("n_tweets") = 0,
       py::arg("retweet_rate") = 0.5, py::arg("share_gap") = 0.05);
}
