#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "repute/errors.hpp"

namespace repute {

using VertexId = std::uint64_t;

/// Weights and iteration knobs shared across the scoring pipeline.
struct ScoringConfig {
    double omega_in = 0.75;   // weight of the friends net
    double omega_out = 0.25;  // weight of the followers net
    double gamma = 0.7;       // active-vs-passive blend
    double alpha = 0.85;      // pagerank damping
    double tol = 1e-10;       // pagerank L1 stop threshold
    std::size_t max_iter = 1000;

    /// Throws InvalidConfig on out-of-range values or omega_in + omega_out != 1.
    void validate() const;
};

/// Immutable directed graph over opaque 64-bit vertex ids.
///
/// Adjacency is stored as sorted successor lists plus a derived predecessor
/// index. Self-loops and duplicate edges are dropped at construction and
/// counted. Vertex and successor iteration order is sorted by id, so results
/// never depend on insertion order.
class DirectedGraph {
public:
    DirectedGraph() = default;
    DirectedGraph(std::vector<VertexId> vertices,
                  const std::vector<std::pair<VertexId, VertexId>>& edges);

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return verts_.empty(); }

    /// Vertex ids in ascending order; the position of an id is its dense index.
    const std::vector<VertexId>& vertices() const { return verts_; }

    VertexId id_of(std::uint32_t index) const { return verts_[index]; }
    std::uint32_t index_of(VertexId id) const;  // throws UnknownVertex
    bool contains(VertexId id) const;

    std::span<const std::uint32_t> successors(std::uint32_t index) const {
        return succ_[index];
    }
    std::span<const std::uint32_t> predecessors(std::uint32_t index) const {
        return pred_[index];
    }
    bool has_edge(VertexId u, VertexId v) const;

    std::size_t self_loops_rejected() const { return self_loops_; }
    std::size_t duplicate_edges_merged() const { return duplicates_; }

private:
    std::vector<VertexId> verts_;
    std::vector<std::vector<std::uint32_t>> succ_;
    std::vector<std::vector<std::uint32_t>> pred_;
    std::size_t edge_count_ = 0;
    std::size_t self_loops_ = 0;
    std::size_t duplicates_ = 0;
};

/// Shortest-path query result; hops is empty when the target is unreachable.
struct PathResult {
    VertexId source = 0;
    VertexId target = 0;
    std::optional<std::size_t> hops;

    bool unreachable() const { return !hops.has_value(); }
};

struct DegreeTriple {
    std::size_t in = 0;
    std::size_t out = 0;
    std::size_t total() const { return in + out; }
};

/// All six per-vertex scores, indexed like DirectedGraph::vertices().
struct NodeScores {
    std::vector<VertexId> ids;
    std::vector<std::size_t> in_degree;
    std::vector<std::size_t> out_degree;
    std::vector<double> closeness;
    std::vector<double> betweenness;
    std::vector<double> pagerank;
};

/// BFS hop counts from src to every vertex; -1 marks unreachable.
std::vector<std::int64_t> bfs_hops(const DirectedGraph& g, std::uint32_t src);

PathResult distance(const DirectedGraph& g, VertexId u, VertexId v);

/// Maximum finite shortest-path distance over ordered pairs; 0 when no
/// distinct pair is reachable. Throws EmptyGraph.
std::size_t diagonal(const DirectedGraph& g);

std::vector<DegreeTriple> degrees(const DirectedGraph& g);

/// Harmonic closeness over outgoing distances; unreachable targets add 0.
double closeness(const DirectedGraph& g, VertexId v);
std::vector<double> closeness_all(const DirectedGraph& g);

/// Betweenness with v counted as interior vertex only (Brandes accumulation).
double betweenness(const DirectedGraph& g, VertexId v);
std::vector<double> betweenness_all(const DirectedGraph& g);

/// Damped pagerank with uniform teleport; dangling mass is spread uniformly.
/// The result sums to 1. Throws EmptyGraph and NonConvergence.
std::vector<double> pagerank(const DirectedGraph& g, double alpha, double tol,
                             std::size_t max_iter);

NodeScores all_node_scores(const DirectedGraph& g, const ScoringConfig& config);

}  // namespace repute
