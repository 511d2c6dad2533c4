#include "repute/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stack>

namespace repute {

void ScoringConfig::validate() const {
    if (omega_in < 0.0 || omega_in > 1.0 || omega_out < 0.0 || omega_out > 1.0)
        throw InvalidConfig("omega weights must lie in [0,1]");
    if (std::abs(omega_in + omega_out - 1.0) > 1e-9)
        throw InvalidConfig("omega_in + omega_out must equal 1");
    if (gamma < 0.0 || gamma > 1.0)
        throw InvalidConfig("gamma must lie in [0,1]");
    if (alpha <= 0.0 || alpha >= 1.0)
        throw InvalidConfig("alpha must lie in (0,1)");
    if (tol <= 0.0)
        throw InvalidConfig("tol must be positive");
    if (max_iter == 0)
        throw InvalidConfig("max_iter must be at least 1");
}

DirectedGraph::DirectedGraph(std::vector<VertexId> vertices,
                             const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    verts_ = std::move(vertices);

    succ_.resize(verts_.size());
    pred_.resize(verts_.size());
    for (const auto& [u, v] : edges) {
        if (u == v) {
            ++self_loops_;
            continue;
        }
        succ_[index_of(u)].push_back(index_of(v));
    }
    for (std::uint32_t u = 0; u < succ_.size(); ++u) {
        auto& out = succ_[u];
        std::sort(out.begin(), out.end());
        const auto last = std::unique(out.begin(), out.end());
        duplicates_ += static_cast<std::size_t>(out.end() - last);
        out.erase(last, out.end());
        edge_count_ += out.size();
        for (std::uint32_t v : out) pred_[v].push_back(u);
    }
    // pred lists end up sorted because sources are visited in ascending order
}

std::uint32_t DirectedGraph::index_of(VertexId id) const {
    const auto it = std::lower_bound(verts_.begin(), verts_.end(), id);
    if (it == verts_.end() || *it != id) throw UnknownVertex(id);
    return static_cast<std::uint32_t>(it - verts_.begin());
}

bool DirectedGraph::contains(VertexId id) const {
    return std::binary_search(verts_.begin(), verts_.end(), id);
}

bool DirectedGraph::has_edge(VertexId u, VertexId v) const {
    const auto& out = succ_[index_of(u)];
    return std::binary_search(out.begin(), out.end(), index_of(v));
}

std::vector<std::int64_t> bfs_hops(const DirectedGraph& g, std::uint32_t src) {
    std::vector<std::int64_t> dist(g.vertex_count(), -1);
    std::deque<std::uint32_t> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t w : g.successors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

PathResult distance(const DirectedGraph& g, VertexId u, VertexId v) {
    const auto dist = bfs_hops(g, g.index_of(u));
    const std::int64_t d = dist[g.index_of(v)];
    PathResult r{u, v, std::nullopt};
    if (d >= 0) r.hops = static_cast<std::size_t>(d);
    return r;
}

std::size_t diagonal(const DirectedGraph& g) {
    if (g.empty()) throw EmptyGraph();
    std::int64_t best = 0;
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        for (std::int64_t d : bfs_hops(g, s)) best = std::max(best, d);
    }
    return static_cast<std::size_t>(best);
}

std::vector<DegreeTriple> degrees(const DirectedGraph& g) {
    std::vector<DegreeTriple> out(g.vertex_count());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        out[v].in = g.predecessors(v).size();
        out[v].out = g.successors(v).size();
    }
    return out;
}

std::vector<double> closeness_all(const DirectedGraph& g) {
    std::vector<double> out(g.vertex_count(), 0.0);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        double sum = 0.0;
        for (std::int64_t d : bfs_hops(g, v)) {
            if (d > 0) sum += 1.0 / static_cast<double>(d);
        }
        out[v] = sum;
    }
    return out;
}

double closeness(const DirectedGraph& g, VertexId v) {
    const std::uint32_t src = g.index_of(v);
    double sum = 0.0;
    for (std::int64_t d : bfs_hops(g, src)) {
        if (d > 0) sum += 1.0 / static_cast<double>(d);
    }
    return sum;
}

std::vector<double> betweenness_all(const DirectedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> score(n, 0.0);

    // Brandes: one BFS per source, then dependency accumulation in reverse
    // visit order.
    std::vector<std::int64_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::vector<std::uint32_t>> parents(n);
    std::vector<std::uint32_t> order;
    order.reserve(n);

    for (std::uint32_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : parents) p.clear();
        order.clear();

        std::deque<std::uint32_t> queue{s};
        dist[s] = 0;
        sigma[s] = 1.0;
        while (!queue.empty()) {
            const std::uint32_t u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (std::uint32_t w : g.successors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[u] + 1) {
                    sigma[w] += sigma[u];
                    parents[w].push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::uint32_t w = *it;
            for (std::uint32_t p : parents[w]) {
                delta[p] += sigma[p] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) score[w] += delta[w];
        }
    }
    return score;
}

double betweenness(const DirectedGraph& g, VertexId v) {
    return betweenness_all(g)[g.index_of(v)];
}

std::vector<double> pagerank(const DirectedGraph& g, double alpha, double tol,
                             std::size_t max_iter) {
    if (g.empty()) throw EmptyGraph();
    if (alpha <= 0.0 || alpha >= 1.0) throw InvalidConfig("alpha must lie in (0,1)");
    if (tol <= 0.0) throw InvalidConfig("tol must be positive");
    if (max_iter == 0) throw InvalidConfig("max_iter must be at least 1");

    const std::size_t n = g.vertex_count();
    const double uniform = 1.0 / static_cast<double>(n);
    std::vector<double> pr(n, uniform), next(n);

    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        double dangling = 0.0;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (g.successors(v).empty()) dangling += pr[v];
        }
        const double base = (1.0 - alpha) * uniform + alpha * dangling * uniform;
        for (std::uint32_t v = 0; v < n; ++v) {
            double in_mass = 0.0;
            for (std::uint32_t w : g.predecessors(v)) {
                in_mass += pr[w] / static_cast<double>(g.successors(w).size());
            }
            next[v] = base + alpha * in_mass;
        }
        double residual = 0.0;
        for (std::uint32_t v = 0; v < n; ++v) residual += std::abs(next[v] - pr[v]);
        pr.swap(next);
        if (residual < tol) {
            const double total = std::accumulate(pr.begin(), pr.end(), 0.0);
            for (double& x : pr) x /= total;
            return pr;
        }
    }
    double residual = 0.0;
    for (std::uint32_t v = 0; v < n; ++v) residual += std::abs(pr[v] - next[v]);
    throw NonConvergence(max_iter, residual);
}

NodeScores all_node_scores(const DirectedGraph& g, const ScoringConfig& config) {
    config.validate();
    NodeScores scores;
    scores.ids = g.vertices();
    const auto deg = degrees(g);
    scores.in_degree.reserve(deg.size());
    scores.out_degree.reserve(deg.size());
    for (const auto& d : deg) {
        scores.in_degree.push_back(d.in);
        scores.out_degree.push_back(d.out);
    }
    scores.closeness = closeness_all(g);
    scores.betweenness = betweenness_all(g);
    if (!g.empty()) {
        scores.pagerank = pagerank(g, config.alpha, config.tol, config.max_iter);
    }
    return scores;
}

}  // namespace repute
