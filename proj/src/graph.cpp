#include "symdet/graph.hpp"

#include <algorithm>

namespace symdet {

Graph::Graph(int n, bool directed, std::set<std::pair<int, int>> arcs)
    : n_(n), directed_(directed), arcs_(std::move(arcs)) {
    if (n < 0) throw input_error("negative vertex count");
    adj_out_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : arcs_) {
        if (u < 1 || u > n || v < 1 || v > n) throw input_error("edge endpoint out of range");
        if (u == v) throw input_error("self-loops are not allowed");
        adj_out_[static_cast<std::size_t>(u - 1)].push_back(v);
    }
}

Graph Graph::undirected(int n, const std::vector<std::pair<int, int>>& edges) {
    std::set<std::pair<int, int>> arcs;
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw input_error("self-loops are not allowed");
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw input_error("duplicate edge");
        arcs.insert({u, v});
        arcs.insert({v, u});
    }
    return Graph(n, false, std::move(arcs));
}

Graph Graph::directed(int n, const std::vector<std::pair<int, int>>& in_arcs) {
    std::set<std::pair<int, int>> arcs;
    for (auto [u, v] : in_arcs) {
        if (u == v) throw input_error("self-loops are not allowed");
        if (!arcs.insert({u, v}).second) throw input_error("duplicate arc");
    }
    return Graph(n, true, std::move(arcs));
}

Graph Graph::complete(int n, bool directed) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (directed)
                edges.emplace_back(i, j);
            else if (i < j)
                edges.emplace_back(i, j);
        }
    return directed ? Graph::directed(n, edges) : Graph::undirected(n, edges);
}

Graph Graph::cycle(int n, bool directed) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
    return directed ? Graph::directed(n, edges) : Graph::undirected(n, edges);
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::undirected(n, edges);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [u, v] : arcs_)
        if (directed_ || u < v) out.emplace_back(u, v);
    return out;
}

std::size_t Graph::edge_count() const { return edge_list().size(); }

long long brute_force_cycle_count(const Graph& g, int k, int max_n) {
    if (k < 3) throw input_error("cycle length must be at least 3");
    if (g.n() > max_n) throw cutoff_error("brute-force cycle count limited to n <= " +
                                          std::to_string(max_n));
    if (k > g.n()) return 0;

    // Walks of length k from each start vertex back to itself, never revisiting
    // and never dipping below the start (so each cycle is seen once per
    // direction from its smallest vertex).
    long long walks = 0;
    std::vector<bool> visited(static_cast<std::size_t>(g.n() + 1), false);
    auto dfs = [&](auto&& self, int start, int current, int remaining) -> void {
        if (remaining == 0) {
            if (g.has_arc(current, start)) ++walks;
            return;
        }
        for (int next : g.out_neighbors(current)) {
            if (next <= start || visited[static_cast<std::size_t>(next)]) continue;
            visited[static_cast<std::size_t>(next)] = true;
            self(self, start, next, remaining - 1);
            visited[static_cast<std::size_t>(next)] = false;
        }
    };
    for (int start = 1; start <= g.n(); ++start) {
        visited[static_cast<std::size_t>(start)] = true;
        dfs(dfs, start, start, k - 1);
        visited[static_cast<std::size_t>(start)] = false;
    }
    // Each directed cycle is counted once (rooted at its smallest vertex); an
    // undirected cycle shows up in both traversal directions.
    return g.is_directed() ? walks : walks / 2;
}

} // namespace symdet
