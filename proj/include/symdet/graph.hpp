#pragma once

#include <set>
#include <utility>
#include <vector>

#include "symdet/error.hpp"

namespace symdet {

// Simple graph on vertices 1..n with no self-loops. Undirected graphs store
// both orientations of every edge; `arcs` is the canonical ordered-pair view.
class Graph {
  public:
    static Graph undirected(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph directed(int n, const std::vector<std::pair<int, int>>& arcs);

    static Graph complete(int n, bool directed = false);
    static Graph cycle(int n, bool directed = false); // 1-2-...-n-1
    static Graph path(int n);                         // undirected 1-2-...-n

    int n() const { return n_; }
    bool is_directed() const { return directed_; }
    bool has_arc(int from, int to) const { return arcs_.count({from, to}) > 0; }
    const std::set<std::pair<int, int>>& arcs() const { return arcs_; }
    // Undirected edge list with i < j; directed arc list as stored.
    std::vector<std::pair<int, int>> edge_list() const;
    std::size_t edge_count() const; // undirected edges counted once

    const std::vector<int>& out_neighbors(int v) const {
        return adj_out_[static_cast<std::size_t>(v - 1)];
    }

    bool operator==(const Graph& o) const = default;

  private:
    Graph(int n, bool directed, std::set<std::pair<int, int>> arcs);
    int n_ = 0;
    bool directed_ = false;
    std::set<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> adj_out_;
};

// Counts simple k-cycles by backtracking enumeration: up to rotation and
// reflection for undirected graphs, up to rotation for directed ones.
long long brute_force_cycle_count(const Graph& g, int k, int max_n = 12);

} // namespace symdet
