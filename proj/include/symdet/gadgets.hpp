#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdet/ncpoly.hpp"

namespace symdet {

// Edge weight c, c*x, or a marked indicator (weight 1). Indicator edges exist
// so gluing can find a rosette's dashed edges unambiguously.
struct EdgeWeight {
    Rational coef = Rational(1);
    std::optional<VarId> var;
    bool indicator = false;

    static EdgeWeight one() { return {}; }
    static EdgeWeight constant(Rational c) { return {std::move(c), std::nullopt, false}; }
    static EdgeWeight variable(VarId v) { return {Rational(1), v, false}; }
    static EdgeWeight indicator_edge() { return {Rational(1), std::nullopt, true}; }

    NCPoly poly() const {
        return var ? NCPoly::monomial(Word(*var), coef) : NCPoly(coef);
    }
    bool operator==(const EdgeWeight&) const = default;
};

struct EdgeRef {
    int u = 0, v = 0;
    auto operator<=>(const EdgeRef&) const = default;
};

// Directed weighted graph with a distinguished start (word order for cycles)
// and sink. Vertices are 0-based ints; layers, when present, tag the vertices
// of a compiled layered DAG so boundary-crossing edges can be found later.
class WeightedDigraph {
  public:
    explicit WeightedDigraph(int n = 0);

    int vertex_count() const { return n_; }
    int add_vertex();
    void add_edge(int u, int v, EdgeWeight w);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return edges_.count({u, v}) > 0; }
    const EdgeWeight& weight(int u, int v) const;
    EdgeWeight& weight(int u, int v);
    const std::map<std::pair<int, int>, EdgeWeight>& edges() const { return edges_; }

    int start() const { return start_; }
    int sink() const { return sink_; }
    void set_start(int v) { check_vertex(v); start_ = v; }
    void set_sink(int v) { check_vertex(v); sink_ = v; }

    bool has_layers() const { return !layer_.empty(); }
    int layer(int v) const; // -1 when untagged
    void set_layers(std::vector<int> layers);

    // Copies `other`'s vertices and edges shifted past this graph's vertices;
    // returns the id offset. Appended vertices carry no layer tags.
    int append_disjoint(const WeightedDigraph& other);

    std::vector<EdgeRef> indicator_edges() const;      // sorted by (u,v)
    std::vector<EdgeRef> edges_with_var(VarId v) const; // sorted by (u,v)

    bool operator==(const WeightedDigraph&) const = default;

  private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::map<std::pair<int, int>, EdgeWeight> edges_;
    int start_ = 0;
    int sink_ = 0;
    std::vector<int> layer_; // empty or size n_, -1 = untagged
};

// Arithmetic formula tree; mul children are order-significant.
class Formula {
  public:
    enum class Kind { variable, constant, add, mul };

    static Formula variable(const std::string& name) { return variable(VarId(name)); }
    static Formula variable(VarId v);
    static Formula constant(Rational c);
    static Formula add(std::vector<Formula> args);
    static Formula mul(std::vector<Formula> args);

    Kind kind() const { return kind_; }
    VarId var() const;
    const Rational& value() const { return value_; }
    const std::vector<Formula>& args() const { return args_; }

    NCPoly expand() const; // the ordered polynomial the formula denotes
    int gate_count() const;
    int count_occurrences(VarId v) const;
    std::vector<VarId> variables() const; // sorted by name, deduplicated

  private:
    Formula() = default;
    Kind kind_ = Kind::constant;
    VarId var_ = VarId::from_raw(0);
    Rational value_;
    std::vector<Formula> args_;
};

// Layered DAG: layer 0 = {s}, layer d = {t}, every edge crosses exactly one
// boundary. Vertices are numbered layer by layer; s = 0, t = last.
struct LayeredDAG {
    std::vector<int> layer_sizes; // first and last are 1
    std::map<std::pair<int, int>, EdgeWeight> edges;

    int depth() const { return static_cast<int>(layer_sizes.size()) - 1; }
    int vertex_count() const;
    int vertex_id(int layer, int pos) const;
    int layer_of(int v) const;
    int s() const { return 0; }
    int t() const { return vertex_count() - 1; }

    NCPoly path_sum() const; // ordered sum over s -> t paths
};

// Compiles a formula into a layered DAG whose ordered path-sum equals the
// formula's polynomial. Addition branches become parallel layers (padded with
// weight-1 pass-through edges), multiplication becomes series composition.
LayeredDAG formula_to_layered_dag(const Formula& f);

// The shifted-index cycle construction: intra-layer weight-1 cycles, cross
// edges re-targeted one step around the next layer (except into t), plus the
// weight-1 closing edge t -> s. Hamiltonian cycles starting at s correspond
// one-to-one, weight- and order-preserving, to s -> t paths of the DAG.
WeightedDigraph dag_to_hc_graph(const LayeredDAG& dag);

// Rosette gadget with i >= 2 indicator edges: 3i+1 nodes, all weights 1,
// exactly two indicator-free Hamiltonian s -> t paths and exactly one per
// nonempty indicator subset.
WeightedDigraph rosette(int i);

// Splices the 8-node glue gadget over the edges e1 = (u,v), e2 = (u',v') of a
// closed host (start/sink with a closing edge): Hamiltonian cycles of the
// result correspond to host cycles using both edges (weights replaced by 1) or
// neither (unchanged). The result is re-closed: new sink = gadget t.
WeightedDigraph glue(const WeightedDigraph& host, EdgeRef e1, EdgeRef e2);

// Boolean sum over a variable with a single occurrence: that edge's weight
// drops the variable and every other edge across the same layer boundary is
// doubled.
WeightedDigraph single_occurrence_boolean_sum(const WeightedDigraph& g, VarId y);

// Full pipeline: formula -> layered DAG -> cycle graph, then per summed
// variable the doubling trick (single occurrence) or a rosette glued onto the
// occurrences. The output's cycle polynomial equals the boolean sum of the
// formula's polynomial over the summed variables.
WeightedDigraph boolean_sum_pipeline(const Formula& f, const std::vector<VarId>& summed);

// Enumeration oracles (backtracking with reachability pruning).
std::vector<std::vector<int>> hamiltonian_cycles(const WeightedDigraph& g,
                                                 int max_vertices = 24);
std::vector<std::vector<int>> hamiltonian_paths(const WeightedDigraph& g, int from, int to,
                                                int max_vertices = 24);

NCPoly cycle_word(const WeightedDigraph& g, const std::vector<int>& cycle);

// Sum over Hamiltonian cycles (started at `start`) of the ordered product of
// edge weights.
NCPoly enumerate_hc_poly(const WeightedDigraph& g, int max_vertices = 24);

// Direct boolean sum of the formula's polynomial, the pipeline's oracle.
NCPoly boolean_sum_direct(const Formula& f, const std::vector<VarId>& summed);

} // namespace symdet
