#include "symdet/gadgets.hpp"

#include <algorithm>
#include <bit>

#include "symdet/error.hpp"

namespace symdet {

// --------------------------------------------------------- WeightedDigraph

WeightedDigraph::WeightedDigraph(int n) : n_(n) {
    if (n < 0) throw input_error("negative vertex count");
}

int WeightedDigraph::add_vertex() {
    if (!layer_.empty()) layer_.push_back(-1);
    return n_++;
}

void WeightedDigraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw input_error("vertex out of range");
}

void WeightedDigraph::add_edge(int u, int v, EdgeWeight w) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self-loops are not allowed");
    if (!edges_.emplace(std::make_pair(u, v), std::move(w)).second)
        throw input_error("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

void WeightedDigraph::remove_edge(int u, int v) {
    if (edges_.erase({u, v}) == 0)
        throw input_error("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

const EdgeWeight& WeightedDigraph::weight(int u, int v) const {
    auto it = edges_.find({u, v});
    if (it == edges_.end())
        throw input_error("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return it->second;
}

EdgeWeight& WeightedDigraph::weight(int u, int v) {
    auto it = edges_.find({u, v});
    if (it == edges_.end())
        throw input_error("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return it->second;
}

int WeightedDigraph::layer(int v) const {
    check_vertex(v);
    if (layer_.empty()) return -1;
    return layer_[static_cast<std::size_t>(v)];
}

void WeightedDigraph::set_layers(std::vector<int> layers) {
    if (static_cast<int>(layers.size()) != n_) throw input_error("layer tag size mismatch");
    layer_ = std::move(layers);
}

int WeightedDigraph::append_disjoint(const WeightedDigraph& other) {
    const int offset = n_;
    n_ += other.n_;
    if (!layer_.empty()) layer_.resize(static_cast<std::size_t>(n_), -1);
    for (const auto& [uv, w] : other.edges_)
        edges_.emplace(std::make_pair(uv.first + offset, uv.second + offset), w);
    return offset;
}

std::vector<EdgeRef> WeightedDigraph::indicator_edges() const {
    std::vector<EdgeRef> out;
    for (const auto& [uv, w] : edges_)
        if (w.indicator) out.push_back({uv.first, uv.second});
    return out;
}

std::vector<EdgeRef> WeightedDigraph::edges_with_var(VarId v) const {
    std::vector<EdgeRef> out;
    for (const auto& [uv, w] : edges_)
        if (w.var == v) out.push_back({uv.first, uv.second});
    return out;
}

// ------------------------------------------------------------------ Formula

Formula Formula::variable(VarId v) {
    Formula f;
    f.kind_ = Kind::variable;
    f.var_ = v;
    return f;
}

Formula Formula::constant(Rational c) {
    Formula f;
    f.kind_ = Kind::constant;
    f.value_ = std::move(c);
    return f;
}

Formula Formula::add(std::vector<Formula> args) {
    if (args.empty()) throw input_error("addition needs at least one argument");
    Formula f;
    f.kind_ = Kind::add;
    f.args_ = std::move(args);
    return f;
}

Formula Formula::mul(std::vector<Formula> args) {
    if (args.empty()) throw input_error("multiplication needs at least one argument");
    Formula f;
    f.kind_ = Kind::mul;
    f.args_ = std::move(args);
    return f;
}

VarId Formula::var() const {
    if (kind_ != Kind::variable) throw internal_error("not a variable node");
    return var_;
}

NCPoly Formula::expand() const {
    switch (kind_) {
    case Kind::variable: return NCPoly::variable(var_);
    case Kind::constant: return NCPoly(value_);
    case Kind::add: {
        NCPoly sum;
        for (const auto& a : args_) sum += a.expand();
        return sum;
    }
    case Kind::mul: {
        NCPoly prod = args_.front().expand();
        for (std::size_t i = 1; i < args_.size(); ++i) prod = prod * args_[i].expand();
        return prod;
    }
    }
    throw internal_error("bad formula node");
}

int Formula::gate_count() const {
    if (kind_ == Kind::variable || kind_ == Kind::constant) return 0;
    int c = 1;
    for (const auto& a : args_) c += a.gate_count();
    return c;
}

int Formula::count_occurrences(VarId v) const {
    if (kind_ == Kind::variable) return var_ == v ? 1 : 0;
    int c = 0;
    for (const auto& a : args_) c += a.count_occurrences(v);
    return c;
}

std::vector<VarId> Formula::variables() const {
    std::vector<VarId> out;
    if (kind_ == Kind::variable) out.push_back(var_);
    for (const auto& a : args_) {
        auto sub = a.variables();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    std::sort(out.begin(), out.end(),
              [](const VarId& a, const VarId& b) { return a.name() < b.name(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// --------------------------------------------------------------- LayeredDAG

int LayeredDAG::vertex_count() const {
    int c = 0;
    for (int k : layer_sizes) c += k;
    return c;
}

int LayeredDAG::vertex_id(int layer, int pos) const {
    int base = 0;
    for (int i = 0; i < layer; ++i) base += layer_sizes[static_cast<std::size_t>(i)];
    return base + pos;
}

int LayeredDAG::layer_of(int v) const {
    int base = 0;
    for (std::size_t i = 0; i < layer_sizes.size(); ++i) {
        base += layer_sizes[i];
        if (v < base) return static_cast<int>(i);
    }
    throw input_error("vertex out of range");
}

NCPoly LayeredDAG::path_sum() const {
    std::vector<NCPoly> acc(static_cast<std::size_t>(vertex_count()));
    acc[0] = NCPoly::one();
    // Edge map iteration is (u,v)-sorted, and u's layer precedes v's, so every
    // prefix is complete before it is extended.
    for (const auto& [uv, w] : edges)
        acc[static_cast<std::size_t>(uv.second)] +=
            acc[static_cast<std::size_t>(uv.first)] * w.poly();
    return acc[static_cast<std::size_t>(t())];
}

namespace {

LayeredDAG leaf_dag(EdgeWeight w) {
    LayeredDAG d;
    d.layer_sizes = {1, 1};
    d.edges.emplace(std::make_pair(0, 1), std::move(w));
    return d;
}

// Series composition: b's source is identified with a's sink.
LayeredDAG series(const LayeredDAG& a, const LayeredDAG& b) {
    LayeredDAG out;
    out.layer_sizes = a.layer_sizes;
    out.layer_sizes.insert(out.layer_sizes.end(), b.layer_sizes.begin() + 1,
                           b.layer_sizes.end());
    out.edges = a.edges;
    const int shift = a.vertex_count() - 1;
    for (const auto& [uv, w] : b.edges)
        out.edges.emplace(std::make_pair(uv.first + shift, uv.second + shift), w);
    return out;
}

LayeredDAG pad_to_depth(LayeredDAG d, int depth) {
    while (d.depth() < depth) d = series(d, leaf_dag(EdgeWeight::one()));
    return d;
}

// Parallel composition of equal-depth fragments sharing s and t; inner layers
// are stacked side by side.
LayeredDAG parallel(const std::vector<LayeredDAG>& parts) {
    const int depth = parts.front().depth();
    LayeredDAG out;
    out.layer_sizes.assign(static_cast<std::size_t>(depth) + 1, 0);
    out.layer_sizes.front() = out.layer_sizes.back() = 1;
    std::vector<std::vector<int>> offset(parts.size(),
                                         std::vector<int>(static_cast<std::size_t>(depth) + 1, 0));
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].depth() != depth) throw internal_error("parallel parts of unequal depth");
        for (int i = 1; i < depth; ++i) {
            offset[p][static_cast<std::size_t>(i)] = out.layer_sizes[static_cast<std::size_t>(i)];
            out.layer_sizes[static_cast<std::size_t>(i)] +=
                parts[p].layer_sizes[static_cast<std::size_t>(i)];
        }
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
        auto remap = [&](int v) {
            const int layer = parts[p].layer_of(v);
            if (layer == 0) return out.s();
            if (layer == depth) return out.t();
            const int pos = v - parts[p].vertex_id(layer, 0);
            return out.vertex_id(layer, offset[p][static_cast<std::size_t>(layer)] + pos);
        };
        for (const auto& [uv, w] : parts[p].edges)
            out.edges.emplace(std::make_pair(remap(uv.first), remap(uv.second)), w);
    }
    return out;
}

} // namespace

LayeredDAG formula_to_layered_dag(const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::variable: return leaf_dag(EdgeWeight::variable(f.var()));
    case Formula::Kind::constant: return leaf_dag(EdgeWeight::constant(f.value()));
    case Formula::Kind::mul: {
        LayeredDAG d = formula_to_layered_dag(f.args().front());
        for (std::size_t i = 1; i < f.args().size(); ++i)
            d = series(d, formula_to_layered_dag(f.args()[i]));
        return d;
    }
    case Formula::Kind::add: {
        if (f.args().size() == 1) return formula_to_layered_dag(f.args().front());
        std::vector<LayeredDAG> parts;
        int depth = 2; // distinct middle vertices keep branches from colliding
        for (const auto& a : f.args()) {
            parts.push_back(formula_to_layered_dag(a));
            depth = std::max(depth, parts.back().depth());
        }
        for (auto& p : parts) p = pad_to_depth(std::move(p), depth);
        return parallel(parts);
    }
    }
    throw internal_error("bad formula node");
}

WeightedDigraph dag_to_hc_graph(const LayeredDAG& dag) {
    const int d = dag.depth();
    WeightedDigraph g(dag.vertex_count());
    std::vector<int> layers(static_cast<std::size_t>(dag.vertex_count()));
    for (int v = 0; v < dag.vertex_count(); ++v)
        layers[static_cast<std::size_t>(v)] = dag.layer_of(v);
    g.set_layers(std::move(layers));
    g.set_start(dag.s());
    g.set_sink(dag.t());

    // Intra-layer rotation cycles.
    for (int i = 1; i < d; ++i) {
        const int k = dag.layer_sizes[static_cast<std::size_t>(i)];
        if (k < 2) continue;
        for (int j = 0; j < k; ++j)
            g.add_edge(dag.vertex_id(i, j), dag.vertex_id(i, (j + 1) % k), EdgeWeight::one());
    }
    // Cross edges, re-targeted one step around the entered layer (t excepted).
    for (const auto& [uv, w] : dag.edges) {
        const auto [u, v] = uv;
        const int target_layer = dag.layer_of(v);
        if (target_layer == d) {
            g.add_edge(u, v, w);
            continue;
        }
        const int k = dag.layer_sizes[static_cast<std::size_t>(target_layer)];
        const int pos = v - dag.vertex_id(target_layer, 0);
        g.add_edge(u, dag.vertex_id(target_layer, (pos + 1) % k), w);
    }
    g.add_edge(dag.t(), dag.s(), EdgeWeight::one());
    return g;
}

// ------------------------------------------------------------------ rosette

WeightedDigraph rosette(int i) {
    if (i < 2) throw input_error("rosette needs at least two indicator edges");
    // ids: s = 0, t = 1, b_j = 1 + j (j in 1..i-1), pair j: in = i + 2j - 1,
    // out = i + 2j (j in 1..i).
    WeightedDigraph g(3 * i + 1);
    const int s = 0, t = 1;
    auto b = [&](int j) { return 1 + j; };
    auto in = [&](int j) { return i + 2 * j - 1; };
    auto out = [&](int j) { return i + 2 * j; };
    auto hub = [&](int j) { return j == 0 ? s : b(j); }; // h_0 = s

    for (int j = 1; j <= i; ++j) {
        g.add_edge(in(j), out(j), EdgeWeight::one());
        g.add_edge(out(j), in(j), EdgeWeight::one());
        g.add_edge(hub(j - 1), in(j), EdgeWeight::one());          // forward entry
        g.add_edge(in(j), j < i ? b(j) : t, EdgeWeight::one());    // forward exit
        g.add_edge(out(j), j < i ? b(j) : t, EdgeWeight::one());   // forward exit
        g.add_edge(out(j), j > 1 ? b(j - 1) : t, EdgeWeight::one()); // backward exit
        g.add_edge(hub(j - 1), out(j), EdgeWeight::indicator_edge());
    }
    for (int j = 1; j < i; ++j) g.add_edge(b(j), in(j), EdgeWeight::one()); // backward entry
    g.add_edge(s, in(i), EdgeWeight::one());                                // backward start

    g.set_start(s);
    g.set_sink(t);
    return g;
}

// --------------------------------------------------------------------- glue

WeightedDigraph glue(const WeightedDigraph& host, EdgeRef e1, EdgeRef e2) {
    if (e1 == e2) throw input_error("glue needs two distinct edges");
    if (!host.has_edge(e1.u, e1.v) || !host.has_edge(e2.u, e2.v))
        throw input_error("glue edge not found");
    const int hs = host.start();
    const int ht = host.sink();
    if (!host.has_edge(ht, hs)) throw input_error("host has no closing edge");
    const EdgeRef closing{ht, hs};
    if (e1 == closing || e2 == closing) throw input_error("cannot glue the closing edge");

    WeightedDigraph g = host;
    g.remove_edge(e1.u, e1.v);
    g.remove_edge(e2.u, e2.v);
    g.remove_edge(ht, hs);

    const int a = g.add_vertex();
    const int b = g.add_vertex();
    const int c = g.add_vertex();
    const int dd = g.add_vertex();
    const int e = g.add_vertex();
    const int f = g.add_vertex();
    const int s = g.add_vertex();
    const int t = g.add_vertex();

    auto both = [&](int x, int y) {
        g.add_edge(x, y, EdgeWeight::one());
        g.add_edge(y, x, EdgeWeight::one());
    };
    // Note: no c -> f edge. With it, u -> a -> b -> c -> f -> e -> d -> v'
    // becomes walkable and fakes a weight-1 jump from e1's tail to e2's head;
    // without it the u-entry must exit at v and the u'-entry at v', which is
    // what makes the both-or-neither correspondence exact.
    g.add_edge(e1.u, a, EdgeWeight::one());
    both(a, b);
    both(b, c);
    g.add_edge(c, e1.v, EdgeWeight::one());
    g.add_edge(s, c, EdgeWeight::one());
    g.add_edge(a, dd, EdgeWeight::one());
    both(dd, e);
    both(e, f);
    g.add_edge(e2.u, f, EdgeWeight::one());
    g.add_edge(dd, e2.v, EdgeWeight::one());
    g.add_edge(f, t, EdgeWeight::one());
    g.add_edge(s, t, EdgeWeight::one());

    // Re-route the closing loop through the gadget and re-close the host.
    g.add_edge(ht, s, EdgeWeight::one());
    g.add_edge(t, hs, EdgeWeight::one());
    g.set_sink(t);
    return g;
}

// ------------------------------------------------------------- boolean sums

WeightedDigraph single_occurrence_boolean_sum(const WeightedDigraph& g, VarId y) {
    const auto occurrences = g.edges_with_var(y);
    if (occurrences.size() != 1)
        throw input_error("variable '" + y.name() + "' must occur exactly once, found " +
                          std::to_string(occurrences.size()));
    const EdgeRef e = occurrences.front();
    const int from_layer = g.layer(e.u);
    if (!g.has_layers() || from_layer < 0 || g.layer(e.v) != from_layer + 1)
        throw input_error("the summed edge must cross a layer boundary");

    WeightedDigraph out = g;
    out.weight(e.u, e.v).var.reset(); // y := 1 branch keeps the scalar part
    std::vector<EdgeRef> across;
    for (const auto& [uv, w] : out.edges())
        if (!(uv.first == e.u && uv.second == e.v) && out.layer(uv.first) == from_layer &&
            out.layer(uv.second) == from_layer + 1)
            across.push_back({uv.first, uv.second});
    // Every cycle avoiding the summed edge crosses this boundary exactly once.
    for (const auto& other : across) out.weight(other.u, other.v).coef *= Rational(2);
    return out;
}

WeightedDigraph boolean_sum_pipeline(const Formula& f, const std::vector<VarId>& summed) {
    for (std::size_t i = 0; i < summed.size(); ++i)
        for (std::size_t j = i + 1; j < summed.size(); ++j)
            if (summed[i] == summed[j]) throw input_error("duplicate summed variable");
    for (VarId y : summed)
        if (f.count_occurrences(y) == 0)
            throw input_error("summed variable '" + y.name() + "' does not occur");

    WeightedDigraph g = dag_to_hc_graph(formula_to_layered_dag(f));

    std::vector<VarId> singles, multis;
    for (VarId y : summed)
        (f.count_occurrences(y) == 1 ? singles : multis).push_back(y);

    for (VarId y : singles) g = single_occurrence_boolean_sum(g, y);

    for (VarId y : multis) {
        const auto occurrences = g.edges_with_var(y);
        const int count = static_cast<int>(occurrences.size());
        const WeightedDigraph r = rosette(count);
        const int offset = g.append_disjoint(r);
        const int old_sink = g.sink();
        const int start = g.start();
        g.remove_edge(old_sink, start);
        g.add_edge(old_sink, offset + r.start(), EdgeWeight::one());
        g.set_sink(offset + r.sink());
        g.add_edge(g.sink(), start, EdgeWeight::one());

        std::vector<EdgeRef> indicators;
        for (const auto& [uv, w] : r.edges())
            if (w.indicator) indicators.push_back({uv.first + offset, uv.second + offset});
        if (static_cast<int>(indicators.size()) != count)
            throw internal_error("indicator count mismatch");
        for (int k = 0; k < count; ++k) g = glue(g, indicators[static_cast<std::size_t>(k)],
                                                 occurrences[static_cast<std::size_t>(k)]);
    }
    return g;
}

// -------------------------------------------------------------- enumeration

namespace {

struct SearchContext {
    const WeightedDigraph* g = nullptr;
    int n = 0;
    std::vector<std::uint64_t> out_mask, in_mask;
    std::vector<std::vector<int>> out_adj;
};

SearchContext make_context(const WeightedDigraph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw cutoff_error("enumeration limited to " + std::to_string(max_vertices) +
                           " vertices (got " + std::to_string(g.vertex_count()) + ")");
    if (g.vertex_count() > 63) throw cutoff_error("enumeration limited to 63 vertices");
    SearchContext ctx;
    ctx.g = &g;
    ctx.n = g.vertex_count();
    ctx.out_mask.assign(static_cast<std::size_t>(ctx.n), 0);
    ctx.in_mask.assign(static_cast<std::size_t>(ctx.n), 0);
    ctx.out_adj.assign(static_cast<std::size_t>(ctx.n), {});
    for (const auto& [uv, w] : g.edges()) {
        ctx.out_mask[static_cast<std::size_t>(uv.first)] |= std::uint64_t{1} << uv.second;
        ctx.in_mask[static_cast<std::size_t>(uv.second)] |= std::uint64_t{1} << uv.first;
        ctx.out_adj[static_cast<std::size_t>(uv.first)].push_back(uv.second);
    }
    return ctx;
}

// Necessary-condition pruning: every unvisited vertex must still be enterable
// from the unvisited region or the current endpoint, and must be able to leave
// toward the unvisited region (or the goal).
bool viable(const SearchContext& ctx, std::uint64_t unvisited, int current, int goal,
            bool goal_is_endpoint) {
    const std::uint64_t enter_from = unvisited | (std::uint64_t{1} << current);
    const std::uint64_t leave_to = unvisited | (goal_is_endpoint ? 0 : std::uint64_t{1} << goal);
    for (std::uint64_t rest = unvisited; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if ((ctx.in_mask[static_cast<std::size_t>(v)] & enter_from) == 0) return false;
        const bool is_goal = goal_is_endpoint && v == goal;
        if (!is_goal && (ctx.out_mask[static_cast<std::size_t>(v)] & leave_to) == 0) return false;
    }
    return true;
}

void search(const SearchContext& ctx, std::uint64_t unvisited, int current, int goal,
            bool goal_is_endpoint, std::vector<int>& path,
            std::vector<std::vector<int>>& found) {
    if (unvisited == 0) {
        if (goal_is_endpoint ? (current == goal)
                             : (ctx.out_mask[static_cast<std::size_t>(current)] >> goal & 1))
            found.push_back(path);
        return;
    }
    // A path that hits its endpoint early can never finish.
    if (goal_is_endpoint && current == goal) return;
    if (!viable(ctx, unvisited, current, goal, goal_is_endpoint)) return;
    for (int next : ctx.out_adj[static_cast<std::size_t>(current)]) {
        const std::uint64_t bit = std::uint64_t{1} << next;
        if (!(unvisited & bit)) continue;
        path.push_back(next);
        search(ctx, unvisited & ~bit, next, goal, goal_is_endpoint, path, found);
        path.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> hamiltonian_cycles(const WeightedDigraph& g, int max_vertices) {
    std::vector<std::vector<int>> found;
    if (g.vertex_count() < 2) return found;
    const SearchContext ctx = make_context(g, max_vertices);
    const int start = g.start();
    const std::uint64_t all = (std::uint64_t{1} << ctx.n) - 1;
    std::vector<int> path{start};
    search(ctx, all & ~(std::uint64_t{1} << start), start, start, false, path, found);
    return found;
}

std::vector<std::vector<int>> hamiltonian_paths(const WeightedDigraph& g, int from, int to,
                                                int max_vertices) {
    std::vector<std::vector<int>> found;
    if (from == to || g.vertex_count() < 2) return found;
    const SearchContext ctx = make_context(g, max_vertices);
    const std::uint64_t all = (std::uint64_t{1} << ctx.n) - 1;
    std::vector<int> path{from};
    search(ctx, all & ~(std::uint64_t{1} << from), from, to, true, path, found);
    return found;
}

NCPoly cycle_word(const WeightedDigraph& g, const std::vector<int>& cycle) {
    NCPoly word = NCPoly::one();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int u = cycle[i];
        const int v = cycle[(i + 1) % cycle.size()];
        word = word * g.weight(u, v).poly();
    }
    return word;
}

NCPoly enumerate_hc_poly(const WeightedDigraph& g, int max_vertices) {
    NCPoly sum;
    for (const auto& cycle : hamiltonian_cycles(g, max_vertices)) sum += cycle_word(g, cycle);
    return sum;
}

NCPoly boolean_sum_direct(const Formula& f, const std::vector<VarId>& summed) {
    const NCPoly base = f.expand();
    NCPoly sum;
    const std::size_t assignments = std::size_t{1} << summed.size();
    for (std::size_t bits = 0; bits < assignments; ++bits) {
        std::map<VarId, Rational> assignment;
        for (std::size_t i = 0; i < summed.size(); ++i)
            assignment.emplace(summed[i], Rational(static_cast<long>(bits >> i & 1)));
        sum += base.substitute(assignment);
    }
    return sum;
}

} // namespace symdet
