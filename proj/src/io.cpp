#include "symdet/io.hpp"

#include <fstream>

namespace symdet::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw input_error(what); }

const json& expect(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing key '") + key + "'");
    return *it;
}

int expect_int(const json& j, const char* key) {
    const json& v = expect(j, key);
    if (!v.is_number_integer()) fail(std::string("key '") + key + "' must be an integer");
    return v.get<int>();
}

} // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail("invalid JSON in '" + path + "': " + e.what());
    }
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
}

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>(), 1);
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    fail("rational must be an integer or a 'p/q' string");
}

json permutation_to_json(const Permutation& p) { return json(p.images()); }

Permutation permutation_from_json(const json& j) {
    if (!j.is_array()) fail("permutation must be an array");
    return Permutation::from_images(j.get<std::vector<int>>());
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edge_list()) edges.push_back(json::array({u, v}));
    return json{{"n", g.n()}, {"directed", g.is_directed()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    const int n = expect_int(j, "n");
    const bool directed = j.value("directed", false);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : expect(j, "edges")) {
        if (!e.is_array() || e.size() != 2) fail("edges must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return directed ? Graph::directed(n, edges) : Graph::undirected(n, edges);
}

json algebra_to_json(const AlgebraHandle& a) {
    if (auto sc = std::dynamic_pointer_cast<const StructureConstantAlgebra>(a)) {
        json unit = json::object();
        for (const auto& [k, c] : sc->unit_terms()) unit[sc->label(k)] = c.str();
        json mul = json::array();
        const auto d = static_cast<BasisIndex>(sc->dim());
        for (BasisIndex i = 0; i < d; ++i)
            for (BasisIndex jdx = 0; jdx < d; ++jdx) {
                const auto& terms = sc->product_terms(i, jdx);
                if (terms.empty()) continue;
                json out = json::array();
                for (const auto& [k, c] : terms) out.push_back(json::array({k, c.str()}));
                mul.push_back(json::array({i, jdx, out}));
            }
        return json{{"dim", sc->dim()}, {"labels", sc->labels()}, {"unit", unit}, {"mul", mul}};
    }
    return a->name();
}

AlgebraHandle algebra_from_json(const json& j) {
    if (j.is_string()) return parse_algebra_name(j.get<std::string>());
    if (!j.is_object()) fail("algebra must be a builtin name or a structure-constant object");
    const int dim = expect_int(j, "dim");
    if (dim < 1) fail("algebra dimension must be positive");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
        if (static_cast<int>(labels.size()) != dim) fail("label count must equal dim");
    } else {
        for (int i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
    }
    auto label_index = [&](const std::string& text) -> BasisIndex {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == text) return static_cast<BasisIndex>(i);
        fail("unknown basis label '" + text + "'");
    };
    BasisTerms unit;
    for (const auto& [key, value] : expect(j, "unit").items())
        unit.emplace_back(label_index(key), rational_from_json(value));
    std::vector<std::pair<std::pair<BasisIndex, BasisIndex>, BasisTerms>> table;
    for (const auto& row : expect(j, "mul")) {
        if (!row.is_array() || row.size() != 3) fail("mul rows are [i, j, [[k, coef]..]]");
        BasisTerms terms;
        for (const auto& t : row[2]) {
            if (!t.is_array() || t.size() != 2) fail("mul terms are [k, coef]");
            terms.emplace_back(t[0].get<BasisIndex>(), rational_from_json(t[1]));
        }
        table.push_back({{row[0].get<BasisIndex>(), row[1].get<BasisIndex>()}, terms});
    }
    return std::make_shared<StructureConstantAlgebra>(std::move(labels), std::move(unit),
                                                      std::move(table));
}

json element_to_json(const AlgElement<Rational>& e) {
    json out = json::object();
    for (const auto& [k, c] : e.terms()) out[e.algebra()->label(k)] = c.str();
    return out;
}

AlgElement<Rational> element_from_json(const json& j, AlgebraHandle algebra) {
    if (!j.is_object()) fail("element must be a {label: coef} object");
    ElementAccum<Rational> acc;
    for (const auto& [key, value] : j.items()) {
        auto idx = algebra->parse_label(key);
        if (!idx) fail("unknown basis label '" + key + "'");
        acc.add_term(*idx, rational_from_json(value));
    }
    return acc.take(std::move(algebra));
}

json matrix_to_json(const AlgMatrix<Rational>& m) {
    json rows = json::array();
    for (int r = 0; r < m.size(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.size(); ++c) row.push_back(element_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"algebra", algebra_to_json(m.algebra())}, {"n", m.size()}, {"entries", rows}};
}

AlgMatrix<Rational> matrix_from_json(const json& j) {
    AlgebraHandle alg = algebra_from_json(expect(j, "algebra"));
    const int n = expect_int(j, "n");
    const json& rows = expect(j, "entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) fail("need n rows of entries");
    AlgMatrix<Rational> m(alg, n);
    for (int r = 0; r < n; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != n) fail("need n entries per row");
        for (int c = 0; c < n; ++c)
            m.at(r, c) = element_from_json(row[static_cast<std::size_t>(c)], alg);
    }
    return m;
}

json ncpoly_to_json(const NCPoly& p) {
    json out = json::array();
    for (const auto& [w, c] : p.canonical_terms())
        out.push_back(json::array({c.str(), w.names()}));
    return out;
}

NCPoly ncpoly_from_json(const json& j) {
    if (!j.is_array()) fail("polynomial must be an array of [coef, [vars]] pairs");
    NCPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) fail("polynomial terms are [coef, [vars]]");
        std::vector<std::uint32_t> letters;
        for (const auto& name : term[1]) letters.push_back(VarId(name.get<std::string>()).raw());
        p += NCPoly::monomial(Word(std::move(letters)), rational_from_json(term[0]));
    }
    return p;
}

json cpoly_to_json(const CPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back(json::array({c.str(), m.names_expanded()}));
    return out;
}

CPoly cpoly_from_json(const json& j) {
    if (!j.is_array()) fail("polynomial must be an array of [coef, [vars]] pairs");
    CPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) fail("polynomial terms are [coef, [vars]]");
        std::vector<std::uint32_t> letters;
        for (const auto& name : term[1]) letters.push_back(VarId(name.get<std::string>()).raw());
        p += CPoly::monomial(Monomial(Word(std::move(letters))), rational_from_json(term[0]));
    }
    return p;
}

json formula_to_json(const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::variable: return json{{"var", f.var().name()}};
    case Formula::Kind::constant: return json{{"const", f.value().str()}};
    case Formula::Kind::add:
    case Formula::Kind::mul: {
        json args = json::array();
        for (const auto& a : f.args()) args.push_back(formula_to_json(a));
        return json{{"op", f.kind() == Formula::Kind::add ? "add" : "mul"}, {"args", args}};
    }
    }
    throw internal_error("bad formula node");
}

Formula formula_from_json(const json& j) {
    if (!j.is_object()) fail("formula nodes are objects");
    if (j.contains("var")) return Formula::variable(j.at("var").get<std::string>());
    if (j.contains("const")) return Formula::constant(rational_from_json(j.at("const")));
    const std::string op = expect(j, "op").get<std::string>();
    std::vector<Formula> args;
    for (const auto& a : expect(j, "args")) args.push_back(formula_from_json(a));
    if (op == "add") return Formula::add(std::move(args));
    if (op == "mul") return Formula::mul(std::move(args));
    fail("unknown formula op '" + op + "'");
}

namespace {

json weight_to_json(const EdgeWeight& w) {
    if (w.indicator) return json{{"indicator", true}};
    if (w.var) {
        json out{{"var", w.var->name()}};
        if (!w.coef.is_one()) out["coef"] = w.coef.str();
        return out;
    }
    return json{{"const", w.coef.str()}};
}

EdgeWeight weight_from_json(const json& j) {
    if (!j.is_object()) fail("edge weights are objects");
    if (j.value("indicator", false)) return EdgeWeight::indicator_edge();
    if (j.contains("var")) {
        EdgeWeight w = EdgeWeight::variable(VarId(j.at("var").get<std::string>()));
        if (j.contains("coef")) w.coef = rational_from_json(j.at("coef"));
        return w;
    }
    if (j.contains("const")) return EdgeWeight::constant(rational_from_json(j.at("const")));
    fail("edge weight needs 'var', 'const' or 'indicator'");
}

} // namespace

json digraph_to_json(const WeightedDigraph& g) {
    json edges = json::array();
    json weights = json::object();
    for (const auto& [uv, w] : g.edges()) {
        edges.push_back(json::array({uv.first + 1, uv.second + 1}));
        weights[std::to_string(uv.first + 1) + "," + std::to_string(uv.second + 1)] =
            weight_to_json(w);
    }
    json out{{"n", g.vertex_count()}, {"directed", true},      {"edges", edges},
             {"weights", weights},    {"start", g.start() + 1}, {"sink", g.sink() + 1}};
    if (g.has_layers()) {
        json layers = json::array();
        for (int v = 0; v < g.vertex_count(); ++v) layers.push_back(g.layer(v));
        out["layers"] = layers;
    }
    return out;
}

WeightedDigraph digraph_from_json(const json& j) {
    const int n = expect_int(j, "n");
    WeightedDigraph g(n);
    if (j.contains("layers")) {
        auto layers = j.at("layers").get<std::vector<int>>();
        g.set_layers(std::move(layers));
    }
    const json& weights = expect(j, "weights");
    for (const auto& e : expect(j, "edges")) {
        if (!e.is_array() || e.size() != 2) fail("edges must be [u, v] pairs");
        const int u = e[0].get<int>();
        const int v = e[1].get<int>();
        const std::string key = std::to_string(u) + "," + std::to_string(v);
        if (!weights.contains(key)) fail("missing weight for edge " + key);
        g.add_edge(u - 1, v - 1, weight_from_json(weights.at(key)));
    }
    g.set_start(expect_int(j, "start") - 1);
    g.set_sink(expect_int(j, "sink") - 1);
    return g;
}

json family_grid_to_json(const FamilyGrid& grid) {
    json rows = json::array();
    for (int k = 1; k <= grid.m; ++k) {
        json row = json::array();
        for (int l = 1; l <= grid.m; ++l) row.push_back(cpoly_to_json(grid.at(k, l)));
        rows.push_back(std::move(row));
    }
    return json{{"m", grid.m}, {"n", grid.n}, {"T", rows}};
}

} // namespace symdet::io
