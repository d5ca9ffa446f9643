#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symdet/cyclecount.hpp"
#include "symdet/error.hpp"

using namespace symdet;

namespace {

std::uint64_t mix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_graph(int n, std::uint64_t& s) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (mix64(s) % 2 == 0) edges.emplace_back(i, j);
    return Graph::undirected(n, edges);
}

} // namespace

TEST_CASE("graph construction and validation") {
    const auto g = Graph::undirected(4, {{1, 2}, {2, 3}});
    CHECK(g.has_arc(1, 2));
    CHECK(g.has_arc(2, 1)); // both orientations stored
    CHECK_FALSE(g.has_arc(1, 3));
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(Graph::undirected(3, {{1, 1}}), input_error);
    CHECK_THROWS_AS(Graph::undirected(3, {{1, 4}}), input_error);
    CHECK_THROWS_AS(Graph::undirected(3, {{1, 2}, {2, 1}}), input_error);
}

TEST_CASE("brute-force cycle counts") {
    CHECK(brute_force_cycle_count(Graph::complete(4), 3) == 4);
    CHECK(brute_force_cycle_count(Graph::complete(5), 5) == 12); // (n-1)!/2
    CHECK(brute_force_cycle_count(Graph::cycle(4), 4) == 1);
    CHECK(brute_force_cycle_count(Graph::cycle(4), 3) == 0);
    CHECK(brute_force_cycle_count(Graph::complete(4, true), 4) == 6); // directed: (n-1)!
    CHECK_THROWS_AS(brute_force_cycle_count(Graph::complete(4), 2), input_error);
}

TEST_CASE("build_mg layout") {
    const auto g = Graph::complete(3);
    const auto m = build_mg(g);
    auto cyc = std::dynamic_pointer_cast<const CycleAlgebra>(m.algebra());
    REQUIRE(cyc);
    // Diagonal entries are t = sum_l t.u(l,l); every off-diagonal edge entry
    // is the single label s.u(i,j).
    for (int i = 0; i < 3; ++i) CHECK(m.at(i, i).term_count() == 3);
    CHECK(m.at(0, 1).terms()[0].first == cyc->su_index(1, 2));
    CHECK(m.at(1, 0).terms()[0].first == cyc->su_index(2, 1));

    const auto edgeless = build_mg(Graph::undirected(3, {}));
    CHECK(edgeless.at(0, 1).is_zero());
    CHECK_THROWS_AS(build_mg(Graph::complete(3, true)), input_error);
}

TEST_CASE("hamiltonian counts on small complete graphs and the path") {
    CHECK(hamiltonian_count(Graph::complete(3)) == 1);
    CHECK(hamiltonian_count(Graph::complete(4)) == 3);
    CHECK(hamiltonian_count(Graph::path(4)) == 0);
    CHECK(hamiltonian_count(Graph::cycle(5)) == 1);
}

TEST_CASE("k-cycle counts") {
    CHECK(k_cycle_count(Graph::complete(4), 3) == 4);
    CHECK(k_cycle_count(Graph::cycle(5), 5) == 1); // delegates to hamiltonian
    CHECK(k_cycle_count(Graph::cycle(4), 3) == 0); // girth 4
    CHECK_THROWS_AS(k_cycle_count(Graph::complete(4), 2), input_error);
    CHECK_THROWS_AS(k_cycle_count(Graph::complete(4), 5), input_error);
}

TEST_CASE("spectrum matches the brute-force oracle on random graphs") {
    std::uint64_t s = 2718;
    for (int trial = 0; trial < 4; ++trial) {
        const int n = 4 + static_cast<int>(mix64(s) % 2); // 4..5
        const auto g = random_graph(n, s);
        const auto spec = cycle_spectrum(g);
        for (int k = 3; k <= n; ++k)
            CHECK(spec.count(k) == brute_force_cycle_count(g, k));
    }
}

TEST_CASE("structure of the reduction output") {
    for (const auto& g : {Graph::complete(4), Graph::cycle(5), Graph::path(4)}) {
        const auto report = verify_reduction_structure(g);
        CHECK(report.labels_ok);
        CHECK(report.k0_term_ok);
        CHECK(report.ncycle_uniform);
    }
}

TEST_CASE("k=2 diagnostics expose the raw coefficient sum") {
    // A 2-cycle is its own reversal, so the k >= 3 normalization would halve
    // the edge count; the raw sum relates to |E| instead of a cycle count.
    const auto g = Graph::complete(4);
    const auto spec = cycle_spectrum(g);
    const int n = 4;
    const Rational per_edge = Rational(2) * Rational::factorial(static_cast<unsigned>(n - 2)) /
                              Rational::factorial(static_cast<unsigned>(n));
    // Each edge contributes -(n-2)!/n! to two diagonal labels.
    CHECK(spec.k2_coefficient_sum == -Rational(static_cast<long>(g.edge_count())) * per_edge);
}

TEST_CASE("reduction size guards") {
    CHECK_THROWS_AS(hamiltonian_count(Graph::complete(8)), cutoff_error);
    CHECK_THROWS_AS(build_mg(Graph::undirected(2, {{1, 2}})), input_error);
}
