#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symdet/error.hpp"
#include "symdet/vnpred.hpp"

using namespace symdet;

namespace {

std::uint64_t mix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_digraph(int n, std::uint64_t& s) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && mix64(s) % 2 == 0) arcs.emplace_back(i, j);
    return Graph::directed(n, arcs);
}

NCPoly word_of(std::initializer_list<std::pair<int, int>> arcs) {
    std::vector<std::uint32_t> letters;
    for (auto [i, j] : arcs) letters.push_back(VarId(hc_variable_name(i, j)).raw());
    return NCPoly::monomial(Word(std::move(letters)), Rational(1));
}

CPoly fam(int i, int j, int k, int l) {
    return CPoly::variable(VarId(family_variable_name(i, j, k, l)));
}

} // namespace

TEST_CASE("arc matrix layout") {
    const auto g = Graph::directed(3, {{1, 2}, {2, 3}, {3, 1}});
    const auto m = build_vnp_matrix(g);
    auto alg = std::dynamic_pointer_cast<const TensorAlgebra>(m.algebra());
    auto two = std::dynamic_pointer_cast<const MatrixAlgebra>(alg->left());
    REQUIRE(alg);
    // Exactly the three arcs are nonzero; row 1 carries f = e(1,2), the other
    // rows carry s = e(2,2); diagonals stay zero.
    int nonzero = 0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (m.at(r, c).is_zero()) continue;
            ++nonzero;
            CHECK(r != c);
            const auto [left, right] = alg->split_index(m.at(r, c).terms()[0].first);
            CHECK(left == (r == 0 ? two->unit_index(1, 2) : two->unit_index(2, 2)));
            (void)right;
        }
    CHECK(nonzero == 3);
    CHECK(m.at(1, 0).is_zero()); // absent arc
    CHECK_THROWS_AS(build_vnp_matrix(Graph::complete(3)), input_error);
}

TEST_CASE("hc_direct") {
    CHECK(hc_direct(Graph::directed(3, {{1, 2}, {2, 3}, {3, 1}})) ==
          word_of({{1, 2}, {2, 3}, {3, 1}}));
    CHECK(hc_direct(Graph::complete(4, true)).term_count() == 6); // (n-1)!
    // Breaking any arc of the only cycle kills the polynomial.
    CHECK(hc_direct(Graph::directed(3, {{1, 2}, {2, 3}})).is_zero());
}

TEST_CASE("extraction on the directed triangle") {
    const auto g = Graph::directed(3, {{1, 2}, {2, 3}, {3, 1}});
    const auto got = extract_hc_report(g);
    CHECK(got.structure_ok);
    CHECK(got.hc == word_of({{1, 2}, {2, 3}, {3, 1}}));
}

TEST_CASE("extraction equals the direct polynomial") {
    // Complete digraphs n = 2..4 and a random sweep.
    for (int n = 2; n <= 4; ++n) {
        const auto g = Graph::complete(n, true);
        CHECK(extract_hc(g) == hc_direct(g));
    }
    std::uint64_t s = 64;
    for (int trial = 0; trial < 8; ++trial) {
        const auto g = random_digraph(2 + static_cast<int>(mix64(s) % 4), s);
        CHECK(extract_hc(g) == hc_direct(g));
    }
}

TEST_CASE("extraction of an acyclic graph is zero") {
    const auto dag = Graph::directed(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(extract_hc(dag).is_zero());
    CHECK(hc_direct(dag).is_zero());
}

TEST_CASE("family grid golden values at m=2, n=2") {
    const auto grid = sdet_family(2, 2);
    const Rational half(1, 2);

    CPoly t11 = fam(1, 1, 1, 1) * fam(2, 2, 1, 1) * CPoly(Rational(2)) +
                fam(1, 1, 1, 2) * fam(2, 2, 2, 1) + fam(1, 1, 2, 1) * fam(2, 2, 1, 2) -
                fam(1, 2, 1, 1) * fam(2, 1, 1, 1) * CPoly(Rational(2)) -
                fam(1, 2, 1, 2) * fam(2, 1, 2, 1) - fam(1, 2, 2, 1) * fam(2, 1, 1, 2);
    t11.scale(half);
    CHECK(grid.at(1, 1) == t11);

    CPoly t12 = fam(1, 1, 1, 1) * fam(2, 2, 1, 2) + fam(1, 1, 1, 2) * fam(2, 2, 2, 2) +
                fam(1, 1, 1, 2) * fam(2, 2, 1, 1) + fam(1, 1, 2, 2) * fam(2, 2, 1, 2) -
                fam(1, 2, 1, 1) * fam(2, 1, 1, 2) - fam(1, 2, 1, 2) * fam(2, 1, 2, 2) -
                fam(1, 2, 1, 2) * fam(2, 1, 1, 1) - fam(1, 2, 2, 2) * fam(2, 1, 1, 2);
    t12.scale(half);
    CHECK(grid.at(1, 2) == t12);

    CPoly t21 = fam(1, 1, 1, 1) * fam(2, 2, 2, 1) + fam(1, 1, 2, 1) * fam(2, 2, 1, 1) +
                fam(1, 1, 2, 1) * fam(2, 2, 2, 2) + fam(1, 1, 2, 2) * fam(2, 2, 2, 1) -
                fam(1, 2, 1, 1) * fam(2, 1, 2, 1) - fam(1, 2, 2, 1) * fam(2, 1, 1, 1) -
                fam(1, 2, 2, 1) * fam(2, 1, 2, 2) - fam(1, 2, 2, 2) * fam(2, 1, 2, 1);
    t21.scale(half);
    CHECK(grid.at(2, 1) == t21);

    CPoly t22 = fam(1, 1, 2, 2) * fam(2, 2, 2, 2) * CPoly(Rational(2)) +
                fam(1, 1, 1, 2) * fam(2, 2, 2, 1) + fam(1, 1, 2, 1) * fam(2, 2, 1, 2) -
                fam(1, 2, 2, 2) * fam(2, 1, 2, 2) * CPoly(Rational(2)) -
                fam(1, 2, 1, 2) * fam(2, 1, 2, 1) - fam(1, 2, 2, 1) * fam(2, 1, 1, 2);
    t22.scale(half);
    CHECK(grid.at(2, 2) == t22);
}

TEST_CASE("family grid degenerate shapes") {
    // m = 1: the single entry is the classical determinant of the n x n
    // symbolic matrix; spot-check n = 2: m_1_1 m_2_2 - m_1_2 m_2_1.
    const auto grid = sdet_family(1, 2);
    const CPoly want = fam(1, 1, 1, 1) * fam(2, 2, 1, 1) - fam(1, 2, 1, 1) * fam(2, 1, 1, 1);
    CHECK(grid.at(1, 1) == want);
    // n = 1: T_{ij} is the bare variable m_1_1_i_j.
    const auto single = sdet_family(2, 1);
    CHECK(single.at(1, 2) == fam(1, 1, 1, 2));
}

TEST_CASE("family monomial coefficients, pinned examples") {
    using F = FamilyFactor;
    // 2 a11 d11 in t11 -> coefficient 1 after the 1/2 factor.
    CHECK(family_monomial_coeff({F{1, 1, 1, 1}, F{2, 2, 1, 1}}, 1, 1, 2) == Rational(1));
    // a12 d21 keeps only one valid order -> 1/2.
    CHECK(family_monomial_coeff({F{1, 1, 1, 2}, F{2, 2, 2, 1}}, 1, 1, 2) == Rational(1, 2));
    // No factor with x = k.
    CHECK(family_monomial_coeff({F{1, 1, 2, 1}, F{2, 2, 2, 1}}, 1, 1, 2) == Rational(0));
    // Odd permutation a -> b flips the sign: b11 c11 pair.
    CHECK(family_monomial_coeff({F{1, 2, 1, 1}, F{2, 1, 1, 1}}, 1, 1, 2) == Rational(-1));
    // Interior chaining matters: a11 d12 g21 admits 2 of the 6 orders.
    CHECK(family_monomial_coeff({F{1, 1, 1, 1}, F{2, 2, 1, 2}, F{3, 3, 2, 1}}, 1, 1, 3) ==
          Rational(1, 3));
    CHECK_THROWS_AS(family_monomial_coeff({F{1, 1, 1, 1}, F{1, 2, 1, 1}}, 1, 1, 2), input_error);
}

TEST_CASE("family monomial coefficient matches the grid everywhere") {
    for (const auto& [m, n] : {std::pair{2, 2}, std::pair{2, 3}}) {
        const auto grid = sdet_family(m, n);
        for (int k = 1; k <= m; ++k)
            for (int l = 1; l <= m; ++l)
                for (const auto& [mono, coef] : grid.at(k, l).terms()) {
                    std::vector<FamilyFactor> factors;
                    for (const auto& name : mono.names_expanded())
                        factors.push_back(parse_family_variable(name));
                    CHECK(family_monomial_coeff(factors, k, l, n) == coef);
                }
    }
}

TEST_CASE("family variable parsing") {
    const auto f = parse_family_variable("m_2_3_1_4");
    CHECK(f == FamilyFactor{2, 3, 1, 4});
    CHECK_THROWS_AS(parse_family_variable("x_1_2"), input_error);
    CHECK_THROWS_AS(parse_family_variable("m_1_2_3"), input_error);
}
