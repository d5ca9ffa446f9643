#include "symdet/vnpred.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace symdet {

std::string hc_variable_name(int i, int j) {
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

AlgMatrix<NCPoly> build_vnp_matrix(const Graph& g) {
    if (!g.is_directed()) throw input_error("the arc matrix takes a directed graph");
    const int n = g.n();
    if (n < 2) throw input_error("need at least two vertices");
    auto two = std::make_shared<MatrixAlgebra>(2);
    auto mid = std::make_shared<MatrixAlgebra>(n);
    auto alg = std::make_shared<TensorAlgebra>(two, mid);

    const BasisIndex f = two->unit_index(1, 2);
    const BasisIndex s = two->unit_index(2, 2);

    AlgMatrix<NCPoly> m(alg, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j || !g.has_arc(i, j)) continue;
            const BasisIndex left = (i == 1) ? f : s;
            const BasisIndex label = alg->pair_index(left, mid->unit_index(i, j));
            m.at(i - 1, j - 1) = AlgElement<NCPoly>::basis(
                alg, label, NCPoly::variable(VarId(hc_variable_name(i, j))));
        }
    return m;
}

HcExtraction extract_hc_report(const Graph& g, const SdetOptions& opts) {
    const AlgMatrix<NCPoly> m = build_vnp_matrix(g);
    auto alg = std::dynamic_pointer_cast<const TensorAlgebra>(m.algebra());
    auto two = std::dynamic_pointer_cast<const MatrixAlgebra>(alg->left());
    auto mid = std::dynamic_pointer_cast<const MatrixAlgebra>(alg->right());
    const AlgElement<NCPoly> det = sdet_fast(m, opts);

    HcExtraction out;
    const BasisIndex expected =
        alg->pair_index(two->unit_index(1, 2), mid->unit_index(1, 1));
    for (const auto& [idx, coef] : det.terms()) {
        if (idx != expected) {
            out.structure_ok = false;
            out.detail = "nonzero sdet term off (e(1,2))x(e(1,1)): " + alg->label(idx);
        }
    }

    const int n = g.n();
    NCPoly hc = det.coeff(expected);
    Rational scale = Rational::factorial(static_cast<unsigned>(n));
    if (n % 2 == 0) scale = -scale; // (-1)^(n+1)
    hc.scale(scale);
    out.hc = std::move(hc);
    return out;
}

NCPoly extract_hc(const Graph& g, const SdetOptions& opts) {
    HcExtraction got = extract_hc_report(g, opts);
    if (!got.structure_ok) throw internal_error(got.detail);
    return std::move(got.hc);
}

NCPoly hc_direct(const Graph& g) {
    if (!g.is_directed()) throw input_error("the cycle polynomial takes a directed graph");
    const int n = g.n();
    if (n < 2) throw input_error("need at least two vertices");
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 2);
    NCPoly sum;
    do {
        int prev = 1;
        bool alive = true;
        std::vector<std::uint32_t> letters;
        for (int next : rest) {
            if (!g.has_arc(prev, next)) {
                alive = false;
                break;
            }
            letters.push_back(VarId(hc_variable_name(prev, next)).raw());
            prev = next;
        }
        if (alive && g.has_arc(prev, 1)) {
            letters.push_back(VarId(hc_variable_name(prev, 1)).raw());
            sum += NCPoly::monomial(Word(std::move(letters)), Rational(1));
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return sum;
}

const CPoly& FamilyGrid::at(int k, int l) const {
    if (k < 1 || k > m || l < 1 || l > m) throw input_error("family grid index out of range");
    return entries[static_cast<std::size_t>((k - 1) * m + (l - 1))];
}

std::string family_variable_name(int i, int j, int k, int l) {
    return "m_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k) + "_" +
           std::to_string(l);
}

FamilyFactor parse_family_variable(const std::string& name) {
    FamilyFactor f;
    char tail = 0;
    if (std::sscanf(name.c_str(), "m_%d_%d_%d_%d%c", &f.a, &f.b, &f.x, &f.y, &tail) != 4)
        throw input_error("not a family variable: '" + name + "'");
    if (f.a < 1 || f.b < 1 || f.x < 1 || f.y < 1)
        throw input_error("family variable indices start at 1: '" + name + "'");
    return f;
}

FamilyGrid sdet_family(int m, int n, const SdetOptions& opts) {
    if (m < 1 || n < 1) throw input_error("family dimensions must be positive");
    auto alg = std::make_shared<MatrixAlgebra>(m);
    AlgMatrix<CPoly> mat(alg, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            ElementAccum<CPoly> acc;
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= m; ++l)
                    acc.add_term(alg->unit_index(k, l),
                                 CPoly::variable(VarId(family_variable_name(i, j, k, l))));
            mat.at(i - 1, j - 1) = acc.take(alg);
        }
    const AlgElement<CPoly> det = sdet_fast(mat, opts);

    FamilyGrid grid;
    grid.m = m;
    grid.n = n;
    grid.entries.reserve(static_cast<std::size_t>(m) * m);
    for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= m; ++l) grid.entries.push_back(det.coeff(alg->unit_index(k, l)));
    return grid;
}

Rational family_monomial_coeff(const std::vector<FamilyFactor>& factors, int k, int l, int n) {
    if (n < 1 || static_cast<int>(factors.size()) != n)
        throw input_error("monomial must have exactly n factors");
    if (n > 16) throw cutoff_error("family monomial arrangement count limited to n <= 16");
    std::vector<bool> row_seen(static_cast<std::size_t>(n), false);
    std::vector<bool> col_seen(static_cast<std::size_t>(n), false);
    std::vector<int> alpha_img(static_cast<std::size_t>(n), 0);
    for (const auto& f : factors) {
        if (f.a < 1 || f.a > n || f.b < 1 || f.b > n || f.x < 1 || f.y < 1)
            throw input_error("malformed family monomial factor");
        if (row_seen[static_cast<std::size_t>(f.a - 1)] ||
            col_seen[static_cast<std::size_t>(f.b - 1)])
            throw input_error("family monomial must use each super-row and super-column once");
        row_seen[static_cast<std::size_t>(f.a - 1)] = true;
        col_seen[static_cast<std::size_t>(f.b - 1)] = true;
        alpha_img[static_cast<std::size_t>(f.a - 1)] = f.b;
    }
    const Permutation alpha = Permutation::from_images(alpha_img);

    // Number of orderings whose inner indices chain k -> ... -> l, by DP over
    // the set of placed factors with the last factor as state.
    std::vector<std::vector<unsigned long long>> dp(
        std::size_t{1} << n, std::vector<unsigned long long>(static_cast<std::size_t>(n), 0));
    for (int r = 0; r < n; ++r)
        if (factors[static_cast<std::size_t>(r)].x == k)
            dp[std::size_t{1} << r][static_cast<std::size_t>(r)] = 1;
    for (std::size_t mask = 1; mask < dp.size(); ++mask)
        for (int last = 0; last < n; ++last) {
            const auto ways = dp[mask][static_cast<std::size_t>(last)];
            if (ways == 0 || !(mask >> last & 1)) continue;
            for (int next = 0; next < n; ++next) {
                if (mask >> next & 1) continue;
                if (factors[static_cast<std::size_t>(next)].x !=
                    factors[static_cast<std::size_t>(last)].y)
                    continue;
                dp[mask | (std::size_t{1} << next)][static_cast<std::size_t>(next)] += ways;
            }
        }
    unsigned long long arrangements = 0;
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (int last = 0; last < n; ++last)
        if (factors[static_cast<std::size_t>(last)].y == l)
            arrangements += dp[full][static_cast<std::size_t>(last)];

    if (arrangements == 0) return Rational(0);
    Rational coef = Rational(static_cast<long long>(arrangements), 1) /
                    Rational::factorial(static_cast<unsigned>(n));
    if (alpha.sign() < 0) coef = -coef;
    return coef;
}

} // namespace symdet
