#include "symdet/cyclecount.hpp"

#include <memory>

namespace symdet {

namespace {

std::shared_ptr<const CycleAlgebra> cycle_algebra_of(const AlgebraHandle& h) {
    auto cyc = std::dynamic_pointer_cast<const CycleAlgebra>(h);
    if (!cyc) throw internal_error("expected a cycle algebra");
    return cyc;
}

SdetOptions sdet_options(const CycleCountOptions& opts) {
    SdetOptions s;
    s.fast_cutoff = opts.max_n;
    s.force = opts.force;
    s.threads = opts.threads;
    return s;
}

// Integer extraction with the hard-failure contract: a fractional count means
// the reduction itself is broken.
long long expect_count(const Rational& value, const char* what) {
    if (!value.is_integer() || !value.is_nonnegative())
        throw internal_error(std::string(what) + " is not a nonnegative integer: " +
                             value.str());
    return value.to_integer();
}

} // namespace

AlgMatrix<Rational> build_mg(const Graph& g) {
    if (g.is_directed()) throw input_error("cycle counting takes an undirected graph");
    if (g.n() < 3) throw input_error("cycle counting needs n >= 3");
    const int n = g.n();
    auto cyc = std::make_shared<CycleAlgebra>(n);
    AlgebraHandle alg = cyc;
    AlgMatrix<Rational> m(alg, n);
    for (int i = 1; i <= n; ++i) {
        auto diag = AlgElement<Rational>::zero(alg);
        for (const auto& [k, c] : cyc->t_terms())
            diag += AlgElement<Rational>::basis(alg, k, c);
        m.at(i - 1, i - 1) = std::move(diag);
        for (int j = 1; j <= n; ++j)
            if (g.has_arc(i, j))
                m.at(i - 1, j - 1) = AlgElement<Rational>::basis(alg, cyc->su_index(i, j));
    }
    return m;
}

AlgElement<Rational> reduction_sdet(const Graph& g, const CycleCountOptions& opts) {
    return sdet_fast(build_mg(g), sdet_options(opts));
}

CycleSpectrum cycle_spectrum(const Graph& g, const CycleCountOptions& opts) {
    return cycle_spectrum(g, reduction_sdet(g, opts));
}

CycleSpectrum cycle_spectrum(const Graph& g, const AlgElement<Rational>& det) {
    const int n = g.n();
    auto cyc = cycle_algebra_of(det.algebra());

    CycleSpectrum spec;
    spec.n = n;

    // k = n: the coefficient of s^n.u(1,1) is (-1)^{n+1} 2R / n!.
    const Rational c_ham = det.coeff(cyc->encode({0, n, 1, 1}));
    Rational r = c_ham * Rational::factorial(static_cast<unsigned>(n)) / Rational(2);
    if (n % 2 == 0) r = -r; // times (-1)^{n+1}
    spec.hamiltonian = expect_count(r, "hamiltonian count");

    // 3 <= k < n: each k-cycle puts (-1)^{k+1} 2 (n-k)! / n! on the k labels
    // (t, s^k, u(l,l)) it touches, so the diagonal sum recovers the count.
    for (int k = 3; k < n; ++k) {
        Rational sum;
        for (int l = 1; l <= n; ++l) sum += det.coeff(cyc->encode({1, k, l, l}));
        Rational count = sum * Rational::factorial(static_cast<unsigned>(n)) /
                         (Rational(2) * Rational(k) *
                          Rational::factorial(static_cast<unsigned>(n - k)));
        if (k % 2 == 0) count = -count;
        spec.by_length.push_back(expect_count(count, "cycle count"));
    }

    for (int l = 1; l <= n; ++l) spec.k2_coefficient_sum += det.coeff(cyc->encode({1, 2, l, l}));
    return spec;
}

long long CycleSpectrum::count(int k) const {
    if (k == n) return hamiltonian;
    if (k < 3 || k > n) throw input_error("cycle length out of range (need 3 <= k <= n)");
    return by_length[static_cast<std::size_t>(k - 3)];
}

long long hamiltonian_count(const Graph& g, const CycleCountOptions& opts) {
    return cycle_spectrum(g, opts).hamiltonian;
}

long long k_cycle_count(const Graph& g, int k, const CycleCountOptions& opts) {
    if (k < 3 || k > g.n()) throw input_error("cycle length out of range (need 3 <= k <= n)");
    return cycle_spectrum(g, opts).count(k);
}

ReductionStructureReport verify_reduction_structure(const Graph& g,
                                                    const CycleCountOptions& opts) {
    return verify_reduction_structure(g, reduction_sdet(g, opts));
}

ReductionStructureReport verify_reduction_structure(const Graph& g,
                                                    const AlgElement<Rational>& det) {
    const int n = g.n();
    auto cyc = cycle_algebra_of(det.algebra());

    ReductionStructureReport report;
    std::optional<Rational> ncycle_coeff;
    std::vector<bool> k0_seen(static_cast<std::size_t>(n + 1), false);

    for (const auto& [idx, coef] : det.terms()) {
        const auto l = cyc->decode(idx);
        const bool diag = l.i == l.j;
        const bool k0 = l.alpha == 1 && l.beta == 0;
        const bool mid = l.alpha == 1 && l.beta >= 2 && l.beta < n;
        const bool full = l.alpha == 0 && l.beta == n;
        if (!diag || !(k0 || mid || full)) {
            report.labels_ok = false;
            report.detail = "unexpected nonzero coefficient on " + cyc->label(idx);
            continue;
        }
        if (k0) {
            k0_seen[static_cast<std::size_t>(l.i)] = true;
            if (!coef.is_one()) {
                report.k0_term_ok = false;
                report.detail = "k=0 coefficient on " + cyc->label(idx) + " is " + coef.str();
            }
        }
        if (full) {
            if (!ncycle_coeff) {
                ncycle_coeff = coef;
            } else if (!(*ncycle_coeff == coef)) {
                report.ncycle_uniform = false;
                report.detail = "n-cycle coefficient differs at " + cyc->label(idx);
            }
        }
    }
    for (int l = 1; l <= n; ++l)
        if (!k0_seen[static_cast<std::size_t>(l)]) {
            report.k0_term_ok = false;
            report.detail = "missing k=0 term at l=" + std::to_string(l);
        }
    // All n labels (alpha=0, beta=n, u(l,l)) must agree; zero never appears as
    // a stored term, so a Hamiltonian graph must show all n of them.
    if (ncycle_coeff) {
        std::size_t seen = 0;
        for (const auto& [idx, coef] : det.terms()) {
            const auto l = cyc->decode(idx);
            if (l.alpha == 0 && l.beta == n && l.i == l.j) ++seen;
        }
        if (seen != static_cast<std::size_t>(n)) {
            report.ncycle_uniform = false;
            report.detail = "n-cycle coefficient missing on some diagonal labels";
        }
    }
    return report;
}

} // namespace symdet
