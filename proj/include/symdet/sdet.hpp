#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "symdet/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symdet {

struct SdetOptions {
    int naive_cutoff = 6; // (n!)^2 growth
    int fast_cutoff = 8;  // n! * n * 2^n growth
    bool force = false;   // lifts the soft cutoffs (hard caps still apply)
    int threads = 1;      // sdet_fast may split the row-permutation space
};

enum class SdetMethod { naive, fast };

namespace detail {

inline constexpr int kCdetHardCap = 20;
inline constexpr int kSdetHardCap = 11;

inline void check_cutoff(int n, int soft, int hard, bool force, const char* what) {
    if (n > hard)
        throw cutoff_error(std::string(what) + " hard cap is n <= " + std::to_string(hard));
    if (!force && n > soft)
        throw cutoff_error(std::string(what) + " cutoff is n <= " + std::to_string(soft) +
                           " (use force to override)");
}

// Column-subset DP shared by cdet and the sdet_fast inner loop. Buffers are
// reused across calls; every mask slot is drained each run.
template <CoefficientRing R>
class CdetWorkspace {
  public:
    AlgElement<R> run(const AlgMatrix<R>& m, const Permutation* row_order) {
        const int n = m.size(); // callers cap n well below 32
        if (n == 0) return AlgElement<R>::unit(m.algebra());
        const std::uint32_t full = (1u << n) - 1;
        acc_.resize(static_cast<std::size_t>(full) + 1);

        auto row_at = [&](int step) { // 0-based matrix row consumed at DP step
            return row_order ? (*row_order)(step + 1) - 1 : step;
        };

        for (int j = 0; j < n; ++j) {
            const auto& entry = m.at(row_at(0), j);
            if (!entry.is_zero()) acc_[1u << j].add(entry);
        }
        AlgElement<R> result = AlgElement<R>::zero(m.algebra());
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            AlgElement<R> state = acc_[mask].take(m.algebra());
            if (mask == full) {
                result = std::move(state);
                break;
            }
            if (state.is_zero()) continue;
            const int step = std::popcount(mask);
            const int row = row_at(step);
            for (int j = 0; j < n; ++j) {
                if (mask >> j & 1) continue;
                const auto& entry = m.at(row, j);
                if (entry.is_zero()) continue;
                // New inversions: already-used columns greater than j.
                const bool negate = std::popcount(mask >> (j + 1)) % 2 == 1;
                acc_[mask | (1u << j)].add_product(state, entry, negate);
            }
        }
        return result;
    }

  private:
    std::vector<ElementAccum<R>> acc_;
};

} // namespace detail

// Row-ordered (Cayley) determinant: sum over column permutations of the signed
// products taken with rows consumed first-to-last. n * 2^n algebra products.
template <CoefficientRing R>
AlgElement<R> cdet(const AlgMatrix<R>& m, const Permutation* row_order = nullptr) {
    if (m.size() > detail::kCdetHardCap)
        throw cutoff_error("cdet hard cap is n <= " + std::to_string(detail::kCdetHardCap));
    if (row_order && row_order->size() != m.size())
        throw input_error("row order size mismatch");
    detail::CdetWorkspace<R> ws;
    return ws.run(m, row_order);
}

// Literal definition: (1/n!) sum over (sigma, tau) pairs of signed ordered
// entry products. Serial reference implementation; quadratic-factorial cost.
template <CoefficientRing R>
AlgElement<R> sdet_naive(const AlgMatrix<R>& m, const SdetOptions& opts = {}) {
    const int n = m.size();
    detail::check_cutoff(n, opts.naive_cutoff, detail::kSdetHardCap, opts.force, "sdet_naive");
    if (n == 0) return AlgElement<R>::unit(m.algebra());

    ElementAccum<R> acc;
    Permutation sigma = Permutation::identity(n);
    do {
        const int sign_sigma = sigma.sign();
        Permutation tau = Permutation::identity(n);
        do {
            AlgElement<R> prod = m.at(sigma(1) - 1, tau(1) - 1);
            for (int i = 2; i <= n && !prod.is_zero(); ++i)
                prod = prod * m.at(sigma(i) - 1, tau(i) - 1);
            if (!prod.is_zero())
                acc.add(prod, Rational(sign_sigma * tau.sign()));
        } while (tau.next());
    } while (sigma.next());

    AlgElement<R> result = acc.take(m.algebra());
    result.scale(Rational(1) / Rational::factorial(static_cast<unsigned>(n)));
    return result;
}

// Grouped evaluation: (1/n!) sum over sigma of sgn(sigma) * cdet of the matrix
// with rows reordered to sigma. Must agree with sdet_naive bit-exactly (the
// equivalence suite enforces this; it is an implementation identity, never
// assumed). Disjoint sigma ranges may run on separate threads; exact rational
// addition makes the reduction order irrelevant to the result bytes.
template <CoefficientRing R>
AlgElement<R> sdet_fast(const AlgMatrix<R>& m, const SdetOptions& opts = {}) {
    const int n = m.size();
    detail::check_cutoff(n, opts.fast_cutoff, detail::kSdetHardCap, opts.force, "sdet_fast");
    if (n == 0) return AlgElement<R>::unit(m.algebra());

    const std::uint64_t total = permutation_count(n);
    const int threads =
        std::max(1, std::min<int>(opts.threads, static_cast<int>(std::min<std::uint64_t>(
                                      total, 64))));
    std::vector<AlgElement<R>> partial(static_cast<std::size_t>(threads),
                                       AlgElement<R>::zero(m.algebra()));

#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(static, 1) if (threads > 1)
#endif
    for (int t = 0; t < threads; ++t) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(t) /
                                 static_cast<std::uint64_t>(threads);
        const std::uint64_t hi = total * (static_cast<std::uint64_t>(t) + 1) /
                                 static_cast<std::uint64_t>(threads);
        if (lo >= hi) continue;
        detail::CdetWorkspace<R> ws;
        ElementAccum<R> acc;
        Permutation sigma = nth_permutation(n, lo);
        for (std::uint64_t rank = lo; rank < hi; ++rank) {
            AlgElement<R> inner = ws.run(m, &sigma);
            if (!inner.is_zero()) acc.add(inner, Rational(sigma.sign()));
            sigma.next();
        }
        partial[static_cast<std::size_t>(t)] = acc.take(m.algebra());
    }

    ElementAccum<R> merged;
    for (const auto& p : partial) merged.add(p);
    AlgElement<R> result = merged.take(m.algebra());
    result.scale(Rational(1) / Rational::factorial(static_cast<unsigned>(n)));
    return result;
}

template <CoefficientRing R>
AlgElement<R> sdet(const AlgMatrix<R>& m, SdetMethod method = SdetMethod::fast,
                   const SdetOptions& opts = {}) {
    return method == SdetMethod::naive ? sdet_naive(m, opts) : sdet_fast(m, opts);
}

// Sum of sdet over all principal submatrices (the empty submatrix contributes
// the algebra unit). 2^n terms.
template <CoefficientRing R>
AlgElement<R> pme_sum(const AlgMatrix<R>& m, const SdetOptions& opts = {}) {
    const int n = m.size();
    detail::check_cutoff(n, opts.fast_cutoff, detail::kSdetHardCap, opts.force, "pme_sum");
    ElementAccum<R> acc;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 0; s <= full; ++s)
        acc.add(sdet_fast(m.principal_submatrix(s), opts));
    return acc.take(m.algebra());
}

} // namespace symdet
