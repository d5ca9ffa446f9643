#pragma once

#include <optional>
#include <vector>

#include "symdet/graph.hpp"
#include "symdet/sdet.hpp"

namespace symdet {

// The cycle-counting reduction: an undirected graph becomes a matrix over
// cycle_algebra(n) whose symmetrized determinant carries every k-cycle count
// on diagonal u(l,l) basis labels.

// Diagonal entries t, entry (i,j) = s.u(i,j) when the edge {i,j} exists.
AlgMatrix<Rational> build_mg(const Graph& g);

struct CycleCountOptions {
    int max_n = 7; // n! * n * 2^n products; ~4.5M at n = 7
    bool force = false;
    int threads = 1;
};

// All counts read from one sdet evaluation.
struct CycleSpectrum {
    int n = 0;
    long long hamiltonian = 0;
    std::vector<long long> by_length; // index k-3 holds the k-cycle count, k in 3..n-1
    // Diagnostics: the raw sum of coefficients on the (t, s^2, u(l,l)) labels.
    // A 2-cycle is its own reversal, so the k >= 3 scaling degenerates there;
    // the raw sum is exposed instead of a count.
    Rational k2_coefficient_sum;

    long long count(int k) const; // k in 3..n; k = n gives hamiltonian
};

// sdet of build_mg(g); the single expensive step behind every count.
AlgElement<Rational> reduction_sdet(const Graph& g, const CycleCountOptions& opts = {});

CycleSpectrum cycle_spectrum(const Graph& g, const CycleCountOptions& opts = {});
CycleSpectrum cycle_spectrum(const Graph& g, const AlgElement<Rational>& det);

long long hamiltonian_count(const Graph& g, const CycleCountOptions& opts = {});
long long k_cycle_count(const Graph& g, int k, const CycleCountOptions& opts = {});

// Checks the structural shape of sdet(M_G): every nonzero coefficient must sit
// on a diagonal label of the form (t, s^0), (t, s^k) with 2 <= k < n, or
// (1, s^n); the k = 0 coefficients are exactly 1; the s^n coefficients do not
// depend on the diagonal position.
struct ReductionStructureReport {
    bool labels_ok = true;      // only the predicted (alpha, beta, u(l,l)) shapes
    bool k0_term_ok = true;     // coefficient 1 on every (t, s^0, u(l,l))
    bool ncycle_uniform = true; // s^n coefficient independent of l
    std::string detail;
    bool pass() const { return labels_ok && k0_term_ok && ncycle_uniform; }
};

ReductionStructureReport verify_reduction_structure(const Graph& g,
                                                    const CycleCountOptions& opts = {});
ReductionStructureReport verify_reduction_structure(const Graph& g,
                                                    const AlgElement<Rational>& det);

} // namespace symdet
