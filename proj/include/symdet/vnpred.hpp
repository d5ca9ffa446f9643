#pragma once

#include <string>
#include <vector>

#include "symdet/graph.hpp"
#include "symdet/ncpoly.hpp"
#include "symdet/sdet.hpp"

namespace symdet {

// Hamiltonian-cycle polynomial machinery over the 2x2 (x) nxn matrix algebra
// carrying free-polynomial coefficients, plus the commutative sdet polynomial
// family over Mat(Q,m) with its per-monomial coefficient function.

// Entries use f = e(1,2) and s = e(2,2) in the 2x2 factor (f\cdot s = f,
// s\cdot f = 0, so surviving products start in row 1): row 1 holds
// f (x) e(1,j) (x) x_1_j on arcs (1,j); rows i != 1 hold s (x) e(i,j) (x) x_i_j;
// everything else is the zero tensor.
AlgMatrix<NCPoly> build_vnp_matrix(const Graph& g);

// Variable name for the arc (i,j).
std::string hc_variable_name(int i, int j);

struct HcExtraction {
    NCPoly hc;
    bool structure_ok = true; // every nonzero sdet term sits on (e(1,2))x(e(1,1))
    std::string detail;
};

// sdet of the arc matrix, checked for the f / e(1,1) shape, then the
// coefficient at that label scaled by (-1)^(n+1) n!.
HcExtraction extract_hc_report(const Graph& g, const SdetOptions& opts = {});

// Same, but a structure violation is a hard failure.
NCPoly extract_hc(const Graph& g, const SdetOptions& opts = {});

// Sum over single-n-cycle permutations whose arcs all exist: the ordered word
// x_1_j1 x_j1_j2 ... x_jn-1_1. Independent of the sdet path.
NCPoly hc_direct(const Graph& g);

// The m x m grid of commutative polynomials forming sdet of the generic
// symbolic matrix: entry (i,j) of the n x n matrix is the m x m matrix of
// fresh variables m_i_j_k_l. Includes the 1/n! normalization.
struct FamilyGrid {
    int m = 0;
    int n = 0;
    std::vector<CPoly> entries; // row-major, m*m

    const CPoly& at(int k, int l) const; // 1-indexed
};

FamilyGrid sdet_family(int m, int n, const SdetOptions& opts = {});

std::string family_variable_name(int i, int j, int k, int l);

// One factor m^{a,b}_{x,y} of a degree-n family monomial.
struct FamilyFactor {
    int a = 0, b = 0; // super-row / super-column, 1..n
    int x = 0, y = 0; // inner entry, 1..m
    bool operator==(const FamilyFactor&) const = default;
};

// Parses "m_a_b_x_y"; throws input_error on anything else.
FamilyFactor parse_family_variable(const std::string& name);

// Coefficient of the monomial prod_r m^{a_r,b_r}_{x_r,y_r} in T_{k,l}:
// sgn(alpha) N / n!, where alpha maps a_r -> b_r and N counts the orderings of
// the n factors whose inner indices chain k -> ... -> l. (N replaces the
// closed-form estimate K(n-2)!; K = c1 c2 - c3 = 0 still forces 0.)
Rational family_monomial_coeff(const std::vector<FamilyFactor>& factors, int k, int l, int n);

} // namespace symdet
