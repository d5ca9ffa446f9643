#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symdet/rational.hpp"

namespace symdet {

using BasisIndex = std::uint32_t;
// Sparse linear combination of basis elements.
using BasisTerms = std::vector<std::pair<BasisIndex, Rational>>;

// A finite-dimensional associative unital algebra presented as a
// multiplication oracle on basis elements. Elements themselves live in
// AlgElement (element.hpp) and carry generic coefficient rings; the structure
// constants here are always rational.
class Algebra {
  public:
    virtual ~Algebra() = default;

    virtual std::size_t dim() const = 0;

    // True when every basis-pair product is either zero or a single basis
    // element with coefficient +1 (matrix, cycle and tensor algebras).
    virtual bool unit_structure_constants() const { return false; }

    // Fast path, valid when unit_structure_constants(): writes the product
    // basis index and returns true, or returns false for a zero product.
    virtual bool mul_single(BasisIndex a, BasisIndex b, BasisIndex& out) const;

    // General path: appends the terms of e_a * e_b to `out` (not cleared).
    virtual void mul_general(BasisIndex a, BasisIndex b, BasisTerms& out) const = 0;

    virtual const BasisTerms& unit_terms() const = 0;

    virtual std::string label(BasisIndex i) const = 0;
    virtual std::optional<BasisIndex> parse_label(const std::string& text) const;

    // Stable name; two handles with the same name are interchangeable.
    // Structure-constant algebras embed a content hash.
    virtual std::string name() const = 0;
};

using AlgebraHandle = std::shared_ptr<const Algebra>;

bool same_algebra(const AlgebraHandle& a, const AlgebraHandle& b);

// Full matrix algebra Mat(Q, m): basis e(i,j), e(i,j)e(k,l) = [j==k] e(i,l),
// unit sum_i e(i,i). Labels are 1-indexed "e(i,j)".
class MatrixAlgebra final : public Algebra {
  public:
    explicit MatrixAlgebra(int m);
    int m() const { return m_; }
    std::size_t dim() const override { return static_cast<std::size_t>(m_) * m_; }
    bool unit_structure_constants() const override { return true; }
    bool mul_single(BasisIndex a, BasisIndex b, BasisIndex& out) const override;
    void mul_general(BasisIndex a, BasisIndex b, BasisTerms& out) const override;
    const BasisTerms& unit_terms() const override { return unit_; }
    std::string label(BasisIndex i) const override;
    std::optional<BasisIndex> parse_label(const std::string& text) const override;
    std::string name() const override { return "mat:" + std::to_string(m_); }

    BasisIndex unit_index(int i, int j) const; // e(i,j), 1-indexed

  private:
    int m_;
    BasisTerms unit_;
};

// The cycle-counting algebra on labels t^a.s^b.u(i,j) with a in {0,1},
// b in {0..n}, i,j in {1..n}; dimension 2(n+1)n^2. Basis products follow
//   u(i,j)u(k,l) = [j==k] u(i,l),  t^2 = t,  s.t = 0 (t.s survives),
//   s and t commute with every u(i,j),  s^(n+1) = 0,
// which collapses to: zero iff j != k, or (b1 > 0 and a2 = 1), or b1+b2 > n;
// otherwise t^(a1|a2) s^(b1+b2) u(i,l).
class CycleAlgebra final : public Algebra {
  public:
    explicit CycleAlgebra(int n); // n >= 2
    int n() const { return n_; }
    std::size_t dim() const override {
        return 2u * static_cast<std::size_t>(n_ + 1) * n_ * n_;
    }
    bool unit_structure_constants() const override { return true; }
    bool mul_single(BasisIndex a, BasisIndex b, BasisIndex& out) const override;
    void mul_general(BasisIndex a, BasisIndex b, BasisTerms& out) const override;
    const BasisTerms& unit_terms() const override { return unit_; }
    std::string label(BasisIndex i) const override;
    std::optional<BasisIndex> parse_label(const std::string& text) const override;
    std::string name() const override { return "cycle:" + std::to_string(n_); }

    struct Label {
        int alpha; // t exponent, 0 or 1
        int beta;  // s exponent, 0..n
        int i, j;  // u indices, 1..n
    };
    BasisIndex encode(const Label& l) const;
    Label decode(BasisIndex idx) const;

    // The element t = sum_l t.u(l,l); "bare" t has no single basis label.
    const BasisTerms& t_terms() const { return t_; }
    BasisIndex su_index(int i, int j) const; // s.u(i,j)

  private:
    int n_;
    BasisTerms unit_, t_;
};

// Tensor product of two algebras: basis pairs, componentwise products.
class TensorAlgebra final : public Algebra {
  public:
    TensorAlgebra(AlgebraHandle left, AlgebraHandle right);
    const AlgebraHandle& left() const { return left_; }
    const AlgebraHandle& right() const { return right_; }
    std::size_t dim() const override { return left_->dim() * right_->dim(); }
    bool unit_structure_constants() const override;
    bool mul_single(BasisIndex a, BasisIndex b, BasisIndex& out) const override;
    void mul_general(BasisIndex a, BasisIndex b, BasisTerms& out) const override;
    const BasisTerms& unit_terms() const override { return unit_; }
    std::string label(BasisIndex i) const override;
    std::optional<BasisIndex> parse_label(const std::string& text) const override;
    std::string name() const override {
        return "tensor(" + left_->name() + "," + right_->name() + ")";
    }

    BasisIndex pair_index(BasisIndex a, BasisIndex b) const {
        return static_cast<BasisIndex>(a * right_->dim() + b);
    }
    std::pair<BasisIndex, BasisIndex> split_index(BasisIndex idx) const {
        const auto dr = static_cast<BasisIndex>(right_->dim());
        return {idx / dr, idx % dr};
    }

  private:
    AlgebraHandle left_, right_;
    BasisTerms unit_;
};

// User-defined algebra from an explicit structure-constant table. Pairs
// missing from the table multiply to zero.
class StructureConstantAlgebra final : public Algebra {
  public:
    StructureConstantAlgebra(std::vector<std::string> labels, BasisTerms unit,
                             std::vector<std::pair<std::pair<BasisIndex, BasisIndex>, BasisTerms>>
                                 table);
    std::size_t dim() const override { return labels_.size(); }
    void mul_general(BasisIndex a, BasisIndex b, BasisTerms& out) const override;
    const BasisTerms& unit_terms() const override { return unit_; }
    std::string label(BasisIndex i) const override;
    std::optional<BasisIndex> parse_label(const std::string& text) const override;
    std::string name() const override { return name_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const BasisTerms& product_terms(BasisIndex a, BasisIndex b) const {
        return table_[static_cast<std::size_t>(a) * labels_.size() + b];
    }

  private:
    std::vector<std::string> labels_;
    BasisTerms unit_;
    std::vector<BasisTerms> table_; // dense dim*dim table of term lists
    std::string name_;
};

AlgebraHandle matrix_algebra(int m);
AlgebraHandle cycle_algebra(int n);
AlgebraHandle tensor(AlgebraHandle left, AlgebraHandle right);

// Parses builtin algebra names: "mat:2", "cycle:4", "tensor(mat:2,mat:3)".
AlgebraHandle parse_algebra_name(const std::string& name);

struct AlgebraCheckOptions {
    std::size_t exhaustive_dim_bound = 1000; // above this, sample triples
    std::size_t sampled_triples = 100000;
    std::uint64_t seed = 0;
};

struct AlgebraReport {
    bool associative = true;
    bool unital = true;
    bool exhaustive = true;
    std::uint64_t triples_checked = 0;
    std::string witness; // first violation, empty when clean
    bool pass() const { return associative && unital; }
};

// Verifies (xy)z = x(yz) on basis triples plus both unit laws; failures are
// reported, never thrown.
AlgebraReport check_algebra(const AlgebraHandle& algebra, const AlgebraCheckOptions& opts = {});

struct HomomorphismReport {
    int n = 0;
    bool pass = false;
    std::uint64_t pairs_checked = 0;
    std::string counterexample; // empty when pass
};

// Maps every cycle-algebra basis label to its concrete realization inside
// Mat(Q,n+1) (x) Mat(Q,n) via u(i,j) = I (x) e(i,j), s = shift (x) I,
// t = e(1,1) (x) I, and verifies phi(x)phi(y) = phi(x*y) on all basis pairs.
HomomorphismReport instantiate_cycle_algebra(int n, int max_n = 6);

} // namespace symdet
