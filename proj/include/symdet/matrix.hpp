#pragma once

#include <vector>

#include "symdet/element.hpp"
#include "symdet/permutation.hpp"

namespace symdet {

// Square matrix over one shared algebra. Rows/columns are addressed 0-based
// in code; subset arguments use the 1-indexed convention of SubsetMask.
// The 0x0 matrix is legal (its sdet is the algebra unit).
template <CoefficientRing R>
class AlgMatrix {
  public:
    AlgMatrix(AlgebraHandle alg, int n)
        : alg_(std::move(alg)), n_(n),
          entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                   AlgElement<R>::zero(alg_)) {
        if (n < 0) throw input_error("negative matrix size");
    }

    static AlgMatrix identity(AlgebraHandle alg, int n) {
        AlgMatrix m(alg, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = AlgElement<R>::unit(alg);
        return m;
    }

    int size() const { return n_; }
    const AlgebraHandle& algebra() const { return alg_; }

    AlgElement<R>& at(int r, int c) { return entries_[index(r, c)]; }
    const AlgElement<R>& at(int r, int c) const { return entries_[index(r, c)]; }

    void set(int r, int c, AlgElement<R> value) {
        if (!same_algebra(alg_, value.algebra()))
            throw input_error("matrix entry from a different algebra");
        entries_[index(r, c)] = std::move(value);
    }

    AlgMatrix plus_identity() const {
        AlgMatrix m = *this;
        for (int i = 0; i < n_; ++i) m.at(i, i) += AlgElement<R>::unit(alg_);
        return m;
    }

    AlgMatrix transpose() const {
        AlgMatrix m(alg_, n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) m.at(c, r) = at(r, c);
        return m;
    }

    void scale_row(int r, const Rational& c) {
        for (int j = 0; j < n_; ++j) at(r, j).scale(c);
    }

    // Keeps rows and columns indexed by s (1-indexed bitmask), in order.
    AlgMatrix principal_submatrix(SubsetMask s) const {
        std::vector<int> keep;
        for (int i = 1; i <= n_; ++i)
            if (s >> (i - 1) & 1) keep.push_back(i - 1);
        AlgMatrix m(alg_, static_cast<int>(keep.size()));
        for (std::size_t r = 0; r < keep.size(); ++r)
            for (std::size_t c = 0; c < keep.size(); ++c)
                m.at(static_cast<int>(r), static_cast<int>(c)) = at(keep[r], keep[c]);
        return m;
    }

    bool operator==(const AlgMatrix& o) const {
        return n_ == o.n_ && same_algebra(alg_, o.alg_) && entries_ == o.entries_;
    }

  private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= n_ || c < 0 || c >= n_) throw input_error("matrix index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(c);
    }

    AlgebraHandle alg_;
    int n_;
    std::vector<AlgElement<R>> entries_;
};

} // namespace symdet
