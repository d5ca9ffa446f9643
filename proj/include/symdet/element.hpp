#pragma once

#include <concepts>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "symdet/algebra.hpp"
#include "symdet/error.hpp"
#include "symdet/rational.hpp"

namespace symdet {

// Coefficient rings an algebra element can carry: Rational for the finite
// algebras, NCPoly for the free-polynomial tensor factor, CPoly for the
// commutative family. Default construction is the ring zero.
template <class R>
concept CoefficientRing = requires(R a, const R b, const Rational& q) {
    R();
    R(q);
    { a += b };
    { b* b } -> std::convertible_to<R>;
    { b.is_zero() } -> std::convertible_to<bool>;
    { a.scale(q) };
    { b == b } -> std::convertible_to<bool>;
};

// Element of an associative unital algebra: a sparse rational (or polynomial)
// combination of basis labels. Immutable value semantics; no zero coefficients
// stored; terms sorted by basis index.
template <CoefficientRing R>
class AlgElement {
  public:
    using Term = std::pair<BasisIndex, R>;

    AlgElement() = default; // detached zero; only assignment is allowed
    explicit AlgElement(AlgebraHandle alg) : alg_(std::move(alg)) {}

    static AlgElement zero(AlgebraHandle alg) { return AlgElement(std::move(alg)); }

    static AlgElement unit(AlgebraHandle alg) {
        AlgElement e(alg);
        for (const auto& [k, c] : alg->unit_terms()) e.terms_.emplace_back(k, R(c));
        return e;
    }

    static AlgElement basis(AlgebraHandle alg, BasisIndex k, R coef = R(Rational(1))) {
        AlgElement e(std::move(alg));
        if (k >= e.alg_->dim()) throw input_error("basis index out of range");
        if (!coef.is_zero()) e.terms_.emplace_back(k, std::move(coef));
        return e;
    }

    static AlgElement from_terms(AlgebraHandle alg, std::map<BasisIndex, R> terms) {
        AlgElement e(std::move(alg));
        for (auto& [k, c] : terms) {
            if (k >= e.alg_->dim()) throw input_error("basis index out of range");
            if (!c.is_zero()) e.terms_.emplace_back(k, std::move(c));
        }
        return e;
    }

    const AlgebraHandle& algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    R coeff(BasisIndex k) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term& t, BasisIndex v) { return t.first < v; });
        return (it != terms_.end() && it->first == k) ? it->second : R();
    }

    AlgElement& operator+=(const AlgElement& o) {
        require_same(o);
        std::map<BasisIndex, R> acc;
        for (auto& [k, c] : terms_) acc.emplace(k, std::move(c));
        for (const auto& [k, c] : o.terms_) {
            auto [it, inserted] = acc.try_emplace(k, c);
            if (!inserted) it->second += c;
        }
        terms_.clear();
        for (auto& [k, c] : acc)
            if (!c.is_zero()) terms_.emplace_back(k, std::move(c));
        return *this;
    }

    friend AlgElement operator+(AlgElement a, const AlgElement& b) { a += b; return a; }

    AlgElement operator-(const AlgElement& o) const {
        AlgElement neg = o;
        neg.scale(Rational(-1));
        neg += *this;
        return neg;
    }

    AlgElement operator*(const AlgElement& o) const;

    void scale(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return;
        }
        for (auto& [k, coef] : terms_) coef.scale(c);
    }

    bool operator==(const AlgElement& o) const {
        return same_algebra(alg_, o.alg_) && terms_ == o.terms_;
    }

  private:
    void require_same(const AlgElement& o) const {
        if (!same_algebra(alg_, o.alg_))
            throw input_error("elements belong to different algebras");
    }

    AlgebraHandle alg_;
    std::vector<Term> terms_;
};

// Accumulates sums of element products without materializing intermediates.
template <CoefficientRing R>
class ElementAccum {
  public:
    void add_term(BasisIndex k, R value) {
        if (value.is_zero()) return;
        auto [it, inserted] = acc_.try_emplace(k, std::move(value));
        if (!inserted) it->second += value; // value moved only on insert
    }

    void add(const AlgElement<R>& e, const Rational& scalar = Rational(1)) {
        for (const auto& [k, c] : e.terms()) {
            R scaled = c;
            scaled.scale(scalar);
            add_unchecked(k, std::move(scaled));
        }
    }

    // acc += sign * (x * y), with coefficient products taken in x,y order.
    void add_product(const AlgElement<R>& x, const AlgElement<R>& y, bool negate = false) {
        if (x.is_zero() || y.is_zero()) return;
        const Algebra& alg = *x.algebra();
        if (alg.unit_structure_constants()) {
            for (const auto& [ka, ca] : x.terms()) {
                for (const auto& [kb, cb] : y.terms()) {
                    BasisIndex k;
                    if (!alg.mul_single(ka, kb, k)) continue;
                    R prod = ca * cb;
                    if (negate) prod.scale(Rational(-1));
                    add_unchecked(k, std::move(prod));
                }
            }
        } else {
            BasisTerms buffer;
            for (const auto& [ka, ca] : x.terms()) {
                for (const auto& [kb, cb] : y.terms()) {
                    buffer.clear();
                    alg.mul_general(ka, kb, buffer);
                    if (buffer.empty()) continue;
                    R prod = ca * cb;
                    if (negate) prod.scale(Rational(-1));
                    for (const auto& [k, c] : buffer) {
                        R scaled = prod;
                        scaled.scale(c);
                        add_unchecked(k, std::move(scaled));
                    }
                }
            }
        }
    }

    bool empty() const { return acc_.empty(); }

    AlgElement<R> take(AlgebraHandle alg) {
        auto out = AlgElement<R>::from_terms(std::move(alg), std::move(acc_));
        acc_.clear();
        return out;
    }

  private:
    void add_unchecked(BasisIndex k, R&& value) {
        auto [it, inserted] = acc_.try_emplace(k, std::move(value));
        if (!inserted) {
            it->second += value;
        }
    }

    std::map<BasisIndex, R> acc_;
};

template <CoefficientRing R>
AlgElement<R> AlgElement<R>::operator*(const AlgElement& o) const {
    require_same(o);
    ElementAccum<R> acc;
    acc.add_product(*this, o);
    return acc.take(alg_);
}

} // namespace symdet
