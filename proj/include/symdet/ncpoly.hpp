#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdet/rational.hpp"

namespace symdet {

// Interned variable symbol. Ids are process-local; everything serialized uses
// the name, so output never depends on interning order.
class VarId {
  public:
    explicit VarId(const std::string& name); // interns, rejects empty names
    static VarId from_raw(std::uint32_t id);

    std::uint32_t raw() const { return id_; }
    const std::string& name() const;

    bool operator==(const VarId& o) const = default;
    auto operator<=>(const VarId& o) const = default;

  private:
    std::uint32_t id_;
};

// Ordered sequence of variables; the empty word is the multiplicative identity.
class Word {
  public:
    Word() = default;
    explicit Word(VarId v) : letters_{v.raw()} {}
    explicit Word(std::vector<std::uint32_t> letters) : letters_(std::move(letters)) {}

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    VarId letter(std::size_t i) const { return VarId::from_raw(letters_[i]); }
    const std::vector<std::uint32_t>& raw() const { return letters_; }

    Word concat(const Word& o) const;
    std::vector<std::string> names() const;
    std::string str() const; // letters joined by '.', "1" for the empty word

    bool operator==(const Word& o) const = default;
    // Storage order: by length, then by letter ids.
    std::strong_ordering operator<=>(const Word& o) const;

  private:
    std::vector<std::uint32_t> letters_;
};

// Free noncommutative polynomial with rational coefficients. No zero
// coefficients are ever stored. Word-length is capped (see degree_cap) so a
// runaway gadget composition fails loudly instead of exhausting memory.
class NCPoly {
  public:
    NCPoly() = default; // zero
    explicit NCPoly(const Rational& constant);
    static NCPoly one() { return NCPoly(Rational(1)); }
    static NCPoly variable(VarId v);
    static NCPoly monomial(Word w, Rational coef);

    static std::size_t degree_cap();
    static void set_degree_cap(std::size_t cap);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::size_t degree() const; // 0 for the zero polynomial
    Rational coeff(const Word& w) const;
    Rational constant_term() const { return coeff(Word()); }
    const std::map<Word, Rational>& terms() const { return terms_; }

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly operator*(const NCPoly& o) const; // order-preserving
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { a += b; return a; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { a -= b; return a; }
    NCPoly operator-() const;

    void scale(const Rational& c);

    // Variables fixed to rational values; remaining letters keep their order.
    NCPoly substitute(const std::map<VarId, Rational>& assignment) const;
    std::vector<VarId> variables() const; // sorted by name

    bool operator==(const NCPoly& o) const = default;

    // Terms sorted by (degree, then letter names lexicographically) — the
    // canonical serialization order, independent of interning order.
    std::vector<std::pair<Word, Rational>> canonical_terms() const;
    std::string str() const;

  private:
    void add_term(const Word& w, const Rational& c);
    std::map<Word, Rational> terms_;
};

// Commutative monomial: sorted (variable, exponent >= 1) pairs.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(const Word& w); // multiset image of a word

    bool empty() const { return factors_.empty(); }
    std::size_t degree() const;
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& factors() const { return factors_; }
    Monomial operator*(const Monomial& o) const;
    // Expanded variable list with repetition, sorted by name (serialized form).
    std::vector<std::string> names_expanded() const;

    bool operator==(const Monomial& o) const = default;
    std::strong_ordering operator<=>(const Monomial& o) const;

  private:
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors_;
};

// Commutative polynomial with rational coefficients.
class CPoly {
  public:
    CPoly() = default;
    explicit CPoly(const Rational& constant);
    static CPoly one() { return CPoly(Rational(1)); }
    static CPoly variable(VarId v);
    static CPoly monomial(Monomial m, Rational coef);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const Monomial& m) const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    CPoly operator*(const CPoly& o) const;
    friend CPoly operator+(CPoly a, const CPoly& b) { a += b; return a; }
    friend CPoly operator-(CPoly a, const CPoly& b) { a -= b; return a; }

    void scale(const Rational& c);

    bool operator==(const CPoly& o) const = default;
    std::string str() const;

  private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

// Ring homomorphism onto the commutative polynomial ring.
CPoly commutative_image(const NCPoly& p);

// Dense square matrix of rationals (row-major), used by the matrix-substitution
// identity test below.
struct RationalMatrix {
    int size = 0;
    std::vector<Rational> data;

    static RationalMatrix zero(int n);
    static RationalMatrix identity(int n);
    Rational& at(int r, int c) { return data[static_cast<std::size_t>(r * size + c)]; }
    const Rational& at(int r, int c) const { return data[static_cast<std::size_t>(r * size + c)]; }
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix& operator+=(const RationalMatrix& o);
    void scale(const Rational& c);
    bool is_zero() const;
    bool operator==(const RationalMatrix& o) const = default;
};

// Evaluates p with every variable replaced by a pseudorandom substitution_size
// x substitution_size integer matrix derived deterministically from (seed,
// variable name). Entries are uniform over {-10^6 .. 10^6}.
RationalMatrix pit_matrix_eval(const NCPoly& p, int substitution_size, std::uint64_t seed);

// Probabilistic equality: agreement of pit_matrix_eval across `num_seeds`
// seeds with substitution size exceeding half the maximum degree.
bool pit_probably_equal(const NCPoly& a, const NCPoly& b, int num_seeds = 3,
                        std::uint64_t seed0 = 0);

} // namespace symdet
