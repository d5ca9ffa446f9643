#include "symdet/algebra.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "symdet/error.hpp"

namespace symdet {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void normalize_terms(BasisTerms& t) {
    std::sort(t.begin(), t.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    BasisTerms out;
    for (auto& [k, c] : t) {
        if (!out.empty() && out.back().first == k)
            out.back().second += c;
        else
            out.emplace_back(k, c);
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    t = std::move(out);
}

// (sum of terms) * e_b, appended to out.
void mul_terms_basis(const Algebra& alg, const BasisTerms& x, BasisIndex b, BasisTerms& out) {
    for (const auto& [k, c] : x) {
        BasisTerms prod;
        alg.mul_general(k, b, prod);
        for (auto& [k2, c2] : prod) out.emplace_back(k2, c * c2);
    }
}

void mul_basis_terms(const Algebra& alg, BasisIndex a, const BasisTerms& y, BasisTerms& out) {
    for (const auto& [k, c] : y) {
        BasisTerms prod;
        alg.mul_general(a, k, prod);
        for (auto& [k2, c2] : prod) out.emplace_back(k2, c * c2);
    }
}

BasisTerms product_of_terms(const Algebra& alg, const BasisTerms& x, const BasisTerms& y) {
    BasisTerms out;
    for (const auto& [ka, ca] : x)
        for (const auto& [kb, cb] : y) {
            BasisTerms prod;
            alg.mul_general(ka, kb, prod);
            for (auto& [k, c] : prod) out.emplace_back(k, ca * cb * c);
        }
    normalize_terms(out);
    return out;
}

} // namespace

bool Algebra::mul_single(BasisIndex, BasisIndex, BasisIndex&) const {
    throw internal_error("mul_single called on an algebra without unit structure constants");
}

std::optional<BasisIndex> Algebra::parse_label(const std::string& text) const {
    for (BasisIndex i = 0; i < dim(); ++i)
        if (label(i) == text) return i;
    return std::nullopt;
}

bool same_algebra(const AlgebraHandle& a, const AlgebraHandle& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->name() == b->name();
}

// ---------------------------------------------------------------- matrix

MatrixAlgebra::MatrixAlgebra(int m) : m_(m) {
    if (m < 1) throw input_error("matrix algebra needs m >= 1");
    for (int i = 1; i <= m_; ++i) unit_.emplace_back(unit_index(i, i), Rational(1));
}

BasisIndex MatrixAlgebra::unit_index(int i, int j) const {
    if (i < 1 || i > m_ || j < 1 || j > m_) throw input_error("matrix unit index out of range");
    return static_cast<BasisIndex>((i - 1) * m_ + (j - 1));
}

bool MatrixAlgebra::mul_single(BasisIndex a, BasisIndex b, BasisIndex& out) const {
    const int ja = static_cast<int>(a) % m_;
    const int ib = static_cast<int>(b) / m_;
    if (ja != ib) return false;
    out = static_cast<BasisIndex>((static_cast<int>(a) / m_) * m_ + static_cast<int>(b) % m_);
    return true;
}

void MatrixAlgebra::mul_general(BasisIndex a, BasisIndex b, BasisTerms& out) const {
    BasisIndex k;
    if (mul_single(a, b, k)) out.emplace_back(k, Rational(1));
}

std::string MatrixAlgebra::label(BasisIndex i) const {
    const int r = static_cast<int>(i) / m_ + 1;
    const int c = static_cast<int>(i) % m_ + 1;
    return "e(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

std::optional<BasisIndex> MatrixAlgebra::parse_label(const std::string& text) const {
    int r = 0, c = 0;
    if (std::sscanf(text.c_str(), "e(%d,%d)", &r, &c) != 2) return std::nullopt;
    if (r < 1 || r > m_ || c < 1 || c > m_) return std::nullopt;
    return unit_index(r, c);
}

// ----------------------------------------------------------------- cycle

CycleAlgebra::CycleAlgebra(int n) : n_(n) {
    if (n < 2) throw input_error("cycle algebra needs n >= 2");
    for (int l = 1; l <= n_; ++l) {
        unit_.emplace_back(encode({0, 0, l, l}), Rational(1));
        t_.emplace_back(encode({1, 0, l, l}), Rational(1));
    }
}

BasisIndex CycleAlgebra::encode(const Label& l) const {
    if (l.alpha < 0 || l.alpha > 1 || l.beta < 0 || l.beta > n_ || l.i < 1 || l.i > n_ ||
        l.j < 1 || l.j > n_)
        throw input_error("cycle label out of range");
    return static_cast<BasisIndex>(((l.alpha * (n_ + 1) + l.beta) * n_ + (l.i - 1)) * n_ +
                                   (l.j - 1));
}

CycleAlgebra::Label CycleAlgebra::decode(BasisIndex idx) const {
    Label l;
    l.j = static_cast<int>(idx % static_cast<BasisIndex>(n_)) + 1;
    idx /= static_cast<BasisIndex>(n_);
    l.i = static_cast<int>(idx % static_cast<BasisIndex>(n_)) + 1;
    idx /= static_cast<BasisIndex>(n_);
    l.beta = static_cast<int>(idx % static_cast<BasisIndex>(n_ + 1));
    l.alpha = static_cast<int>(idx / static_cast<BasisIndex>(n_ + 1));
    return l;
}

BasisIndex CycleAlgebra::su_index(int i, int j) const { return encode({0, 1, i, j}); }

bool CycleAlgebra::mul_single(BasisIndex a, BasisIndex b, BasisIndex& out) const {
    const Label x = decode(a);
    const Label y = decode(b);
    if (x.j != y.i) return false;                 // u-chain break
    if (x.beta > 0 && y.alpha == 1) return false; // s.t = 0
    if (x.beta + y.beta > n_) return false;       // s^(n+1) = 0
    out = encode({x.alpha | y.alpha, x.beta + y.beta, x.i, y.j});
    return true;
}

void CycleAlgebra::mul_general(BasisIndex a, BasisIndex b, BasisTerms& out) const {
    BasisIndex k;
    if (mul_single(a, b, k)) out.emplace_back(k, Rational(1));
}

std::string CycleAlgebra::label(BasisIndex idx) const {
    const Label l = decode(idx);
    return "t^" + std::to_string(l.alpha) + ".s^" + std::to_string(l.beta) + ".u(" +
           std::to_string(l.i) + "," + std::to_string(l.j) + ")";
}

std::optional<BasisIndex> CycleAlgebra::parse_label(const std::string& text) const {
    int a = 0, b = 0, i = 0, j = 0;
    if (std::sscanf(text.c_str(), "t^%d.s^%d.u(%d,%d)", &a, &b, &i, &j) != 4) return std::nullopt;
    if (a < 0 || a > 1 || b < 0 || b > n_ || i < 1 || i > n_ || j < 1 || j > n_)
        return std::nullopt;
    return encode({a, b, i, j});
}

// ---------------------------------------------------------------- tensor

TensorAlgebra::TensorAlgebra(AlgebraHandle left, AlgebraHandle right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (!left_ || !right_) throw input_error("tensor of null algebra");
    for (const auto& [la, ca] : left_->unit_terms())
        for (const auto& [lb, cb] : right_->unit_terms())
            unit_.emplace_back(pair_index(la, lb), ca * cb);
    normalize_terms(unit_);
}

bool TensorAlgebra::unit_structure_constants() const {
    return left_->unit_structure_constants() && right_->unit_structure_constants();
}

bool TensorAlgebra::mul_single(BasisIndex a, BasisIndex b, BasisIndex& out) const {
    const auto [al, ar] = split_index(a);
    const auto [bl, br] = split_index(b);
    BasisIndex kl, kr;
    if (!left_->mul_single(al, bl, kl) || !right_->mul_single(ar, br, kr)) return false;
    out = pair_index(kl, kr);
    return true;
}

void TensorAlgebra::mul_general(BasisIndex a, BasisIndex b, BasisTerms& out) const {
    if (unit_structure_constants()) {
        BasisIndex k;
        if (mul_single(a, b, k)) out.emplace_back(k, Rational(1));
        return;
    }
    const auto [al, ar] = split_index(a);
    const auto [bl, br] = split_index(b);
    BasisTerms lhs, rhs;
    left_->mul_general(al, bl, lhs);
    right_->mul_general(ar, br, rhs);
    for (const auto& [kl, cl] : lhs)
        for (const auto& [kr, cr] : rhs) out.emplace_back(pair_index(kl, kr), cl * cr);
}

std::string TensorAlgebra::label(BasisIndex i) const {
    const auto [a, b] = split_index(i);
    return "(" + left_->label(a) + ")x(" + right_->label(b) + ")";
}

std::optional<BasisIndex> TensorAlgebra::parse_label(const std::string& text) const {
    // Split "(L)x(R)" at the matching close paren of the leading "(".
    if (text.size() < 6 || text.front() != '(') return std::nullopt;
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t p = 0; p < text.size(); ++p) {
        if (text[p] == '(') ++depth;
        if (text[p] == ')') {
            if (--depth == 0) {
                split = p;
                break;
            }
        }
    }
    if (split == std::string::npos || split + 2 >= text.size()) return std::nullopt;
    if (text.substr(split + 1, 2) != "x(" || text.back() != ')') return std::nullopt;
    const std::string lhs = text.substr(1, split - 1);
    const std::string rhs = text.substr(split + 3, text.size() - split - 4);
    auto a = left_->parse_label(lhs);
    auto b = right_->parse_label(rhs);
    if (!a || !b) return std::nullopt;
    return pair_index(*a, *b);
}

// ----------------------------------------------------- structure constants

StructureConstantAlgebra::StructureConstantAlgebra(
    std::vector<std::string> labels, BasisTerms unit,
    std::vector<std::pair<std::pair<BasisIndex, BasisIndex>, BasisTerms>> table)
    : labels_(std::move(labels)), unit_(std::move(unit)) {
    const std::size_t d = labels_.size();
    if (d == 0) throw input_error("structure-constant algebra needs dim >= 1");
    {
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw input_error("duplicate basis labels");
    }
    normalize_terms(unit_);
    for (const auto& [k, c] : unit_)
        if (k >= d) throw input_error("unit term index out of range");
    table_.assign(d * d, {});
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    auto mix = [&hash](const std::string& s) {
        for (unsigned char c : s) {
            hash ^= c;
            hash *= 0x100000001b3ULL;
        }
    };
    for (const auto& name : labels_) mix(name);
    for (auto& [key, terms] : table) {
        const auto [a, b] = key;
        if (a >= d || b >= d) throw input_error("product index out of range");
        BasisTerms t = terms;
        normalize_terms(t);
        for (const auto& [k, c] : t) {
            if (k >= d) throw input_error("product term index out of range");
            mix(std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) + "=" +
                c.str());
        }
        table_[a * d + b] = std::move(t);
    }
    for (const auto& [k, c] : unit_) mix("u" + std::to_string(k) + "=" + c.str());
    name_ = "sc:" + std::to_string(d) + ":" + std::to_string(hash);
}

void StructureConstantAlgebra::mul_general(BasisIndex a, BasisIndex b, BasisTerms& out) const {
    const auto& t = table_[static_cast<std::size_t>(a) * labels_.size() + b];
    out.insert(out.end(), t.begin(), t.end());
}

std::string StructureConstantAlgebra::label(BasisIndex i) const {
    if (i >= labels_.size()) throw input_error("basis index out of range");
    return labels_[i];
}

std::optional<BasisIndex> StructureConstantAlgebra::parse_label(const std::string& text) const {
    for (BasisIndex i = 0; i < labels_.size(); ++i)
        if (labels_[i] == text) return i;
    return std::nullopt;
}

// -------------------------------------------------------------- factories

AlgebraHandle matrix_algebra(int m) { return std::make_shared<MatrixAlgebra>(m); }
AlgebraHandle cycle_algebra(int n) { return std::make_shared<CycleAlgebra>(n); }
AlgebraHandle tensor(AlgebraHandle left, AlgebraHandle right) {
    return std::make_shared<TensorAlgebra>(std::move(left), std::move(right));
}

AlgebraHandle parse_algebra_name(const std::string& name) {
    if (name.rfind("mat:", 0) == 0) {
        const int m = std::stoi(name.substr(4));
        return matrix_algebra(m);
    }
    if (name.rfind("cycle:", 0) == 0) {
        const int n = std::stoi(name.substr(6));
        return cycle_algebra(n);
    }
    if (name.rfind("tensor(", 0) == 0 && name.back() == ')') {
        const std::string inner = name.substr(7, name.size() - 8);
        // split at the top-level comma
        int depth = 0;
        for (std::size_t p = 0; p < inner.size(); ++p) {
            if (inner[p] == '(') ++depth;
            else if (inner[p] == ')') --depth;
            else if (inner[p] == ',' && depth == 0)
                return tensor(parse_algebra_name(inner.substr(0, p)),
                              parse_algebra_name(inner.substr(p + 1)));
        }
    }
    throw input_error("unknown algebra name: '" + name + "'");
}

// ------------------------------------------------------------------ check

AlgebraReport check_algebra(const AlgebraHandle& algebra, const AlgebraCheckOptions& opts) {
    AlgebraReport report;
    const auto d = static_cast<BasisIndex>(algebra->dim());
    const Algebra& alg = *algebra;

    // Unit laws on every basis element.
    for (BasisIndex b = 0; b < d && report.unital; ++b) {
        BasisTerms eb{{b, Rational(1)}};
        BasisTerms lhs, rhs;
        mul_terms_basis(alg, alg.unit_terms(), b, lhs);
        mul_basis_terms(alg, b, alg.unit_terms(), rhs);
        normalize_terms(lhs);
        normalize_terms(rhs);
        if (lhs != eb || rhs != eb) {
            report.unital = false;
            report.witness = "unit law fails on " + alg.label(b);
        }
    }

    auto check_triple = [&](BasisIndex a, BasisIndex b, BasisIndex c) {
        BasisTerms ab, bc;
        alg.mul_general(a, b, ab);
        normalize_terms(ab);
        alg.mul_general(b, c, bc);
        normalize_terms(bc);
        BasisTerms lhs, rhs;
        mul_terms_basis(alg, ab, c, lhs);
        mul_basis_terms(alg, a, bc, rhs);
        normalize_terms(lhs);
        normalize_terms(rhs);
        ++report.triples_checked;
        if (lhs != rhs) {
            report.associative = false;
            if (report.witness.empty())
                report.witness = "associativity fails on (" + alg.label(a) + ", " + alg.label(b) +
                                 ", " + alg.label(c) + ")";
            return false;
        }
        return true;
    };

    if (algebra->dim() <= opts.exhaustive_dim_bound) {
        for (BasisIndex a = 0; a < d && report.associative; ++a)
            for (BasisIndex b = 0; b < d && report.associative; ++b)
                for (BasisIndex c = 0; c < d; ++c)
                    if (!check_triple(a, b, c)) break;
    } else {
        report.exhaustive = false;
        std::uint64_t state = opts.seed ^ 0x5bf0f5e2a31cf5a7ULL;
        for (std::size_t k = 0; k < opts.sampled_triples && report.associative; ++k) {
            const auto a = static_cast<BasisIndex>(splitmix64(state) % d);
            const auto b = static_cast<BasisIndex>(splitmix64(state) % d);
            const auto c = static_cast<BasisIndex>(splitmix64(state) % d);
            check_triple(a, b, c);
        }
    }
    return report;
}

// -------------------------------------------------- cycle instantiation

HomomorphismReport instantiate_cycle_algebra(int n, int max_n) {
    if (n < 2) throw input_error("cycle algebra needs n >= 2");
    if (n > max_n)
        throw cutoff_error("cycle-algebra instantiation limited to n <= " +
                           std::to_string(max_n));
    HomomorphismReport report;
    report.n = n;

    const CycleAlgebra cyc(n);
    auto big = std::make_shared<MatrixAlgebra>(n + 1);
    auto small = std::make_shared<MatrixAlgebra>(n);
    const TensorAlgebra tens(big, small);

    // phi on the multiplicative pieces.
    auto u_of = [&](int i, int j) {
        BasisTerms t;
        for (int r = 1; r <= n + 1; ++r)
            t.emplace_back(tens.pair_index(big->unit_index(r, r), small->unit_index(i, j)),
                           Rational(1));
        return t;
    };
    BasisTerms shift; // s = (sum_r e(r,r+1)) (x) I_n
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            shift.emplace_back(tens.pair_index(big->unit_index(r, r + 1), small->unit_index(c, c)),
                               Rational(1));
    normalize_terms(shift);
    BasisTerms tee; // t = e(1,1) (x) I_n
    for (int c = 1; c <= n; ++c)
        tee.emplace_back(tens.pair_index(big->unit_index(1, 1), small->unit_index(c, c)),
                         Rational(1));

    const auto dim = static_cast<BasisIndex>(cyc.dim());
    std::vector<BasisTerms> phi(dim);
    for (BasisIndex idx = 0; idx < dim; ++idx) {
        const auto l = cyc.decode(idx);
        BasisTerms acc = u_of(l.i, l.j);
        for (int b = 0; b < l.beta; ++b) acc = product_of_terms(tens, shift, acc);
        if (l.alpha) acc = product_of_terms(tens, tee, acc);
        phi[idx] = std::move(acc);
    }

    for (BasisIndex a = 0; a < dim; ++a) {
        for (BasisIndex b = 0; b < dim; ++b) {
            BasisTerms expect;
            BasisIndex k;
            if (cyc.mul_single(a, b, k)) expect = phi[k];
            const BasisTerms got = product_of_terms(tens, phi[a], phi[b]);
            ++report.pairs_checked;
            if (got != expect) {
                report.pass = false;
                report.counterexample =
                    "phi(" + cyc.label(a) + ")*phi(" + cyc.label(b) + ") != phi(product)";
                return report;
            }
        }
    }
    report.pass = true;
    return report;
}

} // namespace symdet
