#include "symdet/ncpoly.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "symdet/error.hpp"

namespace symdet {

namespace {

// Process-wide variable intern table.
struct InternTable {
    std::mutex mu;
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> ids;
};

InternTable& interns() {
    static InternTable table;
    return table;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::atomic<std::size_t> g_degree_cap{64};

} // namespace

VarId::VarId(const std::string& name) {
    if (name.empty()) throw input_error("empty variable name");
    auto& t = interns();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) {
        id_ = it->second;
        return;
    }
    id_ = static_cast<std::uint32_t>(t.names.size());
    t.names.push_back(name);
    t.ids.emplace(name, id_);
}

VarId VarId::from_raw(std::uint32_t id) {
    VarId v("_");
    v.id_ = id;
    return v;
}

const std::string& VarId::name() const {
    auto& t = interns();
    std::lock_guard<std::mutex> lock(t.mu);
    if (id_ >= t.names.size()) throw internal_error("unknown variable id");
    return t.names[id_];
}

Word Word::concat(const Word& o) const {
    std::vector<std::uint32_t> letters = letters_;
    letters.insert(letters.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(letters));
}

std::vector<std::string> Word::names() const {
    std::vector<std::string> out;
    out.reserve(letters_.size());
    for (std::uint32_t id : letters_) out.push_back(VarId::from_raw(id).name());
    return out;
}

std::string Word::str() const {
    if (empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += '.';
        out += VarId::from_raw(letters_[i]).name();
    }
    return out;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (auto c = letters_[i] <=> o.letters_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

NCPoly::NCPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Word(), constant);
}

NCPoly NCPoly::variable(VarId v) {
    NCPoly p;
    p.terms_.emplace(Word(v), Rational(1));
    return p;
}

NCPoly NCPoly::monomial(Word w, Rational coef) {
    NCPoly p;
    if (!coef.is_zero()) p.terms_.emplace(std::move(w), std::move(coef));
    return p;
}

std::size_t NCPoly::degree_cap() { return g_degree_cap.load(); }
void NCPoly::set_degree_cap(std::size_t cap) { g_degree_cap.store(cap); }

std::size_t NCPoly::degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.length());
    return d;
}

Rational NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    const std::size_t cap = degree_cap();
    NCPoly out;
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            if (wa.length() + wb.length() > cap)
                throw cutoff_error("noncommutative product exceeds word-length cap of " +
                                   std::to_string(cap));
            out.add_term(wa.concat(wb), ca * cb);
        }
    }
    return out;
}

NCPoly NCPoly::operator-() const {
    NCPoly out = *this;
    out.scale(Rational(-1));
    return out;
}

void NCPoly::scale(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return;
    }
    for (auto& [w, coef] : terms_) coef *= c;
}

NCPoly NCPoly::substitute(const std::map<VarId, Rational>& assignment) const {
    NCPoly out;
    for (const auto& [w, c] : terms_) {
        Rational coef = c;
        std::vector<std::uint32_t> kept;
        bool dead = false;
        for (std::uint32_t id : w.raw()) {
            auto it = assignment.find(VarId::from_raw(id));
            if (it == assignment.end()) {
                kept.push_back(id);
            } else {
                coef *= it->second;
                if (coef.is_zero()) {
                    dead = true;
                    break;
                }
            }
        }
        if (!dead) out.add_term(Word(std::move(kept)), coef);
    }
    return out;
}

std::vector<VarId> NCPoly::variables() const {
    std::vector<VarId> vars;
    for (const auto& [w, c] : terms_)
        for (std::uint32_t id : w.raw()) vars.push_back(VarId::from_raw(id));
    std::sort(vars.begin(), vars.end(),
              [](const VarId& a, const VarId& b) { return a.name() < b.name(); });
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

std::vector<std::pair<Word, Rational>> NCPoly::canonical_terms() const {
    std::vector<std::pair<Word, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.length() != b.first.length()) return a.first.length() < b.first.length();
        return a.first.names() < b.first.names();
    });
    return out;
}

std::string NCPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : canonical_terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (!w.empty()) os << "*" << w.str();
    }
    return os.str();
}

Monomial::Monomial(const Word& w) {
    std::vector<std::uint32_t> ids = w.raw();
    std::sort(ids.begin(), ids.end());
    for (std::uint32_t id : ids) {
        if (!factors_.empty() && factors_.back().first == id)
            ++factors_.back().second;
        else
            factors_.emplace_back(id, 1);
    }
}

std::size_t Monomial::degree() const {
    std::size_t d = 0;
    for (const auto& [id, e] : factors_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
            out.factors_.push_back(*a++);
        else if (a == factors_.end() || b->first < a->first)
            out.factors_.push_back(*b++);
        else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

std::vector<std::string> Monomial::names_expanded() const {
    std::vector<std::string> out;
    for (const auto& [id, e] : factors_)
        for (std::uint32_t k = 0; k < e; ++k) out.push_back(VarId::from_raw(id).name());
    std::sort(out.begin(), out.end());
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    if (auto c = factors_.size() <=> o.factors_.size(); c != 0) return c;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (auto c = factors_[i].first <=> o.factors_[i].first; c != 0) return c;
        if (auto c = factors_[i].second <=> o.factors_[i].second; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

CPoly::CPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

CPoly CPoly::variable(VarId v) {
    CPoly p;
    p.terms_.emplace(Monomial(Word(v)), Rational(1));
    return p;
}

CPoly CPoly::monomial(Monomial m, Rational coef) {
    CPoly p;
    if (!coef.is_zero()) p.terms_.emplace(std::move(m), std::move(coef));
    return p;
}

Rational CPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void CPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CPoly& CPoly::operator+=(const CPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CPoly CPoly::operator*(const CPoly& o) const {
    CPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

void CPoly::scale(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return;
    }
    for (auto& [m, coef] : terms_) coef *= c;
}

std::string CPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (const auto& name : m.names_expanded()) os << "*" << name;
    }
    return os.str();
}

CPoly commutative_image(const NCPoly& p) {
    CPoly out;
    for (const auto& [w, c] : p.terms()) out += CPoly::monomial(Monomial(w), c);
    return out;
}

RationalMatrix RationalMatrix::zero(int n) {
    RationalMatrix m;
    m.size = n;
    m.data.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
    return m;
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m = zero(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (size != o.size) throw input_error("matrix size mismatch");
    RationalMatrix out = zero(size);
    for (int i = 0; i < size; ++i)
        for (int k = 0; k < size; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < size; ++j) out.at(i, j) += aik * o.at(k, j);
        }
    return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
    if (size != o.size) throw input_error("matrix size mismatch");
    for (std::size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
    return *this;
}

void RationalMatrix::scale(const Rational& c) {
    for (auto& v : data) v *= c;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : data)
        if (!v.is_zero()) return false;
    return true;
}

namespace {

constexpr long kPitEntryBound = 1000000;

RationalMatrix pit_substitution_matrix(int size, std::uint64_t seed, const std::string& name) {
    RationalMatrix m = RationalMatrix::zero(size);
    std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + fnv1a(name);
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) {
            const std::uint64_t raw = splitmix64(state);
            const long span = 2 * kPitEntryBound + 1;
            m.at(r, c) = Rational(static_cast<long>(raw % static_cast<std::uint64_t>(span)) -
                                  kPitEntryBound);
        }
    return m;
}

} // namespace

RationalMatrix pit_matrix_eval(const NCPoly& p, int substitution_size, std::uint64_t seed) {
    if (substitution_size < 2) throw input_error("substitution size must be at least 2");
    std::map<std::uint32_t, RationalMatrix> subs;
    for (VarId v : p.variables())
        subs.emplace(v.raw(), pit_substitution_matrix(substitution_size, seed, v.name()));
    RationalMatrix acc = RationalMatrix::zero(substitution_size);
    for (const auto& [w, c] : p.terms()) {
        RationalMatrix term = RationalMatrix::identity(substitution_size);
        for (std::uint32_t id : w.raw()) term = term * subs.at(id);
        term.scale(c);
        acc += term;
    }
    return acc;
}

bool pit_probably_equal(const NCPoly& a, const NCPoly& b, int num_seeds, std::uint64_t seed0) {
    const std::size_t deg = std::max(a.degree(), b.degree());
    const int size = std::max(2, static_cast<int>(deg / 2) + 1);
    NCPoly diff = a;
    diff -= b;
    if (diff.is_zero()) return true;
    for (int s = 0; s < num_seeds; ++s)
        if (!pit_matrix_eval(diff, size, seed0 + static_cast<std::uint64_t>(s)).is_zero())
            return false;
    return true;
}

} // namespace symdet
