#include "symdet/rational.hpp"

#include <ostream>

#include "symdet/error.hpp"

namespace symdet {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    // Route through strings to stay exact over the full long long range.
    v_ = mpq_class(mpz_class(std::to_string(num))) / mpq_class(mpz_class(std::to_string(den)));
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw input_error("empty rational literal");
    auto slash = text.find('/');
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw input_error("bad rational literal: '" + text + "'");
    if (slash != std::string::npos && sgn(mpq_class(v).get_den()) == 0)
        throw input_error("zero denominator in rational literal: '" + text + "'");
    if (v.get_den() == 0)
        throw input_error("zero denominator in rational literal: '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational Rational::falling_factorial_ratio(unsigned n, unsigned k) {
    mpz_class acc = 1;
    for (unsigned v = k + 1; v <= n; ++v) acc *= v;
    return Rational(mpq_class(acc));
}

long long Rational::to_integer() const {
    if (!is_integer()) throw internal_error("expected integer rational, got " + str());
    mpz_class num = v_.get_num();
    if (!num.fits_slong_p()) throw internal_error("integer rational out of range: " + str());
    return static_cast<long long>(num.get_si());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw input_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    mpq_class neg(v_);
    neg = -neg;
    return Rational(std::move(neg));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace symdet
