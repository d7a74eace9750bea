#include "esymm/rational.hpp"

#include <ostream>

#include "esymm/errors.hpp"

namespace esymm {

mpq_class Rational::make_int(long long n) {
    mpz_class z;
    bool neg = n < 0;
    unsigned long long mag = neg ? 0ULL - static_cast<unsigned long long>(n)
                                 : static_cast<unsigned long long>(n);
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
    if (neg) z = -z;
    return mpq_class(z);
}

Rational::Rational(long num, long den) {
    if (den == 0) throw DimensionError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    auto bad = [&] { throw ParseError("invalid rational literal: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    std::string text(s);
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            return Rational(mpq_class(n));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) bad();
        mpz_class n(num), d(den);
        if (d == 0) bad();
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
        bad();
    }
    return Rational(); // unreachable
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw DimensionError("inverse of zero rational");
    return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DimensionError("division of rational by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace esymm
