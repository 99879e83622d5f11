#include "mapdist/rational.hpp"

#include <ostream>

#include "mapdist/errors.hpp"

namespace mapdist {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw usage_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw usage_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw usage_error("Rational::parse: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpq_class v(s);
        if (v.get_den() == 0) throw usage_error("Rational::parse: zero denominator in " + s);
        v.canonicalize();
        return Rational(v);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(mpq_class(s));
    // decimal: digits.dddd -> integer part + fraction over a power of ten
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    bool neg = false;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
        neg = digits[0] == '-';
        digits = digits.substr(1);
    }
    if (digits.empty()) throw usage_error("Rational::parse: bad decimal " + s);
    mpz_class num(digits, 10);
    mpz_class den(1);
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    mpq_class v(neg ? mpz_class(-num) : num, den);
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
}

Rational Rational::binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mapdist
