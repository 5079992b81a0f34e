#include "ppeval/rational.hpp"

#include <cctype>
#include <ostream>

#include "ppeval/errors.hpp"

namespace ppeval {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0)
        throw Error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::dyadic(const mpz_class& numerator, unsigned frac_bits) {
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), frac_bits);
    return Rational(mpq_class(numerator, den));
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty())
        throw Error("empty rational literal");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '.' && c != '-' && c != '+')
            throw Error("malformed rational literal '" + s + "'");
    }
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos && dot != std::string::npos)
        throw Error("malformed rational literal '" + s + "'");
    try {
        if (slash != std::string::npos) {
            std::string num = s.substr(0, slash);
            std::string den = s.substr(slash + 1);
            if (num.empty() || den.empty() || den.find('-') != std::string::npos)
                throw Error("malformed rational literal '" + s + "'");
            mpq_class q(mpz_class(num), mpz_class(den));
            if (q.get_den() == 0)
                throw Error("zero denominator in '" + s + "'");
            return Rational(std::move(q));
        }
        if (dot != std::string::npos) {
            std::string whole = s.substr(0, dot);
            std::string frac = s.substr(dot + 1);
            if (frac.empty() || frac.find('-') != std::string::npos)
                throw Error("malformed rational literal '" + s + "'");
            bool negative = !whole.empty() && whole[0] == '-';
            if (whole.empty() || whole == "-" || whole == "+")
                whole += "0";
            mpz_class scale = 1;
            for (size_t i = 0; i < frac.size(); ++i)
                scale *= 10;
            mpz_class num = mpz_class(whole) * scale;
            mpz_class frac_part(frac);
            num += negative ? -frac_part : frac_part;
            return Rational(mpq_class(num, scale));
        }
        return Rational(mpq_class(mpz_class(s)));
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

bool Rational::is_dyadic(unsigned* frac_bits) const {
    const mpz_class& den = value_.get_den();
    // Power of two <=> exactly one set bit.
    if (mpz_popcount(den.get_mpz_t()) != 1)
        return false;
    if (frac_bits)
        *frac_bits = static_cast<unsigned>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
    return true;
}

std::string Rational::to_decimal_string(int digits) const {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    mpz_class num = value_.get_num() * scale;
    mpz_class den = value_.get_den();
    mpz_class q, r;
    mpz_class num_abs = abs(num);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num_abs.get_mpz_t(), den.get_mpz_t());
    if (r * 2 >= den)
        q += 1;
    std::string body = q.get_str();
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    if (sgn(value_) < 0)
        body.insert(0, "-");
    return body;
}

std::ostream& operator<<(std::ostream& out, const Rational& r) {
    return out << r.to_string();
}

}  // namespace ppeval
