#ifndef PPEVAL_RATIONAL_HPP
#define PPEVAL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ppeval {

// Exact arbitrary-precision rational. Every probability that flows through an
// evaluator is one of these; no floating point touches the evaluation path.
// Invariant: canonical form (lowest terms, denominator > 0).
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long numerator) : value_(numerator) {}  // NOLINT: implicit by design
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    // Accepts "p/q", an integer literal, or a finite decimal ("0.4375"),
    // all parsed exactly. Throws Error on malformed input.
    static Rational parse(std::string_view text);

    // numerator / 2^frac_bits
    static Rational dyadic(const mpz_class& numerator, unsigned frac_bits);

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_probability() const { return sgn(value_) >= 0 && value_ <= 1; }

    // True iff the denominator is a power of two; reports the exponent.
    bool is_dyadic(unsigned* frac_bits = nullptr) const;

    std::string to_string() const { return value_.get_str(); }
    // Decimal approximation rounded half away from zero, e.g. "0.437500".
    std::string to_decimal_string(int digits = 6) const;
    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& out, const Rational& r);

private:
    mpq_class value_;
};

}  // namespace ppeval

#endif
