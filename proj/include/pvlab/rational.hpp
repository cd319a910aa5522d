#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace pvlab {

/// Thrown on division by a zero rational. Exact arithmetic never produces
/// silent infinities.
struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("rational division by zero") {}
};

/// Thrown when a string cannot be parsed as an exact rational.
struct RationalParseError : std::invalid_argument {
    explicit RationalParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Exact rational number with arbitrary-precision numerator/denominator.
///
/// Invariants: den > 0 and gcd(|num|, den) = 1 at all times. All arithmetic
/// is exact; chained operations cannot overflow.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(Int num, Int den);

    /// Parses "a/b", an integer, or a finite decimal ("1.25" -> 5/4).
    /// Decimal digits map to a power-of-ten denominator, so the conversion
    /// is exact.
    static Rational parse(const std::string& text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational reciprocal() const;

    /// Exact integer power; negative exponents invert (zero base errors).
    Rational pow(long long e) const;

    double to_double() const;

    /// Canonical "num/den" form, e.g. "3/4", "-1/2", "8/1".
    std::string to_fraction_string() const;
    /// Compact form: integers print without "/1".
    std::string str() const;

private:
    void normalize();

    Int num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A rational extended with +infinity, which compares greater than every
/// finite value. Houses exponents like q = infinity on criterion lines that
/// admit it.
class ExtendedRational {
public:
    ExtendedRational() : finite_(Rational(0)), infinite_(false) {}
    ExtendedRational(Rational r) : finite_(std::move(r)), infinite_(false) {}  // NOLINT
    ExtendedRational(long long n) : finite_(Rational(n)), infinite_(false) {}  // NOLINT

    static ExtendedRational infinity() {
        ExtendedRational e;
        e.infinite_ = true;
        return e;
    }

    /// Parses like Rational::parse, plus "inf"/"infinity".
    static ExtendedRational parse(const std::string& text);

    bool is_infinite() const { return infinite_; }

    /// The finite value; errors when infinite.
    const Rational& finite() const;

    /// 1/x, with 1/inf = 0 exactly. Errors on 1/0.
    Rational reciprocal_or_zero() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.finite_ == b.finite_;
    }
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

    std::string str() const;

private:
    Rational finite_;
    bool infinite_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

}  // namespace pvlab
