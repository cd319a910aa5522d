#include "pvlab/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <ostream>

namespace pvlab {

namespace {

using Int = Rational::Int;

Int parse_integer(const std::string& s) {
    if (s.empty()) throw RationalParseError("empty integer in rational literal");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw RationalParseError("sign without digits: '" + s + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw RationalParseError("invalid digit in '" + s + "'");
    return Int(s);
}

}  // namespace

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DivisionByZero();
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw RationalParseError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Int n = parse_integer(s.substr(0, slash));
        Int d = parse_integer(s.substr(slash + 1));
        if (d == 0) throw RationalParseError("zero denominator in '" + text + "'");
        return Rational(std::move(n), std::move(d));
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        if (tail.find_first_of("+-.") != std::string::npos)
            throw RationalParseError("invalid decimal literal '" + text + "'");
        bool neg = !head.empty() && head[0] == '-';
        if (head.empty() || head == "-" || head == "+") head += "0";
        Int scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Int n = parse_integer(head) * scale;
        Int frac = tail.empty() ? Int(0) : parse_integer(tail);
        n += neg ? -frac : frac;
        return Rational(std::move(n), std::move(scale));
    }
    return Rational(parse_integer(s), Int(1));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw DivisionByZero();
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw DivisionByZero();
    return Rational(den_, num_);
}

Rational Rational::pow(long long e) const {
    if (e < 0) return reciprocal().pow(-e);
    Rational base = *this;
    Rational acc = 1;
    for (long long k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        if (k > 1) base *= base;
    }
    return acc;
}

double Rational::to_double() const {
    using boost::multiprecision::cpp_rational;
    return static_cast<double>(cpp_rational(num_, den_));
}

std::string Rational::to_fraction_string() const {
    return num_.str() + "/" + den_.str();
}

std::string Rational::str() const {
    return is_integer() ? num_.str() : to_fraction_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const Rational& ExtendedRational::finite() const {
    if (infinite_) throw std::domain_error("value is infinite");
    return finite_;
}

Rational ExtendedRational::reciprocal_or_zero() const {
    if (infinite_) return Rational(0);
    return finite_.reciprocal();
}

ExtendedRational ExtendedRational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "inf" || s == "infinity" || s == "+inf") return infinity();
    return ExtendedRational(Rational::parse(text));
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.finite_ <=> b.finite_;
}

std::string ExtendedRational::str() const { return infinite_ ? "inf" : finite_.str(); }

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) { return os << r.str(); }

}  // namespace pvlab
