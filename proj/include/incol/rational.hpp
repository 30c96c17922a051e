#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace incol {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction in canonical form: gcd(num, den) == 1 and den > 0.
/// All graph densities, thresholds and discharging weights are computed
/// with this type; no floating point is used anywhere in the library.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    /// Largest integer <= value.
    BigInt floor() const {
        if (num_ >= 0 || den_ == 1) return num_ / den_;
        return num_ / den_ - 1;
    }

    /// Smallest integer >= value.
    BigInt ceil() const {
        if (num_ <= 0 || den_ == 1) return num_ / den_;
        return num_ / den_ + 1;
    }

    Rational operator-() const { return Rational(raw{}, -num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // den > 0 on both sides, so cross multiplication preserves order.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "p/q", or just "p" when the value is an integer.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Accepts "p" or "p/q" with optional leading minus; never floating point.
    static Rational parse(std::string_view text) {
        auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'"); };
        if (text.empty()) bad();
        auto slash = text.find('/');
        auto parse_int = [&](std::string_view part) -> BigInt {
            if (part.empty()) bad();
            std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
            if (i == part.size()) bad();
            for (std::size_t j = i; j < part.size(); ++j)
                if (part[j] < '0' || part[j] > '9') bad();
            return BigInt(std::string(part));
        };
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    struct raw {};
    Rational(raw, BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace incol
