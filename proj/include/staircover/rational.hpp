#pragma once

#include <compare>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace staircover {

// Exact rational number; the denominator is always positive and the value is
// stored reduced. Sized for line slopes and intercepts, not for arbitrary
// precision: intermediate products must stay within 64 bits.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {} // NOLINT: integers convert implicitly
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    long long floor() const { return num_ >= 0 ? num_ / den_ : (num_ - den_ + 1) / den_; }
    long long ceil() const { return num_ >= 0 ? (num_ + den_ - 1) / den_ : num_ / den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    // Accepts "a" or "a/b"; throws parse_error on anything else.
    static Rational parse(const std::string& text);

    std::string to_string() const {
        return is_integer() ? std::to_string(num_)
                            : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw precondition_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
    try {
        std::size_t used = 0;
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            const long long v = std::stoll(text, &used);
            if (used != text.size()) throw parse_error("not a rational: \"" + text + "\"");
            return {v};
        }
        const long long num = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw parse_error("not a rational: \"" + text + "\"");
        const std::string den_part = text.substr(slash + 1);
        const long long den = std::stoll(den_part, &used);
        if (used != den_part.size()) throw parse_error("not a rational: \"" + text + "\"");
        return {num, den};
    } catch (const std::invalid_argument&) {
        throw parse_error("not a rational: \"" + text + "\"");
    } catch (const std::out_of_range&) {
        throw parse_error("rational out of range: \"" + text + "\"");
    }
}

} // namespace staircover
