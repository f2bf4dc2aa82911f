#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace staircover {

// A natural number extended with a single "unbounded" value that compares
// greater than every finite value. Arithmetic with the unbounded value is
// deliberately not provided; only comparisons are.
class ExtNat {
public:
    ExtNat(std::int64_t value) : value_(value) { // NOLINT: finite values convert implicitly
        if (value < 0) throw precondition_error("ExtNat cannot hold a negative value");
    }

    static ExtNat unbounded() {
        ExtNat e{0};
        e.finite_ = false;
        return e;
    }

    bool is_unbounded() const { return !finite_; }

    std::int64_t value() const {
        if (!finite_) throw domain_error("unbounded value has no finite representation");
        return value_;
    }

    friend bool operator==(const ExtNat& a, const ExtNat& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
        if (a.finite_ != b.finite_)
            return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (!a.finite_) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

private:
    bool finite_ = true;
    std::int64_t value_ = 0;
};

} // namespace staircover
