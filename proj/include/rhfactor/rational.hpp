#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <charconv>

#include "rhfactor/errors.hpp"

namespace rhf {

// Exact rational on 64-bit words, normalized (den > 0, gcd = 1). Desk-scale
// inputs keep the words small; overflow after reduction is a hard error
// rather than silent wraparound.
class Rat {
public:
    constexpr Rat() = default;
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    static Rat from_parts(__int128 n, __int128 d) {
        if (d == 0) fail(Err::DomainError, "rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            fail(Err::Overflow, "rational overflow");
        Rat r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    Rat operator+(const Rat& o) const {
        return from_parts((__int128)num_ * o.den_ + (__int128)o.num_ * den_,
                          (__int128)den_ * o.den_);
    }
    Rat operator-(const Rat& o) const {
        return from_parts((__int128)num_ * o.den_ - (__int128)o.num_ * den_,
                          (__int128)den_ * o.den_);
    }
    Rat operator*(const Rat& o) const {
        return from_parts((__int128)num_ * o.num_, (__int128)den_ * o.den_);
    }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) fail(Err::DomainError, "rational division by zero");
        return from_parts((__int128)num_ * o.den_, (__int128)den_ * o.num_);
    }
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

    Rat reciprocal() const {
        if (num_ == 0) fail(Err::DomainError, "reciprocal of zero");
        return from_parts(den_, num_);
    }

    int cmp(const Rat& o) const {
        __int128 l = (__int128)num_ * o.den_;
        __int128 r = (__int128)o.num_ * den_;
        return l < r ? -1 : (l > r ? 1 : 0);
    }
    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return cmp(o) < 0; }
    bool operator<=(const Rat& o) const { return cmp(o) <= 0; }
    bool operator>(const Rat& o) const { return cmp(o) > 0; }
    bool operator>=(const Rat& o) const { return cmp(o) >= 0; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Nearest integer, ties toward even; used for plateau rounding.
    long long round_nearest() const {
        long long q = num_ / den_;
        long long r = num_ % den_;
        if (r == 0) return q;
        if (r < 0) { q -= 1; r += den_; }
        // q + r/den with 0 < r < den
        long long twice = 2 * r;
        if (twice > den_) return q + 1;
        if (twice < den_) return q;
        return (q % 2 == 0) ? q : q + 1;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses "p", "-p/q". Whitespace not allowed.
    static Rat parse(const std::string& s) {
        auto bad = [&] { fail(Err::ParseError, "bad rational '" + s + "'"); };
        long long n = 0, d = 1;
        const char* b = s.data();
        const char* e = s.data() + s.size();
        auto res = std::from_chars(b, e, n);
        if (res.ec != std::errc()) bad();
        if (res.ptr != e) {
            if (*res.ptr != '/') bad();
            auto res2 = std::from_chars(res.ptr + 1, e, d);
            if (res2.ec != std::errc() || res2.ptr != e) bad();
        }
        return Rat(n, d);
    }

private:
    void assign(long long n, long long d) {
        *this = from_parts(n, d);
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    long long num_{0};
    long long den_{1};
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

} // namespace rhf
