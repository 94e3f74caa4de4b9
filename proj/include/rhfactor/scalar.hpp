#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "rhfactor/rational.hpp"

namespace rhf {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Extended real endpoint: exact rational when the source data was rational,
// plain double otherwise (e.g. arccos images of breakpoints), or +-infinity.
// The double mirror is always maintained so ordering is a single code path.
class XReal {
public:
    XReal() : d_(0), r_(0), exact_(true) {}
    XReal(const Rat& r) : d_(r.to_double()), r_(r), exact_(true) {}
    XReal(long long n) : XReal(Rat(n)) {}
    XReal(int n) : XReal(Rat(n)) {}

    explicit XReal(double d) : d_(d), r_(0), exact_(false) {
        if (std::isinf(d)) return;
        // Doubles with small power-of-two denominators (integers, 0.75, ...)
        // come from exact inputs; keep them exact.
        double scaled = d * 1048576.0; // 2^20
        if (std::abs(scaled) < 9e15 && scaled == std::floor(scaled)) {
            r_ = Rat::from_parts(static_cast<__int128>(scaled), 1048576);
            exact_ = true;
        }
    }

    static XReal pos_inf() { XReal x; x.d_ = std::numeric_limits<double>::infinity(); x.exact_ = false; return x; }
    static XReal neg_inf() { XReal x; x.d_ = -std::numeric_limits<double>::infinity(); x.exact_ = false; return x; }
    static XReal approx(double d) { XReal x; x.d_ = d; x.exact_ = false; return x; }

    bool finite() const { return std::isfinite(d_); }
    bool is_pos_inf() const { return std::isinf(d_) && d_ > 0; }
    bool is_neg_inf() const { return std::isinf(d_) && d_ < 0; }
    bool exact() const { return exact_; }
    const Rat& rat() const { return r_; }
    double to_double() const { return d_; }
    int sign() const { return d_ < 0 ? -1 : (d_ > 0 ? 1 : 0); }
    bool is_zero() const { return exact_ ? r_.is_zero() : d_ == 0.0; }

    XReal operator-() const {
        if (!finite()) return d_ > 0 ? neg_inf() : pos_inf();
        if (exact_) return XReal(-r_);
        return approx(-d_);
    }

    // 1/x with the one-point-compactification convention for infinities.
    // x == 0 maps to +/-inf only through interval code, which knows the sign
    // of the approach; a bare zero here is a contract violation.
    XReal reciprocal() const {
        if (!finite()) return XReal(Rat(0));
        if (is_zero()) fail(Err::DomainError, "reciprocal of zero endpoint");
        if (exact_) return XReal(r_.reciprocal());
        return approx(1.0 / d_);
    }

    int cmp(const XReal& o) const {
        if (d_ < o.d_) return -1;
        if (d_ > o.d_) return 1;
        if (exact_ && o.exact_) return r_.cmp(o.r_);
        return 0;
    }
    bool operator<(const XReal& o) const { return cmp(o) < 0; }
    bool operator<=(const XReal& o) const { return cmp(o) <= 0; }
    bool operator>(const XReal& o) const { return cmp(o) > 0; }
    bool operator>=(const XReal& o) const { return cmp(o) >= 0; }
    bool operator==(const XReal& o) const { return cmp(o) == 0; }
    bool operator!=(const XReal& o) const { return cmp(o) != 0; }

    XReal operator+(const XReal& o) const {
        if (!finite() || !o.finite()) {
            double s = d_ + o.d_;
            if (std::isnan(s)) fail(Err::DomainError, "inf - inf");
            return s > 0 ? pos_inf() : neg_inf();
        }
        if (exact_ && o.exact_) return XReal(r_ + o.r_);
        return approx(d_ + o.d_);
    }
    XReal operator-(const XReal& o) const { return *this + (-o); }
    XReal operator*(const XReal& o) const {
        if (!finite() || !o.finite()) {
            double p = d_ * o.d_;
            if (std::isnan(p)) fail(Err::DomainError, "0 * inf");
            return p > 0 ? pos_inf() : neg_inf();
        }
        if (exact_ && o.exact_) return XReal(r_ * o.r_);
        return approx(d_ * o.d_);
    }

    std::string str() const {
        if (is_pos_inf()) return "inf";
        if (is_neg_inf()) return "-inf";
        if (exact_) return r_.str();
        return std::to_string(d_);
    }

private:
    double d_;
    Rat r_;
    bool exact_;
};

inline XReal min(const XReal& a, const XReal& b) { return a <= b ? a : b; }
inline XReal max(const XReal& a, const XReal& b) { return a >= b ? a : b; }

// Boundary-data value: an exact rational multiple of pi, or a plain double.
// Plateau and parity decisions are exact on the rational-pi form.
class PiScalar {
public:
    PiScalar() : exact_(true), coef_(0), plain_(0) {}
    static PiScalar pi_multiple(const Rat& coef) {
        PiScalar v;
        v.exact_ = true;
        v.coef_ = coef;
        return v;
    }
    static PiScalar number(double x) {
        PiScalar v;
        v.exact_ = false;
        v.plain_ = x;
        return v;
    }

    bool exact_pi() const { return exact_; }
    const Rat& pi_coef() const { return coef_; }
    double eval() const { return exact_ ? coef_.to_double() * kPi : plain_; }
    // value / pi, exact for rational-pi data; the natural exponent coefficient
    double over_pi() const { return exact_ ? coef_.to_double() : plain_ / kPi; }
    bool is_zero() const { return exact_ ? coef_.is_zero() : plain_ == 0.0; }

    bool integer_pi_multiple(long long* k = nullptr) const {
        if (!exact_ || !coef_.is_integer()) return false;
        if (k) *k = coef_.num();
        return true;
    }

    PiScalar operator+(const PiScalar& o) const {
        if (exact_ && o.exact_) return pi_multiple(coef_ + o.coef_);
        return number(eval() + o.eval());
    }
    PiScalar operator-() const {
        return exact_ ? pi_multiple(-coef_) : number(-plain_);
    }
    PiScalar operator-(const PiScalar& o) const { return *this + (-o); }

    PiScalar scaled(const Rat& c) const {
        if (exact_) return pi_multiple(coef_ * c);
        return number(plain_ * c.to_double());
    }
    PiScalar scaled(double c) const { return number(eval() * c); }

    bool same_value(const PiScalar& o) const {
        if (exact_ && o.exact_) return coef_ == o.coef_;
        return eval() == o.eval();
    }

    std::string str() const {
        if (exact_) return coef_.str() + " pi";
        return std::to_string(plain_);
    }

private:
    bool exact_;
    Rat coef_;
    double plain_;
};

} // namespace rhf
