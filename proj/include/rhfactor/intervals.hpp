#pragma once

#include <algorithm>
#include <vector>

#include "rhfactor/scalar.hpp"

namespace rhf {

// Closed interval with extended-real endpoints, lo <= hi.
struct Interval {
    XReal lo, hi;

    Interval() = default;
    Interval(XReal l, XReal h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) fail(Err::DomainError, "interval with lo > hi");
    }

    bool contains(const XReal& x) const { return lo <= x && x <= hi; }
    bool contains_open(const XReal& x) const { return lo < x && x < hi; }
    bool bounded() const { return lo.finite() && hi.finite(); }
    bool is_point() const { return lo == hi; }

    XReal length() const { return hi - lo; }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

// Distance between closed intervals (0 if they intersect).
inline XReal interval_distance(const Interval& a, const Interval& b) {
    if (a.lo > b.hi) return a.lo - b.hi;
    if (b.lo > a.hi) return b.lo - a.hi;
    return XReal(Rat(0));
}

// Finite union of disjoint closed intervals, sorted by left endpoint.
// Touching intervals are merged except at 0: the images of two opposite
// unbounded rays under t -> 1/t meet at 0 and stay separate intervals.
class RealSet {
public:
    RealSet() = default;
    explicit RealSet(std::vector<Interval> ivs) { assign(std::move(ivs)); }

    static RealSet single(XReal lo, XReal hi) { return RealSet({Interval(std::move(lo), std::move(hi))}); }

    const std::vector<Interval>& intervals() const { return ivs_; }
    bool empty() const { return ivs_.empty(); }
    std::size_t size() const { return ivs_.size(); }

    bool contains(const XReal& x) const {
        for (const auto& iv : ivs_)
            if (iv.contains(x)) return true;
        return false;
    }

    // Membership with tolerance for inexact data (closed-set test widened by tol).
    bool contains_approx(double x, double tol) const {
        for (const auto& iv : ivs_)
            if (x >= iv.lo.to_double() - tol && x <= iv.hi.to_double() + tol) return true;
        return false;
    }

    bool unbounded() const {
        return !ivs_.empty() && (!ivs_.front().lo.finite() || !ivs_.back().hi.finite());
    }

    bool contains_zero() const { return contains(XReal(Rat(0))); }

    RealSet unite(const RealSet& o) const {
        std::vector<Interval> all = ivs_;
        all.insert(all.end(), o.ivs_.begin(), o.ivs_.end());
        return RealSet(std::move(all));
    }

    bool operator==(const RealSet& o) const {
        if (ivs_.size() != o.ivs_.size()) return false;
        for (std::size_t i = 0; i < ivs_.size(); ++i)
            if (ivs_[i].lo != o.ivs_[i].lo || ivs_[i].hi != o.ivs_[i].hi) return false;
        return true;
    }

    std::string str() const {
        if (ivs_.empty()) return "{}";
        std::string s;
        for (const auto& iv : ivs_) {
            if (!s.empty()) s += " u ";
            s += iv.str();
        }
        return s;
    }

private:
    void assign(std::vector<Interval> ivs) {
        std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
            if (a.lo != b.lo) return a.lo < b.lo;
            return a.hi < b.hi;
        });
        const XReal zero{Rat(0)};
        for (auto& iv : ivs) {
            if (ivs_.empty()) {
                ivs_.push_back(iv);
                continue;
            }
            Interval& last = ivs_.back();
            bool touches_at_zero = last.hi == zero && iv.lo == zero;
            if (iv.lo <= last.hi && !touches_at_zero) {
                last.hi = max(last.hi, iv.hi);
            } else {
                ivs_.push_back(iv);
            }
        }
    }

    std::vector<Interval> ivs_;
};

inline XReal set_distance(const RealSet& a, const RealSet& b) {
    if (a.empty() || b.empty()) return XReal::pos_inf();
    XReal best = XReal::pos_inf();
    for (const auto& ia : a.intervals())
        for (const auto& ib : b.intervals())
            best = min(best, interval_distance(ia, ib));
    return best;
}

inline XReal set_distance_to_point(const RealSet& a, const XReal& p) {
    return set_distance(a, RealSet::single(p, p));
}

// The symmetry t -> 1/t on a single closed interval. Intervals may carry
// 0 or +-inf as *endpoints* (footnote geometry); 0 strictly inside is an error.
inline std::vector<Interval> v_interval(const Interval& iv) {
    const XReal zero{Rat(0)};
    if (iv.contains_open(zero) || (iv.is_point() && iv.lo.is_zero()))
        fail(Err::ZeroInSet, "V undefined on interval containing 0: " + iv.str());
    auto map_endpoint_lo = [&](const XReal& e, int side_sign) -> XReal {
        // reciprocal of an endpoint; 0 maps toward the infinity matching the
        // interval's sign, infinity maps to 0
        if (e.is_zero()) return side_sign > 0 ? XReal::pos_inf() : XReal::neg_inf();
        return e.reciprocal();
    };
    // The interval is entirely >= 0 or <= 0; reciprocals reverse order.
    int s = iv.hi.sign() > 0 ? 1 : -1;
    if (iv.lo.sign() < 0) s = -1;
    XReal new_lo = map_endpoint_lo(iv.hi, s);
    XReal new_hi = map_endpoint_lo(iv.lo, s);
    return {Interval(new_lo, new_hi)};
}

// V(A) = {t : 1/t in A}. Involution away from {0, inf}.
inline RealSet v_set(const RealSet& a) {
    std::vector<Interval> out;
    for (const auto& iv : a.intervals())
        for (auto& m : v_interval(iv)) out.push_back(m);
    return RealSet(std::move(out));
}

// Connected components of R \ U as open intervals (endpoints reported; the
// unbounded ends carry +-inf).
inline std::vector<Interval> complement_components(const RealSet& u) {
    std::vector<Interval> out;
    if (u.empty()) {
        out.emplace_back(XReal::neg_inf(), XReal::pos_inf());
        return out;
    }
    const auto& ivs = u.intervals();
    if (ivs.front().lo.finite())
        out.emplace_back(XReal::neg_inf(), ivs.front().lo);
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
        if (ivs[i].hi < ivs[i + 1].lo)
            out.emplace_back(ivs[i].hi, ivs[i + 1].lo);
    }
    if (ivs.back().hi.finite())
        out.emplace_back(ivs.back().hi, XReal::pos_inf());
    return out;
}

} // namespace rhf
