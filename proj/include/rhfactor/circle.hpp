#pragma once

#include <vector>

#include "rhfactor/piecewise.hpp"

namespace rhf {

// One constant plateau on an open arc. Arc coordinates are theta/pi in
// [-1, 1] so that pi-rational arc endpoints stay exact.
struct ArcPiece {
    XReal lo, hi; // theta/pi
    PiScalar val;
};

enum class Parity { Even, Odd, Neither };

// Real-valued piecewise-constant data on the unit circle, value 0 off arcs.
// Arcs must not cross the theta = pi seam; give two arcs instead.
class PiecewiseCircle {
public:
    PiecewiseCircle() = default;
    explicit PiecewiseCircle(std::vector<ArcPiece> arcs) { assign(std::move(arcs)); }

    static PiecewiseCircle indicator(XReal lo, XReal hi, PiScalar c) {
        return PiecewiseCircle({ArcPiece{std::move(lo), std::move(hi), std::move(c)}});
    }

    const std::vector<ArcPiece>& arcs() const { return arcs_; }
    bool empty() const { return arcs_.empty(); }

    // value at theta (radians)
    double value_at_theta(double theta) const {
        double c = theta / kPi;
        for (const auto& a : arcs_)
            if (a.lo.to_double() < c && c < a.hi.to_double()) return a.val.eval();
        return 0.0;
    }

    PiScalar value_at_coord(const XReal& c) const {
        for (const auto& a : arcs_)
            if (a.lo < c && c < a.hi) return a.val;
        return PiScalar{};
    }

    bool is_breakpoint_theta(double theta, double tol = 1e-12) const {
        double c = theta / kPi;
        for (const auto& a : arcs_)
            if (std::abs(a.lo.to_double() - c) < tol || std::abs(a.hi.to_double() - c) < tol)
                return true;
        return false;
    }

    std::vector<XReal> breakpoint_coords() const {
        std::vector<XReal> bp;
        for (const auto& a : arcs_) { bp.push_back(a.lo); bp.push_back(a.hi); }
        std::sort(bp.begin(), bp.end());
        bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
        return bp;
    }

    PiecewiseCircle scaled(const Rat& c) const {
        std::vector<ArcPiece> out = arcs_;
        for (auto& a : out) a.val = a.val.scaled(c);
        return PiecewiseCircle(std::move(out));
    }
    PiecewiseCircle scaled(double c) const {
        std::vector<ArcPiece> out = arcs_;
        for (auto& a : out) a.val = a.val.scaled(c);
        return PiecewiseCircle(std::move(out));
    }

    // theta -> -theta
    PiecewiseCircle reflected() const {
        std::vector<ArcPiece> out;
        for (const auto& a : arcs_) out.push_back(ArcPiece{-a.hi, -a.lo, a.val});
        return PiecewiseCircle(std::move(out));
    }

    PiecewiseCircle plus(const PiecewiseCircle& o) const {
        std::vector<XReal> cuts{XReal(Rat(-1)), XReal(Rat(1))};
        for (const auto& a : arcs_) { cuts.push_back(a.lo); cuts.push_back(a.hi); }
        for (const auto& a : o.arcs_) { cuts.push_back(a.lo); cuts.push_back(a.hi); }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        auto cell = [](const PiecewiseCircle& h, const XReal& lo, const XReal& hi) {
            for (const auto& a : h.arcs_)
                if (a.lo <= lo && hi <= a.hi) return a.val;
            return PiScalar{};
        };
        std::vector<ArcPiece> out;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            PiScalar v = cell(*this, cuts[i], cuts[i + 1]) + cell(o, cuts[i], cuts[i + 1]);
            if (!v.is_zero()) out.push_back(ArcPiece{cuts[i], cuts[i + 1], v});
        }
        return PiecewiseCircle(std::move(out));
    }

    // max |f| over the circle
    double sup_abs() const {
        double m = 0;
        for (const auto& a : arcs_) m = std::max(m, std::abs(a.val.eval()));
        return m;
    }

    // Is f identically zero within tol (a.e.)?
    bool zero_within(double tol) const {
        for (const auto& a : arcs_)
            if (std::abs(a.val.eval()) > tol) return false;
        return true;
    }

private:
    void assign(std::vector<ArcPiece> arcs) {
        const XReal lo_lim{Rat(-1)}, hi_lim{Rat(1)};
        for (const auto& a : arcs)
            if (a.lo < lo_lim || a.hi > hi_lim || !(a.lo < a.hi))
                fail(Err::ValidationError, "arc outside (-pi, pi] or empty");
        std::erase_if(arcs, [](const ArcPiece& a) { return a.val.is_zero(); });
        std::sort(arcs.begin(), arcs.end(),
                  [](const ArcPiece& a, const ArcPiece& b) { return a.lo < b.lo; });
        for (std::size_t i = 0; i + 1 < arcs.size(); ++i)
            if (arcs[i + 1].lo < arcs[i].hi)
                fail(Err::ValidationError, "overlapping arcs");
        for (auto& a : arcs) {
            if (!arcs_.empty() && arcs_.back().hi == a.lo && arcs_.back().val.same_value(a.val))
                arcs_.back().hi = a.hi;
            else
                arcs_.push_back(std::move(a));
        }
    }

    std::vector<ArcPiece> arcs_;
};

// f(theta) vs f(-theta) on merged breakpoints, tolerance 1e-12. The zero
// function reports Even; pipeline oddness checks use is_odd_within.
inline bool equal_within(const PiecewiseCircle& f, const PiecewiseCircle& g, double tol) {
    PiecewiseCircle diff = f.plus(g.scaled(Rat(-1)));
    return diff.zero_within(tol);
}

inline bool is_odd_within(const PiecewiseCircle& f, double tol = 1e-12) {
    return f.plus(f.reflected()).zero_within(tol);
}

inline bool is_even_within(const PiecewiseCircle& f, double tol = 1e-12) {
    return equal_within(f, f.reflected(), tol);
}

inline Parity parity(const PiecewiseCircle& f, double tol = 1e-12) {
    bool even = is_even_within(f, tol);
    bool odd = is_odd_within(f, tol);
    if (even) return Parity::Even;
    if (odd) return Parity::Odd;
    return Parity::Neither;
}

} // namespace rhf
