#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rhfactor/intervals.hpp"

namespace rhf {

inline constexpr std::size_t kMaxPieces = 10000;

// One constant plateau on an open interval.
struct RealPiece {
    XReal lo, hi;
    PiScalar val;
};

// Sampled boundary data with linear interpolation; only the quadrature
// evaluation path accepts it, set algebra rejects it.
struct SampledData {
    std::vector<std::pair<double, double>> knots; // (t, value), t strictly increasing
};

// Real-valued piecewise-constant boundary data on the line; value 0 off the
// pieces. Breakpoints stay exact rationals whenever the inputs were exact.
class PiecewiseReal {
public:
    PiecewiseReal() = default;
    explicit PiecewiseReal(std::vector<RealPiece> pieces) { assign(std::move(pieces)); }
    static PiecewiseReal sampled(SampledData data) {
        PiecewiseReal f;
        f.sampled_ = std::move(data);
        return f;
    }

    // c * indicator of (lo, hi)
    static PiecewiseReal indicator(XReal lo, XReal hi, PiScalar c) {
        return PiecewiseReal({RealPiece{std::move(lo), std::move(hi), std::move(c)}});
    }

    const std::vector<RealPiece>& pieces() const { return pieces_; }
    bool has_sampled() const { return sampled_.has_value(); }
    const SampledData& sampled_data() const { return *sampled_; }
    bool empty() const { return pieces_.empty() && !sampled_; }

    PiScalar value_at(const XReal& t) const {
        require_piecewise("value_at");
        for (const auto& p : pieces_)
            if (p.lo < t && t < p.hi) return p.val;
        return PiScalar{};
    }

    double value_at_approx(double t) const {
        if (sampled_) return sampled_value(t);
        for (const auto& p : pieces_)
            if (p.lo.to_double() < t && t < p.hi.to_double()) return p.val.eval();
        return 0.0;
    }

    bool is_breakpoint(const XReal& t) const {
        for (const auto& p : pieces_)
            if (p.lo == t || p.hi == t) return true;
        return false;
    }

    std::vector<XReal> breakpoints() const {
        std::vector<XReal> bp;
        for (const auto& p : pieces_) {
            if (p.lo.finite()) bp.push_back(p.lo);
            if (p.hi.finite()) bp.push_back(p.hi);
        }
        std::sort(bp.begin(), bp.end());
        bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
        return bp;
    }

    RealSet support() const {
        std::vector<Interval> ivs;
        for (const auto& p : pieces_) ivs.emplace_back(p.lo, p.hi);
        if (sampled_ && !sampled_->knots.empty())
            ivs.emplace_back(XReal(sampled_->knots.front().first), XReal(sampled_->knots.back().first));
        return RealSet(std::move(ivs));
    }

    double sup_abs() const {
        double m = 0;
        for (const auto& p : pieces_) m = std::max(m, std::abs(p.val.eval()));
        if (sampled_)
            for (const auto& [t, v] : sampled_->knots) m = std::max(m, std::abs(v));
        return m;
    }

    PiecewiseReal scaled(const Rat& c) const {
        require_piecewise("scale");
        std::vector<RealPiece> out = pieces_;
        for (auto& p : out) p.val = p.val.scaled(c);
        return PiecewiseReal(std::move(out));
    }
    PiecewiseReal scaled(double c) const {
        require_piecewise("scale");
        std::vector<RealPiece> out = pieces_;
        for (auto& p : out) p.val = p.val.scaled(c);
        return PiecewiseReal(std::move(out));
    }

    void require_piecewise(const char* op) const {
        if (sampled_) fail(Err::NotPiecewise, std::string(op) + " rejects sampled data");
    }

private:
    double sampled_value(double t) const {
        const auto& k = sampled_->knots;
        if (k.empty() || t <= k.front().first || t >= k.back().first) return 0.0;
        auto it = std::lower_bound(k.begin(), k.end(), t,
                                   [](const auto& a, double b) { return a.first < b; });
        if (it == k.begin()) return it->second;
        auto prev = std::prev(it);
        double w = (t - prev->first) / (it->first - prev->first);
        return prev->second + w * (it->second - prev->second);
    }

    void assign(std::vector<RealPiece> pieces) {
        std::erase_if(pieces, [](const RealPiece& p) { return p.val.is_zero() || p.lo == p.hi; });
        std::sort(pieces.begin(), pieces.end(),
                  [](const RealPiece& a, const RealPiece& b) { return a.lo < b.lo; });
        for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
            if (pieces[i + 1].lo < pieces[i].hi)
                fail(Err::ValidationError, "overlapping pieces at " + pieces[i + 1].lo.str());
        for (auto& p : pieces) {
            if (!pieces_.empty() && pieces_.back().hi == p.lo && pieces_.back().val.same_value(p.val))
                pieces_.back().hi = p.hi;
            else
                pieces_.push_back(std::move(p));
        }
        if (pieces_.size() > kMaxPieces) fail(Err::PieceCountOverflow, "piece count exceeds cap");
    }

    std::vector<RealPiece> pieces_;
    std::optional<SampledData> sampled_;
};

// rho(t) -> rho(1/t). Pieces with 0 strictly inside must be split first.
inline PiecewiseReal v_func(const PiecewiseReal& rho) {
    rho.require_piecewise("v_func");
    const XReal zero{Rat(0)};
    std::vector<RealPiece> out;
    for (const auto& p : rho.pieces()) {
        if (p.lo < zero && zero < p.hi)
            fail(Err::ZeroInSupport, "piece contains 0; split at 0 first");
        Interval img = v_interval(Interval(p.lo, p.hi)).front();
        out.push_back(RealPiece{img.lo, img.hi, p.val});
    }
    return PiecewiseReal(std::move(out));
}

enum class CombineOp { Add, IndicatorMultiply };

inline PiecewiseReal combine(const PiecewiseReal& f, const PiecewiseReal& g, CombineOp op) {
    f.require_piecewise("combine");
    g.require_piecewise("combine");
    std::vector<XReal> cuts;
    cuts.push_back(XReal::neg_inf());
    for (const auto& p : f.pieces()) { cuts.push_back(p.lo); cuts.push_back(p.hi); }
    for (const auto& p : g.pieces()) { cuts.push_back(p.lo); cuts.push_back(p.hi); }
    cuts.push_back(XReal::pos_inf());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.size() > 2 * kMaxPieces) fail(Err::PieceCountOverflow, "combine breakpoint overflow");

    auto cell_value = [](const PiecewiseReal& h, const XReal& lo, const XReal& hi) -> const PiScalar* {
        for (const auto& p : h.pieces())
            if (p.lo <= lo && hi <= p.hi) return &p.val;
        return nullptr;
    };

    std::vector<RealPiece> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const XReal& lo = cuts[i];
        const XReal& hi = cuts[i + 1];
        const PiScalar* fv = cell_value(f, lo, hi);
        const PiScalar* gv = cell_value(g, lo, hi);
        PiScalar v;
        switch (op) {
            case CombineOp::Add: {
                PiScalar a = fv ? *fv : PiScalar{};
                PiScalar b = gv ? *gv : PiScalar{};
                v = a + b;
                break;
            }
            case CombineOp::IndicatorMultiply:
                v = (fv && gv && !gv->is_zero()) ? *fv : PiScalar{};
                break;
        }
        if (!v.is_zero()) out.push_back(RealPiece{lo, hi, v});
    }
    return PiecewiseReal(std::move(out));
}

inline PiecewiseReal operator+(const PiecewiseReal& f, const PiecewiseReal& g) {
    return combine(f, g, CombineOp::Add);
}
inline PiecewiseReal operator-(const PiecewiseReal& f, const PiecewiseReal& g) {
    return combine(f, g.scaled(Rat(-1)), CombineOp::Add);
}

// f * indicator of a RealSet (interval boundaries are measure zero).
inline PiecewiseReal restrict_to(const PiecewiseReal& f, const RealSet& s) {
    std::vector<RealPiece> ind;
    for (const auto& iv : s.intervals())
        if (!iv.is_point()) ind.push_back(RealPiece{iv.lo, iv.hi, PiScalar::pi_multiple(Rat(1))});
    return combine(f, PiecewiseReal(std::move(ind)), CombineOp::IndicatorMultiply);
}

inline bool equal_ae(const PiecewiseReal& f, const PiecewiseReal& g) {
    return (f - g).pieces().empty();
}

// ess sup - ess inf over a bounded interval; the implicit 0 off the pieces
// counts when it is attained on positive length.
inline double oscillation(const PiecewiseReal& f, const Interval& window) {
    f.require_piecewise("oscillation");
    if (!window.bounded()) fail(Err::DomainError, "oscillation window must be bounded");
    if (window.is_point()) fail(Err::EmptyIntersection, "degenerate window");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    XReal covered{Rat(0)};
    for (const auto& p : f.pieces()) {
        XReal a = max(p.lo, window.lo);
        XReal b = min(p.hi, window.hi);
        if (a < b) {
            double v = p.val.eval();
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            covered = covered + (b - a);
        }
    }
    if (covered < window.length()) {
        lo = std::min(lo, 0.0);
        hi = std::max(hi, 0.0);
    }
    return hi - lo;
}

} // namespace rhf
