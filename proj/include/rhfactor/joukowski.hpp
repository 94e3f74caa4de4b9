#pragma once

#include <functional>

#include "rhfactor/factor.hpp"

namespace rhf {

// lambda = z + 1/z and the |z| > 1 inverse branch; the unit circle maps onto
// the branch cut [-2, 2].

inline Cplx joukowski(Cplx z) {
    if (z == Cplx{0, 0}) fail(Err::DomainError, "joukowski undefined at 0");
    return z + 1.0 / z;
}

inline Cplx joukowski_inverse(Cplx lam) {
    if (std::abs(lam.imag()) < 1e-12 && std::abs(lam.real()) <= 2.0 + 1e-12)
        fail(Err::BranchCut, "lambda on the cut [-2,2]");
    Cplx s = std::sqrt(lam - 2.0) * std::sqrt(lam + 2.0);
    Cplx z1 = 0.5 * (lam + s);
    Cplx z2 = 0.5 * (lam - s);
    return std::abs(z1) >= std::abs(z2) ? z1 : z2;
}

enum class JBranch { OuterPos, InnerPos, OuterNeg, InnerNeg };

namespace detail {

inline bool int128_sqrt(__int128 v, __int128* root) {
    if (v < 0) return false;
    __int128 r = static_cast<__int128>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v) return false;
    *root = r;
    return true;
}

// Exact inverse of lambda = t + 1/t when lambda^2 - 4 is a rational square.
inline bool rat_joukowski_inverse(const Rat& lam, bool outer, Rat* out) {
    __int128 p = lam.num(), q = lam.den();
    __int128 disc = p * p - 4 * q * q;
    __int128 s;
    if (!int128_sqrt(disc, &s)) return false;
    // roots (p +- s) / (2q); outer branch takes |t| >= 1
    Rat r1 = Rat::from_parts(p + s, 2 * q);
    Rat r2 = Rat::from_parts(p - s, 2 * q);
    Rat big = abs(r1) >= abs(r2) ? r1 : r2;
    Rat small = abs(r1) >= abs(r2) ? r2 : r1;
    *out = outer ? big : small;
    return true;
}

} // namespace detail

// Monotone branch map of a lambda endpoint to the t line, exact when the
// discriminant is a rational square.
inline XReal joukowski_branch_point(const XReal& lam, JBranch br) {
    bool outer = br == JBranch::OuterPos || br == JBranch::OuterNeg;
    bool pos = br == JBranch::OuterPos || br == JBranch::InnerPos;
    if (!lam.finite()) {
        if (pos) return outer ? XReal::pos_inf() : XReal(Rat(0));
        return outer ? XReal::neg_inf() : XReal(Rat(0));
    }
    if (lam.exact()) {
        const Rat& r = lam.rat();
        if (r == Rat(2)) return XReal(Rat(1));
        if (r == Rat(-2)) return XReal(Rat(-1));
        Rat t;
        if (detail::rat_joukowski_inverse(r, outer, &t)) return XReal(t);
    }
    double l = lam.to_double();
    double s = std::sqrt(std::max(l * l - 4.0, 0.0));
    double t = pos ? 0.5 * (l + (outer ? s : -s)) : 0.5 * (l + (outer ? -s : s));
    return XReal::approx(t);
}

// theta/pi for theta = arccos(lambda/2); exact for the five rational points.
inline XReal arccos_coord(const XReal& lam) {
    if (lam.exact()) {
        const Rat& r = lam.rat();
        if (r == Rat(2)) return XReal(Rat(0));
        if (r == Rat(1)) return XReal(Rat(1, 3));
        if (r == Rat(0)) return XReal(Rat(1, 2));
        if (r == Rat(-1)) return XReal(Rat(2, 3));
        if (r == Rat(-2)) return XReal(Rat(1));
    }
    return XReal::approx(std::acos(lam.to_double() / 2.0) / kPi);
}

// The input N is specified through the bounded argument of M on the lambda
// line: N(z) = scale * P(z + 1/z, eta).
struct JoukowskiProfile {
    PiecewiseReal eta;
    double scale = 1.0;
    std::function<Cplx(Cplx)> cross_check; // optional black-box N for tests
};

// The Eq-(19)/(22)/(23) split of M into circle- and line-supported parts.
struct FactorSplit {
    PiecewiseReal m0_arg;    // chi_[-2,2] * eta
    PiecewiseReal m1_arg;    // eta off [-2,2]
    PiecewiseCircle nu_hat0; // odd induced circle argument
    PiecewiseReal nu;        // induced line argument, nu(t) = -nu(1/t)
};

inline FactorSplit split_m(const JoukowskiProfile& profile) {
    profile.eta.require_piecewise("split_m");
    const XReal two{Rat(2)}, minus_two{Rat(-2)};
    RealSet middle = RealSet::single(minus_two, two);
    RealSet outside({Interval(XReal::neg_inf(), minus_two), Interval(two, XReal::pos_inf())});

    FactorSplit out;
    out.m0_arg = restrict_to(profile.eta, middle);
    out.m1_arg = restrict_to(profile.eta, outside);

    std::vector<RealPiece> nu_pieces;
    for (const auto& p : out.m1_arg.pieces()) {
        if (p.hi <= minus_two) {
            nu_pieces.push_back(RealPiece{joukowski_branch_point(p.lo, JBranch::OuterNeg),
                                          joukowski_branch_point(p.hi, JBranch::OuterNeg), p.val});
            nu_pieces.push_back(RealPiece{joukowski_branch_point(p.hi, JBranch::InnerNeg),
                                          joukowski_branch_point(p.lo, JBranch::InnerNeg), -p.val});
        } else {
            nu_pieces.push_back(RealPiece{joukowski_branch_point(p.lo, JBranch::OuterPos),
                                          joukowski_branch_point(p.hi, JBranch::OuterPos), p.val});
            nu_pieces.push_back(RealPiece{joukowski_branch_point(p.hi, JBranch::InnerPos),
                                          joukowski_branch_point(p.lo, JBranch::InnerPos), -p.val});
        }
    }
    out.nu = PiecewiseReal(std::move(nu_pieces));

    std::vector<ArcPiece> arcs;
    for (const auto& p : out.m0_arg.pieces()) {
        XReal upper_lo = arccos_coord(p.hi); // arccos decreasing
        XReal upper_hi = arccos_coord(p.lo);
        arcs.push_back(ArcPiece{upper_lo, upper_hi, -p.val});
        arcs.push_back(ArcPiece{-upper_hi, -upper_lo, p.val});
    }
    out.nu_hat0 = PiecewiseCircle(std::move(arcs));
    return out;
}

// N as a symmetric evaluator, N(z) = N(1/z) and N(conj z) = conj N(z) by
// construction; the oracle input for all end-to-end factorization tests.
class NEvaluator {
public:
    NEvaluator() = default;
    explicit NEvaluator(JoukowskiProfile profile) : profile_(std::move(profile)) {}

    Cplx operator()(Cplx z) const {
        Cplx lam = joukowski(z);
        if (profile_.eta.has_sampled())
            return profile_.scale * std::exp(line_log_quadrature(profile_.eta, lam));
        return profile_.scale * std::exp(line_log_closed(profile_.eta, lam));
    }

    const JoukowskiProfile& profile() const { return profile_; }

private:
    JoukowskiProfile profile_;
};

inline NEvaluator synthesize_n(PiecewiseReal eta, double scale) {
    if (!(scale > 0)) fail(Err::DomainError, "N scale must be positive");
    JoukowskiProfile p;
    p.eta = std::move(eta);
    p.scale = scale;
    return NEvaluator(std::move(p));
}

} // namespace rhf
