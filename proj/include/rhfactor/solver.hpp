#pragma once

#include "rhfactor/factor.hpp"

namespace rhf {

// Riemann problem data: jump argument phi on the line, jump G = mu e^{i phi_hat}
// on the circle, and the two anchor points where phi vanishes on a whole
// neighborhood so the argument of the solution can be seeded.
struct ProblemInstance {
    PiecewiseReal phi;
    PiecewiseCircle phi_hat;
    PiecewiseCircle ln_mu;
    double anchor_inner = 0.0; // t' in (-1,1)
    double anchor_outer = 0.0; // t'' outside [-1,1]
};

inline void validate_instance(const ProblemInstance& inst) {
    if (!(std::abs(inst.anchor_inner) < 1.0))
        fail(Err::AnchorViolation, "inner anchor must lie in (-1,1)");
    if (!(std::abs(inst.anchor_outer) > 1.0))
        fail(Err::AnchorViolation, "outer anchor must lie outside [-1,1]");
    for (double a : {inst.anchor_inner, inst.anchor_outer}) {
        double d = line_support_distance(inst.phi, Cplx(a, 0));
        if (!(d > 0))
            fail(Err::AnchorViolation,
                 "phi does not vanish on a neighborhood of anchor " + std::to_string(a));
    }
}

// Theorem-1 solution R = P(., phi/2) * P^(., phi_hat/2) * Rmu.
inline AnalyticFactor solve_riemann(const ProblemInstance& inst) {
    validate_instance(inst);
    std::vector<AnalyticFactor> parts;
    if (!inst.phi.empty()) parts.push_back(AnalyticFactor::line(inst.phi.scaled(Rat(1, 2))));
    if (!inst.phi_hat.empty())
        parts.push_back(AnalyticFactor::circle(inst.phi_hat.scaled(Rat(1, 2))));
    if (!inst.ln_mu.empty()) parts.push_back(AnalyticFactor::outer(inst.ln_mu));
    return AnalyticFactor::product(std::move(parts));
}

// ---- argument tracking ----

namespace detail {

struct Component {
    bool upper;  // Im z > 0
    bool inside; // |z| < 1
};

inline Component component_of(Cplx z) {
    if (z.imag() == 0.0 || std::abs(std::abs(z) - 1.0) < 1e-14)
        fail(Err::PathCrossesBoundary, "target must avoid the real axis and the unit circle");
    return Component{z.imag() > 0, std::abs(z) < 1.0};
}

inline double arg_walk(const AnalyticFactor& f, Cplx z0, Cplx z1, Cplx f0, Cplx f1, int depth) {
    if (!(std::isfinite(std::abs(f1))) || f1 == Cplx{0, 0})
        fail(Err::ConvergenceFailure, "factor vanished along the tracking path");
    double d = std::arg(f1 / f0);
    if (std::abs(d) < kPi / 2) return d;
    if (depth > 60) fail(Err::ConvergenceFailure, "argument tracking failed to refine");
    Cplx zm = 0.5 * (z0 + z1);
    Cplx fm = f.eval(zm);
    return arg_walk(f, z0, zm, f0, fm, depth + 1) + arg_walk(f, zm, z1, fm, f1, depth + 1);
}

} // namespace detail

// Continues arg R from its principal value at a real anchor to the target
// along a polyline inside one of the four holomorphy components, refining
// until consecutive phase increments stay below pi/2.
inline double track_argument(const AnalyticFactor& f, double anchor, Cplx target) {
    auto comp = detail::component_of(target);
    if (comp.inside ? !(std::abs(anchor) < 1.0) : !(std::abs(anchor) > 1.0))
        fail(Err::PathCrossesBoundary,
             "anchor is not on the boundary of the target's component");
    if (!(f.singular_distance(Cplx(anchor, 0)) > 1e-9))
        fail(Err::NotHolomorphicAtAnchor, "factor singular at the anchor");

    std::vector<Cplx> path;
    path.emplace_back(anchor, 0);
    if (comp.inside) {
        // the open disk is convex, the straight segment stays inside
        path.push_back(target);
    } else {
        double height = 2.0 * std::max({2.0, std::abs(anchor), std::abs(target)});
        double s = comp.upper ? 1.0 : -1.0;
        path.emplace_back(anchor, s * height);
        path.emplace_back(target.real(), s * height);
        path.push_back(target);
    }

    Cplx f0 = f.eval(path.front());
    double total = std::arg(f0);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        Cplx f1 = f.eval(path[i + 1]);
        total += detail::arg_walk(f, path[i], path[i + 1], f0, f1, 0);
        f0 = f1;
    }
    return total;
}

// ---- jump verification ----

struct JumpReport {
    double max_line_mod_dev = 0;
    double max_line_arg_dev = 0;
    double max_circle_mod_dev = 0;
    double max_circle_arg_dev = 0;
    int line_samples = 0;
    int circle_samples = 0;
    double tol = 0;
    bool pass = false;
};

namespace detail {

// midpoint + 3 low-discrepancy interior offsets, breakpoints excluded by a
// relative margin of 1e-3
inline std::vector<double> sample_offsets() { return {0.5, 0.118, 0.736, 0.354}; }

inline std::vector<double> window_samples(double lo, double hi) {
    std::vector<double> out;
    double len = hi - lo;
    for (double u : sample_offsets()) out.push_back(lo + len * (1e-3 + u * (1.0 - 2e-3)));
    return out;
}

// clamp unbounded pieces to a finite sampling window
inline std::pair<double, double> finite_window(const XReal& lo, const XReal& hi) {
    double a = lo.finite() ? lo.to_double() : (hi.finite() ? hi.to_double() - 10.0 : -10.0);
    double b = hi.finite() ? hi.to_double() : (lo.finite() ? lo.to_double() + 10.0 : 10.0);
    return {a, b};
}

} // namespace detail

// Checks Eq-(2)/(3) contracts at interior sample points: unimodular jump with
// argument phi(t) across the line, modulus mu / argument phi_hat across the
// circle. Deviations are reported, never thrown.
inline JumpReport verify_jumps(const AnalyticFactor& solution, const ProblemInstance& inst,
                               double tol) {
    JumpReport rep;
    rep.tol = tol;

    auto check_line_at = [&](double t) {
        Cplx up = log_boundary_limit_real(solution, t, +1);
        Cplx dn = log_boundary_limit_real(solution, t, -1);
        Cplx diff = up - dn;
        double want_arg = inst.phi.value_at_approx(t);
        rep.max_line_mod_dev = std::max(rep.max_line_mod_dev, std::abs(std::exp(diff.real()) - 1.0));
        rep.max_line_arg_dev = std::max(rep.max_line_arg_dev, std::abs(diff.imag() - want_arg));
        ++rep.line_samples;
    };

    // piece interiors, then one point in each gap between consecutive pieces
    double prev_hi = std::numeric_limits<double>::quiet_NaN();
    for (const auto& p : inst.phi.pieces()) {
        auto [a, b] = detail::finite_window(p.lo, p.hi);
        for (double t : detail::window_samples(a, b)) check_line_at(t);
        if (std::isfinite(prev_hi) && prev_hi < a) check_line_at(0.5 * (prev_hi + a));
        prev_hi = b;
    }
    if (std::isfinite(prev_hi)) check_line_at(prev_hi + 1.5);

    auto check_circle_at = [&](double theta) {
        auto limit = [&](double side) {
            return limit_along([&](double eps) {
                Cplx z = (1.0 - side * eps) * Cplx(std::cos(theta), std::sin(theta));
                return solution.log_eval(z);
            });
        };
        Cplx diff = limit(+1.0) - limit(-1.0); // inside minus outside
        double want_arg = inst.phi_hat.value_at_theta(theta);
        double want_log_mod = inst.ln_mu.value_at_theta(theta);
        rep.max_circle_mod_dev =
            std::max(rep.max_circle_mod_dev,
                     std::abs(std::exp(diff.real() - want_log_mod) - 1.0));
        rep.max_circle_arg_dev = std::max(rep.max_circle_arg_dev, std::abs(diff.imag() - want_arg));
        ++rep.circle_samples;
    };

    PiecewiseCircle merged = inst.phi_hat.plus(inst.ln_mu);
    for (const auto& a : merged.arcs()) {
        for (double c : detail::window_samples(a.lo.to_double(), a.hi.to_double())) {
            double theta = c * kPi;
            // stay clear of +-1 where the line data may touch the circle
            if (std::abs(theta) < 1e-2 || kPi - std::abs(theta) < 1e-2) continue;
            check_circle_at(theta);
        }
    }

    rep.pass = rep.max_line_mod_dev <= tol && rep.max_line_arg_dev <= tol &&
               rep.max_circle_mod_dev <= tol && rep.max_circle_arg_dev <= tol;
    return rep;
}

// Local exponent of P(., phi/2) at t0: R ~ C (z - t0)^e with
// e = (phi(t0-) - phi(t0+)) / (2 pi). Integer e is a zero/pole of order |e|.
inline Rat classify_singularity(const PiecewiseReal& phi, const XReal& t0) {
    phi.require_piecewise("classify_singularity");
    PiScalar left, right;
    bool found_left = false, found_right = false;
    for (const auto& p : phi.pieces()) {
        if (p.lo < t0 && t0 <= p.hi) { left = p.val; found_left = true; }
        if (p.lo <= t0 && t0 < p.hi) { right = p.val; found_right = true; }
        if (p.lo < t0 && t0 < p.hi) return Rat(0); // interior: continuous
    }
    (void)found_left;
    (void)found_right;
    if (!left.exact_pi() || !right.exact_pi())
        fail(Err::NotLocallyConstant, "exponent needs exact rational-pi plateau values");
    return (left.pi_coef() - right.pi_coef()) / Rat(2);
}

} // namespace rhf
