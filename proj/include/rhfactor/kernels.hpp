#pragma once

#include <complex>

#include "rhfactor/circle.hpp"
#include "rhfactor/piecewise.hpp"
#include "rhfactor/quadrature.hpp"

namespace rhf {

// Evaluation of the two Cauchy-kernel exponentials and the outer-modulus
// kernel. Everything here works in the log domain; callers exponentiate.
//
//   line kernel:    log P(z, g)  = (1/pi) Int g(t) (1/(t-z) - t/(1+t^2)) dt
//   circle kernel:  log P^(z, g) = -(1/(2 pi i)) Int (e^it+z)/(e^it-z) g(t) dt
//   outer kernel:   log Rmu(z)   = (1/(2 pi)) Int e^it/(e^it-z) log-mu(t) dt

inline constexpr double kQuadRefuseDist = 1e-6;
inline constexpr double kCircleRefuseDist = 1e-9;

inline double distance_to_segment(Cplx z, double a, double b) {
    // distance from z to the real segment [a,b] (a,b possibly infinite)
    double x = z.real(), y = std::abs(z.imag());
    double dx = 0.0;
    if (x < a) dx = a - x;
    else if (x > b) dx = x - b;
    return std::hypot(dx, y);
}

inline double line_piece_distance(const RealPiece& p, Cplx z) {
    double a = p.lo.finite() ? p.lo.to_double() : -std::numeric_limits<double>::infinity();
    double b = p.hi.finite() ? p.hi.to_double() : std::numeric_limits<double>::infinity();
    return distance_to_segment(z, a, b);
}

inline double line_support_distance(const PiecewiseReal& g, Cplx z) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& p : g.pieces()) d = std::min(d, line_piece_distance(p, z));
    if (g.has_sampled() && !g.sampled_data().knots.empty())
        d = std::min(d, distance_to_segment(z, g.sampled_data().knots.front().first,
                                            g.sampled_data().knots.back().first));
    return d;
}

// ---- closed form (piecewise-constant data only) ----

// Integral of (1/(t-z) - t/(1+t^2)) over one plateau, principal branches.
// The ratio (b-z)/(a-z) omits (-inf,0] for z outside [a,b], so no branch
// tracking is needed.
inline Cplx line_log_piece_closed(const RealPiece& p, Cplx z) {
    double q = p.val.over_pi();
    if (q == 0.0) return {0, 0};
    bool lo_inf = !p.lo.finite();
    bool hi_inf = !p.hi.finite();
    double sigma = z.imag() > 0 ? 1.0 : -1.0;
    if (lo_inf && hi_inf)
        return Cplx(0, q * kPi * sigma);
    if (lo_inf) {
        double b = p.hi.to_double();
        return q * (std::log(Cplx(b, 0) - z) - 0.5 * std::log1p(b * b)) + Cplx(0, q * kPi * sigma);
    }
    if (hi_inf) {
        double a = p.lo.to_double();
        return q * (0.5 * std::log1p(a * a) - std::log(Cplx(a, 0) - z));
    }
    double a = p.lo.to_double(), b = p.hi.to_double();
    Cplx ratio = (Cplx(b, 0) - z) / (Cplx(a, 0) - z);
    return q * (std::log(ratio) + 0.5 * (std::log1p(a * a) - std::log1p(b * b)));
}

inline Cplx line_log_closed(const PiecewiseReal& g, Cplx z) {
    g.require_piecewise("closed-form line kernel");
    if (z.imag() == 0.0) {
        XReal t = XReal(z.real());
        for (const auto& p : g.pieces()) {
            if (p.lo <= t && t <= p.hi)
                fail(Err::OnSingularSupport,
                     "closed form needs real z off the data support, got t = " + t.str());
        }
    }
    Cplx acc{0, 0};
    for (const auto& p : g.pieces()) acc += line_log_piece_closed(p, z);
    return acc;
}

// ---- quadrature path ----

namespace detail {

inline Cplx line_kernel_at(double t, Cplx z) {
    // 1/(t-z) - t/(1+t^2) combined; the direct difference cancels for large t
    return (1.0 + t * z) / ((Cplx(t, 0) - z) * (1.0 + t * t));
}

inline Cplx line_quad_finite(double a, double b, double coef, Cplx z, double tol) {
    return coef * adaptive_integrate([&](double t) { return line_kernel_at(t, z); }, a, b, tol);
}

// map t = a + u/(1-u) (or mirrored) for unbounded plateaus
inline Cplx line_quad_upper_ray(double a, double coef, Cplx z, double tol) {
    return coef * adaptive_integrate(
                      [&](double u) {
                          double om = 1.0 - u;
                          double t = a + u / om;
                          return line_kernel_at(t, z) / (om * om);
                      },
                      0.0, 1.0, tol);
}

inline Cplx line_quad_lower_ray(double b, double coef, Cplx z, double tol) {
    return coef * adaptive_integrate(
                      [&](double u) {
                          double om = 1.0 - u;
                          double t = b - u / om;
                          return line_kernel_at(t, z) / (om * om);
                      },
                      0.0, 1.0, tol);
}

} // namespace detail

inline Cplx line_log_quadrature(const PiecewiseReal& g, Cplx z, double tol = 1e-10) {
    if (line_support_distance(g, z) < kQuadRefuseDist)
        fail(Err::OnSingularSupport, "quadrature refused within 1e-6 of the data support");
    Cplx acc{0, 0};
    for (const auto& p : g.pieces()) {
        double coef = p.val.over_pi();
        if (coef == 0.0) continue;
        bool lo_inf = !p.lo.finite();
        bool hi_inf = !p.hi.finite();
        if (lo_inf && hi_inf) {
            acc += detail::line_quad_lower_ray(0.0, coef, z, tol);
            acc += detail::line_quad_upper_ray(0.0, coef, z, tol);
        } else if (lo_inf) {
            acc += detail::line_quad_lower_ray(p.hi.to_double(), coef, z, tol);
        } else if (hi_inf) {
            acc += detail::line_quad_upper_ray(p.lo.to_double(), coef, z, tol);
        } else {
            acc += detail::line_quad_finite(p.lo.to_double(), p.hi.to_double(), coef, z, tol);
        }
    }
    if (g.has_sampled()) {
        const auto& knots = g.sampled_data().knots;
        for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
            auto [t0, v0] = knots[i];
            auto [t1, v1] = knots[i + 1];
            acc += adaptive_integrate(
                       [&](double t) {
                           double w = (t - t0) / (t1 - t0);
                           double v = v0 + w * (v1 - v0);
                           return (v / kPi) * detail::line_kernel_at(t, z);
                       },
                       t0, t1, tol);
        }
    }
    return acc;
}

// ---- circle kernels (quadrature only) ----

inline Cplx circle_log(const PiecewiseCircle& gh, Cplx z, double tol = 1e-10) {
    if (std::abs(std::abs(z) - 1.0) < kCircleRefuseDist)
        fail(Err::OnUnitCircle, "circle kernel undefined on |z| = 1");
    Cplx acc{0, 0};
    for (const auto& a : gh.arcs()) {
        double c = a.val.eval();
        if (c == 0.0) continue;
        Cplx integral = adaptive_integrate(
            [&](double th) {
                Cplx e{std::cos(th), std::sin(th)};
                return (e + z) / (e - z);
            },
            a.lo.to_double() * kPi, a.hi.to_double() * kPi, tol);
        acc += Cplx(0, c / (2.0 * kPi)) * integral; // -(1/2 pi i) = i/(2 pi)
    }
    return acc;
}

inline Cplx outer_log(const PiecewiseCircle& ln_mu, Cplx z, double tol = 1e-10) {
    if (std::abs(std::abs(z) - 1.0) < kCircleRefuseDist)
        fail(Err::OnUnitCircle, "outer kernel undefined on |z| = 1");
    Cplx acc{0, 0};
    for (const auto& a : ln_mu.arcs()) {
        double c = a.val.eval();
        if (c == 0.0) continue;
        Cplx integral = adaptive_integrate(
            [&](double th) {
                Cplx e{std::cos(th), std::sin(th)};
                return e / (e - z);
            },
            a.lo.to_double() * kPi, a.hi.to_double() * kPi, tol);
        acc += (c / (2.0 * kPi)) * integral;
    }
    return acc;
}

// ---- closed-form boundary limits on the line (Plemelj) ----

// Re log P^+-(t) by the principal-value product over plateaus; valid inside
// or outside the plateaus, away from breakpoints.
inline double line_log_modulus_boundary(const PiecewiseReal& g, double t) {
    g.require_piecewise("closed-form boundary limit");
    if (g.is_breakpoint(XReal(t)))
        fail(Err::Breakpoint, "boundary limit undefined at a breakpoint");
    double acc = 0;
    for (const auto& p : g.pieces()) {
        double q = p.val.over_pi();
        if (q == 0.0) continue;
        bool lo_inf = !p.lo.finite();
        bool hi_inf = !p.hi.finite();
        if (lo_inf && hi_inf) continue;
        if (lo_inf) {
            double b = p.hi.to_double();
            acc += q * (std::log(std::abs(b - t)) - 0.5 * std::log1p(b * b));
        } else if (hi_inf) {
            double a = p.lo.to_double();
            acc += q * (0.5 * std::log1p(a * a) - std::log(std::abs(a - t)));
        } else {
            double a = p.lo.to_double(), b = p.hi.to_double();
            acc += q * (std::log(std::abs((b - t) / (a - t))) +
                        0.5 * (std::log1p(a * a) - std::log1p(b * b)));
        }
    }
    return acc;
}

// P^+(t) or P^-(t): modulus from the PV product, argument +-g(t).
inline Cplx line_boundary_limit_closed(const PiecewiseReal& g, double t, int side) {
    double mod = line_log_modulus_boundary(g, t);
    double arg = g.value_at_approx(t) * (side >= 0 ? 1.0 : -1.0);
    return std::exp(Cplx(mod, arg));
}

} // namespace rhf
