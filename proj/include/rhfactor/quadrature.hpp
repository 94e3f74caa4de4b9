#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "rhfactor/errors.hpp"

namespace rhf {

using Cplx = std::complex<double>;

namespace detail {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
template <int N>
struct GaussLegendre {
    std::array<double, N> x{};
    std::array<double, N> w{};

    GaussLegendre() {
        for (int i = 0; i < (N + 1) / 2; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (N + 0.5));
            double dp = 0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= N; ++k) {
                    double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            x[i] = -t;
            x[N - 1 - i] = t;
            double wi = 2.0 / ((1.0 - t * t) * dp * dp);
            w[i] = wi;
            w[N - 1 - i] = wi;
        }
    }
};

inline const GaussLegendre<32>& gl32() {
    static const GaussLegendre<32> table;
    return table;
}

} // namespace detail

template <class F>
Cplx gl32_panel(F&& f, double a, double b) {
    const auto& t = detail::gl32();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Cplx acc{0, 0};
    for (int i = 0; i < 32; ++i) acc += t.w[i] * f(mid + half * t.x[i]);
    return half * acc;
}

// Adaptive bisection: a panel is accepted when its one-level and two-level
// Gauss-Legendre estimates agree to tol * max(1, |whole integral estimate|).
template <class F>
Cplx adaptive_integrate(F&& f, double a, double b, double tol = 1e-10) {
    if (!(a < b)) return Cplx{0, 0};
    Cplx whole = gl32_panel(f, a, b);
    double scale = std::max(1.0, std::abs(whole));

    struct Frame { double a, b; Cplx est; double tol; int depth; };
    std::vector<Frame> stack{{a, b, whole, tol * scale, 0}};
    Cplx total{0, 0};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        double m = 0.5 * (fr.a + fr.b);
        Cplx left = gl32_panel(f, fr.a, m);
        Cplx right = gl32_panel(f, m, fr.b);
        Cplx two = left + right;
        if (std::abs(two - fr.est) < fr.tol || fr.depth >= 48) {
            if (fr.depth >= 48 && std::abs(two - fr.est) > 1e6 * fr.tol)
                fail(Err::ConvergenceFailure, "adaptive quadrature stalled");
            total += two;
        } else {
            stack.push_back({fr.a, m, left, fr.tol * 0.5, fr.depth + 1});
            stack.push_back({m, fr.b, right, fr.tol * 0.5, fr.depth + 1});
        }
    }
    return total;
}

// Polynomial (Neville) extrapolation of f(eps) to eps -> 0 over a decreasing
// schedule; used for Plemelj boundary limits.
inline Cplx extrapolate_to_zero(const std::vector<double>& eps, const std::vector<Cplx>& vals) {
    std::size_t n = eps.size();
    std::vector<Cplx> tab = vals;
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            tab[i] = (Cplx(eps[i], 0) * tab[i + 1] - Cplx(eps[i + m], 0) * tab[i]) /
                     Cplx(eps[i] - eps[i + m], 0);
    return tab[0];
}

// The spec's schedule: eps = 1e-2 ... 1e-5 in half-decade log steps.
inline std::vector<double> limit_schedule() {
    std::vector<double> eps;
    for (int k = 0; k <= 6; ++k) eps.push_back(std::pow(10.0, -2.0 - 0.5 * k));
    return eps;
}

inline Cplx limit_along(const std::function<Cplx(double)>& f) {
    auto eps = limit_schedule();
    std::vector<Cplx> vals;
    vals.reserve(eps.size());
    for (double e : eps) vals.push_back(f(e));
    return extrapolate_to_zero(eps, vals);
}

} // namespace rhf
