#pragma once

#include <chrono>
#include <functional>

#include "rhfactor/factorize.hpp"
#include "rhfactor/solver.hpp"

namespace rhf {

struct CertificationReport {
    std::string name;
    std::string grid; // human-readable grid description
    double max_dev = 0;
    double median_dev = 0;
    double tolerance = 0;
    bool pass = false;
    double runtime_ms = 0;
};

namespace detail {

class StageTimer {
public:
    StageTimer() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto dt = std::chrono::steady_clock::now() - t0_;
        return std::chrono::duration<double, std::milli>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

inline CertificationReport make_report(std::string name, std::string grid,
                                       std::vector<double> devs, double tol,
                                       const StageTimer& timer, bool extra_pass = true) {
    if (devs.empty()) fail(Err::EmptyGrid, name + " has no sample points");
    CertificationReport rep;
    rep.name = std::move(name);
    rep.grid = std::move(grid);
    rep.tolerance = tol;
    std::sort(devs.begin(), devs.end());
    rep.max_dev = devs.back();
    rep.median_dev = devs[devs.size() / 2];
    rep.pass = extra_pass && rep.max_dev <= tol;
    rep.runtime_ms = timer.ms();
    return rep;
}

} // namespace detail

// Quasi-random complex grid keeping the stated margin from the factor's
// singular support, the real axis and the unit circle.
inline std::vector<Cplx> certification_grid(const AnalyticFactor& r, std::size_t count,
                                            std::uint64_t seed, double margin = 0.05,
                                            double box = 3.0) {
    auto pts = quasi_points(count, -box, box, -box, box, seed, [&](Cplx z) {
        if (std::abs(z) < 0.15) return false;
        if (std::abs(z.imag()) < margin) return false;
        if (std::abs(std::abs(z) - 1.0) < margin) return false;
        Cplx w = 1.0 / z;
        return r.singular_distance(z) > margin && r.singular_distance(w) > margin;
    });
    if (pts.size() < count) fail(Err::EmptyGrid, "could not place the certification grid");
    return pts;
}

// |N(z) - R(z)R(1/z)| / max(1, |N|) over the grid.
inline CertificationReport residual_check(const std::function<Cplx(Cplx)>& n_eval,
                                          const AnalyticFactor& r, const std::vector<Cplx>& grid,
                                          double tol = 1e-6) {
    detail::StageTimer timer;
    if (grid.empty()) fail(Err::EmptyGrid, "residual grid empty");
    std::vector<double> devs;
    for (Cplx z : grid) {
        Cplx n = n_eval(z);
        Cplx pair = std::exp(r.log_eval(z) + r.log_eval(1.0 / z));
        devs.push_back(std::abs(n - pair) / std::max(1.0, std::abs(n)));
    }
    return detail::make_report("residual", std::to_string(grid.size()) + " quasi-random points",
                               std::move(devs), tol, timer);
}

// N(1/z) = N(z) and N(conj z) = conj N(z) over the grid.
inline CertificationReport symmetry_check(const std::function<Cplx(Cplx)>& n_eval,
                                          const std::vector<Cplx>& grid, double tol = 1e-12) {
    detail::StageTimer timer;
    if (grid.empty()) fail(Err::EmptyGrid, "symmetry grid empty");
    std::vector<double> devs;
    for (Cplx z : grid) {
        Cplx n = n_eval(z);
        double scale = std::max(1.0, std::abs(n));
        devs.push_back(std::abs(n_eval(1.0 / z) - n) / scale);
        devs.push_back(std::abs(n_eval(std::conj(z)) - std::conj(n)) / scale);
    }
    return detail::make_report("symmetry", std::to_string(grid.size()) + " quasi-random points",
                               std::move(devs), tol, timer);
}

// | |R+/R-|(theta) - mu(theta) | / mu(theta) via extrapolated radial limits.
inline CertificationReport modulus_jump_check(const AnalyticFactor& r,
                                              const PiecewiseCircle& ln_mu,
                                              const std::vector<double>& thetas,
                                              double tol = 1e-4) {
    detail::StageTimer timer;
    std::vector<double> devs;
    for (double theta : thetas) {
        if (ln_mu.is_breakpoint_theta(theta))
            fail(Err::Breakpoint, "theta sample on a breakpoint");
        Cplx dir{std::cos(theta), std::sin(theta)};
        Cplx inner = limit_along([&](double e) { return r.log_eval((1.0 - e) * dir); });
        Cplx outer = limit_along([&](double e) { return r.log_eval((1.0 + e) * dir); });
        double want = ln_mu.value_at_theta(theta);
        devs.push_back(std::abs(std::exp(inner.real() - outer.real() - want) - 1.0));
    }
    return detail::make_report("modulus_jump", std::to_string(thetas.size()) + " arc samples",
                               std::move(devs), tol, timer);
}

// Sensible default sample set: arc midpoints plus interior points.
inline std::vector<double> default_jump_thetas(const PiecewiseCircle& ln_mu) {
    std::vector<double> thetas;
    if (ln_mu.arcs().empty()) {
        for (double c : {-0.83, -0.52, -0.21, 0.17, 0.44, 0.71, 0.93}) thetas.push_back(c * kPi);
        return thetas;
    }
    for (const auto& a : ln_mu.arcs())
        for (double u : {0.5, 0.118, 0.736, 0.354}) {
            double c = a.lo.to_double() + (a.hi.to_double() - a.lo.to_double()) * (1e-3 + u * (1 - 2e-3));
            double theta = c * kPi;
            if (std::abs(theta) < 1e-2 || kPi - std::abs(theta) < 1e-2) continue;
            thetas.push_back(theta);
        }
    return thetas;
}

// Cauchy-criterion proxy for local H^2 boundary convergence near Omega2:
// s_n = L2-grid norm of R(t + i eps_n) - R(t + i eps_{n+1}), eps_n = eps0 2^-n.
// Pass: s_n strictly decreasing (above the noise floor) and s_levels < tol,
// on both sides of the axis.
inline CertificationReport hardy_l2_check(const AnalyticFactor& r, const Interval& neighborhood,
                                          double eps0 = 1e-2, int levels = 6, double tol = 1e-3,
                                          std::size_t grid_n = 192) {
    detail::StageTimer timer;
    if (!neighborhood.bounded() || neighborhood.is_point())
        fail(Err::DomainError, "hardy neighborhood must be a bounded interval");
    double lo = neighborhood.lo.to_double();
    double hi = neighborhood.hi.to_double();
    double h = (hi - lo) / static_cast<double>(grid_n);

    std::vector<double> all_s;
    bool monotone = true;
    const double noise_floor = 1e-12;
    for (double side : {1.0, -1.0}) {
        std::vector<std::vector<Cplx>> rows;
        for (int n = 0; n <= levels + 1; ++n) {
            double eps = eps0 * std::pow(2.0, -n);
            std::vector<Cplx> row;
            row.reserve(grid_n);
            for (std::size_t j = 0; j < grid_n; ++j) {
                double t = lo + (static_cast<double>(j) + 0.5) * h;
                Cplx v = r.eval(Cplx(t, side * eps));
                if (!std::isfinite(std::abs(v)))
                    fail(Err::GridOnSingularSupport, "non-finite value on the hardy grid");
                row.push_back(v);
            }
            rows.push_back(std::move(row));
        }
        std::vector<double> s;
        for (int n = 0; n <= levels; ++n) {
            double acc = 0;
            for (std::size_t j = 0; j < grid_n; ++j)
                acc += std::norm(rows[n][j] - rows[n + 1][j]);
            s.push_back(std::sqrt(acc * h));
        }
        for (int n = 0; n + 1 <= levels; ++n)
            if (!(s[n + 1] < s[n]) && s[n + 1] > noise_floor) monotone = false;
        all_s.push_back(s.back());
        for (double v : s) (void)v;
    }

    std::vector<double> devs = all_s; // the two final Cauchy norms
    return detail::make_report(
        "hardy_l2", std::to_string(grid_n) + " x " + std::to_string(levels + 2) + " levels on " +
                        neighborhood.str(),
        std::move(devs), tol, timer, monotone);
}

// Assembled factor evaluates finite and nonzero off Omega u T.
inline CertificationReport holomorphy_check(const AnalyticFactor& r, std::size_t count,
                                            std::uint64_t seed, double margin = 0.02) {
    detail::StageTimer timer;
    auto pts = quasi_points(count, -3.0, 3.0, -3.0, 3.0, seed, [&](Cplx z) {
        if (std::abs(z.imag()) < 1e-4) return false;
        if (std::abs(std::abs(z) - 1.0) < margin) return false;
        if (std::abs(z - Cplx(1, 0)) < margin || std::abs(z + Cplx(1, 0)) < margin) return false;
        return r.singular_distance(z) > margin;
    });
    if (pts.size() < count) fail(Err::EmptyGrid, "could not place the holomorphy grid");
    std::vector<double> devs;
    for (Cplx z : pts) {
        Cplx lg = r.log_eval(z);
        bool good = std::isfinite(lg.real()) && std::isfinite(lg.imag()) &&
                    std::abs(lg.real()) < 460.0; // |R| within (1e-200, 1e200), nonzero
        devs.push_back(good ? 0.0 : 1.0);
    }
    return detail::make_report("holomorphy", std::to_string(count) + " points, margin 0.02",
                               std::move(devs), 0.5, timer);
}

// ---- Lemma-1 identity battery ----

namespace detail {

inline PiecewiseReal random_line_data(SplitMix64& rng, int max_pieces = 4) {
    // rational breakpoints away from 0, values k pi / 6
    std::vector<RealPiece> pieces;
    int n = static_cast<int>(rng.integer(1, max_pieces));
    int side = rng.uniform() < 0.3 ? -1 : 1;
    Rat prev(side * 1, 8);
    for (int i = 0; i < n; ++i) {
        Rat a = prev + Rat(rng.integer(1, 24), 8);
        Rat b = a + Rat(rng.integer(1, 16), 8);
        prev = b;
        long long k = rng.integer(-6, 6);
        if (k == 0) k = 1;
        if (side < 0)
            pieces.push_back(RealPiece{XReal(-b), XReal(-a), PiScalar::pi_multiple(Rat(k, 6))});
        else
            pieces.push_back(RealPiece{XReal(a), XReal(b), PiScalar::pi_multiple(Rat(k, 6))});
    }
    return PiecewiseReal(std::move(pieces));
}

inline PiecewiseCircle random_circle_data(SplitMix64& rng, bool odd) {
    std::vector<ArcPiece> arcs;
    int n = static_cast<int>(rng.integer(1, 2));
    Rat prev(1, 100);
    for (int i = 0; i < n; ++i) {
        Rat a = prev + Rat(rng.integer(1, 20), 100);
        Rat b = a + Rat(rng.integer(5, 25), 100);
        if (b >= Rat(99, 100)) break;
        prev = b;
        long long k = rng.integer(-6, 6);
        if (k == 0) k = 2;
        arcs.push_back(ArcPiece{XReal(a), XReal(b), PiScalar::pi_multiple(Rat(k, 6))});
        if (odd)
            arcs.push_back(ArcPiece{XReal(-b), XReal(-a), PiScalar::pi_multiple(Rat(-k, 6))});
        else if (rng.uniform() < 0.5)
            arcs.push_back(ArcPiece{XReal(-b), XReal(-a), PiScalar::pi_multiple(Rat(k, 3))});
    }
    return PiecewiseCircle(std::move(arcs));
}

} // namespace detail

// Randomized battery over Eqs (12)-(16); one report per identity and path.
inline std::vector<CertificationReport> lemma1_suite(std::uint64_t seed, int configs = 50,
                                                     int points_per_config = 20,
                                                     double tol_closed = 1e-10,
                                                     double tol_quad = 1e-7) {
    std::vector<double> d12c, d12q, d13c, d14c, d15, d16;
    detail::StageTimer timer;
    SplitMix64 rng(seed);

    for (int c = 0; c < configs; ++c) {
        PiecewiseReal g1 = detail::random_line_data(rng);
        PiecewiseReal g2 = detail::random_line_data(rng);
        PiecewiseReal sum = g1 + g2;
        PiecewiseCircle h1 = detail::random_circle_data(rng, false);
        PiecewiseCircle h2 = detail::random_circle_data(rng, false);
        PiecewiseCircle hsum = h1.plus(h2);
        PiecewiseCircle hodd = detail::random_circle_data(rng, true);

        auto support_dist = [&](Cplx z) {
            return std::min({line_support_distance(g1, z), line_support_distance(g2, z)});
        };
        int placed = 0;
        while (placed < points_per_config) {
            Cplx z{rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
            if (std::abs(z.imag()) < 0.05 || std::abs(z) < 0.1) continue;
            if (support_dist(z) < 0.1) continue;
            ++placed;

            // (12) additivity, closed and quadrature paths
            {
                Cplx lhs_c = line_log_closed(sum, z);
                Cplx rhs_c = line_log_closed(g1, z) + line_log_closed(g2, z);
                d12c.push_back(std::abs(std::exp(lhs_c) - std::exp(rhs_c)) /
                               std::abs(std::exp(lhs_c)));
                Cplx lhs_q = line_log_quadrature(sum, z);
                Cplx rhs_q = line_log_quadrature(g1, z) + line_log_quadrature(g2, z);
                d12q.push_back(std::abs(std::exp(lhs_q) - std::exp(rhs_q)) /
                               std::abs(std::exp(lhs_q)));
            }
            // (13) conjugation
            {
                Cplx lhs = std::exp(line_log_closed(g1, std::conj(z)));
                Cplx rhs = std::conj(std::exp(line_log_closed(g1, z)));
                d13c.push_back(std::abs(lhs - rhs) / std::abs(rhs));
            }
            // (14) inversion: P(1/z, g) = P(z, -V(g))
            {
                Cplx lhs = std::exp(line_log_closed(g1, 1.0 / z));
                Cplx rhs = std::exp(line_log_closed(v_func(g1).scaled(Rat(-1)), z));
                d14c.push_back(std::abs(lhs - rhs) / std::abs(rhs));
            }
            if (std::abs(std::abs(z) - 1.0) < 0.05) continue;
            // (15) circle additivity
            {
                Cplx lhs = std::exp(circle_log(hsum, z));
                Cplx rhs = std::exp(circle_log(h1, z) + circle_log(h2, z));
                d15.push_back(std::abs(lhs - rhs) / std::abs(lhs));
            }
            // (16) inversion invariance for odd data
            {
                Cplx lhs = std::exp(circle_log(hodd, 1.0 / z));
                Cplx rhs = std::exp(circle_log(hodd, z));
                d16.push_back(std::abs(lhs - rhs) / std::abs(rhs));
            }
        }
    }

    std::string grid = std::to_string(configs) + " configs x " +
                       std::to_string(points_per_config) + " points, seed " + std::to_string(seed);
    std::vector<CertificationReport> out;
    out.push_back(detail::make_report("lemma1_eq12_closed", grid, std::move(d12c), tol_closed, timer));
    out.push_back(detail::make_report("lemma1_eq12_quadrature", grid, std::move(d12q), tol_quad, timer));
    out.push_back(detail::make_report("lemma1_eq13_closed", grid, std::move(d13c), tol_closed, timer));
    out.push_back(detail::make_report("lemma1_eq14_closed", grid, std::move(d14c), tol_closed, timer));
    out.push_back(detail::make_report("lemma1_eq15_quadrature", grid, std::move(d15), tol_quad, timer));
    out.push_back(detail::make_report("lemma1_eq16_quadrature", grid, std::move(d16), tol_quad, timer));
    std::sort(out.begin(), out.end(),
              [](const CertificationReport& a, const CertificationReport& b) { return a.name < b.name; });
    return out;
}

} // namespace rhf
