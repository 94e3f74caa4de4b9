#pragma once

#include "rhfactor/joukowski.hpp"
#include "rhfactor/qrand.hpp"
#include "rhfactor/sigma.hpp"

namespace rhf {

// Disjoint interval cover of Omega2 used by the Hardy-refined pipeline;
// neighbors may share a seam point, interiors must not overlap.
struct HardyCover {
    std::vector<Interval> intervals;
};

struct FactorizationResult {
    AnalyticFactor r0, r0_prime, r0_double_prime, r1, r2, r3, r_mu;
    double constant_c = 1.0;
    AnalyticFactor assembled_r;
    IntervalClassification classification;
    std::vector<long long> plateau_n; // aligned with classification.chosen
    bool hardy_mode = false;
    PiecewiseReal n_tilde_pi; // hardy only: the integer extension, stored as n~ * pi
};

namespace detail {

// The single integer plateau of nu over the open interval (a,b), optionally
// ignoring the parts covered by `exclude`. The implicit 0 off the pieces is a
// plateau value like any other.
inline long long plateau_on(const PiecewiseReal& nu, const XReal& a, const XReal& b,
                            const RealSet* exclude, const std::string& where) {
    std::vector<XReal> cuts{a, b};
    for (const auto& p : nu.pieces()) {
        if (a < p.lo && p.lo < b) cuts.push_back(p.lo);
        if (a < p.hi && p.hi < b) cuts.push_back(p.hi);
    }
    if (exclude)
        for (const auto& iv : exclude->intervals()) {
            if (a < iv.lo && iv.lo < b) cuts.push_back(iv.lo);
            if (a < iv.hi && iv.hi < b) cuts.push_back(iv.hi);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    bool have = false;
    long long n = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const XReal& lo = cuts[i];
        const XReal& hi = cuts[i + 1];
        if (exclude) {
            bool covered = false;
            for (const auto& iv : exclude->intervals())
                if (iv.lo <= lo && hi <= iv.hi) { covered = true; break; }
            if (covered) continue;
        }
        PiScalar v;
        for (const auto& p : nu.pieces())
            if (p.lo <= lo && hi <= p.hi) { v = p.val; break; }
        long long k = 0;
        if (!v.integer_pi_multiple(&k))
            fail(Err::NonIntegerPlateau,
                 "nu = " + v.str() + " on (" + lo.str() + ", " + hi.str() + ") in " + where);
        if (have && k != n)
            fail(Err::NonConstantPlateau,
                 "nu steps between " + std::to_string(n) + " pi and " + std::to_string(k) +
                     " pi in " + where);
        n = k;
        have = true;
    }
    return n;
}

} // namespace detail

// On each chosen interval nu must be a constant integer multiple of pi (in
// Hardy mode: off Omega2); returns n(k) per chosen interval. Theorem-2 mode
// also requires integer plateaus on the Delta' / Delta'' components.
inline std::vector<long long> validate_plateaus(const PiecewiseReal& nu,
                                                const IntervalClassification& cl) {
    nu.require_piecewise("validate_plateaus");
    const RealSet* exclude = cl.hardy_mode ? &cl.sigma.omega2 : nullptr;
    std::vector<long long> out;
    for (std::size_t i = 0; i < cl.components.size(); ++i) {
        const Interval& comp = cl.components[i];
        if (cl.classes[i] == DeltaClass::Chosen) {
            out.push_back(detail::plateau_on(nu, comp.lo, comp.hi, exclude,
                                             "chosen " + comp.str()));
        } else if (!cl.hardy_mode) {
            detail::plateau_on(nu, comp.lo, comp.hi, nullptr, "component " + comp.str());
        }
    }
    return out;
}

namespace detail {

struct Region {
    XReal lo, hi;
    bool in_omega2;
};

inline std::vector<Region> component_regions(const Interval& comp, const RealSet& omega2) {
    std::vector<XReal> cuts{comp.lo, comp.hi};
    for (const auto& iv : omega2.intervals()) {
        if (comp.lo < iv.lo && iv.lo < comp.hi) cuts.push_back(iv.lo);
        if (comp.lo < iv.hi && iv.hi < comp.hi) cuts.push_back(iv.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Region> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        bool in2 = false;
        for (const auto& iv : omega2.intervals())
            if (iv.lo <= cuts[i] && cuts[i + 1] <= iv.hi) { in2 = true; break; }
        out.push_back(Region{cuts[i], cuts[i + 1], in2});
    }
    return out;
}

// Integer chosen to center nu on a region (units of pi, used by the
// per-region fallback when the plain plateau extension fails Smirnov).
inline long long rounded_level(const PiecewiseReal& nu, const XReal& lo, const XReal& hi) {
    bool exact = true;
    Rat rlo(0), rhi(0);
    double dlo = 0, dhi = 0;
    bool have = false;
    auto add = [&](const PiScalar& v) {
        if (!v.exact_pi()) exact = false;
        double d = v.over_pi();
        Rat r = v.exact_pi() ? v.pi_coef() : Rat(0);
        if (!have) { rlo = rhi = r; dlo = dhi = d; have = true; return; }
        if (exact) { rlo = r < rlo ? r : rlo; rhi = r > rhi ? r : rhi; }
        dlo = std::min(dlo, d);
        dhi = std::max(dhi, d);
    };
    std::vector<XReal> cuts{lo, hi};
    for (const auto& p : nu.pieces()) {
        if (lo < p.lo && p.lo < hi) cuts.push_back(p.lo);
        if (lo < p.hi && p.hi < hi) cuts.push_back(p.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        PiScalar v;
        for (const auto& p : nu.pieces())
            if (p.lo <= cuts[i] && cuts[i + 1] <= p.hi) { v = p.val; break; }
        add(v);
    }
    if (!have) return 0;
    if (exact) return ((rlo + rhi) / Rat(2)).round_nearest();
    return std::llround(0.5 * (dlo + dhi));
}

// The integer extension n~ of the Delta plateaus across interior Omega2
// parts, mirrored to V(Delta) with the odd sign. `seams`, when given, cuts
// the Omega2 regions further and assigns each cell its rounded level instead
// of extending the neighbor plateau.
inline PiecewiseReal build_n_tilde_pi(const PiecewiseReal& nu, const IntervalClassification& cl,
                                      const std::vector<XReal>* seams) {
    const RealSet& omega2 = cl.sigma.omega2;
    std::vector<RealPiece> pieces;
    auto add_piece = [&](const XReal& lo, const XReal& hi, long long n) {
        if (n == 0 || !(lo < hi)) return;
        pieces.push_back(RealPiece{lo, hi, PiScalar::pi_multiple(Rat(n))});
    };

    for (std::size_t i = 0; i < cl.components.size(); ++i) {
        const Interval& comp = cl.components[i];
        auto regions = component_regions(comp, omega2);
        // plateau of every non-Omega2 region
        std::vector<long long> level(regions.size(), 0);
        std::vector<bool> known(regions.size(), false);
        for (std::size_t r = 0; r < regions.size(); ++r)
            if (!regions[r].in_omega2) {
                level[r] = plateau_on(nu, regions[r].lo, regions[r].hi, nullptr,
                                      "component " + comp.str());
                known[r] = true;
            }
        for (std::size_t r = 0; r < regions.size(); ++r) {
            if (known[r]) continue;
            if (seams) {
                std::vector<XReal> cuts{regions[r].lo, regions[r].hi};
                for (const auto& s : *seams)
                    if (regions[r].lo < s && s < regions[r].hi) cuts.push_back(s);
                std::sort(cuts.begin(), cuts.end());
                for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
                    long long m = rounded_level(nu, cuts[c], cuts[c + 1]);
                    add_piece(cuts[c], cuts[c + 1], m);
                }
                continue;
            }
            // extend the neighbor plateau: previous non-Omega2 region, else next
            long long m = 0;
            bool found = false;
            for (std::size_t l = r; l-- > 0;)
                if (known[l]) { m = level[l]; found = true; break; }
            if (!found)
                for (std::size_t l = r + 1; l < regions.size(); ++l)
                    if (known[l]) { m = level[l]; found = true; break; }
            level[r] = m;
            known[r] = true;
        }
        for (std::size_t r = 0; r < regions.size(); ++r)
            if (known[r]) add_piece(regions[r].lo, regions[r].hi, level[r]);
    }

    PiecewiseReal direct{std::move(pieces)};
    return direct - v_func(direct); // odd mirror: n~(t) = -n~(1/t)
}

} // namespace detail

struct N1Factors {
    AnalyticFactor r0, r0_prime, r0_double_prime, r1, r2;
};

// Lemma-3 factors for N1. In Hardy mode the prime / double-prime / Omega2
// factors run on the integer extension n~ instead of nu itself.
inline N1Factors factorize_n1(const PiecewiseReal& nu, const IntervalClassification& cl,
                              const std::vector<long long>& plateau_n,
                              const PiecewiseReal* n_tilde_pi = nullptr) {
    if (plateau_n.size() != cl.chosen.size())
        fail(Err::InternalError, "plateau vector does not match the chosen intervals");
    N1Factors out;

    // R0: Blaschke-type product over the chosen intervals; an infinite starred
    // endpoint switches that factor to the line-kernel form.
    std::vector<RationalNode::Term> terms;
    std::vector<RealPiece> footnote_pieces;
    for (std::size_t k = 0; k < cl.chosen.size(); ++k) {
        const auto& ci = cl.chosen[k];
        long long n = plateau_n[k];
        if (n == 0) continue;
        if (ci.footnote) {
            if (!cl.sigma.footnote_enabled)
                fail(Err::FootnoteRequired, "infinite starred endpoint on " + ci.delta.str());
            XReal lo = min(ci.alpha_star, ci.beta_star);
            XReal hi = max(ci.alpha_star, ci.beta_star);
            long long sign = ci.alpha_star < ci.beta_star ? 1 : -1;
            footnote_pieces.push_back(
                RealPiece{lo, hi, PiScalar::pi_multiple(Rat(sign * n))});
        } else {
            terms.push_back(RationalNode::Term{ci.beta_star, n});
            terms.push_back(RationalNode::Term{ci.alpha_star, -n});
        }
    }
    if (footnote_pieces.empty()) {
        out.r0 = AnalyticFactor::rational(std::move(terms));
    } else {
        out.r0 = AnalyticFactor::product(
            {AnalyticFactor::rational(std::move(terms)),
             AnalyticFactor::line(PiecewiseReal(std::move(footnote_pieces)))});
    }

    RealSet v_delta_prime;
    if (!cl.delta_prime.empty()) {
        std::vector<Interval> imgs;
        for (const auto& iv : cl.delta_prime)
            for (auto& m : v_interval(iv)) imgs.push_back(m);
        v_delta_prime = RealSet(std::move(imgs));
    }
    RealSet delta_double_prime{std::vector<Interval>(cl.delta_double_prime)};

    const PiecewiseReal& prime_data = n_tilde_pi ? *n_tilde_pi : nu;
    out.r0_prime = AnalyticFactor::line(restrict_to(prime_data, v_delta_prime));
    out.r0_double_prime = AnalyticFactor::line(restrict_to(prime_data, delta_double_prime));
    out.r1 = AnalyticFactor::line(restrict_to(nu, cl.sigma.omega1));
    PiecewiseReal r2_data = restrict_to(nu, cl.sigma.omega2);
    if (n_tilde_pi) r2_data = r2_data - restrict_to(*n_tilde_pi, cl.sigma.omega2);
    out.r2 = AnalyticFactor::line(r2_data.scaled(Rat(1, 2)));
    return out;
}

// R3 = P^(., nu_hat0 / 2); with odd data R3(z) R3(1/z) = N0(z).
inline AnalyticFactor factorize_n0(const PiecewiseCircle& nu_hat0) {
    if (!is_odd_within(nu_hat0, 1e-12))
        fail(Err::NotOdd, "nu_hat0 must be odd in theta");
    return AnalyticFactor::circle(nu_hat0.scaled(Rat(1, 2)));
}

// Determines the single positive constant C with N(z) = C^-1 *
// (R0123mu(z) R0123mu(1/z)) ... i.e. Q(z) = R(z)R(1/z)/N(z) must be constant
// and positive; the assembled R absorbs 1/sqrt(C).
template <class NEval>
FactorizationResult assemble(const N1Factors& n1, const AnalyticFactor& r3,
                             const PiecewiseCircle& ln_mu, const NEval& n_eval,
                             IntervalClassification cl, std::vector<long long> plateau_n,
                             std::uint64_t seed = 7) {
    if (!is_even_within(ln_mu, 1e-12))
        fail(Err::NotEven, "mu must be even in theta");

    FactorizationResult res;
    res.r0 = n1.r0;
    res.r0_prime = n1.r0_prime;
    res.r0_double_prime = n1.r0_double_prime;
    res.r1 = n1.r1;
    res.r2 = n1.r2;
    res.r3 = r3;
    res.r_mu = AnalyticFactor::outer(ln_mu);
    res.classification = std::move(cl);
    res.plateau_n = std::move(plateau_n);

    AnalyticFactor all = AnalyticFactor::product({res.r0, res.r0_prime, res.r0_double_prime,
                                                  res.r1, res.r2, res.r3, res.r_mu});

    auto ok = [&](Cplx z) {
        if (std::abs(z) < 0.2 || std::abs(z.imag()) < 0.05) return false;
        if (std::abs(std::abs(z) - 1.0) < 0.05) return false;
        Cplx w = 1.0 / z;
        return all.singular_distance(z) > 0.05 && all.singular_distance(w) > 0.05;
    };
    auto refs = quasi_points(8, -2.5, 2.5, -2.5, 2.5, seed, ok);
    if (refs.size() < 8) fail(Err::InternalError, "no admissible reference points");

    std::vector<Cplx> q;
    for (Cplx z : refs) {
        Cplx log_pair = all.log_eval(z) + all.log_eval(1.0 / z);
        Cplx n = n_eval(z);
        if (n == Cplx{0, 0}) fail(Err::DomainError, "N vanished at a reference point");
        q.push_back(std::exp(log_pair - std::log(n)));
    }
    Cplx mean{0, 0};
    for (Cplx v : q) mean += v;
    mean /= static_cast<double>(q.size());
    for (Cplx v : q)
        if (std::abs(v - mean) > 1e-6 * std::abs(mean))
            fail(Err::NonConstantRatio,
                 "R(z)R(1/z)/N(z) varies by " + std::to_string(std::abs(v - mean) / std::abs(mean)));
    if (std::abs(mean.imag()) > 1e-6 * std::abs(mean) || mean.real() <= 0)
        fail(Err::NegativeConstant, "constant C must be positive");

    res.constant_c = mean.real();
    res.assembled_r =
        AnalyticFactor::product({all, AnalyticFactor::constant(1.0 / std::sqrt(res.constant_c))});
    return res;
}

namespace detail {

template <class Fn>
auto run_stage(const char* stage, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(e.code(), std::string("[") + stage + "] " + e.what());
    }
}

} // namespace detail

// Theorem-2 pipeline: split, classify, validate plateaus, build the Lemma-3
// factors and R3, then assemble with the constant determination.
inline FactorizationResult factorize(const JoukowskiProfile& n_spec,
                                     const SigmaDecomposition& sigma,
                                     const PiecewiseCircle& ln_mu) {
    FactorSplit split = detail::run_stage("split_m", [&] { return split_m(n_spec); });
    IntervalClassification cl =
        detail::run_stage("decompose_delta", [&] { return decompose_delta(sigma); });
    std::vector<long long> n =
        detail::run_stage("validate_plateaus", [&] { return validate_plateaus(split.nu, cl); });
    N1Factors n1 =
        detail::run_stage("factorize_n1", [&] { return factorize_n1(split.nu, cl, n); });
    AnalyticFactor r3 =
        detail::run_stage("factorize_n0", [&] { return factorize_n0(split.nu_hat0); });
    NEvaluator n_eval(n_spec);
    return detail::run_stage("assemble",
                             [&] { return assemble(n1, r3, ln_mu, n_eval, cl, n); });
}

namespace detail {

inline void validate_cover(const HardyCover& cover, const RealSet& omega2) {
    for (const auto& iv : cover.intervals)
        if (!iv.bounded() || iv.is_point())
            fail(Err::ValidationError, "cover intervals must be bounded and nonempty");
    auto sorted = cover.intervals;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i + 1].lo < sorted[i].hi)
            fail(Err::ValidationError, "cover intervals overlap");
    // Omega2 \ union(cover) must have zero length
    for (const auto& o : omega2.intervals()) {
        XReal pos = o.lo;
        for (const auto& c : sorted) {
            if (c.hi <= pos) continue;
            if (c.lo > pos) break;
            pos = c.hi;
            if (pos >= o.hi) break;
        }
        if (pos < o.hi)
            fail(Err::CoverIncomplete, "Omega2 part " + o.str() + " uncovered from " + pos.str());
    }
}

inline void check_smirnov(const PiecewiseReal& r2_data_times2, const HardyCover& cover) {
    for (const auto& d : cover.intervals) {
        double osc = oscillation(r2_data_times2.scaled(Rat(1, 2)), d);
        if (!(osc < kPi / 2))
            fail(Err::OscillationTooLarge,
                 "oscillation of the R2 exponent on " + d.str() + " is " + std::to_string(osc) +
                     " >= pi/2");
    }
}

} // namespace detail

// Theorem-3 pipeline: Delta without Omega2 removed, plateau extension n~,
// the Smirnov oscillation bound per cover interval, and the usual assembly.
inline FactorizationResult factorize_hardy(const JoukowskiProfile& n_spec,
                                           const SigmaDecomposition& sigma,
                                           const PiecewiseCircle& ln_mu,
                                           const HardyCover& cover) {
    detail::run_stage("hardy_cover",
                      [&] { detail::validate_cover(cover, sigma.omega2); return 0; });
    FactorSplit split = detail::run_stage("split_m", [&] { return split_m(n_spec); });

    detail::run_stage("oscillation_check", [&] {
        for (const auto& d : cover.intervals) {
            double osc = oscillation(split.nu, d);
            if (!(osc < kPi))
                fail(Err::OscillationTooLarge, "oscillation of arg N+ on " + d.str() + " is " +
                                                   std::to_string(osc) + " >= pi");
        }
        return 0;
    });

    IntervalClassification cl =
        detail::run_stage("decompose_delta", [&] { return decompose_delta(sigma, true); });
    std::vector<long long> n =
        detail::run_stage("validate_plateaus", [&] { return validate_plateaus(split.nu, cl); });

    // plateau extension, falling back to per-region rounding at cover seams
    // when the plain extension violates the Smirnov bound
    PiecewiseReal n_tilde_pi = detail::run_stage("extend_n", [&] {
        PiecewiseReal plain = detail::build_n_tilde_pi(split.nu, cl, nullptr);
        PiecewiseReal r2x2 = restrict_to(split.nu, sigma.omega2) -
                             restrict_to(plain, sigma.omega2);
        try {
            detail::check_smirnov(r2x2, cover);
            return plain;
        } catch (const Error&) {
            std::vector<XReal> seams;
            for (const auto& d : cover.intervals) { seams.push_back(d.lo); seams.push_back(d.hi); }
            PiecewiseReal seamed = detail::build_n_tilde_pi(split.nu, cl, &seams);
            PiecewiseReal r2x2b = restrict_to(split.nu, sigma.omega2) -
                                  restrict_to(seamed, sigma.omega2);
            detail::check_smirnov(r2x2b, cover);
            return seamed;
        }
    });

    N1Factors n1 = detail::run_stage(
        "factorize_n1", [&] { return factorize_n1(split.nu, cl, n, &n_tilde_pi); });
    AnalyticFactor r3 =
        detail::run_stage("factorize_n0", [&] { return factorize_n0(split.nu_hat0); });
    NEvaluator n_eval(n_spec);
    FactorizationResult res = detail::run_stage(
        "assemble", [&] { return assemble(n1, r3, ln_mu, n_eval, cl, n); });
    res.hardy_mode = true;
    res.n_tilde_pi = n_tilde_pi;
    return res;
}

} // namespace rhf
