#pragma once

// Shared test plumbing: independent oracles (kept deliberately separate from
// the library code paths they check) and deterministic generators.

#include <catch2/catch_amalgamated.hpp>

#include "rhfactor/rhfactor.hpp"

namespace testutil {

using namespace rhf;

// ---- independent numerical integration (composite Simpson) ----

// Brute-force oracle for the kernel integrals; deliberately naive.
template <class F>
Cplx simpson(F&& f, double a, double b, int n = 20000) {
    if (n % 2 != 0) ++n;
    double h = (b - a) / n;
    Cplx acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

// Oracle for log P(z, gamma) on bounded piecewise data.
inline Cplx oracle_line_log(const PiecewiseReal& g, Cplx z) {
    Cplx acc{0, 0};
    for (const auto& p : g.pieces()) {
        double a = p.lo.to_double(), b = p.hi.to_double();
        double c = p.val.eval();
        acc += simpson(
            [&](double t) {
                return (c / kPi) * (1.0 / (Cplx(t, 0) - z) - Cplx(t / (1 + t * t), 0));
            },
            a, b);
    }
    return acc;
}

// Oracle for log P^(z, gamma-hat).
inline Cplx oracle_circle_log(const PiecewiseCircle& gh, Cplx z) {
    Cplx acc{0, 0};
    for (const auto& arc : gh.arcs()) {
        double c = arc.val.eval();
        acc += simpson(
            [&](double th) {
                Cplx e{std::cos(th), std::sin(th)};
                return Cplx(0, c / (2 * kPi)) * ((e + z) / (e - z));
            },
            arc.lo.to_double() * kPi, arc.hi.to_double() * kPi, 4000);
    }
    return acc;
}

// Oracle for log Rmu(z).
inline Cplx oracle_outer_log(const PiecewiseCircle& lm, Cplx z) {
    Cplx acc{0, 0};
    for (const auto& arc : lm.arcs()) {
        double c = arc.val.eval();
        acc += simpson(
            [&](double th) {
                Cplx e{std::cos(th), std::sin(th)};
                return Cplx(c / (2 * kPi), 0) * (e / (e - z));
            },
            arc.lo.to_double() * kPi, arc.hi.to_double() * kPi, 4000);
    }
    return acc;
}

// ---- brute-force interval geometry oracle ----

struct RatInterval {
    Rat lo, hi;
};

// Direct membership scan over raw interval lists.
inline bool in_set(const std::vector<RatInterval>& set, const Rat& x) {
    for (const auto& iv : set)
        if (iv.lo <= x && x <= iv.hi) return true;
    return false;
}

inline std::vector<RatInterval> v_of(const std::vector<RatInterval>& set) {
    std::vector<RatInterval> out;
    for (const auto& iv : set) {
        Rat a = iv.hi.reciprocal(), b = iv.lo.reciprocal();
        out.push_back(RatInterval{a, b});
    }
    return out;
}

enum class OracleClass { Chosen, Prime, DoublePrime };

struct OracleComponent {
    Rat lo, hi; // finite placeholders; lo_unbounded/hi_unbounded flag the rays
    bool lo_unbounded = false, hi_unbounded = false;
    OracleClass cls;
};

// Recomputes Delta and its classification from the raw rational data by
// sorting boundary points and scanning midpoints; no RealSet machinery.
inline std::vector<OracleComponent> oracle_decompose(const std::vector<RatInterval>& omega1,
                                                     const std::vector<RatInterval>& omega2) {
    std::vector<RatInterval> v_omega1 = v_of(omega1);
    std::vector<RatInterval> removed;
    removed.push_back(RatInterval{Rat(-1), Rat(1)});
    for (const auto& s : {omega1, v_omega1, omega2})
        for (const auto& iv : s) removed.push_back(iv);

    std::vector<Rat> bounds;
    for (const auto& iv : removed) {
        bounds.push_back(iv.lo);
        bounds.push_back(iv.hi);
    }
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

    auto covered = [&](const Rat& x) {
        for (const auto& iv : removed)
            if (iv.lo <= x && x <= iv.hi) return true;
        return false;
    };

    // gaps between consecutive boundary points whose midpoint is uncovered
    struct RawComp { Rat lo, hi; bool lo_unb = false, hi_unb = false; };
    std::vector<RawComp> comps;
    comps.push_back(RawComp{bounds.front(), bounds.front(), true, false}); // (-inf, first)
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        Rat mid = (bounds[i] + bounds[i + 1]) / Rat(2);
        if (!covered(mid)) comps.push_back(RawComp{bounds[i], bounds[i + 1]});
    }
    comps.push_back(RawComp{bounds.back(), bounds.back(), false, true}); // (last, inf)

    std::vector<OracleComponent> out;
    for (const auto& c : comps) {
        auto classify = [&](const Rat& e, bool unbounded) {
            if (unbounded) return 0; // bounded test data: rays match nothing
            if (in_set(v_omega1, e)) return 1;
            if (e == Rat(1) || e == Rat(-1) || in_set(omega1, e) || in_set(omega2, e)) return 2;
            return 0;
        };
        int cl = classify(c.lo, c.lo_unb);
        int ch = classify(c.hi, c.hi_unb);
        OracleComponent oc;
        oc.lo = c.lo;
        oc.hi = c.hi;
        oc.lo_unbounded = c.lo_unb;
        oc.hi_unbounded = c.hi_unb;
        if (cl == 1 && ch == 1)
            oc.cls = OracleClass::Prime;
        else if ((cl == 1 && ch == 2) || (cl == 2 && ch == 1))
            oc.cls = OracleClass::Chosen;
        else
            oc.cls = OracleClass::DoublePrime;
        out.push_back(oc);
    }
    return out;
}

inline Rat oracle_set_distance(const std::vector<RatInterval>& a,
                               const std::vector<RatInterval>& b) {
    Rat best(1000000);
    for (const auto& x : a)
        for (const auto& y : b) {
            Rat d(0);
            if (x.lo > y.hi) d = x.lo - y.hi;
            else if (y.lo > x.hi) d = y.lo - x.hi;
            if (d < best) best = d;
        }
    return best;
}

// Random bounded rational sigma configuration with strictly positive mutual
// distances (draws are rejected until valid by the oracle's own distance
// computation).
struct SigmaConfig {
    std::vector<RatInterval> omega1, omega2;
};

inline SigmaConfig random_sigma_config(SplitMix64& rng) {
    while (true) {
        SigmaConfig cfg;
        int n1 = static_cast<int>(rng.integer(0, 2));
        for (int i = 0; i < n1; ++i) {
            // pieces in (0.1, 8), sometimes inside (0,1)
            Rat a(rng.integer(2, 70), rng.integer(1, 9));
            Rat b = a + Rat(rng.integer(1, 30), 10);
            if (rng.uniform() < 0.4) {
                Rat inv_b = b.reciprocal(), inv_a = a.reciprocal();
                cfg.omega1.push_back(RatInterval{inv_b, inv_a});
            } else {
                cfg.omega1.push_back(RatInterval{a, b});
            }
        }
        int n2 = static_cast<int>(rng.integer(0, 2));
        for (int i = 0; i < n2; ++i) {
            Rat a = Rat(11, 10) + Rat(rng.integer(1, 60), 10);
            Rat b = a + Rat(rng.integer(1, 25), 10);
            cfg.omega2.push_back(RatInterval{a, b});
            cfg.omega2.push_back(RatInterval{b.reciprocal(), a.reciprocal()});
        }
        // self-consistency: all pieces disjoint with positive gaps
        std::vector<RatInterval> all;
        for (const auto& s : {cfg.omega1, v_of(cfg.omega1), cfg.omega2})
            for (const auto& iv : s) all.push_back(iv);
        bool ok = true;
        for (std::size_t i = 0; i < all.size() && ok; ++i)
            for (std::size_t j = i + 1; j < all.size() && ok; ++j) {
                Rat d(0);
                if (all[i].lo > all[j].hi) d = all[i].lo - all[j].hi;
                else if (all[j].lo > all[i].hi) d = all[j].lo - all[i].hi;
                if (d <= Rat(1, 100)) ok = false;
            }
        for (const auto& iv : all)
            if (!(abs(iv.lo) > Rat(1, 20) && abs(iv.hi) > Rat(1, 20))) ok = false;
        if (!ok) continue;
        return cfg;
    }
}

inline RealSet to_realset(const std::vector<RatInterval>& ivs) {
    std::vector<Interval> out;
    for (const auto& iv : ivs) out.emplace_back(XReal(iv.lo), XReal(iv.hi));
    return RealSet(std::move(out));
}

} // namespace testutil
