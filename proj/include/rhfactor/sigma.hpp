#pragma once

#include "rhfactor/intervals.hpp"

namespace rhf {

// The validated singularity geometry: Sigma = Omega1 u V(Omega1) u Omega2
// with V-symmetric Omega2 and strictly positive mutual distances.
struct SigmaDecomposition {
    RealSet omega1;
    RealSet omega2;
    RealSet v_omega1;
    double min_pairwise_distance = 0;
    // Allows 0 on the closure of Omega1 / V(Omega1) (infinite starred
    // endpoints; the rational factor is then replaced by a line kernel).
    bool footnote_enabled = false;

    RealSet sigma() const { return omega1.unite(v_omega1).unite(omega2); }
    RealSet omega() const { return omega1.unite(omega2); }
};

inline SigmaDecomposition validate_sigma(const RealSet& omega1, const RealSet& omega2,
                                         bool footnote_enabled = false) {
    const XReal zero{Rat(0)};
    for (const auto& iv : omega1.intervals())
        if (iv.contains_open(zero)) fail(Err::ZeroInSet, "0 interior to Omega1");
    if (omega2.contains_zero()) fail(Err::ZeroInSet, "0 in Omega2");
    if (!footnote_enabled && omega1.contains_zero())
        fail(Err::ZeroInSet, "0 on the closure of Omega1 needs the footnote path");

    RealSet v_o1 = v_set(omega1);
    RealSet v_o2 = v_set(omega2);
    if (!(v_o2 == omega2))
        fail(Err::SymmetryViolation,
             "Omega2 must satisfy Omega2 = V(Omega2); V gives " + v_o2.str());

    XReal d1 = set_distance(omega1, v_o1);
    XReal d2 = set_distance(omega1, omega2);
    XReal d3 = set_distance(v_o1, omega2);
    if (d1.is_zero()) fail(Err::DistanceViolation, "dist(Omega1, V(Omega1)) = 0");
    if (d2.is_zero()) fail(Err::DistanceViolation, "dist(Omega1, Omega2) = 0");
    if (d3.is_zero()) fail(Err::DistanceViolation, "dist(V(Omega1), Omega2) = 0");

    if (!footnote_enabled) {
        RealSet sig = omega1.unite(v_o1).unite(omega2);
        if (!sig.empty() && set_distance_to_point(sig, zero).is_zero())
            fail(Err::DistanceViolation, "dist(Sigma, 0) = 0 needs the footnote path");
    }

    SigmaDecomposition out;
    out.omega1 = omega1;
    out.omega2 = omega2;
    out.v_omega1 = v_o1;
    out.footnote_enabled = footnote_enabled;
    double dmin = std::numeric_limits<double>::infinity();
    for (const XReal& d : {d1, d2, d3}) dmin = std::min(dmin, d.to_double());
    out.min_pairwise_distance = dmin;
    return out;
}

enum class DeltaClass { Chosen, Prime, DoublePrime };

struct ChosenInterval {
    Interval delta;
    XReal alpha_star, beta_star;
    bool footnote = false; // a starred endpoint is infinite
};

// The components of Delta with their classes, the chosen intervals with
// starred endpoints, and the sigma geometry they came from.
struct IntervalClassification {
    SigmaDecomposition sigma;
    bool hardy_mode = false;            // Delta = R \ ([-1,1] u Omega1 u V(Omega1))
    std::vector<Interval> components;   // open intervals, ordered
    std::vector<DeltaClass> classes;    // aligned with components
    std::vector<ChosenInterval> chosen; // the k0 chosen intervals, in order
    std::vector<Interval> delta_prime;
    std::vector<Interval> delta_double_prime;

    std::size_t k0() const { return chosen.size(); }
};

namespace detail {

enum class EndpointClass { VOmega1, Other, None };

// Membership class of a component endpoint. +-1 counts as "other side";
// infinite endpoints belong to a set iff that set is unbounded (the two
// infinities are identified, as under the inversion symmetry).
inline EndpointClass classify_endpoint(const XReal& e, const SigmaDecomposition& s) {
    if (!e.finite()) {
        if (s.v_omega1.unbounded()) return EndpointClass::VOmega1;
        if (s.omega1.unbounded() || s.omega2.unbounded()) return EndpointClass::Other;
        return EndpointClass::None;
    }
    const XReal one{Rat(1)}, minus_one{Rat(-1)};
    if (s.v_omega1.contains(e)) return EndpointClass::VOmega1;
    if (e == one || e == minus_one) return EndpointClass::Other;
    if (s.omega1.contains(e) || s.omega2.contains(e)) return EndpointClass::Other;
    return EndpointClass::None;
}

} // namespace detail

// Splits R \ ([-1,1] u Sigma) (or the Theorem-3 variant without Omega2) into
// components and classifies them: chosen (one endpoint in V(Omega1), the
// other in the admissible opposite class), Delta' (both in V(Omega1)),
// Delta'' (the rest). Positive mutual distances make k0 finite.
inline IntervalClassification decompose_delta(const SigmaDecomposition& sigma,
                                              bool hardy_mode = false) {
    RealSet removed = RealSet::single(XReal(Rat(-1)), XReal(Rat(1)))
                          .unite(sigma.omega1)
                          .unite(sigma.v_omega1);
    if (!hardy_mode) removed = removed.unite(sigma.omega2);

    IntervalClassification out;
    out.sigma = sigma;
    out.hardy_mode = hardy_mode;
    out.components = complement_components(removed);

    for (const auto& comp : out.components) {
        auto lo_cls = detail::classify_endpoint(comp.lo, sigma);
        auto hi_cls = detail::classify_endpoint(comp.hi, sigma);
        // In hardy mode Omega2 is interior to the components, so finite
        // endpoints cannot lie in it; the classifier's Other class is the
        // same membership test either way.
        if (comp.lo.finite() && lo_cls == detail::EndpointClass::None)
            fail(Err::InternalError, "endpoint " + comp.lo.str() + " matches no membership class");
        if (comp.hi.finite() && hi_cls == detail::EndpointClass::None)
            fail(Err::InternalError, "endpoint " + comp.hi.str() + " matches no membership class");

        bool lo_v = lo_cls == detail::EndpointClass::VOmega1;
        bool hi_v = hi_cls == detail::EndpointClass::VOmega1;
        if (lo_v && hi_v) {
            out.classes.push_back(DeltaClass::Prime);
            out.delta_prime.push_back(comp);
        } else if ((lo_v && hi_cls == detail::EndpointClass::Other) ||
                   (hi_v && lo_cls == detail::EndpointClass::Other)) {
            out.classes.push_back(DeltaClass::Chosen);
            ChosenInterval ci;
            ci.delta = comp;
            auto star = [&](const XReal& e, bool in_v) -> XReal {
                if (!in_v) return e;
                if (!e.finite()) return XReal(Rat(0)); // V(inf) = 0
                return e.reciprocal();
            };
            ci.alpha_star = star(comp.lo, lo_v);
            ci.beta_star = star(comp.hi, hi_v);
            ci.footnote = !ci.alpha_star.finite() || !ci.beta_star.finite();
            out.chosen.push_back(std::move(ci));
        } else {
            out.classes.push_back(DeltaClass::DoublePrime);
            out.delta_double_prime.push_back(comp);
        }
    }
    return out;
}

// The starred endpoint pairs of Eq-(24) form. An infinite starred endpoint
// (0 on the boundary of V(Omega1)) raises FootnoteRequired: the rational
// factor for that interval does not exist and must be built as the line
// kernel P(z, chi * n(k) pi) instead. The classification keeps the flag, so
// the factorization engine routes around this error.
inline std::vector<std::pair<XReal, XReal>> star_endpoints(const IntervalClassification& cl) {
    std::vector<std::pair<XReal, XReal>> out;
    for (const auto& ci : cl.chosen) {
        if (ci.footnote)
            fail(Err::FootnoteRequired,
                 "infinite starred endpoint on " + ci.delta.str() +
                     "; build that factor as a line kernel");
        out.emplace_back(ci.alpha_star, ci.beta_star);
    }
    return out;
}

// Sum of the nine indicators of Eq (25) at t; the contract value is 1.
inline int partition_check(const IntervalClassification& cl, const XReal& t) {
    const XReal zero{Rat(0)}, one{Rat(1)}, minus_one{Rat(-1)};
    if (t == zero || t == one || t == minus_one)
        fail(Err::DomainError, "partition indicator undefined at 0, +-1");
    XReal tv = t.reciprocal();

    auto in_open_list = [&](const std::vector<Interval>& ivs, const XReal& x) {
        for (const auto& iv : ivs)
            if (iv.contains_open(x)) return 1;
        return 0;
    };
    std::vector<Interval> chosen_ivs;
    for (const auto& ci : cl.chosen) chosen_ivs.push_back(ci.delta);
    for (const auto& comp : cl.components)
        if (comp.lo == t || comp.hi == t)
            fail(Err::DomainError, "partition indicator undefined at a component endpoint");

    int sum = 0;
    sum += cl.sigma.omega1.contains(t) ? 1 : 0;
    sum += cl.sigma.omega1.contains(tv) ? 1 : 0; // V(chi_1)
    sum += cl.sigma.omega2.contains(t) ? 1 : 0;
    sum += in_open_list(chosen_ivs, t);
    sum += in_open_list(chosen_ivs, tv);
    sum += in_open_list(cl.delta_prime, t);
    sum += in_open_list(cl.delta_prime, tv);
    sum += in_open_list(cl.delta_double_prime, t);
    sum += in_open_list(cl.delta_double_prime, tv);
    return sum;
}

} // namespace rhf
