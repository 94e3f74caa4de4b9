#pragma once

#include <memory>
#include <variant>

#include "rhfactor/kernels.hpp"

namespace rhf {

enum class EvalMethod { Closed, Quadrature };

class AnalyticFactor;

struct LineCauchyNode {
    PiecewiseReal data;
    EvalMethod method = EvalMethod::Closed;
};

struct CircleCauchyNode {
    PiecewiseCircle data;
};

struct OuterModulusNode {
    PiecewiseCircle log_modulus;
};

// scale * prod (z - point)^order, scale > 0, points real
struct RationalNode {
    struct Term {
        XReal point;
        long long order;
    };
    std::vector<Term> terms;
    double scale = 1.0;
};

struct ProductNode {
    std::vector<AnalyticFactor> parts;
};

// Evaluable holomorphic factor: a Cauchy-kernel exponential, an outer-modulus
// kernel, a rational factor, or a product of those. Immutable; evaluation is
// pure and safe to call concurrently.
class AnalyticFactor {
public:
    using Node = std::variant<LineCauchyNode, CircleCauchyNode, OuterModulusNode,
                              RationalNode, ProductNode>;

    AnalyticFactor() : node_(RationalNode{}) {} // the constant 1

    static AnalyticFactor one() { return AnalyticFactor(); }
    static AnalyticFactor constant(double c) {
        if (!(c > 0)) fail(Err::DomainError, "factor constants must be positive");
        RationalNode n;
        n.scale = c;
        return AnalyticFactor(Node(std::move(n)));
    }
    static AnalyticFactor line(PiecewiseReal data, EvalMethod method = EvalMethod::Closed) {
        if (data.has_sampled() && method == EvalMethod::Closed) method = EvalMethod::Quadrature;
        return AnalyticFactor(Node(LineCauchyNode{std::move(data), method}));
    }
    static AnalyticFactor circle(PiecewiseCircle data) {
        return AnalyticFactor(Node(CircleCauchyNode{std::move(data)}));
    }
    static AnalyticFactor outer(PiecewiseCircle log_modulus) {
        return AnalyticFactor(Node(OuterModulusNode{std::move(log_modulus)}));
    }
    static AnalyticFactor rational(std::vector<RationalNode::Term> terms, double scale = 1.0) {
        if (!(scale > 0)) fail(Err::DomainError, "factor constants must be positive");
        for (const auto& t : terms)
            if (!t.point.finite())
                fail(Err::FootnoteRequired, "infinite rational point; use the line-kernel form");
        return AnalyticFactor(Node(RationalNode{std::move(terms), scale}));
    }
    // Flattens nested products.
    static AnalyticFactor product(std::vector<AnalyticFactor> parts) {
        ProductNode n;
        for (auto& p : parts) {
            if (auto* sub = std::get_if<ProductNode>(&p.node_)) {
                for (auto& s : sub->parts) n.parts.push_back(std::move(s));
            } else {
                n.parts.push_back(std::move(p));
            }
        }
        return AnalyticFactor(Node(std::move(n)));
    }

    const Node& node() const { return node_; }

    double quadrature_tol() const { return quad_tol_; }
    AnalyticFactor with_tol(double tol) const {
        AnalyticFactor f = *this;
        f.quad_tol_ = tol;
        if (auto* prod = std::get_if<ProductNode>(&f.node_))
            for (auto& p : prod->parts) p = p.with_tol(tol);
        return f;
    }

    // log of the factor value; for products the parts accumulate in the log
    // domain so huge/tiny partial values never overflow.
    Cplx log_eval(Cplx z) const {
        return std::visit(
            [&](const auto& n) -> Cplx { return log_eval_node(n, z); }, node_);
    }

    Cplx eval(Cplx z) const { return std::exp(log_eval(z)); }

    // distance from z to the singular support (real pieces, rational points,
    // circle arcs)
    double singular_distance(Cplx z) const {
        return std::visit([&](const auto& n) { return singular_distance_node(n, z); }, node_);
    }

    RealSet real_singular_support() const {
        std::vector<Interval> ivs;
        collect_real_support(ivs);
        return RealSet(std::move(ivs));
    }

    bool circle_supported_only() const {
        return std::visit(
            [](const auto& n) -> bool {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, CircleCauchyNode> ||
                              std::is_same_v<T, OuterModulusNode>)
                    return true;
                else if constexpr (std::is_same_v<T, RationalNode>)
                    return n.terms.empty();
                else if constexpr (std::is_same_v<T, ProductNode>) {
                    for (const auto& p : n.parts)
                        if (!p.circle_supported_only()) return false;
                    return true;
                } else
                    return false;
            },
            node_);
    }

private:
    explicit AnalyticFactor(Node n) : node_(std::move(n)) {}

    Cplx log_eval_node(const LineCauchyNode& n, Cplx z) const {
        if (n.method == EvalMethod::Closed && !n.data.has_sampled())
            return line_log_closed(n.data, z);
        return line_log_quadrature(n.data, z, quad_tol_);
    }
    Cplx log_eval_node(const CircleCauchyNode& n, Cplx z) const {
        return circle_log(n.data, z, quad_tol_);
    }
    Cplx log_eval_node(const OuterModulusNode& n, Cplx z) const {
        return outer_log(n.log_modulus, z, quad_tol_);
    }
    Cplx log_eval_node(const RationalNode& n, Cplx z) const {
        Cplx acc{std::log(n.scale), 0};
        for (const auto& t : n.terms) {
            Cplx d = z - Cplx(t.point.to_double(), 0);
            if (d == Cplx{0, 0}) fail(Err::OnSingularSupport, "evaluation at a rational point");
            acc += static_cast<double>(t.order) * std::log(d);
        }
        return acc;
    }
    Cplx log_eval_node(const ProductNode& n, Cplx z) const {
        Cplx acc{0, 0};
        for (const auto& p : n.parts) acc += p.log_eval(z);
        return acc;
    }

    double singular_distance_node(const LineCauchyNode& n, Cplx z) const {
        return line_support_distance(n.data, z);
    }
    double singular_distance_node(const CircleCauchyNode& n, Cplx z) const {
        return arcs_distance(n.data, z);
    }
    double singular_distance_node(const OuterModulusNode& n, Cplx z) const {
        return arcs_distance(n.log_modulus, z);
    }
    double singular_distance_node(const RationalNode& n, Cplx z) const {
        double d = std::numeric_limits<double>::infinity();
        for (const auto& t : n.terms) d = std::min(d, std::abs(z - Cplx(t.point.to_double(), 0)));
        return d;
    }
    double singular_distance_node(const ProductNode& n, Cplx z) const {
        double d = std::numeric_limits<double>::infinity();
        for (const auto& p : n.parts) d = std::min(d, p.singular_distance(z));
        return d;
    }

    static double arcs_distance(const PiecewiseCircle& data, Cplx z) {
        double d = std::numeric_limits<double>::infinity();
        double r = std::abs(z);
        double coord = std::atan2(z.imag(), z.real()) / kPi;
        for (const auto& a : data.arcs()) {
            if (a.val.is_zero()) continue;
            if (a.lo.to_double() <= coord && coord <= a.hi.to_double()) {
                d = std::min(d, std::abs(r - 1.0));
            } else {
                for (double th : {a.lo.to_double() * kPi, a.hi.to_double() * kPi})
                    d = std::min(d, std::abs(z - Cplx(std::cos(th), std::sin(th))));
            }
        }
        return d;
    }

    void collect_real_support(std::vector<Interval>& ivs) const {
        std::visit(
            [&](const auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, LineCauchyNode>) {
                    for (const auto& iv : n.data.support().intervals()) ivs.push_back(iv);
                } else if constexpr (std::is_same_v<T, RationalNode>) {
                    for (const auto& t : n.terms) ivs.emplace_back(t.point, t.point);
                } else if constexpr (std::is_same_v<T, ProductNode>) {
                    for (const auto& p : n.parts) p.collect_real_support(ivs);
                }
            },
            node_);
    }

    Node node_;
    double quad_tol_ = 1e-10;
};

inline Cplx eval_product(const std::vector<AnalyticFactor>& factors, Cplx z) {
    Cplx acc{0, 0};
    for (const auto& f : factors) acc += f.log_eval(z);
    return std::exp(acc);
}

// ---- boundary limits by extrapolation along the Plemelj approach paths ----

// log f(t +- i eps) extrapolated to eps -> 0; the imaginary part is the
// continued (unwrapped) boundary argument of the kernel exponent.
inline Cplx log_boundary_limit_real(const AnalyticFactor& f, double t, int side) {
    double s = side >= 0 ? 1.0 : -1.0;
    return limit_along([&](double eps) { return f.log_eval(Cplx(t, s * eps)); });
}

// log f((1 -+ eps) e^{i theta}); side >= 0 means the limit from inside.
inline Cplx log_boundary_limit_circle(const AnalyticFactor& f, double theta, int side) {
    if (!f.circle_supported_only())
        fail(Err::NonCircleFactor, "circle boundary limit needs a circle-supported factor");
    double s = side >= 0 ? -1.0 : 1.0;
    Cplx dir{std::cos(theta), std::sin(theta)};
    return limit_along([&](double eps) { return f.log_eval((1.0 + s * eps) * dir); });
}

// The closed-form line limits (independent check path).
inline Cplx boundary_limit_line(const PiecewiseReal& g, double t, int side) {
    return line_boundary_limit_closed(g, t, side);
}

// Lemma-2 style representation: a factor whose boundary argument from above
// (resp. inside) equals the given bounded data; the multiplicative constant
// is fixed to 1 here and absorbed by the factorization's global constant.
inline AnalyticFactor represent_from_argument(const PiecewiseReal& eta,
                                              double max_abs = 100.0) {
    if (eta.sup_abs() > max_abs)
        fail(Err::UnboundedArgument, "argument data exceeds configured bound");
    return AnalyticFactor::line(eta);
}

inline AnalyticFactor represent_from_argument(const PiecewiseCircle& eta_hat,
                                              double max_abs = 100.0) {
    if (eta_hat.sup_abs() > max_abs)
        fail(Err::UnboundedArgument, "argument data exceeds configured bound");
    return AnalyticFactor::circle(eta_hat);
}

} // namespace rhf
