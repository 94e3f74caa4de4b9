#include "test_util.hpp"

using namespace rhf;

namespace {

PiecewiseReal pw(std::initializer_list<std::tuple<Rat, Rat, Rat>> pieces) {
    std::vector<RealPiece> out;
    for (const auto& [a, b, k] : pieces)
        out.push_back(RealPiece{XReal(a), XReal(b), PiScalar::pi_multiple(k)});
    return PiecewiseReal(std::move(out));
}

} // namespace

TEST_CASE("v_func inverts piece endpoints") {
    PiecewiseReal f = pw({{Rat(2), Rat(3), Rat(1)}});
    PiecewiseReal g = v_func(f);
    REQUIRE(g.pieces().size() == 1);
    CHECK(g.pieces()[0].lo == XReal(Rat(1, 3)));
    CHECK(g.pieces()[0].hi == XReal(Rat(1, 2)));
    CHECK(g.pieces()[0].val.pi_coef() == Rat(1));
}

TEST_CASE("v_func is an involution") {
    PiecewiseReal f = pw({{Rat(-3), Rat(-2), Rat(1, 2)}, {Rat(1, 4), Rat(1, 2), Rat(-2, 3)}});
    CHECK(equal_ae(v_func(v_func(f)), f));
}

TEST_CASE("v_func rejects 0 inside a piece") {
    PiecewiseReal f = pw({{Rat(-1), Rat(1), Rat(1)}});
    CHECK_THROWS_MATCHES(v_func(f), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Err::ZeroInSupport;
                         }));
}

TEST_CASE("V-odd data satisfies V(nu) = -nu") {
    // nu(t) = -nu(1/t) built explicitly
    PiecewiseReal nu = pw({{Rat(2), Rat(3), Rat(1, 3)}, {Rat(1, 3), Rat(1, 2), Rat(-1, 3)}});
    CHECK(equal_ae(v_func(nu), nu.scaled(Rat(-1))));
}

TEST_CASE("combine add and cancellation") {
    PiecewiseReal f = pw({{Rat(0), Rat(2), Rat(1)}});
    PiecewiseReal g = pw({{Rat(1), Rat(3), Rat(1, 2)}});
    PiecewiseReal s = f + g;
    CHECK(s.value_at(XReal(Rat(1, 2))).pi_coef() == Rat(1));
    CHECK(s.value_at(XReal(Rat(3, 2))).pi_coef() == Rat(3, 2));
    CHECK(s.value_at(XReal(Rat(5, 2))).pi_coef() == Rat(1, 2));
    CHECK((f - f).pieces().empty());
}

TEST_CASE("indicator multiplication") {
    PiecewiseReal f = pw({{Rat(0), Rat(2), Rat(1)}});
    PiecewiseReal chi = pw({{Rat(0), Rat(1), Rat(1)}}); // any nonzero value marks support
    PiecewiseReal prod = combine(f, chi, CombineOp::IndicatorMultiply);
    REQUIRE(prod.pieces().size() == 1);
    CHECK(prod.pieces()[0].lo == XReal(Rat(0)));
    CHECK(prod.pieces()[0].hi == XReal(Rat(1)));
    CHECK(prod.pieces()[0].val.pi_coef() == Rat(1));
}

TEST_CASE("oscillation over a window") {
    PiecewiseReal f = pw({{Rat(2), Rat(3), Rat(1)}, {Rat(3), Rat(4), Rat(1, 3)}});
    double osc = oscillation(f, Interval(XReal(Rat(5, 2)), XReal(Rat(7, 2))));
    CHECK(osc == Catch::Approx(2.0 * kPi / 3.0));

    CHECK(oscillation(pw({{Rat(-5), Rat(5), Rat(2)}}), Interval(XReal(Rat(0)), XReal(Rat(1)))) ==
          0.0);
    CHECK(oscillation(f, Interval(XReal(Rat(10)), XReal(Rat(11)))) == 0.0);
    // uncovered parts contribute the implicit 0
    CHECK(oscillation(f, Interval(XReal(Rat(7, 2)), XReal(Rat(9, 2)))) ==
          Catch::Approx(kPi / 3.0));
}

TEST_CASE("oscillation domain errors") {
    PiecewiseReal f = pw({{Rat(2), Rat(3), Rat(1)}});
    CHECK_THROWS_MATCHES(oscillation(f, Interval(XReal(Rat(0)), XReal::pos_inf())), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Err::DomainError; }));
    CHECK_THROWS_MATCHES(oscillation(f, Interval(XReal(Rat(1)), XReal(Rat(1)))), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Err::EmptyIntersection; }));
}

TEST_CASE("piece count cap") {
    std::vector<RealPiece> many;
    for (int i = 0; i < 10001; ++i)
        many.push_back(RealPiece{XReal(Rat(2 * i)), XReal(Rat(2 * i + 1)),
                                 PiScalar::pi_multiple(Rat(1))});
    CHECK_THROWS_MATCHES(PiecewiseReal(std::move(many)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Err::PieceCountOverflow;
                         }));
}

TEST_CASE("sampled data is rejected by set algebra") {
    SampledData s;
    s.knots = {{0.0, 0.0}, {1.0, 1.0}, {2.0, 0.0}};
    PiecewiseReal f = PiecewiseReal::sampled(s);
    CHECK_THROWS_MATCHES(v_func(f), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Err::NotPiecewise;
                         }));
    CHECK_THROWS_MATCHES(combine(f, f, CombineOp::Add), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Err::NotPiecewise; }));
}

TEST_CASE("circle parity classification") {
    // odd
    std::vector<ArcPiece> arcs{
        {XReal(Rat(1, 4)), XReal(Rat(1, 2)), PiScalar::pi_multiple(Rat(1, 3))},
        {XReal(Rat(-1, 2)), XReal(Rat(-1, 4)), PiScalar::pi_multiple(Rat(-1, 3))}};
    CHECK(parity(PiecewiseCircle(arcs)) == Parity::Odd);
    // even
    arcs[1].val = PiScalar::pi_multiple(Rat(1, 3));
    CHECK(parity(PiecewiseCircle(arcs)) == Parity::Even);
    // neither
    PiecewiseCircle half = PiecewiseCircle::indicator(XReal(Rat(0)), XReal(Rat(1, 2)),
                                                      PiScalar::pi_multiple(Rat(1)));
    CHECK(parity(half) == Parity::Neither);
    // zero passes the oddness gate
    CHECK(is_odd_within(PiecewiseCircle{}));
}

TEST_CASE("exact rational-pi bookkeeping through scaling") {
    PiecewiseReal f = pw({{Rat(1), Rat(2), Rat(2)}});
    PiecewiseReal h = f.scaled(Rat(1, 2));
    long long k = 0;
    REQUIRE(h.pieces()[0].val.integer_pi_multiple(&k));
    CHECK(k == 1);
    CHECK_FALSE(f.scaled(Rat(1, 3)).pieces()[0].val.integer_pi_multiple(nullptr));
}
