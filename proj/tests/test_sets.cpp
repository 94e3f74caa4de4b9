#include "test_util.hpp"

using namespace rhf;
using testutil::RatInterval;

namespace {

RealSet rs(std::initializer_list<std::pair<Rat, Rat>> ivs) {
    std::vector<Interval> out;
    for (const auto& [a, b] : ivs) out.emplace_back(XReal(a), XReal(b));
    return RealSet(std::move(out));
}

} // namespace

TEST_CASE("V maps endpoints by inversion") {
    RealSet a = rs({{Rat(2), Rat(3)}});
    RealSet img = v_set(a);
    REQUIRE(img.size() == 1);
    CHECK(img.intervals()[0].lo == XReal(Rat(1, 3)));
    CHECK(img.intervals()[0].hi == XReal(Rat(1, 2)));
}

TEST_CASE("V is an involution") {
    RealSet a = rs({{Rat(-2), Rat(-1, 2)}, {Rat(3), Rat(4)}});
    CHECK(v_set(v_set(a)) == a);
}

TEST_CASE("V fixed set maps to itself (membership oracle)") {
    RealSet a = rs({{Rat(1, 4), Rat(1, 3)}, {Rat(3), Rat(4)}});
    RealSet img = v_set(a);
    CHECK(img == a);
    // membership oracle over rational probes: t in V(A) iff 1/t in A
    std::vector<RatInterval> raw{{Rat(1, 4), Rat(1, 3)}, {Rat(3), Rat(4)}};
    for (long long num = 1; num <= 40; ++num)
        for (long long den = 1; den <= 8; ++den) {
            Rat t(num, den);
            bool lhs = img.contains(XReal(t));
            bool rhs = testutil::in_set(raw, t.reciprocal());
            CHECK(lhs == rhs);
        }
}

TEST_CASE("V rejects 0 in the interior") {
    CHECK_THROWS_MATCHES(v_set(rs({{Rat(-1), Rat(1)}})), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Err::ZeroInSet; }));
}

TEST_CASE("V of rays through zero endpoints (footnote geometry)") {
    RealSet a = rs({{Rat(-1, 4), Rat(0)}});
    RealSet img = v_set(a);
    REQUIRE(img.size() == 1);
    CHECK(img.intervals()[0].lo.is_neg_inf());
    CHECK(img.intervals()[0].hi == XReal(Rat(-4)));
    CHECK(v_set(img) == a);
}

TEST_CASE("validate_sigma on the worked configuration") {
    RealSet omega1 = rs({{Rat(1, 2), Rat(3, 4)}});
    RealSet omega2 = rs({{Rat(1, 4), Rat(1, 3)}, {Rat(3), Rat(4)}});
    SigmaDecomposition sig = validate_sigma(omega1, omega2);
    CHECK(sig.v_omega1 == rs({{Rat(4, 3), Rat(2)}}));

    // rational distance oracle
    using testutil::oracle_set_distance;
    std::vector<RatInterval> o1{{Rat(1, 2), Rat(3, 4)}};
    std::vector<RatInterval> v1{{Rat(4, 3), Rat(2)}};
    std::vector<RatInterval> o2{{Rat(1, 4), Rat(1, 3)}, {Rat(3), Rat(4)}};
    CHECK(oracle_set_distance(o1, v1) == Rat(7, 12));
    CHECK(oracle_set_distance(o1, o2) == Rat(1, 6));
    CHECK(oracle_set_distance(v1, o2) == Rat(1));
    CHECK(sig.min_pairwise_distance == Catch::Approx(1.0 / 6.0));
}

TEST_CASE("validate_sigma rejects touching sets") {
    CHECK_THROWS_MATCHES(validate_sigma(rs({{Rat(2), Rat(3)}}),
                                        rs({{Rat(3), Rat(4)}, {Rat(1, 4), Rat(1, 3)}})),
                         Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Err::DistanceViolation;
                         }));
}

TEST_CASE("validate_sigma rejects asymmetric Omega2") {
    CHECK_THROWS_MATCHES(validate_sigma(RealSet{}, rs({{Rat(2), Rat(3)}})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Err::SymmetryViolation;
                         }));
}

TEST_CASE("decompose_delta on the worked configuration") {
    SigmaDecomposition sig = validate_sigma(rs({{Rat(1, 2), Rat(3, 4)}}),
                                            rs({{Rat(1, 4), Rat(1, 3)}, {Rat(3), Rat(4)}}));
    IntervalClassification cl = decompose_delta(sig);

    REQUIRE(cl.components.size() == 4);
    CHECK(cl.components[0].lo.is_neg_inf());
    CHECK(cl.components[0].hi == XReal(Rat(-1)));
    CHECK(cl.components[1].lo == XReal(Rat(1)));
    CHECK(cl.components[1].hi == XReal(Rat(4, 3)));
    CHECK(cl.components[2].lo == XReal(Rat(2)));
    CHECK(cl.components[2].hi == XReal(Rat(3)));
    CHECK(cl.components[3].lo == XReal(Rat(4)));
    CHECK(cl.components[3].hi.is_pos_inf());

    REQUIRE(cl.k0() == 2);
    CHECK(cl.delta_prime.empty());
    CHECK(cl.delta_double_prime.size() == 2);

    auto stars = star_endpoints(cl);
    CHECK(stars[0].first == XReal(Rat(1)));
    CHECK(stars[0].second == XReal(Rat(3, 4)));
    CHECK(stars[1].first == XReal(Rat(1, 2)));
    CHECK(stars[1].second == XReal(Rat(3)));
}

TEST_CASE("decompose_delta with empty sigma") {
    SigmaDecomposition sig = validate_sigma(RealSet{}, RealSet{});
    IntervalClassification cl = decompose_delta(sig);
    REQUIRE(cl.components.size() == 2);
    CHECK(cl.k0() == 0);
    CHECK(cl.delta_double_prime.size() == 2);
}

TEST_CASE("footnote geometry: infinite starred endpoint") {
    RealSet omega1 = rs({{Rat(1, 5), Rat(1, 4)}});
    omega1 = omega1.unite(RealSet({Interval(XReal::neg_inf(), XReal(Rat(-7)))}));
    SigmaDecomposition sig = validate_sigma(omega1, RealSet{}, /*footnote=*/true);
    IntervalClassification cl = decompose_delta(sig);

    // components: (-7,-1), (1,4), (5,inf)
    REQUIRE(cl.components.size() == 3);
    REQUIRE(cl.k0() == 2);
    CHECK(cl.chosen[0].delta.lo == XReal(Rat(1)));
    CHECK(cl.chosen[0].alpha_star == XReal(Rat(1)));
    CHECK(cl.chosen[0].beta_star == XReal(Rat(1, 4)));
    CHECK_FALSE(cl.chosen[0].footnote);
    CHECK(cl.chosen[1].delta.lo == XReal(Rat(5)));
    CHECK(cl.chosen[1].alpha_star == XReal(Rat(1, 5)));
    CHECK(cl.chosen[1].beta_star.is_pos_inf());
    CHECK(cl.chosen[1].footnote);

    CHECK_THROWS_MATCHES(star_endpoints(cl), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Err::FootnoteRequired;
                         }));

    // without the footnote flag the geometry itself is rejected
    CHECK_THROWS_MATCHES(validate_sigma(omega1, RealSet{}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Err::DistanceViolation;
                         }));
}

TEST_CASE("partition of unity at the worked points") {
    SigmaDecomposition sig = validate_sigma(rs({{Rat(1, 2), Rat(3, 4)}}),
                                            rs({{Rat(1, 4), Rat(1, 3)}, {Rat(3), Rat(4)}}));
    IntervalClassification cl = decompose_delta(sig);
    CHECK(partition_check(cl, XReal(Rat(3, 5))) == 1);
    CHECK(partition_check(cl, XReal(Rat(5, 2))) == 1);
    CHECK(partition_check(cl, XReal(Rat(10))) == 1);
    CHECK_THROWS_MATCHES(partition_check(cl, XReal(Rat(1))), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Err::DomainError; }));
    CHECK_THROWS_MATCHES(partition_check(cl, XReal(Rat(0))), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Err::DomainError; }));
}

TEST_CASE("random rational configurations match the brute-force oracle") {
    SplitMix64 rng(20240811);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto cfg = testutil::random_sigma_config(rng);
        auto oracle = testutil::oracle_decompose(cfg.omega1, cfg.omega2);

        SigmaDecomposition sig =
            validate_sigma(testutil::to_realset(cfg.omega1), testutil::to_realset(cfg.omega2));
        IntervalClassification cl = decompose_delta(sig);

        REQUIRE(cl.components.size() == oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i) {
            const auto& oc = oracle[i];
            const auto& comp = cl.components[i];
            if (!oc.lo_unbounded) CHECK(comp.lo == XReal(oc.lo));
            if (!oc.hi_unbounded) CHECK(comp.hi == XReal(oc.hi));
            DeltaClass want = oc.cls == testutil::OracleClass::Chosen ? DeltaClass::Chosen
                              : oc.cls == testutil::OracleClass::Prime
                                  ? DeltaClass::Prime
                                  : DeltaClass::DoublePrime;
            CHECK(cl.classes[i] == want);
        }

        // Eq (24) on the oracle side
        auto v1 = testutil::v_of(cfg.omega1);
        std::size_t k = 0;
        for (std::size_t i = 0; i < oracle.size(); ++i) {
            if (oracle[i].cls != testutil::OracleClass::Chosen) continue;
            const auto& ci = cl.chosen[k++];
            Rat a = oracle[i].lo, b = oracle[i].hi;
            XReal want_a = testutil::in_set(v1, a) ? XReal(a.reciprocal()) : XReal(a);
            XReal want_b = testutil::in_set(v1, b) ? XReal(b.reciprocal()) : XReal(b);
            CHECK(ci.alpha_star == want_a);
            CHECK(ci.beta_star == want_b);
        }
        CHECK(k == cl.k0());

        // partition of unity at interior probes
        SplitMix64 probe_rng(trial + 1);
        for (int p = 0; p < 20; ++p) {
            Rat t(probe_rng.integer(-900, 900), probe_rng.integer(91, 97));
            if (t.is_zero() || t == Rat(1) || t == Rat(-1)) continue;
            bool on_endpoint = false;
            for (const auto& comp : cl.components)
                if (comp.lo == XReal(t) || comp.hi == XReal(t)) on_endpoint = true;
            if (on_endpoint) continue;
            CHECK(partition_check(cl, XReal(t)) == 1);
            ++checked;
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("k0 is finite and matches the brute-force count") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        auto cfg = testutil::random_sigma_config(rng);
        auto oracle = testutil::oracle_decompose(cfg.omega1, cfg.omega2);
        std::size_t oracle_k0 = 0;
        for (const auto& oc : oracle)
            if (oc.cls == testutil::OracleClass::Chosen) ++oracle_k0;
        SigmaDecomposition sig =
            validate_sigma(testutil::to_realset(cfg.omega1), testutil::to_realset(cfg.omega2));
        CHECK(decompose_delta(sig).k0() == oracle_k0);
    }
}
