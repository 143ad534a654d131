#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lef/spaces.hpp"

using namespace lef;

TEST_CASE("build_cp") {
    SpaceModel cp1 = build_cp(1);
    auto a = cp1.ring->var("alpha");
    CHECK((a * a).is_zero());
    CHECK(integrate(a) == Cyclotomic(1));

    SpaceModel cp2 = build_cp(2);
    REQUIRE(cp2.tangent_class.has_value());
    CHECK(cp2.tangent_class->total_class.constant_term() == Cyclotomic(1));
    // (1+a^2)^3 = 1 + 3a^2 in Q[a]/a^3
    CHECK(cp2.tangent_class->total_class ==
          cp2.ring->one() + Cyclotomic(3) * cp2.ring->var("alpha", 2));
    CHECK(cp2.dimension == 4);

    // A-hat integrals downstream
    QSeries ahat = named_series("ahat", 20);
    CHECK(integrate(genus_of_total_class(ahat, *cp2.tangent_class)).to_rational() ==
          Rational(-1, 8));
    SpaceModel cp4 = build_cp(4);
    CHECK(integrate(genus_of_total_class(ahat, *cp4.tangent_class)).to_rational() ==
          Rational(3, 128));
    CHECK(integrate(genus_of_roots(ahat, *cp4.tangent_roots)).to_rational() ==
          Rational(3, 128));
    CHECK_THROWS(build_cp(0));
}

TEST_CASE("build_kp") {
    SpaceModel kp1 = build_kp(1);
    // q = 2: p1 = 0 (total class is 1)
    CHECK(kp1.tangent_class->total_class == kp1.ring->one());

    SpaceModel kp2 = build_kp(2);
    // q = 3: (1 - 4a + 16a^2)(1 + a)^6 = 1 + 2a + 7a^2
    auto a = kp2.ring->var("alpha");
    CHECK(kp2.tangent_class->total_class ==
          kp2.ring->one() + Cyclotomic(2) * a + Cyclotomic(7) * (a * a));
    for (int qm1 = 1; qm1 <= 5; ++qm1)
        CHECK(build_kp(qm1).tangent_class->total_class.constant_term() == Cyclotomic(1));
    CHECK_THROWS(build_kp(0));
}

TEST_CASE("build_torus_with_W") {
    for (int k = 1; k <= 3; ++k) {
        SpaceModel t = build_torus_with_W(k);
        REQUIRE(t.W.has_value());
        RingElement ch = chern_character(*t.W, false);
        RingElement prod = t.ring->one();
        for (int i = 1; i <= k; ++i)
            prod = prod * (t.ring->one() +
                           t.ring->var("eta" + std::to_string(i)) *
                               t.ring->var("beta" + std::to_string(i)));
        CHECK(ch == prod);
        CHECK(ch.terms().size() == (size_t(1) << k));
        CHECK(ch.max_degree() == 2 * k);
    }
}

TEST_CASE("build_universal_example") {
    for (int k = 1; k <= 3; ++k) {
        auto comps = build_universal_example(k);
        REQUIRE(comps.size() == 2);
        for (const auto& c : comps) {
            CHECK(c.leafwise.rank() == 0);
            CHECK(c.s1 == 0);
            REQUIRE(c.normal.size() == 1);
            CHECK(c.normal[0].theta.a == 1);
            CHECK(c.normal[0].theta.m == 4);
            CHECK(c.normal[0].bundle.rank() == 1);
            CHECK(c.normal[0].bundle.roots[0].root.is_zero());
            CHECK(c.normal[0].bundle.roots[0].weight == Cyclotomic::i());
            CHECK(c.currents.size() == (size_t(1) << k));
            REQUIRE(c.twist.has_value());
            // every dual current pairs to 1 against ch(W)
            RingElement ch = chern_character(*c.twist, true);
            for (const auto& cur : c.currents) CHECK(cur.pair(ch) == Cyclotomic(1));
        }
    }
}

TEST_CASE("build_atiyah_Z and the rigidity model") {
    CHECK_THROWS_WITH(build_atiyah_Z(Rational(0)), "Atiyah class must be nonzero");
    SpaceModel z = build_atiyah_Z(Rational(5));
    CHECK(integrate(z.ring->var("d", 2)) == Cyclotomic(5));
    CHECK(z.tangent_class->total_class == z.ring->one() + z.ring->var("d", 2));

    // A-hat of Z integrates to -s/24
    QSeries ahat = named_series("ahat", 8);
    CHECK(integrate(genus_of_roots(ahat, *z.tangent_roots)).to_rational() ==
          Rational(-5, 24));

    SpaceModel z1 = product(z, build_circle());
    CHECK(z1.ring->variables().size() == 2);
    CHECK(z1.ring->has_split());
    REQUIRE(z1.tangent_roots.has_value());
    RingElement ahat_tf = genus_of_roots(ahat, *z1.tangent_roots);
    RingElement fib = fiber_integrate(ahat_tf);
    CHECK(fib.ring() != z1.ring);
    CHECK(fib.constant_term() == Cyclotomic(Rational(-5, 24)));
    // pair with the S^1 volume current on the base
    Current dvol = Current::basic_form(fib.ring()->var("w"), "dvol");
    CHECK(dvol.pair(fib) == Cyclotomic(Rational(-5, 24)));
}

TEST_CASE("product with a point") {
    SpaceModel pt;
    pt.ring = GradedRing::create({}, 0);
    pt.dimension = 0;
    pt.name = "pt";
    SpaceModel cp2 = build_cp(2);
    SpaceModel p = product(cp2, pt);
    CHECK(p.ring->variables().size() == 1);
    CHECK(p.ring->variables()[0].name == "alpha");
    CHECK(p.dimension == 4);
    CHECK(integrate(p.ring->var("alpha", 2)) == Cyclotomic(1));
}

TEST_CASE("product torus") {
    SpaceModel t1 = build_torus_with_W(1);
    SpaceModel p = product(t1, build_circle());
    CHECK(p.ring->variables().size() == 3);
    // product integration: eta1 beta1 w -> 1
    auto top = p.ring->var("eta1") * p.ring->var("beta1") * p.ring->var("w");
    CHECK(integrate(top) == Cyclotomic(1));
    REQUIRE(p.W.has_value());
    CHECK(chern_character(*p.W, false).constant_term() == Cyclotomic(1));
}
