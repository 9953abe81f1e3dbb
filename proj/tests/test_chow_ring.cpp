#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3ci/chow_ring.hpp"
#include "oracles.hpp"

using namespace k3ci;
using testing::mul_oracle;
using testing::random_ambient;
using testing::random_class;

TEST_CASE("ambient construction and validation") {
    CHECK(AmbientSpace({1, 2}).total_dim() == 3);
    CHECK(AmbientSpace({1}).total_dim() == 1);
    CHECK(AmbientSpace({1, 4}).total_dim() == 5);
    CHECK_THROWS_AS(AmbientSpace({}), invalid_ambient_error);
    CHECK_THROWS_AS(AmbientSpace({1, 0}), invalid_ambient_error);
    CHECK_THROWS_AS(AmbientSpace({-2}), invalid_ambient_error);
}

TEST_CASE("generators and truncation") {
    const AmbientSpace p1({1});
    const ChowClass p = ChowClass::generator(p1, 0);
    CHECK((p * p).is_zero()); // p^2 = 0 on P^1

    const AmbientSpace p1xp2({1, 2});
    CHECK_THROWS_AS(ChowClass::generator(p1xp2, 2), index_error);
    CHECK_THROWS_AS(ChowClass::generator(p1xp2, -1), index_error);

    const ChowClass h = ChowClass::generator(p1xp2, 1);
    CHECK_FALSE((h * h).is_zero());
    CHECK((h * h * h).is_zero()); // h^3 = 0 on the P^2 factor
}

TEST_CASE("addition") {
    const AmbientSpace P({1, 2});
    const ChowClass p = ChowClass::generator(P, 0);
    CHECK(p + p == p.scaled(2));
    const std::mt19937::result_type seed = 7;
    std::mt19937 rng(seed);
    const ChowClass x = random_class(P, rng);
    CHECK(x + ChowClass(P) == x); // additive identity

    const AmbientSpace other({1, 3});
    CHECK_THROWS_AS(p + ChowClass::generator(other, 0), ambient_mismatch_error);
}

TEST_CASE("expansion of (2p+h)^2 pieces") {
    // 2a p.h + h^2 at a = 2, assembled from scaled products.
    const AmbientSpace P({1, 2});
    const ChowClass p = ChowClass::generator(P, 0);
    const ChowClass h = ChowClass::generator(P, 1);
    const ChowClass sum = (p * h).scaled(4) + h * h;
    const ChowClass expected = mul_oracle(p.scaled(2) + h, p.scaled(2) + h) - (p * p).scaled(4);
    CHECK(sum == expected);
}

TEST_CASE("multiplication matches the published degree computation") {
    // ((2*2) p.h + h^2)(2p + 3h) on P^1 x P^2 has top coefficient 14.
    const AmbientSpace P({1, 2});
    const ChowClass p = ChowClass::generator(P, 0);
    const ChowClass h = ChowClass::generator(P, 1);
    const ChowClass lhs = (p * h).scaled(4) + h * h;
    const ChowClass rhs = p.scaled(2) + h.scaled(3);
    const ChowClass product = lhs * rhs;
    CHECK(product == (p * h * h).scaled(14));
    CHECK(product.integrate() == 14);
}

TEST_CASE("multiplicative identity and a P^1 x P^3 product") {
    const AmbientSpace P({1, 3});
    const ChowClass p = ChowClass::generator(P, 0);
    const ChowClass h = ChowClass::generator(P, 1);
    std::mt19937 rng(11);
    const ChowClass x = random_class(P, rng);
    CHECK(ChowClass::unit(P) * x == x);

    const ChowClass product = (p + h) * (p + h.scaled(3));
    CHECK(product == (p * h).scaled(4) + (h * h).scaled(3));
    CHECK(product == mul_oracle(p + h, p + h.scaled(3)));
}

TEST_CASE("integrate picks the top monomial") {
    const AmbientSpace P({1, 3});
    const ChowClass p = ChowClass::generator(P, 0);
    const ChowClass h = ChowClass::generator(P, 1);
    CHECK((p * h * h * h).integrate() == 1); // point class
    CHECK(ChowClass::unit(P).integrate() == 0);
}

TEST_CASE("grade components") {
    const AmbientSpace P({1, 2});
    const ChowClass p = ChowClass::generator(P, 0);
    const ChowClass h = ChowClass::generator(P, 1);
    const ChowClass x = ChowClass::unit(P) + p + p * h;
    CHECK(x.grade_component(2) == p * h);
    CHECK(x.grade_component(0) == ChowClass::unit(P));
    CHECK(x.grade_component(5).is_zero());
}

TEST_CASE("ring axioms on randomized classes") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 1000; ++trial) {
        const AmbientSpace P = testing::random_ambient(rng);
        const ChowClass x = random_class(P, rng);
        const ChowClass y = random_class(P, rng);
        const ChowClass z = random_class(P, rng);
        CHECK(x + y == y + x);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + ChowClass(P) == x);
        CHECK(ChowClass::unit(P) * x == x);
    }
}

TEST_CASE("truncation soundness") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const AmbientSpace P = testing::random_ambient(rng);
        const ChowClass x = random_class(P, rng);
        for (int i = 0; i < P.factor_count(); ++i) {
            ChowClass power = ChowClass::unit(P);
            for (int rep = 0; rep < P.factor_dim(i) + 1; ++rep)
                power = power * ChowClass::generator(P, i);
            CHECK(power.is_zero());
            CHECK((power * x).is_zero());
        }
    }
}

TEST_CASE("mul agrees with the dense-polynomial oracle") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        const AmbientSpace P = testing::random_ambient(rng, 3, 8);
        const ChowClass x = random_class(P, rng);
        const ChowClass y = random_class(P, rng);
        CHECK(x * y == mul_oracle(x, y));
    }
}

TEST_CASE("integrate is linear and supported in top degree only") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const AmbientSpace P = testing::random_ambient(rng);
        const ChowClass x = random_class(P, rng);
        const ChowClass y = random_class(P, rng);
        CHECK((x + y).integrate() == x.integrate() + y.integrate());
        for (int d = 0; d <= P.total_dim(); ++d) {
            if (d != P.total_dim()) CHECK(x.grade_component(d).integrate() == 0);
        }
    }
}

TEST_CASE("grading partition reassembles the class") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const AmbientSpace P = testing::random_ambient(rng);
        const ChowClass x = random_class(P, rng);
        ChowClass sum(P);
        for (int d = 0; d <= P.total_dim(); ++d) sum = sum + x.grade_component(d);
        CHECK(sum == x);
    }
}

TEST_CASE("canonical text form") {
    const AmbientSpace P({1, 2});
    const ChowClass p = ChowClass::generator(P, 0);
    const ChowClass h = ChowClass::generator(P, 1);
    CHECK(ChowClass(P).to_string() == "0");
    CHECK((p.scaled(2) + h.scaled(3)).to_string() == "3 * h2^1 + 2 * h1^1");
    CHECK((h * h).scaled(Rational(1, 2)).to_string() == "1/2 * h2^2");
}
