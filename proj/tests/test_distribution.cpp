#include <doctest.h>

#include "bicm/alphabet.hpp"
#include "bicm/constellation.hpp"
#include "bicm/distribution.hpp"

using namespace bicm;

TEST_CASE("bitwise symbol distribution") {
    // all half-probabilities give the uniform pmf exactly
    const Eigen::VectorXd uniform = bitwise_symbol_distribution(brgc(3), BitDistribution::uniform(3));
    for (Eigen::Index i = 0; i < 8; ++i) CHECK(uniform(i) == 0.125);

    const Eigen::VectorXd binary = bitwise_symbol_distribution(nbc(1), BitDistribution({0.7}));
    CHECK(binary(0) == doctest::Approx(0.7));
    CHECK(binary(1) == doctest::Approx(0.3));

    const Eigen::VectorXd two = bitwise_symbol_distribution(nbc(2), BitDistribution({0.5, 0.25}));
    CHECK(two(0) == doctest::Approx(0.125));
    CHECK(two(1) == doctest::Approx(0.375));
    CHECK(two(2) == doctest::Approx(0.125));
    CHECK(two(3) == doctest::Approx(0.375));
    CHECK(two.sum() == doctest::Approx(1.0));
}

TEST_CASE("conditional symbol distribution") {
    const Constellation omega = Constellation::with_bits(pam(4), nbc(2), BitDistribution({0.5, 0.25}));

    // P(x)/P_{C_k}(u) on the index set, zero elsewhere
    const Eigen::VectorXd k0 = omega.conditional_symbol_distribution(0, 0);
    CHECK(k0(0) == doctest::Approx(0.25));
    CHECK(k0(1) == doctest::Approx(0.75));
    CHECK(k0(2) == 0.0);
    CHECK(k0(3) == 0.0);

    const Eigen::VectorXd k1 = omega.conditional_symbol_distribution(1, 0);
    CHECK(k1(0) == doctest::Approx(0.5));
    CHECK(k1(1) == 0.0);
    CHECK(k1(2) == doctest::Approx(0.5));
    CHECK(k1(3) == 0.0);

    for (int k = 0; k < 2; ++k)
        for (int u = 0; u < 2; ++u) CHECK(omega.conditional_symbol_distribution(k, u).sum() == doctest::Approx(1.0));

    const Constellation degenerate = Constellation::with_bits(pam(2), nbc(1), BitDistribution({1.0}));
    CHECK_THROWS_AS(degenerate.conditional_symbol_distribution(0, 1), std::domain_error);
}

TEST_CASE("conditioning on the most significant NBC bit of 8-PAM") {
    const Constellation omega = Constellation::uniform(pam(8), nbc(3));
    const Eigen::VectorXd conditional = omega.conditional_symbol_distribution(0, 0);
    int support = 0;
    for (Eigen::Index i = 0; i < 8; ++i)
        if (conditional(i) > 0) {
            CHECK(conditional(i) == doctest::Approx(0.25));
            ++support;
        }
    CHECK(support == 4);
}

TEST_CASE("index sets partition the symbols") {
    const Constellation omega = Constellation::uniform(psk(8), bsgc(3));
    for (int k = 0; k < 3; ++k) {
        CHECK(omega.index_set(k, 0).size() + omega.index_set(k, 1).size() == 8);
        CHECK(omega.index_set(k, 0).size() == 4);
    }
}

TEST_CASE("bit distribution validation") {
    CHECK_THROWS_AS(BitDistribution({1.2}), std::domain_error);
    CHECK_THROWS_AS(BitDistribution({-0.1}), std::domain_error);
    CHECK(BitDistribution({0.0, 1.0, 0.5}).degenerate_positions() == std::vector<int>{0, 1});
}

TEST_CASE("product-property detection") {
    CHECK(Constellation::uniform(pam(4), brgc(2)).has_bitwise_product_distribution());
    Eigen::VectorXd p(4);
    p << 0.5, 0.0, 0.0, 0.5;  // correlated bits
    CHECK_FALSE(Constellation::with_distribution(pam(4), nbc(2), p).has_bitwise_product_distribution());
}
