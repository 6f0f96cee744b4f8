#include <doctest.h>

#include <cmath>
#include <random>

#include "bicm/alphabet.hpp"
#include "bicm/asymptotics.hpp"
#include "bicm/capacity.hpp"
#include "bicm/util.hpp"

using namespace bicm;

namespace {

Labeling random_labeling(int order, std::mt19937_64& rng) {
    std::vector<int> codewords(std::size_t{1} << order);
    std::iota(codewords.begin(), codewords.end(), 0);
    std::shuffle(codewords.begin(), codewords.end(), rng);
    Eigen::MatrixXi bits(codewords.size(), order);
    for (std::size_t i = 0; i < codewords.size(); ++i)
        for (int k = 0; k < order; ++k) bits(static_cast<Eigen::Index>(i), k) = (codewords[i] >> (order - 1 - k)) & 1;
    return Labeling(bits);
}

Eigen::MatrixXd v_otto() {
    Eigen::MatrixXd v(3, 2);
    v << -1, -1, 1, 0, -1, 1;
    return v;
}

Eigen::MatrixXd v_ototo() {
    Eigen::MatrixXd v(3, 2);
    v << -1, 0, 0.5, std::sqrt(3.0) / 2.0, 0.5, -std::sqrt(3.0) / 2.0;
    return v;
}

}  // namespace

TEST_CASE("CM coefficient") {
    CHECK(alpha_cm(Constellation::uniform(pam(8), nbc(3))).alpha == doctest::Approx(kLog2E));

    Eigen::MatrixXd point(1, 1);
    point << 2.0;
    Eigen::VectorXd sure(1);
    sure << 1.0;
    CHECK(alpha_cm(point, sure).alpha == doctest::Approx(0.0));

    Eigen::VectorXd skewed(2);
    skewed << 0.75, 0.25;
    const AlphaResult shifted = alpha_cm(pam(2), skewed);
    CHECK(shifted.alpha == doctest::Approx(kLog2E * 0.75));
    CHECK(shifted.alpha == doctest::Approx(1.0820).epsilon(1e-4));
}

TEST_CASE("BICM coefficient for the named 8-PAM labelings") {
    CHECK(alpha_bicm(Constellation::uniform(pam(8), nbc(3))).alpha == doctest::Approx(kLog2E));
    CHECK(alpha_bicm(Constellation::uniform(pam(8), bsgc(3))).alpha == doctest::Approx(0.0));
    const AlphaResult brgc_result = alpha_bicm(Constellation::uniform(pam(8), brgc(3)));
    CHECK(brgc_result.alpha == doctest::Approx(16.0 / 21.0 * kLog2E).epsilon(1e-14));
    CHECK(brgc_result.alpha == doctest::Approx(1.09920).epsilon(1e-5));
    CHECK(alpha_bicm(Constellation::uniform(pam(8), fbc(3))).alpha == doctest::Approx(brgc_result.alpha));

    CHECK(alpha_bicm(Constellation::uniform(pam(8), bsgc(3))).zero_rate_ebn0 == kInf);
    CHECK(alpha_bicm(Constellation::uniform(pam(8), bsgc(3))).zero_rate_ebn0_db == kInf);
}

TEST_CASE("zero-probability bit values contribute zero") {
    const Constellation shaped = Constellation::with_bits(pam(8), brgc(3), BitDistribution({0.5, 1.0, 1.0}));
    CHECK(alpha_bicm(shaped).alpha == doctest::Approx(kLog2E));
}

TEST_CASE("uniform, general and Hadamard routes agree") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 20; ++trial) {
        const int order = 2 + static_cast<int>(trial % 3);
        Eigen::MatrixXd x(Eigen::Index{1} << order, 2);
        for (Eigen::Index i = 0; i < x.rows(); ++i)
            for (Eigen::Index n = 0; n < 2; ++n) x(i, n) = normal(rng);
        const Labeling l = random_labeling(order, rng);

        const double via_uniform = alpha_bicm_uniform(x, l).alpha;
        const double via_general = alpha_bicm(Constellation::uniform(x, l)).alpha;
        CHECK(std::abs(via_uniform - via_general) <= 1e-14 * std::max(1.0, via_uniform));

        // Hadamard route needs rows in NBC label order
        Eigen::MatrixXd reordered(x.rows(), x.cols());
        for (Eigen::Index i = 0; i < x.rows(); ++i) reordered.row(l.codeword(i)) = x.row(i);
        CHECK(alpha_bicm_ht(reordered).alpha == doctest::Approx(via_uniform).epsilon(1e-12));
    }
}

TEST_CASE("Hadamard route on the natural-order PAM alphabet") {
    CHECK(alpha_bicm_ht(pam(8)).alpha == doctest::Approx(kLog2E));
    CHECK_THROWS_AS(alpha_bicm_ht(Eigen::MatrixXd::Zero(8, 1)), std::domain_error);
}

TEST_CASE("alpha is invariant under relabeling and rotations") {
    std::mt19937_64 rng(17);
    const Labeling l = random_labeling(3, rng);
    const Eigen::MatrixXd x = psk(8);
    const double base = alpha_bicm_uniform(x, l).alpha;

    // synchronous row permutation of alphabet and labeling
    std::vector<int> shuffle_map{3, 1, 4, 0, 7, 5, 2, 6};
    Eigen::MatrixXd permuted_x(8, 2);
    Eigen::MatrixXi permuted_bits(8, 3);
    for (int i = 0; i < 8; ++i) {
        permuted_x.row(i) = x.row(shuffle_map[static_cast<std::size_t>(i)]);
        for (int k = 0; k < 3; ++k) permuted_bits(i, k) = l.bit(shuffle_map[static_cast<std::size_t>(i)], k);
    }
    CHECK(alpha_bicm_uniform(permuted_x, Labeling(permuted_bits)).alpha == doctest::Approx(base).epsilon(1e-13));

    const double angle = 0.83;
    Eigen::MatrixXd rotation(2, 2);
    rotation << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    CHECK(alpha_bicm_uniform(x * rotation, l).alpha == doctest::Approx(base).epsilon(1e-13));
}

TEST_CASE("closed forms match the matrix route exactly for PAM") {
    for (Eigen::Index size : {4, 8, 16, 32}) {
        const int order = static_cast<int>(std::log2(size));
        for (LabelingKind kind : {LabelingKind::Brgc, LabelingKind::Nbc, LabelingKind::Bsgc, LabelingKind::Fbc}) {
            if (kind == LabelingKind::Bsgc && order < 3) continue;
            const auto fraction = alpha_fraction_uniform(pam(size), Labeling::standard(kind, order));
            REQUIRE(fraction.has_value());
            CHECK(*fraction == alpha_pam_closed_fraction(size, kind));
            CHECK(alpha_bicm_uniform(pam(size), Labeling::standard(kind, order)).alpha ==
                  doctest::Approx(alpha_pam_closed(size, kind).alpha).epsilon(1e-14));
        }
    }
}

TEST_CASE("closed forms match the matrix route for PSK") {
    for (Eigen::Index size : {4, 8, 16, 32}) {
        const int order = static_cast<int>(std::log2(size));
        for (LabelingKind kind : {LabelingKind::Brgc, LabelingKind::Nbc, LabelingKind::Bsgc, LabelingKind::Fbc}) {
            if (kind == LabelingKind::Bsgc && order < 3) continue;
            const double numeric = alpha_bicm_uniform(psk(size), Labeling::standard(kind, order)).alpha;
            const double closed = alpha_psk_closed(size, kind).alpha;
            CHECK(std::abs(numeric - closed) <= 1e-12 * std::max(1.0, closed));
        }
    }
    // the order-3 BSGC value has an exact simplification
    CHECK(alpha_psk_closed(8, LabelingKind::Bsgc).alpha == doctest::Approx(0.5 * kLog2E).epsilon(1e-14));
    CHECK(linear_to_db(kLog2E / alpha_psk_closed(8, LabelingKind::Bsgc).alpha) == doctest::Approx(3.0103).epsilon(1e-3));
}

TEST_CASE("large-alphabet limits") {
    CHECK(alpha_pam_limit(LabelingKind::Brgc).zero_rate_ebn0_db == doctest::Approx(-0.3424).epsilon(1e-3));
    CHECK(alpha_pam_limit(LabelingKind::Nbc).zero_rate_ebn0_db == doctest::Approx(-1.5917).epsilon(1e-3));
    CHECK(alpha_pam_limit(LabelingKind::Bsgc).zero_rate_ebn0_db == kInf);
    CHECK(alpha_psk_limit(LabelingKind::Brgc).zero_rate_ebn0_db == doctest::Approx(-0.6800).epsilon(1e-3));
    CHECK(alpha_psk_limit(LabelingKind::Nbc).zero_rate_ebn0_db == doctest::Approx(2.3297).epsilon(1e-3));
    CHECK(alpha_psk_limit(LabelingKind::Bsgc).zero_rate_ebn0_db == doctest::Approx(2.3297).epsilon(1e-3));
    CHECK(alpha_psk_limit(LabelingKind::Fbc).zero_rate_ebn0_db == doctest::Approx(-1.1407).epsilon(1e-3));
    CHECK(fbc_psk_tangent_series() == doctest::Approx(1.2240).epsilon(1e-3));
}

TEST_CASE("projection verdicts") {
    const FooVerdict pam_nbc = is_foo(pam(8), nbc(3));
    CHECK(pam_nbc.is_foo);
    CHECK(pam_nbc.residual == 0.0);
    Eigen::MatrixXd expected_v(3, 1);
    expected_v << -1, -2, -4;
    CHECK((pam_nbc.projection - expected_v).cwiseAbs().maxCoeff() <= 1e-12);

    CHECK_FALSE(is_foo(pam(8), brgc(3)).is_foo);
    CHECK(is_foo(from_projection(nbc(3), v_otto()), nbc(3)).is_foo);
    CHECK(is_foo(from_projection(nbc(3), v_ototo()), nbc(3)).is_foo);
    for (LabelingKind kind : {LabelingKind::Brgc, LabelingKind::Nbc, LabelingKind::Bsgc, LabelingKind::Fbc})
        CHECK_FALSE(is_foo(psk(8), Labeling::standard(kind, 3)).is_foo);

    CHECK(is_foo(hierarchical_pam({1, 2, 6}), nbc(3)).is_foo);
    CHECK_FALSE(is_foo(hierarchical_pam({1, 2, 6}), brgc(3)).is_foo);
}

TEST_CASE("projection round trips recover the projection matrix") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 100; ++trial) {
        const int order = 2 + trial % 3;
        const int dimension = 1 + trial % 2;
        const Labeling l = random_labeling(order, rng);
        Eigen::MatrixXd v(order, dimension);
        for (Eigen::Index r = 0; r < v.rows(); ++r)
            for (Eigen::Index c = 0; c < v.cols(); ++c) v(r, c) = normal(rng);
        const FooVerdict verdict = is_foo(from_projection(l, v), l);
        CHECK(verdict.is_foo);
        CHECK((verdict.projection - v).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("constant-energy verdicts") {
    // the square: equally spaced 4-PSK is a projected 2-cube under a Gray map
    CHECK(constant_energy_foo_check(psk(4), brgc(2)));
    CHECK_FALSE(constant_energy_foo_check(psk(4), nbc(2)));
    for (LabelingKind kind : {LabelingKind::Brgc, LabelingKind::Nbc, LabelingKind::Bsgc, LabelingKind::Fbc})
        CHECK_FALSE(constant_energy_foo_check(psk(8), Labeling::standard(kind, 3)));

    // rotationally symmetric rectangle: orthogonal projection rows of unequal norm
    Eigen::MatrixXd rectangle(4, 2);
    const double angle = 0.3;
    rectangle << std::cos(angle), std::sin(angle),      //
        -std::cos(angle), std::sin(angle),              //
        -std::cos(angle), -std::sin(angle),             //
        std::cos(angle), -std::sin(angle);
    CHECK(constant_energy_foo_check(rectangle, brgc(2)));
    const FooVerdict verdict = is_foo(rectangle, brgc(2));
    CHECK(std::abs(verdict.projection.row(0).norm() - verdict.projection.row(1).norm()) > 0.1);
    CHECK(std::abs(verdict.projection.row(0).dot(verdict.projection.row(1))) < 1e-12);

    CHECK_THROWS_AS(constant_energy_foo_check(pam(4), brgc(2)), std::domain_error);
}

TEST_CASE("QAM verdicts follow the trivial-variant criterion") {
    CHECK(qam_foo_check(2, 2, nbc(2)));
    CHECK_FALSE(qam_foo_check(2, 2, brgc(2)));

    // any column permutation of the order-3 NBC keeps the product FOO
    Eigen::MatrixXi swapped(8, 3);
    for (Eigen::Index i = 0; i < 8; ++i) {
        swapped(i, 0) = nbc(3).bit(i, 1);
        swapped(i, 1) = nbc(3).bit(i, 2);
        swapped(i, 2) = nbc(3).bit(i, 0);
    }
    CHECK(qam_foo_check(4, 2, Labeling(swapped)));
}
