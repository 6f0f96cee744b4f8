#include <doctest.h>

#include <cmath>

#include "bicm/alphabet.hpp"
#include "bicm/constellation.hpp"

using namespace bicm;

TEST_CASE("PAM coordinates and energy") {
    Eigen::MatrixXd two(2, 1);
    two << -1, 1;
    CHECK(pam(2) == two);
    Eigen::MatrixXd eight(8, 1);
    eight << -7, -5, -3, -1, 1, 3, 5, 7;
    CHECK(pam(8) == eight);
    CHECK_THROWS_AS(pam(6), std::domain_error);
    CHECK_THROWS_AS(pam(1), std::domain_error);

    for (Eigen::Index size : {2, 4, 8, 16}) {
        const Constellation omega = Constellation::uniform(pam(size), nbc(static_cast<int>(std::log2(size))));
        CHECK(omega.es() == doctest::Approx((size * size - 1.0) / 3.0));
        CHECK(omega.mean().cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    }
}

TEST_CASE("PSK coordinates") {
    const Eigen::MatrixXd four = psk(4);
    const double a = std::sqrt(0.5);
    CHECK(four(0, 0) == doctest::Approx(a));
    CHECK(four(0, 1) == doctest::Approx(a));
    CHECK(four(1, 0) == doctest::Approx(-a));
    CHECK(four(3, 1) == doctest::Approx(-a));

    const Eigen::MatrixXd eight = psk(8);
    CHECK(eight(0, 0) == doctest::Approx(0.92388).epsilon(1e-4));
    CHECK(eight(0, 1) == doctest::Approx(0.38268).epsilon(1e-4));
    for (Eigen::Index i = 0; i < 8; ++i) CHECK(eight.row(i).norm() == doctest::Approx(1.0));

    const Constellation omega = Constellation::uniform(psk(8), fbc(3));
    CHECK(omega.es() == doctest::Approx(1.0));
}

TEST_CASE("QAM as ordered product of PAM columns") {
    Eigen::MatrixXd expected(4, 2);
    expected << -1, -1, -1, 1, 1, -1, 1, 1;
    CHECK(qam(2, 2) == expected);

    const Eigen::MatrixXd rect = qam(4, 2);
    REQUIRE(rect.rows() == 8);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) {
            CHECK(rect(2 * i + j, 0) == pam(4)(i, 0));
            CHECK(rect(2 * i + j, 1) == pam(2)(j, 0));
        }

    const Constellation omega = Constellation::uniform(qam(4, 4), nbc(4));
    CHECK(omega.es() == doctest::Approx(10.0));
}

TEST_CASE("hierarchical PAM") {
    CHECK(hierarchical_pam({1, 2, 4}) == pam(8));
    const Eigen::MatrixXd fig8 = hierarchical_pam({1, 2, 6});
    CHECK(fig8(0, 0) == doctest::Approx(-9.0));
    CHECK(fig8(7, 0) == doctest::Approx(9.0));
    for (Eigen::Index i = 0; i + 1 < 8; ++i) CHECK(fig8(i, 0) < fig8(i + 1, 0));

    CHECK_THROWS_WITH_AS(hierarchical_pam({2, 1, 8}), doctest::Contains("index"), std::domain_error);
    CHECK_THROWS_AS(hierarchical_pam({-1.0}), std::domain_error);
}

TEST_CASE("projection alphabets") {
    Eigen::MatrixXd v(3, 1);
    v << -1, -2, -4;
    CHECK((from_projection(nbc(3), v) - pam(8)).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

    Eigen::MatrixXd v_otto(3, 2);
    v_otto << -1, -1, 1, 0, -1, 1;
    const Eigen::MatrixXd otto = from_projection(nbc(3), v_otto);
    CHECK(otto.colwise().sum().cwiseAbs().maxCoeff() == doctest::Approx(0.0));  // zero mean

    Eigen::MatrixXd v_ototo(3, 2);
    v_ototo << -1, 0, 0.5, std::sqrt(3.0) / 2.0, 0.5, -std::sqrt(3.0) / 2.0;
    const Eigen::MatrixXd ototo = from_projection(nbc(3), v_ototo);
    int at_origin = 0;
    for (Eigen::Index i = 0; i < 8; ++i)
        if (ototo.row(i).norm() < 1e-12) ++at_origin;
    CHECK(at_origin == 2);  // coinciding points are allowed
}

TEST_CASE("alphabet CSV round trip") {
    const Eigen::MatrixXd x = qam(4, 2);
    std::string text;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        text += std::to_string(x(i, 0)) + "," + std::to_string(x(i, 1)) + "\n";
    }
    const Eigen::MatrixXd parsed = parse_alphabet_csv(text);
    CHECK((parsed - x).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    CHECK_THROWS_AS(parse_alphabet_csv("1,2\n3\n"), std::domain_error);
    CHECK_THROWS_AS(parse_alphabet_csv(""), std::domain_error);
}

TEST_CASE("SNR and Eb/N0 conversions") {
    const ChannelSpec awgn{1.0, 1};
    CHECK(snr_to_ebn0(1.0, 1.0, awgn) == doctest::Approx(1.0));
    CHECK(ebn0_to_snr(snr_to_ebn0(0.37, 0.81, awgn), 0.81, awgn) == doctest::Approx(0.37).epsilon(1e-14));
    const ChannelSpec faded{2.5, 1};
    CHECK(snr_to_ebn0(5.0, 2.0, faded) == doctest::Approx(1.0));
    CHECK_THROWS_AS(snr_to_ebn0(1.0, 0.0, awgn), std::domain_error);
}
