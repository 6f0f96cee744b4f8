#include <doctest.h>

#include <cmath>
#include <random>

#include "bicm/alphabet.hpp"
#include "bicm/capacity.hpp"
#include "bicm/gauss_hermite.hpp"
#include "bicm/util.hpp"

using namespace bicm;

namespace {

const QuadratureSpec kQuad{};

Constellation random_omega(int order, int dimension, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> prob(0.2, 0.8);
    Eigen::MatrixXd x(Eigen::Index{1} << order, dimension);
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index n = 0; n < x.cols(); ++n) x(i, n) = normal(rng);
    std::vector<int> codewords(static_cast<std::size_t>(x.rows()));
    std::iota(codewords.begin(), codewords.end(), 0);
    std::shuffle(codewords.begin(), codewords.end(), rng);
    Eigen::MatrixXi bits(x.rows(), order);
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (int k = 0; k < order; ++k) bits(i, k) = (codewords[static_cast<std::size_t>(i)] >> (order - 1 - k)) & 1;
    std::vector<double> p_zero;
    for (int k = 0; k < order; ++k) p_zero.push_back(prob(rng));
    return Constellation::with_bits(std::move(x), Labeling(bits), BitDistribution(p_zero));
}

}  // namespace

TEST_CASE("Gauss-Hermite rule integrates exactly through high degree") {
    const GaussHermiteRule rule = gauss_hermite(64);
    const double root_pi = std::sqrt(std::numbers::pi);
    CHECK(rule.weights.sum() == doctest::Approx(root_pi).epsilon(1e-13));
    double second = 0.0, fourth = 0.0, tenth = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
        second += rule.weights(i) * std::pow(rule.nodes(i), 2);
        fourth += rule.weights(i) * std::pow(rule.nodes(i), 4);
        tenth += rule.weights(i) * std::pow(rule.nodes(i), 10);
    }
    CHECK(second == doctest::Approx(root_pi / 2.0).epsilon(1e-12));
    CHECK(fourth == doctest::Approx(root_pi * 3.0 / 4.0).epsilon(1e-12));
    // integral x^10 e^{-x^2} = (9!!/2^5) sqrt(pi) = 945/32 sqrt(pi)
    CHECK(tenth == doctest::Approx(root_pi * 945.0 / 32.0).epsilon(1e-11));
    CHECK_THROWS_AS(gauss_hermite(1), std::domain_error);
}

TEST_CASE("AWGN closed forms") {
    CHECK(awgn_capacity(0.0, 1) == 0.0);
    CHECK(awgn_capacity(1.0, 1) == doctest::Approx(0.5 * std::log2(3.0)));
    CHECK(awgn_capacity(1.0, 2) == doctest::Approx(1.0));
    CHECK(awgn_capacity_inverse(awgn_capacity(2.7, 2), 2) == doctest::Approx(2.7).epsilon(1e-13));
    CHECK(f_awgn(1.0, 1) == doctest::Approx(1.5));
    CHECK(f_awgn(1e-9, 1) == doctest::Approx(kLn2).epsilon(1e-7));
    for (double rate = 1e-4; rate <= 10.0; rate *= 1.6) CHECK(g_awgn(rate, 1) > 0.0);
    CHECK_THROWS_AS(f_awgn(0.0, 1), std::domain_error);
}

TEST_CASE("CM capacity basics") {
    const Constellation bpsk = Constellation::uniform(pam(2), nbc(1));
    CHECK(cm_capacity(bpsk, 0.0, kQuad) == 0.0);
    CHECK(cm_capacity(bpsk, 100.0, kQuad) == doctest::Approx(1.0).epsilon(1e-6));

    const Constellation omega = Constellation::uniform(pam(8), brgc(3));
    for (double snr : {0.1, 1.0, 10.0, 100.0}) CHECK(cm_capacity(omega, snr, kQuad) < awgn_capacity(snr, 1));

    Eigen::VectorXd degenerate = Eigen::VectorXd::Zero(8);
    degenerate(3) = 1.0;
    CHECK(cm_capacity(Constellation::with_distribution(pam(8), nbc(3), degenerate), 1.0, kQuad) == 0.0);
}

TEST_CASE("CM capacity ignores the labeling") {
    const QuadratureSpec quad{};
    const Constellation a = Constellation::uniform(pam(8), brgc(3));
    const Constellation b = Constellation::uniform(pam(8), bsgc(3));
    CHECK(cm_capacity(a, 1.7, quad) == cm_capacity(b, 1.7, quad));

    // permuting symbols together with their probabilities only reorders sums
    Eigen::MatrixXd x = pam(8);
    Eigen::MatrixXd permuted(8, 1);
    for (Eigen::Index i = 0; i < 8; ++i) permuted(i, 0) = x(7 - i, 0);
    const double direct = cm_capacity(x, Eigen::VectorXd::Constant(8, 0.125), 1.7, quad);
    const double reordered = cm_capacity(permuted, Eigen::VectorXd::Constant(8, 0.125), 1.7, quad);
    CHECK(std::abs(direct - reordered) <= 1e-10);
}

TEST_CASE("BICM capacity orderings and the difference form") {
    for (double snr : {0.5, 1.0, 5.0}) {
        for (LabelingKind kind : {LabelingKind::Brgc, LabelingKind::Nbc, LabelingKind::Fbc, LabelingKind::Bsgc}) {
            const Constellation omega = Constellation::uniform(pam(8), Labeling::standard(kind, 3));
            const double bi = bicm_capacity(omega, snr, kQuad);
            const double cm = cm_capacity(omega, snr, kQuad);
            CHECK(bi <= cm + 1e-10);
            CHECK(cm < awgn_capacity(snr, 1));
        }
    }

    for (double snr : {0.5, 1.0, 5.0}) {
        const Constellation omega = Constellation::uniform(pam(4), brgc(2));
        CHECK(std::abs(bicm_capacity(omega, snr, kQuad) - bicm_capacity_via_difference(omega, snr, kQuad)) <= 1e-8);
    }
    const Constellation psk_omega = Constellation::uniform(psk(8), fbc(3));
    CHECK(std::abs(bicm_capacity(psk_omega, 1.0, kQuad) - bicm_capacity_via_difference(psk_omega, 1.0, kQuad)) <= 1e-8);
    CHECK(bicm_capacity(psk_omega, 0.0, kQuad) == 0.0);

    // the identity holds for nonuniform bit distributions as well
    const Constellation shaped = Constellation::with_bits(pam(8), brgc(3), BitDistribution({0.3, 0.6, 0.45}));
    CHECK(std::abs(bicm_capacity(shaped, 1.3, kQuad) - bicm_capacity_via_difference(shaped, 1.3, kQuad)) <= 1e-8);
}

TEST_CASE("degenerate bit levels carry no information") {
    const Constellation shaped = Constellation::with_bits(pam(8), brgc(3), BitDistribution({0.5, 1.0, 1.0}));
    // only bit 0 is informative: the support is the antipodal pair {-7, +7}
    const double bi = bicm_capacity(shaped, 2.0, kQuad);
    const Constellation pair = Constellation::uniform(pam(2), nbc(1));
    CHECK(bi == doctest::Approx(cm_capacity(pair, 2.0, kQuad)).epsilon(1e-9));
}

TEST_CASE("chain rule recovers the CM capacity") {
    const Constellation omega = Constellation::uniform(pam(4), brgc(2));
    const double cm = cm_capacity(omega, 1.0, kQuad);
    double total = 0.0;
    for (int k = 0; k < 2; ++k) total += bit_level_conditional_ami(omega, 1.0, k, kQuad);
    CHECK(std::abs(total - cm) <= 1e-8);

    const Constellation bpsk = Constellation::uniform(pam(2), nbc(1));
    CHECK(bit_level_conditional_ami(bpsk, 1.0, 0, kQuad) == doctest::Approx(cm_capacity(bpsk, 1.0, kQuad)));

    // bit-level terms depend on the labeling; their sum does not. BRGC and
    // NBC induce the same prefix partitions of PAM, so compare against the
    // BSGC whose first column splits the symbols differently.
    const Constellation with_bsgc = Constellation::uniform(pam(8), bsgc(3));
    const Constellation with_nbc = Constellation::uniform(pam(8), nbc(3));
    double sum_bsgc = 0.0, sum_nbc = 0.0;
    bool differs = false;
    for (int k = 0; k < 3; ++k) {
        const double term_bsgc = bit_level_conditional_ami(with_bsgc, 1.0, k, kQuad);
        const double term_nbc = bit_level_conditional_ami(with_nbc, 1.0, k, kQuad);
        sum_bsgc += term_bsgc;
        sum_nbc += term_nbc;
        differs = differs || std::abs(term_bsgc - term_nbc) > 1e-6;
    }
    CHECK(differs);
    CHECK(std::abs(sum_bsgc - sum_nbc) <= 1e-8);
    CHECK(std::abs(sum_bsgc - cm_capacity(with_bsgc, 1.0, kQuad)) <= 1e-8);
}

TEST_CASE("doubling quadrature nodes leaves results unchanged") {
    QuadratureSpec doubled{};
    doubled.nodes = 2 * kQuad.nodes;
    for (double snr : {1.0, 100.0}) {
        const Constellation omega = Constellation::uniform(pam(8), brgc(3));
        CHECK(std::abs(cm_capacity(omega, snr, kQuad) - cm_capacity(omega, snr, doubled)) < 1e-9);
        CHECK(std::abs(bicm_capacity(omega, snr, kQuad) - bicm_capacity(omega, snr, doubled)) < 1e-9);
    }
    const Constellation psk_omega = Constellation::uniform(psk(8), brgc(3));
    CHECK(std::abs(bicm_capacity(psk_omega, 100.0, kQuad) - bicm_capacity(psk_omega, 100.0, doubled)) < 1e-9);
}

TEST_CASE("Monte-Carlo agrees with quadrature within three standard errors") {
    const std::int64_t samples = 10'000'000;
    int dimension = 1;
    for (std::uint64_t seed : {11u, 22u, 33u}) {
        const Constellation omega = random_omega(3, dimension, seed);
        dimension = 3 - dimension;  // alternate 1D and 2D alphabets
        const double snr = 1.5;
        const MonteCarloEstimate cm_mc = cm_capacity_mc(omega, snr, samples, seed);
        CHECK(std::abs(cm_mc.value - cm_capacity(omega, snr, kQuad)) <= 3.0 * cm_mc.std_error);
        const MonteCarloEstimate bi_mc = bicm_capacity_mc(omega, snr, samples, seed);
        CHECK(std::abs(bi_mc.value - bicm_capacity(omega, snr, kQuad)) <= 3.0 * bi_mc.std_error);
    }
}

TEST_CASE("Monte-Carlo method is seed-deterministic") {
    const Constellation omega = Constellation::uniform(pam(4), brgc(2));
    QuadratureSpec mc{};
    mc.method = QuadratureSpec::Method::MonteCarlo;
    mc.mc_samples = 10'000;
    mc.seed = 99;
    CHECK(cm_capacity(omega, 1.0, mc) == cm_capacity(omega, 1.0, mc));
    CHECK(bicm_capacity(omega, 1.0, mc) == bicm_capacity(omega, 1.0, mc));
}
