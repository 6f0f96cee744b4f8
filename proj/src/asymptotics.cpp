#include "bicm/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "bicm/alphabet.hpp"
#include "bicm/hadamard.hpp"
#include "bicm/util.hpp"

namespace bicm {

using MatrixXl = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

namespace {

bool is_integer_matrix(const Eigen::MatrixXd& x) {
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            if (x(i, j) != std::nearbyint(x(i, j)) || std::abs(x(i, j)) > 1e9) return false;
    return true;
}

AlphaFraction reduced(std::int64_t numerator, std::int64_t denominator) {
    const std::int64_t g = std::gcd(numerator, denominator);
    return {numerator / (g == 0 ? 1 : g), denominator / (g == 0 ? 1 : g)};
}

}  // namespace

AlphaResult make_alpha_result(double alpha) {
    AlphaResult r;
    r.alpha = alpha;
    r.zero_rate_ebn0 = alpha > 0.0 ? 1.0 / alpha : kInf;
    r.zero_rate_ebn0_db = linear_to_db(r.zero_rate_ebn0);
    return r;
}

bool AlphaFraction::operator==(const AlphaFraction& other) const {
    return numerator * other.denominator == other.numerator * denominator;
}

AlphaResult alpha_cm(const Eigen::MatrixXd& alphabet, const Eigen::VectorXd& distribution) {
    validate_symbol_distribution(distribution);
    double es = 0.0;
    Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(alphabet.cols());
    for (Eigen::Index i = 0; i < alphabet.rows(); ++i) {
        es += distribution(i) * alphabet.row(i).squaredNorm();
        mean += distribution(i) * alphabet.row(i);
    }
    if (!(es > 0.0)) throw std::domain_error("mean symbol energy must be positive");
    return make_alpha_result(kLog2E * (1.0 - mean.squaredNorm() / es));
}

AlphaResult alpha_cm(const Constellation& omega) { return alpha_cm(omega.alphabet(), omega.distribution()); }

AlphaResult alpha_bicm(const Constellation& omega) {
    if (!omega.has_bitwise_product_distribution())
        throw std::domain_error("BICM asymptotics require a bitwise-product symbol distribution");
    const Eigen::MatrixXd& x = omega.alphabet();
    const Eigen::VectorXd& p = omega.distribution();
    const int order = omega.order();

    // conditional-mean form
    double sum = 0.0;
    for (int k = 0; k < order; ++k)
        for (int u = 0; u < 2; ++u) {
            const double p_bit = omega.bit_probability(k, u);
            if (p_bit <= 0.0) continue;  // degenerate bit value: zero contribution
            Eigen::RowVectorXd conditional_mean = Eigen::RowVectorXd::Zero(x.cols());
            for (Eigen::Index i : omega.index_set(k, u)) conditional_mean += p(i) * x.row(i);
            conditional_mean /= p_bit;
            sum += p_bit * conditional_mean.squaredNorm();
        }
    const double from_means = kLog2E / omega.es() * (sum - order * omega.mean().squaredNorm());

    // sign-decomposed form, used as an internal cross-check
    double decomposed = 0.0;
    for (int k = 0; k < order; ++k) {
        Eigen::RowVectorXd difference = Eigen::RowVectorXd::Zero(x.cols());
        Eigen::RowVectorXd total = Eigen::RowVectorXd::Zero(x.cols());
        for (Eigen::Index i = 0; i < omega.size(); ++i) {
            if (p(i) <= 0.0) continue;
            const int u = omega.labeling().bit(i, k);
            const double scale = p(i) / std::sqrt(omega.bit_probability(k, u));
            difference += (u == 0 ? scale : -scale) * x.row(i);
            total += scale * x.row(i);
        }
        decomposed += 0.5 * difference.squaredNorm() + 0.5 * total.squaredNorm() - omega.mean().squaredNorm();
    }
    decomposed *= kLog2E / omega.es();

    if (std::abs(from_means - decomposed) > 1e-12 * std::max(1.0, std::abs(from_means)))
        throw std::logic_error("BICM alpha cross-check failed between conditional-mean and sign forms");
    return make_alpha_result(from_means);
}

AlphaResult alpha_bicm_uniform(const Eigen::MatrixXd& alphabet, const Labeling& labeling) {
    if (alphabet.rows() != labeling.size()) throw std::domain_error("alphabet and labeling sizes must agree");
    const double count = static_cast<double>(alphabet.rows());
    const double es = alphabet.squaredNorm() / count;
    if (!(es > 0.0)) throw std::domain_error("mean symbol energy must be positive");
    double sum = 0.0;
    for (int k = 0; k < labeling.order(); ++k) {
        Eigen::RowVectorXd projection = Eigen::RowVectorXd::Zero(alphabet.cols());
        for (Eigen::Index i = 0; i < alphabet.rows(); ++i)
            projection += (labeling.bit(i, k) == 0 ? 1.0 : -1.0) * alphabet.row(i);
        sum += (projection / count).squaredNorm();
    }
    return make_alpha_result(kLog2E * sum / es);
}

AlphaResult alpha_bicm_ht(const Eigen::MatrixXd& alphabet) {
    const double count = static_cast<double>(alphabet.rows());
    const double es = alphabet.squaredNorm() / count;
    if (!(es > 0.0)) throw std::domain_error("mean symbol energy must be positive");
    const Eigen::MatrixXd spectrum = ht(alphabet);
    const int order = exact_log2(alphabet.rows());
    double sum = 0.0;
    for (int k = 0; k < order; ++k) sum += spectrum.row(Eigen::Index{1} << k).squaredNorm();
    return make_alpha_result(kLog2E * sum / es);
}

std::optional<AlphaFraction> alpha_fraction_uniform(const Eigen::MatrixXd& alphabet, const Labeling& labeling) {
    if (!is_integer_matrix(alphabet)) return std::nullopt;
    // alpha / log2e = sum_k ||sum_i s_{i,k} x_i||^2 / (M sum_i ||x_i||^2), all integers
    std::int64_t kernel = 0;
    for (int k = 0; k < labeling.order(); ++k) {
        for (Eigen::Index n = 0; n < alphabet.cols(); ++n) {
            std::int64_t projection = 0;
            for (Eigen::Index i = 0; i < alphabet.rows(); ++i) {
                const std::int64_t coord = static_cast<std::int64_t>(std::nearbyint(alphabet(i, n)));
                projection += labeling.bit(i, k) == 0 ? coord : -coord;
            }
            kernel += projection * projection;
        }
    }
    std::int64_t energy = 0;
    for (Eigen::Index i = 0; i < alphabet.rows(); ++i)
        for (Eigen::Index n = 0; n < alphabet.cols(); ++n) {
            const std::int64_t coord = static_cast<std::int64_t>(std::nearbyint(alphabet(i, n)));
            energy += coord * coord;
        }
    if (energy == 0) throw std::domain_error("mean symbol energy must be positive");
    return reduced(kernel, alphabet.rows() * energy);
}

AlphaFraction alpha_pam_closed_fraction(Eigen::Index size, LabelingKind kind) {
    if (size < 2 || !is_power_of_two(size)) throw std::domain_error("PAM size must be a power of two >= 2");
    const int order = exact_log2(size);
    if (kind == LabelingKind::Bsgc && order < 3) throw std::domain_error("bsgc requires order >= 3");
    if (kind == LabelingKind::Fbc && order < 2) throw std::domain_error("fbc requires order >= 2");
    const std::int64_t m2 = static_cast<std::int64_t>(size) * size;
    switch (kind) {
        case LabelingKind::Brgc:
        case LabelingKind::Fbc: return reduced(3 * m2, 4 * (m2 - 1));
        case LabelingKind::Nbc: return {1, 1};
        case LabelingKind::Bsgc: return {0, 1};
    }
    throw std::domain_error("unknown labeling kind");
}

AlphaResult alpha_pam_closed(Eigen::Index size, LabelingKind kind) {
    return make_alpha_result(kLog2E * alpha_pam_closed_fraction(size, kind).value());
}

AlphaResult alpha_psk_closed(Eigen::Index size, LabelingKind kind) {
    if (size < 2 || !is_power_of_two(size)) throw std::domain_error("PSK size must be a power of two >= 2");
    const int order = exact_log2(size);
    if (kind == LabelingKind::Bsgc && order < 3) throw std::domain_error("bsgc requires order >= 3");
    if (kind == LabelingKind::Fbc && order < 2) throw std::domain_error("fbc requires order >= 2");
    const double m = static_cast<double>(size);
    const double base = 4.0 * kLog2E / (m * m * std::pow(std::sin(std::numbers::pi / m), 2));
    switch (kind) {
        case LabelingKind::Brgc: return make_alpha_result(2.0 * base);
        case LabelingKind::Nbc: return make_alpha_result(base);
        case LabelingKind::Bsgc: {
            const double secant = 1.0 / std::cos(2.0 * std::numbers::pi / m);
            return make_alpha_result(base * (1.0 + std::pow(1.0 - secant, 2)));
        }
        case LabelingKind::Fbc: {
            double series = 0.0;
            for (int k = 2; k <= order; ++k) series += std::pow(std::tan(std::numbers::pi / std::exp2(k)), 2);
            return make_alpha_result(base * (1.0 + series));
        }
    }
    throw std::domain_error("unknown labeling kind");
}

double fbc_psk_tangent_series() {
    double series = 0.0;
    for (int k = 2; k < 64; ++k) {
        const double term = std::pow(std::tan(std::numbers::pi / std::exp2(k)), 2);
        series += term;
        if (term < 1e-18) break;
    }
    return series;
}

AlphaResult alpha_pam_limit(LabelingKind kind) {
    switch (kind) {
        case LabelingKind::Brgc:
        case LabelingKind::Fbc: return make_alpha_result(0.75 * kLog2E);
        case LabelingKind::Nbc: return make_alpha_result(kLog2E);
        case LabelingKind::Bsgc: return make_alpha_result(0.0);
    }
    throw std::domain_error("unknown labeling kind");
}

AlphaResult alpha_psk_limit(LabelingKind kind) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    switch (kind) {
        case LabelingKind::Brgc: return make_alpha_result(8.0 / pi2 * kLog2E);
        case LabelingKind::Nbc:
        case LabelingKind::Bsgc: return make_alpha_result(4.0 / pi2 * kLog2E);
        case LabelingKind::Fbc: return make_alpha_result(4.0 * (1.0 + fbc_psk_tangent_series()) / pi2 * kLog2E);
    }
    throw std::domain_error("unknown labeling kind");
}

FooVerdict is_foo(const Eigen::MatrixXd& alphabet, const Labeling& labeling, double tolerance) {
    if (alphabet.rows() != labeling.size()) throw std::domain_error("alphabet and labeling sizes must agree");
    const double count = static_cast<double>(alphabet.rows());
    const double total_energy = alphabet.squaredNorm();
    if (!(total_energy > 0.0)) throw std::domain_error("mean symbol energy must be positive");

    const Eigen::MatrixXd q = modified_matrix(labeling).cast<double>();
    FooVerdict verdict;
    // columns of Q are orthogonal with squared norm M, so this is the
    // least-squares solution of X = Q V
    verdict.projection = q.transpose() * alphabet / count;

    if (is_integer_matrix(alphabet)) {
        // exact integer residual: Q (Q^T X) == M X
        const MatrixXl xi = alphabet.cast<std::int64_t>();
        const MatrixXl qi = modified_matrix(labeling).cast<std::int64_t>();
        const MatrixXl residual_matrix = qi * (qi.transpose() * xi) - static_cast<std::int64_t>(count) * xi;
        verdict.residual = residual_matrix.cast<double>().squaredNorm() / (count * count * total_energy);
        verdict.is_foo = (residual_matrix.array() == 0).all();
    } else {
        verdict.residual = (q * verdict.projection - alphabet).squaredNorm() / total_energy;
        verdict.is_foo = verdict.residual <= tolerance;
    }

    // independent route: reorder rows to NBC label order, check the spectrum
    Eigen::MatrixXd reordered(alphabet.rows(), alphabet.cols());
    for (Eigen::Index i = 0; i < alphabet.rows(); ++i) reordered.row(labeling.codeword(i)) = alphabet.row(i);
    const double alpha_gap = kLog2E - alpha_bicm_ht(reordered).alpha;
    const double residual_gap = std::abs(alpha_gap / kLog2E - verdict.residual);
    if (residual_gap > 1e-9) throw std::logic_error("FOO residual cross-check failed between Q and Hadamard routes");
    return verdict;
}

bool constant_energy_foo_check(const Eigen::MatrixXd& alphabet, const Labeling& labeling, double tolerance) {
    const double first = alphabet.row(0).squaredNorm();
    for (Eigen::Index i = 1; i < alphabet.rows(); ++i)
        if (std::abs(alphabet.row(i).squaredNorm() - first) > tolerance * std::max(1.0, first))
            throw std::domain_error("constant-energy check requires equal symbol energies");

    const FooVerdict verdict = is_foo(alphabet, labeling, tolerance);
    bool orthogonal = true;
    const Eigen::MatrixXd& v = verdict.projection;
    for (Eigen::Index a = 0; a < v.rows() && orthogonal; ++a)
        for (Eigen::Index b = a + 1; b < v.rows() && orthogonal; ++b)
            if (std::abs(v.row(a).dot(v.row(b))) > tolerance * std::max(1.0, first)) orthogonal = false;

    // for constant-energy alphabets a projection verdict forces orthogonality
    if (verdict.is_foo && !orthogonal)
        throw std::logic_error("constant-energy FOO consistency check failed: projection rows not orthogonal");
    return verdict.is_foo && orthogonal;
}

bool qam_foo_check(Eigen::Index size_a, Eigen::Index size_b, const Labeling& labeling) {
    const Eigen::MatrixXd alphabet = qam(size_a, size_b);
    if (labeling.size() != alphabet.rows())
        throw std::domain_error("labeling order must equal log2 of the QAM size");
    const bool by_variant = is_trivial_variant_of(labeling, nbc(labeling.order()));
    const bool by_projection = is_foo(alphabet, labeling).is_foo;
    if (by_variant != by_projection)
        throw std::logic_error("QAM FOO routes disagree between labeling structure and projection residual");
    return by_variant;
}

}  // namespace bicm
