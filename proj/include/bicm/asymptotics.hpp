#ifndef BICM_ASYMPTOTICS_HPP
#define BICM_ASYMPTOTICS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "bicm/constellation.hpp"
#include "bicm/labeling.hpp"

namespace bicm {

/// First-order coefficient of a capacity at SNR -> 0, with the implied
/// zero-rate Eb/N0 = 1/alpha (infinite when alpha = 0).
struct AlphaResult {
    double alpha = 0.0;
    double zero_rate_ebn0 = 0.0;
    double zero_rate_ebn0_db = 0.0;
};

AlphaResult make_alpha_result(double alpha);

/// Exact value of alpha / log2(e) as a reduced fraction; available whenever
/// the alphabet has integer coordinates.
struct AlphaFraction {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    bool operator==(const AlphaFraction& other) const;
};

/// CM coefficient log2(e) (1 - ||E[X]||^2 / Es); labeling-independent.
AlphaResult alpha_cm(const Eigen::MatrixXd& alphabet, const Eigen::VectorXd& distribution);
AlphaResult alpha_cm(const Constellation& omega);

/// BICM coefficient from conditional means, cross-checked internally against
/// the sign-decomposed form to 1e-12. Zero-probability bit values contribute
/// zero by convention.
AlphaResult alpha_bicm(const Constellation& omega);

/// Uniform-distribution specialization (per-column mean projections).
AlphaResult alpha_bicm_uniform(const Eigen::MatrixXd& alphabet, const Labeling& labeling);

/// Hadamard route: spectral energy at power-of-two indices, rows of the
/// alphabet taken in NBC label order.
AlphaResult alpha_bicm_ht(const Eigen::MatrixXd& alphabet);

/// Exact alpha / log2(e) for integer alphabets under the uniform distribution;
/// nullopt when coordinates are not integers.
std::optional<AlphaFraction> alpha_fraction_uniform(const Eigen::MatrixXd& alphabet, const Labeling& labeling);

/// Closed forms for M-PAM and M-PSK under the four named labelings.
AlphaResult alpha_pam_closed(Eigen::Index size, LabelingKind kind);
AlphaResult alpha_psk_closed(Eigen::Index size, LabelingKind kind);
AlphaFraction alpha_pam_closed_fraction(Eigen::Index size, LabelingKind kind);

/// M -> infinity limits (the PSK folded-code limit sums its tangent series).
AlphaResult alpha_pam_limit(LabelingKind kind);
AlphaResult alpha_psk_limit(LabelingKind kind);
double fbc_psk_tangent_series();  // sum_{k>=2} tan^2(pi/2^k)

/// First-order optimality verdict under the uniform distribution: the
/// alphabet is a linear projection Q(L) V of the labeling hypercube.
struct FooVerdict {
    bool is_foo = false;
    Eigen::MatrixXd projection;  // least-squares V = Q^T X / M
    double residual = 0.0;       // ||Q V - X||^2 / (M Es)
};

/// Exact (integer) residual test for integer alphabets, tolerance-based
/// otherwise; also cross-checked through the Hadamard route.
FooVerdict is_foo(const Eigen::MatrixXd& alphabet, const Labeling& labeling, double tolerance = 1e-9);

/// Constant-energy specialization: verdict requires the recovered projection
/// rows to be pairwise orthogonal. Throws unless all symbol energies agree.
bool constant_energy_foo_check(const Eigen::MatrixXd& alphabet, const Labeling& labeling, double tolerance = 1e-9);

/// QAM criterion: the labeling is a trivial variant of the NBC; verified
/// independently against is_foo on the product alphabet.
bool qam_foo_check(Eigen::Index size_a, Eigen::Index size_b, const Labeling& labeling);

}  // namespace bicm

#endif
