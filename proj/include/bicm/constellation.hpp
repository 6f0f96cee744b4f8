#ifndef BICM_CONSTELLATION_HPP
#define BICM_CONSTELLATION_HPP

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <vector>

#include "bicm/distribution.hpp"
#include "bicm/labeling.hpp"

namespace bicm {

/// The triple [alphabet, labeling, distribution] with cached statistics:
/// mean symbol energy Es, the mean vector, and the per-bit index sets I_{k,u}.
class Constellation {
  public:
    static Constellation uniform(Eigen::MatrixXd alphabet, Labeling labeling);
    static Constellation with_bits(Eigen::MatrixXd alphabet, Labeling labeling, BitDistribution bits);
    static Constellation with_distribution(Eigen::MatrixXd alphabet, Labeling labeling, Eigen::VectorXd distribution);

    const Eigen::MatrixXd& alphabet() const { return alphabet_; }
    const Labeling& labeling() const { return labeling_; }
    const Eigen::VectorXd& distribution() const { return distribution_; }
    const std::optional<BitDistribution>& bit_distribution() const { return bits_; }

    Eigen::Index size() const { return alphabet_.rows(); }
    int dimension() const { return static_cast<int>(alphabet_.cols()); }
    int order() const { return labeling_.order(); }

    double es() const { return es_; }
    const Eigen::RowVectorXd& mean() const { return mean_; }

    /// Indexes of symbols whose label has bit `value` at `position`.
    const std::vector<Eigen::Index>& index_set(int position, int value) const;

    /// Marginal P_{C_k}(u) computed from the symbol distribution.
    double bit_probability(int position, int value) const;

    /// Eq.-style conditional pmf P_{X|C_k=u}: P(x)/P_{C_k}(u) on I_{k,u}, zero
    /// elsewhere. Throws when P_{C_k}(u) = 0.
    Eigen::VectorXd conditional_symbol_distribution(int position, int value) const;

    /// True when the symbol pmf factors as a product of per-bit marginals.
    bool has_bitwise_product_distribution(double tolerance = 1e-12) const;

  private:
    Constellation(Eigen::MatrixXd alphabet, Labeling labeling, Eigen::VectorXd distribution,
                  std::optional<BitDistribution> bits);

    Eigen::MatrixXd alphabet_;
    Labeling labeling_;
    Eigen::VectorXd distribution_;
    std::optional<BitDistribution> bits_;
    double es_ = 0.0;
    Eigen::RowVectorXd mean_;
    std::vector<std::array<std::vector<Eigen::Index>, 2>> index_sets_;
};

/// Scalar channel statistics used in SNR <-> Eb/N0 conversions. The fading
/// second moment is 1 for the AWGN channel.
struct ChannelSpec {
    double fading_second_moment = 1.0;
    int dimension = 1;
};

double snr_to_ebn0(double snr, double rate, const ChannelSpec& channel);
double ebn0_to_snr(double ebn0, double rate, const ChannelSpec& channel);

}  // namespace bicm

#endif
