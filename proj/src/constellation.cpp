#include "bicm/constellation.hpp"

#include <cmath>
#include <stdexcept>

#include "bicm/util.hpp"

namespace bicm {

Constellation::Constellation(Eigen::MatrixXd alphabet, Labeling labeling, Eigen::VectorXd distribution,
                             std::optional<BitDistribution> bits)
    : alphabet_(std::move(alphabet)),
      labeling_(std::move(labeling)),
      distribution_(std::move(distribution)),
      bits_(std::move(bits)) {
    if (alphabet_.rows() != labeling_.size())
        throw std::domain_error("alphabet and labeling sizes must agree (2^order symbols)");
    if (!alphabet_.allFinite()) throw std::domain_error("alphabet coordinates must be finite");
    if (distribution_.size() != alphabet_.rows())
        throw std::domain_error("distribution must assign one probability per symbol");
    validate_symbol_distribution(distribution_);

    es_ = 0.0;
    mean_ = Eigen::RowVectorXd::Zero(alphabet_.cols());
    for (Eigen::Index i = 0; i < size(); ++i) {
        es_ += distribution_(i) * alphabet_.row(i).squaredNorm();
        mean_ += distribution_(i) * alphabet_.row(i);
    }
    if (!(es_ > 0.0)) throw std::domain_error("mean symbol energy must be positive");

    index_sets_.resize(static_cast<std::size_t>(order()));
    for (int k = 0; k < order(); ++k)
        for (Eigen::Index i = 0; i < size(); ++i)
            index_sets_[static_cast<std::size_t>(k)][static_cast<std::size_t>(labeling_.bit(i, k))].push_back(i);
}

Constellation Constellation::uniform(Eigen::MatrixXd alphabet, Labeling labeling) {
    return with_bits(std::move(alphabet), std::move(labeling), BitDistribution::uniform(labeling.order()));
}

Constellation Constellation::with_bits(Eigen::MatrixXd alphabet, Labeling labeling, BitDistribution bits) {
    Eigen::VectorXd p = bitwise_symbol_distribution(labeling, bits);
    return Constellation(std::move(alphabet), std::move(labeling), std::move(p), std::move(bits));
}

Constellation Constellation::with_distribution(Eigen::MatrixXd alphabet, Labeling labeling,
                                               Eigen::VectorXd distribution) {
    return Constellation(std::move(alphabet), std::move(labeling), std::move(distribution), std::nullopt);
}

const std::vector<Eigen::Index>& Constellation::index_set(int position, int value) const {
    return index_sets_.at(static_cast<std::size_t>(position)).at(static_cast<std::size_t>(value));
}

double Constellation::bit_probability(int position, int value) const {
    if (bits_) return bits_->p(position, value);
    double p = 0.0;
    for (Eigen::Index i : index_set(position, value)) p += distribution_(i);
    return p;
}

Eigen::VectorXd Constellation::conditional_symbol_distribution(int position, int value) const {
    const double p_bit = bit_probability(position, value);
    if (p_bit <= 0.0)
        throw std::domain_error("cannot condition on zero-probability bit value (position " +
                                std::to_string(position) + ", value " + std::to_string(value) + ")");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(size());
    for (Eigen::Index i : index_set(position, value)) out(i) = distribution_(i) / p_bit;
    return out;
}

bool Constellation::has_bitwise_product_distribution(double tolerance) const {
    if (bits_) return true;
    for (Eigen::Index i = 0; i < size(); ++i) {
        double prod = 1.0;
        for (int k = 0; k < order(); ++k) prod *= bit_probability(k, labeling_.bit(i, k));
        if (std::abs(prod - distribution_(i)) > tolerance) return false;
    }
    return true;
}

double snr_to_ebn0(double snr, double rate, const ChannelSpec& channel) {
    if (!(rate > 0.0)) throw std::domain_error("SNR to Eb/N0 conversion requires a positive rate");
    if (!(snr > 0.0)) throw std::domain_error("SNR to Eb/N0 conversion requires a positive SNR");
    return snr / (channel.fading_second_moment * rate);
}

double ebn0_to_snr(double ebn0, double rate, const ChannelSpec& channel) {
    if (!(rate > 0.0)) throw std::domain_error("Eb/N0 to SNR conversion requires a positive rate");
    if (!(ebn0 > 0.0)) throw std::domain_error("Eb/N0 to SNR conversion requires a positive Eb/N0");
    return ebn0 * channel.fading_second_moment * rate;
}

}  // namespace bicm
