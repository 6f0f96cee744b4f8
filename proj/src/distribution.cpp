#include "bicm/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace bicm {

BitDistribution::BitDistribution(std::vector<double> p_zero) : p_zero_(std::move(p_zero)) {
    if (p_zero_.empty()) throw std::domain_error("bit distribution needs at least one position");
    for (double p : p_zero_)
        if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("bit probabilities must lie in [0, 1]");
}

BitDistribution BitDistribution::uniform(int order) {
    return BitDistribution(std::vector<double>(static_cast<std::size_t>(order), 0.5));
}

double BitDistribution::p(int position, int value) const {
    const double p0 = p_zero_.at(static_cast<std::size_t>(position));
    return value == 0 ? p0 : 1.0 - p0;
}

std::vector<int> BitDistribution::degenerate_positions() const {
    std::vector<int> out;
    for (int k = 0; k < order(); ++k)
        if (p_zero_[static_cast<std::size_t>(k)] == 0.0 || p_zero_[static_cast<std::size_t>(k)] == 1.0) out.push_back(k);
    return out;
}

Eigen::VectorXd bitwise_symbol_distribution(const Labeling& l, const BitDistribution& bits) {
    if (bits.order() != l.order()) throw std::domain_error("bit distribution order must match the labeling order");
    Eigen::VectorXd p(l.size());
    for (Eigen::Index i = 0; i < l.size(); ++i) {
        double prob = 1.0;
        for (int k = 0; k < l.order(); ++k) prob *= bits.p(k, l.bit(i, k));
        p(i) = prob;
    }
    return p;
}

void validate_symbol_distribution(const Eigen::VectorXd& p) {
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (!(p(i) >= 0.0)) throw std::domain_error("symbol probabilities must be nonnegative");
    if (std::abs(p.sum() - 1.0) > 1e-12) throw std::domain_error("symbol probabilities must sum to 1");
}

}  // namespace bicm
