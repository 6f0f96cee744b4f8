#ifndef BICM_DISTRIBUTION_HPP
#define BICM_DISTRIBUTION_HPP

#include <Eigen/Dense>
#include <vector>

#include "bicm/labeling.hpp"

namespace bicm {

/// Per-bit-position probabilities P_{C_k}(0); the complement is implied.
class BitDistribution {
  public:
    explicit BitDistribution(std::vector<double> p_zero);
    static BitDistribution uniform(int order);

    int order() const { return static_cast<int>(p_zero_.size()); }
    double p(int position, int value) const;
    const std::vector<double>& p_zero() const { return p_zero_; }

    /// Positions with P in {0, 1}; such bit levels carry no information.
    std::vector<int> degenerate_positions() const;

  private:
    std::vector<double> p_zero_;
};

/// Symbol pmf induced by independent bit levels: P(x_i) = prod_k P_{C_k}(c_{i,k}).
Eigen::VectorXd bitwise_symbol_distribution(const Labeling& l, const BitDistribution& bits);

/// Validates a symbol pmf (entries >= 0, unit sum to 1e-12).
void validate_symbol_distribution(const Eigen::VectorXd& p);

}  // namespace bicm

#endif
