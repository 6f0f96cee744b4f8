#ifndef BICM_SHAPING_HPP
#define BICM_SHAPING_HPP

#include <Eigen/Dense>
#include <vector>

#include "bicm/capacity.hpp"
#include "bicm/curves.hpp"
#include "bicm/distribution.hpp"
#include "bicm/labeling.hpp"

namespace bicm {

struct ShapingResult {
    double snr = 0.0;
    BitDistribution best{std::vector<double>{0.5}};
    double shaped_capacity = 0.0;
    double uniform_capacity = 0.0;
    double step = 0.0;
};

/// Exhaustive grid search over per-bit probabilities maximizing the BICM
/// capacity at a fixed SNR. Es (and so N0) is recomputed for each candidate;
/// ties resolve to the lexicographically smallest probability vector.
ShapingResult optimize_distribution(const Eigen::MatrixXd& alphabet, const Labeling& labeling, double snr, double step,
                                    const QuadratureSpec& quad);

/// Coarse grid search followed by a local fine grid around the coarse
/// optimum (one fine-step window per coarse cell on each side).
ShapingResult optimize_refined(const Eigen::MatrixXd& alphabet, const Labeling& labeling, double snr,
                               double coarse_step, double fine_step, const QuadratureSpec& quad);

/// Shaped capacity envelope max_P I(SNR) converted to (Rc, Eb/N0) points.
CapacityCurve shaped_f_curve(const Eigen::MatrixXd& alphabet, const Labeling& labeling,
                             const std::vector<double>& snr_grid, double step, const QuadratureSpec& quad);

/// Eb/N0 of the shaped envelope at a target rate, by bisection on SNR with
/// the optimizer inside.
double shaped_ebn0_at_rate(const Eigen::MatrixXd& alphabet, const Labeling& labeling, double rate, double coarse_step,
                           double fine_step, const QuadratureSpec& quad);

}  // namespace bicm

#endif
