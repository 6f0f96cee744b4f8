#include "bicm/shaping.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bicm/constellation.hpp"
#include "bicm/util.hpp"

namespace bicm {

namespace {

double evaluate_candidate(const Eigen::MatrixXd& alphabet, const Labeling& labeling, double snr,
                          const std::vector<double>& p_zero, const QuadratureSpec& quad) {
    const BitDistribution bits(p_zero);
    const Eigen::VectorXd p = bitwise_symbol_distribution(labeling, bits);
    double es = 0.0;
    for (Eigen::Index i = 0; i < alphabet.rows(); ++i) es += p(i) * alphabet.row(i).squaredNorm();
    if (!(es > 0.0)) return 0.0;  // all mass on a zero-energy point carries nothing
    const Constellation omega = Constellation::with_bits(alphabet, labeling, bits);
    return bicm_capacity(omega, snr, quad);
}

/// Walks a per-position candidate grid in lexicographic order; the strict
/// comparison keeps the first (lexicographically smallest) maximizer.
ShapingResult grid_search(const Eigen::MatrixXd& alphabet, const Labeling& labeling, double snr,
                          const std::vector<std::vector<double>>& grids, double step, const QuadratureSpec& quad) {
    const int order = labeling.order();
    std::vector<std::size_t> index(static_cast<std::size_t>(order), 0);
    std::vector<double> candidate(static_cast<std::size_t>(order));
    std::vector<double> best_p;
    double best_capacity = -kInf;
    while (true) {
        for (int k = 0; k < order; ++k) candidate[static_cast<std::size_t>(k)] = grids[static_cast<std::size_t>(k)][index[static_cast<std::size_t>(k)]];
        const double capacity = evaluate_candidate(alphabet, labeling, snr, candidate, quad);
        if (capacity > best_capacity) {
            best_capacity = capacity;
            best_p = candidate;
        }
        int position = order - 1;
        while (position >= 0 && ++index[static_cast<std::size_t>(position)] == grids[static_cast<std::size_t>(position)].size()) {
            index[static_cast<std::size_t>(position)] = 0;
            --position;
        }
        if (position < 0) break;
    }
    ShapingResult result;
    result.snr = snr;
    result.best = BitDistribution(best_p);
    result.shaped_capacity = best_capacity;
    result.uniform_capacity =
        evaluate_candidate(alphabet, labeling, snr, std::vector<double>(static_cast<std::size_t>(order), 0.5), quad);
    result.step = step;
    return result;
}

std::vector<double> uniform_grid(double step) {
    std::vector<double> grid;
    const long divisions = std::lround(1.0 / step);
    if (divisions >= 2 && std::abs(1.0 / step - static_cast<double>(divisions)) < 1e-9) {
        // exact rational grid so that e.g. 0.5 lands on the grid exactly
        for (long i = 0; i <= divisions; ++i) grid.push_back(static_cast<double>(i) / static_cast<double>(divisions));
    } else {
        for (double value = 0.0; value < 1.0; value += step) grid.push_back(value);
        grid.push_back(1.0);
    }
    return grid;
}

std::vector<double> window_grid(double center, double halfwidth, double step) {
    std::vector<double> grid;
    for (double value = center - halfwidth; value <= center + halfwidth + 0.5 * step; value += step)
        grid.push_back(std::clamp(value, 0.0, 1.0));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace

ShapingResult optimize_distribution(const Eigen::MatrixXd& alphabet, const Labeling& labeling, double snr, double step,
                                    const QuadratureSpec& quad) {
    if (!(step > 0.0 && step <= 0.5)) throw std::domain_error("shaping grid step must lie in (0, 0.5]");
    if (!(snr > 0.0)) throw std::domain_error("shaping requires a positive SNR");
    const std::vector<std::vector<double>> grids(static_cast<std::size_t>(labeling.order()), uniform_grid(step));
    return grid_search(alphabet, labeling, snr, grids, step, quad);
}

ShapingResult optimize_refined(const Eigen::MatrixXd& alphabet, const Labeling& labeling, double snr,
                               double coarse_step, double fine_step, const QuadratureSpec& quad) {
    ShapingResult coarse = optimize_distribution(alphabet, labeling, snr, coarse_step, quad);
    if (!(fine_step > 0.0) || fine_step >= coarse_step) return coarse;
    std::vector<std::vector<double>> grids;
    for (int k = 0; k < labeling.order(); ++k)
        grids.push_back(window_grid(coarse.best.p_zero()[static_cast<std::size_t>(k)], coarse_step, fine_step));
    ShapingResult fine = grid_search(alphabet, labeling, snr, grids, fine_step, quad);
    // the window contains the coarse optimum, so refinement cannot lose
    if (fine.shaped_capacity < coarse.shaped_capacity) return coarse;
    return fine;
}

CapacityCurve shaped_f_curve(const Eigen::MatrixXd& alphabet, const Labeling& labeling,
                             const std::vector<double>& snr_grid, double step, const QuadratureSpec& quad) {
    CapacityCurve curve;
    curve.provenance = "shaped-bicm";
    for (double snr : snr_grid) {
        const ShapingResult result = optimize_distribution(alphabet, labeling, snr, step, quad);
        CapacityPoint point;
        point.snr = snr;
        point.rate = result.shaped_capacity;
        point.ebn0 = point.rate > 0.0 ? snr / point.rate : kInf;
        point.ebn0_db = linear_to_db(point.ebn0);
        curve.points.push_back(point);
    }
    // monotone envelope in rate
    for (std::size_t i = 1; i < curve.points.size(); ++i)
        curve.points[i].rate = std::max(curve.points[i].rate, curve.points[i - 1].rate);
    return curve;
}

double shaped_ebn0_at_rate(const Eigen::MatrixXd& alphabet, const Labeling& labeling, double rate, double coarse_step,
                           double fine_step, const QuadratureSpec& quad) {
    if (!(rate > 0.0)) throw std::domain_error("target rate must be positive");
    const auto shaped_capacity = [&](double snr) {
        return optimize_refined(alphabet, labeling, snr, coarse_step, fine_step, quad).shaped_capacity;
    };
    // the envelope of increasing fixed-P capacities is increasing, so bisect
    double lo = 0.0, hi = 1.0;
    while (shaped_capacity(hi) < rate) {
        hi *= 2.0;
        if (hi > 1e12) throw std::range_error("target rate unreachable by the shaped envelope");
    }
    for (int iteration = 0; iteration < 60; ++iteration) {
        const double mid = 0.5 * (lo + hi);
        if (shaped_capacity(mid) >= rate)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 1e-9 * hi) break;
    }
    return 0.5 * (lo + hi) / rate;
}

}  // namespace bicm
