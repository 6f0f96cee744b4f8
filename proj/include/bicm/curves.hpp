#ifndef BICM_CURVES_HPP
#define BICM_CURVES_HPP

#include <functional>
#include <string>
#include <vector>

#include "bicm/capacity.hpp"
#include "bicm/constellation.hpp"

namespace bicm {

enum class CapacityKind { Awgn, Cm, Bicm };

CapacityKind capacity_kind_from_string(const std::string& name);
std::string to_string(CapacityKind kind);

struct CapacityPoint {
    double snr = 0.0;   // linear
    double rate = 0.0;  // bits per channel use
    double ebn0 = 0.0;  // linear
    double ebn0_db = 0.0;
};

/// Ordered sweep with its provenance (which functional over which omega).
struct CapacityCurve {
    std::vector<CapacityPoint> points;
    std::string provenance;

    /// SNR strictly increasing; rate non-decreasing (strict for CM/AWGN).
    void validate(bool strict_rate) const;
};

/// rate as a function of SNR for the requested capacity.
std::function<double(double)> capacity_functional(const Constellation& omega, CapacityKind kind,
                                                  const QuadratureSpec& quad);

/// Smallest SNR achieving `rate`, by bracketed bisection to a relative SNR
/// tolerance of 1e-10. Pass bracket_hi = 0 to auto-expand the bracket.
/// Throws std::range_error when the rate is unreachable.
double invert_capacity(const std::function<double(double)>& capacity, double rate, double bracket_lo = 0.0,
                       double bracket_hi = 0.0);

/// Capacity sweep over an SNR grid.
CapacityCurve capacity_curve(const Constellation& omega, CapacityKind kind, const std::vector<double>& snr_grid,
                             const QuadratureSpec& quad, const ChannelSpec& channel);

/// f(Rc) = C^{-1}(Rc) / (E[H^2] Rc) sampled on a rate grid.
CapacityCurve f_curve(const Constellation& omega, CapacityKind kind, const std::vector<double>& rate_grid,
                      const QuadratureSpec& quad, const ChannelSpec& channel);

/// f and its derivative as callables for minimum searches.
std::function<double(double)> f_functional(const Constellation& omega, CapacityKind kind, const QuadratureSpec& quad,
                                           const ChannelSpec& channel);

/// g(Rc) = df/dRc by central differences with relative step 1e-4.
double g_at(const std::function<double(double)>& f, double rate, double relative_step = 1e-4);

/// Derivative curve from a sampled f curve (central differences on the grid,
/// one-sided at the ends). Point `ebn0` fields hold g values.
std::vector<std::pair<double, double>> g_curve(const CapacityCurve& f_samples);

struct MinimumEbn0 {
    double rate = 0.0;  // 0 marks the zero-rate endpoint
    double ebn0 = 0.0;
    double ebn0_db = 0.0;
    bool interior = false;
};

/// Minimum of f over (0, rate_hi]: compares the analytic zero-rate endpoint
/// 1/alpha with interior stationary points found via sign changes of g on a
/// log-spaced grid, each refined by golden-section search.
MinimumEbn0 min_ebn0(const std::function<double(double)>& f, double alpha, double rate_lo, double rate_hi,
                     int grid_points = 200);

/// SNR gap to the AWGN capacity at the same rate (linear ratio).
double snr_gap(const Constellation& omega, CapacityKind kind, double rate, const QuadratureSpec& quad);

}  // namespace bicm

#endif
