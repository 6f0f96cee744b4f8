#include "bicm/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bicm/util.hpp"

namespace bicm {

CapacityKind capacity_kind_from_string(const std::string& name) {
    if (name == "awgn") return CapacityKind::Awgn;
    if (name == "cm") return CapacityKind::Cm;
    if (name == "bicm") return CapacityKind::Bicm;
    throw std::domain_error("unknown capacity kind '" + name + "' (expected awgn|cm|bicm)");
}

std::string to_string(CapacityKind kind) {
    switch (kind) {
        case CapacityKind::Awgn: return "awgn";
        case CapacityKind::Cm: return "cm";
        case CapacityKind::Bicm: return "bicm";
    }
    return "?";
}

void CapacityCurve::validate(bool strict_rate) const {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].snr > points[i - 1].snr)) throw std::logic_error("capacity curve SNR must be strictly increasing");
        const bool ok = strict_rate ? points[i].rate > points[i - 1].rate : points[i].rate >= points[i - 1].rate;
        if (!ok) throw std::logic_error("capacity curve rate must be monotone");
    }
}

std::function<double(double)> capacity_functional(const Constellation& omega, CapacityKind kind,
                                                  const QuadratureSpec& quad) {
    switch (kind) {
        case CapacityKind::Awgn: {
            const int dimension = omega.dimension();
            return [dimension](double snr) { return awgn_capacity(snr, dimension); };
        }
        case CapacityKind::Cm:
            return [&omega, quad](double snr) { return cm_capacity(omega, snr, quad); };
        case CapacityKind::Bicm:
            return [&omega, quad](double snr) { return bicm_capacity(omega, snr, quad); };
    }
    throw std::domain_error("unknown capacity kind");
}

double invert_capacity(const std::function<double(double)>& capacity, double rate, double bracket_lo,
                       double bracket_hi) {
    if (!(rate > 0.0)) throw std::domain_error("capacity inversion requires a positive rate");
    double lo = std::max(bracket_lo, 0.0);
    if (capacity(lo) >= rate) lo = 0.0;
    double hi = bracket_hi > lo ? bracket_hi : std::max(1.0, 2.0 * lo);
    while (capacity(hi) < rate) {
        hi *= 2.0;
        if (hi > 1e15) throw std::range_error("rate is unreachable by this capacity functional");
    }
    for (int iteration = 0; iteration < 200; ++iteration) {
        const double mid = 0.5 * (lo + hi);
        if (capacity(mid) >= rate)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 1e-10 * hi) break;
    }
    return 0.5 * (lo + hi);
}

CapacityCurve capacity_curve(const Constellation& omega, CapacityKind kind, const std::vector<double>& snr_grid,
                             const QuadratureSpec& quad, const ChannelSpec& channel) {
    const auto capacity = capacity_functional(omega, kind, quad);
    CapacityCurve curve;
    curve.provenance = to_string(kind);
    for (double snr : snr_grid) {
        CapacityPoint point;
        point.snr = snr;
        point.rate = capacity(snr);
        point.ebn0 = point.rate > 0.0 ? snr_to_ebn0(snr, point.rate, channel) : kInf;
        point.ebn0_db = linear_to_db(point.ebn0);
        curve.points.push_back(point);
    }
    return curve;
}

std::function<double(double)> f_functional(const Constellation& omega, CapacityKind kind, const QuadratureSpec& quad,
                                           const ChannelSpec& channel) {
    const auto capacity = capacity_functional(omega, kind, quad);
    const double h2 = channel.fading_second_moment;
    if (kind == CapacityKind::Awgn) {
        const int dimension = omega.dimension();
        return [dimension, h2](double rate) { return f_awgn(rate, dimension) / h2; };
    }
    return [capacity, h2](double rate) { return invert_capacity(capacity, rate) / (h2 * rate); };
}

CapacityCurve f_curve(const Constellation& omega, CapacityKind kind, const std::vector<double>& rate_grid,
                      const QuadratureSpec& quad, const ChannelSpec& channel) {
    const auto f = f_functional(omega, kind, quad, channel);
    CapacityCurve curve;
    curve.provenance = "f-" + to_string(kind);
    for (double rate : rate_grid) {
        CapacityPoint point;
        point.rate = rate;
        point.ebn0 = f(rate);
        point.snr = point.ebn0 * channel.fading_second_moment * rate;
        point.ebn0_db = linear_to_db(point.ebn0);
        curve.points.push_back(point);
    }
    return curve;
}

double g_at(const std::function<double(double)>& f, double rate, double relative_step) {
    if (!(rate > 0.0)) throw std::domain_error("g(Rc) requires a positive rate");
    const double h = rate * relative_step;
    return (f(rate + h) - f(rate - h)) / (2.0 * h);
}

std::vector<std::pair<double, double>> g_curve(const CapacityCurve& f_samples) {
    const auto& p = f_samples.points;
    if (p.size() < 2) throw std::domain_error("g curve needs at least two f samples");
    std::vector<std::pair<double, double>> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const std::size_t lo = i == 0 ? 0 : i - 1;
        const std::size_t hi = i + 1 == p.size() ? i : i + 1;
        out[i] = {p[i].rate, (p[hi].ebn0 - p[lo].ebn0) / (p[hi].rate - p[lo].rate)};
    }
    return out;
}

namespace {

double golden_section_min(const std::function<double(double)>& f, double a, double b) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int iteration = 0; iteration < 200 && (b - a) > 1e-6 * b; ++iteration) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

MinimumEbn0 min_ebn0(const std::function<double(double)>& f, double alpha, double rate_lo, double rate_hi,
                     int grid_points) {
    if (!(rate_lo > 0.0 && rate_hi > rate_lo)) throw std::domain_error("min Eb/N0 needs 0 < rate_lo < rate_hi");
    if (grid_points < 8) throw std::domain_error("min Eb/N0 needs at least 8 grid points");

    MinimumEbn0 best;
    best.rate = 0.0;
    best.ebn0 = alpha > 0.0 ? 1.0 / alpha : kInf;  // analytic zero-rate endpoint
    best.interior = false;

    // log-spaced sample of f; interior minima show up as slope sign changes
    std::vector<double> rates(static_cast<std::size_t>(grid_points));
    std::vector<double> values(static_cast<std::size_t>(grid_points));
    const double ratio = std::log(rate_hi / rate_lo) / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) {
        rates[static_cast<std::size_t>(i)] = rate_lo * std::exp(ratio * i);
        values[static_cast<std::size_t>(i)] = f(rates[static_cast<std::size_t>(i)]);
    }
    for (int i = 1; i + 1 < grid_points; ++i) {
        const std::size_t j = static_cast<std::size_t>(i);
        if (values[j] <= values[j - 1] && values[j] <= values[j + 1] &&
            (values[j] < values[j - 1] || values[j] < values[j + 1])) {
            const double rate = golden_section_min(f, rates[j - 1], rates[j + 1]);
            const double value = f(rate);
            if (value < best.ebn0) {
                best.rate = rate;
                best.ebn0 = value;
                best.interior = true;
            }
        }
    }
    best.ebn0_db = linear_to_db(best.ebn0);
    return best;
}

double snr_gap(const Constellation& omega, CapacityKind kind, double rate, const QuadratureSpec& quad) {
    const ChannelSpec awgn{1.0, omega.dimension()};
    const auto f = f_functional(omega, kind, quad, awgn);
    return f(rate) / f_awgn(rate, omega.dimension());
}

}  // namespace bicm
