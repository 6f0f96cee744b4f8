#include "bicm/capacity.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "bicm/gauss_hermite.hpp"
#include "bicm/util.hpp"

namespace bicm {

namespace {

double log_sum_exp(const std::vector<double>& values) {
    double peak = -kInf;
    for (double v : values) peak = std::max(peak, v);
    if (peak == -kInf) return -kInf;
    double sum = 0.0;
    for (double v : values) sum += std::exp(v - peak);
    return peak + std::log(sum);
}

/// Support of a distribution: indices with positive probability plus their logs.
struct Support {
    std::vector<Eigen::Index> index;
    std::vector<double> log_p;
};

Support support_of(const Eigen::VectorXd& p) {
    Support s;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (p(i) > 0.0) {
            s.index.push_back(i);
            s.log_p.push_back(std::log(p(i)));
        }
    return s;
}

/// Iterates the tensor-product Gauss-Hermite grid in a fixed order, calling
/// f(node_vector, weight_product) for every grid point.
template <typename F>
void for_each_grid_point(const GaussHermiteRule& rule, int dimension, F&& f) {
    const int n = static_cast<int>(rule.nodes.size());
    std::vector<int> idx(static_cast<std::size_t>(dimension), 0);
    Eigen::RowVectorXd t(dimension);
    while (true) {
        double w = 1.0;
        for (int d = 0; d < dimension; ++d) {
            t(d) = rule.nodes(idx[static_cast<std::size_t>(d)]);
            w *= rule.weights(idx[static_cast<std::size_t>(d)]);
        }
        f(t, w);
        int d = dimension - 1;
        while (d >= 0 && ++idx[static_cast<std::size_t>(d)] == n) {
            idx[static_cast<std::size_t>(d)] = 0;
            --d;
        }
        if (d < 0) break;
    }
}

void check_snr_inputs(double snr, const QuadratureSpec& quad) {
    if (!(snr >= 0.0)) throw std::domain_error("SNR must be nonnegative");
    if (quad.nodes < 2) throw std::domain_error("quadrature needs at least 2 nodes per dimension");
}

double noise_variance(const Constellation& omega, double snr) { return omega.es() / snr; }

void require_bitwise_product(const Constellation& omega) {
    if (!omega.has_bitwise_product_distribution())
        throw std::domain_error("BICM capacity requires a bitwise-product symbol distribution");
}

}  // namespace

double awgn_capacity(double snr, int dimension) {
    if (!(snr >= 0.0)) throw std::domain_error("SNR must be nonnegative");
    if (dimension < 1) throw std::domain_error("dimension must be >= 1");
    return 0.5 * dimension * std::log2(1.0 + 2.0 * snr / dimension);
}

double awgn_capacity_inverse(double rate, int dimension) {
    if (!(rate >= 0.0)) throw std::domain_error("rate must be nonnegative");
    return 0.5 * dimension * (std::exp2(2.0 * rate / dimension) - 1.0);
}

double f_awgn(double rate, int dimension) {
    if (!(rate > 0.0)) throw std::domain_error("f(Rc) requires a positive rate");
    return awgn_capacity_inverse(rate, dimension) / rate;
}

double g_awgn(double rate, int dimension) {
    if (!(rate > 0.0)) throw std::domain_error("g(Rc) requires a positive rate");
    const double growth = std::exp2(2.0 * rate / dimension);
    return (dimension + (2.0 * rate * kLn2 - dimension) * growth) / (2.0 * rate * rate);
}

double ami(const Eigen::MatrixXd& alphabet, const Eigen::VectorXd& distribution, double n0,
           const QuadratureSpec& quad) {
    if (!(n0 > 0.0)) throw std::domain_error("noise variance must be positive");
    const Support s = support_of(distribution);
    const std::size_t count = s.index.size();
    if (count <= 1) return 0.0;

    const int dimension = static_cast<int>(alphabet.cols());
    const double sigma = std::sqrt(n0);
    const GaussHermiteRule rule = gauss_hermite(quad.nodes);
    const double normalization = std::pow(std::numbers::pi, -0.5 * dimension);

    // scaled pairwise differences (x_a - x_b)/sqrt(n0) for the support
    Eigen::MatrixXd scaled(static_cast<Eigen::Index>(count), dimension);
    for (std::size_t a = 0; a < count; ++a) scaled.row(static_cast<Eigen::Index>(a)) = alphabet.row(s.index[a]) / sigma;

    std::vector<double> exponents(count);
    double total = 0.0;
    for (std::size_t a = 0; a < count; ++a) {
        double acc = 0.0;
        for_each_grid_point(rule, dimension, [&](const Eigen::RowVectorXd& t, double w) {
            for (std::size_t b = 0; b < count; ++b) {
                const double d2 = (scaled.row(static_cast<Eigen::Index>(a)) - scaled.row(static_cast<Eigen::Index>(b)) + t)
                                      .squaredNorm();
                exponents[b] = s.log_p[b] - d2;
            }
            acc += w * (-t.squaredNorm() - log_sum_exp(exponents));
        });
        total += distribution(s.index[a]) * acc;
    }
    return total * normalization / kLn2;
}

double cm_capacity(const Eigen::MatrixXd& alphabet, const Eigen::VectorXd& distribution, double snr,
                   const QuadratureSpec& quad) {
    check_snr_inputs(snr, quad);
    if (snr == 0.0) return 0.0;
    double es = 0.0;
    for (Eigen::Index i = 0; i < alphabet.rows(); ++i) es += distribution(i) * alphabet.row(i).squaredNorm();
    if (!(es > 0.0)) throw std::domain_error("mean symbol energy must be positive");
    return ami(alphabet, distribution, es / snr, quad);
}

double cm_capacity(const Constellation& omega, double snr, const QuadratureSpec& quad) {
    check_snr_inputs(snr, quad);
    if (snr == 0.0) return 0.0;
    if (quad.method == QuadratureSpec::Method::MonteCarlo)
        return cm_capacity_mc(omega, snr, quad.mc_samples, quad.seed).value;
    return ami(omega.alphabet(), omega.distribution(), noise_variance(omega, snr), quad);
}

double bicm_capacity(const Constellation& omega, double snr, const QuadratureSpec& quad) {
    check_snr_inputs(snr, quad);
    require_bitwise_product(omega);
    if (snr == 0.0) return 0.0;
    if (quad.method == QuadratureSpec::Method::MonteCarlo)
        return bicm_capacity_mc(omega, snr, quad.mc_samples, quad.seed).value;

    const Support s = support_of(omega.distribution());
    const std::size_t count = s.index.size();
    if (count <= 1) return 0.0;

    const int dimension = omega.dimension();
    const int order = omega.order();
    const double sigma = std::sqrt(noise_variance(omega, snr));
    const GaussHermiteRule rule = gauss_hermite(quad.nodes);
    const double normalization = std::pow(std::numbers::pi, -0.5 * dimension);

    Eigen::MatrixXd scaled(static_cast<Eigen::Index>(count), dimension);
    for (std::size_t a = 0; a < count; ++a) scaled.row(static_cast<Eigen::Index>(a)) = omega.alphabet().row(s.index[a]) / sigma;

    std::vector<double> log_bit_p(static_cast<std::size_t>(2 * order));
    for (int k = 0; k < order; ++k)
        for (int u = 0; u < 2; ++u) {
            const double p = omega.bit_probability(k, u);
            log_bit_p[static_cast<std::size_t>(2 * k + u)] = p > 0.0 ? std::log(p) : -kInf;
        }

    std::vector<double> exponents(count);
    std::vector<double> subset;
    subset.reserve(count);
    double total = 0.0;
    for (std::size_t a = 0; a < count; ++a) {
        const Eigen::Index symbol = s.index[a];
        double acc = 0.0;
        for_each_grid_point(rule, dimension, [&](const Eigen::RowVectorXd& t, double w) {
            for (std::size_t b = 0; b < count; ++b) {
                const double d2 = (scaled.row(static_cast<Eigen::Index>(a)) - scaled.row(static_cast<Eigen::Index>(b)) + t)
                                      .squaredNorm();
                exponents[b] = s.log_p[b] - d2;
            }
            const double log_full = log_sum_exp(exponents);
            double integrand = 0.0;
            for (int k = 0; k < order; ++k) {
                const int u = omega.labeling().bit(symbol, k);
                subset.clear();
                for (std::size_t b = 0; b < count; ++b)
                    if (omega.labeling().bit(s.index[b], k) == u) subset.push_back(exponents[b]);
                integrand += log_sum_exp(subset) - log_bit_p[static_cast<std::size_t>(2 * k + u)] - log_full;
            }
            acc += w * integrand;
        });
        total += omega.distribution()(symbol) * acc;
    }
    return total * normalization / kLn2;
}

double bicm_capacity_via_difference(const Constellation& omega, double snr, const QuadratureSpec& quad) {
    check_snr_inputs(snr, quad);
    require_bitwise_product(omega);
    if (snr == 0.0) return 0.0;
    const double n0 = noise_variance(omega, snr);
    const double unconditional = ami(omega.alphabet(), omega.distribution(), n0, quad);
    double total = 0.0;
    for (int k = 0; k < omega.order(); ++k)
        for (int u = 0; u < 2; ++u) {
            const double p_bit = omega.bit_probability(k, u);
            if (p_bit <= 0.0) continue;  // degenerate level carries no information
            const double conditional = ami(omega.alphabet(), omega.conditional_symbol_distribution(k, u), n0, quad);
            total += p_bit * (unconditional - conditional);
        }
    return total;
}

double bit_level_conditional_ami(const Constellation& omega, double snr, int position, const QuadratureSpec& quad) {
    check_snr_inputs(snr, quad);
    if (position < 0 || position >= omega.order()) throw std::domain_error("bit position out of range");
    if (snr == 0.0) return 0.0;
    const double n0 = noise_variance(omega, snr);

    double total = 0.0;
    const Eigen::Index prefixes = Eigen::Index{1} << position;
    for (Eigen::Index pattern = 0; pattern < prefixes; ++pattern) {
        // restrict to symbols whose first `position` bits match the pattern
        Eigen::VectorXd restricted = Eigen::VectorXd::Zero(omega.size());
        double p_prefix = 0.0;
        for (Eigen::Index i = 0; i < omega.size(); ++i) {
            bool match = true;
            for (int j = 0; j < position && match; ++j)
                match = omega.labeling().bit(i, j) == static_cast<int>((pattern >> (position - 1 - j)) & 1);
            if (match) {
                restricted(i) = omega.distribution()(i);
                p_prefix += restricted(i);
            }
        }
        if (p_prefix <= 0.0) continue;
        restricted /= p_prefix;

        const double whole = ami(omega.alphabet(), restricted, n0, quad);
        double conditioned = 0.0;
        for (int u = 0; u < 2; ++u) {
            Eigen::VectorXd split = Eigen::VectorXd::Zero(omega.size());
            double p_split = 0.0;
            for (Eigen::Index i : omega.index_set(position, u)) {
                split(i) = restricted(i);
                p_split += split(i);
            }
            if (p_split <= 0.0) continue;
            split /= p_split;
            conditioned += p_split * ami(omega.alphabet(), split, n0, quad);
        }
        total += p_prefix * (whole - conditioned);
    }
    return total;
}

namespace {

/// Shared Monte-Carlo walk: draws (symbol, noise) pairs and hands the sampled
/// log-density exponents to the estimator's per-sample functional.
template <typename PerSample>
MonteCarloEstimate run_monte_carlo(const Constellation& omega, double snr, std::int64_t samples,
                                   std::uint64_t seed, PerSample&& per_sample) {
    if (!(snr > 0.0)) return {0.0, 0.0};
    if (samples < 2) throw std::domain_error("Monte-Carlo needs at least 2 samples");
    const double n0 = noise_variance(omega, snr);
    const double sigma = std::sqrt(0.5 * n0);
    const Support s = support_of(omega.distribution());
    const std::size_t count = s.index.size();
    if (count <= 1) return {0.0, 0.0};
    const int dimension = omega.dimension();

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::discrete_distribution<std::size_t> pick(omega.distribution().data(),
                                                 omega.distribution().data() + omega.distribution().size());

    std::vector<double> exponents(count);
    Eigen::RowVectorXd y(dimension);
    double mean = 0.0, m2 = 0.0;
    for (std::int64_t n = 0; n < samples; ++n) {
        const Eigen::Index symbol = static_cast<Eigen::Index>(pick(rng));
        for (int d = 0; d < dimension; ++d) y(d) = omega.alphabet()(symbol, d) + sigma * noise(rng);
        for (std::size_t b = 0; b < count; ++b)
            exponents[b] = s.log_p[b] - (y - omega.alphabet().row(s.index[b])).squaredNorm() / n0;
        const double value = per_sample(symbol, y, exponents);
        const double delta = value - mean;
        mean += delta / static_cast<double>(n + 1);
        m2 += delta * (value - mean);
    }
    const double variance = m2 / static_cast<double>(samples - 1);
    return {mean, std::sqrt(variance / static_cast<double>(samples))};
}

}  // namespace

MonteCarloEstimate cm_capacity_mc(const Constellation& omega, double snr, std::int64_t samples, std::uint64_t seed) {
    const double n0 = omega.es() / snr;
    return run_monte_carlo(omega, snr, samples, seed,
                           [&](Eigen::Index symbol, const Eigen::RowVectorXd& y, const std::vector<double>& exponents) {
                               // log2 p(y|x)/p(y); the Gaussian normalizer cancels
                               const double log_cond = -(y - omega.alphabet().row(symbol)).squaredNorm() / n0;
                               return (log_cond - log_sum_exp(exponents)) / kLn2;
                           });
}

MonteCarloEstimate bicm_capacity_mc(const Constellation& omega, double snr, std::int64_t samples, std::uint64_t seed) {
    require_bitwise_product(omega);
    const int order = omega.order();
    const Support s = support_of(omega.distribution());
    std::vector<double> log_bit_p(static_cast<std::size_t>(2 * order));
    for (int k = 0; k < order; ++k)
        for (int u = 0; u < 2; ++u) {
            const double p = omega.bit_probability(k, u);
            log_bit_p[static_cast<std::size_t>(2 * k + u)] = p > 0.0 ? std::log(p) : -kInf;
        }
    std::vector<double> subset;
    return run_monte_carlo(omega, snr, samples, seed,
                           [&](Eigen::Index symbol, const Eigen::RowVectorXd&, const std::vector<double>& exponents) {
                               const double log_full = log_sum_exp(exponents);
                               double value = 0.0;
                               for (int k = 0; k < order; ++k) {
                                   const int u = omega.labeling().bit(symbol, k);
                                   subset.clear();
                                   for (std::size_t b = 0; b < s.index.size(); ++b)
                                       if (omega.labeling().bit(s.index[b], k) == u) subset.push_back(exponents[b]);
                                   value += log_sum_exp(subset) - log_bit_p[static_cast<std::size_t>(2 * k + u)] - log_full;
                               }
                               return value / kLn2;
                           });
}

}  // namespace bicm
