#include "bicm/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "bicm/util.hpp"

namespace bicm {

namespace {

bool is_integer_matrix(const Eigen::MatrixXd& x) {
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            if (x(i, j) != std::nearbyint(x(i, j)) || std::abs(x(i, j)) > 1e9) return false;
    return true;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<int> unrank_permutation(std::uint64_t rank, int n) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int position = 0; position < n; ++position) {
        const std::uint64_t block = factorial(n - 1 - position);
        const std::size_t pick = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

/// Per-labeling kernel sum_k || sum_i s_{i,k} x_i ||^2 with the sign of
/// symbol i at level k taken from bit k of its assigned codeword. Summation
/// runs in fixed symbol order so equal sign patterns give identical bits.
struct Kernel {
    const Eigen::MatrixXd& alphabet;
    int order;
    bool integer;
    std::int64_t integer_energy = 0;  // M * sum ||x_i||^2
    double energy = 0.0;

    explicit Kernel(const Eigen::MatrixXd& x) : alphabet(x), order(exact_log2(x.rows())), integer(is_integer_matrix(x)) {
        energy = x.squaredNorm();
        if (integer) {
            for (Eigen::Index i = 0; i < x.rows(); ++i)
                for (Eigen::Index n = 0; n < x.cols(); ++n) {
                    const std::int64_t c = static_cast<std::int64_t>(std::nearbyint(x(i, n)));
                    integer_energy += c * c;
                }
            integer_energy *= x.rows();
        }
    }

    std::int64_t integer_key(const std::vector<int>& permutation) const {
        std::int64_t kernel = 0;
        for (int k = 0; k < order; ++k)
            for (Eigen::Index n = 0; n < alphabet.cols(); ++n) {
                std::int64_t projection = 0;
                for (Eigen::Index i = 0; i < alphabet.rows(); ++i) {
                    const std::int64_t c = static_cast<std::int64_t>(std::nearbyint(alphabet(i, n)));
                    projection += ((permutation[static_cast<std::size_t>(i)] >> k) & 1) ? -c : c;
                }
                kernel += projection * projection;
            }
        return kernel;
    }

    long double float_kernel(const std::vector<int>& permutation) const {
        long double kernel = 0.0L;
        for (int k = 0; k < order; ++k)
            for (Eigen::Index n = 0; n < alphabet.cols(); ++n) {
                long double projection = 0.0L;
                for (Eigen::Index i = 0; i < alphabet.rows(); ++i) {
                    const long double c = static_cast<long double>(alphabet(i, n));
                    projection += ((permutation[static_cast<std::size_t>(i)] >> k) & 1) ? -c : c;
                }
                kernel += projection * projection;
            }
        return kernel;
    }

    double alpha_from_integer_key(std::int64_t key) const {
        return kLog2E * static_cast<double>(key) / static_cast<double>(integer_energy);
    }

    bool integer_key_is_foo(std::int64_t key) const { return key == integer_energy; }

    /// map key and alpha for a permutation; foo verdict via the exact kernel
    void classify(const std::vector<int>& permutation, std::int64_t& key, double& alpha, bool& foo) const {
        if (integer) {
            const std::int64_t k = integer_key(permutation);
            key = k;
            alpha = alpha_from_integer_key(k);
            foo = integer_key_is_foo(k);
        } else {
            const long double k = float_kernel(permutation);
            const long double a = static_cast<long double>(kLog2E) * k /
                                  (static_cast<long double>(alphabet.rows()) * static_cast<long double>(energy));
            alpha = static_cast<double>(a);
            key = static_cast<std::int64_t>(llroundl(a * 1e9L));
            foo = std::abs(alpha - kLog2E) <= 1e-9 * kLog2E;
        }
    }
};

struct Partial {
    std::map<std::int64_t, AlphaClass> classes;
    std::uint64_t foo_count = 0;
};

Partial scan_range(const Kernel& kernel, std::uint64_t begin, std::uint64_t end) {
    Partial partial;
    const int count = static_cast<int>(kernel.alphabet.rows());
    std::vector<int> permutation = unrank_permutation(begin, count);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
        std::int64_t key = 0;
        double alpha = 0.0;
        bool foo = false;
        kernel.classify(permutation, key, alpha, foo);
        auto [it, inserted] = partial.classes.try_emplace(key);
        AlphaClass& cls = it->second;
        if (inserted) {
            cls.alpha = alpha;
            cls.witness_rank = rank;
            cls.witness_permutation = permutation;
        }
        ++cls.count;
        if (foo) ++partial.foo_count;
        std::next_permutation(permutation.begin(), permutation.end());
    }
    return partial;
}

void merge_into(Partial& target, const Partial& source) {
    for (const auto& [key, cls] : source.classes) {
        auto [it, inserted] = target.classes.try_emplace(key, cls);
        if (!inserted) {
            it->second.count += cls.count;
            if (cls.witness_rank < it->second.witness_rank) {
                it->second.witness_rank = cls.witness_rank;
                it->second.witness_permutation = cls.witness_permutation;
            }
        }
    }
    target.foo_count += source.foo_count;
}

}  // namespace

Labeling labeling_from_permutation(const std::vector<int>& permutation) {
    const int count = static_cast<int>(permutation.size());
    const int order = exact_log2(count);
    Eigen::MatrixXi bits(count, order);
    for (int i = 0; i < count; ++i)
        for (int k = 0; k < order; ++k) bits(i, k) = (permutation[static_cast<std::size_t>(i)] >> (order - 1 - k)) & 1;
    return Labeling(bits);
}

Labeling AlphaCensus::witness_labeling() const { return labeling_from_permutation(max_alpha_witness); }

AlphaCensus enumerate_alpha_classes(const Eigen::MatrixXd& alphabet, const SearchOptions& options) {
    const Eigen::Index count = alphabet.rows();
    if (!is_power_of_two(count)) throw std::domain_error("alphabet size must be a power of two");
    if (count > 8 && !options.allow_large) {
        throw std::domain_error("enumeration over " + std::to_string(count) + "! = " +
                                std::to_string(factorial(static_cast<int>(count))) +
                                " labelings refused; pass the large-search override to proceed");
    }
    const Kernel kernel(alphabet);
    const std::uint64_t total = factorial(static_cast<int>(count));

    const int threads = std::max(1, options.threads);
    Partial merged;
    if (threads == 1) {
        merged = scan_range(kernel, 0, total);
    } else {
        std::vector<Partial> partials(static_cast<std::size_t>(threads));
        std::vector<std::thread> workers;
        for (int t = 0; t < threads; ++t) {
            const std::uint64_t begin = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(threads);
            const std::uint64_t end = total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(threads);
            workers.emplace_back(
                [&kernel, &partials, t, begin, end] { partials[static_cast<std::size_t>(t)] = scan_range(kernel, begin, end); });
        }
        for (auto& worker : workers) worker.join();
        for (const auto& partial : partials) merge_into(merged, partial);
    }

    AlphaCensus census;
    census.total = total;
    census.classes = std::move(merged.classes);
    census.foo_count = merged.foo_count;
    census.max_alpha = -kInf;
    for (const auto& [key, cls] : census.classes)
        if (cls.alpha > census.max_alpha) {
            census.max_alpha = cls.alpha;
            census.max_alpha_witness = cls.witness_permutation;
        }
    census.min_class_spacing = kInf;
    double previous = 0.0;
    bool first = true;
    for (const auto& [key, cls] : census.classes) {
        if (!first) census.min_class_spacing = std::min(census.min_class_spacing, cls.alpha - previous);
        previous = cls.alpha;
        first = false;
    }
    return census;
}

FooCount count_foo_labelings(const Eigen::MatrixXd& alphabet, const SearchOptions& options) {
    const AlphaCensus census = enumerate_alpha_classes(alphabet, options);
    FooCount result;
    result.count = census.foo_count;
    if (census.foo_count > 0) {
        // the FOO class is the one at alpha = log2e; its witness is the first
        for (const auto& [key, cls] : census.classes)
            if (std::abs(cls.alpha - kLog2E) <= 1e-9 * kLog2E) {
                result.first_witness = cls.witness_permutation;
                break;
            }
    }
    return result;
}

std::size_t distinct_value_count_of_pmf(const AlphaCensus& census) {
    std::set<std::uint64_t> counts;
    for (const auto& [key, cls] : census.classes) counts.insert(cls.count);
    return counts.size();
}

}  // namespace bicm
