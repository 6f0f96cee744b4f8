#ifndef BICM_SEARCH_HPP
#define BICM_SEARCH_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bicm/labeling.hpp"

namespace bicm {

/// One alpha equivalence class of labelings. Keys are exact integer kernels
/// for integer alphabets and alpha rounded to 1e-9 otherwise; the witness is
/// the lexicographically first permutation reaching the class.
struct AlphaClass {
    double alpha = 0.0;
    std::uint64_t count = 0;
    std::uint64_t witness_rank = 0;
    std::vector<int> witness_permutation;
};

struct AlphaCensus {
    std::string alphabet_description;
    std::uint64_t total = 0;  // M! labelings
    std::map<std::int64_t, AlphaClass> classes;
    std::uint64_t foo_count = 0;
    double max_alpha = 0.0;
    std::vector<int> max_alpha_witness;   // permutation of symbol indices
    double min_class_spacing = 0.0;       // smallest gap between adjacent class alphas

    std::size_t class_count() const { return classes.size(); }
    Labeling witness_labeling() const;
};

struct SearchOptions {
    bool allow_large = false;  // lifts the M <= 8 guard
    int threads = 1;           // contiguous permutation ranges, merged deterministically
};

/// Exhaustive walk over all M! labelings of the alphabet (as permutations of
/// NBC codeword order, lexicographic), classifying by the BICM first-order
/// coefficient under the uniform distribution.
AlphaCensus enumerate_alpha_classes(const Eigen::MatrixXd& alphabet, const SearchOptions& options = {});

/// Number of labelings with an exact first-order-optimal verdict, plus the
/// first witness found.
struct FooCount {
    std::uint64_t count = 0;
    std::vector<int> first_witness;  // empty when count is 0
};
FooCount count_foo_labelings(const Eigen::MatrixXd& alphabet, const SearchOptions& options = {});

/// Number of distinct multiplicities in the census histogram.
std::size_t distinct_value_count_of_pmf(const AlphaCensus& census);

/// Labeling that assigns codeword `permutation[i]` (as NBC bits) to symbol i.
Labeling labeling_from_permutation(const std::vector<int>& permutation);

}  // namespace bicm

#endif
