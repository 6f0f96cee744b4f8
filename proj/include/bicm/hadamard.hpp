#ifndef BICM_HADAMARD_HPP
#define BICM_HADAMARD_HPP

#include <Eigen/Dense>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "bicm/util.hpp"

namespace bicm {

/// Entry (i, j) of the natural-order Hadamard matrix, computed on the fly.
inline int hadamard_entry(std::int64_t i, std::int64_t j) {
    return (std::popcount(static_cast<std::uint64_t>(i & j)) & 1) ? -1 : 1;
}

/// Materialized Hadamard matrix of power-of-two size.
Eigen::MatrixXi hadamard_matrix(Eigen::Index size);

/// In-place butterfly computing H * X along the row dimension, O(M log M)
/// per coordinate. Works on any scalar (integer matrices stay exact).
template <typename Scalar>
void fwht_in_place(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& x) {
    const Eigen::Index rows = x.rows();
    if (!is_power_of_two(rows)) throw std::domain_error("transform length must be a power of two");
    for (Eigen::Index half = 1; half < rows; half *= 2) {
        for (Eigen::Index block = 0; block < rows; block += 2 * half) {
            for (Eigen::Index j = block; j < block + half; ++j) {
                for (Eigen::Index c = 0; c < x.cols(); ++c) {
                    const Scalar a = x(j, c);
                    const Scalar b = x(j + half, c);
                    x(j, c) = a + b;
                    x(j + half, c) = a - b;
                }
            }
        }
    }
}

/// Forward transform (1/M) H X of an alphabet matrix; row j of the result is
/// the spectral coefficient at index j.
Eigen::MatrixXd ht(const Eigen::MatrixXd& x);

/// Inverse transform H X~ recovering the alphabet.
Eigen::MatrixXd inverse_ht(const Eigen::MatrixXd& spectrum);

/// Column k of the modified NBC matrix equals Hadamard column 2^k.
bool nbc_column_identity_check(int order);

}  // namespace bicm

#endif
