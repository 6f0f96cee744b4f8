#ifndef BICM_ALPHABET_HPP
#define BICM_ALPHABET_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "bicm/labeling.hpp"

namespace bicm {

/// Input alphabets are M x N matrices of real coordinates, one symbol per
/// row, in dimensionless signal-space units. PAM/QAM coordinates are exact
/// small integers; nothing is normalized here.

/// Equally spaced M-PAM: x_i = -(M - 2i - 1), ascending odd integers.
Eigen::MatrixXd pam(Eigen::Index size);

/// M-PSK on the unit circle: x_i = [cos((2i+1)pi/M), sin((2i+1)pi/M)].
Eigen::MatrixXd psk(Eigen::Index size);

/// Rectangular QAM as the ordered direct product of two PAM columns.
Eigen::MatrixXd qam(Eigen::Index size_a, Eigen::Index size_b);

/// Hierarchical PAM from per-level distances: x_i = sum_k (2 b_k(i) - 1) d_k.
/// Requires strictly increasing points; throws naming the offending index.
Eigen::MatrixXd hierarchical_pam(const std::vector<double>& distances);

/// Linear projection of the labeling hypercube: X = Q(L) V with V an
/// order x N matrix. Duplicate points are permitted.
Eigen::MatrixXd from_projection(const Labeling& l, const Eigen::MatrixXd& v);

/// CSV alphabet format: one symbol per row, N columns, no header.
Eigen::MatrixXd parse_alphabet_csv(const std::string& text);
Eigen::MatrixXd load_alphabet_file(const std::string& path);

}  // namespace bicm

#endif
