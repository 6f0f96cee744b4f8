#include "bicm/hadamard.hpp"

#include "bicm/labeling.hpp"

namespace bicm {

Eigen::MatrixXi hadamard_matrix(Eigen::Index size) {
    if (!is_power_of_two(size)) throw std::domain_error("Hadamard matrix size must be a power of two");
    Eigen::MatrixXi h(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j) h(i, j) = hadamard_entry(i, j);
    return h;
}

Eigen::MatrixXd ht(const Eigen::MatrixXd& x) {
    Eigen::MatrixXd out = x;
    fwht_in_place(out);
    out /= static_cast<double>(x.rows());
    return out;
}

Eigen::MatrixXd inverse_ht(const Eigen::MatrixXd& spectrum) {
    Eigen::MatrixXd out = spectrum;
    fwht_in_place(out);
    return out;
}

bool nbc_column_identity_check(int order) {
    if (order < 1) throw std::domain_error("order must be >= 1");
    const Eigen::MatrixXi q = modified_matrix(nbc(order));
    const Eigen::Index rows = q.rows();
    for (int k = 0; k < order; ++k) {
        const Eigen::Index col = Eigen::Index{1} << k;
        for (Eigen::Index i = 0; i < rows; ++i)
            if (q(i, k) != hadamard_entry(i, col)) return false;
    }
    return true;
}

}  // namespace bicm
