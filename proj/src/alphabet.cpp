#include "bicm/alphabet.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bicm/util.hpp"

namespace bicm {

Eigen::MatrixXd pam(Eigen::Index size) {
    if (size < 2 || !is_power_of_two(size)) throw std::domain_error("PAM size must be a power of two >= 2");
    Eigen::MatrixXd x(size, 1);
    for (Eigen::Index i = 0; i < size; ++i) x(i, 0) = -static_cast<double>(size - 2 * i - 1);
    return x;
}

Eigen::MatrixXd psk(Eigen::Index size) {
    if (size < 2 || !is_power_of_two(size)) throw std::domain_error("PSK size must be a power of two >= 2");
    Eigen::MatrixXd x(size, 2);
    for (Eigen::Index i = 0; i < size; ++i) {
        const double angle = (2.0 * static_cast<double>(i) + 1.0) * std::numbers::pi / static_cast<double>(size);
        x(i, 0) = std::cos(angle);
        x(i, 1) = std::sin(angle);
    }
    return x;
}

Eigen::MatrixXd qam(Eigen::Index size_a, Eigen::Index size_b) {
    const Eigen::MatrixXd a = pam(size_a);
    const Eigen::MatrixXd b = pam(size_b);
    Eigen::MatrixXd x(size_a * size_b, 2);
    for (Eigen::Index i = 0; i < size_a; ++i)
        for (Eigen::Index j = 0; j < size_b; ++j) {
            x(size_b * i + j, 0) = a(i, 0);
            x(size_b * i + j, 1) = b(j, 0);
        }
    return x;
}

Eigen::MatrixXd hierarchical_pam(const std::vector<double>& distances) {
    const int order = static_cast<int>(distances.size());
    if (order < 1) throw std::domain_error("hierarchical PAM needs at least one distance");
    for (int k = 0; k < order; ++k)
        if (!(distances[static_cast<std::size_t>(k)] > 0.0))
            throw std::domain_error("hierarchical PAM distance d_" + std::to_string(k) + " must be positive");
    const Eigen::Index rows = Eigen::Index{1} << order;
    Eigen::MatrixXd x(rows, 1);
    for (Eigen::Index i = 0; i < rows; ++i) {
        double point = 0.0;
        for (int k = 0; k < order; ++k) point += (2.0 * static_cast<double>((i >> k) & 1) - 1.0) * distances[static_cast<std::size_t>(k)];
        x(i, 0) = point;
    }
    for (Eigen::Index i = 0; i + 1 < rows; ++i)
        if (!(x(i, 0) < x(i + 1, 0)))
            throw std::domain_error("hierarchical PAM points overlap at index " + std::to_string(i) +
                                    " (x_i must be strictly increasing)");
    return x;
}

Eigen::MatrixXd from_projection(const Labeling& l, const Eigen::MatrixXd& v) {
    if (v.rows() != l.order()) throw std::domain_error("projection matrix must have one row per bit position");
    if (!v.allFinite()) throw std::domain_error("projection matrix must be finite");
    return modified_matrix(l).cast<double>() * v;
}

Eigen::MatrixXd parse_alphabet_csv(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            std::size_t used = 0;
            const double value = std::stod(field, &used);
            row.push_back(value);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::domain_error("alphabet CSV rows must all have the same number of columns");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::domain_error("alphabet CSV is empty");
    Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index n = 0; n < x.cols(); ++n)
            x(i, n) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
    if (!x.allFinite()) throw std::domain_error("alphabet coordinates must be finite");
    return x;
}

Eigen::MatrixXd load_alphabet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open alphabet file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_alphabet_csv(buffer.str());
}

}  // namespace bicm
