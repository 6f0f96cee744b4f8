#include "bicm/gauss_hermite.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bicm {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
// Hermite recurrence, weights come from the first eigenvector components.
// Stable for orders well beyond what Newton iteration on the recurrence
// handles (edge weights underflow to zero harmlessly).
GaussHermiteRule compute_rule(int order) {
    Eigen::VectorXd diagonal = Eigen::VectorXd::Zero(order);
    Eigen::VectorXd subdiagonal(order - 1);
    for (int j = 1; j < order; ++j) subdiagonal(j - 1) = std::sqrt(0.5 * j);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diagonal, subdiagonal, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Gauss-Hermite eigendecomposition failed");

    GaussHermiteRule rule;
    rule.nodes = solver.eigenvalues();
    rule.weights.resize(order);
    const double total = std::sqrt(std::numbers::pi);
    for (int i = 0; i < order; ++i) {
        const double first = solver.eigenvectors()(0, i);
        rule.weights(i) = total * first * first;
    }
    return rule;
}

}  // namespace

GaussHermiteRule gauss_hermite(int order) {
    if (order < 2) throw std::domain_error("Gauss-Hermite order must be at least 2");
    static std::mutex mutex;
    static std::map<int, GaussHermiteRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

}  // namespace bicm
