#ifndef BICM_GAUSS_HERMITE_HPP
#define BICM_GAUSS_HERMITE_HPP

#include <Eigen/Dense>

namespace bicm {

/// Nodes and weights for integrals of the form  integral e^{-t^2} f(t) dt,
/// so that the integral is approximated by sum_i w_i f(t_i). Nodes ascend.
struct GaussHermiteRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

/// Computes the rule by Newton iteration on the orthonormal Hermite
/// recurrence; stable for orders up to a few hundred.
GaussHermiteRule gauss_hermite(int order);

}  // namespace bicm

#endif
