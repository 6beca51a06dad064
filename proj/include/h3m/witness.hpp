#pragma once

#include <Eigen/Dense>

#include "h3m/forms.hpp"

namespace h3m {

inline constexpr double kWitnessTolerance = 1e-9;

// Exact scaled basis α_1..α_p, β_1..β_q of (Q^{p+q}, I_{p,q}) adapted to the
// flag.  Which basis combinations span the flag's two subspaces depends only
// on the flag invariants, so two equivalent flags yield bases that line up
// position by position.
ScaledSystem adapted_basis(const QuadraticSpace& space, const Flag& f);

struct IsometryWitness {
    Eigen::MatrixXd matrix;     // g with g·f2 = f1
    double isometry_residual;   // max |gᵀ I_{p,q} g - I_{p,q}|
    double small_distance;      // max |P(g·small2) - P(small1)|
    double big_distance;        // max |P(g·big2) - P(big1)|
};

// Throws PreconditionError (naming the differing invariant) for inequivalent
// flags and WitnessFailure when any residual exceeds kWitnessTolerance.
IsometryWitness isometry_witness(int p, int q, const Flag& f1, const Flag& f2);

// Euclidean orthogonal projector onto span(columns of A).
Eigen::MatrixXd projector(const Eigen::MatrixXd& A);
Eigen::MatrixXd to_double(const Mat& m);

} // namespace h3m
