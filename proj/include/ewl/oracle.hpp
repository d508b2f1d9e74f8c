#pragma once

#include <span>
#include <vector>

#include "ewl/quantum.hpp"

namespace ewl {

/// Ground-truth state-vector simulator for the maximally entangled EWL
/// protocol: shared state (|0..0> + |1..1>)/sqrt(2), local SU(2) actions,
/// measurement in the basis of transformed classical outcomes.
struct EwlInstance {
    int n_players = 0;
    Complex eta;
    StateVector initial;
    std::vector<StateVector> outcome_basis;
};

/// The phase that makes the outcome frame orthogonal: (1+i)/sqrt(2) for two
/// players (an 8th root of unity with eta^4 = -1), 1/2 + (sqrt(3)/2) i for
/// three (a primitive 6th root of unity). Throws for other player counts.
Complex canonical_eta(int n_players);

/// Builds the initial state and the 2^n outcome states
/// (X_1 (x) ... (x) X_n) |initial>, X_j = N or F per bit (n-j) of the
/// outcome index. Orthogonality is not required at build time, so
/// non-canonical eta values can be probed. Throws unless |eta| = 1.
EwlInstance build_instance(int n_players, Complex eta);

/// Gram matrix of the (normalized) outcome frame.
std::vector<std::vector<Complex>> gram_matrix(const EwlInstance& inst);

/// Largest |G[j][k]|, j != k, of the Gram matrix.
double max_gram_off_diagonal(const EwlInstance& inst);

/// Largest |G[j][j] - 1|.
double max_gram_diagonal_defect(const EwlInstance& inst);

inline bool is_orthogonal(const EwlInstance& inst, double tol = 1e-10) {
    return max_gram_off_diagonal(inst) <= tol;
}

/// Applies the players' joint action to the initial state and measures in
/// the outcome basis. Requires an orthogonal instance and one strategy per
/// player; throws std::invalid_argument otherwise.
OutcomeDistribution simulate(const EwlInstance& inst, std::span<const SU2Strategy> strategies);

struct RestrictionReport {
    double max_deviation = 0.0;
    bool pass = false;
};

/// Checks that every classical profile in {N,F}^n reproduces its own
/// outcome as a point mass (deviation within 1e-12 entrywise).
RestrictionReport classical_restriction_check(const EwlInstance& inst);

/// Classical pure strategies as SU(2) elements for a given instance.
SU2Strategy classical_strategy(const EwlInstance& inst, bool flip);

}  // namespace ewl
