#pragma once

#include "ewl/algebra.hpp"
#include "ewl/quantum.hpp"

namespace ewl {

/// Real coefficients of a player's SU(2) entries a = a0 + a1 i,
/// b = b0 + b1 i, with a0^2 + a1^2 + b0^2 + b1^2 = 1.
struct StrategyCoefficients {
    double a0 = 0.0;
    double a1 = 0.0;
    double b0 = 0.0;
    double b1 = 0.0;

    static StrategyCoefficients from(const SU2Strategy& s) {
        return {s.a.real(), s.a.imag(), s.b.real(), s.b.imag()};
    }
};

inline double unit_defect(const StrategyCoefficients& c) {
    return std::abs(c.a0 * c.a0 + c.a1 * c.a1 + c.b0 * c.b0 + c.b1 * c.b1 - 1.0);
}

/// Sign-variant subscripts of the octonionic embeddings: flip_first negates
/// the a0 coefficient, flip_second negates a1 (0 = keep, 1 = negate).
struct SignFlags {
    bool flip_first = false;
    bool flip_second = false;
};

/// Octonionic image of one player's strategy: the unit quaternion
/// (+-a0, +-a1, (sqrt(3)/2) b0 - (1/2) b1, (1/2) b0 + (sqrt(3)/2) b1)
/// embedded into H1, H2 or H3 for players 1, 2, 3, i.e. the form
/// A + B conj(eta) i_k with eta = 1/2 + (sqrt(3)/2) i and i_k = i4/i6/i7.
/// Throws std::invalid_argument on a bad player index or non-unit
/// coefficients.
Octonion embed_player(int player, const StrategyCoefficients& c, SignFlags flags);

/// The four octonions whose projections carry the outcome probabilities:
/// x_pm = [(s10 t10)u01 +- (s01 t10)u01] / 2,
/// y_pm = [(s01 t00)u00 +- (s10 t00)u00] / 2,
/// with all triple products left-parenthesized.
struct TripleProducts {
    Octonion x_plus, x_minus, y_plus, y_minus;
};

TripleProducts strategy_triple_products(const StrategyCoefficients& c1,
                                        const StrategyCoefficients& c2,
                                        const StrategyCoefficients& c3);

/// Closed-form outcome distribution of the three-player maximally entangled
/// game: pr(NNN) = pi_0(x+)^2 + pi_0(x-)^2, pr(FFF) = pi_1, pr(FFN) = pi_3,
/// pr(NNF) = pi_7 on the x pair; pr(NFF) = pi_2, pr(FNN) = pi_4,
/// pr(FNF) = pi_5, pr(NFN) = pi_6 on the y pair. Agrees with the
/// state-vector simulator.
OutcomeDistribution three_player_distribution(const StrategyCoefficients& c1,
                                              const StrategyCoefficients& c2,
                                              const StrategyCoefficients& c3);

inline OutcomeDistribution three_player_distribution(const SU2Strategy& s1,
                                                     const SU2Strategy& s2,
                                                     const SU2Strategy& s3) {
    return three_player_distribution(StrategyCoefficients::from(s1),
                                     StrategyCoefficients::from(s2),
                                     StrategyCoefficients::from(s3));
}

/// Quaternionic closed form for the two-player game: with
/// eta = (1+i)/sqrt(2), player 1 maps to the unit quaternion
/// A + (B conj(eta)) j and player 2 to P - (conj(Q) conj(eta)) j; the
/// squared coefficients of their product give the distribution in the
/// coefficient order (1, i, j, k) -> (NN, FF, FN, NF). Agrees with the
/// state-vector simulator.
OutcomeDistribution two_player_distribution(const SU2Strategy& s1, const SU2Strategy& s2);

/// Reports the largest |pi_j| of each pair on the indices read by the
/// other pair: j in {2,4,5,6} for x_pm, j in {0,1,3,7} for y_pm. These
/// magnitudes vanish on the classical x-group profiles but not in general:
/// the two pairs split the unit weight between them, so
/// sum_{2,4,5,6}(x pair)^2 + sum_{0,1,3,7}(y pair)^2 = 1, and pi_0, pi_1 of
/// x_plus and y_plus coincide on the common complex line.
struct ProjectionReport {
    double max_unused_x = 0.0;
    double max_unused_y = 0.0;
};

ProjectionReport vanishing_projection_report(const StrategyCoefficients& c1,
                                             const StrategyCoefficients& c2,
                                             const StrategyCoefficients& c3);

}  // namespace ewl
