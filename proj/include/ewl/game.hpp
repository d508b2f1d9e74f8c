#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ewl/closed_form.hpp"
#include "ewl/quantum.hpp"

namespace ewl {

/// A finite n-player game with two strategies per player: one payoff vector
/// (one entry per player) for each of the 2^n outcomes, indexed in the
/// standard binary order (player 1 = most significant bit, N=0, F=1).
struct Game {
    int n_players = 0;
    std::vector<std::vector<double>> payoffs;

    /// Validates shape and finiteness; throws std::invalid_argument.
    static Game create(int n_players, std::vector<std::vector<double>> payoffs);

    std::size_t outcome_count() const { return payoffs.size(); }
    std::vector<double> outcome_average() const;
    double payoff_range() const;
};

/// Expected payoffs of a pure quantum profile under the closed-form
/// distribution (three players: octonionic map; two players: quaternionic).
std::vector<double> quantum_payoff(const Game& game, std::span<const SU2Strategy> strategies);

/// Payoff vector of a classical pure profile (false = N, true = F).
std::vector<double> classical_payoff(const Game& game, const std::vector<bool>& flips);

/// Expected payoffs under independent classical mixtures: player j flips
/// with probability flip_probs[j]. Throws on probabilities outside [0,1].
std::vector<double> gmix_payoff(const Game& game, const std::vector<double>& flip_probs);

struct PayoffEstimate {
    std::vector<double> value;
    std::vector<double> std_error;
    bool exact = false;
    std::size_t samples_used = 0;
};

/// Expected payoffs of a mixed quantum profile. Finite supports are
/// enumerated exactly; Haar components are estimated by Monte Carlo with a
/// reported standard error of the mean.
PayoffEstimate mixed_quantum_payoff(const Game& game,
                                    const std::vector<MixedQuantumStrategy>& profile,
                                    std::size_t num_samples, std::uint64_t seed);

struct CompletenessReport {
    double max_deviation = 0.0;
    bool pass = false;
    std::size_t grid_points = 0;
};

/// Embeds each grid point of classical flip probabilities as the
/// corresponding mixed quantum strategy over {N, F} and compares the exact
/// mixed quantum payoff against the classical mixed payoff.
CompletenessReport completeness_check(const Game& game, int grid_per_axis = 5,
                                      double tol = 1e-10);

struct SearchConfig {
    int theta_grid = 5;
    int phi_grid = 8;
    int psi_grid = 8;
    int refine_starts = 3;
    double step_tolerance = 1e-4;   // radians; refinement stops below this
    double payoff_tolerance = 1e-6; // floor of the equilibrium epsilon
    std::size_t search_samples = 10000; // common-random-number draws while searching
    std::size_t samples = 100000;       // draws for payoff and gain evaluation
    std::uint64_t seed = 1;
};

struct BestResponse {
    SU2Strategy strategy;
    double value = 0.0;
    double std_error = 0.0;
};

/// Maximizes `player`'s expected payoff over SU(2) (three angles:
/// a = cos(theta/2) e^{i phi}, b = sin(theta/2) e^{i psi}) against the
/// other players' fixed mixed strategies (profile[player] is ignored).
/// Multi-start grid plus coordinate-descent refinement; deterministic for a
/// given config.
BestResponse best_response(const Game& game, int player,
                           const std::vector<MixedQuantumStrategy>& profile,
                           const SearchConfig& config);

/// Same search, but `adversary` picks the strategy that minimizes
/// `target`'s expected payoff (used by the maximin analysis).
BestResponse minimizing_response(const Game& game, int adversary, int target,
                                 const std::vector<MixedQuantumStrategy>& profile,
                                 const SearchConfig& config);

struct EquilibriumReport {
    std::vector<MixedQuantumStrategy> profile;
    std::vector<double> payoff;
    std::vector<double> payoff_std_error;
    std::vector<SU2Strategy> best_reply;
    std::vector<double> gain;           // best-reply improvement, clamped >= 0
    std::vector<double> gain_std_error; // paired-difference SE on fresh draws
    std::vector<double> epsilon;        // per-player acceptance threshold
    bool confirmed = false;
    bool exact = false;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Runs a best-response search for every player against the rest of the
/// profile. The search uses one set of common-random-number draws; the
/// reported gain is re-evaluated on a fresh draw set so search selection
/// bias cannot inflate it. Equilibrium is confirmed when every gain is at
/// most epsilon (default per player: max(payoff_tolerance, 3 x the
/// paired-difference standard error)).
EquilibriumReport verify_equilibrium(const Game& game,
                                     const std::vector<MixedQuantumStrategy>& profile,
                                     std::optional<double> epsilon,
                                     const SearchConfig& config);

struct MaximinReport {
    std::vector<std::pair<std::string, double>> candidate_values;
    std::string best_candidate;
    double value = 0.0;
    double std_error = 0.0;
    double outcome_average = 0.0;
};

/// Two-player guarantee analysis: for each candidate mixed strategy of
/// `player` (Haar uniform, pure N, pure F) the opponent searches for the
/// reply minimizing `player`'s payoff; the best guaranteed value is
/// reported next to the outcome average.
MaximinReport maximin_check(const Game& game, int player, const SearchConfig& config);

/// Deterministic stream derivation for reproducible sub-seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

}  // namespace ewl
