#pragma once

#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>

#include "ewl/game.hpp"

namespace ewl {

/// Malformed game files or strategy/profile descriptions.
struct GameFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A game file: players, outcome-keyed payoff table, optional metadata.
struct GameSpec {
    Game game;
    std::string name;
    std::string description;
};

/// "NNN", "NNF", ... for an outcome index (player 1 leftmost).
std::string outcome_label(int n_players, std::size_t index);

/// Inverse of outcome_label; throws GameFileError on a bad label.
std::size_t outcome_index(const std::string& label);

/// Parses the JSON game format:
///   { "players": 3, "name": "...", "description": "...",
///     "payoffs": { "NNN": [3,3,3], ... } }
/// Every outcome key must appear with exactly n finite payoffs.
GameSpec parse_game_spec(const std::string& text);

GameSpec load_game_file(const std::filesystem::path& path);

/// One pure strategy: "N", "F", "random" (Haar draw from rng) or a
/// quadruple "a0,a1,b0,b1". Syntax errors throw GameFileError; a
/// well-formed but non-unit quadruple throws std::invalid_argument.
SU2Strategy parse_strategy(const std::string& token, Complex eta,
                           std::mt19937_64* rng = nullptr);

/// A mixed strategy: "haar", a single pure strategy, or weighted
/// components like "0.5:N+0.5:F" (weights must sum to 1).
MixedQuantumStrategy parse_mixture(const std::string& text, Complex eta);

}  // namespace ewl
