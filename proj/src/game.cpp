#include "ewl/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ewl/oracle.hpp"

namespace ewl {

namespace {

void require_profile_arity(const Game& game, std::size_t arity) {
    if (arity != static_cast<std::size_t>(game.n_players))
        throw std::invalid_argument("profile arity must match the player count");
}

void require_valid_mixture(const MixedQuantumStrategy& m) {
    if (m.haar) {
        if (!m.support.empty())
            throw std::invalid_argument("Haar-uniform strategy cannot carry a finite support");
        return;
    }
    if (m.support.empty()) throw std::invalid_argument("mixture needs at least one component");
    double total = 0.0;
    for (const auto& [w, s] : m.support) {
        if (w < 0.0) throw std::invalid_argument("mixture weights must be non-negative");
        if (!is_unit(s)) throw std::invalid_argument("mixture component violates unit invariant");
        total += w;
    }
    if (std::abs(total - 1.0) > kUnitTolerance)
        throw std::invalid_argument("mixture weights must sum to 1");
}

double dot_payoff(const Game& game, const OutcomeDistribution& d, int player) {
    double v = 0.0;
    for (std::size_t k = 0; k < d.p.size(); ++k)
        v += d.p[k] * game.payoffs[k][static_cast<std::size_t>(player)];
    return v;
}

OutcomeDistribution profile_distribution(const Game& game,
                                         std::span<const SU2Strategy> strategies) {
    if (game.n_players == 3)
        return three_player_distribution(strategies[0], strategies[1], strategies[2]);
    return two_player_distribution(strategies[0], strategies[1]);
}

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};

MeanSe mean_and_se(const std::vector<double>& values) {
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (const double v : values) mean += v;
    mean /= n;
    if (values.size() < 2) return {mean, 0.0};
    double var = 0.0;
    for (const double v : values) var += (v - mean) * (v - mean);
    var /= (n - 1.0);
    return {mean, std::sqrt(var / n)};
}

/// Pre-drawn evaluation scenarios for one mixed profile: Haar components
/// get one sample per draw, finite supports are enumerated exactly.
class ProfileEvaluator {
  public:
    ProfileEvaluator(const Game& game, const std::vector<MixedQuantumStrategy>& profile,
                     std::size_t draws, std::uint64_t seed)
        : game_(game), n_(static_cast<std::size_t>(game.n_players)) {
        require_profile_arity(game, profile.size());
        for (const auto& m : profile) require_valid_mixture(m);

        for (std::size_t p = 0; p < n_; ++p)
            if (profile[p].haar) haar_slots_.push_back(p);

        draw_count_ = haar_slots_.empty() ? 1 : std::max<std::size_t>(draws, 1);
        std::mt19937_64 rng(seed);
        haar_samples_.reserve(draw_count_ * haar_slots_.size());
        for (std::size_t d = 0; d < draw_count_; ++d)
            for (std::size_t m = 0; m < haar_slots_.size(); ++m)
                haar_samples_.push_back(haar_sample(rng));

        // Cartesian product of the finite supports, zero-weight terms dropped.
        combos_.push_back({1.0, {}});
        for (std::size_t p = 0; p < n_; ++p) {
            if (profile[p].haar) continue;
            std::vector<Combo> next;
            for (const auto& combo : combos_) {
                for (const auto& [w, s] : profile[p].support) {
                    if (w == 0.0) continue;
                    Combo extended = combo;
                    extended.weight *= w;
                    extended.assignment.emplace_back(p, s);
                    next.push_back(std::move(extended));
                }
            }
            combos_ = std::move(next);
        }
    }

    std::size_t draw_count() const { return draw_count_; }
    bool stochastic() const { return !haar_slots_.empty(); }

    bool opponents_stochastic(std::size_t actor) const {
        for (const std::size_t p : haar_slots_)
            if (p != actor) return true;
        return false;
    }

    /// Payoff of `objective` on draw d when `actor` plays s instead of its
    /// profile component.
    double deviated_value(std::size_t actor, const SU2Strategy& s, int objective,
                          std::size_t d) const {
        std::array<SU2Strategy, 3> tuple{};
        fill_haar(tuple, d);
        double acc = 0.0;
        for (const auto& combo : combos_) {
            for (const auto& [p, strat] : combo.assignment) tuple[p] = strat;
            tuple[actor] = s;
            acc += combo.weight * value_of(tuple, objective);
        }
        return acc;
    }

    /// Payoff of `objective` on draw d under the profile as given.
    double profile_value(int objective, std::size_t d) const {
        std::array<SU2Strategy, 3> tuple{};
        fill_haar(tuple, d);
        double acc = 0.0;
        for (const auto& combo : combos_) {
            for (const auto& [p, strat] : combo.assignment) tuple[p] = strat;
            acc += combo.weight * value_of(tuple, objective);
        }
        return acc;
    }

    double deviated_mean(std::size_t actor, const SU2Strategy& s, int objective) const {
        double acc = 0.0;
        for (std::size_t d = 0; d < draw_count_; ++d) acc += deviated_value(actor, s, objective, d);
        return acc / static_cast<double>(draw_count_);
    }

  private:
    struct Combo {
        double weight = 1.0;
        std::vector<std::pair<std::size_t, SU2Strategy>> assignment;
    };

    void fill_haar(std::array<SU2Strategy, 3>& tuple, std::size_t d) const {
        for (std::size_t m = 0; m < haar_slots_.size(); ++m)
            tuple[haar_slots_[m]] = haar_samples_[d * haar_slots_.size() + m];
    }

    double value_of(const std::array<SU2Strategy, 3>& tuple, int objective) const {
        const OutcomeDistribution dist =
            profile_distribution(game_, std::span<const SU2Strategy>(tuple.data(), n_));
        return dot_payoff(game_, dist, objective);
    }

    const Game& game_;
    std::size_t n_;
    std::vector<std::size_t> haar_slots_;
    std::vector<SU2Strategy> haar_samples_;
    std::vector<Combo> combos_;
    std::size_t draw_count_ = 1;
};

SU2Strategy strategy_from_angles(double theta, double phi, double psi) {
    return {std::polar(std::cos(theta / 2.0), phi), std::polar(std::sin(theta / 2.0), psi)};
}

/// Grid + coordinate-descent search over (theta, phi, psi). `sign` is +1 to
/// maximize the objective, -1 to minimize it. The stop rule is step-size
/// based, which keeps the selected argmax invariant under positive affine
/// payoff transforms.
BestResponse search_response(const Game& game, std::size_t actor, int objective, double sign,
                             const std::vector<MixedQuantumStrategy>& profile,
                             const SearchConfig& config) {
    require_profile_arity(game, profile.size());
    if (actor >= static_cast<std::size_t>(game.n_players))
        throw std::invalid_argument("player index out of range");

    ProfileEvaluator search_ev(game, profile,
                               config.search_samples, derive_seed(config.seed, 0x5ea7c4 + actor));
    const std::size_t search_draws = search_ev.opponents_stochastic(actor)
                                         ? search_ev.draw_count()
                                         : 1;

    const auto objective_of = [&](double theta, double phi, double psi) {
        const SU2Strategy s = strategy_from_angles(theta, phi, psi);
        double acc = 0.0;
        for (std::size_t d = 0; d < search_draws; ++d)
            acc += search_ev.deviated_value(actor, s, objective, d);
        return sign * acc / static_cast<double>(search_draws);
    };

    struct Start {
        double theta, phi, psi, value;
    };
    std::vector<Start> starts;
    const double pi = std::numbers::pi;
    for (int i = 0; i < config.theta_grid; ++i) {
        const double theta = (i + 0.5) * pi / config.theta_grid;
        for (int j = 0; j < config.phi_grid; ++j) {
            const double phi = 2.0 * pi * j / config.phi_grid;
            for (int k = 0; k < config.psi_grid; ++k) {
                const double psi = 2.0 * pi * k / config.psi_grid;
                starts.push_back({theta, phi, psi, objective_of(theta, phi, psi)});
            }
        }
    }
    std::stable_sort(starts.begin(), starts.end(),
                     [](const Start& a, const Start& b) { return a.value > b.value; });
    const std::size_t n_starts =
        std::min<std::size_t>(starts.size(), static_cast<std::size_t>(config.refine_starts));

    Start best = starts.front();
    for (std::size_t si = 0; si < n_starts; ++si) {
        Start cur = starts[si];
        std::array<double, 3> angles{cur.theta, cur.phi, cur.psi};
        std::array<double, 3> steps{pi / (2.0 * config.theta_grid),
                                    pi / config.phi_grid, pi / config.psi_grid};
        while (*std::max_element(steps.begin(), steps.end()) > config.step_tolerance) {
            bool improved = false;
            for (std::size_t c = 0; c < 3; ++c) {
                while (true) {
                    bool moved = false;
                    for (const double dir : {+1.0, -1.0}) {
                        std::array<double, 3> trial = angles;
                        trial[c] += dir * steps[c];
                        const double v = objective_of(trial[0], trial[1], trial[2]);
                        if (v > cur.value) {
                            angles = trial;
                            cur.value = v;
                            moved = true;
                            improved = true;
                            break;
                        }
                    }
                    if (!moved) break;
                }
            }
            if (!improved)
                for (double& st : steps) st *= 0.5;
        }
        cur.theta = angles[0];
        cur.phi = angles[1];
        cur.psi = angles[2];
        if (cur.value > best.value) best = cur;
    }

    BestResponse out;
    out.strategy = strategy_from_angles(best.theta, best.phi, best.psi);
    std::vector<double> values(search_draws);
    for (std::size_t d = 0; d < search_draws; ++d)
        values[d] = search_ev.deviated_value(actor, out.strategy, objective, d);
    const MeanSe ms = mean_and_se(values);
    out.value = ms.mean;
    out.std_error = ms.se;
    return out;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    // splitmix64 step over seed xor golden-ratio-multiplied tag
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (tag + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Game Game::create(int n_players, std::vector<std::vector<double>> payoffs) {
    if (n_players != 2 && n_players != 3)
        throw std::invalid_argument("supported player counts are 2 and 3");
    const std::size_t expected = std::size_t{1} << n_players;
    if (payoffs.size() != expected)
        throw std::invalid_argument("payoff table must cover every outcome exactly once");
    for (const auto& row : payoffs) {
        if (row.size() != static_cast<std::size_t>(n_players))
            throw std::invalid_argument("each outcome needs one payoff per player");
        for (const double v : row)
            if (!std::isfinite(v)) throw std::invalid_argument("payoffs must be finite");
    }
    Game g;
    g.n_players = n_players;
    g.payoffs = std::move(payoffs);
    return g;
}

std::vector<double> Game::outcome_average() const {
    std::vector<double> avg(static_cast<std::size_t>(n_players), 0.0);
    for (const auto& row : payoffs)
        for (std::size_t p = 0; p < avg.size(); ++p) avg[p] += row[p];
    for (double& v : avg) v /= static_cast<double>(payoffs.size());
    return avg;
}

double Game::payoff_range() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& row : payoffs)
        for (const double v : row) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    return hi - lo;
}

std::vector<double> quantum_payoff(const Game& game, std::span<const SU2Strategy> strategies) {
    require_profile_arity(game, strategies.size());
    const OutcomeDistribution dist = profile_distribution(game, strategies);
    std::vector<double> out(static_cast<std::size_t>(game.n_players));
    for (int p = 0; p < game.n_players; ++p)
        out[static_cast<std::size_t>(p)] = dot_payoff(game, dist, p);
    return out;
}

std::vector<double> classical_payoff(const Game& game, const std::vector<bool>& flips) {
    require_profile_arity(game, flips.size());
    std::size_t idx = 0;
    for (const bool f : flips) idx = (idx << 1) | (f ? 1u : 0u);
    return game.payoffs[idx];
}

std::vector<double> gmix_payoff(const Game& game, const std::vector<double>& flip_probs) {
    require_profile_arity(game, flip_probs.size());
    for (const double r : flip_probs)
        if (!(r >= 0.0 && r <= 1.0))
            throw std::invalid_argument("flip probabilities must lie in [0, 1]");
    std::vector<double> out(static_cast<std::size_t>(game.n_players), 0.0);
    for (std::size_t k = 0; k < game.outcome_count(); ++k) {
        double w = 1.0;
        for (int j = 0; j < game.n_players; ++j) {
            const bool flip = ((k >> (game.n_players - 1 - j)) & 1u) != 0;
            const double r = flip_probs[static_cast<std::size_t>(j)];
            w *= flip ? r : (1.0 - r);
        }
        for (std::size_t p = 0; p < out.size(); ++p) out[p] += w * game.payoffs[k][p];
    }
    return out;
}

PayoffEstimate mixed_quantum_payoff(const Game& game,
                                    const std::vector<MixedQuantumStrategy>& profile,
                                    std::size_t num_samples, std::uint64_t seed) {
    if (num_samples < 1) throw std::invalid_argument("num_samples must be at least 1");
    ProfileEvaluator ev(game, profile, num_samples, seed);

    PayoffEstimate est;
    est.exact = !ev.stochastic();
    est.samples_used = est.exact ? 0 : ev.draw_count();
    est.value.resize(static_cast<std::size_t>(game.n_players));
    est.std_error.assign(static_cast<std::size_t>(game.n_players), 0.0);
    for (int p = 0; p < game.n_players; ++p) {
        std::vector<double> values(ev.draw_count());
        for (std::size_t d = 0; d < ev.draw_count(); ++d) values[d] = ev.profile_value(p, d);
        const MeanSe ms = mean_and_se(values);
        est.value[static_cast<std::size_t>(p)] = ms.mean;
        est.std_error[static_cast<std::size_t>(p)] = est.exact ? 0.0 : ms.se;
    }
    return est;
}

CompletenessReport completeness_check(const Game& game, int grid_per_axis, double tol) {
    if (grid_per_axis < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
    const Complex eta = canonical_eta(game.n_players);
    const SU2Strategy n_strat = SU2Strategy::no_flip();
    const SU2Strategy f_strat = SU2Strategy::flip(eta);

    CompletenessReport report;
    const std::size_t n = static_cast<std::size_t>(game.n_players);
    std::vector<int> grid_index(n, 0);
    while (true) {
        std::vector<double> flip_probs(n);
        std::vector<MixedQuantumStrategy> profile;
        for (std::size_t j = 0; j < n; ++j) {
            const double r = static_cast<double>(grid_index[j]) / (grid_per_axis - 1);
            flip_probs[j] = r;
            std::vector<std::pair<double, SU2Strategy>> comps;
            if (r < 1.0) comps.emplace_back(1.0 - r, n_strat);
            if (r > 0.0) comps.emplace_back(r, f_strat);
            profile.push_back(MixedQuantumStrategy::mixture(std::move(comps)));
        }
        const PayoffEstimate est = mixed_quantum_payoff(game, profile, 1, 0);
        const std::vector<double> expected = gmix_payoff(game, flip_probs);
        for (std::size_t p = 0; p < expected.size(); ++p)
            report.max_deviation =
                std::max(report.max_deviation, std::abs(est.value[p] - expected[p]));
        ++report.grid_points;

        std::size_t j = 0;
        for (; j < n; ++j) {
            if (++grid_index[j] < grid_per_axis) break;
            grid_index[j] = 0;
        }
        if (j == n) break;
    }
    report.pass = report.max_deviation <= tol;
    return report;
}

BestResponse best_response(const Game& game, int player,
                           const std::vector<MixedQuantumStrategy>& profile,
                           const SearchConfig& config) {
    return search_response(game, static_cast<std::size_t>(player), player, +1.0, profile, config);
}

BestResponse minimizing_response(const Game& game, int adversary, int target,
                                 const std::vector<MixedQuantumStrategy>& profile,
                                 const SearchConfig& config) {
    BestResponse r = search_response(game, static_cast<std::size_t>(adversary), target, -1.0,
                                     profile, config);
    return r;
}

EquilibriumReport verify_equilibrium(const Game& game,
                                     const std::vector<MixedQuantumStrategy>& profile,
                                     std::optional<double> epsilon,
                                     const SearchConfig& config) {
    require_profile_arity(game, profile.size());
    const std::size_t n = static_cast<std::size_t>(game.n_players);

    EquilibriumReport report;
    report.profile = profile;
    report.samples = config.samples;
    report.seed = config.seed;

    const PayoffEstimate base =
        mixed_quantum_payoff(game, profile, config.samples, derive_seed(config.seed, 0xba5e));
    report.payoff = base.value;
    report.payoff_std_error = base.std_error;
    report.exact = base.exact;

    report.confirmed = true;
    for (std::size_t i = 0; i < n; ++i) {
        SearchConfig search_cfg = config;
        search_cfg.seed = derive_seed(config.seed, 2 * i);
        const BestResponse br = best_response(game, static_cast<int>(i), profile, search_cfg);
        report.best_reply.push_back(br.strategy);

        // Out-of-sample gain: fresh draws, paired difference.
        ProfileEvaluator eval_ev(game, profile, config.samples,
                                 derive_seed(config.seed, 2 * i + 1));
        std::vector<double> diffs(eval_ev.draw_count());
        for (std::size_t d = 0; d < eval_ev.draw_count(); ++d)
            diffs[d] = eval_ev.deviated_value(i, br.strategy, static_cast<int>(i), d) -
                       eval_ev.profile_value(static_cast<int>(i), d);
        const MeanSe ms = mean_and_se(diffs);

        const double gain = std::max(0.0, ms.mean);
        const double eps = epsilon ? *epsilon
                                   : std::max(config.payoff_tolerance, 3.0 * ms.se);
        report.gain.push_back(gain);
        report.gain_std_error.push_back(ms.se);
        report.epsilon.push_back(eps);
        if (gain > eps) report.confirmed = false;
    }
    return report;
}

MaximinReport maximin_check(const Game& game, int player, const SearchConfig& config) {
    if (game.n_players != 2)
        throw std::invalid_argument("maximin analysis is defined for two-player games");
    const int adversary = 1 - player;
    const Complex eta = canonical_eta(2);

    const std::vector<std::pair<std::string, MixedQuantumStrategy>> candidates = {
        {"haar", MixedQuantumStrategy::haar_uniform()},
        {"N", MixedQuantumStrategy::pure(SU2Strategy::no_flip())},
        {"F", MixedQuantumStrategy::pure(SU2Strategy::flip(eta))},
    };

    MaximinReport report;
    report.outcome_average = game.outcome_average()[static_cast<std::size_t>(player)];
    report.value = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const auto& [label, candidate] = candidates[c];
        std::vector<MixedQuantumStrategy> profile(2, MixedQuantumStrategy::pure(
                                                         SU2Strategy::no_flip()));
        profile[static_cast<std::size_t>(player)] = candidate;

        SearchConfig search_cfg = config;
        search_cfg.seed = derive_seed(config.seed, 100 + 2 * c);
        const BestResponse reply =
            minimizing_response(game, adversary, player, profile, search_cfg);

        profile[static_cast<std::size_t>(adversary)] = MixedQuantumStrategy::pure(reply.strategy);
        const PayoffEstimate guarantee = mixed_quantum_payoff(
            game, profile, config.samples, derive_seed(config.seed, 100 + 2 * c + 1));

        const double value = guarantee.value[static_cast<std::size_t>(player)];
        report.candidate_values.emplace_back(label, value);
        if (value > report.value) {
            report.value = value;
            report.std_error = guarantee.std_error[static_cast<std::size_t>(player)];
            report.best_candidate = label;
        }
    }
    return report;
}

}  // namespace ewl
