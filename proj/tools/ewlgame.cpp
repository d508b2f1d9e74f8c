// Command-line front end: simulate strategy profiles, run the verification
// suites, analyze equilibria and evaluate payoffs for two- and three-player
// maximally entangled quantum games.

#include <cmath>
#include <complex>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ewl/closed_form.hpp"
#include "ewl/game.hpp"
#include "ewl/game_file.hpp"
#include "ewl/oracle.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInvariant = 3;

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::size_t samples = 100000;
    std::optional<double> tolerance;
    std::string format = "table";

    bool structured() const { return format == "structured"; }
};

std::string fmt(double v, int precision = 12) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

json game_to_json(const ewl::GameSpec& spec) {
    json payoffs = json::object();
    for (std::size_t k = 0; k < spec.game.outcome_count(); ++k)
        payoffs[ewl::outcome_label(spec.game.n_players, k)] = spec.game.payoffs[k];
    json doc;
    doc["players"] = spec.game.n_players;
    if (!spec.name.empty()) doc["name"] = spec.name;
    if (!spec.description.empty()) doc["description"] = spec.description;
    doc["payoffs"] = payoffs;
    return doc;
}

json strategy_to_json(const ewl::SU2Strategy& s) {
    return json::array({s.a.real(), s.a.imag(), s.b.real(), s.b.imag()});
}

json mixture_to_json(const ewl::MixedQuantumStrategy& m) {
    if (m.haar) return "haar";
    json comps = json::array();
    for (const auto& [w, s] : m.support)
        comps.push_back(json::object({{"weight", w}, {"strategy", strategy_to_json(s)}}));
    return comps;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string describe_game(const ewl::GameSpec& spec) {
    std::ostringstream os;
    os << (spec.name.empty() ? "(unnamed game)" : spec.name) << " (" << spec.game.n_players
       << " players)";
    return os.str();
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(const GlobalOptions& opts, const std::string& game_path,
                 const std::vector<std::string>& strategy_args) {
    const ewl::GameSpec spec = ewl::load_game_file(game_path);
    const int n = spec.game.n_players;
    if (strategy_args.size() != static_cast<std::size_t>(n))
        throw ewl::GameFileError("expected one --strategy per player");

    const ewl::Complex eta = ewl::canonical_eta(n);
    std::mt19937_64 rng(opts.seed);
    std::vector<ewl::SU2Strategy> strategies;
    for (const std::string& arg : strategy_args)
        strategies.push_back(ewl::parse_strategy(arg, eta, &rng));

    const ewl::EwlInstance instance = ewl::build_instance(n, eta);
    const ewl::OutcomeDistribution simulated = ewl::simulate(instance, strategies);
    const ewl::OutcomeDistribution closed =
        (n == 3) ? ewl::three_player_distribution(strategies[0], strategies[1], strategies[2])
                 : ewl::two_player_distribution(strategies[0], strategies[1]);
    const double linf = ewl::linf_distance(closed, simulated);
    const std::vector<double> payoff = ewl::quantum_payoff(spec.game, strategies);

    if (opts.structured()) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "simulate";
        doc["game"] = game_to_json(spec);
        doc["seed"] = opts.seed;
        json strat = json::array();
        for (const auto& s : strategies) strat.push_back(strategy_to_json(s));
        doc["strategies"] = strat;
        json outcomes = json::array();
        for (std::size_t k = 0; k < closed.p.size(); ++k)
            outcomes.push_back(ewl::outcome_label(n, k));
        doc["outcomes"] = outcomes;
        doc["closed_form"] = closed.p;
        doc["simulator"] = simulated.p;
        doc["linf_distance"] = linf;
        doc["payoffs"] = payoff;
        emit(doc);
        return kExitOk;
    }

    std::cout << "game: " << describe_game(spec) << "\n";
    for (int j = 0; j < n; ++j) {
        const auto& s = strategies[static_cast<std::size_t>(j)];
        std::cout << "player " << (j + 1) << ": a = " << fmt(s.a.real(), 6) << " + "
                  << fmt(s.a.imag(), 6) << "i, b = " << fmt(s.b.real(), 6) << " + "
                  << fmt(s.b.imag(), 6) << "i\n";
    }
    std::cout << "\noutcome   closed-form        simulator          |diff|\n";
    for (std::size_t k = 0; k < closed.p.size(); ++k) {
        std::cout << std::left << std::setw(10) << ewl::outcome_label(n, k) << std::right
                  << std::setw(16) << fmt(closed.p[k]) << "   " << std::setw(16)
                  << fmt(simulated.p[k]) << "   " << fmt(std::abs(closed.p[k] - simulated.p[k]), 3)
                  << "\n";
    }
    std::cout << "\nL-inf(closed form, simulator) = " << fmt(linf, 3) << "\n";
    std::cout << "expected payoff:";
    for (int p = 0; p < n; ++p)
        std::cout << " player" << (p + 1) << " = " << fmt(payoff[static_cast<std::size_t>(p)]);
    std::cout << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
    std::string name;
    bool pass = false;
    double deviation = 0.0;
    double threshold = 0.0;
    std::vector<std::string> detail;
};

ewl::GameSpec builtin_game(int n_players) {
    const std::size_t outcomes = std::size_t{1} << n_players;
    std::vector<std::vector<double>> payoffs(outcomes);
    for (std::size_t k = 0; k < outcomes; ++k)
        for (int p = 0; p < n_players; ++p)
            payoffs[k].push_back(n_players == 3
                                     ? static_cast<double>((5 * k + 3 * static_cast<std::size_t>(p)) % 8) - 2.0
                                     : static_cast<double>((3 * k + 2 * static_cast<std::size_t>(p)) % 5) - 1.0);
    ewl::GameSpec spec;
    spec.game = ewl::Game::create(n_players, std::move(payoffs));
    spec.name = n_players == 3 ? "builtin-3p" : "builtin-2p";
    return spec;
}

CheckResult check_fano(std::uint64_t seed) {
    CheckResult r{"fano", false, 0.0, 1e-12, {}};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const ewl::Octonion f = ewl::Octonion::unit(i) * ewl::Octonion::unit(j);
            const ewl::Octonion c =
                ewl::cayley_dickson_mul(ewl::Octonion::unit(i), ewl::Octonion::unit(j));
            for (int k = 0; k < 8; ++k)
                r.deviation = std::max(r.deviation, std::abs(f.e[static_cast<std::size_t>(k)] -
                                                             c.e[static_cast<std::size_t>(k)]));
        }
    r.detail.push_back("64/64 basis products compared against the Cayley-Dickson construction");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 1000; ++t) {
        ewl::Octonion a, b;
        for (auto& v : a.e) v = u(rng);
        for (auto& v : b.e) v = u(rng);
        const ewl::Octonion f = a * b;
        const ewl::Octonion c = ewl::cayley_dickson_mul(a, b);
        for (int k = 0; k < 8; ++k)
            r.deviation = std::max(r.deviation, std::abs(f.e[static_cast<std::size_t>(k)] -
                                                         c.e[static_cast<std::size_t>(k)]));
    }
    r.pass = r.deviation <= r.threshold;
    return r;
}

CheckResult check_orthogonality() {
    CheckResult r{"orthogonality", true, 0.0, 1e-12, {}};
    const double pi = 3.14159265358979323846;
    for (const int n : {2, 3}) {
        const ewl::EwlInstance good = ewl::build_instance(n, ewl::canonical_eta(n));
        const double off = ewl::max_gram_off_diagonal(good);
        const double diag = ewl::max_gram_diagonal_defect(good);
        r.deviation = std::max(r.deviation, std::max(off, diag));
        if (off > 1e-12 || diag > 1e-12) r.pass = false;
        r.detail.push_back("n=" + std::to_string(n) + " canonical eta: Gram defect " +
                           fmt(std::max(off, diag), 3));

        const ewl::Complex probe = std::polar(1.0, n == 3 ? pi / 4.0 : pi / 3.0);
        const double bad_off = ewl::max_gram_off_diagonal(ewl::build_instance(n, probe));
        if (bad_off <= 1e-3) r.pass = false;
        r.detail.push_back("n=" + std::to_string(n) + " probe eta=e^{i pi/" +
                           (n == 3 ? std::string("4") : std::string("3")) +
                           "}: off-diagonal " + fmt(bad_off, 3) + " (expected > 1e-3)");
    }
    const double eta_one = ewl::max_gram_off_diagonal(ewl::build_instance(3, {1.0, 0.0}));
    r.detail.push_back("n=3 eta=1 (non-primitive 6th root): off-diagonal " + fmt(eta_one, 3) +
                       " (reported, not asserted)");
    return r;
}

CheckResult check_closed_form(std::size_t samples, std::uint64_t seed, double tol) {
    CheckResult r{"closed-form", false, 0.0, tol, {}};
    std::mt19937_64 rng(seed);

    const ewl::EwlInstance inst3 = ewl::build_instance(3, ewl::canonical_eta(3));
    double worst3 = 0.0;
    std::string worst3_case;
    const auto probe3 = [&](const ewl::SU2Strategy& s1, const ewl::SU2Strategy& s2,
                            const ewl::SU2Strategy& s3, const std::string& label) {
        const std::vector<ewl::SU2Strategy> prof{s1, s2, s3};
        const double d = ewl::linf_distance(ewl::three_player_distribution(s1, s2, s3),
                                            ewl::simulate(inst3, prof));
        if (d > worst3) {
            worst3 = d;
            worst3_case = label;
        }
    };
    for (std::size_t k = 0; k < 8; ++k)
        probe3(((k >> 2) & 1) ? ewl::SU2Strategy::flip(inst3.eta) : ewl::SU2Strategy::no_flip(),
               ((k >> 1) & 1) ? ewl::SU2Strategy::flip(inst3.eta) : ewl::SU2Strategy::no_flip(),
               (k & 1) ? ewl::SU2Strategy::flip(inst3.eta) : ewl::SU2Strategy::no_flip(),
               "classical " + ewl::outcome_label(3, k));
    for (std::size_t t = 0; t < samples; ++t)
        probe3(ewl::haar_sample(rng), ewl::haar_sample(rng), ewl::haar_sample(rng),
               "random triple #" + std::to_string(t));
    r.detail.push_back("n=3: max L-inf " + fmt(worst3, 3) + " over 8 classical + " +
                       std::to_string(samples) + " random profiles (worst: " + worst3_case + ")");

    const ewl::EwlInstance inst2 = ewl::build_instance(2, ewl::canonical_eta(2));
    double worst2 = 0.0;
    const auto probe2 = [&](const ewl::SU2Strategy& s1, const ewl::SU2Strategy& s2) {
        const std::vector<ewl::SU2Strategy> prof{s1, s2};
        worst2 = std::max(worst2, ewl::linf_distance(ewl::two_player_distribution(s1, s2),
                                                     ewl::simulate(inst2, prof)));
    };
    for (std::size_t k = 0; k < 4; ++k)
        probe2(((k >> 1) & 1) ? ewl::SU2Strategy::flip(inst2.eta) : ewl::SU2Strategy::no_flip(),
               (k & 1) ? ewl::SU2Strategy::flip(inst2.eta) : ewl::SU2Strategy::no_flip());
    for (std::size_t t = 0; t < samples; ++t) probe2(ewl::haar_sample(rng), ewl::haar_sample(rng));
    r.detail.push_back("n=2: max L-inf " + fmt(worst2, 3) + " over 4 classical + " +
                       std::to_string(samples) + " random profiles");

    r.deviation = std::max(worst3, worst2);
    r.pass = r.deviation <= r.threshold;
    return r;
}

CheckResult check_properness(const std::vector<ewl::GameSpec>& specs) {
    CheckResult r{"properness", false, 0.0, 1e-12, {}};
    for (const int n : {2, 3}) {
        const auto report = ewl::classical_restriction_check(ewl::build_instance(n, ewl::canonical_eta(n)));
        r.deviation = std::max(r.deviation, report.max_deviation);
        r.detail.push_back("n=" + std::to_string(n) + " simulator restriction: max deviation " +
                           fmt(report.max_deviation, 3));
    }
    for (const auto& spec : specs) {
        const int n = spec.game.n_players;
        const ewl::Complex eta = ewl::canonical_eta(n);
        double worst = 0.0;
        for (std::size_t k = 0; k < spec.game.outcome_count(); ++k) {
            std::vector<ewl::SU2Strategy> prof;
            std::vector<bool> flips;
            for (int j = 0; j < n; ++j) {
                const bool f = ((k >> (n - 1 - j)) & 1u) != 0;
                flips.push_back(f);
                prof.push_back(f ? ewl::SU2Strategy::flip(eta) : ewl::SU2Strategy::no_flip());
            }
            const std::vector<double> quantum = ewl::quantum_payoff(spec.game, prof);
            const std::vector<double> classical = ewl::classical_payoff(spec.game, flips);
            for (std::size_t p = 0; p < quantum.size(); ++p)
                worst = std::max(worst, std::abs(quantum[p] - classical[p]));
        }
        r.deviation = std::max(r.deviation, worst);
        r.detail.push_back(describe_game(spec) + ": classical restriction max deviation " +
                           fmt(worst, 3));
    }
    r.pass = r.deviation <= r.threshold;
    return r;
}

CheckResult check_completeness(const std::vector<ewl::GameSpec>& specs, double tol) {
    CheckResult r{"completeness", false, 0.0, tol, {}};
    for (const auto& spec : specs) {
        const auto report = ewl::completeness_check(spec.game, 5, tol);
        r.deviation = std::max(r.deviation, report.max_deviation);
        r.detail.push_back(describe_game(spec) + ": " + std::to_string(report.grid_points) +
                           " grid points, max deviation " + fmt(report.max_deviation, 3));
    }
    r.pass = r.deviation <= r.threshold;
    return r;
}

int cmd_verify(const GlobalOptions& opts, bool do_closed_form, bool do_orthogonality,
               bool do_properness, bool do_completeness, bool do_fano,
               const std::vector<std::string>& game_paths) {
    if (!do_closed_form && !do_orthogonality && !do_properness && !do_completeness && !do_fano)
        do_closed_form = do_orthogonality = do_properness = do_completeness = do_fano = true;

    std::vector<ewl::GameSpec> specs;
    if (game_paths.empty()) {
        specs.push_back(builtin_game(3));
        specs.push_back(builtin_game(2));
    } else {
        for (const auto& path : game_paths) specs.push_back(ewl::load_game_file(path));
    }

    std::vector<CheckResult> results;
    if (do_fano) results.push_back(check_fano(opts.seed));
    if (do_orthogonality) results.push_back(check_orthogonality());
    if (do_closed_form)
        results.push_back(
            check_closed_form(opts.samples, opts.seed, opts.tolerance.value_or(1e-9)));
    if (do_properness) results.push_back(check_properness(specs));
    if (do_completeness)
        results.push_back(check_completeness(specs, opts.tolerance.value_or(1e-10)));

    bool all_pass = true;
    for (const auto& r : results) all_pass &= r.pass;

    if (opts.structured()) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "verify";
        doc["seed"] = opts.seed;
        doc["samples"] = opts.samples;
        json checks = json::object();
        for (const auto& r : results) {
            json c;
            c["pass"] = r.pass;
            c["max_deviation"] = r.deviation;
            c["threshold"] = r.threshold;
            c["detail"] = r.detail;
            checks[r.name] = c;
        }
        doc["checks"] = checks;
        doc["pass"] = all_pass;
        emit(doc);
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name << ": max deviation "
                      << fmt(r.deviation, 3) << " (threshold " << fmt(r.threshold, 3) << ")\n";
            for (const auto& line : r.detail) std::cout << "       " << line << "\n";
        }
        std::cout << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// equilibrium / payoff

std::vector<ewl::MixedQuantumStrategy> parse_profile(const ewl::GameSpec& spec,
                                                     const std::vector<std::string>& mixtures) {
    const int n = spec.game.n_players;
    const ewl::Complex eta = ewl::canonical_eta(n);
    std::vector<ewl::MixedQuantumStrategy> profile;
    if (mixtures.empty()) {
        profile.assign(static_cast<std::size_t>(n), ewl::MixedQuantumStrategy::haar_uniform());
    } else if (mixtures.size() == static_cast<std::size_t>(n)) {
        for (const auto& m : mixtures) profile.push_back(ewl::parse_mixture(m, eta));
    } else {
        throw ewl::GameFileError("expected one --mixture per player (or none for all-Haar)");
    }
    return profile;
}

int cmd_equilibrium(const GlobalOptions& opts, const std::string& game_path,
                    const std::vector<std::string>& mixtures, bool maximin,
                    std::optional<double> epsilon) {
    const ewl::GameSpec spec = ewl::load_game_file(game_path);
    ewl::SearchConfig config;
    config.samples = opts.samples;
    config.search_samples = std::min<std::size_t>(10000, opts.samples);
    config.seed = opts.seed;

    if (maximin) {
        const ewl::MaximinReport report = ewl::maximin_check(spec.game, 0, config);
        const double tol = opts.tolerance.value_or(1e-2 * spec.game.payoff_range());
        const double deviation = std::abs(report.value - report.outcome_average);
        const bool pass = deviation <= tol;

        if (opts.structured()) {
            json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["command"] = "equilibrium";
            doc["mode"] = "maximin";
            doc["game"] = game_to_json(spec);
            doc["seed"] = opts.seed;
            doc["samples"] = opts.samples;
            json cands = json::object();
            for (const auto& [label, value] : report.candidate_values) cands[label] = value;
            doc["candidates"] = cands;
            doc["best_candidate"] = report.best_candidate;
            doc["value"] = report.value;
            doc["std_error"] = report.std_error;
            doc["outcome_average"] = report.outcome_average;
            doc["deviation"] = deviation;
            doc["tolerance"] = tol;
            doc["pass"] = pass;
            emit(doc);
        } else {
            std::cout << "game: " << describe_game(spec) << "\nmaximin analysis for player 1\n";
            for (const auto& [label, value] : report.candidate_values)
                std::cout << "  guarantee(" << label << ") = " << fmt(value) << "\n";
            std::cout << "best candidate: " << report.best_candidate << " with value "
                      << fmt(report.value) << " +- " << fmt(report.std_error, 3) << "\n";
            std::cout << "outcome average: " << fmt(report.outcome_average) << ", |diff| = "
                      << fmt(deviation, 3) << " (tolerance " << fmt(tol, 3) << ")\n";
            std::cout << (pass ? "maximin value matches the outcome average\n"
                               : "maximin value does NOT match the outcome average\n");
        }
        return pass ? kExitOk : kExitCheckFailed;
    }

    const auto profile = parse_profile(spec, mixtures);
    const ewl::EquilibriumReport report =
        ewl::verify_equilibrium(spec.game, profile, epsilon, config);
    const std::vector<double> average = spec.game.outcome_average();

    if (opts.structured()) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "equilibrium";
        doc["mode"] = "profile";
        doc["game"] = game_to_json(spec);
        doc["seed"] = opts.seed;
        doc["samples"] = opts.samples;
        json prof = json::array();
        for (const auto& m : profile) prof.push_back(mixture_to_json(m));
        doc["profile"] = prof;
        doc["payoff"] = report.payoff;
        doc["payoff_std_error"] = report.payoff_std_error;
        json replies = json::array();
        for (const auto& s : report.best_reply) replies.push_back(strategy_to_json(s));
        doc["best_reply"] = replies;
        doc["gain"] = report.gain;
        doc["gain_std_error"] = report.gain_std_error;
        doc["epsilon"] = report.epsilon;
        doc["outcome_average"] = average;
        doc["confirmed"] = report.confirmed;
        emit(doc);
    } else {
        std::cout << "game: " << describe_game(spec) << "\n";
        std::cout << "samples: " << opts.samples << "  seed: " << opts.seed << "\n";
        std::cout << "player  payoff           std.err     gain         epsilon     verdict\n";
        for (std::size_t p = 0; p < report.payoff.size(); ++p) {
            const bool ok = report.gain[p] <= report.epsilon[p];
            std::cout << std::left << std::setw(8) << (p + 1) << std::right << std::setw(14)
                      << fmt(report.payoff[p], 8) << "   " << std::setw(9)
                      << fmt(report.payoff_std_error[p], 3) << "   " << std::setw(10)
                      << fmt(report.gain[p], 4) << "   " << std::setw(9)
                      << fmt(report.epsilon[p], 3) << "   " << (ok ? "ok" : "IMPROVABLE") << "\n";
        }
        std::cout << "outcome average:";
        for (const double v : average) std::cout << " " << fmt(v, 8);
        std::cout << "\n";
        std::cout << (report.confirmed ? "equilibrium CONFIRMED (all gains <= epsilon)\n"
                                       : "equilibrium REFUTED (a player can improve)\n");
    }
    return report.confirmed ? kExitOk : kExitCheckFailed;
}

int cmd_payoff(const GlobalOptions& opts, const std::string& game_path,
               const std::vector<std::string>& mixtures) {
    const ewl::GameSpec spec = ewl::load_game_file(game_path);
    const auto profile = parse_profile(spec, mixtures);
    const ewl::PayoffEstimate est =
        ewl::mixed_quantum_payoff(spec.game, profile, opts.samples, opts.seed);

    if (opts.structured()) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "payoff";
        doc["game"] = game_to_json(spec);
        doc["seed"] = opts.seed;
        doc["samples"] = est.samples_used;
        json prof = json::array();
        for (const auto& m : profile) prof.push_back(mixture_to_json(m));
        doc["profile"] = prof;
        doc["value"] = est.value;
        doc["std_error"] = est.std_error;
        doc["exact"] = est.exact;
        emit(doc);
    } else {
        std::cout << "game: " << describe_game(spec) << "\n";
        if (est.exact)
            std::cout << "exact (finite supports enumerated)\n";
        else
            std::cout << "Monte Carlo: " << est.samples_used << " samples, seed " << opts.seed
                      << "\n";
        for (std::size_t p = 0; p < est.value.size(); ++p)
            std::cout << "player " << (p + 1) << ": " << fmt(est.value[p]) << " +- "
                      << fmt(est.std_error[p], 3) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-strategy maximally entangled quantum games: closed-form payoff maps "
                 "cross-checked against a state-vector simulator, with equilibrium analysis"};
    app.require_subcommand(1);

    GlobalOptions opts;
    double tolerance_arg = -1.0;
    app.add_option("--seed", opts.seed, "Random seed (default 0)");
    app.add_option("--samples", opts.samples, "Monte Carlo sample count (default 100000)");
    app.add_option("--tolerance", tolerance_arg, "Override the command's pass tolerance");
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "structured"}));

    auto* sim = app.add_subcommand("simulate",
                                   "Closed-form and simulated outcome distribution of a profile");
    sim->fallthrough();
    std::string sim_game;
    std::vector<std::string> sim_strategies;
    sim->add_option("--game", sim_game, "Game file (JSON)")->required();
    sim->add_option("--strategy", sim_strategies,
                    "Per-player strategy: N, F, random or a0,a1,b0,b1");

    auto* ver = app.add_subcommand("verify", "Run the verification suites");
    ver->fallthrough();
    bool v_closed = false, v_orth = false, v_proper = false, v_complete = false, v_fano = false;
    std::vector<std::string> ver_games;
    ver->add_flag("--closed-form", v_closed, "Closed form vs simulator sweep");
    ver->add_flag("--orthogonality", v_orth, "Outcome-frame Gram checks incl. eta probes");
    ver->add_flag("--properness", v_proper, "Classical restriction reproduces the game");
    ver->add_flag("--completeness", v_complete, "Classical mixtures reproduce the mixed game");
    ver->add_flag("--fano", v_fano, "Fano table vs Cayley-Dickson");
    ver->add_option("--game", ver_games, "Game files for properness/completeness");

    auto* eq = app.add_subcommand("equilibrium", "Verify a profile or run the maximin analysis");
    eq->fallthrough();
    std::string eq_game;
    std::vector<std::string> eq_mixtures;
    bool eq_maximin = false;
    double eq_epsilon = -1.0;
    eq->add_option("--game", eq_game, "Game file (JSON)")->required();
    eq->add_option("--mixture", eq_mixtures,
                   "Per-player mixed strategy (haar, N, F, a0,a1,b0,b1 or 0.5:N+0.5:F); "
                   "default all-Haar");
    eq->add_flag("--maximin", eq_maximin, "Two-player guaranteed-value analysis");
    eq->add_option("--epsilon", eq_epsilon, "Equilibrium threshold (default 3 sigma)");

    auto* pay = app.add_subcommand("payoff", "Expected payoffs of a mixed quantum profile");
    pay->fallthrough();
    std::string pay_game;
    std::vector<std::string> pay_mixtures;
    pay->add_option("--game", pay_game, "Game file (JSON)")->required();
    pay->add_option("--mixture", pay_mixtures, "Per-player mixed strategy; default all-Haar");

    try {
        app.parse(argc, argv);
        if (tolerance_arg >= 0.0) opts.tolerance = tolerance_arg;

        if (app.got_subcommand(sim)) return cmd_simulate(opts, sim_game, sim_strategies);
        if (app.got_subcommand(ver))
            return cmd_verify(opts, v_closed, v_orth, v_proper, v_complete, v_fano, ver_games);
        if (app.got_subcommand(eq)) {
            std::optional<double> eps;
            if (eq_epsilon >= 0.0) eps = eq_epsilon;
            return cmd_equilibrium(opts, eq_game, eq_mixtures, eq_maximin, eps);
        }
        if (app.got_subcommand(pay)) return cmd_payoff(opts, pay_game, pay_mixtures);
        return kExitParseError;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParseError;
    } catch (const ewl::GameFileError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::out_of_range& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
