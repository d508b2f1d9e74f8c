#include "ewl/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace ewl {

Complex canonical_eta(int n_players) {
    switch (n_players) {
        case 2: return Complex(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
        case 3: return Complex(0.5, std::sqrt(3.0) / 2.0);
        default: throw std::invalid_argument("supported player counts are 2 and 3");
    }
}

EwlInstance build_instance(int n_players, Complex eta) {
    if (n_players != 2 && n_players != 3)
        throw std::invalid_argument("supported player counts are 2 and 3");
    if (std::abs(std::abs(eta) - 1.0) > kUnitTolerance)
        throw std::invalid_argument("eta must be a unit complex number");

    const std::size_t dim = std::size_t{1} << n_players;
    EwlInstance inst;
    inst.n_players = n_players;
    inst.eta = eta;
    inst.initial.amp.assign(dim, Complex(0.0));
    inst.initial.amp.front() = Complex(1.0 / std::sqrt(2.0));
    inst.initial.amp.back() = Complex(1.0 / std::sqrt(2.0));

    const Mat2 n_mat = Mat2::identity();
    const Mat2 f_mat = su2_matrix(SU2Strategy::flip(eta));
    inst.outcome_basis.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<Mat2> factors;
        factors.reserve(static_cast<std::size_t>(n_players));
        for (int j = 0; j < n_players; ++j) {
            const bool flip = ((k >> (n_players - 1 - j)) & 1u) != 0;
            factors.push_back(flip ? f_mat : n_mat);
        }
        StateVector b = apply(tensor(factors), inst.initial);
        const double nn = norm(b);
        for (Complex& c : b.amp) c /= nn;
        inst.outcome_basis.push_back(std::move(b));
    }
    return inst;
}

std::vector<std::vector<Complex>> gram_matrix(const EwlInstance& inst) {
    const std::size_t n = inst.outcome_basis.size();
    std::vector<std::vector<Complex>> g(n, std::vector<Complex>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            g[j][k] = inner_product(inst.outcome_basis[j], inst.outcome_basis[k]);
    return g;
}

double max_gram_off_diagonal(const EwlInstance& inst) {
    const auto g = gram_matrix(inst);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t k = 0; k < g.size(); ++k)
            if (j != k) worst = std::max(worst, std::abs(g[j][k]));
    return worst;
}

double max_gram_diagonal_defect(const EwlInstance& inst) {
    const auto g = gram_matrix(inst);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j)
        worst = std::max(worst, std::abs(g[j][j] - Complex(1.0)));
    return worst;
}

OutcomeDistribution simulate(const EwlInstance& inst, std::span<const SU2Strategy> strategies) {
    if (strategies.size() != static_cast<std::size_t>(inst.n_players))
        throw std::invalid_argument("strategy count must match the player count");
    if (!is_orthogonal(inst))
        throw std::invalid_argument("instance outcome basis is not orthogonal");

    std::vector<Mat2> factors;
    factors.reserve(strategies.size());
    for (const SU2Strategy& s : strategies) factors.push_back(su2_matrix(s));
    const StateVector psi = apply(tensor(factors), inst.initial);
    return measure_in_basis(psi, inst.outcome_basis);
}

RestrictionReport classical_restriction_check(const EwlInstance& inst) {
    const std::size_t dim = std::size_t{1} << inst.n_players;
    RestrictionReport report;
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<SU2Strategy> profile;
        for (int j = 0; j < inst.n_players; ++j) {
            const bool flip = ((k >> (inst.n_players - 1 - j)) & 1u) != 0;
            profile.push_back(classical_strategy(inst, flip));
        }
        const OutcomeDistribution d = simulate(inst, profile);
        for (std::size_t m = 0; m < dim; ++m) {
            const double expected = (m == k) ? 1.0 : 0.0;
            report.max_deviation = std::max(report.max_deviation, std::abs(d.p[m] - expected));
        }
    }
    report.pass = report.max_deviation <= 1e-12;
    return report;
}

SU2Strategy classical_strategy(const EwlInstance& inst, bool flip) {
    return flip ? SU2Strategy::flip(inst.eta) : SU2Strategy::no_flip();
}

}  // namespace ewl
