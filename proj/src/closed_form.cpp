#include "ewl/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "ewl/oracle.hpp"

namespace ewl {

namespace {

constexpr int kOutcomeNNN = 0, kOutcomeNNF = 1, kOutcomeNFN = 2, kOutcomeNFF = 3;
constexpr int kOutcomeFNN = 4, kOutcomeFNF = 5, kOutcomeFFN = 6, kOutcomeFFF = 7;

double sq(double v) { return v * v; }

void require_unit(const StrategyCoefficients& c) {
    if (unit_defect(c) > kUnitTolerance)
        throw std::invalid_argument("strategy coefficients violate the unit invariant");
}

}  // namespace

Octonion embed_player(int player, const StrategyCoefficients& c, SignFlags flags) {
    require_unit(c);
    Subalgebra target;
    switch (player) {
        case 1: target = Subalgebra::H1; break;
        case 2: target = Subalgebra::H2; break;
        case 3: target = Subalgebra::H3; break;
        default: throw std::invalid_argument("player index must be 1, 2 or 3");
    }
    const double root3_half = std::sqrt(3.0) / 2.0;
    const Quaternion q{flags.flip_first ? -c.a0 : c.a0,
                       flags.flip_second ? -c.a1 : c.a1,
                       root3_half * c.b0 - 0.5 * c.b1,
                       0.5 * c.b0 + root3_half * c.b1};
    return embed(q, target);
}

TripleProducts strategy_triple_products(const StrategyCoefficients& c1,
                                        const StrategyCoefficients& c2,
                                        const StrategyCoefficients& c3) {
    const Octonion s01 = embed_player(1, c1, {false, true});
    const Octonion s10 = embed_player(1, c1, {true, false});
    const Octonion t00 = embed_player(2, c2, {false, false});
    const Octonion t10 = embed_player(2, c2, {true, false});
    const Octonion u00 = embed_player(3, c3, {false, false});
    const Octonion u01 = embed_player(3, c3, {false, true});

    const Octonion xa = (s10 * t10) * u01;
    const Octonion xb = (s01 * t10) * u01;
    const Octonion ya = (s01 * t00) * u00;
    const Octonion yb = (s10 * t00) * u00;

    return {0.5 * (xa + xb), 0.5 * (xa - xb), 0.5 * (ya + yb), 0.5 * (ya - yb)};
}

OutcomeDistribution three_player_distribution(const StrategyCoefficients& c1,
                                              const StrategyCoefficients& c2,
                                              const StrategyCoefficients& c3) {
    const TripleProducts t = strategy_triple_products(c1, c2, c3);

    OutcomeDistribution d{std::vector<double>(8, 0.0)};
    d.p[kOutcomeNNN] = sq(t.x_plus.e[0]) + sq(t.x_minus.e[0]);
    d.p[kOutcomeFFF] = sq(t.x_plus.e[1]) + sq(t.x_minus.e[1]);
    d.p[kOutcomeFFN] = sq(t.x_plus.e[3]) + sq(t.x_minus.e[3]);
    d.p[kOutcomeNNF] = sq(t.x_plus.e[7]) + sq(t.x_minus.e[7]);
    d.p[kOutcomeNFF] = sq(t.y_plus.e[2]) + sq(t.y_minus.e[2]);
    d.p[kOutcomeFNN] = sq(t.y_plus.e[4]) + sq(t.y_minus.e[4]);
    d.p[kOutcomeFNF] = sq(t.y_plus.e[5]) + sq(t.y_minus.e[5]);
    d.p[kOutcomeNFN] = sq(t.y_plus.e[6]) + sq(t.y_minus.e[6]);
    return d;
}

OutcomeDistribution two_player_distribution(const SU2Strategy& s1, const SU2Strategy& s2) {
    if (!is_unit(s1) || !is_unit(s2))
        throw std::invalid_argument("strategies violate the unit invariant");
    const Complex eta_bar = std::conj(canonical_eta(2));

    const Complex b_part = s1.b * eta_bar;
    const Quaternion p{s1.a.real(), s1.a.imag(), b_part.real(), b_part.imag()};
    const Complex q_part = -std::conj(s2.b) * eta_bar;
    const Quaternion q{s2.a.real(), s2.a.imag(), q_part.real(), q_part.imag()};

    const Quaternion r = p * q;
    OutcomeDistribution d{std::vector<double>(4, 0.0)};
    d.p[0] = r.w * r.w;  // NN
    d.p[1] = r.z * r.z;  // NF
    d.p[2] = r.y * r.y;  // FN
    d.p[3] = r.x * r.x;  // FF
    return d;
}

ProjectionReport vanishing_projection_report(const StrategyCoefficients& c1,
                                             const StrategyCoefficients& c2,
                                             const StrategyCoefficients& c3) {
    const TripleProducts t = strategy_triple_products(c1, c2, c3);
    ProjectionReport report;
    for (const int j : {2, 4, 5, 6}) {
        report.max_unused_x = std::max(report.max_unused_x, std::abs(project(t.x_plus, j)));
        report.max_unused_x = std::max(report.max_unused_x, std::abs(project(t.x_minus, j)));
    }
    for (const int j : {0, 1, 3, 7}) {
        report.max_unused_y = std::max(report.max_unused_y, std::abs(project(t.y_plus, j)));
        report.max_unused_y = std::max(report.max_unused_y, std::abs(project(t.y_minus, j)));
    }
    return report;
}

}  // namespace ewl
