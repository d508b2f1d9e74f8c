#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ewl/oracle.hpp"
#include "ewl/quantum.hpp"

using namespace ewl;

namespace {

double quat_diff(const Quaternion& a, const Quaternion& b) {
    return std::max(std::max(std::abs(a.w - b.w), std::abs(a.x - b.x)),
                    std::max(std::abs(a.y - b.y), std::abs(a.z - b.z)));
}

SU2Strategy matrix_to_strategy(const Mat2& m) { return {m.at(0, 0), m.at(0, 1)}; }

}  // namespace

TEST_CASE("su2_matrix") {
    const Mat2 n = su2_matrix(SU2Strategy::no_flip());
    CHECK(n.at(0, 0) == Complex(1.0));
    CHECK(n.at(0, 1) == Complex(0.0));
    CHECK(n.at(1, 1) == Complex(1.0));

    const Complex eta = canonical_eta(3);
    const Mat2 f = su2_matrix(SU2Strategy::flip(eta));
    CHECK(std::abs(f.at(0, 1) - eta) <= 1e-15);
    CHECK(std::abs(f.at(1, 0) + std::conj(eta)) <= 1e-15);
    CHECK(std::abs(f.at(0, 0)) == 0.0);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const Mat2 m = su2_matrix(haar_sample(rng));
        const Complex det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        CHECK(std::abs(det - Complex(1.0)) <= 1e-12);
    }

    CHECK_THROWS_AS(su2_matrix(SU2Strategy{Complex(1.0), Complex(1.0)}), std::invalid_argument);
}

TEST_CASE("su2_to_quaternion is a homomorphism") {
    CHECK(quat_diff(su2_to_quaternion(SU2Strategy::no_flip()), Quaternion{1, 0, 0, 0}) == 0.0);
    CHECK(quat_diff(su2_to_quaternion(SU2Strategy{Complex(0.0, 1.0), Complex(0.0)}),
                    Quaternion{0, 1, 0, 0}) == 0.0);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const SU2Strategy s1 = haar_sample(rng);
        const SU2Strategy s2 = haar_sample(rng);
        const Mat2 prod = su2_matrix(s1) * su2_matrix(s2);
        const Quaternion lhs = su2_to_quaternion(matrix_to_strategy(prod));
        const Quaternion rhs = su2_to_quaternion(s1) * su2_to_quaternion(s2);
        CHECK(quat_diff(lhs, rhs) <= 1e-10);
    }
}

TEST_CASE("tensor products") {
    const Mat2 id = Mat2::identity();
    const std::vector<Mat2> triple{id, id, id};
    const DenseMatrix m = tensor(triple);
    REQUIRE(m.dim == 8);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
            CHECK(m.at(r, c) == (r == c ? Complex(1.0) : Complex(0.0)));

    // (F (x) I)|00> = -conj(eta) |10>
    const Complex eta = canonical_eta(2);
    const std::vector<Mat2> fi{su2_matrix(SU2Strategy::flip(eta)), id};
    StateVector ket00{std::vector<Complex>{1.0, 0.0, 0.0, 0.0}};
    const StateVector out = apply(tensor(fi), ket00);
    CHECK(std::abs(out.amp[0]) <= 1e-15);
    CHECK(std::abs(out.amp[2] + std::conj(eta)) <= 1e-15);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        // mixed-product property on random factors and product states
        std::vector<Mat2> mats(3);
        std::vector<std::array<Complex, 2>> vecs(3);
        for (int j = 0; j < 3; ++j) {
            for (auto& entry : mats[static_cast<std::size_t>(j)].m)
                entry = Complex(u(rng), u(rng));
            vecs[static_cast<std::size_t>(j)] = {Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
        }
        StateVector v{std::vector<Complex>(8)};
        StateVector expected{std::vector<Complex>(8)};
        for (std::size_t k = 0; k < 8; ++k) {
            Complex prod = 1.0, mapped = 1.0;
            for (int j = 0; j < 3; ++j) {
                const std::size_t bit = (k >> (2 - j)) & 1u;
                prod *= vecs[static_cast<std::size_t>(j)][bit];
                const auto& mj = mats[static_cast<std::size_t>(j)];
                mapped *= mj.at(static_cast<int>(bit), 0) * vecs[static_cast<std::size_t>(j)][0] +
                          mj.at(static_cast<int>(bit), 1) * vecs[static_cast<std::size_t>(j)][1];
            }
            v.amp[k] = prod;
            expected.amp[k] = mapped;
        }
        const StateVector got = apply(tensor(mats), v);
        for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(got.amp[k] - expected.amp[k]) <= 1e-12);
    }

    const std::vector<Mat2> too_few{id};
    CHECK_THROWS_AS(tensor(too_few), std::invalid_argument);
}

TEST_CASE("measure_in_basis") {
    std::vector<StateVector> basis;
    for (std::size_t k = 0; k < 4; ++k) {
        StateVector b{std::vector<Complex>(4, Complex(0.0))};
        b.amp[k] = 1.0;
        basis.push_back(b);
    }

    const Complex alpha(0.6, 0.0), beta(0.0, 0.8);
    StateVector psi{std::vector<Complex>{alpha, 0.0, 0.0, beta}};
    OutcomeDistribution d = measure_in_basis(psi, basis);
    CHECK(std::abs(d.p[0] - 0.36) <= 1e-12);
    CHECK(d.p[1] == 0.0);
    CHECK(d.p[2] == 0.0);
    CHECK(std::abs(d.p[3] - 0.64) <= 1e-12);

    SUBCASE("point mass on a basis vector") {
        const OutcomeDistribution point = measure_in_basis(basis[3], basis);
        CHECK(std::abs(point.p[3] - 1.0) <= 1e-15);
    }

    SUBCASE("projective invariance") {
        StateVector scaled = psi;
        for (Complex& c : scaled.amp) c *= Complex(0.0, 7.0);
        const OutcomeDistribution d2 = measure_in_basis(scaled, basis);
        for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(d2.p[k] - d.p[k]) <= 1e-12);

        auto rescaled_basis = basis;
        for (Complex& c : rescaled_basis[0].amp) c *= Complex(-2.0, 1.0);
        const OutcomeDistribution d3 = measure_in_basis(psi, rescaled_basis);
        for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(d3.p[k] - d.p[k]) <= 1e-12);
    }

    SUBCASE("distribution sums to 1") {
        std::mt19937_64 rng(19);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int t = 0; t < 100; ++t) {
            StateVector v{std::vector<Complex>(4)};
            for (Complex& c : v.amp) c = Complex(u(rng), u(rng));
            const OutcomeDistribution dr = measure_in_basis(v, basis);
            double total = 0.0;
            for (const double p : dr.p) {
                CHECK(p >= 0.0);
                total += p;
            }
            CHECK(std::abs(total - 1.0) <= 1e-12);
        }
    }

    SUBCASE("rejects a non-orthogonal frame") {
        auto skewed = basis;
        skewed[1].amp[0] = 0.5;
        CHECK_THROWS_AS(measure_in_basis(psi, skewed), std::invalid_argument);
    }

    SUBCASE("rejects a vanishing projection sum") {
        StateVector zero{std::vector<Complex>(4, Complex(0.0))};
        CHECK_THROWS_AS(measure_in_basis(zero, basis), std::invalid_argument);
    }
}

TEST_CASE("haar_sample moments") {
    std::mt19937_64 rng(42);
    const int n = 100000;
    double sum_a0 = 0.0, sum_a0sq = 0.0;
    for (int t = 0; t < n; ++t) {
        const SU2Strategy s = haar_sample(rng);
        CHECK(unit_defect(s) <= 1e-12);
        sum_a0 += s.a.real();
        sum_a0sq += s.a.real() * s.a.real();
    }
    const double mean = sum_a0 / n;
    const double mean_sq = sum_a0sq / n;
    CHECK(std::abs(mean) <= 4.0 / std::sqrt(static_cast<double>(n)));
    // E[a0^2] = 1/4 on S^3; sd of a0^2 is 1/4, so 3 sigma of the mean is below
    CHECK(std::abs(mean_sq - 0.25) <= 3.0 * 0.25 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("mixture construction validates weights") {
    const SU2Strategy n_strat = SU2Strategy::no_flip();
    CHECK_THROWS_AS(MixedQuantumStrategy::mixture({{0.5, n_strat}, {0.6, n_strat}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MixedQuantumStrategy::mixture({{-0.1, n_strat}, {1.1, n_strat}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MixedQuantumStrategy::mixture({}), std::invalid_argument);
    const auto ok = MixedQuantumStrategy::mixture({{0.25, n_strat}, {0.75, n_strat}});
    CHECK(ok.support.size() == 2);
    CHECK_FALSE(ok.haar);
}
