#include "ewl/quantum.hpp"

#include <cmath>
#include <stdexcept>

namespace ewl {

Mat2 su2_matrix(const SU2Strategy& s) {
    if (!is_unit(s)) throw std::invalid_argument("SU2Strategy violates |a|^2 + |b|^2 = 1");
    return {{s.a, s.b, -std::conj(s.b), std::conj(s.a)}};
}

Quaternion su2_to_quaternion(const SU2Strategy& s) {
    return {s.a.real(), s.a.imag(), s.b.real(), s.b.imag()};
}

DenseMatrix tensor(std::span<const Mat2> factors) {
    const std::size_t n = factors.size();
    if (n != 2 && n != 3) throw std::invalid_argument("tensor expects 2 or 3 factors");
    const std::size_t dim = std::size_t{1} << n;
    DenseMatrix out{dim, std::vector<Complex>(dim * dim)};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Complex v = 1.0;
            for (std::size_t j = 0; j < n; ++j) {
                const int rb = static_cast<int>((r >> (n - 1 - j)) & 1u);
                const int cb = static_cast<int>((c >> (n - 1 - j)) & 1u);
                v *= factors[j].at(rb, cb);
            }
            out.at(r, c) = v;
        }
    }
    return out;
}

StateVector apply(const DenseMatrix& m, const StateVector& v) {
    if (v.amp.size() != m.dim) throw std::invalid_argument("matrix/vector dimension mismatch");
    StateVector out{std::vector<Complex>(m.dim)};
    for (std::size_t r = 0; r < m.dim; ++r) {
        Complex s = 0.0;
        for (std::size_t c = 0; c < m.dim; ++c) s += m.at(r, c) * v.amp[c];
        out.amp[r] = s;
    }
    return out;
}

OutcomeDistribution measure_in_basis(const StateVector& psi,
                                     const std::vector<StateVector>& basis) {
    const std::size_t n_out = basis.size();
    std::vector<double> basis_norm_sq(n_out);
    for (std::size_t k = 0; k < n_out; ++k) {
        double s = 0.0;
        for (const Complex& c : basis[k].amp) s += std::norm(c);
        basis_norm_sq[k] = s;
        if (basis_norm_sq[k] == 0.0)
            throw std::invalid_argument("measurement basis contains the zero vector");
    }
    // Orthogonality precondition on the normalized frame.
    for (std::size_t j = 0; j < n_out; ++j) {
        for (std::size_t k = j + 1; k < n_out; ++k) {
            const double off = std::abs(inner_product(basis[j], basis[k])) /
                               std::sqrt(basis_norm_sq[j] * basis_norm_sq[k]);
            if (off > 1e-10)
                throw std::invalid_argument("measurement basis is not orthogonal");
        }
    }

    std::vector<double> raw(n_out);
    double total = 0.0;
    for (std::size_t k = 0; k < n_out; ++k) {
        raw[k] = std::norm(inner_product(basis[k], psi)) / basis_norm_sq[k];
        total += raw[k];
    }
    if (total <= 0.0)
        throw std::invalid_argument("state has zero projection onto the measurement basis");

    OutcomeDistribution dist{std::vector<double>(n_out)};
    double clamped_total = 0.0;
    for (std::size_t k = 0; k < n_out; ++k) {
        double p = raw[k] / total;
        if (p < 0.0) {
            if (p < -1e-15) throw std::invalid_argument("negative probability beyond tolerance");
            p = 0.0;
        }
        dist.p[k] = p;
        clamped_total += p;
    }
    for (double& p : dist.p) p /= clamped_total;
    return dist;
}

SU2Strategy haar_sample(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        const double g0 = gauss(rng), g1 = gauss(rng), g2 = gauss(rng), g3 = gauss(rng);
        const double r = std::sqrt(g0 * g0 + g1 * g1 + g2 * g2 + g3 * g3);
        if (r < 1e-12) continue;
        return {Complex(g0 / r, g1 / r), Complex(g2 / r, g3 / r)};
    }
}

MixedQuantumStrategy MixedQuantumStrategy::mixture(
    std::vector<std::pair<double, SU2Strategy>> comps) {
    if (comps.empty()) throw std::invalid_argument("mixture needs at least one component");
    double total = 0.0;
    for (const auto& [w, s] : comps) {
        if (w < 0.0) throw std::invalid_argument("mixture weights must be non-negative");
        if (!is_unit(s)) throw std::invalid_argument("mixture component violates unit invariant");
        total += w;
    }
    if (std::abs(total - 1.0) > kUnitTolerance)
        throw std::invalid_argument("mixture weights must sum to 1");
    MixedQuantumStrategy m;
    m.support = std::move(comps);
    return m;
}

}  // namespace ewl
