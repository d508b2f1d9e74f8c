#pragma once

#include <complex>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "ewl/algebra.hpp"

namespace ewl {

using Complex = std::complex<double>;

inline constexpr double kUnitTolerance = 1e-12;

/// A pure quantum strategy: the top row (a, b) of the SU(2) matrix
/// [[a, b], [-conj(b), conj(a)]], with |a|^2 + |b|^2 = 1.
struct SU2Strategy {
    Complex a;
    Complex b;

    static SU2Strategy no_flip() { return {Complex(1.0, 0.0), Complex(0.0, 0.0)}; }
    static SU2Strategy flip(Complex eta) { return {Complex(0.0, 0.0), eta}; }
};

inline double unit_defect(const SU2Strategy& s) {
    return std::abs(std::norm(s.a) + std::norm(s.b) - 1.0);
}

inline bool is_unit(const SU2Strategy& s, double tol = kUnitTolerance) {
    return unit_defect(s) <= tol;
}

/// 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<Complex, 4> m{};

    static Mat2 identity() { return {{Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)}}; }
    Complex at(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
};

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 out{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.m[static_cast<std::size_t>(2 * r + c)] =
                a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
    return out;
}

/// The SU(2) matrix of a strategy. Throws std::invalid_argument when the
/// unit invariant is violated.
Mat2 su2_matrix(const SU2Strategy& s);

/// Hamilton-quaternion image of a strategy: (a, b) complex with
/// a = a0 + a1 i, b = b0 + b1 i maps to a0 + a1 i + b0 j + b1 k.
/// Multiplicative: the quaternion of M1*M2 is quat(M1)*quat(M2).
Quaternion su2_to_quaternion(const SU2Strategy& s);

/// State vector over 2^n basis kets; semantically projective (equal up to a
/// nonzero complex scalar).
struct StateVector {
    std::vector<Complex> amp;
};

/// Dense complex square matrix (only 4x4 and 8x8 arise here).
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<Complex> a;

    Complex at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
    Complex& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
};

/// Kronecker product of n 2x2 factors, player 1 outermost (most significant
/// qubit). Throws std::invalid_argument unless n is 2 or 3.
DenseMatrix tensor(std::span<const Mat2> factors);

StateVector apply(const DenseMatrix& m, const StateVector& v);

inline Complex inner_product(const StateVector& u, const StateVector& v) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < u.amp.size(); ++k) s += std::conj(u.amp[k]) * v.amp[k];
    return s;
}

inline double norm(const StateVector& v) {
    double s = 0.0;
    for (const Complex& c : v.amp) s += std::norm(c);
    return std::sqrt(s);
}

/// Probabilities over 2^n outcomes, indexed in the binary order with N=0,
/// F=1 per player and player 1 as the most significant bit
/// (NNN=0, NNF=1, ..., FFF=7).
struct OutcomeDistribution {
    std::vector<double> p;
};

inline double linf_distance(const OutcomeDistribution& a, const OutcomeDistribution& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.p.size(); ++k) d = std::max(d, std::abs(a.p[k] - b.p[k]));
    return d;
}

/// Projective measurement with respect to a mutually orthogonal frame:
/// prob[k] = |<basis_k|psi>|^2 / sum_m |<basis_m|psi>|^2 with each term
/// normalized by the basis vector's own norm, so the result is invariant
/// under rescaling psi or any basis vector. Throws std::invalid_argument on
/// a non-orthogonal frame or when every projection vanishes.
OutcomeDistribution measure_in_basis(const StateVector& psi,
                                     const std::vector<StateVector>& basis);

/// Haar-uniform strategy: four independent standard normals, normalized to
/// the unit 3-sphere.
SU2Strategy haar_sample(std::mt19937_64& rng);

/// A probabilistic strategy choice: either a finite weighted support or the
/// Haar-uniform distribution over all pure strategies.
struct MixedQuantumStrategy {
    bool haar = false;
    std::vector<std::pair<double, SU2Strategy>> support;

    static MixedQuantumStrategy haar_uniform() {
        MixedQuantumStrategy m;
        m.haar = true;
        return m;
    }

    static MixedQuantumStrategy pure(const SU2Strategy& s) {
        MixedQuantumStrategy m;
        m.support.emplace_back(1.0, s);
        return m;
    }

    /// Throws std::invalid_argument unless weights are non-negative and sum
    /// to 1 within 1e-12.
    static MixedQuantumStrategy mixture(std::vector<std::pair<double, SU2Strategy>> comps);
};

}  // namespace ewl
