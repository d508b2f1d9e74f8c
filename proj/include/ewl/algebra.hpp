#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace ewl {

/// Quaternion over the basis {1, i, j, k} with the Hamilton product
/// (ij = k, jk = i, ki = j).
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
}

constexpr Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_squared(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_squared(q)); }

/// Octonion over the basis {1, i1, ..., i7}; e[0] is the real part and
/// e[j] the coefficient of i_j.
struct Octonion {
    std::array<double, 8> e{};

    static constexpr Octonion unit(int j) {
        Octonion o{};
        o.e[static_cast<std::size_t>(j)] = 1.0;
        return o;
    }

    static constexpr Octonion scalar(double v) {
        Octonion o{};
        o.e[0] = v;
        return o;
    }
};

namespace detail {

/// Oriented Fano lines: on each line (a,b,c), i_a i_b = i_c cyclically.
/// This is the i_n * i_{n+1} = i_{n+3} (mod 7) orientation, the one under
/// which {1,i1,i2,i4}, {1,i1,i5,i6} and {1,i1,i3,i7} are closed
/// quaternionic subalgebras.
inline constexpr std::array<std::array<int, 3>, 7> kFanoLines{
    {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}};

struct BasisTable {
    std::array<std::array<int, 8>, 8> index{};
    std::array<std::array<double, 8>, 8> sign{};
};

constexpr BasisTable make_basis_table() {
    BasisTable t{};
    for (int j = 0; j < 8; ++j) {
        t.index[0][j] = j;
        t.sign[0][j] = 1.0;
        t.index[j][0] = j;
        t.sign[j][0] = 1.0;
    }
    for (int j = 1; j < 8; ++j) {
        t.index[j][j] = 0;
        t.sign[j][j] = -1.0;
    }
    for (const auto& line : kFanoLines) {
        const int a = line[0], b = line[1], c = line[2];
        t.index[a][b] = c; t.sign[a][b] = 1.0;
        t.index[b][a] = c; t.sign[b][a] = -1.0;
        t.index[b][c] = a; t.sign[b][c] = 1.0;
        t.index[c][b] = a; t.sign[c][b] = -1.0;
        t.index[c][a] = b; t.sign[c][a] = 1.0;
        t.index[a][c] = b; t.sign[a][c] = -1.0;
    }
    return t;
}

inline constexpr BasisTable kBasisTable = make_basis_table();

}  // namespace detail

/// Fano-plane octonion product (bilinear extension of the basis table).
inline Octonion operator*(const Octonion& lhs, const Octonion& rhs) {
    Octonion out{};
    for (int i = 0; i < 8; ++i) {
        const double li = lhs.e[static_cast<std::size_t>(i)];
        if (li == 0.0) continue;
        for (int j = 0; j < 8; ++j) {
            const double rj = rhs.e[static_cast<std::size_t>(j)];
            if (rj == 0.0) continue;
            out.e[static_cast<std::size_t>(detail::kBasisTable.index[i][j])] +=
                detail::kBasisTable.sign[i][j] * li * rj;
        }
    }
    return out;
}

inline Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion out{};
    for (std::size_t k = 0; k < 8; ++k) out.e[k] = a.e[k] + b.e[k];
    return out;
}

inline Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion out{};
    for (std::size_t k = 0; k < 8; ++k) out.e[k] = a.e[k] - b.e[k];
    return out;
}

inline Octonion operator*(double s, const Octonion& a) {
    Octonion out{};
    for (std::size_t k = 0; k < 8; ++k) out.e[k] = s * a.e[k];
    return out;
}

inline Octonion conjugate(const Octonion& a) {
    Octonion out = a;
    for (std::size_t k = 1; k < 8; ++k) out.e[k] = -out.e[k];
    return out;
}

inline double norm_squared(const Octonion& a) {
    double s = 0.0;
    for (const double v : a.e) s += v * v;
    return s;
}

inline double norm(const Octonion& a) { return std::sqrt(norm_squared(a)); }

/// Coefficient of i_j (with i_0 = 1). Throws std::out_of_range for j outside 0..7.
inline double project(const Octonion& a, int j) {
    if (j < 0 || j > 7) throw std::out_of_range("octonion projection index must be in 0..7");
    return a.e[static_cast<std::size_t>(j)];
}

/// The three quaternionic subalgebras sharing the complex line {1, i1}.
enum class Subalgebra { H1, H2, H3 };

/// Ordered octonion basis indices the quaternion basis (1, i, j, k) maps onto.
constexpr std::array<int, 4> subalgebra_basis(Subalgebra s) {
    switch (s) {
        case Subalgebra::H1: return {0, 1, 2, 4};
        case Subalgebra::H2: return {0, 1, 5, 6};
        case Subalgebra::H3: return {0, 1, 3, 7};
    }
    throw std::invalid_argument("unknown subalgebra");
}

/// Algebra embedding H -> O determined by the ordered subalgebra basis.
inline Octonion embed(const Quaternion& q, Subalgebra s) {
    const auto idx = subalgebra_basis(s);
    Octonion out{};
    out.e[static_cast<std::size_t>(idx[0])] = q.w;
    out.e[static_cast<std::size_t>(idx[1])] = q.x;
    out.e[static_cast<std::size_t>(idx[2])] = q.y;
    out.e[static_cast<std::size_t>(idx[3])] = q.z;
    return out;
}

/// Octonion product by Cayley-Dickson doubling, as an independent check on
/// the Fano table. Splits O = H1 + H1*i3: an octonion is p + q*i3 with
/// quaternion coordinates p = (e0,e1,e2,e4) and q = (e3,e7,e5,-e6), since
/// i1*i3 = i7, i2*i3 = i5 and i4*i3 = -i6. The doubled product is
/// (p + q l)(r + s l) = (pr - conj(s) q) + (s p + q conj(r)) l.
inline Octonion cayley_dickson_mul(const Octonion& a, const Octonion& b) {
    const Quaternion p{a.e[0], a.e[1], a.e[2], a.e[4]};
    const Quaternion q{a.e[3], a.e[7], a.e[5], -a.e[6]};
    const Quaternion r{b.e[0], b.e[1], b.e[2], b.e[4]};
    const Quaternion s{b.e[3], b.e[7], b.e[5], -b.e[6]};

    const Quaternion first = p * r - conjugate(s) * q;
    const Quaternion second = s * p + q * conjugate(r);

    Octonion out{};
    out.e[0] = first.w;
    out.e[1] = first.x;
    out.e[2] = first.y;
    out.e[4] = first.z;
    out.e[3] = second.w;
    out.e[7] = second.x;
    out.e[5] = second.y;
    out.e[6] = -second.z;
    return out;
}

}  // namespace ewl
