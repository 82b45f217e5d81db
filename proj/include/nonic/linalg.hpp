#ifndef NONIC_LINALG_HPP
#define NONIC_LINALG_HPP

/// Exact linear algebra on 9-dimensional lattices and matrices: Hermite-style
/// triangular bases with the pivot in the highest theta-power, characteristic
/// polynomials over Z, kernels mod p, exact determinants.

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "nonic/arith.hpp"
#include "nonic/errors.hpp"
#include "nonic/theta.hpp"

namespace nonic {

using IRow = std::array<Int, kDeg>;
using IMat = std::array<IRow, kDeg>;
using QRow = std::array<Rat, kDeg>;
using QMat = std::array<QRow, kDeg>;

inline IMat identity_imat(const Int& scale = 1) {
    IMat m{};
    for (std::size_t i = 0; i < kDeg; ++i) m[i][i] = scale;
    return m;
}

/// Row-style Hermite form with the pivot of row i at column i (the theta^i
/// coordinate): r_i[j] = 0 for j > i, r_i[i] > 0, and 0 <= r_i[j] < r_j[j]
/// for j < i. Input rows must span a full-rank lattice.
inline IMat hnf_rows(std::vector<IRow> rows) {
    std::array<std::optional<IRow>, kDeg> basis;
    auto top_index = [](const IRow& r) -> int {
        for (int i = kDeg - 1; i >= 0; --i)
            if (r[i] != 0) return i;
        return -1;
    };
    for (auto& r : rows) {
        IRow cur = r;
        while (true) {
            int c = top_index(cur);
            if (c < 0) break;
            if (!basis[c]) {
                if (cur[c] < 0)
                    for (auto& x : cur) x = -x;
                basis[c] = cur;
                break;
            }
            IRow& b = *basis[c];
            auto [g, u, v] = extended_gcd(b[c], cur[c]);
            Int fb = b[c] / g, fc = cur[c] / g;
            IRow nb, nc;
            for (std::size_t i = 0; i < kDeg; ++i) {
                nb[i] = u * b[i] + v * cur[i];
                nc[i] = fb * cur[i] - fc * b[i];
            }
            b = nb;
            cur = nc;
        }
    }
    IMat h{};
    for (std::size_t i = 0; i < kDeg; ++i) {
        if (!basis[i]) throw RankError("hnf_rows: generators are rank deficient");
        h[i] = *basis[i];
    }
    // reduce sub-pivot entries into [0, pivot of that column's row)
    for (std::size_t i = 1; i < kDeg; ++i) {
        for (int j = static_cast<int>(i) - 1; j >= 0; --j) {
            Int q = floor_div(h[i][j], h[j][j]);
            if (q != 0)
                for (std::size_t t = 0; t <= static_cast<std::size_t>(j); ++t)
                    h[i][t] -= q * h[j][t];
        }
    }
    return h;
}

/// Full-rank lattice in Q^9 with a uniform denominator: row i / den is the
/// i-th basis vector. Kept in reduced canonical form.
struct Lattice {
    IMat rows = identity_imat();
    Int den = 1;

    static Lattice from_generators(const std::vector<IRow>& gens, const Int& den) {
        Lattice l;
        l.rows = hnf_rows(gens);
        l.den = den;
        l.reduce();
        return l;
    }

    void reduce() {
        Int g = den;
        for (const auto& r : rows)
            for (const auto& x : r) {
                if (x != 0) g = gcd_int(g, x);
                if (g == 1) return;
            }
        if (g > 1) {
            den /= g;
            for (auto& r : rows)
                for (auto& x : r) x /= g;
        }
    }

    bool operator==(const Lattice&) const = default;

    Rat entry(std::size_t i, std::size_t j) const { return Rat(rows[i][j], den); }

    /// Coordinates of v in this basis (exact); nullopt only on rank issues.
    QRow solve(const QRow& v) const {
        QRow rem = v;
        QRow y{};
        for (int c = kDeg - 1; c >= 0; --c) {
            y[c] = rem[c] * Rat(den, rows[c][c]);
            if (y[c] != 0)
                for (std::size_t t = 0; t <= static_cast<std::size_t>(c); ++t)
                    rem[t] -= y[c] * Rat(rows[c][t], den);
        }
        for (const auto& x : rem)
            if (x != 0) throw InternalConsistencyError("Lattice::solve: residue left");
        return y;
    }

    bool contains(const QRow& v) const {
        QRow y = solve(v);
        for (const auto& q : y)
            if (boost::multiprecision::denominator(q) != 1) return false;
        return true;
    }

    /// det of the basis matrix = prod pivots / den^9.
    Rat basis_det() const {
        Rat d = 1;
        for (std::size_t i = 0; i < kDeg; ++i) d *= Rat(rows[i][i], den);
        return d;
    }
};

/// Characteristic polynomial of an integer matrix, monic degree 9,
/// Faddeev-LeVerrier (all divisions exact).
inline std::array<Int, kDeg + 1> charpoly_int(const IMat& A) {
    std::array<Int, kDeg + 1> c{};
    c[kDeg] = 1;
    IMat M{};
    for (std::size_t k = 1; k <= kDeg; ++k) {
        // M <- A * (M + c_{n-k+1} I)
        IMat T = M;
        for (std::size_t i = 0; i < kDeg; ++i) T[i][i] += c[kDeg - k + 1];
        IMat AM{};
        for (std::size_t i = 0; i < kDeg; ++i)
            for (std::size_t l = 0; l < kDeg; ++l) {
                if (A[i][l] == 0) continue;
                for (std::size_t j = 0; j < kDeg; ++j) AM[i][j] += A[i][l] * T[l][j];
            }
        M = AM;
        Int tr = 0;
        for (std::size_t i = 0; i < kDeg; ++i) tr += M[i][i];
        if (tr % Int(k) != 0) throw InternalConsistencyError("charpoly: inexact division");
        c[kDeg - k] = -tr / Int(k);
    }
    return c;
}

/// Right kernel of an m x 9 matrix over F_p: vectors c with M c = 0 (mod p).
inline std::vector<IRow> right_kernel_mod_p(std::vector<IRow> m, const Int& p) {
    const std::size_t n = kDeg;
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (auto& row : m)
        for (auto& x : row) x = mod_floor(x, p);
    for (std::size_t c = 0; c < n && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        Int inv = detail::powmod(m[r][c], p - 2, p);
        for (auto& x : m[r]) x = mod_floor(x * inv, p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Int f = m[i][c];
            for (std::size_t t = 0; t < n; ++t) m[i][t] = mod_floor(m[i][t] - f * m[r][t], p);
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<IRow> kernel;
    for (std::size_t c = 0; c < n; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) != pivot_col.end())
            continue;
        IRow v{};
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = mod_floor(-m[i][c], p);
        kernel.push_back(v);
    }
    return kernel;
}

/// Exact determinant of a rational 9x9 matrix (row-scaled Bareiss).
inline Rat det_rat(const QMat& a) {
    IMat m{};
    Rat scale = 1;
    for (std::size_t i = 0; i < kDeg; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < kDeg; ++j) l = l / gcd_int(l, den(a[i][j])) * den(a[i][j]);
        scale *= Rat(1, l);
        for (std::size_t j = 0; j < kDeg; ++j) m[i][j] = num(a[i][j]) * (l / den(a[i][j]));
    }
    // Bareiss fraction-free elimination
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < kDeg; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < kDeg && m[s][k] == 0) ++s;
            if (s == kDeg) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < kDeg; ++i) {
            for (std::size_t j = k + 1; j < kDeg; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return Rat(sign * m[kDeg - 1][kDeg - 1]) * scale;
}

} // namespace nonic

#endif
