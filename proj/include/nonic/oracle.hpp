#ifndef NONIC_ORACLE_HPP
#define NONIC_ORACLE_HPP

/// Independent verification path: integrality via characteristic polynomials,
/// ring closure, exact module indices, p-maximality (multiplier ring of the
/// p-radical) and a from-scratch maximal-order computation. Nothing here uses
/// the case tables; this module arbitrates the other two paths.

#include <optional>
#include <utility>
#include <vector>

#include "nonic/arith.hpp"
#include "nonic/errors.hpp"
#include "nonic/field.hpp"
#include "nonic/linalg.hpp"
#include "nonic/theta.hpp"

namespace nonic {

/// Matrix of multiplication by beta in the power basis: column i holds the
/// coordinates of beta * theta^i.
inline QMat mult_matrix(const ThetaPoly& beta, const NonicField& field) {
    QMat m{};
    ThetaPoly v = beta;
    for (std::size_t i = 0; i < kDeg; ++i) {
        for (std::size_t r = 0; r < kDeg; ++r) m[r][i] = v.c[r];
        if (i + 1 < kDeg) v = mul_theta(v, field.a);
    }
    return m;
}

inline Rat trace_of(const ThetaPoly& beta, const NonicField& field) {
    QMat m = mult_matrix(beta, field);
    Rat t = 0;
    for (std::size_t i = 0; i < kDeg; ++i) t += m[i][i];
    return t;
}

/// beta is an algebraic integer iff char(mult_matrix(beta)) has integer
/// coefficients; computed exactly via the scaled integer matrix.
inline bool is_algebraic_integer(const ThetaPoly& beta, const NonicField& field) {
    Int L = beta.coord_denominator_lcm();
    if (L == 1) return true;
    QMat a = mult_matrix(beta, field);
    IMat b{};
    for (std::size_t i = 0; i < kDeg; ++i)
        for (std::size_t j = 0; j < kDeg; ++j) {
            Rat s = Rat(L) * a[i][j];
            if (boost::multiprecision::denominator(s) != 1)
                throw InternalConsistencyError("mult matrix scaling failed");
            b[i][j] = boost::multiprecision::numerator(s);
        }
    auto c = charpoly_int(b);
    // char of A = L^{-9} char_B(L x): coefficient j must absorb L^{9-j}
    Int pw = 1;
    for (int j = kDeg - 1; j >= 0; --j) {
        pw *= L;
        if (c[j] % pw != 0) return false;
    }
    return true;
}

/// A full-rank module in K with a triangular canonical basis; rows of the
/// lattice are the basis elements in theta-power coordinates.
struct OrderModule {
    Lattice lat;

    static OrderModule power_basis() { return {}; }

    static OrderModule from_elements(const std::vector<ThetaPoly>& gens) {
        Int D = 1;
        for (const auto& g : gens) {
            Int l = g.coord_denominator_lcm();
            D = D / gcd_int(D, l) * l;
        }
        std::vector<IRow> rows;
        for (const auto& g : gens) {
            IRow r{};
            for (std::size_t i = 0; i < kDeg; ++i) {
                Rat s = Rat(D) * g.c[i];
                r[i] = boost::multiprecision::numerator(s);
            }
            rows.push_back(r);
        }
        OrderModule m;
        m.lat = Lattice::from_generators(rows, D);
        return m;
    }

    ThetaPoly element(std::size_t i) const {
        ThetaPoly t;
        for (std::size_t j = 0; j < kDeg; ++j) t.c[j] = lat.entry(i, j);
        return t;
    }

    bool contains(const ThetaPoly& v) const {
        QRow r;
        for (std::size_t j = 0; j < kDeg; ++j) r[j] = v.c[j];
        return lat.contains(r);
    }

    bool contains_power_basis() const {
        for (std::size_t i = 0; i < kDeg; ++i)
            if (!contains(ThetaPoly::theta_power(i))) return false;
        return true;
    }

    bool operator==(const OrderModule&) const = default;
};

/// [M : Z[theta]] as a positive integer; requires Z[theta] subset of M.
inline Int module_index(const OrderModule& M) {
    if (!M.contains_power_basis())
        throw ContainmentError("module_index: module does not contain Z[theta]");
    Rat d = M.lat.basis_det();
    if (d < 0) d = -d;
    Rat idx = Rat(1) / d;
    if (boost::multiprecision::denominator(idx) != 1)
        throw InternalConsistencyError("module_index: index not an integer");
    return boost::multiprecision::numerator(idx);
}

namespace detail {

/// Coordinates of w_i * w_j in the basis of M, for all pairs; nullopt when
/// some product falls outside M (module not closed under multiplication).
inline std::optional<std::vector<std::vector<IRow>>> mult_table(const OrderModule& M,
                                                                const NonicField& field) {
    std::vector<ThetaPoly> w(kDeg);
    for (std::size_t i = 0; i < kDeg; ++i) w[i] = M.element(i);
    std::vector<std::vector<IRow>> tab(kDeg, std::vector<IRow>(kDeg));
    for (std::size_t i = 0; i < kDeg; ++i) {
        for (std::size_t j = i; j < kDeg; ++j) {
            ThetaPoly prod = mul(w[i], w[j], field.a);
            QRow v;
            for (std::size_t t = 0; t < kDeg; ++t) v[t] = prod.c[t];
            QRow y = M.lat.solve(v);
            IRow yi{};
            for (std::size_t t = 0; t < kDeg; ++t) {
                if (boost::multiprecision::denominator(y[t]) != 1) return std::nullopt;
                yi[t] = boost::multiprecision::numerator(y[t]);
            }
            tab[i][j] = yi;
            tab[j][i] = yi;
        }
    }
    return tab;
}

} // namespace detail

/// Ring closure: every product of basis elements stays in the module.
inline bool is_ring(const OrderModule& M, const NonicField& field) {
    return detail::mult_table(M, field).has_value();
}

namespace detail {

struct ModPAlgebra {
    Int p;
    const std::vector<std::vector<IRow>>& tab;

    IRow mul(const IRow& u, const IRow& v) const {
        IRow out{};
        for (std::size_t i = 0; i < kDeg; ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < kDeg; ++j) {
                if (v[j] == 0) continue;
                Int uv = mod_floor(u[i] * v[j], p);
                if (uv == 0) continue;
                const IRow& c = tab[i][j];
                for (std::size_t t = 0; t < kDeg; ++t)
                    out[t] = mod_floor(out[t] + uv * c[t], p);
            }
        }
        return out;
    }

    IRow pow(IRow base, Int e, const IRow& one) const {
        IRow r = one;
        while (e > 0) {
            if ((e & 1) != 0) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

/// Triangular basis of the p-radical of M, in M-coordinates.
inline IMat p_radical(const OrderModule& M, const Int& p,
                      const std::vector<std::vector<IRow>>& tab) {
    // coordinates of 1 in the basis of M
    QRow onev{};
    onev[0] = 1;
    QRow oney = M.lat.solve(onev);
    IRow one{};
    for (std::size_t t = 0; t < kDeg; ++t) {
        if (boost::multiprecision::denominator(oney[t]) != 1)
            throw ContainmentError("p_radical: 1 not in the module");
        one[t] = mod_floor(boost::multiprecision::numerator(oney[t]), p);
    }
    ModPAlgebra alg{p, tab};
    Int pm = p;
    while (pm < Int(kDeg)) pm *= p;
    // x -> x^(p^m) is F_p-linear; the radical is its kernel
    std::vector<IRow> frob(kDeg);
    for (std::size_t i = 0; i < kDeg; ++i) {
        IRow e{};
        e[i] = 1;
        frob[i] = alg.pow(e, pm, one);
    }
    // left kernel: transpose, then right kernel
    std::vector<IRow> ft(kDeg);
    for (std::size_t i = 0; i < kDeg; ++i)
        for (std::size_t j = 0; j < kDeg; ++j) ft[j][i] = frob[i][j];
    std::vector<IRow> ker = right_kernel_mod_p(ft, p);
    std::vector<IRow> gens = std::move(ker);
    for (std::size_t i = 0; i < kDeg; ++i) {
        IRow r{};
        r[i] = p;
        gens.push_back(r);
    }
    return hnf_rows(gens);
}

/// Integer coordinates of v (given in M-coords) in the triangular radical basis.
inline IRow radical_coords(const IMat& rad, IRow v) {
    IRow y{};
    for (int c = kDeg - 1; c >= 0; --c) {
        if (v[c] % rad[c][c] != 0)
            throw InternalConsistencyError("radical_coords: not in the radical");
        y[c] = v[c] / rad[c][c];
        if (y[c] != 0)
            for (std::size_t t = 0; t <= static_cast<std::size_t>(c); ++t)
                v[t] -= y[c] * rad[c][t];
    }
    return y;
}

/// One multiplier-ring step: returns the enlarged order and whether it grew.
inline std::pair<OrderModule, bool> enlarge_once(const OrderModule& M, const Int& p,
                                                 const NonicField& field) {
    auto tab_opt = mult_table(M, field);
    if (!tab_opt) throw InternalConsistencyError("enlarge_once: module is not a ring");
    const auto& tab = *tab_opt;
    IMat rad = p_radical(M, p, tab);

    // x = (sum_i c_i w_i)/p multiplies the radical into itself iff for every
    // radical generator r_j the combination sum_i c_i (w_i r_j) is 0 mod p
    // in radical coordinates
    std::vector<IRow> conditions;
    for (std::size_t j = 0; j < kDeg; ++j) {
        std::array<IRow, kDeg> coords{};
        for (std::size_t i = 0; i < kDeg; ++i) {
            IRow v{};
            for (std::size_t k = 0; k < kDeg; ++k) {
                if (rad[j][k] == 0) continue;
                for (std::size_t t = 0; t < kDeg; ++t) v[t] += rad[j][k] * tab[i][k][t];
            }
            coords[i] = radical_coords(rad, v);
        }
        for (std::size_t t = 0; t < kDeg; ++t) {
            IRow row{};
            for (std::size_t i = 0; i < kDeg; ++i) row[i] = mod_floor(coords[i][t], p);
            conditions.push_back(row);
        }
    }
    std::vector<IRow> ker = right_kernel_mod_p(conditions, p);
    if (ker.empty()) return {M, false};

    Int D = M.lat.den * p;
    std::vector<IRow> gens;
    for (std::size_t i = 0; i < kDeg; ++i) {
        IRow r;
        for (std::size_t t = 0; t < kDeg; ++t) r[t] = M.lat.rows[i][t] * p;
        gens.push_back(r);
    }
    for (const auto& c : ker) {
        IRow g{};
        for (std::size_t i = 0; i < kDeg; ++i) {
            if (c[i] == 0) continue;
            for (std::size_t t = 0; t < kDeg; ++t) g[t] += c[i] * M.lat.rows[i][t];
        }
        gens.push_back(g);
    }
    OrderModule out;
    out.lat = Lattice::from_generators(gens, D);
    return {out, true};
}

} // namespace detail

/// True iff the multiplier ring of the p-radical equals M itself.
inline bool p_maximal(const OrderModule& M, const Int& p, const NonicField& field) {
    auto [next, grew] = detail::enlarge_once(M, p, field);
    return !grew;
}

/// Round-2 loop from Z[theta], enlarging at every prime whose square divides
/// disc(x^9 - a) = 3^18 a^8 until p-maximal everywhere.
inline OrderModule maximal_order(const NonicField& field) {
    OrderModule O = OrderModule::power_basis();
    for (const Int& p : relevant_primes(field)) {
        while (true) {
            auto [next, grew] = detail::enlarge_once(O, p, field);
            if (!grew) break;
            O = next;
        }
    }
    return O;
}

/// Discriminant via the trace form det(Tr(g_i g_j)), fully independent of the
/// closed-form relation.
inline Int trace_form_discriminant(const OrderModule& M, const NonicField& field) {
    std::array<QMat, kDeg> mats;
    for (std::size_t i = 0; i < kDeg; ++i) mats[i] = mult_matrix(M.element(i), field);
    QMat T{};
    for (std::size_t i = 0; i < kDeg; ++i)
        for (std::size_t j = i; j < kDeg; ++j) {
            Rat tr = 0;
            for (std::size_t r = 0; r < kDeg; ++r)
                for (std::size_t c = 0; c < kDeg; ++c) tr += mats[i][r][c] * mats[j][c][r];
            T[i][j] = tr;
            T[j][i] = tr;
        }
    Rat d = det_rat(T);
    if (boost::multiprecision::denominator(d) != 1)
        throw InternalConsistencyError("trace form determinant is not an integer");
    return boost::multiprecision::numerator(d);
}

} // namespace nonic

#endif
