#ifndef NONIC_GLUE_HPP
#define NONIC_GLUE_HPP

/// Gluing per-prime integral bases into one global integral basis, the
/// Hermite-style canonical form, and the index / discriminant bookkeeping.

#include <vector>

#include "nonic/arith.hpp"
#include "nonic/closed_form.hpp"
#include "nonic/errors.hpp"
#include "nonic/field.hpp"
#include "nonic/linalg.hpp"
#include "nonic/theta.hpp"

namespace nonic {

/// Triangular integral basis: element i = (num[i][0] + num[i][1] theta + ...
/// + theta^i) / d[i], with d[0] = 1, d[i] | d[i+1], and the off-diagonal
/// numerators reduced to their canonical residues.
struct GlobalBasis {
    IMat num = identity_imat();
    std::array<Int, kDeg> d = {1, 1, 1, 1, 1, 1, 1, 1, 1};

    bool operator==(const GlobalBasis&) const = default;

    ThetaPoly element(std::size_t i) const {
        ThetaPoly t;
        for (std::size_t j = 0; j < kDeg; ++j) t.c[j] = Rat(num[i][j], d[i]);
        return t;
    }
    std::vector<ThetaPoly> elements() const {
        std::vector<ThetaPoly> v;
        for (std::size_t i = 0; i < kDeg; ++i) v.push_back(element(i));
        return v;
    }
    bool is_identity() const {
        return *this == GlobalBasis{};
    }
    Int denominator_product() const {
        Int r = 1;
        for (const auto& x : d) r *= x;
        return r;
    }

    void validate() const {
        if (d[0] != 1) throw InternalConsistencyError("global basis: d_0 != 1");
        for (std::size_t i = 0; i < kDeg; ++i) {
            if (d[i] <= 0 || num[i][i] != 1)
                throw InternalConsistencyError("global basis: row not monic");
            for (std::size_t j = i + 1; j < kDeg; ++j)
                if (num[i][j] != 0)
                    throw InternalConsistencyError("global basis: not triangular");
            if (i + 1 < kDeg && d[i + 1] % d[i] != 0)
                throw InternalConsistencyError("global basis: d_i does not divide d_{i+1}");
        }
    }
};

/// Unique triangular form of the module spanned by the given elements.
/// Requires the span to contain Z[theta] with full rank.
inline GlobalBasis canonicalize(const std::vector<ThetaPoly>& gens) {
    Int D = 1;
    for (const auto& g : gens) {
        Int l = g.coord_denominator_lcm();
        D = D / gcd_int(D, l) * l;
    }
    std::vector<IRow> rows;
    for (const auto& g : gens) {
        IRow r{};
        for (std::size_t i = 0; i < kDeg; ++i)
            r[i] = boost::multiprecision::numerator(Rat(D) * g.c[i]);
        rows.push_back(r);
    }
    IMat h = hnf_rows(rows); // throws RankError on deficiency
    GlobalBasis b;
    for (std::size_t i = 0; i < kDeg; ++i) {
        const Int& pivot = h[i][i];
        if (D % pivot != 0)
            throw ContainmentError("canonicalize: module does not contain Z[theta]");
        b.d[i] = D / pivot;
        for (std::size_t j = 0; j < kDeg; ++j) {
            if (h[i][j] % pivot != 0)
                throw InternalConsistencyError("canonicalize: no monic triangular form");
            b.num[i][j] = h[i][j] / pivot;
        }
    }
    return b;
}

inline GlobalBasis canonicalize(const GlobalBasis& b) { return canonicalize(b.elements()); }

/// Glue p-integral bases for pairwise distinct primes into an integral basis:
/// element j = (theta^j + beta_j) / prod_i p_i^{k_{i,j}} with beta_j the
/// Bezout combination of the per-prime below-leading parts.
inline GlobalBasis glue(const std::vector<PIntegralBasis>& bases) {
    if (bases.empty()) throw Error("glue: need at least one p-basis");
    for (const auto& b : bases) validate_shape(b);
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = i + 1; j < bases.size(); ++j)
            if (bases[i].p == bases[j].p) throw Error("glue: duplicate primes");

    const std::size_t r = bases.size();
    std::vector<ThetaPoly> elements(kDeg);
    elements[0] = ThetaPoly::one();
    for (std::size_t j = 1; j < kDeg; ++j) {
        std::vector<Int> pk(r), z(r);
        Int Dj = 1;
        for (std::size_t i = 0; i < r; ++i) {
            pk[i] = ipow(bases[i].p, bases[i].slots[j].exponent);
            Dj *= pk[i];
        }
        for (std::size_t i = 0; i < r; ++i) z[i] = Dj / pk[i];
        // Bezout coefficients with sum u_i z_i = 1
        std::vector<Int> u(r, 0);
        Int g = z[0];
        u[0] = 1;
        for (std::size_t i = 1; i < r; ++i) {
            auto [g2, s, t] = extended_gcd(g, z[i]);
            for (std::size_t l = 0; l < i; ++l) u[l] *= s;
            u[i] = t;
            g = g2;
        }
        if (g != 1) throw InternalConsistencyError("glue: gcd of the z_i is not 1");
        Coeffs9 beta{};
        for (std::size_t i = 0; i < r; ++i) {
            Int w = u[i] * z[i];
            if (w == 0) continue;
            const Coeffs9& n = bases[i].slots[j].numerator;
            for (std::size_t t = 0; t < j; ++t) beta[t] += w * n[t]; // delta = below-leading part
        }
        ThetaPoly el = ThetaPoly::from_ints(beta);
        el.c[j] += 1;
        elements[j] = Rat(Int(1), Dj) * el;
    }
    GlobalBasis out = canonicalize(elements);
    out.validate();

    Int expected = 1;
    for (const auto& b : bases) expected *= ipow(b.p, b.exponent_sum());
    if (out.denominator_product() != expected)
        throw InternalConsistencyError("glue: denominator product != prod p^{v_p}");
    return out;
}

/// prod p^{v_p(I)} over the primes dividing 3a (everything else contributes 0).
inline Factorization total_index(const NonicField& field) {
    Factorization f;
    for (const Int& p : relevant_primes(field)) {
        unsigned v = index_valuation(field, classify_prime(field, p));
        if (v > 0) f.push(p, v);
    }
    return f;
}

/// disc(x^9 - a) = 3^18 a^8 as a factorization (always positive).
inline Factorization poly_discriminant(const NonicField& field) {
    Factorization f;
    bool pushed3 = false;
    for (const auto& [p, e] : field.fact.factors) {
        if (p == 3) {
            f.push(p, 8 * e + 18);
            pushed3 = true;
        } else {
            f.push(p, 8 * e);
        }
    }
    if (!pushed3) {
        f.push(3, 18);
        f.sort_factors();
    }
    return f;
}

/// d_K = disc(f) / I^2; the division must be exact.
inline Factorization discriminant(const NonicField& field) {
    Factorization disc = poly_discriminant(field);
    Factorization idx = total_index(field);
    Factorization out;
    for (const auto& [p, e] : disc.factors) {
        unsigned vi = idx.exponent_of(p);
        if (2 * vi > e)
            throw InternalConsistencyError("discriminant: index square does not divide disc");
        if (e - 2 * vi > 0) out.push(p, e - 2 * vi);
    }
    for (const auto& [p, e] : idx.factors)
        if (disc.exponent_of(p) == 0)
            throw InternalConsistencyError("discriminant: index prime outside disc support");
    return out;
}

} // namespace nonic

#endif
