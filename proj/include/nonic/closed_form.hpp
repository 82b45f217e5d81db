#ifndef NONIC_CLOSED_FORM_HPP
#define NONIC_CLOSED_FORM_HPP

/// Closed-form computation path: per-prime index valuations and explicit
/// p-integral bases from the case tables.
///
/// The c = 2 rows of the index/exponent tables are keyed by the k-classes
/// that the polygon machinery and the linear-algebra certifier agree on:
/// v_3 = 12c for (c=1, k in {4,5}) and (c=2, k in {2,7}), and 12c+1 for the
/// other classes. The published c = 2 attribution fails certification; see
/// the tests for the sweep that pins this down.

#include <array>

#include "nonic/arith.hpp"
#include "nonic/errors.hpp"
#include "nonic/field.hpp"
#include "nonic/poly.hpp"
#include "nonic/theta.hpp"

namespace nonic {

inline bool a2_small_index_class(unsigned c, unsigned k) {
    return (c == 1 && (k == 4 || k == 5)) || (c == 2 && (k == 2 || k == 7));
}

/// v_p([Z_K : Z[theta]]) for the prime governed by `pc`.
inline unsigned index_valuation(const NonicField& field, const PrimeCase& pc) {
    switch (pc.tag) {
        case CaseTag::A1: {
            unsigned v = field.fact.exponent_of(pc.p);
            unsigned g = (v % 3 == 0) ? 3 : 1; // gcd(9, v) for v in 1..8
            return (8 * (v - 1) + g - 1) / 2;
        }
        case CaseTag::A2: {
            const ThreeData& td = *field.three;
            return 12 * td.c + (a2_small_index_class(td.c, td.k) ? 0 : 1);
        }
        case CaseTag::A3:
        case CaseTag::A4i:
            return 0;
        case CaseTag::A4ii:
            return 3;
        case CaseTag::A4iii:
            return 4;
    }
    throw Error("unreachable");
}

/// Case A1 basis: theta^i / q^{floor(i v_q(a) / 9)}.
inline PIntegralBasis p_basis_A1(const NonicField& field, const Int& q) {
    unsigned v = field.fact.exponent_of(q);
    if (v == 0) throw WrongCaseError("p_basis_A1: q does not divide a");
    PIntegralBasis b = PIntegralBasis::power_basis(q);
    for (unsigned i = 0; i < kDeg; ++i) b.slots[i].exponent = (i * v) / 9;
    validate_shape(b);
    return b;
}

/// q_j for k in {1, 8}: sum_{s=0}^{3-j} C(3,s) (3^c b)^s (theta^3 - 3^c b)^{3-j-s}.
inline std::pair<IntPoly, IntPoly> q_polys_k18(const NonicField& field) {
    if (!field.three) throw WrongCaseError("q_polys_k18: not an A2 field");
    const ThreeData& td = *field.three;
    if (td.k != 1 && td.k != 8) throw WrongCaseError("q_polys_k18: k not in {1, 8}");
    Int t = ipow(Int(3), td.c) * td.b;
    IntPoly base = IntPoly::x_power(3) - IntPoly::constant(t); // theta^3 - 3^c b
    const Int binom[4] = {1, 3, 3, 1};
    std::array<IntPoly, 3> q; // q[j] for j = 1, 2 (q[0] unused)
    for (unsigned j = 1; j <= 2; ++j) {
        IntPoly acc;
        for (unsigned s = 0; s + j <= 3; ++s) {
            IntPoly term = IntPoly::constant(binom[s] * ipow(t, s));
            for (unsigned m = 0; m < 3 - j - s; ++m) term = term * base;
            acc = acc + term;
        }
        q[j] = acc;
    }
    if (q[1].degree() != 6 || !q[1].is_monic() || q[2].degree() != 3 || !q[2].is_monic())
        throw InternalConsistencyError("q_polys_k18: degree/monicity check failed");
    return {q[1], q[2]};
}

/// phi, q_1, q_2 for k in {2, 4, 5, 7}, per the c = 1 and c = 2 table rows.
inline std::tuple<IntPoly, IntPoly, IntPoly> q_polys_table1(const NonicField& field) {
    if (!field.three) throw WrongCaseError("q_polys_table1: not an A2 field");
    const ThreeData& td = *field.three;
    unsigned k = td.k;
    if (k != 2 && k != 4 && k != 5 && k != 7)
        throw WrongCaseError("q_polys_table1: k not in {2, 4, 5, 7}");
    const Int& b = td.b;
    IntPoly phi, a2, a1;
    if (td.c == 1) {
        Int eps = (k % 2 == 0) ? 1 : -1; // (-1)^k
        phi = IntPoly({-3 * b, -eps * 3 * b, 0, 1});
        a2 = IntPoly({9 * b, eps * 9 * b});
        a1 = IntPoly({eps * 27 * b * b * b + 27 * b * b, eps * 54 * b * b, 27 * b * b});
    } else {
        Int eps = ((k / 2) % 2 == 0) ? 1 : -1; // (-1)^{floor(k/2)}
        phi = IntPoly({-9 * b, 0, -eps * 3 * b, 1});
        a2 = IntPoly({eps * 108 * b * b * b + 27 * b, 27 * b * b, eps * 9 * b});
        Int b2 = b * b, b3 = b2 * b, b4 = b3 * b, b5 = b4 * b, b6 = b5 * b;
        a1 = IntPoly({729 * b6 + eps * 1944 * b4 + 243 * b2,
                      eps * 243 * b5 + 486 * b3,
                      405 * b4 + eps * 162 * b2});
    }
    IntPoly q2 = phi + a2;
    IntPoly q1 = phi * phi + phi * a2 + a1;
    if (q1.degree() != 6 || !q1.is_monic() || q2.degree() != 3 || !q2.is_monic())
        throw InternalConsistencyError("q_polys_table1: degree/monicity check failed");
    return {phi, q1, q2};
}

/* exponent rows (m_1..m_7), corrected c = 2 attribution */
inline std::array<unsigned, 7> a2_exponent_row(unsigned c, unsigned k) {
    if (c == 1)
        return (k == 4 || k == 5) ? std::array<unsigned, 7>{0, 1, 1, 2, 2, 3, 3}
                                  : std::array<unsigned, 7>{0, 1, 1, 2, 3, 3, 3};
    return (k == 2 || k == 7) ? std::array<unsigned, 7>{1, 2, 3, 3, 4, 5, 6}
                              : std::array<unsigned, 7>{1, 2, 3, 3, 5, 5, 6};
}

/// Case A2 basis: {1, θ, θ²/3^m1, q2/3^m2, θq2/3^m3, θ²q2/3^m4, q1/3^m5, θq1/3^m6, θ²q1/3^m7}.
inline PIntegralBasis p_basis_A2(const NonicField& field) {
    if (!field.three) throw WrongCaseError("p_basis_A2: not an A2 field");
    const ThreeData& td = *field.three;
    IntPoly q1, q2;
    if (td.k == 1 || td.k == 8) {
        std::tie(q1, q2) = q_polys_k18(field);
    } else {
        auto [phi, qq1, qq2] = q_polys_table1(field);
        q1 = qq1;
        q2 = qq2;
    }
    auto m = a2_exponent_row(td.c, td.k);
    PIntegralBasis b;
    b.p = 3;
    const IntPoly theta = IntPoly::x_power(1);
    IntPoly numerators[kDeg] = {IntPoly::constant(1), theta,       theta * theta,
                                q2,                   theta * q2,  theta * theta * q2,
                                q1,                   theta * q1,  theta * theta * q1};
    unsigned exps[kDeg] = {0, 0, m[0], m[1], m[2], m[3], m[4], m[5], m[6]};
    for (std::size_t j = 0; j < kDeg; ++j) {
        if (numerators[j].degree() != static_cast<int>(j))
            throw InternalConsistencyError("p_basis_A2: slot degree mismatch");
        b.slots[j].numerator = numerators[j].to_coeffs9();
        b.slots[j].exponent = exps[j];
    }
    validate_shape(b);
    unsigned expect = index_valuation(field, {Int(3), CaseTag::A2});
    if (b.exponent_sum() != expect)
        throw InternalConsistencyError("p_basis_A2: exponent sum != index valuation");
    return b;
}

/// Case A4 bases (3 ∤ a), driven by v_3(a^2 - 1).
inline PIntegralBasis p_basis_A4(const NonicField& field, CaseTag tag) {
    PIntegralBasis b = PIntegralBasis::power_basis(3);
    if (tag == CaseTag::A4i) return b;
    const Int& a = field.a;
    // eta = theta^6 + a theta^3 + 1; slots 6..8 are eta, theta*eta, theta^2*eta
    // over 3 (no wrap past degree 8 occurs)
    IntPoly eta({Int(1), 0, 0, a, 0, 0, 1});
    const IntPoly theta = IntPoly::x_power(1);
    b.slots[6].numerator = eta.to_coeffs9();
    b.slots[6].exponent = 1;
    b.slots[7].numerator = (theta * eta).to_coeffs9();
    b.slots[7].exponent = 1;
    if (tag == CaseTag::A4ii) {
        b.slots[8].numerator = (theta * theta * eta).to_coeffs9();
        b.slots[8].exponent = 1;
    } else if (tag == CaseTag::A4iii) {
        // theta^8 + sum_{j=0}^{7} (a theta)^j over 9
        Coeffs9 n{};
        n[8] = 1;
        Int ap = 1;
        for (std::size_t j = 0; j < 8; ++j) {
            n[j] += ap;
            ap *= a;
        }
        b.slots[8].numerator = n;
        b.slots[8].exponent = 2;
    } else {
        throw WrongCaseError("p_basis_A4: not an A4 case");
    }
    validate_shape(b);
    return b;
}

/// Dispatcher: the p-integral basis for any prime.
inline PIntegralBasis p_basis(const NonicField& field, const PrimeCase& pc) {
    switch (pc.tag) {
        case CaseTag::A1: return p_basis_A1(field, pc.p);
        case CaseTag::A2: return p_basis_A2(field);
        case CaseTag::A3: return PIntegralBasis::power_basis(pc.p);
        case CaseTag::A4i:
        case CaseTag::A4ii:
        case CaseTag::A4iii: return p_basis_A4(field, pc.tag);
    }
    throw Error("unreachable");
}

} // namespace nonic

#endif
