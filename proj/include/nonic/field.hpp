#ifndef NONIC_FIELD_HPP
#define NONIC_FIELD_HPP

/// The field Q(theta), theta^9 = a: radicand normalization, the 3-adic case
/// parameters (b, c, k), and the per-prime case classification.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "nonic/arith.hpp"
#include "nonic/errors.hpp"
#include "nonic/theta.hpp"

namespace nonic {

/* which clause of the index theorem governs a prime */
enum class CaseTag { A1, A2, A3, A4i, A4ii, A4iii };

inline const char* tag_name(CaseTag t) {
    switch (t) {
        case CaseTag::A1: return "A1";
        case CaseTag::A2: return "A2";
        case CaseTag::A3: return "A3";
        case CaseTag::A4i: return "A4i";
        case CaseTag::A4ii: return "A4ii";
        case CaseTag::A4iii: return "A4iii";
    }
    return "?";
}

struct PrimeCase {
    Int p;
    CaseTag tag;
    bool operator==(const PrimeCase&) const = default;
};

/* present exactly when 3 | a and 3 | v_3(a): a = 3^{3c} b, 3 ∤ b, k = b mod 9 */
struct ThreeData {
    Int b;
    unsigned c = 0;   // 1 or 2
    unsigned k = 0;   // least positive residue of b mod 9; never 3 or 6
    bool operator==(const ThreeData&) const = default;
};

struct NonicField {
    Int a;                       // normalized: 9th-power-free, not a cube, |a| > 1
    Factorization fact;          // factorization of a
    std::array<Int, kDeg> power_parts{}; // a_i, i = 1..8: a = prod a_i^i, sign on a_1
    std::optional<ThreeData> three;
    std::vector<std::pair<Int, unsigned>> removed_ninth_powers; // (p, multiples of 9 removed)

    bool normalized_away_from_input() const { return !removed_ninth_powers.empty(); }
};

/// Strip p^9 factors (same field: theta/p generates it), reject radicands that
/// make x^9 - a reducible, and derive the case parameters.
inline NonicField normalize(const Int& a_raw, const FactorOptions& fopt = {}) {
    if (a_raw == 0 || a_raw == 1 || a_raw == -1)
        throw ReducibleError("radicand must satisfy |a| > 1");
    Factorization f = factorize(a_raw, fopt);

    NonicField field;
    field.fact.sign = f.sign;
    for (const auto& [p, e] : f.factors) {
        unsigned r = e % 9;
        if (e >= 9) field.removed_ninth_powers.emplace_back(p, e / 9);
        if (r > 0) field.fact.push(p, r);
    }
    field.a = field.fact.value();
    if (field.a == 1 || field.a == -1)
        throw ReducibleError("x^9 - " + a_raw.str() + " is reducible (radicand is a 9th power up to sign)");

    // x^9 - a is irreducible over Q iff a is not a perfect cube
    bool cube = true;
    for (const auto& [p, e] : field.fact.factors)
        if (e % 3 != 0) { cube = false; break; }
    if (cube) {
        if (!is_perfect_cube(field.a))
            throw InternalConsistencyError("cube test disagreement for " + field.a.str());
        throw ReducibleError("x^9 - " + field.a.str() + " is reducible (radicand is a perfect cube)");
    }

    for (std::size_t i = 1; i < kDeg; ++i) field.power_parts[i] = 1;
    for (const auto& [p, e] : field.fact.factors) field.power_parts[e] *= p;
    if (field.fact.sign < 0) field.power_parts[1] = -field.power_parts[1];

    unsigned v3 = field.fact.exponent_of(3);
    if (v3 > 0 && v3 % 3 == 0) {
        ThreeData td;
        td.c = v3 / 3;
        td.b = field.a / ipow(Int(3), v3);
        Int k = mod_floor(td.b, 9);
        if (k == 0) throw InternalConsistencyError("3 | b impossible");
        td.k = static_cast<unsigned>(k);
        if (td.k == 3 || td.k == 6)
            throw InternalConsistencyError("k in {3,6} impossible for 3 ∤ b");
        field.three = td;
    }
    return field;
}

/// C_k = prod a_i^{floor(ik/9)}; theta^k / C_k is an algebraic integer.
inline Int c_denominator(const NonicField& field, unsigned k) {
    if (k < 1 || k > 8) throw Error("c_denominator: k must be in 1..8");
    Int c = 1;
    for (std::size_t i = 1; i < kDeg; ++i) {
        unsigned e = (static_cast<unsigned>(i) * k) / 9;
        if (e > 0) c *= ipow(field.power_parts[i], e);
    }
    return c < 0 ? -c : c; // a_1 never enters (floor(k/9) = 0), but keep it safe
}

/// Exactly one tag applies to every prime.
inline PrimeCase classify_prime(const NonicField& field, const Int& p) {
    unsigned v = field.fact.exponent_of(p);
    if (v > 0) {
        if (p == 3 && v % 3 == 0) return {p, CaseTag::A2};
        // gcd(9, v) is 1 or 3; p | gcd only when p = 3 and 3 | v
        return {p, CaseTag::A1};
    }
    if (p != 3) return {p, CaseTag::A3};
    unsigned w = vp(field.a * field.a - 1, 3);
    if (w <= 1) return {p, CaseTag::A4i};
    if (w == 2) return {p, CaseTag::A4ii};
    return {p, CaseTag::A4iii};
}

/// All primes dividing 3a, ascending; the only candidates for a positive index
/// valuation (and exactly the primes whose square divides disc(x^9 - a)).
inline std::vector<Int> relevant_primes(const NonicField& field) {
    std::vector<Int> ps;
    bool saw3 = false;
    for (const auto& [p, e] : field.fact.factors) {
        ps.push_back(p);
        if (p == 3) saw3 = true;
    }
    if (!saw3) {
        ps.push_back(3);
        std::sort(ps.begin(), ps.end());
    }
    return ps;
}

} // namespace nonic

#endif
