#ifndef NONIC_THETA_HPP
#define NONIC_THETA_HPP

/// Elements of Q(theta) in the power basis 1, theta, ..., theta^8, with the
/// reduction theta^9 = a, plus the per-prime triangular basis container that
/// both computation paths emit.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "nonic/arith.hpp"
#include "nonic/errors.hpp"

namespace nonic {

inline constexpr std::size_t kDeg = 9;

using Coeffs9 = std::array<Int, kDeg>; // integer theta-polynomial, constant first

struct ThetaPoly {
    std::array<Rat, kDeg> c{};

    static ThetaPoly zero() { return {}; }
    static ThetaPoly one() {
        ThetaPoly t;
        t.c[0] = 1;
        return t;
    }
    static ThetaPoly theta_power(std::size_t k) {
        ThetaPoly t;
        t.c.at(k) = 1;
        return t;
    }
    static ThetaPoly from_ints(const Coeffs9& v) {
        ThetaPoly t;
        for (std::size_t i = 0; i < kDeg; ++i) t.c[i] = Rat(v[i]);
        return t;
    }

    bool operator==(const ThetaPoly&) const = default;

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    int degree() const {
        for (int i = kDeg - 1; i >= 0; --i)
            if (c[i] != 0) return i;
        return -1;
    }
    bool has_integer_coords() const {
        for (const auto& x : c)
            if (den(x) != 1) return false;
        return true;
    }
    Coeffs9 integer_coords() const {
        Coeffs9 v;
        for (std::size_t i = 0; i < kDeg; ++i) {
            if (den(c[i]) != 1) throw Error("ThetaPoly: non-integer coordinate");
            v[i] = num(c[i]);
        }
        return v;
    }
    Int coord_denominator_lcm() const {
        Int l = 1;
        for (const auto& x : c) l = l / gcd_int(l, den(x)) * den(x);
        return l;
    }
};

inline ThetaPoly operator+(const ThetaPoly& x, const ThetaPoly& y) {
    ThetaPoly r;
    for (std::size_t i = 0; i < kDeg; ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
}
inline ThetaPoly operator-(const ThetaPoly& x, const ThetaPoly& y) {
    ThetaPoly r;
    for (std::size_t i = 0; i < kDeg; ++i) r.c[i] = x.c[i] - y.c[i];
    return r;
}
inline ThetaPoly operator-(const ThetaPoly& x) {
    ThetaPoly r;
    for (std::size_t i = 0; i < kDeg; ++i) r.c[i] = -x.c[i];
    return r;
}
inline ThetaPoly operator*(const Rat& s, const ThetaPoly& x) {
    ThetaPoly r;
    for (std::size_t i = 0; i < kDeg; ++i) r.c[i] = s * x.c[i];
    return r;
}

/// Product in Q(theta); wrapped powers fold back with theta^9 = a.
inline ThetaPoly mul(const ThetaPoly& x, const ThetaPoly& y, const Int& a) {
    std::array<Rat, 2 * kDeg - 1> conv{};
    for (std::size_t i = 0; i < kDeg; ++i) {
        if (x.c[i] == 0) continue;
        for (std::size_t j = 0; j < kDeg; ++j) {
            if (y.c[j] == 0) continue;
            conv[i + j] += x.c[i] * y.c[j];
        }
    }
    ThetaPoly r;
    for (std::size_t i = 0; i < kDeg; ++i) r.c[i] = conv[i];
    for (std::size_t i = kDeg; i < 2 * kDeg - 1; ++i)
        if (conv[i] != 0) r.c[i - kDeg] += Rat(a) * conv[i];
    return r;
}

/// Multiplication by theta (one-step wrap).
inline ThetaPoly mul_theta(const ThetaPoly& x, const Int& a) {
    ThetaPoly r;
    for (std::size_t i = kDeg - 1; i >= 1; --i) r.c[i] = x.c[i - 1];
    r.c[0] = Rat(a) * x.c[kDeg - 1];
    return r;
}

/// One slot per degree j = 0..8: monic integer numerator of exact degree j
/// over p^{exponent}.
struct PIntegralBasis {
    Int p;
    struct Slot {
        Coeffs9 numerator{};
        unsigned exponent = 0;
        bool operator==(const Slot&) const = default;
    };
    std::array<Slot, kDeg> slots{};

    bool operator==(const PIntegralBasis&) const = default;

    ThetaPoly element(std::size_t j) const {
        Rat scale(Int(1), ipow(p, slots[j].exponent));
        return scale * ThetaPoly::from_ints(slots[j].numerator);
    }
    unsigned exponent_sum() const {
        unsigned s = 0;
        for (const auto& sl : slots) s += sl.exponent;
        return s;
    }
    std::array<unsigned, kDeg> exponents() const {
        std::array<unsigned, kDeg> e{};
        for (std::size_t j = 0; j < kDeg; ++j) e[j] = slots[j].exponent;
        return e;
    }

    static PIntegralBasis power_basis(const Int& p) {
        PIntegralBasis b;
        b.p = p;
        for (std::size_t j = 0; j < kDeg; ++j) b.slots[j].numerator[j] = 1;
        return b;
    }
};

/// Triangular-shape check: monic degree-j numerators, k_0 = 0, k_j nondecreasing.
inline void validate_shape(const PIntegralBasis& b) {
    if (b.slots[0].exponent != 0)
        throw InternalConsistencyError("p-basis: slot 0 must have exponent 0");
    for (std::size_t j = 0; j < kDeg; ++j) {
        const auto& n = b.slots[j].numerator;
        if (n[j] != 1) throw InternalConsistencyError("p-basis: slot not monic");
        for (std::size_t i = j + 1; i < kDeg; ++i)
            if (n[i] != 0) throw InternalConsistencyError("p-basis: slot degree too high");
        if (j + 1 < kDeg && b.slots[j].exponent > b.slots[j + 1].exponent)
            throw InternalConsistencyError("p-basis: exponents must be nondecreasing");
    }
}

} // namespace nonic

#endif
