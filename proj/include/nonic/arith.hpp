#ifndef NONIC_ARITH_HPP
#define NONIC_ARITH_HPP

/// Exact integer and rational arithmetic: valuations, certified factorization,
/// Bezout coefficients and the lattice-point count used by the index theorems.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nonic/errors.hpp"

namespace nonic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int ipow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

/* cpp_int division truncates toward zero; these round toward -infinity */
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}
inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline Int floor_rat(const Rat& q) { return floor_div(num(q), den(q)); }

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

/// Bezout: returns (g, u, v) with u*x + v*y = g = gcd(x, y) > 0.
inline std::tuple<Int, Int, Int> extended_gcd(const Int& x, const Int& y) {
    if (x == 0 && y == 0) throw Error("extended_gcd(0, 0) undefined");
    Int old_r = x, r = y;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

/// p-adic valuation of n != 0 (sign ignored).
inline unsigned vp(Int n, const Int& p) {
    if (n == 0) throw Error("vp: valuation of 0 is undefined");
    if (n < 0) n = -n;
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// Integer square / cube roots (floor for nonnegative; cbrt handles signs).
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline Int icbrt(const Int& n) {
    if (n == 0) return 0;
    bool neg = n < 0;
    Int m = neg ? -n : n;
    unsigned bits = 0;
    for (Int t = m; t > 0; t >>= 1) ++bits;
    Int r = Int(1) << ((bits + 2) / 3); // >= cbrt(m); Newton descends, then clamp
    while (true) {
        Int r2 = (2 * r + m / (r * r)) / 3;
        if (r2 >= r) break;
        r = r2;
    }
    while (r * r * r > m) --r;
    while ((r + 1) * (r + 1) * (r + 1) <= m) ++r;
    return neg ? -r : r;
}

inline bool is_perfect_cube(const Int& n) {
    Int r = icbrt(n);
    return r * r * r == n;
}

namespace detail {

inline Int mulmod(const Int& a, const Int& b, const Int& m) { return (a * b) % m; }

inline Int powmod(Int base, Int e, const Int& m) {
    Int r = 1;
    base %= m;
    while (e > 0) {
        if ((e & 1) != 0) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

inline bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned s) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true; // a witnesses compositeness
}

} // namespace detail

/* strong-pseudoprime bases {2,..,17} are deterministic below this bound */
inline const Int kPrimalityCertifiedBound = Int("341550071728321");

enum class Primality { composite, prime, probable_prime };

inline Primality primality(const Int& n) {
    if (n < 2) return Primality::composite;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return Primality::prime;
        if (n % p == 0) return Primality::composite;
    }
    Int d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (int a : {2, 3, 5, 7, 11, 13, 17}) {
        if (detail::miller_rabin_witness(n, a, d, s)) return Primality::composite;
    }
    if (n < kPrimalityCertifiedBound) return Primality::prime;
    // extra bases shrink the (already tiny) error odds for oversized inputs
    for (int a : {19, 23, 29, 31, 37, 41, 43, 47}) {
        if (detail::miller_rabin_witness(n, a, d, s)) return Primality::composite;
    }
    return Primality::probable_prime;
}

inline bool is_prime(const Int& n) { return primality(n) == Primality::prime; }

struct FactorOptions {
    Int trial_bound = 100000;       // NONIC_FACTOR_BUDGET overrides via the CLI
    unsigned rho_rounds = 48;       // Pollard-Brent restarts before giving up
    bool allow_probable_primes = false;
};

/// Signed multiset of certified prime factors, primes strictly increasing.
struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, unsigned>> factors;

    Int value() const {
        Int v = sign;
        for (const auto& [p, e] : factors) v *= ipow(p, e);
        return v;
    }
    unsigned exponent_of(const Int& p) const {
        for (const auto& [q, e] : factors)
            if (q == p) return e;
        return 0;
    }
    bool is_squarefree() const {
        return std::all_of(factors.begin(), factors.end(),
                           [](const auto& f) { return f.second == 1; });
    }
    void push(const Int& p, unsigned e) {
        if (e == 0) return;
        factors.emplace_back(p, e);
    }
    void sort_factors() {
        std::sort(factors.begin(), factors.end());
    }
    bool operator==(const Factorization&) const = default;

    std::string str() const {
        std::string s = sign < 0 ? "-" : "";
        if (factors.empty()) return s + "1";
        bool first = true;
        for (const auto& [p, e] : factors) {
            if (!first) s += " * ";
            first = false;
            s += p.str();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

namespace detail {

inline Int pollard_brent(const Int& n, unsigned seed) {
    // Brent's cycle variant of Pollard rho; returns a nontrivial factor or 0.
    if (n % 2 == 0) return 2;
    Int y = 2 + seed, c = 1 + seed, m = 128;
    Int g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
        Int k = 0;
        while (k < r && g == 1) {
            ys = y;
            Int rk = r - k;
            Int lim = m < rk ? m : rk;
            for (Int i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                Int d = x - y;
                if (d < 0) d = -d;
                q = (q * d) % n;
            }
            g = gcd_int(q, n);
            k += m;
        }
        r *= 2;
        if (r > (Int(1) << 24)) return 0;
    }
    if (g == n) {
        do {
            ys = (ys * ys + c) % n;
            Int d = x - ys;
            if (d < 0) d = -d;
            g = gcd_int(d, n);
        } while (g == 1);
    }
    return g == n ? Int(0) : g;
}

inline void factor_into(Int n, const FactorOptions& opt, const Int& trial_done,
                        std::vector<std::pair<Int, unsigned>>& out) {
    if (n == 1) return;
    if (n <= trial_done * trial_done || primality(n) == Primality::prime) {
        out.emplace_back(n, 1u);
        return;
    }
    if (primality(n) == Primality::probable_prime) {
        if (opt.allow_probable_primes) {
            out.emplace_back(n, 1u);
            return;
        }
        throw FactorBudgetError("cofactor " + n.str() +
                                " exceeds the certified primality range");
    }
    for (unsigned round = 0; round < opt.rho_rounds; ++round) {
        Int d = pollard_brent(n, round);
        if (d > 1 && d < n) {
            factor_into(d, opt, trial_done, out);
            factor_into(n / d, opt, trial_done, out);
            return;
        }
    }
    throw FactorBudgetError("factorization budget exceeded with composite cofactor " + n.str());
}

} // namespace detail

/// Complete certified factorization of n, |n| > 1.
inline Factorization factorize(const Int& n, const FactorOptions& opt = {}) {
    if (n == 0 || n == 1 || n == -1)
        throw Error("factorize requires |n| > 1");
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    Int m = n < 0 ? -n : n;
    std::vector<std::pair<Int, unsigned>> found;
    for (Int p : {Int(2), Int(3)}) {
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        if (e) found.emplace_back(p, e);
    }
    Int p = 5;
    Int step = 2; // 6k +/- 1 wheel
    while (p <= opt.trial_bound && p * p <= m) {
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) { m /= p; ++e; }
            found.emplace_back(p, e);
        }
        p += step;
        step = 6 - step;
    }
    Int trial_done = p > opt.trial_bound ? opt.trial_bound : p;
    if (m > 1) {
        std::vector<std::pair<Int, unsigned>> rest;
        detail::factor_into(m, opt, trial_done, rest);
        // merge duplicates produced by the recursive split
        std::sort(rest.begin(), rest.end());
        for (const auto& [q, e] : rest) {
            if (!found.empty() && found.back().first == q)
                found.back().second += e;
            else
                found.emplace_back(q, e);
        }
    }
    std::sort(found.begin(), found.end());
    f.factors = std::move(found);
    if (f.value() != n) throw InternalConsistencyError("factorize: product check failed");
    return f;
}

/// Number of lattice points with positive integer coordinates inside or on the
/// triangle (0,0), (t,0), (0,b): sum_{i=0}^{t-1} floor(ib/t).
inline Int lattice_count(const Int& t, const Int& b) {
    if (t < 1 || b < 1) throw Error("lattice_count requires t, b >= 1");
    Int g = gcd_int(t, b);
    Int r = ((t - 1) * (b - 1) + g - 1) / 2;
    return r;
}

} // namespace nonic

#endif
