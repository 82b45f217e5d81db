#ifndef NONIC_POLY_HPP
#define NONIC_POLY_HPP

/// Dense univariate polynomials over Z, sized for degree <= 9 work.

#include <string>
#include <vector>

#include "nonic/arith.hpp"
#include "nonic/errors.hpp"
#include "nonic/theta.hpp"

namespace nonic {

struct IntPoly {
    std::vector<Int> c; // constant first

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
    static IntPoly constant(const Int& v) { return IntPoly({v}); }
    static IntPoly x_power(std::size_t k, const Int& lead = 1) {
        std::vector<Int> v(k + 1, 0);
        v[k] = lead;
        return IntPoly(std::move(v));
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& operator[](std::size_t i) const {
        static const Int z = 0;
        return i < c.size() ? c[i] : z;
    }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    bool operator==(const IntPoly&) const = default;

    Coeffs9 to_coeffs9() const {
        if (degree() >= static_cast<int>(kDeg))
            throw Error("IntPoly: degree too high for theta coordinates");
        Coeffs9 v{};
        for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i];
        return v;
    }

    std::string str(const std::string& var = "x") const;
};

inline IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    std::vector<Int> v(std::max(f.c.size(), g.c.size()), 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) v[i] += f.c[i];
    for (std::size_t i = 0; i < g.c.size(); ++i) v[i] += g.c[i];
    return IntPoly(std::move(v));
}
inline IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    std::vector<Int> v(std::max(f.c.size(), g.c.size()), 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) v[i] += f.c[i];
    for (std::size_t i = 0; i < g.c.size(); ++i) v[i] -= g.c[i];
    return IntPoly(std::move(v));
}
inline IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Int> v(f.c.size() + g.c.size() - 1, 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        for (std::size_t j = 0; j < g.c.size(); ++j) v[i + j] += f.c[i] * g.c[j];
    }
    return IntPoly(std::move(v));
}
inline IntPoly operator*(const Int& s, const IntPoly& f) {
    std::vector<Int> v = f.c;
    for (auto& x : v) x *= s;
    return IntPoly(std::move(v));
}

/// Euclidean division by a monic divisor; exact over Z.
inline std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& f, const IntPoly& d) {
    if (!d.is_monic()) throw Error("divrem_monic: divisor must be monic");
    std::vector<Int> rem = f.c;
    int dd = d.degree();
    if (f.degree() < dd) return {IntPoly{}, f};
    std::vector<Int> quo(f.degree() - dd + 1, 0);
    for (int i = f.degree(); i >= dd; --i) {
        Int q = rem[i];
        if (q == 0) continue;
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c[j];
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

/// Composition f(x + a).
inline IntPoly shift(const IntPoly& f, const Int& a) {
    // Horner: result = result*(x+a) + c_i, from the leading coefficient down
    IntPoly r;
    IntPoly lin({a, Int(1)});
    for (int i = f.degree(); i >= 0; --i) r = r * lin + IntPoly::constant(f.c[i]);
    return r;
}

inline Int eval(const IntPoly& f, const Int& x0) {
    Int r = 0;
    for (int i = f.degree(); i >= 0; --i) r = r * x0 + f.c[i];
    return r;
}

inline std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c[i];
        if (a == 0) continue;
        if (!s.empty()) s += a > 0 ? " + " : " - ";
        else if (a < 0) s += "-";
        Int m = a < 0 ? Int(-a) : a;
        bool need_coeff = (m != 1 || i == 0);
        if (need_coeff) s += m.str();
        if (i > 0) {
            if (need_coeff) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace nonic

#endif
