#ifndef NONIC_NEWTON_HPP
#define NONIC_NEWTON_HPP

/// Newton-polygon computation path: first-order polygons, residual polynomials
/// and Ore's index count; key polynomials, the second-order valuation V,
/// phi-adic expansions, V-polygons and the Guardia-Montes-Nart index/basis
/// theorem, specialized to the shapes that x^9 - a produces.

#include <algorithm>
#include <utility>
#include <vector>

#include "nonic/arith.hpp"
#include "nonic/errors.hpp"
#include "nonic/field.hpp"
#include "nonic/poly.hpp"
#include "nonic/theta.hpp"

namespace nonic {

struct NewtonPolygon {
    // strictly increasing abscissae, strictly decreasing ordinates
    std::vector<std::pair<Int, Rat>> vertices;

    struct Edge {
        Int x0, x1;
        Rat y0, y1;
        Rat slope;   // negative
        Int ell, e;  // slope = -ell/e in lowest terms, e > 0
        Int length;  // x1 - x0
        Int degree;  // length / e
    };

    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
            Edge ed;
            ed.x0 = vertices[i].first;
            ed.y0 = vertices[i].second;
            ed.x1 = vertices[i + 1].first;
            ed.y1 = vertices[i + 1].second;
            ed.length = ed.x1 - ed.x0;
            ed.slope = (ed.y1 - ed.y0) / Rat(ed.length);
            ed.ell = -num(ed.slope);
            ed.e = den(ed.slope);
            if (ed.ell <= 0) throw InternalConsistencyError("polygon edge slope not negative");
            if (ed.length % ed.e != 0)
                throw InternalConsistencyError("edge length not divisible by slope denominator");
            ed.degree = ed.length / ed.e;
            es.push_back(ed);
        }
        return es;
    }

    Rat ordinate_at(const Int& x) const {
        if (vertices.empty()) throw Error("ordinate_at: empty polygon");
        if (x < vertices.front().first || x > vertices.back().first)
            throw Error("ordinate_at: abscissa outside polygon");
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
            if (x <= vertices[i + 1].first) {
                const auto& [x0, y0] = vertices[i];
                const auto& [x1, y1] = vertices[i + 1];
                return y0 + (y1 - y0) * Rat(x - x0) / Rat(x1 - x0);
            }
        }
        return vertices.back().second;
    }

    const std::pair<Int, Rat>& last_vertex() const { return vertices.back(); }

    bool operator==(const NewtonPolygon& o) const { return vertices == o.vertices; }
};

namespace detail {

/// Lower convex hull of support points, truncated to the strictly descending
/// part (everything at or right of the first global minimum is dropped).
inline NewtonPolygon descending_hull(std::vector<std::pair<Int, Rat>> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<Int, Rat>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& [x1, y1] = hull[hull.size() - 2];
            const auto& [x2, y2] = hull[hull.size() - 1];
            // drop the middle point if it is on or above segment (x1,y1)-(pt)
            if ((y2 - y1) * Rat(pt.first - x1) >= (pt.second - y1) * Rat(x2 - x1))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    NewtonPolygon poly;
    poly.vertices.push_back(hull[0]);
    for (std::size_t i = 1; i < hull.size(); ++i) {
        if (hull[i].second < poly.vertices.back().second)
            poly.vertices.push_back(hull[i]);
        else
            break;
    }
    return poly;
}

} // namespace detail

/// Lower hull of {(i, v_p(a_i)) : a_i != 0}; collinear interior support points
/// are not vertices but stay recoverable for residual extraction.
inline NewtonPolygon first_order_polygon(const IntPoly& g, const Int& p) {
    if (g.is_zero()) throw Error("first_order_polygon: zero polynomial");
    if (g[0] == 0) throw Error("first_order_polygon: zero constant term (shift first)");
    std::vector<std::pair<Int, Rat>> pts;
    for (int i = 0; i <= g.degree(); ++i)
        if (g[i] != 0) pts.emplace_back(i, Rat(vp(g[i], p)));
    return detail::descending_hull(std::move(pts));
}

/// Residual polynomial of one edge, over F_p, coefficients in [0, p).
/// Coefficient j comes from the support point at abscissa x0 + e*j when that
/// point lies on the edge, and is zero when it lies strictly above.
struct ResidualPoly {
    Int p;
    std::vector<Int> coeffs; // constant first, degree = edge degree

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const ResidualPoly&) const = default;
};

inline ResidualPoly residual_poly(const IntPoly& g, const Int& p,
                                  const NewtonPolygon::Edge& edge) {
    if (den(edge.y0) != 1 || den(edge.y1) != 1)
        throw InternalConsistencyError("residual_poly: non-integral edge ordinates");
    ResidualPoly r;
    r.p = p;
    Int d = edge.degree;
    for (Int j = 0; j <= d; ++j) {
        Int x = edge.x0 + edge.e * j;
        Int yexp = num(edge.y0) - edge.ell * j; // exact ordinate on the edge
        Int coeff = 0;
        if (x <= g.degree() && g[static_cast<std::size_t>(x)] != 0) {
            const Int& c = g[static_cast<std::size_t>(x)];
            if (Int(vp(c, p)) == yexp) coeff = mod_floor(c / ipow(p, static_cast<unsigned>(yexp)), p);
        }
        r.coeffs.push_back(coeff);
    }
    if (r.coeffs.front() == 0 || r.coeffs.back() == 0)
        throw InternalConsistencyError("residual_poly: vanishing end coefficient");
    return r;
}

namespace detail {

/* F_p[Y] helpers on coefficient vectors in [0, p) */
inline std::vector<Int> fp_trim(std::vector<Int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}
inline std::vector<Int> fp_derivative(const std::vector<Int>& f, const Int& p) {
    std::vector<Int> d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mod_floor(Int(i) * f[i], p));
    return fp_trim(std::move(d));
}
inline std::vector<Int> fp_rem(std::vector<Int> a, const std::vector<Int>& b, const Int& p) {
    Int lead_inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        Int q = mod_floor(a.back() * lead_inv, p);
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = mod_floor(a[off + i] - q * b[i], p);
        a = fp_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}
inline std::vector<Int> fp_gcd(std::vector<Int> a, std::vector<Int> b, const Int& p) {
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!b.empty()) {
        auto r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace detail

inline bool fp_squarefree(const ResidualPoly& r) {
    if (r.degree() <= 1) return true;
    auto d = detail::fp_derivative(r.coeffs, r.p);
    if (d.empty()) return false; // derivative vanished: p-th power structure
    auto g = detail::fp_gcd(r.coeffs, d, r.p);
    return g.size() == 1;
}

/// p-regular: every edge's residual polynomial is squarefree over F_p.
inline bool is_p_regular(const IntPoly& g, const Int& p) {
    NewtonPolygon poly = first_order_polygon(g, p);
    for (const auto& e : poly.edges())
        if (!fp_squarefree(residual_poly(g, p, e))) return false;
    return true;
}

namespace detail {

/// Lattice points with both coordinates >= 1 on or below the polygon and
/// strictly above the horizontal line y = base.
inline Int points_under(const NewtonPolygon& poly, const Int& base) {
    Int count = 0;
    const Int x_last = poly.vertices.back().first;
    Int floor_base = base < 0 ? Int(0) : base;
    for (Int x = std::max(Int(1), poly.vertices.front().first); x <= x_last; ++x) {
        Int h = floor_rat(poly.ordinate_at(x));
        if (h > floor_base) count += h - floor_base;
    }
    return count;
}

} // namespace detail

/// Ore's theorem: v_p(index) = number of lattice points with positive integer
/// coordinates on or below the polygon, valid when the residuals are squarefree.
inline Int ore_index(const IntPoly& g, const Int& p) {
    NewtonPolygon poly = first_order_polygon(g, p);
    for (const auto& e : poly.edges())
        if (!fp_squarefree(residual_poly(g, p, e)))
            throw RegularityError("residual polynomial has repeated roots at p = " + p.str());
    return detail::points_under(poly, 0);
}

/// Key polynomial attached to the slope -c/3 for an A2 field, with its
/// residual root; verifies the four defining properties before returning.
struct KeyPolyData {
    IntPoly phi;
    Int ell, e;    // lambda = -ell/e = -c/3
    Int psi_root;  // residual is Y - psi_root over F_3
};

inline KeyPolyData key_polynomial(const NonicField& field) {
    if (!field.three) throw WrongCaseError("key_polynomial: not an A2 field");
    const ThreeData& td = *field.three;
    const Int& b = td.b;
    KeyPolyData kp;
    kp.ell = td.c;
    kp.e = 3;
    kp.psi_root = mod_floor(b, 3);
    if (mod_floor(b * b, 9) == 1) {
        kp.phi = IntPoly({-ipow(Int(3), td.c) * b, 0, 0, 1});
    } else if (td.c == 1) {
        Int eps = (td.k % 2 == 0) ? 1 : -1;
        kp.phi = IntPoly({-3 * b, -eps * 3 * b, 0, 1});
    } else {
        Int eps = ((td.k / 2) % 2 == 0) ? 1 : -1;
        kp.phi = IntPoly({-9 * b, 0, -eps * 3 * b, 1});
    }
    // (1) congruent to a power of x mod 3
    for (int i = 0; i < kp.phi.degree(); ++i)
        if (mod_floor(kp.phi[i], 3) != 0)
            throw InternalConsistencyError("key polynomial not a power of x mod 3");
    // (2) one-sided polygon with slope -c/3
    NewtonPolygon poly = first_order_polygon(kp.phi, 3);
    auto es = poly.edges();
    if (es.size() != 1 || es[0].slope != Rat(-Int(td.c), Int(3)))
        throw InternalConsistencyError("key polynomial polygon is not one-sided of slope -c/3");
    // (3) residual is Y - b over F_3
    ResidualPoly res = residual_poly(kp.phi, 3, es[0]);
    if (res.degree() != 1 || mod_floor(res.coeffs[0] + kp.psi_root, 3) != 0 || res.coeffs[1] != 1)
        throw InternalConsistencyError("key polynomial residual is not Y - b");
    // (4) deg phi = e * deg psi
    if (kp.phi.degree() != 3)
        throw InternalConsistencyError("key polynomial degree is not e * deg(psi)");
    return kp;
}

/// phi-adic expansion f = sum a_i phi^i together with the division quotients
/// q_1, ..., q_n (q_{j-1} = phi q_j + a_{j-1}).
struct PhiExpansion {
    IntPoly phi;
    std::vector<IntPoly> coeffs;     // a_0, a_1, ..., deg a_i < deg phi
    std::vector<IntPoly> quotients;  // q_1, q_2, ...

    const IntPoly& quotient(std::size_t j) const { return quotients.at(j - 1); }
};

inline PhiExpansion phi_expansion(const IntPoly& f, const IntPoly& phi) {
    if (!phi.is_monic() || phi.degree() < 1) throw Error("phi_expansion: phi must be monic");
    PhiExpansion ex;
    ex.phi = phi;
    IntPoly cur = f;
    while (true) {
        auto [q, r] = divrem_monic(cur, phi);
        ex.coeffs.push_back(r);
        if (q.is_zero()) break;
        ex.quotients.push_back(q);
        cur = q;
    }
    // reconstruction is the binding contract
    IntPoly acc;
    for (auto it = ex.coeffs.rbegin(); it != ex.coeffs.rend(); ++it) acc = acc * phi + *it;
    if (!(acc == f)) throw InternalConsistencyError("phi expansion does not reconstruct f");
    return ex;
}

/// V(P) = e * min_i (v_p(b_i) + i |lambda|) = min_i (e v_p(b_i) + i ell).
struct SecondOrderValuation {
    Int p, ell, e;

    Int operator()(const IntPoly& P) const {
        if (P.is_zero()) throw Error("V of zero polynomial");
        Int best = 0;
        bool first = true;
        for (int i = 0; i <= P.degree(); ++i) {
            if (P[i] == 0) continue;
            Int v = e * Int(vp(P[i], p)) + Int(i) * ell;
            if (first || v < best) { best = v; first = false; }
        }
        return best;
    }
};

/// Second-order polygon: lower hull of (i, V(a_i phi^i)), descending part.
inline NewtonPolygon v_polygon(const PhiExpansion& ex, const SecondOrderValuation& V) {
    Int Vphi = V(ex.phi);
    std::vector<std::pair<Int, Rat>> pts;
    for (std::size_t i = 0; i < ex.coeffs.size(); ++i) {
        if (ex.coeffs[i].is_zero()) continue;
        pts.emplace_back(Int(i), Rat(V(ex.coeffs[i]) + Int(i) * Vphi));
    }
    return detail::descending_hull(std::move(pts));
}

inline NewtonPolygon v_polygon(const IntPoly& f, const IntPoly& phi,
                               const SecondOrderValuation& V) {
    return v_polygon(phi_expansion(f, phi), V);
}

/// Points above the horizontal line through the last vertex, on or below the
/// V-polygon. Asserts each second-order residual is linear (the only shape
/// the supported configurations produce).
inline Int n2_count(const NewtonPolygon& vpoly) {
    for (const auto& e : vpoly.edges())
        if (e.degree != 1)
            throw UnsupportedConfigurationError(
                "second-order residual of degree " + e.degree.str() + " (want linear)");
    const auto& [xl, yl] = vpoly.last_vertex();
    if (den(yl) != 1) throw InternalConsistencyError("non-integral last vertex ordinate");
    return detail::points_under(vpoly, num(yl));
}

namespace detail {

struct A2Analysis {
    KeyPolyData kp;
    PhiExpansion ex;
    SecondOrderValuation V;
    NewtonPolygon first_order;
    NewtonPolygon vpoly;
    Int n1, n2;
};

inline A2Analysis analyze_A2(const NonicField& field) {
    A2Analysis an;
    an.kp = key_polynomial(field);
    IntPoly f = IntPoly::x_power(9) - IntPoly::constant(field.a);
    an.ex = phi_expansion(f, an.kp.phi);
    an.V = SecondOrderValuation{3, an.kp.ell, an.kp.e};
    const ThreeData& td = *field.three;

    an.first_order = first_order_polygon(f, 3);
    auto fes = an.first_order.edges();
    if (fes.size() != 1 || fes[0].e != 3)
        throw UnsupportedConfigurationError("A2 first-order polygon is not a single e = 3 edge");
    an.n1 = points_under(an.first_order, 0);
    if (an.n1 != 12 * Int(td.c) - 3)
        throw InternalConsistencyError("N1 disagrees with the lattice-count identity");

    // the k in {1,8} configuration promises V(a_0) >= 9c + 6
    if (mod_floor(td.b * td.b, 9) == 1) {
        if (an.V(an.ex.coeffs[0]) < 9 * Int(td.c) + 6)
            throw InternalConsistencyError("V(a_0) below the guaranteed bound");
    }
    an.vpoly = v_polygon(an.ex, an.V);
    an.n2 = n2_count(an.vpoly);
    return an;
}

} // namespace detail

/// v_3(index) for an A2 field via N_1 + N_2.
inline unsigned gmn_index(const NonicField& field) {
    auto an = detail::analyze_A2(field);
    return static_cast<unsigned>(an.n1 + an.n2);
}

/// The second-order p-integral basis: slots theta^{9-u} q_j(theta) over
/// 3^{floor(y_u + (Y_j - j V(phi))/e)}, paired so the numerator degrees hit
/// 0..8 exactly once.
inline PIntegralBasis gmn_p_basis(const NonicField& field) {
    auto an = detail::analyze_A2(field);
    Int Vphi = an.V(an.ex.phi);
    const Int e = 3;

    PIntegralBasis b;
    b.p = 3;
    std::array<bool, kDeg> filled{};
    auto place = [&](const Int& u, const Int& j) {
        Rat yu = an.first_order.ordinate_at(u);
        Rat Yj = an.vpoly.ordinate_at(j);
        Int expo = floor_rat(yu + (Yj - Rat(j * Vphi)) / Rat(e));
        const IntPoly& qj = an.ex.quotient(static_cast<std::size_t>(j));
        IntPoly numer = IntPoly::x_power(static_cast<std::size_t>(Int(9 - u))) * qj;
        int degn = numer.degree();
        if (degn < 0 || degn >= static_cast<int>(kDeg) || filled[degn])
            throw InternalConsistencyError("gmn_p_basis: slot degree collision");
        if (expo < 0) throw InternalConsistencyError("gmn_p_basis: negative exponent");
        filled[degn] = true;
        b.slots[degn].numerator = numer.to_coeffs9();
        b.slots[degn].exponent = static_cast<unsigned>(expo);
    };
    // j ranges over (a_t, b_t] per edge; with the polygon spanning [0, 3] this
    // covers j = 1, 2, 3, and j = 3 contributes the slots 1, theta, theta^2
    for (const auto& ed : an.vpoly.edges()) {
        for (Int j = ed.x0 + 1; j <= ed.x1; ++j)
            for (Int u = 7; u <= 9; ++u) place(u, j);
    }
    for (bool f : filled)
        if (!f) throw InternalConsistencyError("gmn_p_basis: uncovered slot degree");
    validate_shape(b);
    if (Int(b.exponent_sum()) != an.n1 + an.n2)
        throw InternalConsistencyError("gmn_p_basis: exponent sum != N1 + N2");
    return b;
}

/// A4 path: shift to xi = theta - a and run the first-order machinery at 3.
inline std::pair<unsigned, NewtonPolygon> shifted_analysis(const NonicField& field) {
    if (field.fact.exponent_of(3) != 0)
        throw WrongCaseError("shifted_analysis: 3 divides a");
    IntPoly f = IntPoly::x_power(9) - IntPoly::constant(field.a);
    IntPoly g = shift(f, field.a);
    NewtonPolygon poly = first_order_polygon(g, 3);
    Int idx = ore_index(g, 3);
    return {static_cast<unsigned>(idx), poly};
}

} // namespace nonic

#endif
