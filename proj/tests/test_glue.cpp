#include <catch_amalgamated.hpp>

#include <algorithm>

#include "nonic/closed_form.hpp"
#include "nonic/glue.hpp"
#include "nonic/oracle.hpp"

using namespace nonic;

namespace {
std::vector<PIntegralBasis> all_pbases(const NonicField& f) {
    std::vector<PIntegralBasis> v;
    for (const Int& p : relevant_primes(f)) v.push_back(p_basis(f, classify_prime(f, p)));
    return v;
}
Coeffs9 row(std::initializer_list<int> v) {
    Coeffs9 r{};
    std::size_t i = 0;
    for (int x : v) r[i++] = x;
    return r;
}
} // namespace

TEST_CASE("glue of a single prime keeps the module") {
    NonicField f = normalize(54);
    PIntegralBasis b3 = p_basis_A2(f);
    GlobalBasis g = glue({b3});
    std::vector<ThetaPoly> slots;
    for (std::size_t j = 0; j < kDeg; ++j) slots.push_back(b3.element(j));
    REQUIRE(OrderModule::from_elements(g.elements()) == OrderModule::from_elements(slots));
}

TEST_CASE("golden canonical basis for a = 54") {
    GlobalBasis g = glue(all_pbases(normalize(54)));
    REQUIRE(g.d == std::array<Int, 9>{1, 1, 1, 3, 3, 9, 27, 27, 27});
    REQUIRE(g.num[3] == row({0, 0, 0, 1}));
    REQUIRE(g.num[4] == row({0, 0, 0, 0, 1}));
    REQUIRE(g.num[5] == row({0, 0, 3, 0, 0, 1}));
    REQUIRE(g.num[6] == row({9, 18, 9, 6, 6, 0, 1}));
    REQUIRE(g.num[7] == row({0, 9, 0, 0, 6, 0, 0, 1}));
    REQUIRE(g.num[8] == row({0, 0, 18, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("golden canonical basis for a = 108") {
    GlobalBasis g = glue(all_pbases(normalize(108)));
    REQUIRE(g.d == std::array<Int, 9>{1, 1, 1, 3, 3, 18, 18, 54, 54});
    REQUIRE(g.num[5] == row({0, 0, 6, 0, 0, 1}));
    REQUIRE(g.num[6] == row({0, 0, 0, 0, 0, 0, 1}));
    REQUIRE(g.num[7] == row({0, 36, 0, 0, 12, 0, 0, 1}));
    REQUIRE(g.num[8] == row({0, 0, 18, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("glue input validation") {
    NonicField f = normalize(108);
    auto bases = all_pbases(f);
    REQUIRE_THROWS_AS(glue({}), Error);
    REQUIRE_THROWS_AS(glue({bases[0], bases[0]}), Error); // duplicate primes
    // order independence
    auto rev = bases;
    std::reverse(rev.begin(), rev.end());
    REQUIRE(glue(bases) == glue(rev));
}

TEST_CASE("canonicalize") {
    std::vector<ThetaPoly> power;
    for (std::size_t i = 0; i < kDeg; ++i) power.push_back(ThetaPoly::theta_power(i));
    GlobalBasis id = canonicalize(power);
    REQUIRE(id.is_identity());

    // reversed column order canonicalizes to the same matrix
    NonicField f = normalize(54);
    GlobalBasis g = glue(all_pbases(f));
    std::vector<ThetaPoly> els = g.elements();
    std::reverse(els.begin(), els.end());
    REQUIRE(canonicalize(els) == g);

    // rank deficiency
    std::vector<ThetaPoly> bad(kDeg, ThetaPoly::one());
    REQUIRE_THROWS_AS(canonicalize(bad), RankError);

    // canonical input is a fixed point of the GlobalBasis overload
    REQUIRE(canonicalize(g) == g);

    // a module missing Z[theta] is rejected
    std::vector<ThetaPoly> doubled;
    for (std::size_t i = 0; i < kDeg; ++i) doubled.push_back(Rat(2) * ThetaPoly::theta_power(i));
    REQUIRE_THROWS_AS(canonicalize(doubled), ContainmentError);
}

TEST_CASE("total_index") {
    Factorization i54 = total_index(normalize(54));
    REQUIRE(i54.factors == std::vector<std::pair<Int, unsigned>>{{3, 13u}});
    REQUIRE(total_index(normalize(5)).factors.empty());
    Factorization i108 = total_index(normalize(108));
    REQUIRE(i108.factors == std::vector<std::pair<Int, unsigned>>{{2, 4u}, {3, 12u}});
}

TEST_CASE("discriminant") {
    Factorization d54 = discriminant(normalize(54));
    REQUIRE(d54.factors == std::vector<std::pair<Int, unsigned>>{{2, 8u}, {3, 16u}});
    Factorization d5 = discriminant(normalize(5));
    REQUIRE(d5.factors == std::vector<std::pair<Int, unsigned>>{{3, 18u}, {5, 8u}});
    Factorization d108 = discriminant(normalize(108));
    REQUIRE(d108.factors == std::vector<std::pair<Int, unsigned>>{{2, 8u}, {3, 18u}});
}

TEST_CASE("d_K * I^2 = 3^18 a^8 exactly over a sweep") {
    for (int a = -60; a <= 60; ++a) {
        if (a == 0 || a == 1 || a == -1) continue;
        NonicField f;
        try {
            f = normalize(a);
        } catch (const ReducibleError&) {
            continue;
        }
        Int I = total_index(f).value();
        Int dK = discriminant(f).value();
        REQUIRE(dK * I * I == ipow(3, 18) * ipow(f.a, 8));
    }
}

TEST_CASE("squarefree radicands with 9 not dividing a^2 - 1 get the power basis") {
    for (int a = -80; a <= 80; ++a) {
        if (a == 0 || a == 1 || a == -1) continue;
        NonicField f;
        try {
            f = normalize(a);
        } catch (const ReducibleError&) {
            continue;
        }
        if (!f.fact.is_squarefree() || mod_floor(Int(a) * a - 1, 9) == 0) continue;
        GlobalBasis g = glue(all_pbases(f));
        REQUIRE(g.is_identity());
    }
}

TEST_CASE("glue output certifies for mixed-prime fields") {
    for (int a : {108, 200, 100, -100, 40, 56, 104, 152, 136}) {
        NonicField f = normalize(a);
        GlobalBasis g = glue(all_pbases(f));
        g.validate();
        REQUIRE(g.denominator_product() == total_index(f).value());
        OrderModule m = OrderModule::from_elements(g.elements());
        REQUIRE(is_ring(m, f));
        REQUIRE(module_index(m) == total_index(f).value());
        for (const Int& p : relevant_primes(f)) REQUIRE(p_maximal(m, p, f));
    }
}
