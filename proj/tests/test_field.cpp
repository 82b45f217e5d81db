#include <catch_amalgamated.hpp>

#include "nonic/field.hpp"
#include "nonic/oracle.hpp"

using namespace nonic;

TEST_CASE("normalize strips 9th powers") {
    NonicField f = normalize(2560); // 2^9 * 5
    REQUIRE(f.a == 5);
    REQUIRE(f.removed_ninth_powers == std::vector<std::pair<Int, unsigned>>{{2, 1u}});

    NonicField g = normalize(Int(3) * ipow(2, 18)); // 2^18 * 3
    REQUIRE(g.a == 3);
}

TEST_CASE("normalize derives the 3-adic data") {
    NonicField f = normalize(54);
    REQUIRE(f.a == 54);
    REQUIRE(f.three.has_value());
    REQUIRE(f.three->b == 2);
    REQUIRE(f.three->c == 1);
    REQUIRE(f.three->k == 2);

    NonicField g = normalize(-54);
    REQUIRE(g.three->b == -2);
    REQUIRE(g.three->k == 7); // least positive residue of -2 mod 9

    NonicField h = normalize(5103); // 3^6 * 7
    REQUIRE(h.three->c == 2);
    REQUIRE(h.three->k == 7);

    REQUIRE(!normalize(10).three.has_value());
    REQUIRE(!normalize(99).three.has_value()); // v_3 = 2 not divisible by 3
}

TEST_CASE("normalize rejects reducible radicands") {
    REQUIRE_THROWS_AS(normalize(8), ReducibleError);    // 2^3
    REQUIRE_THROWS_AS(normalize(-27), ReducibleError);  // (-3)^3
    REQUIRE_THROWS_AS(normalize(0), ReducibleError);
    REQUIRE_THROWS_AS(normalize(1), ReducibleError);
    REQUIRE_THROWS_AS(normalize(-1), ReducibleError);
    REQUIRE_THROWS_AS(normalize(512), ReducibleError);  // 2^9 -> 1
    REQUIRE_THROWS_AS(normalize(1728), ReducibleError); // 12^3
}

TEST_CASE("power parts factor the radicand") {
    NonicField f = normalize(108); // 2^2 * 3^3
    REQUIRE(f.power_parts[2] == 2);
    REQUIRE(f.power_parts[3] == 3);
    Int prod = 1;
    for (unsigned i = 1; i < kDeg; ++i) prod *= ipow(f.power_parts[i], i);
    REQUIRE(prod == 108);

    NonicField g = normalize(-54);
    Int prodg = 1;
    for (unsigned i = 1; i < kDeg; ++i) prodg *= ipow(g.power_parts[i], i);
    REQUIRE(prodg == -54);
}

TEST_CASE("c_denominator") {
    NonicField f = normalize(108);
    REQUIRE(c_denominator(f, 5) == 6); // 2^floor(10/9) * 3^floor(15/9)
    NonicField g = normalize(10);
    for (unsigned k = 1; k <= 8; ++k) REQUIRE(c_denominator(g, k) == 1);
    NonicField h = normalize(256); // 2^8
    REQUIRE(c_denominator(h, 8) == 128);
    REQUIRE_THROWS_AS(c_denominator(f, 0), Error);
    REQUIRE_THROWS_AS(c_denominator(f, 9), Error);
}

TEST_CASE("classify_prime examples") {
    REQUIRE(classify_prime(normalize(54), 3).tag == CaseTag::A2);
    REQUIRE(classify_prime(normalize(10), 3).tag == CaseTag::A4ii);  // v_3(99) = 2
    REQUIRE(classify_prime(normalize(5), 7).tag == CaseTag::A3);
    REQUIRE(classify_prime(normalize(5), 3).tag == CaseTag::A4i);    // v_3(24) = 1
    REQUIRE(classify_prime(normalize(26), 3).tag == CaseTag::A4iii); // v_3(675) = 3
    REQUIRE(classify_prime(normalize(108), 2).tag == CaseTag::A1);
    REQUIRE(classify_prime(normalize(99), 3).tag == CaseTag::A1);    // 3 | a, 3 ∤ v_3(a)
    REQUIRE(classify_prime(normalize(12), 3).tag == CaseTag::A1);
}

TEST_CASE("classification is exhaustive and consistent over a sweep") {
    for (int a = -120; a <= 120; ++a) {
        if (a == 0 || a == 1 || a == -1) continue;
        NonicField f;
        try {
            f = normalize(a);
        } catch (const ReducibleError&) {
            continue;
        }
        for (const Int& p : relevant_primes(f)) {
            PrimeCase pc = classify_prime(f, p);
            unsigned v = f.fact.exponent_of(p);
            switch (pc.tag) {
                case CaseTag::A1:
                    REQUIRE(v > 0);
                    REQUIRE(!(p == 3 && v % 3 == 0));
                    break;
                case CaseTag::A2:
                    REQUIRE(p == 3);
                    REQUIRE(v % 3 == 0);
                    REQUIRE(v > 0);
                    REQUIRE(f.three.has_value());
                    break;
                case CaseTag::A3:
                    REQUIRE(v == 0);
                    REQUIRE(p != 3);
                    break;
                case CaseTag::A4i:
                    REQUIRE((p == 3 && v == 0));
                    REQUIRE(vp(f.a * f.a - 1, 3) <= 1);
                    break;
                case CaseTag::A4ii:
                    REQUIRE((p == 3 && v == 0));
                    REQUIRE(vp(f.a * f.a - 1, 3) == 2);
                    break;
                case CaseTag::A4iii:
                    REQUIRE((p == 3 && v == 0));
                    REQUIRE(vp(f.a * f.a - 1, 3) >= 3);
                    break;
            }
        }
        if (f.three) {
            REQUIRE(f.three->k >= 1);
            REQUIRE(f.three->k <= 8);
            REQUIRE(f.three->k != 3);
            REQUIRE(f.three->k != 6);
            REQUIRE((f.three->c == 1 || f.three->c == 2));
            REQUIRE(mod_floor(f.three->b - f.three->k, 9) == 0);
        }
    }
}

TEST_CASE("theta^k / C_k is an algebraic integer") {
    for (int a : {54, 108, 256, 270, -54, -100, 192, 99, 12, 5103}) {
        NonicField f = normalize(a);
        for (unsigned k = 1; k <= 8; ++k) {
            ThetaPoly el = Rat(Int(1), c_denominator(f, k)) * ThetaPoly::theta_power(k);
            REQUIRE(is_algebraic_integer(el, f));
        }
    }
}
