#ifndef NONIC_REPORT_HPP
#define NONIC_REPORT_HPP

/// Analysis reports: assembling the per-prime and global results, the
/// verification and second-path sections, lossless JSON serialization and the
/// matching text rendering. All integers serialize as decimal strings.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nonic/arith.hpp"
#include "nonic/closed_form.hpp"
#include "nonic/errors.hpp"
#include "nonic/field.hpp"
#include "nonic/glue.hpp"
#include "nonic/newton.hpp"
#include "nonic/oracle.hpp"
#include "nonic/poly.hpp"
#include "nonic/theta.hpp"

namespace nonic {

using json = nlohmann::json;

struct AnalyzeOptions {
    bool verify = false;
    bool newton = false;
    FactorOptions factor;
};

struct SlotReport {
    std::vector<Int> numerator; // constant first, length = degree + 1
    unsigned exponent = 0;
    bool operator==(const SlotReport&) const = default;
};

struct PrimeReport {
    Int p;
    std::string case_tag;
    unsigned v_index = 0;
    std::vector<SlotReport> basis;
    bool operator==(const PrimeReport&) const = default;
};

struct GlobalRow {
    std::vector<Int> numerator;
    Int denominator = 1;
    bool operator==(const GlobalRow&) const = default;
};

struct NewtonPrimeReport {
    Int p;
    unsigned v_index = 0;
    std::string method; // "ore", "gmn", "shift", "none"
    bool agrees = true;
    bool operator==(const NewtonPrimeReport&) const = default;
};

struct NewtonSection {
    std::vector<NewtonPrimeReport> primes;
    bool all_agree = true;
    bool operator==(const NewtonSection&) const = default;
};

struct CheckReport {
    std::string name;
    bool pass = true;
    bool operator==(const CheckReport&) const = default;
};

struct VerifySection {
    std::vector<CheckReport> checks;
    bool all_pass = true;
    bool operator==(const VerifySection&) const = default;
};

struct AnalysisReport {
    int schema_version = 1;
    Int radicand_input;
    Int radicand;
    std::vector<std::pair<Int, unsigned>> removed_ninth_powers;
    Factorization factorization;
    std::optional<ThreeData> three;
    std::vector<PrimeReport> primes;
    Factorization index;
    Factorization discriminant;
    std::vector<GlobalRow> global_basis;
    std::optional<NewtonSection> newton;
    std::optional<VerifySection> verification;
    std::vector<std::string> notes;
    std::vector<std::string> discrepancies;
    bool operator==(const AnalysisReport&) const = default;
};

namespace detail {

inline std::vector<Int> slot_coeffs(const Coeffs9& numerator, std::size_t degree) {
    std::vector<Int> v;
    for (std::size_t i = 0; i <= degree; ++i) v.push_back(numerator[i]);
    return v;
}

inline SlotReport to_slot_report(const PIntegralBasis::Slot& s, std::size_t degree) {
    return {slot_coeffs(s.numerator, degree), s.exponent};
}

inline std::string poly_str(const std::vector<Int>& coeffs, const std::string& var) {
    IntPoly p(std::vector<Int>(coeffs.begin(), coeffs.end()));
    return p.str(var);
}

/* published reference values for worked radicands; computed results that
   differ produce a discrepancy note */
struct PublishedReference {
    Int radicand;
    Factorization index;
    Factorization disc;
    std::optional<std::pair<unsigned, unsigned>> claimed_integral_theta_power; // (k, denom)
};

inline std::vector<PublishedReference> published_references() {
    std::vector<PublishedReference> refs;
    {
        PublishedReference r;
        r.radicand = 54;
        r.index.push(3, 13);
        r.disc.push(2, 8);
        r.disc.push(3, 16);
        refs.push_back(r);
    }
    {
        PublishedReference r;
        r.radicand = 108;
        r.index.push(2, 5); // published; the formula and the certifier give 4
        r.index.push(3, 12);
        r.disc.push(2, 6);
        r.disc.push(3, 18);
        r.claimed_integral_theta_power = {{4u, 2u}};
        refs.push_back(r);
    }
    return refs;
}

} // namespace detail

namespace detail {

inline PrimeReport make_prime_report(const PrimeCase& pc, unsigned v, const PIntegralBasis& b) {
    PrimeReport rep;
    rep.p = pc.p;
    rep.case_tag = tag_name(pc.tag);
    rep.v_index = v;
    for (std::size_t j = 0; j < kDeg; ++j) rep.basis.push_back(to_slot_report(b.slots[j], j));
    return rep;
}

} // namespace detail

/// Per-prime record: case tag, index valuation, p-integral basis.
inline PrimeReport build_prime_report(const NonicField& field, const Int& p) {
    PrimeCase pc = classify_prime(field, p);
    return detail::make_prime_report(pc, index_valuation(field, pc), p_basis(field, pc));
}

/// Local equality of two p-integral bases: each element of one lies in the
/// other's span with p-integral coordinates, both ways.
inline bool same_local_module(const PIntegralBasis& x, const PIntegralBasis& y) {
    if (x.p != y.p) return false;
    auto span = [](const PIntegralBasis& b) {
        std::vector<ThetaPoly> els;
        for (std::size_t j = 0; j < kDeg; ++j) els.push_back(b.element(j));
        return OrderModule::from_elements(els);
    };
    OrderModule mx = span(x), my = span(y);
    auto locally_inside = [&](const PIntegralBasis& b, const OrderModule& m) {
        for (std::size_t j = 0; j < kDeg; ++j) {
            ThetaPoly el = b.element(j);
            QRow v;
            for (std::size_t t = 0; t < kDeg; ++t) v[t] = el.c[t];
            QRow c = m.lat.solve(v);
            for (const auto& q : c)
                if (boost::multiprecision::denominator(q) % b.p == 0) return false;
        }
        return true;
    };
    return locally_inside(x, my) && locally_inside(y, mx);
}

/// Full analysis of one radicand.
inline AnalysisReport analyze(const Int& a_raw, const AnalyzeOptions& opt = {}) {
    NonicField field = normalize(a_raw, opt.factor);
    AnalysisReport rep;
    rep.radicand_input = a_raw;
    rep.radicand = field.a;
    rep.removed_ninth_powers = field.removed_ninth_powers;
    rep.factorization = field.fact;
    rep.three = field.three;
    for (const auto& [p, cnt] : field.removed_ninth_powers)
        rep.notes.push_back("removed " + p.str() + "^" + std::to_string(9 * cnt) +
                            " from the radicand (theta/" + p.str() + " generates the same field)");
    if (field.a < 0)
        rep.notes.push_back("negative radicand: outside the published worked examples");

    std::vector<Int> primes = relevant_primes(field);
    std::vector<PIntegralBasis> pbases;
    for (const Int& p : primes) {
        PrimeCase pc = classify_prime(field, p);
        PIntegralBasis b = p_basis(field, pc);
        rep.primes.push_back(detail::make_prime_report(pc, index_valuation(field, pc), b));
        pbases.push_back(std::move(b));
    }
    rep.index = total_index(field);
    rep.discriminant = discriminant(field);

    GlobalBasis gb = glue(pbases);
    for (std::size_t i = 0; i < kDeg; ++i) {
        Coeffs9 c{};
        for (std::size_t j = 0; j < kDeg; ++j) c[j] = gb.num[i][j];
        rep.global_basis.push_back({detail::slot_coeffs(c, i), gb.d[i]});
    }

    if (opt.newton) {
        NewtonSection ns;
        IntPoly f = IntPoly::x_power(9) - IntPoly::constant(field.a);
        for (std::size_t pi = 0; pi < primes.size(); ++pi) {
            const Int& p = primes[pi];
            PrimeCase pc = classify_prime(field, p);
            NewtonPrimeReport npr;
            npr.p = p;
            switch (pc.tag) {
                case CaseTag::A1: {
                    npr.method = "ore";
                    npr.v_index = static_cast<unsigned>(ore_index(f, p));
                    break;
                }
                case CaseTag::A2: {
                    npr.method = "gmn";
                    npr.v_index = gmn_index(field);
                    if (!same_local_module(gmn_p_basis(field), pbases[pi])) npr.agrees = false;
                    break;
                }
                case CaseTag::A4i:
                case CaseTag::A4ii:
                case CaseTag::A4iii: {
                    npr.method = "shift";
                    npr.v_index = shifted_analysis(field).first;
                    break;
                }
                case CaseTag::A3: {
                    npr.method = "none";
                    npr.v_index = 0;
                    break;
                }
            }
            if (npr.v_index != rep.primes[pi].v_index) npr.agrees = false;
            ns.all_agree = ns.all_agree && npr.agrees;
            ns.primes.push_back(npr);
        }
        rep.newton = ns;
    }

    if (opt.verify) {
        VerifySection vs;
        auto check = [&](const std::string& name, bool ok) {
            vs.checks.push_back({name, ok});
            vs.all_pass = vs.all_pass && ok;
        };
        bool slots_ok = true;
        for (const auto& b : pbases)
            for (std::size_t j = 0; j < kDeg; ++j)
                slots_ok = slots_ok && is_algebraic_integer(b.element(j), field);
        for (const auto& el : gb.elements())
            slots_ok = slots_ok && is_algebraic_integer(el, field);
        check("basis elements are algebraic integers", slots_ok);

        OrderModule glued = OrderModule::from_elements(gb.elements());
        check("glued module is a ring", is_ring(glued, field));
        bool pmax = true;
        for (const Int& p : primes) pmax = pmax && p_maximal(glued, p, field);
        check("glued module is p-maximal at every prime dividing disc", pmax);

        OrderModule zk = maximal_order(field);
        check("maximal order equals the glued module", zk == glued);
        check("module index equals the closed-form index",
              module_index(zk) == rep.index.value());
        check("trace-form discriminant matches", trace_form_discriminant(zk, field) ==
                                                     rep.discriminant.value());
        {
            Int lhs = rep.discriminant.value() * rep.index.value() * rep.index.value();
            Int rhs = poly_discriminant(field).value();
            check("d_K * I^2 = 3^18 * a^8", lhs == rhs);
        }
        rep.verification = vs;
    }

    // published reference comparison
    for (const auto& ref : detail::published_references()) {
        if (ref.radicand != field.a) continue;
        for (const auto& [p, e] : ref.index.factors) {
            unsigned got = rep.index.exponent_of(p);
            if (got != e)
                rep.discrepancies.push_back(
                    "published reference for a = " + field.a.str() + " lists v_" + p.str() +
                    "(index) = " + std::to_string(e) + "; computed value is " +
                    std::to_string(got));
        }
        if (!(ref.disc == rep.discriminant))
            rep.discrepancies.push_back("published reference for a = " + field.a.str() +
                                        " lists discriminant " + ref.disc.str() +
                                        "; computed value is " + rep.discriminant.str());
        if (ref.claimed_integral_theta_power) {
            auto [k, dd] = *ref.claimed_integral_theta_power;
            ThetaPoly el = Rat(Int(1), Int(dd)) * ThetaPoly::theta_power(k);
            if (!is_algebraic_integer(el, field))
                rep.discrepancies.push_back(
                    "published reference claims theta^" + std::to_string(k) + "/" +
                    std::to_string(dd) + " is integral for a = " + field.a.str() +
                    "; the characteristic-polynomial test refutes this");
        }
    }
    return rep;
}

/* ---------- JSON ---------- */

namespace detail {

inline json fact_to_json(const Factorization& f) {
    json j;
    j["sign"] = std::to_string(f.sign);
    j["factors"] = json::array();
    for (const auto& [p, e] : f.factors)
        j["factors"].push_back({{"p", p.str()}, {"e", std::to_string(e)}});
    return j;
}
inline Factorization fact_from_json(const json& j) {
    Factorization f;
    f.sign = std::stoi(j.at("sign").get<std::string>());
    for (const auto& x : j.at("factors"))
        f.factors.emplace_back(Int(x.at("p").get<std::string>()),
                               static_cast<unsigned>(std::stoul(x.at("e").get<std::string>())));
    return f;
}

inline json ints_to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}
inline std::vector<Int> ints_from_json(const json& a) {
    std::vector<Int> v;
    for (const auto& x : a) v.emplace_back(x.get<std::string>());
    return v;
}

} // namespace detail

inline json to_json(const AnalysisReport& r) {
    json j;
    j["schema_version"] = r.schema_version;
    j["radicand_input"] = r.radicand_input.str();
    j["radicand"] = r.radicand.str();
    j["removed_ninth_powers"] = json::array();
    for (const auto& [p, c] : r.removed_ninth_powers)
        j["removed_ninth_powers"].push_back({{"p", p.str()}, {"count", std::to_string(c)}});
    j["factorization"] = detail::fact_to_json(r.factorization);
    if (r.three)
        j["three_data"] = {{"b", r.three->b.str()},
                           {"c", std::to_string(r.three->c)},
                           {"k", std::to_string(r.three->k)}};
    else
        j["three_data"] = nullptr;
    j["primes"] = json::array();
    for (const auto& pr : r.primes) {
        json pj;
        pj["p"] = pr.p.str();
        pj["case"] = pr.case_tag;
        pj["v_index"] = std::to_string(pr.v_index);
        pj["basis"] = json::array();
        for (const auto& s : pr.basis)
            pj["basis"].push_back({{"numerator", detail::ints_to_json(s.numerator)},
                                   {"exponent", std::to_string(s.exponent)}});
        j["primes"].push_back(pj);
    }
    j["index"] = detail::fact_to_json(r.index);
    j["discriminant"] = detail::fact_to_json(r.discriminant);
    j["global_basis"] = json::array();
    for (const auto& row : r.global_basis)
        j["global_basis"].push_back({{"numerator", detail::ints_to_json(row.numerator)},
                                     {"denominator", row.denominator.str()}});
    if (r.newton) {
        json nj;
        nj["all_agree"] = r.newton->all_agree;
        nj["primes"] = json::array();
        for (const auto& np : r.newton->primes)
            nj["primes"].push_back({{"p", np.p.str()},
                                    {"v_index", std::to_string(np.v_index)},
                                    {"method", np.method},
                                    {"agrees", np.agrees}});
        j["newton"] = nj;
    } else {
        j["newton"] = nullptr;
    }
    if (r.verification) {
        json vj;
        vj["all_pass"] = r.verification->all_pass;
        vj["checks"] = json::array();
        for (const auto& c : r.verification->checks)
            vj["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
        j["verification"] = vj;
    } else {
        j["verification"] = nullptr;
    }
    j["notes"] = r.notes;
    j["discrepancies"] = r.discrepancies;
    return j;
}

inline AnalysisReport report_from_json(const json& j) {
    AnalysisReport r;
    r.schema_version = j.at("schema_version").get<int>();
    r.radicand_input = Int(j.at("radicand_input").get<std::string>());
    r.radicand = Int(j.at("radicand").get<std::string>());
    for (const auto& x : j.at("removed_ninth_powers"))
        r.removed_ninth_powers.emplace_back(
            Int(x.at("p").get<std::string>()),
            static_cast<unsigned>(std::stoul(x.at("count").get<std::string>())));
    r.factorization = detail::fact_from_json(j.at("factorization"));
    if (!j.at("three_data").is_null()) {
        ThreeData td;
        td.b = Int(j.at("three_data").at("b").get<std::string>());
        td.c = static_cast<unsigned>(std::stoul(j.at("three_data").at("c").get<std::string>()));
        td.k = static_cast<unsigned>(std::stoul(j.at("three_data").at("k").get<std::string>()));
        r.three = td;
    }
    for (const auto& pj : j.at("primes")) {
        PrimeReport pr;
        pr.p = Int(pj.at("p").get<std::string>());
        pr.case_tag = pj.at("case").get<std::string>();
        pr.v_index = static_cast<unsigned>(std::stoul(pj.at("v_index").get<std::string>()));
        for (const auto& sj : pj.at("basis"))
            pr.basis.push_back(
                {detail::ints_from_json(sj.at("numerator")),
                 static_cast<unsigned>(std::stoul(sj.at("exponent").get<std::string>()))});
        r.primes.push_back(pr);
    }
    r.index = detail::fact_from_json(j.at("index"));
    r.discriminant = detail::fact_from_json(j.at("discriminant"));
    for (const auto& rj : j.at("global_basis"))
        r.global_basis.push_back({detail::ints_from_json(rj.at("numerator")),
                                  Int(rj.at("denominator").get<std::string>())});
    if (!j.at("newton").is_null()) {
        NewtonSection ns;
        ns.all_agree = j.at("newton").at("all_agree").get<bool>();
        for (const auto& nj : j.at("newton").at("primes"))
            ns.primes.push_back(
                {Int(nj.at("p").get<std::string>()),
                 static_cast<unsigned>(std::stoul(nj.at("v_index").get<std::string>())),
                 nj.at("method").get<std::string>(), nj.at("agrees").get<bool>()});
        r.newton = ns;
    }
    if (!j.at("verification").is_null()) {
        VerifySection vs;
        vs.all_pass = j.at("verification").at("all_pass").get<bool>();
        for (const auto& cj : j.at("verification").at("checks"))
            vs.checks.push_back({cj.at("name").get<std::string>(), cj.at("pass").get<bool>()});
        r.verification = vs;
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.discrepancies = j.at("discrepancies").get<std::vector<std::string>>();
    return r;
}

/* ---------- text rendering ---------- */

inline std::string render_text(const AnalysisReport& r) {
    std::ostringstream o;
    o << "radicand: " << r.radicand.str();
    if (r.radicand != r.radicand_input) o << " (normalized from " << r.radicand_input.str() << ")";
    o << "\n";
    o << "factorization: " << r.factorization.str() << "\n";
    if (r.three)
        o << "three-data: b = " << r.three->b.str() << ", c = " << r.three->c
          << ", k = " << r.three->k << "\n";
    for (const auto& pr : r.primes) {
        o << "p = " << pr.p.str() << ": case " << pr.case_tag << ", v_" << pr.p.str()
          << "(index) = " << pr.v_index << "\n";
        o << "  exponents:";
        for (const auto& s : pr.basis) o << " " << s.exponent;
        o << "\n";
        for (std::size_t jdx = 0; jdx < pr.basis.size(); ++jdx) {
            const auto& s = pr.basis[jdx];
            o << "  slot " << jdx << ": (" << detail::poly_str(s.numerator, "theta") << ") / "
              << pr.p.str() << "^" << s.exponent << "\n";
        }
    }
    o << "index: " << r.index.str() << " = " << r.index.value().str() << "\n";
    o << "discriminant: " << r.discriminant.str() << " = " << r.discriminant.value().str() << "\n";
    o << "global basis:\n";
    for (std::size_t i = 0; i < r.global_basis.size(); ++i) {
        const auto& row = r.global_basis[i];
        o << "  beta_" << i << " = (" << detail::poly_str(row.numerator, "theta") << ") / "
          << row.denominator.str() << "\n";
    }
    if (r.newton) {
        o << "second path (newton):" << (r.newton->all_agree ? " agrees" : " DISAGREES") << "\n";
        for (const auto& np : r.newton->primes)
            o << "  p = " << np.p.str() << ": v = " << np.v_index << " (" << np.method << ")"
              << (np.agrees ? "" : " DISAGREES") << "\n";
    }
    if (r.verification) {
        o << "verification:" << (r.verification->all_pass ? " all checks pass" : " FAILURES") << "\n";
        for (const auto& c : r.verification->checks)
            o << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "\n";
    }
    for (const auto& n : r.notes) o << "note: " << n << "\n";
    for (const auto& d : r.discrepancies) o << "discrepancy: " << d << "\n";
    return o.str();
}

} // namespace nonic

#endif
