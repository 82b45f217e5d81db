#ifndef NONIC_CLI_HPP
#define NONIC_CLI_HPP

/// Command-line front end: analyze / pbasis / sweep, text or JSON output.
/// Exit codes: 0 ok, 2 invalid or reducible input, 3 factorization budget,
/// 4 cross-path disagreement or verification failure.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nonic/report.hpp"

namespace nonic::cli {

namespace detail {

inline std::optional<Int> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return std::nullopt;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    return Int(s);
}

inline FactorOptions factor_options_from_env() {
    FactorOptions f;
    if (const char* v = std::getenv("NONIC_FACTOR_BUDGET")) {
        if (auto b = parse_int(v); b && *b > 1) f.trial_bound = *b;
    }
    return f;
}

struct SweepLine {
    std::string text;
    bool analyzed = false;
    bool verified_ok = true;
    bool agrees = true;
    bool has_discrepancy = false;
    bool internal_error = false;
};

inline json detail_fact(const Factorization& f) { return nonic::detail::fact_to_json(f); }

inline bool is_power_basis(const AnalysisReport& rep) {
    for (std::size_t i = 0; i < rep.global_basis.size(); ++i) {
        const auto& row = rep.global_basis[i];
        if (row.denominator != 1) return false;
        for (std::size_t j = 0; j + 1 < row.numerator.size(); ++j)
            if (row.numerator[j] != 0) return false;
    }
    return true;
}

inline SweepLine sweep_one(const Int& a, const AnalyzeOptions& opt, bool json_mode) {
    SweepLine line;
    try {
        AnalysisReport rep = analyze(a, opt);
        if (rep.radicand != a) {
            line.text = json_mode
                            ? json{{"a", a.str()}, {"skipped", "not 9th-power-free"}}.dump()
                            : "a = " + a.str() + ": skipped (not 9th-power-free; same field as " +
                                  rep.radicand.str() + ")";
            return line;
        }
        line.analyzed = true;
        line.verified_ok = !rep.verification || rep.verification->all_pass;
        line.agrees = !rep.newton || rep.newton->all_agree;
        line.has_discrepancy = !rep.discrepancies.empty();
        if (json_mode) {
            json j;
            j["a"] = a.str();
            j["index"] = detail_fact(rep.index);
            j["discriminant"] = detail_fact(rep.discriminant);
            json cases = json::array();
            for (const auto& pr : rep.primes)
                cases.push_back({{"p", pr.p.str()},
                                 {"case", pr.case_tag},
                                 {"v_index", std::to_string(pr.v_index)}});
            j["cases"] = cases;
            j["power_basis"] = is_power_basis(rep);
            if (rep.verification) j["verified"] = rep.verification->all_pass;
            if (rep.newton) j["agrees"] = rep.newton->all_agree;
            j["discrepancies"] = rep.discrepancies;
            line.text = j.dump();
        } else {
            std::string s = "a = " + a.str() + ": index = " + rep.index.str() +
                            ", d_K = " + rep.discriminant.str() + ", cases [";
            for (std::size_t i = 0; i < rep.primes.size(); ++i) {
                if (i) s += " ";
                s += rep.primes[i].p.str() + ":" + rep.primes[i].case_tag;
            }
            s += "]";
            if (is_power_basis(rep)) s += ", power basis";
            if (rep.verification) s += rep.verification->all_pass ? ", verify ok" : ", VERIFY FAILED";
            if (rep.newton) s += rep.newton->all_agree ? ", paths agree" : ", PATHS DISAGREE";
            for (const auto& d : rep.discrepancies) s += ", discrepancy: " + d;
            line.text = s;
        }
    } catch (const ReducibleError&) {
        line.text = json_mode ? json{{"a", a.str()}, {"skipped", "reducible"}}.dump()
                              : "a = " + a.str() + ": skipped (x^9 - a reducible)";
    } catch (const FactorBudgetError& e) {
        line.text = json_mode ? json{{"a", a.str()}, {"error", e.what()}}.dump()
                              : "a = " + a.str() + ": error (" + e.what() + ")";
    } catch (const std::exception& e) {
        line.text = json_mode ? json{{"a", a.str()}, {"error", e.what()}}.dump()
                              : "a = " + a.str() + ": error (" + e.what() + ")";
        line.internal_error = true;
    }
    return line;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact index, p-integral bases, integral basis and discriminant of Q((a)^(1/9))",
                 "nonic"};
    app.require_subcommand(1);

    std::string a_str, p_str, lo_str, hi_str;
    bool json_mode = false, verify = false, newton = false;
    unsigned jobs = 1;

    CLI::App* an = app.add_subcommand("analyze", "analyze one radicand");
    an->add_option("a", a_str, "radicand of x^9 - a")->required();
    an->add_flag("--json", json_mode, "emit JSON");
    an->add_flag("--verify", verify, "run the linear-algebra verification pass");
    an->add_flag("--newton", newton, "run the polygon path and assert agreement");

    CLI::App* pb = app.add_subcommand("pbasis", "p-integral basis for one prime");
    pb->add_option("a", a_str, "radicand of x^9 - a")->required();
    pb->add_option("p", p_str, "prime")->required();
    pb->add_flag("--json", json_mode, "emit JSON");

    CLI::App* sw = app.add_subcommand("sweep", "analyze every radicand in [lo, hi]");
    sw->add_option("lo", lo_str, "lower bound")->required();
    sw->add_option("hi", hi_str, "upper bound")->required();
    sw->add_flag("--json", json_mode, "emit JSON lines");
    sw->add_flag("--verify", verify, "run the verification pass per field");
    sw->add_flag("--newton", newton, "run the polygon path per field");
    sw->add_option("--jobs", jobs, "worker threads")->default_val(1u);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    AnalyzeOptions opt;
    opt.verify = verify;
    opt.newton = newton;
    opt.factor = detail::factor_options_from_env();

    if (an->parsed()) {
        auto a = detail::parse_int(a_str);
        if (!a) {
            err << "error: radicand is not an integer: " << a_str << "\n";
            return 2;
        }
        try {
            AnalysisReport rep = analyze(*a, opt);
            out << (json_mode ? to_json(rep).dump(2) + "\n" : render_text(rep));
            bool mismatch = (rep.newton && !rep.newton->all_agree) ||
                            (rep.verification && !rep.verification->all_pass);
            return mismatch ? 4 : 0;
        } catch (const ReducibleError& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        } catch (const FactorBudgetError& e) {
            err << "error: " << e.what() << "\n";
            return 3;
        }
    }

    if (pb->parsed()) {
        auto a = detail::parse_int(a_str);
        auto p = detail::parse_int(p_str);
        if (!a || !p) {
            err << "error: arguments must be integers\n";
            return 2;
        }
        if (*p < 2 || !is_prime(*p)) {
            err << "error: p = " << p->str() << " is not a certified prime\n";
            return 2;
        }
        try {
            NonicField field = normalize(*a, opt.factor);
            PrimeReport rep = build_prime_report(field, *p);
            if (json_mode) {
                json j;
                j["schema_version"] = 1;
                j["radicand"] = field.a.str();
                j["p"] = rep.p.str();
                j["case"] = rep.case_tag;
                j["v_index"] = std::to_string(rep.v_index);
                j["basis"] = json::array();
                for (const auto& s : rep.basis)
                    j["basis"].push_back({{"numerator", nonic::detail::ints_to_json(s.numerator)},
                                          {"exponent", std::to_string(s.exponent)}});
                out << j.dump(2) << "\n";
            } else {
                out << "radicand: " << field.a.str() << "\n";
                out << "p = " << rep.p.str() << ": case " << rep.case_tag << ", v_"
                    << rep.p.str() << "(index) = " << rep.v_index << "\n";
                for (std::size_t jdx = 0; jdx < rep.basis.size(); ++jdx)
                    out << "  slot " << jdx << ": ("
                        << nonic::detail::poly_str(rep.basis[jdx].numerator, "theta") << ") / "
                        << rep.p.str() << "^" << rep.basis[jdx].exponent << "\n";
            }
            return 0;
        } catch (const ReducibleError& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        } catch (const FactorBudgetError& e) {
            err << "error: " << e.what() << "\n";
            return 3;
        }
    }

    // sweep
    auto lo = detail::parse_int(lo_str);
    auto hi = detail::parse_int(hi_str);
    if (!lo || !hi) {
        err << "error: bounds must be integers\n";
        return 2;
    }
    if (*lo > *hi) {
        err << "error: lo > hi\n";
        return 2;
    }
    std::vector<Int> values;
    for (Int a = *lo; a <= *hi; ++a) {
        if (a == 0 || a == 1 || a == -1) continue;
        values.push_back(a);
    }
    std::size_t processed = 0, verified = 0, discrepancies = 0;
    bool any_bad = false;
    auto consume = [&](const detail::SweepLine& l) {
        out << l.text << "\n";
        if (l.analyzed) ++processed;
        if (l.analyzed && opt.verify && l.verified_ok) ++verified;
        if (l.has_discrepancy) ++discrepancies;
        if (l.internal_error || (l.analyzed && (!l.verified_ok || !l.agrees))) any_bad = true;
    };
    if (jobs <= 1) {
        for (const Int& a : values) consume(detail::sweep_one(a, opt, json_mode));
    } else {
        std::vector<std::optional<detail::SweepLine>> results(values.size());
        std::atomic<std::size_t> next{0};
        std::mutex mu;
        std::condition_variable cv;
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= values.size()) break;
                detail::SweepLine line = detail::sweep_one(values[i], opt, json_mode);
                {
                    std::lock_guard<std::mutex> lk(mu);
                    results[i] = std::move(line);
                }
                cv.notify_all();
            }
        };
        std::vector<std::thread> pool;
        unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(values.size()));
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        // reorder buffer: emit in input order as results land
        std::unique_lock<std::mutex> lk(mu);
        for (std::size_t i = 0; i < values.size(); ++i) {
            cv.wait(lk, [&] { return results[i].has_value(); });
            consume(*results[i]);
        }
        lk.unlock();
        for (auto& t : pool) t.join();
    }
    if (json_mode) {
        out << json{{"summary",
                     {{"fields", std::to_string(processed)},
                      {"verified", std::to_string(verified)},
                      {"discrepancies", std::to_string(discrepancies)}}}}
                   .dump()
            << "\n";
    } else {
        out << "summary: " << processed << " fields";
        if (opt.verify) out << ", " << verified << " verified";
        out << ", " << discrepancies << " with discrepancy notes\n";
    }
    return any_bad ? 4 : 0;
}

} // namespace nonic::cli

#endif
