#include <catch_amalgamated.hpp>

#include <sstream>

#include "nonic/cli.hpp"
#include "nonic/report.hpp"

using namespace nonic;

namespace {
int run_cli(std::initializer_list<std::string> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int rc = cli::run(std::vector<std::string>(args), out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}
} // namespace

TEST_CASE("json round trip is lossless") {
    AnalyzeOptions with_all;
    with_all.verify = true;
    with_all.newton = true;
    for (auto [a, opt] : std::vector<std::pair<int, AnalyzeOptions>>{
             {54, with_all}, {108, with_all}, {5, {}}, {2560, {}}, {-270, {}}}) {
        AnalysisReport rep = analyze(a, opt);
        json j = to_json(rep);
        AnalysisReport back = report_from_json(json::parse(j.dump()));
        REQUIRE(back == rep);
    }
}

TEST_CASE("text and json carry the same numeric content") {
    AnalyzeOptions opt;
    AnalysisReport rep = analyze(54, opt);
    std::string text = render_text(rep);
    std::string js = to_json(rep).dump();

    REQUIRE(text.find("3^13") != std::string::npos);
    REQUIRE(text.find("2^8 * 3^16") != std::string::npos);
    REQUIRE(text.find("12*theta + 12") != std::string::npos);
    REQUIRE(text.find("1594323") != std::string::npos);

    // the same values in json form
    json j = json::parse(js);
    REQUIRE(j["index"]["factors"][0]["p"] == "3");
    REQUIRE(j["index"]["factors"][0]["e"] == "13");
    REQUIRE(j["discriminant"]["factors"][0]["p"] == "2");
    REQUIRE(j["discriminant"]["factors"][0]["e"] == "8");
    REQUIRE(j["discriminant"]["factors"][1]["e"] == "16");
    bool found_q2 = false;
    for (const auto& s : j["primes"][1]["basis"])
        if (s["numerator"] == json::array({"12", "12", "0", "1"})) found_q2 = true;
    REQUIRE(found_q2);
}

TEST_CASE("discrepancy notes fire only where published values fail") {
    AnalysisReport r54 = analyze(54);
    REQUIRE(r54.discrepancies.empty());

    AnalysisReport r108 = analyze(108);
    REQUIRE(r108.discrepancies.size() == 3);
    bool v2note = false, dknote = false, intnote = false;
    for (const auto& d : r108.discrepancies) {
        if (d.find("v_2(index) = 5") != std::string::npos) v2note = true;
        if (d.find("2^6 * 3^18") != std::string::npos) dknote = true;
        if (d.find("theta^4/2") != std::string::npos) intnote = true;
    }
    REQUIRE(v2note);
    REQUIRE(dknote);
    REQUIRE(intnote);
}

TEST_CASE("normalization and sign notes") {
    AnalysisReport r = analyze(2560);
    REQUIRE(r.radicand == 5);
    REQUIRE(r.notes.size() == 1);
    AnalysisReport rn = analyze(-5);
    REQUIRE(!rn.notes.empty());
}

TEST_CASE("cli analyze exit codes") {
    std::string out, err;
    REQUIRE(run_cli({"analyze", "54"}, &out) == 0);
    REQUIRE(out.find("3^13") != std::string::npos);

    REQUIRE(run_cli({"analyze", "8"}, &out, &err) == 2);
    REQUIRE(err.find("reducible") != std::string::npos);

    REQUIRE(run_cli({"analyze", "abc"}, &out, &err) == 2);
    REQUIRE(run_cli({"analyze", "54", "--json", "--verify", "--newton"}, &out) == 0);
    json j = json::parse(out); // valid json including verification sections
    REQUIRE(j["verification"]["all_pass"] == true);
    REQUIRE(j["newton"]["all_agree"] == true);

    // prime above the deterministic certification range -> budget error
    REQUIRE(run_cli({"analyze", "341550071728361"}, &out, &err) == 3);
}

TEST_CASE("cli pbasis") {
    std::string out, err;
    REQUIRE(run_cli({"pbasis", "54", "3"}, &out) == 0);
    REQUIRE(out.find("case A2") != std::string::npos);
    REQUIRE(out.find("v_3(index) = 13") != std::string::npos);

    REQUIRE(run_cli({"pbasis", "54", "5"}, &out) == 0);
    REQUIRE(out.find("v_5(index) = 0") != std::string::npos);

    REQUIRE(run_cli({"pbasis", "26", "3", "--json"}, &out) == 0);
    json j = json::parse(out);
    REQUIRE(j["case"] == "A4iii");
    REQUIRE(j["basis"][8]["exponent"] == "2");

    REQUIRE(run_cli({"pbasis", "54", "4"}, &out, &err) == 2); // 4 is not prime
    REQUIRE(run_cli({"pbasis", "8", "3"}, &out, &err) == 2);
}

TEST_CASE("cli sweep") {
    std::string out;
    REQUIRE(run_cli({"sweep", "2", "2"}, &out) == 0);
    REQUIRE(out.find("a = 2:") != std::string::npos);
    REQUIRE(out.find("power basis") != std::string::npos);

    REQUIRE(run_cli({"sweep", "100", "110", "--verify"}, &out) == 0);
    REQUIRE(out.find("a = 108") != std::string::npos);
    REQUIRE(out.find("discrepancy") != std::string::npos);
    REQUIRE(out.find("summary:") != std::string::npos);

    // json-lines mode: every line parses on its own
    REQUIRE(run_cli({"sweep", "24", "30", "--json"}, &out) == 0);
    std::istringstream lines(out);
    std::string line;
    int parsed = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        ++parsed;
    }
    REQUIRE(parsed >= 7); // 24..30 plus the summary, minus skips
    REQUIRE(run_cli({"sweep", "5", "2"}) == 2); // lo > hi
}

TEST_CASE("cli sweep with a worker pool keeps input order") {
    std::string seq, par;
    REQUIRE(run_cli({"sweep", "2", "40", "--newton"}, &seq) == 0);
    REQUIRE(run_cli({"sweep", "2", "40", "--newton", "--jobs", "4"}, &par) == 0);
    REQUIRE(seq == par);
}

TEST_CASE("cli sweep over a negative range") {
    std::string out;
    REQUIRE(run_cli({"sweep", "-5", "-2", "--verify", "--newton"}, &out) == 0);
    REQUIRE(out.find("a = -5:") != std::string::npos);
    REQUIRE(out.find("a = -2:") != std::string::npos);
    REQUIRE(out.find("4 fields, 4 verified") != std::string::npos);
}

TEST_CASE("cli sweep skips radicands that do not define a new field") {
    std::string out;
    REQUIRE(run_cli({"sweep", "511", "513"}, &out) == 0);
    REQUIRE(out.find("a = 512: skipped") != std::string::npos);
    REQUIRE(out.find("a = 513: index") != std::string::npos);

    REQUIRE(run_cli({"sweep", "2560", "2560"}, &out) == 0);
    REQUIRE(out.find("not 9th-power-free") != std::string::npos);
}

TEST_CASE("factor budget env var is honored") {
    setenv("NONIC_FACTOR_BUDGET", "50021", 1);
    std::string out;
    REQUIRE(run_cli({"analyze", "54", "--json"}, &out) == 0);
    REQUIRE(json::parse(out)["index"]["factors"][0]["e"] == "13");
    unsetenv("NONIC_FACTOR_BUDGET");
}
