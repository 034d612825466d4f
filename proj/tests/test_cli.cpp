#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "cliquex/asymptotics.hpp"
#include "cliquex/expectation.hpp"
#include "cliquex/hypergraph.hpp"
#include "helpers.hpp"

using namespace cliquex;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string cli_path() {
    const char* b = std::getenv("CLIQUEX_BIN");
    REQUIRE(b != nullptr);
    return b;
}

// Runs the binary through the shell, capturing stdout, stderr and exit code.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const std::string errfile =
        (std::filesystem::temp_directory_path() /
         ("cliquex_cli_err_" + std::to_string(::getpid()) + "_" + std::to_string(counter++)))
            .string();
    const std::string cmd = env_prefix + cli_path() + " " + args + " 2>" + errfile;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream ef(errfile);
    std::stringstream ss;
    ss << ef.rdbuf();
    r.err = ss.str();
    std::filesystem::remove(errfile);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("exact rational report is byte-exact", "[cli]") {
    const RunResult r = run_cli("exact -n 3 -p 1/2 --mode rational");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out ==
            "{\"n\":3,\"p\":\"1/2\",\"total\":\"2\",\"per_size\":"
            "{\"1\":\"3/4\",\"2\":\"9/8\",\"3\":\"1/8\"}}\n");
}

TEST_CASE("usage failures exit 2 and print usage", "[cli]") {
    const RunResult unknown = run_cli("exact -n 3 -p 0.5 --frobnicate");
    REQUIRE(unknown.exit_code == 2);
    REQUIRE(unknown.err.find("Usage") != std::string::npos);
    REQUIRE(unknown.out.empty());

    REQUIRE(run_cli("").exit_code == 2);
    REQUIRE(run_cli("exact -n 3 -p not-a-number").exit_code == 2);
    REQUIRE(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("failure modes map to distinct exit codes", "[cli]") {
    REQUIRE(run_cli("exact -n 0 -p 0.5").exit_code == 3);
    REQUIRE(run_cli("exact -n 3 -p 5/4").exit_code == 3);
    REQUIRE(run_cli("exact -n 100 -p 1/2 --mode rational").exit_code == 4);
    REQUIRE(run_cli("exact -n 3 -p 0.5 -o /nonexistent-dir-for-cliquex/out.json").exit_code == 5);
    REQUIRE(run_cli("--help").exit_code == 0);
}

TEST_CASE("simulate reports are byte-identical across runs", "[cli]") {
    const std::string args = "simulate -n 8 -p 0.5 --trials 2000 --seed 7";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);

    const json j = json::parse(a.out);
    REQUIRE(j["n"] == 8);
    REQUIRE(j["trials"] == 2000);
    REQUIRE(j["master_seed"] == 7);
    REQUIRE(j.contains("mean"));
    REQUIRE(j.contains("std_error"));
}

TEST_CASE("profile CSV schema", "[cli]") {
    const RunResult r = run_cli("profile -n 5 -p 0.5 --format csv");
    REQUIRE(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 6);
    REQUIRE(rows[0] == "k,log_term");
    const auto prof = expectation_profile(ModelParams::log_domain(5, Real(0.5)));
    for (long k = 1; k <= 5; ++k) {
        const std::string& row = rows[static_cast<std::size_t>(k)];
        const std::string prefix = std::to_string(k) + ",";
        REQUIRE(row.rfind(prefix, 0) == 0);
        const Real parsed = Real::from_string(row.substr(prefix.size()));
        REQUIRE(parsed == prof.log_term(k));
    }
}

TEST_CASE("residual-sweep CSV schema", "[cli]") {
    const RunResult r = run_cli("residual-sweep --n-grid 2^4:2^6:x2 -p 0.5 --format csv");
    REQUIRE(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 4);
    REQUIRE(rows[0] == "n,p,log_total,residual");
    const std::vector<std::string> ns = {"16", "32", "64"};
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(rows[i + 1].rfind(ns[i] + ",0.5,", 0) == 0);
    }
}

TEST_CASE("log-domain JSON round-trips at the stated precision", "[cli]") {
    const RunResult r = run_cli("exact -n 10 -p 0.5");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["n"] == 10);
    REQUIRE(j["p"] == "0.5");
    REQUIRE(j["precision_bits"] == 128);
    const auto prof = expectation_profile(ModelParams::log_domain(10, Real(0.5, 128)));
    REQUIRE(Real::from_string(j["log_total"].get<std::string>(), 128) == prof.log_total);
}

TEST_CASE("precision can come from the environment or the flag", "[cli]") {
    const RunResult env = run_cli("exact -n 10 -p 0.5", "CLIQUEX_PRECISION_BITS=192 ");
    REQUIRE(env.exit_code == 0);
    const json je = json::parse(env.out);
    REQUIRE(je["precision_bits"] == 192);
    const auto prof = expectation_profile(ModelParams::log_domain(10, Real(0.5, 192)));
    REQUIRE(Real::from_string(je["log_total"].get<std::string>(), 192) == prof.log_total);

    const RunResult flag =
        run_cli("exact -n 10 -p 0.5 --precision-bits 64", "CLIQUEX_PRECISION_BITS=192 ");
    REQUIRE(flag.exit_code == 0);
    REQUIRE(json::parse(flag.out)["precision_bits"] == 64);

    REQUIRE(run_cli("exact -n 10 -p 0.5", "CLIQUEX_PRECISION_BITS=junk ").exit_code == 2);
}

TEST_CASE("analysis subcommands agree with the library", "[cli]") {
    const RunResult am = run_cli("argmax -n 1024 -p 0.5");
    REQUIRE(am.exit_code == 0);
    const json jam = json::parse(am.out);
    const auto prof = expectation_profile(ModelParams::log_domain(1024, Real(0.5)));
    REQUIRE(jam["argmax_k"] == prof.argmax_k);

    const RunResult st = run_cli("stationary -n 1024 -p 0.5");
    const json jst = json::parse(st.out);
    const AsymptoticParams params(1024, Real(0.5));
    REQUIRE(Real::from_string(jst["x_tilde"].get<std::string>()) == h_stationary_point(params));

    const RunResult asym = run_cli("asymptote -n 1024 -p 0.5 -x 6");
    const json jas = json::parse(asym.out);
    const EnvelopeEval e = envelope(params, Real(6L));
    REQUIRE(Real::from_string(jas["f"].get<std::string>()) == e.f);
    REQUIRE(Real::from_string(jas["g"].get<std::string>()) == e.g);

    const RunResult hy = run_cli("hyper -n 8 -r 3 -p 0.5");
    const json jhy = json::parse(hy.out);
    REQUIRE(Real::from_string(jhy["log_total"].get<std::string>()) ==
            hyper_expectation_log(HyperModelParams(8, 3, Real(0.5))));

    const RunResult cj = run_cli("conjecture -n 100 -r 3 -p 0.5");
    const json jcj = json::parse(cj.out);
    REQUIRE(Real::from_string(jcj["exponent"].get<std::string>()) ==
            conjecture_exponent(HyperModelParams(100, 3, Real(0.5)), Real(0L)));

    const RunResult oc = run_cli("oracle -n 4 -r 3 -p 1/2");
    const json joc = json::parse(oc.out);
    REQUIRE(joc["total"] == "53/16");
}

TEST_CASE("reports can be written to a file", "[cli]") {
    const std::string path =
        (std::filesystem::temp_directory_path() /
         ("cliquex_cli_out_" + std::to_string(::getpid()) + ".json"))
            .string();
    const RunResult r = run_cli("exact -n 3 -p 1/2 --mode rational -o " + path);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    REQUIRE(ss.str() ==
            "{\"n\":3,\"p\":\"1/2\",\"total\":\"2\",\"per_size\":"
            "{\"1\":\"3/4\",\"2\":\"9/8\",\"3\":\"1/8\"}}\n");
    std::filesystem::remove(path);
}
