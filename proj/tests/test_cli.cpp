#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "cli_helpers.hpp"

namespace {

const std::string exe = DRIC_CLI_PATH;

const char* tg_doc = R"({"n": 4, "m": 5, "c": 1.0})";
const char* umb_doc = R"({"n": 4, "m": 5, "c": 0.0,
  "h": [{"r": 1, "matrix": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}]})";
const char* perturbed_doc = R"({"n": 4, "m": 5, "c": 0.0,
  "h": [{"r": 1, "matrix": [[1.1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}]})";
const char* asym_doc = R"({"n": 2, "m": 3, "c": 0.0,
  "h": [{"r": 1, "matrix": [[0,1],[0.5,0]]}]})";

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        cli::write_file(path, content);
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("compute prints the invariant report") {
    TempFile tg("cli_tg.json", tg_doc);
    const auto res = cli::run(exe + " compute " + tg.path);
    CHECK(res.exit_code == 0);
    CHECK(cli::field(res.output, "tau") == "6");
    CHECK(cli::field(res.output, "H") == "0");
    CHECK(cli::field(res.output, "classification") == "totally_geodesic");

    TempFile umb("cli_umb.json", umb_doc);
    const auto res2 = cli::run(exe + " compute " + umb.path);
    CHECK(res2.exit_code == 0);
    CHECK(cli::field(res2.output, "tau") == "6");
    CHECK(cli::field(res2.output, "H") == "1");
    CHECK(cli::field(res2.output, "classification") == "pseudo_umbilical");
}

TEST_CASE("compute distinguishes malformed files from invariant violations") {
    TempFile bad("cli_bad.json", "{oops");
    CHECK(cli::run(exe + " compute " + bad.path).exit_code == 2);

    TempFile asym("cli_asym.json", asym_doc);
    const auto res = cli::run(exe + " compute " + asym.path);
    CHECK(res.exit_code == 3);
    CHECK(cli::contains(res.output, "symmetric"));

    CHECK(cli::run(exe + " compute cli_no_such_file.json").exit_code == 2);
}

TEST_CASE("check exit codes follow hypothesis and slack") {
    TempFile tg("cli_tg2.json", tg_doc);
    const auto eq = cli::run(exe + " check " + tg.path + " --theorem 2 --q 1");
    CHECK(eq.exit_code == 0);
    CHECK(cli::field(eq.output, "equality") == "yes");
    CHECK(cli::field(eq.output, "certificate") == "T2_totally_geodesic");

    TempFile umb("cli_umb2.json", umb_doc);
    const auto t1 = cli::run(exe + " check " + umb.path + " --theorem 1");
    CHECK(t1.exit_code == 0);
    CHECK(cli::field(t1.output, "equality") == "yes");
    CHECK(cli::field(t1.output, "certificate") == "T1_pseudo_umbilical");

    TempFile pert("cli_pert.json", perturbed_doc);
    const auto gated = cli::run(exe + " check " + pert.path + " --theorem 1");
    CHECK(gated.exit_code == 4);
    CHECK(cli::field(gated.output, "hypothesis_ok") == "no");

    // domain error: q = n/2 is outside theorem 2
    CHECK(cli::run(exe + " check " + tg.path + " --theorem 2 --q 2").exit_code == 2);
    // missing --q for theorem 2
    CHECK(cli::run(exe + " check " + tg.path + " --theorem 2").exit_code == 2);
}

TEST_CASE("check honors flag overrides") {
    TempFile pert("cli_pert2.json", perturbed_doc);
    // Forcing the hypothesis through on genuinely non-Einstein data exposes a
    // real bound violation: exit 1, the investigate signal.
    const auto loose = cli::run(exe + " check " + pert.path + " --theorem 1 --tol-einstein 10");
    CHECK(loose.exit_code == 1);
    CHECK(cli::field(loose.output, "hypothesis_ok") == "yes");
}

TEST_CASE("fuzz reports violations and is reproducible") {
    const auto a = cli::run(exe + " fuzz --lemma 33 --trials 2000 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(cli::field(a.output, "violations") == "0");
    const auto b = cli::run(exe + " fuzz --lemma 33 --trials 2000 --seed 7");
    CHECK(a.output == b.output);

    const auto one = cli::run(exe + " fuzz --lemma 46 --trials 1 --seed 3");
    const auto two = cli::run(exe + " fuzz --lemma 46 --trials 1 --seed 3");
    CHECK(one.exit_code == 0);
    CHECK(one.output == two.output);

    const auto csv1 = cli::run(exe + " fuzz --lemma 46 --trials 500 --seed 5 --out cli_fuzz1.csv");
    const auto csv2 = cli::run(exe + " fuzz --lemma 46 --trials 500 --seed 5 --out cli_fuzz2.csv");
    CHECK(csv1.exit_code == 0);
    CHECK(csv2.exit_code == 0);
    const std::string f1 = cli::read_file("cli_fuzz1.csv");
    const std::string f2 = cli::read_file("cli_fuzz2.csv");
    CHECK(!f1.empty());
    CHECK(f1 == f2);
    CHECK(f1.rfind("trial,lhs,rhs,slack\n", 0) == 0);
    std::remove("cli_fuzz1.csv");
    std::remove("cli_fuzz2.csv");
}

TEST_CASE("sweep writes the slack landscape") {
    const auto res = cli::run(exe + " sweep --family umbilical --param-range 0:2:5 --n 4 --m 5" +
                              std::string(" --c 0 --theorem 1 --out cli_sweep.csv"));
    CHECK(res.exit_code == 0);
    const std::string csv = cli::read_file("cli_sweep.csv");
    CHECK(csv.rfind("param,delta,bound,slack,equality_flag\n", 0) == 0);
    // umbilical family meets the first bound with equality across the range
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line); // header
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        const auto last_comma = line.rfind(',');
        CHECK(line.substr(last_comma + 1) == "1");
    }
    CHECK(rows == 5);
    std::remove("cli_sweep.csv");
}

TEST_CASE("sweep under the second bound: strict slack vanishing at zero") {
    const auto res = cli::run(exe + " sweep --family umbilical --param-range 0:2:9 --n 4 --m 5" +
                              std::string(" --c 0 --theorem 2 --q 1 --out cli_sweep_t2.csv"));
    REQUIRE(res.exit_code == 0);
    std::istringstream in(cli::read_file("cli_sweep_t2.csv"));
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string cell;
        std::getline(row, cell, ',');
        const double lambda = std::stod(cell);
        std::getline(row, cell, ',');
        std::getline(row, cell, ',');
        std::getline(row, cell, ',');
        const double slack = std::stod(cell);
        // slack = lambda^2 / 6 on this family
        CHECK(slack == doctest::Approx(lambda * lambda / 6.0).epsilon(1e-7));
        if (lambda > 0.1) CHECK(slack > 0.0);
    }
    std::remove("cli_sweep_t2.csv");
}

TEST_CASE("sweep edge cases") {
    const auto empty = cli::run(exe + " sweep --family umbilical --param-range 0:2:0 --out cli_empty.csv");
    CHECK(empty.exit_code == 0);
    CHECK(cli::read_file("cli_empty.csv") == "param,delta,bound,slack,equality_flag\n");
    std::remove("cli_empty.csv");

    CHECK(cli::run(exe + " sweep --family nope --param-range 0:1:2 --out cli_x.csv").exit_code == 2);
    CHECK(cli::run(exe + " sweep --family umbilical --param-range bad --out cli_x.csv").exit_code == 2);
}

TEST_CASE("config file via environment variable, flags win") {
    TempFile cfgfile("cli_cfg.json", R"({"tol_einstein": 1e-12})");
    TempFile pert("cli_pert3.json", perturbed_doc);
    // config tightens the tolerance: still gated
    const auto gated = cli::run("DELTARIC_CONFIG=cli_cfg.json " + exe + " check " + pert.path +
                                " --theorem 1");
    CHECK(gated.exit_code == 4);
    // flag overrides the config file: hypothesis passes, bound violation shows
    const auto loose = cli::run("DELTARIC_CONFIG=cli_cfg.json " + exe + " check " + pert.path +
                                " --theorem 1 --tol-einstein 10");
    CHECK(loose.exit_code == 1);
    CHECK(cli::field(loose.output, "hypothesis_ok") == "yes");
}
