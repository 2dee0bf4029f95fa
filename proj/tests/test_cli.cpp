// End-to-end tests spawning the actual binary (path injected at build
// time through CORDAL_BIN).
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("cordal_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    static int serial = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(serial));
    const fs::path err = scratch_dir() / ("err" + std::to_string(serial));
    ++serial;
    const std::string cmd = env + (env.empty() ? "" : " ") + CORDAL_BIN + " " +
                            args + " >" + out.string() + " 2>" + err.string();
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_CASE("augmentation count for the cyclic four-fold cover point") {
    const RunResult r = run_cli(
        "aug --torus 1,4 --framing 0 --mod 3 --lambda 1 --mu 1 --gamma 2");
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    CHECK(r.err.empty());
}

TEST_CASE("relation export carries the axis-squared binomial family") {
    const RunResult r = run_cli(
        "relations --braid \"a0 a0\" --strands 1 --framing 0 --window 2 "
        "--format json");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["strands"] == 1);
    CHECK(doc["window"] == 2);
    bool found_folded = false;
    bool found_plain = false;
    for (const auto& rel : doc["relations"]) {
        if (rel["family"] != 3) continue;
        const auto& terms = rel["poly"]["terms"];
        if (rel["x"] == 1 && rel["y"] == 1) {
            // a_11^2 - lambda mu^2 a_11^0; the diagonal zero folds to
            // (1+mu)Gamma, leaving a scalar term -lm^2g - lm^3g
            REQUIRE(terms.size() == 2);
            CHECK(terms[0]["word"] == nlohmann::json::array());
            REQUIRE(terms[0]["coeff"].size() == 2);
            CHECK(terms[0]["coeff"][0]["l"] == 1);
            CHECK(terms[0]["coeff"][0]["m"] == 2);
            CHECK(terms[0]["coeff"][0]["g"] == 1);
            CHECK(terms[0]["coeff"][0]["c"] == "-1");
            CHECK(terms[0]["coeff"][1]["m"] == 3);
            CHECK(terms[0]["coeff"][1]["c"] == "-1");
            CHECK(terms[1]["word"] == nlohmann::json::array({{1, 1, 2}}));
            CHECK(terms[1]["coeff"][0]["c"] == "1");
            found_folded = true;
        }
        if (rel["x"] == 2 && rel["y"] == 1) {
            // a_11^3 - lambda mu^2 a_11^1 survives verbatim
            REQUIRE(terms.size() == 2);
            CHECK(terms[0]["word"] == nlohmann::json::array({{1, 1, 1}}));
            CHECK(terms[0]["coeff"][0]["l"] == 1);
            CHECK(terms[0]["coeff"][0]["m"] == 2);
            CHECK(terms[0]["coeff"][0]["g"] == 0);
            CHECK(terms[0]["coeff"][0]["c"] == "-1");
            CHECK(terms[1]["word"] == nlohmann::json::array({{1, 1, 3}}));
            CHECK(terms[1]["coeff"][0]["c"] == "1");
            found_plain = true;
        }
    }
    CHECK(found_folded);
    CHECK(found_plain);
}

TEST_CASE("braid input routes through closure detection") {
    // beta(2,1) written out as a plain braid word
    const RunResult ok = run_cli(
        "aug --braid \"a0 a1\" --strands 2 --framing 0 --mod 3 --lambda 1 "
        "--mu 1 --gamma 2");
    CHECK(ok.code == 0);
    CHECK(ok.out == "1\n");

    // a two-component closure is refused with the machine-parsable prefix
    const RunResult no = run_cli(
        "aug --braid \"a0\" --strands 2 --mod 3");
    CHECK(no.code == 2);
    CHECK(no.out.empty());
    CHECK(no.err.substr(0, 3) == "E2:");
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("aug --torus 1,2 --braid \"a0\" --mod 3").code == 1);
    CHECK(run_cli("relations").code == 1);
    CHECK(run_cli("aug --torus 1,2 --mod 4 --lambda 2").code == 1);
    CHECK(run_cli("frobnicate").code == 1);
    CHECK(run_cli("presentation --torus 12").code == 1);
    const RunResult r = run_cli("relations --braid \"b9\"");
    CHECK(r.code == 1);
    CHECK(r.err.substr(0, 3) == "E1:");
}

TEST_CASE("presentation export and file-based counting agree") {
    const fs::path file = scratch_dir() / "pres_13.json";
    const RunResult exp = run_cli("presentation --torus 1,3 --framing 0 "
                                  "--format json --out " +
                                  file.string());
    REQUIRE(exp.code == 0);
    CHECK(exp.out.empty());

    const auto doc = nlohmann::json::parse(slurp(file));
    CHECK(doc["p"] == 1);
    CHECK(doc["q"] == 3);
    CHECK(doc["variables"] == 2);

    const RunResult direct = run_cli(
        "aug --torus 1,3 --framing 0 --mod 5 --lambda 1 --mu 1 --gamma 3");
    const RunResult via_file = run_cli(
        "aug --presentation " + file.string() +
        " --mod 5 --lambda 1 --mu 1 --gamma 3");
    CHECK(direct.code == 0);
    CHECK(via_file.code == 0);
    CHECK(direct.out == via_file.out);
    CHECK(direct.out == "2\n");
}

TEST_CASE("non-knot relation export warns but succeeds") {
    const RunResult r =
        run_cli("relations --braid \"a1 a1\" --strands 3 --window 0");
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(!r.out.empty());
}

TEST_CASE("output bytes are stable across runs and job counts") {
    const std::string args =
        "relations --braid \"a0 a1\" --strands 2 --framing 1 --window 2 "
        "--format json";
    const RunResult a = run_cli(args + " --jobs 1");
    const RunResult b = run_cli(args + " --jobs 4");
    const RunResult c = run_cli(args, "CORDAL_JOBS=2");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("self-check suites run clean through the CLI") {
    const RunResult r = run_cli("check --suite ring --trials 20");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    CHECK(run_cli("check --suite no_such_suite").code == 1);
}

TEST_CASE("oracle diff reports no mismatches on a mixed word") {
    const RunResult r =
        run_cli("oracle-diff --braid \"a0 a1^-1\" --strands 2 --window 1");
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    const RunResult js = run_cli(
        "oracle-diff --braid \"a0 a1^-1\" --strands 2 --window 1 "
        "--format json");
    CHECK(js.code == 0);
    CHECK(nlohmann::json::parse(js.out).empty());
}
