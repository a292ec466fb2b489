#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string tmp = std::string(KYM_TEST_TMPDIR) + "/cli_out.txt";
    const std::string cmd = std::string(KYM_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    result.output = ss.str();
    return result;
}

std::string strip_timestamp(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("timestamp") != std::string::npos) continue;
        out << line << "\n";
    }
    return out.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("surface reference run") {
    const RunResult r = run_cli("surface --k 1 --kprime 1 --k1 1 --k2 1 --genus 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"alpha1_over_alpha0\": \"-1/8\"") != std::string::npos);
    CHECK(r.output.find("\"overall\": \"pass\"") != std::string::npos);
}

TEST_CASE("surface rejects k = 0") {
    CHECK(run_cli("surface --k 0 --kprime 1 --k1 1 --k2 1 --genus 0").exit_code == 2);
}

TEST_CASE("surface emits CSV plot data") {
    const std::string csv = std::string(KYM_TEST_TMPDIR) + "/surface.csv";
    const RunResult r = run_cli("surface --k 1 --kprime 1 --k1 1 --k2 1 --genus 0 --csv " +
                                csv + " --samples 101");
    CHECK(r.exit_code == 0);
    std::ifstream in(csv);
    REQUIRE(in.good());
    std::string line;
    int rows = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0) continue;
        if (!header_seen) {
            CHECK(line == "z,F,Scal,FA_norm_sq");
            header_seen = true;
            continue;
        }
        ++rows;
    }
    CHECK(rows == 101);
}

TEST_CASE("threefold worked parameters") {
    const RunResult r = run_cli("threefold --x1 1/2 --x2 -1/3 --s1 2 --s2 0 --a 1 --b 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"kappa2\": \"256/327\"") != std::string::npos);
}

TEST_CASE("threefold CSV plot data") {
    const std::string csv = std::string(KYM_TEST_TMPDIR) + "/threefold.csv";
    const RunResult r = run_cli("threefold --x1 1/2 --x2 -1/3 --s1 2 --s2 0 --a 1 --b 4 --csv " +
                                csv + " --samples 51");
    CHECK(r.exit_code == 0);
    std::ifstream in(csv);
    REQUIRE(in.good());
    std::string first;
    std::getline(in, first);
    CHECK(first.rfind("# command: threefold", 0) == 0);
}

TEST_CASE("threefold inconsistent system exits 3") {
    const RunResult r = run_cli("threefold --x1 1/2 --x2 -1/2 --s1 2 --s2 0");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("\"classification\": \"inconsistent\"") != std::string::npos);
}

TEST_CASE("threefold family csck member") {
    const RunResult r = run_cli("threefold --x1 1/2 --x2 -1/2 --s1 2 --s2 -2 --kappa2 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"constant_scalar_curvature\": true") != std::string::npos);
}

TEST_CASE("threefold family without a kappa2 choice is a usage error") {
    CHECK(run_cli("threefold --x1 1/2 --x2 -1/2 --s1 2 --s2 -2").exit_code == 2);
}

TEST_CASE("threefold non-positive profile exits 4") {
    const RunResult r = run_cli("threefold --x1 7/10 --x2 -3/5 --s1 2 --s2 2");
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("\"positivity_holds\": false") != std::string::npos);
}

TEST_CASE("cym surface minimality report") {
    const RunResult r =
        run_cli("cym surface --k 1 --kprime 20 --k1 1 --k2 1 --genus 0 --eps 1/100 --eps 1/10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"positive\": true") != std::string::npos);
    CHECK(r.output.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("cym rejects too few samples") {
    const RunResult r =
        run_cli("cym surface --k 1 --kprime 20 --k1 1 --k2 1 --genus 0 --samples 8");
    CHECK(r.exit_code == 2);
}

TEST_CASE("survey grid") {
    const RunResult r = run_cli(
        "survey --x1-min 1/2 --x1-max 1/2 --x1-step 1 --x2-min -9/10 --x2-max -1/10 "
        "--x2-step 1/10 --s1 2 --s2 -2");
    CHECK(r.exit_code == 0);
    // kappa2 changes sign across x2 = -1/2: positive below, family at -1/2,
    // negative above
    CHECK(r.output.find("1/2,-7/10,unique+positive") != std::string::npos);
    CHECK(r.output.find("1/2,-1/2,family,free") != std::string::npos);
    CHECK(r.output.find("1/2,-3/10,unique") != std::string::npos);
    CHECK(r.output.find(",-1\n") != std::string::npos);
}

TEST_CASE("survey positive quadrant never sees positive kappa2") {
    const RunResult r = run_cli(
        "survey --x1-min 1/5 --x1-max 4/5 --x1-step 1/5 --x2-min 1/5 --x2-max 4/5 "
        "--x2-step 1/5 --s1 2 --s2 2");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0 || line.rfind("x1,", 0) == 0 || line.empty()) continue;
        ++rows;
        CHECK(line.substr(line.size() - 2) != ",1");
    }
    CHECK(rows > 0);
}

TEST_CASE("survey empty grid exits 2") {
    const RunResult r = run_cli(
        "survey --x1-min 2 --x1-max 3 --x1-step 1 --x2-min 2 --x2-max 3 --x2-step 1 "
        "--s1 0 --s2 0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("reports are byte-identical apart from the timestamp") {
    const RunResult a = run_cli("surface --k 2 --kprime 3 --k1 1 --k2 2 --genus 1");
    const RunResult b = run_cli("surface --k 2 --kprime 3 --k1 1 --k2 2 --genus 1");
    CHECK(a.exit_code == 0);
    CHECK(strip_timestamp(a.output) == strip_timestamp(b.output));
}

}
