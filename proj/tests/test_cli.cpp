// Drives the built binary end to end through a shell; needs HGS_CLI_PATH.
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

std::string temp_path(const char* suffix) {
    static int counter = 0;
    return "/tmp/hgs_cli_test_" + std::to_string(getpid()) + "_" + std::to_string(counter++) +
           suffix;
}

RunResult run_cli(const std::string& args) {
    const std::string out_file = temp_path(".out");
    const std::string cmd = std::string(HGS_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    int code = -1;
#ifdef WEXITSTATUS
    if (status >= 0) code = WEXITSTATUS(status);
#else
    code = status;
#endif
    return {code, ss.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen then classify") {
    const std::string mtx = temp_path(".mtx");
    CHECK(run_cli("gen ex12B --out " + mtx).exit_code == 0);
    const RunResult r = run_cli("classify " + mtx);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("mixed") != std::string::npos);
    std::remove(mtx.c_str());
}

TEST_CASE("classify identity reports invertible") {
    const std::string mtx = temp_path(".mtx");
    std::ofstream out(mtx);
    out << "%%MatrixMarket matrix coordinate real general\n3 3 3\n1 1 1\n2 2 1\n3 3 1\n";
    out.close();
    const RunResult r = run_cli("classify " + mtx);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("invertible") != std::string::npos);
    std::remove(mtx.c_str());
}

TEST_CASE("analyze agrees on ex11A and reports the diverging forward sweep") {
    const std::string mtx = temp_path(".mtx");
    REQUIRE(run_cli("gen ex11A --out " + mtx).exit_code == 0);
    const RunResult r = run_cli("analyze " + mtx);
    CHECK(r.exit_code == 0);  // theorem and numerics agree
    CHECK(r.output.find("diverges") != std::string::npos);
    CHECK(r.output.find("converges") != std::string::npos);

    const RunResult rj = run_cli("analyze " + mtx + " --json");
    CHECK(rj.exit_code == 0);
    CHECK(rj.output.find("\"agreement\": true") != std::string::npos);
    CHECK(rj.output.find("\"rho\": 1.0") != std::string::npos);
    std::remove(mtx.c_str());
}

TEST_CASE("json reports are byte-stable") {
    const std::string mtx = temp_path(".mtx");
    REQUIRE(run_cli("gen ex62 --out " + mtx).exit_code == 0);
    const RunResult r1 = run_cli("analyze " + mtx + " --json");
    const RunResult r2 = run_cli("analyze " + mtx + " --json");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
    std::remove(mtx.c_str());
}

TEST_CASE("malformed input exits with the input-error code") {
    const std::string mtx = temp_path(".mtx");
    std::ofstream out(mtx);
    out << "%%MatrixMarket matrix coordinate real general\n2 2 1\nnot numbers\n";
    out.close();
    const RunResult r = run_cli("classify " + mtx);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error") != std::string::npos);
    std::remove(mtx.c_str());

    CHECK(run_cli("classify /definitely/missing.mtx").exit_code == 2);
    CHECK(run_cli("gen family61 --n 1 --out /tmp/x.mtx").exit_code == 2);
    CHECK(run_cli("gen nonsense --out /tmp/x.mtx").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("precondition reproduces the schur-alpha table") {
    const std::string mtx = temp_path(".mtx");
    REQUIRE(run_cli("gen ex62 --out " + mtx).exit_code == 0);
    const RunResult r = run_cli("precondition " + mtx + " --strategy schur-alpha --alpha 3,4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("invertible") != std::string::npos);
    CHECK(r.output.find("0.600000") != std::string::npos);

    // column-k needs an irreducible input for the restoration theorem to bite
    const std::string fam = temp_path(".mtx");
    const std::string outm = temp_path(".mtx");
    REQUIRE(run_cli("gen family61 --n 12 --out " + fam).exit_code == 0);
    const RunResult rk = run_cli("precondition " + fam + " --strategy column-k --k 1 --out " + outm);
    CHECK(rk.exit_code == 0);
    CHECK(rk.output.find("VIOLATED") == std::string::npos);
    const RunResult rc = run_cli("classify " + outm);
    CHECK(rc.output.find("invertible") != std::string::npos);

    CHECK(run_cli("precondition " + fam + " --strategy column-k --k 99").exit_code == 2);
    std::remove(mtx.c_str());
    std::remove(fam.c_str());
    std::remove(outm.c_str());
}

TEST_CASE("solve round trip with rhs and solution files") {
    const std::string mtx = temp_path(".mtx");
    const std::string rhs = temp_path(".rhs.mtx");
    const std::string sol = temp_path(".sol.mtx");
    REQUIRE(run_cli("gen ex12A --out " + mtx).exit_code == 0);
    {
        std::ofstream out(rhs);
        out << "%%MatrixMarket matrix array complex general\n3 1\n1 0\n1 0\n1 0\n";
    }
    const RunResult r = run_cli("solve " + mtx + " " + rhs + " --method sgs --out " + sol);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("converged") != std::string::npos);
    std::ifstream sin(sol);
    CHECK(sin.good());
    std::remove(mtx.c_str());
    std::remove(rhs.c_str());
    std::remove(sol.c_str());
}

TEST_CASE("solve on a unit-radius system exits with the no-convergence code") {
    const std::string mtx = temp_path(".mtx");
    const std::string rhs = temp_path(".rhs.mtx");
    REQUIRE(run_cli("gen ex11A --out " + mtx).exit_code == 0);
    {
        std::ofstream out(rhs);
        out << "%%MatrixMarket matrix array real general\n3 1\n1\n1\n1\n";
    }
    const RunResult r = run_cli("solve " + mtx + " " + rhs + " --method fgs --maxit 500");
    CHECK(r.exit_code == 4);
    std::remove(mtx.c_str());
    std::remove(rhs.c_str());
}

TEST_CASE("gen writes files that reload bit-exactly") {
    const std::string a = temp_path(".mtx");
    const std::string b = temp_path(".mtx");
    REQUIRE(run_cli("gen family61 --n 100 --out " + a).exit_code == 0);
    REQUIRE(run_cli("gen family61 --n 100 --out " + b).exit_code == 0);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(sa.str().find("100 100") != std::string::npos);

    const RunResult r = run_cli("gen gde --n 5 --seed 42");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("%%MatrixMarket matrix coordinate complex general") == 0);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

}  // TEST_SUITE
