#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MAPDIST_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("derive prints the quadrivalent equation") {
    auto r = run("derive --model tetravalent");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1 = R[n] - g*R[n-1]*R[n] - g*R[n]^2 - g*R[n]*R[n+1]") !=
          std::string::npos);
}

TEST_CASE("solve emits the distance-0 coefficients") {
    auto r = run("solve --model tetravalent --cutoff 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# mapdist csv v1 solve") != std::string::npos);
    CHECK(r.out.find("R,0,0,1,1") != std::string::npos);
    CHECK(r.out.find("R,0,1,2,1") != std::string::npos);
    CHECK(r.out.find("R,0,2,9,1") != std::string::npos);
    CHECK(r.out.find("R,0,3,54,1") != std::string::npos);

    auto j = run("solve --model tetravalent --cutoff 3 --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"num\":\"54\"") != std::string::npos);
}

TEST_CASE("identical configurations give byte-identical output") {
    auto a = run("solve --model bipartite3 --cutoff 4 --format json");
    auto b = run("solve --model bipartite3 --cutoff 4 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("oracle census matches the recursion counts") {
    auto r = run("oracle --family tetravalent --n-vertices 2 --emit census");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0,9") != std::string::npos);
    CHECK(r.out.find("1,8") != std::string::npos);
    CHECK(r.out.find("2,1") != std::string::npos);
    auto t = run("oracle --family tetravalent --n-vertices 1 --emit trees");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("V(B,W,W),1") != std::string::npos);
}

TEST_CASE("closedform reports small differences") {
    auto r = run("closedform --model tetravalent --couplings g=1/24 --n-limit 5 --cutoff 40");
    CHECK(r.exit_code == 0);
    // every data row ends with a difference below 1e-8
    std::istringstream is(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("sequence", 0) == 0) continue;
        auto pos = line.rfind(',');
        REQUIRE(pos != std::string::npos);
        CHECK(std::stod(line.substr(pos + 1)) < 1e-8);
        ++rows;
    }
    CHECK(rows == 6);
}

TEST_CASE("continuum emits residual columns") {
    auto r = run("continuum --function puregravity --r-min 0.5 --r-max 2.0 --steps 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("r,F,G,ode_residual") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("solve --model nosuchthing --cutoff 3").exit_code == 2);
    CHECK(run("oracle --family tetravalent --n-vertices 99 --emit census").exit_code == 2);
    CHECK(run("nosuchcommand").exit_code != 0);
}

TEST_CASE("fractal subcommand emits increasing ratios") {
    auto r = run("fractal --n 2 --orders 50,100");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,N,ratio,quartic_law") != std::string::npos);
    std::istringstream is(r.out);
    std::string line;
    std::vector<double> ratios;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
        auto a = line.find(',');
        auto b = line.find(',', a + 1);
        auto c = line.find(',', b + 1);
        ratios.push_back(std::stod(line.substr(b + 1, c - b - 1)));
    }
    REQUIRE(ratios.size() == 2);
    CHECK(ratios[0] < ratios[1]);
}
