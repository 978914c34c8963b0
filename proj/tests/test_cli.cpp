#include <catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "bnlab/jsonio.hpp"
#include "bnlab/report.hpp"

using namespace bnlab;

namespace {

struct RunResult {
    int status;
    std::string out;
};

// Runs the installed binary through the shell; env goes in front as VAR=value
// assignments. stderr is folded into the captured output.
RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += "\"" BNLAB_CLI_PATH "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int rc = pclose(pipe);
    REQUIRE(rc != -1);
    return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("rho subcommand") {
    const auto plain = run("rho --g 10 --r 9 --d 18");
    CHECK(plain.status == 0);
    CHECK(plain.out == "0\n");

    const auto pointed = run("rho --g 4 --r 1 --d 3 --alpha 0,2");
    CHECK(pointed.status == 0);
    CHECK(pointed.out == "-2\n");

    const auto two = run("rho --g 2 --r 1 --d 2 --alpha 0,1 --alpha 0,1");
    CHECK(two.status == 0);
    CHECK(two.out == "-2\n");

    const auto js = run("rho --g 2 --r 1 --d 2 --alpha 0,1 --json");
    CHECK(js.status == 0);
    const auto j = Json::parse(js.out);
    CHECK(j["rho"] == "-1");
    CHECK(j["alpha"][0] == Json::array({0, 1}));

    const auto bad = run("rho --g 2 --r 1 --d 2 --alpha 0,2");
    CHECK(bad.status == 2);
    CHECK(bad.out.find("error:") != std::string::npos);
    CHECK(bad.out.find("alpha_r <= d - r = 1") != std::string::npos);

    const auto unsorted = run("rho --g 2 --r 1 --d 2 --alpha 2,1");
    CHECK(unsorted.status == 2);
    CHECK(unsorted.out.find("alpha_0 <= alpha_1") != std::string::npos);

    CHECK(run("rho --g 2 --r 1").status == 2);
    CHECK(run("rho --g 2 --r 1 --d 2 --alpha 0,x").status == 2);
}

TEST_CASE("top-level parsing") {
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    const auto help = run("--help");
    CHECK(help.status == 0);
    CHECK(help.out.find("rho") != std::string::npos);
    CHECK(help.out.find("verify-paper") != std::string::npos);
}

TEST_CASE("duval subcommand") {
    const auto one = run("duval --g 1");
    CHECK(one.status == 0);
    CHECK(one.out ==
          "p10(1) = (-111164115406/45761338561, -15980733286618181/9789219783630559)\n");

    const auto js = run("duval --g 1 --json");
    CHECK(js.status == 0);
    const auto j = Json::parse(js.out);
    CHECK(j["g"] == 1);
    CHECK(j["x"] == "-111164115406/45761338561");

    const auto fromfile = run(std::string("duval --g 1 --fixture \"") + BNLAB_DATA_DIR +
                              "/e17.json\"");
    CHECK(fromfile.status == 0);
    CHECK(fromfile.out == one.out);

    const auto missing = run("duval --g 1 --fixture /nonexistent.json");
    CHECK(missing.status == 3);
    CHECK(missing.out.find("fixture error:") != std::string::npos);

    CHECK(run("duval --g 0").status == 2);
}

TEST_CASE("pencil subcommand") {
    const auto numbers = run("pencil --which duval --g 3");
    CHECK(numbers.status == 0);
    CHECK(numbers.out == "lambda = 3\npsi = 1\ndelta_irr = 24\ndelta_1 = 1\n");

    const auto iota2 = run("pencil --which iota --g 2 --json");
    CHECK(iota2.status == 0);
    const auto j = Json::parse(iota2.out);
    CHECK(j["which"] == "iota");
    CHECK(j["lambda"] == "1");
    CHECK(j["psi"] == "1");
    CHECK(j["delta_irr"] == "6");
    CHECK(j["delta"]["1"] == "2");

    CHECK(run("pencil --which duval --g 10 --class bn").out == "0\n");
    CHECK(run("pencil --which duval --g 10 --class weierstrass").out == "0\n");
    CHECK(run("pencil --which duval --g 10 --class z10").out == "-1\n");
    CHECK(run("pencil --which k3 --g 10 --class z10").out == "-1\n");

    CHECK(run("pencil --which duval --g 9 --class z10").status == 2);
    CHECK(run("pencil --which duval --g 10 --class frob").status == 2);
    CHECK(run("pencil --which frob --g 10").status == 2);
    CHECK(run("pencil --which duval --g 1").status == 2);
}

TEST_CASE("chain subcommand") {
    const auto solvable = run("chain --g 2 --r 1 --d 2 --alpha 0,0");
    CHECK(solvable.status == 0);
    CHECK(solvable.out == "dimension = 0\nsplit at genus 2: (0,1)\n");

    CHECK(run("chain --g 4 --r 1 --d 3 --alpha 0,1").out == "empty\n");
    CHECK(run("chain --g 2 --r 1 --d 2 --alpha 0,0 --beta 0,1").out == "empty\n");

    const auto js = run("chain --g 2 --r 1 --d 2 --alpha 0,0 --json");
    CHECK(js.status == 0);
    const auto j = Json::parse(js.out);
    CHECK(j["dimension"] == "0");
    CHECK(j["beta"].is_null());
    CHECK(j["witness"] == Json::array({Json::array({0, 1})}));

    const auto ejs = run("chain --g 2 --r 1 --d 2 --alpha 0,0 --beta 0,1 --json");
    const auto ej = Json::parse(ejs.out);
    CHECK(ej["dimension"].is_null());
    CHECK(ej["beta"] == Json::array({0, 1}));

    CHECK(run("chain --g 0 --r 1 --d 2 --alpha 0,0").status == 2);
    CHECK(run("chain --g 2 --r 2 --d 2 --alpha 0,0").status == 2);
}

TEST_CASE("torsion subcommand") {
    const auto tor = run("torsion --x 0 --y 2 --a 0 --b 4");
    CHECK(tor.status == 0);
    CHECK(tor.out == "order = 3\n");

    const auto fx = run("torsion --x=-2 --y 3");
    CHECK(fx.status == 0);
    CHECK(fx.out == "non-torsion\n");

    const auto frac = run("torsion --x 1/4 --y=-33/8");
    CHECK(frac.status == 0);
    CHECK(frac.out == "non-torsion\n");

    const auto sum = run("torsion --sum");
    CHECK(sum.status == 0);
    CHECK(sum.out == "non-torsion\n");

    const auto js = run("torsion --x 0 --y 2 --a 0 --b 4 --json");
    const auto j = Json::parse(js.out);
    CHECK(j["order"] == 3);

    CHECK(run("torsion --x 1 --y 1").status == 2);  // not on the fixture curve
    CHECK(run("torsion --x 1").status == 2);
    CHECK(run("torsion --x 1 --y 1 --a 0").status == 2);
}

TEST_CASE("verify-paper subcommand") {
    const auto js = run("verify-paper --g-max 3 --json");
    CHECK(js.status == 0);
    CHECK(js.out == to_text(report_to_json(build_report(3))));

    const auto text = run("verify-paper --g-max 2");
    CHECK(text.status == 0);
    CHECK(text.out.find("checked 47 claims up to genus 2: 45 pass, 0 fail, 2 assumed\n") !=
          std::string::npos);

    const auto env_only = run("verify-paper --json", "BNLAB_GMAX=2");
    CHECK(env_only.status == 0);
    CHECK(env_only.out.find("\"g_max\": 2") != std::string::npos);

    const auto flag_wins = run("verify-paper --g-max 2 --json", "BNLAB_GMAX=3");
    CHECK(flag_wins.status == 0);
    CHECK(flag_wins.out.find("\"g_max\": 2") != std::string::npos);

    CHECK(run("verify-paper --g-max 1").status == 2);
    CHECK(run("verify-paper", "BNLAB_GMAX=abc").status == 2);
}
