#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("tde text output") {
    auto r = run("tde --type G2 --format text");
    CHECK(r.code == 0);
    CHECK(r.out.find("d~_{1,2}(t) = 3*t^2 + 3*t^4") != std::string::npos);
}

TEST_CASE("quiver show counts nodes in dot output") {
    auto r = run("quiver show --type C3 --heights 4,3,2 --format dot");
    CHECK(r.code == 0);
    int labels = 0;
    for (std::size_t at = 0; (at = r.out.find("label=\"<", at)) != std::string::npos; ++at)
        ++labels;
    CHECK(labels == 9);
}

TEST_CASE("verify folding") {
    CHECK(run("verify folding --lift D5").code == 0);
    CHECK(run("verify folding --pair A5:B3").code == 0);
    CHECK(run("verify folding --pair D5:B4").code == 2); // orbit fold of D5 is C4
}

TEST_CASE("verify main exit codes") {
    CHECK(run("verify main --type B4").code == 0);
    auto f4 = run("verify main --type F4");
    CHECK(f4.code == 3);
    CHECK(f4.out.find("cell (2,3)") != std::string::npos);
}

TEST_CASE("validation errors exit with 2") {
    CHECK(run("quiver show --type Z9").code == 2);
    CHECK(run("quiver show --type C3 --heights 9,0,0").code == 2);
    CHECK(run("dinv --type C3 --heights 4,3,2 --a 1,7 --b 2,1").code == 2);
}

TEST_CASE("dinv matches the worked example") {
    auto r = run("dinv --type C3 --heights 4,3,2 --a 1,0 --b 2,1 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"d\": 0") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
    for (std::string args : {"tde --type E7 --format json", "degpoly --type B3 --format json",
                             "quiver show --type D5 --heights 3,2,1,0,0 --format text"}) {
        auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("labels subcommand validates the alternative algorithm") {
    auto r = run("label --type B4 --heights 2,3,2,3 --method swings");
    CHECK(r.code == 0);
    CHECK(r.out.find("agree with phi_Q") != std::string::npos);
    CHECK(run("label --type A5 --heights 4,3,2,3,4 --method transpose").code == 2);
}

TEST_CASE("fold subcommand") {
    auto r = run("fold --type A5 --heights 3,2,1,2,3 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"type\": \"C\"") != std::string::npos);
}

TEST_CASE("oracle flag") {
    CHECK(run("degpoly --type B2 --oracle").code == 0);
    CHECK(run("degpoly --type B4 --oracle").code == 2); // rank cap
}

TEST_CASE("unknown format is a validation error") {
    CHECK(run("tde --type G2 --format bogus").code == 2);
    CHECK(run("tde --type G2 --format dot").code == 2); // dot only for quiver/label
    CHECK(run("quiver show --type A2 --format dot").code == 0);
}

TEST_CASE("json polynomials carry integer coefficients") {
    auto r = run("tde --type G2 --format json --cell 1,2");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto poly = j["entries"]["1,2"]["poly"];
    REQUIRE(poly.size() == 2);
    CHECK(poly[0][0] == 2);
    CHECK(poly[0][1] == 3);
    CHECK(poly[0][1].is_number_integer());
}
