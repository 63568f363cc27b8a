#include <doctest.h>

#include <sstream>

#include "extalg/cli.hpp"

namespace {

struct Outcome {
    int status;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = extalg::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("derive presets") {
    auto r = run({"derive", "--k", "1", "--n", "3", "--r", "2", "--preset", "maxwell", "--format", "text"});
    CHECK(r.status == 0);
    CHECK(r.out == "d_| ( d^ A ) = J\n");
    r = run({"derive", "--k", "0", "--n", "3", "--r", "1", "--preset", "electrostatics"});
    CHECK(r.status == 0);
    CHECK(r.out == "d_| ( d^ phi ) = rho\n");
    r = run({"derive", "--k", "1", "--n", "3", "--r", "2", "--m", "3/2", "--xi", "2"});
    CHECK(r.out == "d_| ( d^ A ) + 9/4 * A = J + 1/2 * d^ ( d_| A )\n");
    r = run({"derive", "--k", "1", "--n", "3", "--r", "2", "--m", "3/2", "--xi", "2", "--wave"});
    CHECK(r.out == "-lap A + 9/4 * A = J - 1/2 * d^ ( d_| A )\n");
    r = run({"derive", "--k", "1", "--n", "3", "--r", "1", "--preset", "dual"});
    CHECK(r.out == "d^ ( d_| Abar ) = Jbar\nd_| ( d_| Abar ) = 0\n");
    r = run({"derive", "--k", "0", "--n", "3", "--lagrangian", "1/2*(dXa . dXa) - (rho . a)", "--field", "a",
             "--grade", "0"});
    CHECK(r.status == 0);
    CHECK(r.out == "lap a = -rho\n");
}

TEST_CASE("derive json") {
    auto r = run({"derive", "--k", "1", "--n", "3", "--r", "2", "--format", "json"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          R"({"metric":{"k":1,"n":3},"grade":1,"lhs":[{"coeff":"1/1","ops":["int","ext"],"symbol":"A"}],)"
          R"("rhs":[{"coeff":"1/1","ops":[],"symbol":"J"}],)"
          R"("symbols":[{"name":"A","grade":1,"role":"dynamical"},{"name":"J","grade":1,"role":"source"}]})"
          "\n");
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run({}).status == 2);
    CHECK(run({"bogus"}).status == 2);
    CHECK(run({"derive", "--k", "1", "--n", "3"}).status == 2);
    CHECK(run({"derive", "--k", "1", "--n", "3", "--r", "7"}).status == 2);
    CHECK(run({"derive", "--k", "0", "--n", "3", "--r", "2", "--preset", "electrostatics"}).status == 2);
    CHECK(run({"derive", "--k", "1", "--n", "3", "--r", "2", "--wave"}).status == 2);
    CHECK(run({"derive", "--k", "1", "--n", "3", "--r", "2", "--m", "x"}).status == 2);
    CHECK(run({"derive", "--k", "9", "--n", "9", "--r", "2"}).status == 2);
    CHECK(run({"verify", "--suite", "nope"}).status == 2);
    CHECK(run({"verify", "--trials", "0"}).status == 2);
    const auto bad = run({"eval", "--expr", "e[2,1]", "--k", "0", "--n", "3"});
    CHECK(bad.status == 2);
    CHECK(bad.err == "parse error at offset 4: indices must be strictly increasing\n");
    CHECK(bad.out.empty());
}

TEST_CASE("eval") {
    auto r = run({"eval", "--expr", "e[1] _| e[1,2]", "--k", "1", "--n", "3"});
    CHECK(r.status == 0);
    CHECK(r.out == "-e[2]\n");
    r = run({"eval", "--expr", "e[1] ^ e[2]", "--k", "0", "--n", "3", "--format", "json"});
    CHECK(r.out == R"({"metric":{"k":0,"n":3},"grade":2,"terms":[{"blade":[1,2],"coeff":"1"}],"text":"e[1,2]"})"
                   "\n");
}

TEST_CASE("verify is deterministic and reports per property") {
    const auto a = run({"verify", "--suite", "algebra", "--seed", "5", "--trials", "3"});
    const auto b = run({"verify", "--suite", "algebra", "--seed", "5", "--trials", "3"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("verify suite=algebra seed=5 trials=3 generator=mt19937_64/rejection-v1\n", 0) == 0);
    CHECK(a.out.find("PASS algebra.wedge-associativity") != std::string::npos);
    CHECK(a.out.find("summary: 11 properties, 0 failed\n") != std::string::npos);
}
