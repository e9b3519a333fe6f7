#include <doctest.h>

#include <array>
#include <cstdio>
#include <random>
#include <sys/wait.h>

#include "../support/random.hpp"

using namespace permcm;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(PERMCM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("group strings round trip") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto sn = PermutationGroup::symmetric(n);
    std::vector<Permutation> gens;
    for (int i = 0, c = static_cast<int>(rng() % 3); i < c; ++i) gens.push_back(sn.elements()[rng() % sn.order()]);
    if (gens.empty()) gens.push_back(Permutation::identity(n));
    PermutationGroup g(n, gens);
    auto text = serialize_group(g);
    auto back = parse_group(text, n);
    CHECK(back == g);
    CHECK(back.generators() == g.generators());
    CHECK(serialize_group(back) == text);
  }
}

TEST_CASE("polynomial strings round trip") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    Domain d = trial % 3 == 0 ? Domain::Q() : trial % 3 == 1 ? Domain::Z() : Domain::Fp(7);
    auto f = testing_support::random_polynomial(rng, n, 6, 4, d);
    if (d == Domain::Q()) f = f.scaled(mpq_class(1, 1 + static_cast<long>(rng() % 4)));
    CHECK(parse_polynomial(f.to_string(), n, d) == f);
  }
}

TEST_CASE("subgroup class counts") {
  std::vector<std::size_t> counts{1, 2, 4, 11, 19};
  for (int n = 1; n <= 5; ++n) CHECK(subgroup_class_representatives(n).size() == counts[n - 1]);
}

TEST_CASE("exit codes") {
  CHECK(run("complex --degree 4 --group \"(1,2,3,4)(1,3)\"").status == 0);
  CHECK(run("survey --degree 4").status == 0);
  CHECK(run("cm --degree 4 --group \"(1,2,3,4)\"").status == 0);
  CHECK(run("shelling --degree 4 --group \"(1,2,3,4)(1,3)\" --order \"1^3 2 3^2; 1^3 2^2 4\"").status == 1);
  CHECK(run("shelling --degree 4 --group \"(1,2,3,4)\"").status == 1);
  CHECK(run("shelling --degree 4 --group \"(1,2,3,4)\" --budget 2").status == 3);
  CHECK(run("cm --degree 4 --group \"(1,2\"").status == 2);
  CHECK(run("complex --group \"(1,2)\"").status == 2);
  CHECK(run("nonsense").status == 2);
  CHECK(run("goebel --degree 3 --group \"(1,2,3)\" --poly \"x1\"").status == 2);
  CHECK(run("cellbasis --degree 4 --group \"(1,2,3,4)\" --coeff fp:2").status == 1);
  CHECK(run("cellbasis --degree 4 --group \"(1,2,3,4)\" --coeff fp:4").status == 2);
}

TEST_CASE("environment budget") {
  std::string cmd = "PERMCM_BUDGET=2 " + std::string(PERMCM_CLI) + " shelling --degree 4 --group \"(1,2,3,4)\" >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(st) == 3);
}

TEST_CASE("json output is deterministic") {
  for (std::string args : {"complex --degree 4 --group \"(1,2,3,4)(1,3)\" --format json",
                           "goebel --degree 3 --group \"(1,2,3)\" --poly \"x1*x3^4\" --orbit --format json",
                           "survey --degree 4 --jobs 2 --format json",
                           "cm --degree 4 --group \"(1,2,3,4)\" --topological --format json",
                           "represent --degree 4 --group \"(1,2,3,4)(1,3)\" --poly \"x1^3*x2\" --orbit --format json"}) {
    auto a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK_FALSE(a.out.empty());
    CHECK(a.out == b.out);
  }
}

TEST_CASE("json schemas") {
  auto c = run("complex --degree 4 --group \"(1,2,3,4)(1,3)\" --format json").out;
  CHECK(c.find("\"repr\"") != std::string::npos);
  CHECK(c.find("\"rank_set\"") != std::string::npos);
  CHECK(c.find("\"facets\"") != std::string::npos);
  auto r = run("cm --degree 4 --group \"(1,2,3,4)\" --format json").out;
  for (auto key : {"group", "order", "grr_index", "primes", "prediction", "algebraic", "topological", "agree"})
    CHECK(r.find("\"" + std::string(key) + "\"") != std::string::npos);
  auto g = run("goebel --degree 3 --group \"(1,2,3)\" --poly \"x1*x3^4\" --orbit --format json").out;
  CHECK(g.find("\"coeff\": \"s1^2 - 2*s2\"") != std::string::npos);
  CHECK(g.find("\"coeff\": \"s1*s3\"") != std::string::npos);
}

TEST_CASE("text output uses figure labels") {
  auto out = run("cellbasis --degree 4 --group \"(1,2,3,4)(1,3)\"").out;
  CHECK(out.find("1^2 2 3") != std::string::npos);
  auto survey = run("survey --degree 3").out;
  CHECK(survey.find("4 classes; everything matched") != std::string::npos);
}
