#include <doctest.h>

#include "cli.hpp"
#include "qtorus/harness.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qtorus");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qtorus::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: jones") {
  const Result r = run({"jones", "--s", "2", "--t", "3", "--N", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "q^(-1) + q^(-3) - q^(-4)\n");
  const Result csv = run({"--output", "csv", "jones", "--s", "2", "--t", "3", "--N", "2"});
  CHECK(csv.out == "exponent,coefficient\n-4,-1\n-3,1\n-1,1\n");
  const Result json = run({"jones", "--s", "2", "--t", "3", "--N", "2", "--output", "json"});
  CHECK(json.out == "{\"terms\":[[-4,1,-1,1],[-3,1,1,1],[-1,1,1,1]]}\n");
}

TEST_CASE("cli: exit codes") {
  CHECK(run({"jones", "--s", "2", "--t", "2", "--N", "3"}).code == 2);
  CHECK(run({"jones", "--s", "2", "--t", "3"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--precision", "20", "kashaev", "--s", "2", "--t", "3", "--N", "2"}).code == 2);
  CHECK(run({"theta", "--kind", "Psi{2,2}"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const Result gated = run({"verify", "tail", "--s", "2", "--t", "3", "--n", "1", "--m", "1",
                            "--N", "3", "--order", "30"});
  CHECK(gated.code == 2);
  CHECK(gated.err.find("--N 30") != std::string::npos);
}

TEST_CASE("cli: verify reports round-trip") {
  const Result r = run({"verify", "gauss", "--s", "2", "--t", "3", "--n", "1", "--m", "1", "--N",
                        "7", "--mode", "exact"});
  CHECK(r.code == 0);
  const qtorus::VerifyReport report = qtorus::report_from_json(r.out);
  CHECK(report.passed);
  CHECK(report.identity == qtorus::IdentityId::Gauss);
  CHECK(qtorus::report_from_json(qtorus::to_json(report)) == report);

  const Result ke = run({"verify", "kashaev-eichler", "--s", "2", "--t", "5", "--n", "1", "--m",
                         "2", "--N", "8"});
  CHECK(ke.code == 0);
  CHECK(*qtorus::report_from_json(ke.out).abs_error < 1e-15);
  CHECK(run({"verify", "kashaev-knot", "--knot", "T2_2p", "--p", "2", "--N", "4"}).code == 0);
  CHECK(run({"verify", "ab", "--s", "1", "--t", "2", "--m", "1", "--order", "60"}).code == 0);
  CHECK(run({"verify", "transform", "--kind", "Phi{2,3,1,1}", "--tau-re", "1/2", "--tau-im",
             "1"}).code == 0);
  CHECK(run({"verify", "triple", "--s", "2", "--t", "3", "--n", "1", "--m", "1", "--N", "12",
             "--order", "12"}).code == 0);
}

TEST_CASE("cli: series and values") {
  const Result theta = run({"theta", "--kind", "Phi{2,3,1,1}", "--order", "3"});
  CHECK(theta.out == "-q^(49/24) - q^(25/24) + q^(1/24) + O(q^(3))\n");
  const Result lim = run({"eichler-limit", "--kind", "Psi{2,1}", "--N", "1", "--output", "json"});
  CHECK(lim.code == 0);
  CHECK(lim.out.find("\"re\"") != std::string::npos);
  const Result asym = run({"asymptotic", "--kind", "Psi{2,1}", "--N", "20", "--K", "1"});
  CHECK(asym.code == 0);
  CHECK(asym.out.find("abs_error") != std::string::npos);
  // The ab route for (1,2) is tilde Psi_2^(1), as eta * character.
  const Result ab = run({"voa-char", "--s", "1", "--t", "2", "--n", "1", "--m", "1", "--route",
                         "ab", "--order", "4", "--eta-numerator"});
  CHECK(ab.out == "q^(25/8) - q^(9/8) + q^(1/8) + O(q^(4))\n");
  const Result direct = run({"voa-char", "--s", "2", "--t", "3", "--n", "1", "--m", "1", "--order",
                             "5", "--output", "csv"});
  const Result graded = run({"voa-char", "--s", "2", "--t", "3", "--n", "1", "--m", "1", "--order",
                             "5", "--route", "ab-graded"});
  CHECK(direct.code == 0);
  CHECK(graded.code == 0);
}

TEST_CASE("cli: environment defaults") {
  setenv("QTORUS_ORDER", "2", 1);
  const Result r = run({"theta", "--kind", "Phi{2,3,1,1}"});
  unsetenv("QTORUS_ORDER");
  CHECK(r.out == "-q^(25/24) + q^(1/24) + O(q^(2))\n");
}
