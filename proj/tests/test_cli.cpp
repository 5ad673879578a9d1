#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cli.hpp"
#include "json_io.hpp"
#include "support/values.hpp"
#include "wwgm/correspondence.hpp"
#include "wwgm/errors.hpp"
#include "wwgm/ordering.hpp"
#include "wwgm/random_poly.hpp"

using namespace tv;
using namespace wwgm::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wwgm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST(Cli, OrderJson) {
  const Outcome r = invoke({"order", "1", "1", "--s", "0", "--format", "json"});
  EXPECT_EQ(r.code, wwgm::cli::kExitOk);
  EXPECT_EQ(trimmed(r.out),
            R"({"terms":[{"n":1,"m":1,"re":"1","im":"0","hbar_pow":0},)"
            R"({"n":0,"m":0,"re":"0","im":"-1/2","hbar_pow":1}]})");
}

TEST(Cli, StarAndEvolveText) {
  EXPECT_EQ(trimmed(invoke({"star", "q", "p", "--s", "0"}).out), "q*p - 1/2*i*hbar");
  EXPECT_EQ(trimmed(invoke({"gamma", "2", "0", "--r", "0"}).out), "-2*i*hbar*q*dp + hbar^2*s*dp^2");
  EXPECT_EQ(trimmed(invoke({"evolve", "(q^2+p^2)/2", "q", "2", "--s", "0"}).out),
            "t^0: q\nt^1: p\nt^2: -1/2*q");
}

TEST(Cli, WtableRows) {
  const Outcome r = invoke({"wtable", "--max", "2", "--s", "symbolic", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json rows = Json::parse(r.out).at("rows");
  ASSERT_EQ(rows.size(), 6u);
  for (const Json& row : rows) {
    const int n = row.at("n"), m = row.at("m");
    EXPECT_EQ(op_poly_from_json(row.at("ordered")), s_ordered(n, m, Scalar(0)));
    EXPECT_EQ(diff_op_from_json(row.at("generator")), gamma_generator(n, m, Scalar(0), Scalar::s()));
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"bogus"}).code, wwgm::cli::kExitUsage);
  EXPECT_EQ(invoke({"order", "70", "1"}).code, wwgm::cli::kExitUsage);
  const Outcome parse = invoke({"quantize", "q^-1"});
  EXPECT_EQ(parse.code, wwgm::cli::kExitUsage);
  EXPECT_NE(parse.err.find("byte 2"), std::string::npos);
  EXPECT_EQ(invoke({"fock", "commutator", "--tol", "1e-20"}).code, wwgm::cli::kExitCheckFailed);
  EXPECT_EQ(invoke({"fock", "commutator"}).code, wwgm::cli::kExitOk);
  EXPECT_EQ(invoke({"wcheck", "1", "0", "0", "1"}).code, wwgm::cli::kExitOk);
}

TEST(Cli, FockReportsUseDoubles) {
  const Outcome r =
      invoke({"fock", "displacement", "Q", "--xi", "0.3", "--eta", "0.2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j.at("deviation").is_number_float());
  EXPECT_TRUE(j.at("passed").get<bool>());
}

TEST(Cli, JsonOutputParsesBackToTheValue) {
  const Outcome r = invoke({"moyal", "q^2", "p^2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(phase_poly_from_json(Json::parse(r.out)),
            mono(1, 1, Scalar(-4) * ih()) - cst(Scalar(2) * Scalar::s() * Scalar::hbar().pow(2)));
}

TEST(JsonIo, RandomValuesRoundTrip) {
  std::mt19937 rng(47);
  for (int t = 0; t < 100; ++t) {
    const PhasePoly f = random::phase_poly(rng, 4, VarPair::qp, true);
    EXPECT_EQ(phase_poly_from_json(Json::parse(to_json(f).dump())), f);
    const OpPoly a = random::op_poly(rng, 4, t % 2 ? Algebra::aadag() : Algebra::qp(), true);
    EXPECT_EQ(op_poly_from_json(Json::parse(to_json(a).dump())), a);
    const DiffOp d = random::diff_op(rng, 3, VarPair::xi_eta);
    EXPECT_EQ(diff_op_from_json(Json::parse(to_json(d).dump())), d);
    const Scalar c = random::scalar(rng, true, true, 3);
    EXPECT_EQ(scalar_from_json(Json::parse(to_json(c).dump())), c);
  }
}

TEST(JsonIo, MalformedInput) {
  EXPECT_THROW((void)phase_poly_from_json(Json::parse(R"({"terms":[]})")), DomainError);
  EXPECT_THROW((void)op_poly_from_json(Json::parse(R"({"terms":[{"n":-1,"m":0,"re":"1","im":"0","hbar_pow":0}]})")),
               DomainError);
  EXPECT_THROW((void)scalar_from_json(Json::parse(R"([{"re":"1/0","im":"0","hbar_pow":0}])")), DomainError);
}
