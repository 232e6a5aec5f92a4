#include "doctest.h"

#include <sstream>

#include "tkklab/commands.hpp"

using namespace tkk;

static std::string error_of(const std::string& text, ConfigFormat fmt = ConfigFormat::toml) {
  try {
    parse_config(text, fmt);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("valid minimal config") {
  auto cfg = parse_config("[field]\ntype = \"Fp\"\np = 5\n[algebra]\nfamily = \"exchange\"\n");
  CHECK(cfg.field.p == 5);
  CHECK(cfg.algebra.family == "exchange");
  CHECK(cfg.run.seed == 0);
  CHECK(cfg.run.samples == 200);
  CHECK(cfg.run.word_length == 4);
}

TEST_CASE("characteristic 3 is rejected") {
  auto e = error_of("[field]\ntype = \"Fp\"\np = 3\n[algebra]\nfamily = \"exchange\"\n");
  CHECK(e.find("characteristic") != std::string::npos);
}

TEST_CASE("unknown keys name their path") {
  auto e = error_of("[field]\ntype = \"Fp\"\np = 5\n[algebra]\nfamily = \"matrix\"\netaa = 1\n");
  CHECK(e.find("algebra.etaa") != std::string::npos);
  CHECK(error_of("[field]\ntype = \"Fp\"\np = 5\n[algebra]\nfamily = \"exchange\"\n[extra]\nx = 1\n").find("'extra'") != std::string::npos);
  CHECK(error_of("[field]\ntype = \"Fp\"\np = 5\nmodulus = [1, 0, 1]\n[algebra]\nfamily = \"exchange\"\n").find("field.modulus") !=
        std::string::npos);
}

TEST_CASE("parse errors carry line and column") {
  auto e = error_of("[field]\ntype = \"Fp\"\np = 5\n[algebra\n");
  CHECK(e.find("line 4") != std::string::npos);
  CHECK(e.find("column") != std::string::npos);
  auto j = error_of("{\"field\": {\"type\": \"Fp\",\n \"p\": }}", ConfigFormat::json);
  CHECK(j.find("line 2") != std::string::npos);
}

TEST_CASE("semantic checks") {
  CHECK(error_of("[field]\ntype = \"Fp\"\np = 5\n[algebra]\nfamily = \"matrix\"\neta = 5\n").find("algebra.eta") != std::string::npos);
  CHECK(error_of("[field]\ntype = \"Fp\"\np = 5\n[algebra]\nfamily = \"matrix\"\ncubic = \"field\"\ncubic_modulus = [3, 0, 0, 1]\n")
            .find("reducible") != std::string::npos);
  CHECK(error_of("[field]\ntype = \"Fq\"\np = 5\nmodulus = [1, 0, 1]\n[algebra]\nfamily = \"exchange\"\n").find("reducible") !=
        std::string::npos);
  CHECK(error_of("[field]\ntype = \"Q\"\n[algebra]\nfamily = \"hurwitz\"\nparams = [\"1/0\", 1]\n").find("denominator") != std::string::npos);
  CHECK(error_of("[field]\ntype = \"Fp\"\np = 5\n[algebra]\nfamily = \"lattice\"\n").find("unknown family") != std::string::npos);
  CHECK(error_of("[field]\ntype = \"Fp\"\np = 5\n").find("algebra") != std::string::npos);
}

TEST_CASE("JSON and TOML agree") {
  auto a = parse_config("[field]\ntype = \"Q\"\n[algebra]\nfamily = \"hurwitz\"\nparams = [-1, \"-1\"]\ndivision = true\n[run]\nseed = 4\n");
  auto b = parse_config(R"({"field": {"type": "Q"}, "algebra": {"family": "hurwitz", "params": [-1, "-1"], "division": true}, "run": {"seed": 4}})",
                        ConfigFormat::json);
  CHECK(a.algebra.params == b.algebra.params);
  CHECK(a.algebra.division == b.algebra.division);
  CHECK(a.run.seed == b.run.seed);
}

TEST_CASE("dispatch exit codes") {
  std::ostringstream out, err;
  auto cfg = parse_config("[field]\ntype = \"Fp\"\np = 5\n[algebra]\nfamily = \"matrix\"\n");
  CommandOverrides o;
  CHECK(dispatch("verify-algebra", cfg, o, out, err) == exit_pass);
  CHECK(dispatch("relations", cfg, o, out, err) == exit_pass);
  o.debug_corrupt = true;
  out.str("");
  CHECK(dispatch("relations", cfg, o, out, err) == exit_check_failed);
  CHECK(out.str().find("witness: parameters") != std::string::npos);
  CommandOverrides eta;
  eta.debug_eta = "2";
  CHECK(dispatch("relations", cfg, eta, out, err) == exit_check_failed);
  CHECK(dispatch("frobnicate", cfg, CommandOverrides{}, out, err) == exit_usage);
  auto q = parse_config("[field]\ntype = \"Q\"\n[algebra]\nfamily = \"hurwitz\"\nparams = [-1, -1]\n");
  CHECK(dispatch("geometry", q, CommandOverrides{}, out, err) == exit_usage);
  CHECK(dispatch("build-tkk", q, CommandOverrides{}, out, err) == exit_pass);
}
