#include "cli_cases.hpp"

#include <catch_amalgamated.hpp>

using namespace nilricci::testing;

TEST_CASE("every golden case reproduces its committed bytes and exit code") {
  for (const auto &c : cli_cases()) {
    INFO(c.golden << ": " << c.args);
    const RunResult r = run_cli(expand_args(c.args));
    CHECK(r.code == c.exit_code);
    const std::string want = read_file(golden_dir() + "/" + c.golden);
    CHECK(r.out == want);
  }
}

TEST_CASE("output is byte-identical across repeated runs") {
  for (const char *args :
       {"algebras", "reduce A5,4 --gram @FX@/gram_identity.json"}) {
    const std::string a = expand_args(args);
    const RunResult r1 = run_cli(a);
    const RunResult r2 = run_cli(a);
    CHECK(r1.out == r2.out);
    CHECK(r1.code == r2.code);
    CHECK(!r1.out.empty());
  }
}

TEST_CASE("input errors exit 1 and keep stdout clean") {
  for (const char *args : {
           "derive A9,9",
           "solve A5,3 --tensor @FX@/malformed.json",
           "solve A5,3 --tensor @FX@/tensor_a54_unsolvable.json",  // declared id mismatch
           "ricci A5,4",           // neither --coeffs nor --gram
           "solve A5,3",           // neither --tensor nor --batch
           "frame A5,4 --gram @FX@/tensor_a53_solvable.json",  // not a gram file
       }) {
    INFO(args);
    const RunResult r = run_cli(expand_args(args));
    CHECK(r.code == 1);
    CHECK(r.out.empty());
  }
}

TEST_CASE("off-pattern tensor entries are named with 1-based positions") {
  const RunResult r = run_cli(
      expand_args("solve A5,1 --tensor @FX@/tensor_a51_offpattern.json"),
      /*merge_stderr=*/true);
  CHECK(r.code == 1);
  CHECK(r.out.find("(1,2)") != std::string::npos);
}

TEST_CASE("the TOLERANCE variable tightens or breaks verification") {
  const std::string verify_args = expand_args(
      "verify A5,3 --tensor @FX@/tensor_a53_solvable.json "
      "--coeffs alpha=1.2,beta=-0.6,gamma=0.9,delta=0.4,epsilon=1.1");
  CHECK(run_cli(verify_args).code == 0);
  // residual ~1e-16 cannot clear an absurdly tight gate
  CHECK(run_cli(verify_args, false, "TOLERANCE=1e-30 ").code == 2);
  // a loose gate accepts wrong coefficients
  const std::string wrong = expand_args(
      "verify A5,3 --tensor @FX@/tensor_a53_solvable.json --coeffs alpha=2");
  CHECK(run_cli(wrong).code == 2);
  CHECK(run_cli(wrong, false, "TOLERANCE=1e9 ").code == 0);
  // malformed tolerance is an input error
  CHECK(run_cli(verify_args, false, "TOLERANCE=abc ").code == 1);
}

TEST_CASE("help exits zero") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("solve --help").code == 0);
}
