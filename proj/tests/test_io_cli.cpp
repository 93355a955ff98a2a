#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "hardycomp/classifier.hpp"
#include "hardycomp/io.hpp"

using namespace hardycomp;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HARDYCOMP_CLI_PATH) + " " + args +
                          " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) { return io::read_file(path); }

std::string tmp(const char* name) {
  const char* t = std::getenv("TMPDIR");
  return std::string(t ? t : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("hump certificates round-trip through JSON exactly") {
  const Symbol hp = Symbol::half_plus();
  const HumpCertificate cert = run_hump_pipeline(hp, 1.0, 0.0, 0.1, 4, 120, 50, 7);
  REQUIRE(cert.complete);
  const std::string text = io::hump_json(cert, false);
  const HumpCertificate back = io::hump_from_json(text);
  CHECK(back.symbol_text == cert.symbol_text);
  CHECK(back.d == cert.d);
  CHECK(back.grid.min_scale == cert.grid.min_scale);
  REQUIRE(back.stages.size() == cert.stages.size());
  for (std::size_t i = 0; i < cert.stages.size(); ++i) {
    CHECK(back.stages[i].gap == cert.stages[i].gap);
    CHECK(back.stages[i].eps == cert.stages[i].eps);
    CHECK(back.stages[i].inside_mass == cert.stages[i].inside_mass);
    CHECK(back.stages[i].outside_mass == cert.stages[i].outside_mass);
  }
  REQUIRE(back.frame.has_value());
  CHECK(back.frame->c1_hat == cert.frame->c1_hat);

  // The reloaded certificate replays against a reparsed symbol.
  const ReplayReport rep = replay_certificate(Symbol::parse(back.symbol_text), back);
  CHECK(rep.ok);
}

TEST_CASE("lacunary certificates round-trip through JSON exactly") {
  auto cert = select_lacunary_powers(Symbol::power(2), 1.0, 5, 2.0,
                                     QuadratureGrid::uniform());
  cert.bound_checks = l2_lower_bound_verify(Symbol::power(2), cert, 50, 7);
  const LacunaryCertificate back = io::lacunary_from_json(io::lacunary_json(cert, false));
  CHECK(back.powers == cert.powers);
  CHECK(back.m_e == cert.m_e);
  CHECK(back.bound_checks.min_quotient == cert.bound_checks.min_quotient);
  for (std::size_t a = 0; a < cert.gram.size(); ++a) {
    for (std::size_t b = 0; b < cert.gram.size(); ++b) {
      CHECK(back.gram[a][b] == cert.gram[a][b]);
    }
  }
}

TEST_CASE("serialization is deterministic without the timestamp") {
  ClassifyConfig cfg;
  cfg.p = 1.0;
  cfg.seed = 7;
  cfg.hump_trials = 16;
  const auto rep = classify(Symbol::parse("dilation(0.5)"), cfg);
  CHECK(io::report_json(rep, false) == io::report_json(rep, false));
}

TEST_CASE("csv emission is rfc4180-shaped") {
  ContactProfile c;
  c.tau = {0.1, 0.01};
  c.measure = {0.5, 0.25};
  const std::string csv = io::contact_curve_csv(c);
  CHECK(csv.find("tau,measure\r\n") == 0);
  // Data rows are CRLF-terminated and parse back to full precision.
  const std::size_t row = csv.find("\r\n") + 2;
  const std::size_t comma = csv.find(',', row);
  CHECK(std::stod(csv.substr(row, comma - row)) == 0.1);
  CHECK(std::stod(csv.substr(comma + 1)) == 0.5);
  CHECK(csv.rfind("\r\n") == csv.size() - 2);
}

TEST_CASE("cli: classification exit codes and artifacts") {
  CHECK(run_cli("classify --symbol 'dilation(0.5)' --p 1 --seed 7") == 0);
  const std::string out = tmp("hp_report.json");
  CHECK(run_cli("classify --symbol half_plus --p 1 --seed 7 --out " + out) == 1);
  const std::string text = slurp(out);
  CHECK(text.find("\"verdict\": \"fixes-lp-only\"") != std::string::npos);
  CHECK(text.find("hardycomp/trichotomy-report/v1") != std::string::npos);
}

TEST_CASE("cli: errors exit with the documented codes") {
  CHECK(run_cli("classify --symbol nonsense --p 1 --seed 7") == 65);
  CHECK(run_cli("contact --symbol \"mobius(2.0)\"") == 65);
  CHECK(run_cli("bogus-subcommand") != 0);
}

TEST_CASE("cli: certificate write and verify round trip") {
  const std::string cert = tmp("hp_cert.json");
  CHECK(run_cli("hump --symbol half_plus --p 1 --seed 7 --K 4 --rungs 120 "
                "--trials 50 --out " + cert) == 0);
  CHECK(run_cli("hump --verify " + cert) == 0);
}

TEST_CASE("cli: identical invocations produce identical artifacts") {
  const std::string f1 = tmp("paley1.json"), f2 = tmp("paley2.json");
  CHECK(run_cli("--no-timestamp paley --powers 2,4,8,16 --p 4 --trials 100 --seed 1 "
                "--out " + f1) == 0);
  CHECK(run_cli("--no-timestamp paley --powers 2,4,8,16 --p 4 --trials 100 --seed 1 "
                "--out " + f2) == 0);
  CHECK(slurp(f1) == slurp(f2));
  CHECK(slurp(f1).find("ratio_min") != std::string::npos);
}
