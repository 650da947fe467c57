#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;  // stdout and stderr interleaved
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DETERRENCE_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool has(const Run& r, const std::string& needle) { return r.out.find(needle) != std::string::npos; }

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("deterrence_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

const std::string kHigh = "--p 0.85,0.85,0.85,0.85 --q 0.05,0.05,0.05,0.05";

}  // namespace

TEST_CASE("roc") {
  const auto csv = fresh_dir("roc") / "pts.csv";
  const auto r = run("roc --scheme dictator " + kHigh + " --mode replication --out " + csv.string());
  CHECK(r.status == 0);
  CHECK(has(r, "AUC 0.879"));
  CHECK(fs::exists(csv));

  const auto diag =
      run("roc --scheme unbiased --p 0.5,0.5,0.5,0.5 --q 0.5,0.5,0.5,0.5 --mode exact --out " +
          csv.string());
  CHECK(diag.status == 0);
  CHECK(has(diag, "AUC 0.500"));

  const auto bad = run("roc --scheme unbiased --p 0.85 --q 0.05,0.05,0.05,0.05");
  CHECK(bad.status == 1);
  CHECK(has(bad, "--p"));
  CHECK(has(bad, "got 1"));

  const auto range = run("roc --scheme unbiased --p 1.2,0.5,0.5,0.5 --q 0.5,0.5,0.5,0.5");
  CHECK(range.status == 1);
  CHECK(has(range, "--p"));
}

TEST_CASE("roc writes to the default output directory and an svg on request") {
  const char* env = std::getenv("DETERRENCE_OUT_DIR");
  REQUIRE(env != nullptr);
  const auto svg = fresh_dir("svg") / "plot.svg";
  fs::create_directories(svg.parent_path());
  const auto r = run("roc --scheme veto " + kHigh + " --svg " + svg.string());
  CHECK(r.status == 0);
  CHECK(fs::exists(fs::path(env) / "roc_points.csv"));
  CHECK(fs::exists(svg));
}

TEST_CASE("roc reports unwritable output as an I/O error") {
  const auto r = run("roc --scheme veto " + kHigh + " --out /proc/deterrence/x.csv");
  CHECK(r.status == 2);
}

TEST_CASE("custom weights") {
  const auto r = run("auc --weights 4,0,0,0 " + kHigh + " --mode exact");
  CHECK(r.status == 0);
  CHECK(has(r, "rank AUC 0.900"));
  const auto both = run("auc --scheme dictator --weights 4,0,0,0 " + kHigh);
  CHECK(both.status == 1);
  const auto negative = run("auc --weights -1,1,1,1 " + kHigh);
  CHECK(negative.status == 1);
}

TEST_CASE("youden") {
  const auto u = run("youden --scheme unbiased " + kHigh);
  CHECK(u.status == 0);
  CHECK(has(u, "J* 0.974"));
  CHECK(has(u, "tau* 1.1\n"));

  const auto d = run("youden --scheme dictator " + kHigh);
  CHECK(d.status == 0);
  CHECK(has(d, "tau* 0.1\n"));

  const auto flat = run("youden --scheme frontline --p 0.3,0.6,0.2,0.9 --q 0.3,0.6,0.2,0.9");
  CHECK(flat.status == 0);
  CHECK(has(flat, "J* 0.000 (0)"));
}

TEST_CASE("game") {
  const auto breakeven = run("game --retaliation 0.92 --benefit 11.5 --cost 1");
  CHECK(breakeven.status == 0);
  CHECK(has(breakeven, "expected attack payoff 0\n"));
  CHECK(has(breakeven, "verdict deterred"));
  CHECK(has(breakeven, "breakeven B/C 11.5\n"));

  const auto zero = run("game --retaliation 0 --benefit 1 --cost 1");
  CHECK(zero.status == 0);
  CHECK(has(zero, "expected attack payoff 1\n"));
  CHECK(has(zero, "verdict attacks"));

  const auto sure = run("game --retaliation 1 --benefit 100 --cost 1");
  CHECK(sure.status == 0);
  CHECK(has(sure, "verdict deterred"));
  CHECK(has(sure, "breakeven B/C inf"));

  const auto computed = run("game --scheme unbiased " + kHigh + " --tau 2 --benefit 11.5");
  CHECK(computed.status == 0);
  CHECK(has(computed, "retaliation probability R 0.98801875"));
  CHECK(has(computed, "escalation risk F"));

  CHECK(run("game --retaliation 1.5").status == 1);
  CHECK(run("game --retaliation 0.5 --cost -1").status == 1);
  CHECK(run("game --scheme unbiased " + kHigh).status == 1);  // no --tau
}

TEST_CASE("reproduce-paper") {
  const auto dir = fresh_dir("repro");
  const auto r = run("reproduce-paper --out " + dir.string());
  // Exit 0 iff no comparison cell is flagged; the report is written either way.
  REQUIRE((r.status == 0 || r.status == 3));
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) files += entry.is_regular_file();
  CHECK(files >= 10);
  std::ifstream in(dir / "comparison.csv");
  std::stringstream ss;
  ss << in.rdbuf();
  const bool flagged = ss.str().find(",false\n") != std::string::npos;
  CHECK(flagged == (r.status == 3));
  CHECK(has(r, "comparison cells 56"));

  const auto alt = run("reproduce-paper --samples 45 --out " + fresh_dir("repro45").string());
  CHECK((alt.status == 0 || alt.status == 3));

  const auto blocker = fresh_dir("blocker");
  fs::create_directories(blocker);
  std::ofstream(blocker / "file") << "x";
  CHECK(run("reproduce-paper --out " + (blocker / "file").string()).status == 2);
  CHECK(run("reproduce-paper --samples 1").status == 1);
}

TEST_CASE("batch") {
  const auto dir = fresh_dir("batch");
  fs::create_directories(dir);
  std::ofstream(dir / "cfg.json") << R"({
  // one cell
  "schemes": ["veto"],
  "environments": ["env02"],
  "outputs": ["roc-points", "auc-table"]
})";
  const auto r = run("batch --config " + (dir / "cfg.json").string() + " --out " +
                     (dir / "out").string() + " --jobs 2");
  CHECK(r.status == 0);
  CHECK(has(r, "cells 1"));
  CHECK(fs::exists(dir / "out" / "auc_table.csv"));

  std::ofstream(dir / "bad.json") << R"({"schemes": ["veto"], "environments": ["env99"]})";
  const auto bad = run("batch --config " + (dir / "bad.json").string());
  CHECK(bad.status == 1);
  CHECK(has(bad, "env99"));

  CHECK(run("batch --config " + (dir / "missing.json").string()).status == 2);
}

TEST_CASE("simulate") {
  const auto r =
      run("simulate --scheme dictator --p 0.85,0.85,0.85,0.85 --tau 4 --trials 1000000 --seed 42");
  CHECK(r.status == 0);
  const std::regex z_re("R estimate .* exact 0.85 z (-?[0-9.]+)");
  std::smatch m;
  REQUIRE(std::regex_search(r.out, m, z_re));
  CHECK(std::abs(std::stod(m[1])) <= 4.0);

  const auto zero = run("simulate --scheme unbiased --p 0,0,0,0 --tau 1 --trials 1000");
  CHECK(zero.status == 0);
  CHECK(has(zero, "R estimate 0 se 0 exact 0 z 0.000"));

  CHECK(run("simulate --scheme unbiased --p 0.5,0.5,0.5,0.5 --tau 2 --trials 0").status == 1);

  const auto again =
      run("simulate --scheme dictator --p 0.85,0.85,0.85,0.85 --tau 4 --trials 1000000 --seed 42");
  CHECK(again.out == r.out);
}

TEST_CASE("help and unknown flags") {
  for (const char* cmd : {"roc", "auc", "youden", "game", "batch", "reproduce-paper", "simulate"}) {
    const auto h = run(std::string(cmd) + " --help");
    CHECK(h.status == 0);
    CHECK(has(h, "--help"));
  }
  const auto roc_help = run("roc --help");
  for (const char* flag : {"--scheme", "--weights", "--p", "--q", "--mode", "--samples", "--out",
                           "--svg"}) {
    CHECK(has(roc_help, flag));
  }
  CHECK(run("roc --bogus").status == 1);
  CHECK(run("").status == 1);
  CHECK(run("launch").status == 1);
}
