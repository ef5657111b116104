// Runs the holoent executable as a subprocess.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "holo/scan.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HOLOENT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run("--help").status == 0);
  CHECK(run("geodesic --help").status == 0);
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("geodesic --geometry flat").status == 2);
  CHECK(run("geodesic --steps 0").status == 2);
  CHECK(run("geodesic --no-such-flag").status == 2);
  CHECK(run("mi-scan --x-from 0.3").status == 2);
  CHECK(run("geodesic --geometry btz --r-plus -1").status == 2);
}

TEST_CASE("geodesic rows") {
  const Run r = run("geodesic --geometry btz --r-plus 1 --from 0.1 --to 5 --steps 50");
  REQUIRE(r.status == 0);
  const holo::ScanResult s = holo::parse_csv(r.out);
  CHECK(s.rows.size() == 50);
  CHECK(run("geodesic --geometry btz --r-plus 1 --from 0.1 --to 5 --steps 50").out == r.out);
}

TEST_CASE("header comments and output file") {
  const auto path = std::filesystem::temp_directory_path() / "holoent_cli_test.csv";
  const Run r = run("entropy --geometry btz-rot --r-plus 2 --r-minus 1 --header-comments --out " + path.string());
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  const holo::ScanResult s = holo::parse_csv(ss.str());
  CHECK(*s.meta("geometry") == "btz-rot");
  CHECK(*s.meta("command") == "entropy");
  CHECK(s.rows.size() == 50);
  std::filesystem::remove(path);
}

TEST_CASE("x0-scan exit status") {
  const Run bad = run("x0-scan --tau 0.5");
  CHECK(bad.status == 1);
  const Run ok = run("x0-scan --tau 0.5,1,2");
  CHECK(ok.status == 0);
  const holo::ScanResult s = holo::parse_csv(ok.out);
  CHECK(s.rows.size() == 3);
  CHECK(run("x0-scan --model rotating --tau 0.5,1,2 --sector 3").status == 0);
  CHECK(run("x0-scan --sector 2").status == 2);
}

TEST_CASE("mera and correlator subcommands") {
  const Run m = run("mera --single-block --l 2,4,8,16 --n-sites 1024 --header-comments");
  REQUIRE(m.status == 0);
  const holo::ScanResult s = holo::parse_csv(m.out);
  CHECK(s.rows.size() == 4);
  CHECK(s.meta("fit_slope") != nullptr);
  CHECK(run("mera --n-sites 1000").status == 1);
  CHECK(run("mera --branch 5 --n-sites 125").status == 1);

  const Run c = run("correlator --geometry btz --r-plus 1 --delta 1.5 --steps 10");
  REQUIRE(c.status == 0);
  CHECK(holo::parse_csv(c.out).header.size() == 4);
  CHECK(run("correlator --geometry btz --delta 0").status == 2);
}
