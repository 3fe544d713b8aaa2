#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mollow/cli.hpp"

using namespace mollow;
using mollow::cli::RunConfig;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/mollow_test_" + name) {
    std::ofstream f(path, std::ios::binary);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("parse_config derives the missing drive parameter") {
  const RunConfig cfg = cli::parse_config(
      {"--component", "kerr-z", "--delta", "0", "--saturation", "1", "--omega-min", "-6",
       "--omega-max", "6", "--points", "481"});
  CHECK(cfg.component == Component::KerrZ);
  CHECK(cfg.rabi == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(cfg.saturation == 1.0);
  CHECK(cfg.points == 481);
  CHECK(cfg.method == Method::Residue);
}

TEST_CASE("parse_config rejects conflicting or missing drive flags") {
  CHECK_THROWS_AS(cli::parse_config({"--component", "kerr-z", "--rabi", "1", "--saturation", "2",
                                     "--omega-min", "-1", "--omega-max", "1", "--points", "3"}),
                  cli::UsageError);
  CHECK_THROWS_AS(cli::parse_config({"--component", "kerr-z", "--omega-min", "-1", "--omega-max",
                                     "1", "--points", "3"}),
                  cli::UsageError);
  CHECK_THROWS_AS(cli::parse_config({"--component", "kerr-z", "--rabi", "1", "--omega-min", "1",
                                     "--omega-max", "-1", "--points", "3"}),
                  cli::UsageError);
  CHECK_THROWS_AS(cli::parse_config({"--component", "kerr-z", "--rabi", "1", "--omega-min", "-1",
                                     "--omega-max", "1", "--points", "1"}),
                  cli::UsageError);
  CHECK_THROWS_AS(cli::parse_config({"--component", "kerr-z", "--rabi", "1", "--omega-min", "-1",
                                     "--omega-max", "1", "--points", "5", "--method",
                                     "sat-transverse"}),
                  cli::UsageError);
}

TEST_CASE("config file merge with flag override") {
  const TempFile cfg_file("sweep.json",
                          R"({"component":"parametric-z","saturation":1,"omega_min":-2,)"
                          R"("omega_max":2,"points":5})");
  const RunConfig cfg = cli::parse_config({"--config", cfg_file.path, "--saturation", "3"});
  CHECK(cfg.component == Component::ParametricZ);
  CHECK(cfg.saturation == 3.0);

  const TempFile bad("bad.json", R"({"componnt":"kerr-z"})");
  CHECK_THROWS_WITH_AS(cli::parse_config({"--config", bad.path}),
                       doctest::Contains("componnt"), cli::UsageError);
}

TEST_CASE("sweep emits the fixed CSV schema") {
  std::string out;
  const int code = run_cli({"sweep", "--component", "kerr-z", "--delta", "0.2", "--rabi", "0",
                            "--omega-min", "-1", "--omega-max", "1", "--points", "5"},
                           &out);
  CHECK(code == 0);
  CHECK(out.substr(0, 23) == "omega,re,im,abs,arg\n-1,");
  // 1 header + 5 rows
  int lines = 0;
  for (char ch : out)
    if (ch == '\n') ++lines;
  CHECK(lines == 6);
}

TEST_CASE("exit code contract") {
  std::string out, err;
  // 2: usage errors, with the offending flag named
  CHECK(run_cli({"sweep", "--component", "nope", "--rabi", "1", "--omega-min", "-1",
                 "--omega-max", "1", "--points", "3"},
                &out, &err) == 2);
  CHECK(err.find("component") != std::string::npos);
  CHECK(run_cli({"bogus-subcommand"}, &out, &err) == 2);
  CHECK(run_cli({}, &out, &err) == 2);
  // 1: evaluation/output failure
  CHECK(run_cli({"sweep", "--component", "kerr-z", "--rabi", "1", "--omega-min", "-1",
                 "--omega-max", "1", "--points", "3", "--output",
                 "/nonexistent-dir/out.csv"},
                &out, &err) == 1);
  CHECK(err.find("cannot open") != std::string::npos);
}

TEST_CASE("golden files: csv and json schema stability") {
  const std::vector<std::string> args{"sweep",    "--component", "kerr-z", "--delta", "0.25",
                                      "--rabi",   "0",           "--omega-min", "-1",
                                      "--omega-max", "1",        "--points", "5"};
  std::string csv;
  REQUIRE(run_cli(args, &csv) == 0);
  CHECK(csv == slurp(std::string(MOLLOW_GOLDEN_DIR) + "/sweep_rabi0.csv"));

  auto jargs = args;
  jargs.push_back("--format");
  jargs.push_back("json");
  std::string json;
  REQUIRE(run_cli(jargs, &json) == 0);
  CHECK(json == slurp(std::string(MOLLOW_GOLDEN_DIR) + "/sweep_rabi0.json"));
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::vector<std::string> args{"sweep",    "--component", "parametric-z", "--delta", "0",
                                      "--saturation", "2",       "--omega-min",  "-3",
                                      "--omega-max",  "3",       "--points",     "21"};
  std::string a, b;
  REQUIRE(run_cli(args, &a) == 0);
  REQUIRE(run_cli(args, &b) == 0);
  CHECK(a == b);
  CHECK(a.find("omega,re,im,abs,arg\n") == 0);
}

TEST_CASE("roots subcommand") {
  std::string out;
  REQUIRE(run_cli({"roots", "--delta", "0", "--rabi", "1"}, &out) == 0);
  CHECK(out.find("regime: triplet") != std::string::npos);
  CHECK(out.find("0.9682458365518543") != std::string::npos);

  REQUIRE(run_cli({"roots", "--delta", "0", "--rabi", "0.2"}, &out) == 0);
  CHECK(out.find("regime: sub-threshold") != std::string::npos);

  // strong drive: asymptote comparison shown, deviations below 1e-3
  REQUIRE(run_cli({"roots", "--delta", "0", "--rabi", "10", "--format", "json"}, &out) == 0);
  CHECK(out.find("asym_deviation") != std::string::npos);
  std::istringstream is(out);
  std::string line;
  while (std::getline(is, line)) {
    const auto pos = line.find("\"asym_deviation\": ");
    if (pos == std::string::npos) continue;
    const double dev = std::stod(line.substr(pos + 18));
    CHECK(dev < 1e-3);
  }

  std::string err;
  CHECK(run_cli({"roots", "--rabi", "1", "--saturation", "1"}, &out, &err) == 2);
}

TEST_CASE("figure preset fans out one file per saturation value") {
  std::string out;
  REQUIRE(run_cli({"figure", "fig5", "--points", "5", "--output-dir", "/tmp"}, &out) == 0);
  for (const char* name :
       {"/tmp/fig5_s0.1.csv", "/tmp/fig5_s1.csv", "/tmp/fig5_s10.csv", "/tmp/fig5_s100.csv"}) {
    const std::string text = slurp(name);
    CHECK(text.find("omega,re,im,abs,arg\n") == 0);
    std::remove(name);
  }
  const std::string meta = slurp("/tmp/fig5_meta.json");
  CHECK(meta.find("\"component\": \"parametric-z\"") != std::string::npos);
  CHECK(meta.find("s_list_note") != std::string::npos);
  std::remove("/tmp/fig5_meta.json");
}

TEST_CASE("docs subcommand prints the reference map") {
  std::string out;
  REQUIRE(run_cli({"docs"}, &out) == 0);
  CHECK(out.find("| (b.10) | triplet.mollow_poly |") != std::string::npos);
  CHECK(out.find("| (4.31) | oracle.diffusion_matrix (MainZ) |") != std::string::npos);
  CHECK(out.find("out of scope (light propagation)") != std::string::npos);
}

TEST_CASE("dense-medium flag reproduces a direct gamma sweep bitwise") {
  const std::vector<std::string> a{"sweep", "--component", "kerr-z", "--delta", "0.4",
                                   "--rabi", "1.2", "--omega-min", "-2", "--omega-max", "2",
                                   "--points", "11", "--gamma", "1", "--epsilon", "4"};
  const std::vector<std::string> b{"sweep", "--component", "kerr-z", "--delta", "0.4",
                                   "--rabi", "1.2", "--omega-min", "-2", "--omega-max", "2",
                                   "--points", "11", "--gamma", "2"};
  std::string ta, tb;
  REQUIRE(run_cli(a, &ta) == 0);
  REQUIRE(run_cli(b, &tb) == 0);
  CHECK(ta == tb);
}
