#include "doctest.h"

#include "cvtri/csv.hpp"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using cvtri::read_csv;

namespace {

const fs::path kDir = fs::temp_directory_path() / "cvtri_cli_test";

int run(const std::string& args) {
  const std::string cmd = std::string(CVTRI_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string path(const std::string& name) { return (kDir / name).string(); }

struct Scratch {
  Scratch() { fs::create_directories(kDir); }
  ~Scratch() { fs::remove_all(kDir); }
};

}  // namespace

TEST_CASE("symmetric subcommand") {
  Scratch s;
  REQUIRE(run("symmetric --r-min 0 --r-max 2 --steps 201 --out " + path("a.csv")) == 0);
  const std::string text = slurp(path("a.csv"));
  CHECK(text.rfind("# cv-triparty v1, subcommand=symmetric, params=", 0) == 0);
  const auto t = read_csv(path("a.csv"));
  REQUIRE(t.rows.size() == 201);
  const std::vector<double> r0(t.rows[0].begin() + 1, t.rows[0].begin() + 8);
  CHECK(r0 == std::vector<double>{4, 4, 1, 4, 4, 1, 1});
  CHECK(t.rows[100][1] == doctest::Approx(9.30619).epsilon(1e-6));
  CHECK(t.rows[100][2] == doctest::Approx(3.03845).epsilon(1e-6));
  CHECK(t.rows[100][4] == doctest::Approx(1.76945).epsilon(1e-6));
  CHECK(t.rows[100][5] == doctest::Approx(1.74036).epsilon(1e-6));

  REQUIRE(run("symmetric --r-min 0 --r-max 2 --steps 201 --out " + path("b.csv")) == 0);
  CHECK(slurp(path("b.csv")) == text);
}

TEST_CASE("asym-tw subcommand") {
  Scratch s;
  REQUIRE(run("asym-tw --coefficients paper-literal --find-window --out " + path("lit.csv")) == 0);
  const std::string text = slurp(path("lit.csv"));
  CHECK(text.find("# key_window steered=3 steerer=1: lo=0.2467") != std::string::npos);
  CHECK(text.find("# key_window steered=1 steerer=3: lo=0.2406") != std::string::npos);

  const auto t = read_csv(path("lit.csv"));
  CHECK(t.rows[0] == std::vector<double>{0, 4, 4, 4, 4, 1, 1, -0.442695041, -0.442695041});

  REQUIRE(run("asym-tw --zt-min 1 --zt-max 2 --steps 2 --out " + path("c.csv")) == 0);
  const auto c = read_csv(path("c.csv"));
  CHECK(c.rows[0][5] == doctest::Approx(0.0816).epsilon(1e-3));
  CHECK(c.rows[0][7] == doctest::Approx(1.365).epsilon(1e-3));

  CHECK(run("asym-tw --zt-max 0.2 --steps 3 --find-window") == 3);
}

TEST_CASE("cavity subcommand") {
  Scratch s;
  REQUIRE(run("cavity --eps-frac 0 --steps 11 --out " + path("vac.csv")) == 0);
  const auto vac = read_csv(path("vac.csv"));
  for (const auto& row : vac.rows) {
    for (std::size_t c = 1; c <= 6; ++c) CHECK(row[c] == 1.0);
    for (std::size_t c = 7; c <= 12; ++c) CHECK(row[c] == -0.442695041);
  }
  CHECK(slurp(path("vac.csv")).find("epsilon_c=106.600358") != std::string::npos);

  REQUIRE(run("cavity --sweep-pump 0.1:0.98:5 --steps 61 --out " + path("pump.csv")) == 0);
  const auto pump = read_csv(path("pump.csv"));
  CHECK(pump.rows.size() == 5);
  CHECK(pump.columns[1] == "min_pi_12");
  CHECK(pump.columns[7] == "max_k_12");

  CHECK(run("cavity --eps-frac 1.0") == 3);
  CHECK(run("cavity --eps-frac 1.5") == 3);
  CHECK(run("cavity --sweep-pump 0.1:1.0:4") == 3);
  CHECK(run("cavity --sweep-pump 0.1-0.5") == 2);
}

TEST_CASE("argument errors exit with 2") {
  CHECK(run("") == 2);
  CHECK(run("bogus") == 2);
  CHECK(run("symmetric --steps 1") == 2);
  CHECK(run("symmetric --r-min 2 --r-max 1") == 2);
  CHECK(run("symmetric --mu 1.5") == 2);
  CHECK(run("asym-tw --coefficients other") == 2);
  CHECK(run("asym-tw --kappa-ratio 1.2") == 2);
  CHECK(run("cavity --eps-frac -0.1") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("config file") {
  Scratch s;
  std::ofstream(path("cfg.json")) << R"({"r-max": 1, "steps": 3, "mu": 0.5})";
  REQUIRE(run("symmetric --config " + path("cfg.json") + " --steps 5 --out " + path("cfg.csv")) == 0);
  const auto t = read_csv(path("cfg.csv"));
  CHECK(t.rows.size() == 5);
  CHECK(t.rows.back()[0] == 1.0);
  CHECK(slurp(path("cfg.csv")).find("mu=0.5") != std::string::npos);

  std::ofstream(path("flag.json")) << R"({"find-window": true, "coefficients": "paper-literal"})";
  REQUIRE(run("asym-tw --config " + path("flag.json") + " --out " + path("flag.csv")) == 0);
  CHECK(slurp(path("flag.csv")).find("# key_window") != std::string::npos);

  std::ofstream(path("bad.json")) << R"({"r-max": 1, "colour": "red"})";
  CHECK(run("symmetric --config " + path("bad.json")) == 2);
  std::ofstream(path("nested.json")) << R"({"r-max": [1, 2]})";
  CHECK(run("symmetric --config " + path("nested.json")) == 2);
  std::ofstream(path("broken.json")) << "{";
  CHECK(run("symmetric --config " + path("broken.json")) == 2);
  CHECK(run("symmetric --config " + path("missing.json")) == 2);
}

TEST_CASE("plot subcommand") {
  Scratch s;
  REQUIRE(run("asym-tw --steps 31 --out " + path("a.csv") + " --plot " + path("a.svg")) == 0);
  CHECK(slurp(path("a.svg")).find("stroke-dasharray") != std::string::npos);

  REQUIRE(run("plot " + path("a.csv") + " --columns k_13,k_31 --out " + path("k.svg")) == 0);
  const std::string svg = slurp(path("k.svg"));
  CHECK(svg.find("<polyline") != std::string::npos);
  REQUIRE(run("plot " + path("a.csv") + " --columns k_13,k_31 --out " + path("k2.svg")) == 0);
  CHECK(slurp(path("k2.svg")) == svg);

  CHECK(run("plot " + path("a.csv") + " --columns nope --out " + path("x.svg")) == 2);
  std::ofstream(path("empty.csv")) << "";
  CHECK(run("plot " + path("empty.csv") + " --columns k_13") == 2);
}
