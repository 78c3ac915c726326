#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

// End-to-end checks against the installed binary: exit codes, file outputs,
// determinism of emitted bytes.

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "metrocross_cli_test") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args) {
  const std::string cmd = std::string(METROCROSS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("sweep writes a deterministic CSV and exits 0") {
  TempDir dir;
  const fs::path out1 = dir.path / "s1.csv";
  const fs::path out2 = dir.path / "s2.csv";
  const std::string base = "sweep --channel pauli-xy --n 2 --strategies ancilla,classical "
                           "--grid 0:1:0.25 --starts 8 --seed 42 --out ";
  CHECK(run(base + out1.string()) == 0);
  CHECK(run(base + out2.string()) == 0);
  const std::string a = slurp(out1);
  CHECK(!a.empty());
  CHECK(a == slurp(out2));
  CHECK(a.rfind("channel,", 0) == 0);
}

TEST_CASE("sweep honors a JSON config file with flag overrides") {
  TempDir dir;
  const fs::path cfg_path = dir.path / "cfg.json";
  {
    std::ofstream os(cfg_path);
    os << R"({"channel":"pauli-xy","n":2,"strategies":["classical"],)"
       << R"("grid":"0:1:0.5","starts":4,"format":"json"})";
  }
  const fs::path out = dir.path / "sweep.json";
  CHECK(run("sweep --config " + cfg_path.string() + " --out " + out.string()) == 0);
  const nlohmann::json doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 3);
  CHECK(doc[0]["strategy"] == "classical");
  CHECK(doc[0]["channel"] == "pauli-xy");
}

TEST_CASE("config errors exit 2") {
  CHECK(run("sweep --channel pauli-xy --n 2 --strategies '' --grid 0:1:0.5") == 2);
  CHECK(run("sweep --channel bogus --n 2 --strategies classical --grid 0:1:0.5") == 2);
  CHECK(run("sweep --channel pauli-xy --n 3 --strategies intermediate --grid 0:1:0.5") == 2);
  CHECK(run("reproduce fig9") == 2);
}

TEST_CASE("crossover reports amplitude-damping parallel vs ancilla near 0.5") {
  TempDir dir;
  const fs::path out = dir.path / "cross.json";
  const int code = run("crossover --channel amplitude-damping --n 2 "
                       "--strategies parallel,ancilla --grid 0.3:0.7:0.1 --tol 0.01 "
                       "--starts 10 --out " + out.string());
  CHECK(code == 0);
  const nlohmann::json doc = nlohmann::json::parse(slurp(out));
  CHECK(std::abs(doc["eta_star"].get<double>() - 0.5) < 0.01);
  CHECK(doc["bracket_width"].get<double>() <= 0.01 + 1e-12);
}

TEST_CASE("crossover without a sign change exits 4") {
  CHECK(run("crossover --channel pauli-xy --n 2 --strategies classical,ancilla "
            "--grid 0.2:0.8:0.3 --starts 6") == 4);
}

TEST_CASE("surface subcommand emits the grid table") {
  TempDir dir;
  const fs::path out = dir.path / "surf.csv";
  CHECK(run("surface --kappa-points 3 --eta-points 3 --starts 6 --out " + out.string()) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("kappa,eta_par,eta_perp,", 0) == 0);
  int lines = -1;
  for (std::size_t pos = 0; pos != std::string::npos; pos = csv.find('\n', pos + 1)) ++lines;
  CHECK(lines == 9);
}

TEST_CASE("reproduce emits figure data files") {
  TempDir dir;
  CHECK(run("reproduce figB1 --points 4 --starts 6 --out " + dir.path.string()) == 0);
  CHECK(fs::exists(dir.path / "figB1.csv"));
}
