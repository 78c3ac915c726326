#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "metrocross/io.hpp"

using namespace metrocross;

namespace {

RunConfig small_config() {
  RunConfig cfg;
  cfg.channel = ChannelKind::PauliXY;
  cfg.n_uses = 2;
  cfg.strategies = {StrategyKind::AncillaAssisted, StrategyKind::Classical};
  cfg.grid = GridSpec{0.0, 1.0, 0.25};
  cfg.optimizer.n_starts = 8;
  return cfg;
}

// Minimal structural validator for the subset of JSON Schema the shipped
// schema files use: required keys, type tags, numeric bounds, enums.
bool validate_against_schema(const nlohmann::json& doc, const nlohmann::json& schema) {
  if (schema.value("type", "") == "object") {
    if (!doc.is_object()) return false;
    for (const auto& key : schema.value("required", nlohmann::json::array()))
      if (!doc.contains(key.get<std::string>())) return false;
    if (schema.contains("properties")) {
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
        if (!doc.contains(it.key())) continue;
        const auto& v = doc[it.key()];
        const auto& s = it.value();
        const std::string type = s.value("type", "");
        if (type == "string" && !v.is_string()) return false;
        if (type == "integer" && !v.is_number_integer() && !v.is_number_unsigned()) return false;
        if (type == "number" && !v.is_number()) return false;
        if (s.contains("minimum") && v.is_number() &&
            v.get<double>() < s["minimum"].get<double>() - 1e-15)
          return false;
        if (s.contains("maximum") && v.is_number() &&
            v.get<double>() > s["maximum"].get<double>() + 1e-15)
          return false;
        if (s.contains("enum")) {
          bool hit = false;
          for (const auto& e : s["enum"]) hit = hit || e == v;
          if (!hit) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("format_number uses 12 significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(4.0) == "4");
  CHECK(format_number(2.9018908110547) == "2.90189081105");
}

TEST_CASE("grid parsing and points") {
  const GridSpec g = parse_grid("0:1:0.02");
  const auto pts = g.points();
  CHECK(pts.size() == 51);
  CHECK(pts.front() == 0.0);
  CHECK(pts.back() == 1.0);
  for (const auto& p : pts) CHECK(p <= 1.0);

  CHECK_THROWS_AS(parse_grid("1:0:0.1"), ParamOutOfRange);
  CHECK_THROWS_AS(parse_grid("0:1:0"), ParamOutOfRange);
  CHECK_THROWS_AS(parse_grid("nonsense"), ParamOutOfRange);
}

TEST_CASE("sweep rows are ordered and carry the documented columns") {
  const RunConfig cfg = small_config();
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 10);  // 5 grid points x 2 strategies
  CHECK(rows[0].param_value == 0.0);
  CHECK(rows[0].strategy == "ancilla");
  CHECK(rows[1].strategy == "classical");
  CHECK(rows[2].param_value == 0.25);
  CHECK(rows[0].channel == "pauli-xy");
  CHECK(rows[0].param_name == "eta");
  CHECK(!rows[0].bound_value.has_value());  // none for pauli x-y
  REQUIRE(rows[0].classical_ref.has_value());
  CHECK(*rows[0].classical_ref == doctest::Approx(2.0));
  CHECK(rows[0].seed == 42);

  std::ostringstream os;
  write_sweep_csv(rows, os);
  const std::string csv = os.str();
  CHECK(csv.rfind("channel,param_name,param_value,strategy,n_uses,block_qfi,total_qfi,"
                  "bound_value,classical_reference,starts_converged,spread,seed\n",
                  0) == 0);
  // bound column stays empty for pauli x-y
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  std::getline(is, line);
  CHECK(line.find(",,") != std::string::npos);
}

TEST_CASE("sweep output is byte-identical across runs") {
  const RunConfig cfg = small_config();
  std::ostringstream a, b;
  write_sweep_csv(run_sweep(cfg), a);
  write_sweep_csv(run_sweep(cfg), b);
  CHECK(a.str() == b.str());
}

TEST_CASE("sweep JSON mirrors the CSV rows") {
  const RunConfig cfg = small_config();
  std::ostringstream os;
  write_sweep_json(run_sweep(cfg), os);
  const nlohmann::json arr = nlohmann::json::parse(os.str());
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 10);
  CHECK(arr[0]["strategy"] == "ancilla");
  CHECK(arr[0]["bound_value"].is_null());
  CHECK(arr[0]["total_qfi"].is_number());
}

TEST_CASE("empty strategy list is a config error") {
  RunConfig cfg = small_config();
  cfg.strategies.clear();
  CHECK_THROWS_AS(run_sweep(cfg), ParamOutOfRange);
}

TEST_CASE("crossover report validates against the shipped schema") {
  RunConfig cfg;
  cfg.channel = ChannelKind::AmplitudeDamping;
  cfg.n_uses = 2;
  cfg.grid = GridSpec{0.3, 0.7, 0.1};
  cfg.tol = 0.01;
  cfg.optimizer.n_starts = 10;
  const std::string report =
      crossover_report_json(cfg, StrategyKind::Parallel, StrategyKind::AncillaAssisted);
  const nlohmann::json doc = nlohmann::json::parse(report);
  CHECK(std::abs(doc["eta_star"].get<double>() - 0.5) < 0.01);

  std::ifstream schema_file(std::string(METROCROSS_SOURCE_DIR) +
                            "/docs/schema/crossover.schema.json");
  REQUIRE(schema_file.good());
  nlohmann::json schema;
  schema_file >> schema;
  CHECK(validate_against_schema(doc, schema));
}

TEST_CASE("reproduce figB1 with a thinned grid") {
  const std::string dir = std::filesystem::temp_directory_path() / "metrocross_test_figs";
  OptimizerOptions opt;
  opt.n_starts = 6;
  const auto paths = run_reproduce("figB1", dir, opt, 5);
  REQUIRE(paths.size() == 1);
  std::ifstream is(paths[0]);
  REQUIRE(is.good());
  std::string header;
  std::getline(is, header);
  CHECK(header == "t,j_sequential_1,j_noon_half,j_two_probe_opt,j_two_probe_opt_half,j_ancilla");
  int lines = 0;
  for (std::string line; std::getline(is, line);) ++lines;
  CHECK(lines == 5);
  std::filesystem::remove_all(dir);
}

TEST_CASE("unknown figure tag is rejected") {
  CHECK_THROWS_AS(run_reproduce("fig9", ".", OptimizerOptions{}, 3), ParamOutOfRange);
}
