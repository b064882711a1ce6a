#include "helpers.hpp"

#include "schubcell/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace schubcell;

namespace {

std::string data(const std::string& name) { return std::string(SCHUBCELL_TEST_DATA_DIR) + "/" + name; }

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::string& file, std::vector<std::string> command, OutputFormat format = OutputFormat::Human,
                InputMode mode = InputMode::Equations) {
  RunConfig config;
  config.input = file;
  config.command = std::move(command);
  config.format = format;
  config.mode = mode;
  std::ostringstream out, err;
  const int status = run(config, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = std::string(SCHUBCELL_TEST_BINARY_DIR) + "/" + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("cells tnn on the worked example") {
  const auto r = run_cli(data("r5_example.txt"), {"cells", "tnn"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("dim 0: 10\ndim 1: 16\ndim 2: 8\ndim 3: 1\n") != std::string::npos);
}

TEST_CASE("verify exits zero on the identity") {
  const auto path = temp_file("identity.txt", "1 0 0\n0 1 0\n0 0 1\n");
  const auto r = run_cli(path, {"verify"}, OutputFormat::Human, InputMode::Span);
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("homology real reports first homology") {
  const auto r = run_cli(data("plane_three.txt"), {"homology", "real"}, OutputFormat::Json);
  REQUIRE(r.status == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  const auto b = doc["betti"]["real"]["complex"].get<std::vector<int>>();
  REQUIRE(b.size() >= 2);
  CHECK(b[1] >= 1);
  CHECK(doc["schema_version"] == 1);
}

TEST_CASE("structured document") {
  const auto r = run_cli(data("r5_example.txt"), {"export"});
  REQUIRE(r.status == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["ground_set"].size() == 5);
  CHECK(doc["flats"].size() == 13);
  CHECK(doc["acyclic_flats"].size() == 10);
  CHECK(doc["cells"]["tnn"].size() == 35);
  CHECK(doc["flat_lattice_thin"] == false);
  CHECK(doc["betti"]["tnn"]["boundary"] == nlohmann::json::array({1, 0, 1}));
  CHECK(doc["all_pass"] == true);
  CHECK(doc["covector_count"].get<std::size_t>() == doc["covectors"].size());
}

TEST_CASE("output is deterministic") {
  for (auto cmd : std::vector<std::vector<std::string>>{{"covectors"}, {"cells", "real"}, {"export"}}) {
    const auto a = run_cli(data("plane_three.txt"), cmd, OutputFormat::Json);
    const auto b = run_cli(data("plane_three.txt"), cmd, OutputFormat::Json);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("dot output") {
  const auto r = run_cli(data("plane_three.txt"), {"acyclic-flats"}, OutputFormat::Dot);
  CHECK(r.status == kExitOk);
  CHECK(r.out.rfind("digraph", 0) == 0);
}

TEST_CASE("other commands") {
  CHECK(run_cli(data("four_plane.txt"), {"flats"}).out.rfind("flats: 12\n", 0) == 0);
  CHECK(run_cli(data("plane_three.txt"), {"covectors"}).out.rfind("covectors: 13\n", 0) == 0);
  const auto s = run_cli(data("r5_example.txt"), {"shelling"});
  CHECK(s.status == kExitOk);
  CHECK(s.out.rfind("shelling: ", 0) == 0);
  const auto h = run_cli(data("r5_example.txt"), {"homology", "tnn"});
  CHECK(h.out.find("tnn boundary betti (1,0,1)") != std::string::npos);
}

TEST_CASE("input errors exit with status 2") {
  CHECK(run_cli(data("ragged.txt"), {"flats"}).status == kExitInputError);
  CHECK(run_cli(data("missing.txt"), {"flats"}).status == kExitInputError);
  CHECK(run_cli(data("plane_three.txt"), {"cells"}).status == kExitInputError);
  CHECK(run_cli(data("plane_three.txt"), {"frobnicate"}).status == kExitInputError);
  CHECK(run_cli(data("plane_three.txt"), {"flats", "extra"}).status == kExitInputError);
}

TEST_CASE("guardrail names the override flag") {
  const auto path = temp_file("wide.txt", "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n");
  const auto r = run_cli(path, {"flats"});
  CHECK(r.status == kExitInputError);
  CHECK(r.err.find("--allow-large") != std::string::npos);

  RunConfig config;
  config.input = path;
  config.command = {"flats"};
  config.allow_large = true;
  config.mode = InputMode::Span;  // a line, so the override run stays small
  std::ostringstream out, err;
  CHECK(run(config, out, err) == kExitOk);
}
