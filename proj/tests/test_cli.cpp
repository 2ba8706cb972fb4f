#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "job.hpp"
#include "koszul/errors.hpp"

using namespace koszul;
using namespace koszul::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

int runCli(const std::string& args) {
  const std::string cmd = std::string(KOSZUL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path writeTemp(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / ("koszul_cli_test_" + name + ".json");
  std::ofstream(p) << text;
  return p;
}

const char* kSocleJob =
    R"({"ring":{"kind":"exterior","vars":["y1","y2"]},"module":{"row_degrees":[0],"matrix":[["y1*y2"]]},"command":"ld"})";

testing::Rng& rng() {
  static testing::Rng r(503);
  return r;
}

std::string randomTerm(testing::Rng& r, const std::vector<std::string>& vars, int degree) {
  std::string out = std::to_string(r.uniform(1, 50));
  for (int k = 0; k < degree; ++k) out += "*" + vars[static_cast<std::size_t>(r.uniform(0, static_cast<int>(vars.size()) - 1))];
  return out;
}

JobSpec randomJob(testing::Rng& r) {
  JobSpec spec;
  const bool exterior = r.coin();
  const int n = r.uniform(1, 4);
  spec.ring.kind = exterior ? "exterior" : "polynomial";
  for (int i = 1; i <= n; ++i) spec.ring.vars.push_back((exterior ? "y" : "x") + std::to_string(i));
  ModuleSpec m;
  const int rows = r.uniform(1, 2);
  const int cols = r.uniform(0, 3);
  for (int i = 0; i < rows; ++i) m.rowDegrees.push_back(r.uniform(0, 1));
  std::vector<int> colDegs;
  for (int c = 0; c < cols; ++c) colDegs.push_back(2 + r.uniform(0, 1));
  m.colDegrees = colDegs;
  m.matrix.assign(static_cast<std::size_t>(rows), std::vector<std::string>(static_cast<std::size_t>(cols), "0"));
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) {
      const int d = colDegs[static_cast<std::size_t>(c)] - m.rowDegrees[static_cast<std::size_t>(i)];
      if (d >= 0 && (!exterior || d <= n) && r.coin()) m.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = randomTerm(r, spec.ring.vars, d);
    }
  spec.module = m;
  const char* commands[] = {"betti", "reg", "ld", "componentwise-linear"};
  spec.command = commands[r.uniform(0, 3)];
  if (r.coin()) spec.maxH = r.uniform(1, 6);
  spec.method = r.coin() ? "direct" : "both";
  spec.format = r.coin() ? "json" : "table";
  spec.characteristic = r.coin() ? 32003 : 101;
  return spec;
}

}  // namespace

TEST_CASE("parseJob on the documented example") {
  JobSpec spec = parseJob(kSocleJob);
  CHECK(spec.ring.kind == "exterior");
  CHECK(spec.ring.vars == std::vector<std::string>{"y1", "y2"});
  REQUIRE(spec.module.has_value());
  CHECK(spec.module->rowDegrees == std::vector<int>{0});
  CHECK(spec.command == "ld");
  CHECK(spec.method == "direct");
  CHECK(spec.characteristic == 32003);
}

TEST_CASE("element parsing") {
  RingPtr e = testing::extRing(2);
  RingElem a = parseElement("y2*y1", e);
  RingElem b = parseElement("-y1*y2", e);
  CHECK(a == b);
  CHECK(parseElement("y1*y1", e).isZero());

  RingPtr s = testing::polyRing(2);
  CHECK_THROWS_AS(parseElement("x1 + x2^2", s), InputError);
  CHECK_THROWS_AS(parseElement("x1 + z", s), InputError);
  CHECK_THROWS_AS(parseElement("x1 +* x2", s), InputError);
  CHECK(parseElement("3*x1^2 - x1*x2 + 2x2^2", s) == parseElement("2*x2*x2 + 3*x1*x1 - x2*x1", s));
  CHECK(parseElement("32004*x1", s) == parseElement("x1", s));
  try {
    parseElement("x1 + x2 $", s);
    FAIL("expected an error");
  } catch (const InputError& err) {
    CHECK(std::string(err.what()).find("8") != std::string::npos);
  }
}

TEST_CASE("job validation") {
  CHECK_THROWS_AS(parseJob("{not json"), InputError);
  CHECK_THROWS_AS(
      parseJob(R"({"characteristic":32004,"ring":{"kind":"polynomial","vars":["x"]},"module":{"row_degrees":[0],"matrix":[["x"]]},"command":"betti"})"),
      InputError);
  CHECK_THROWS_AS(parseJob(R"({"ring":{"kind":"polynomial","vars":["x"]},"module":{"row_degrees":[0],"matrix":[["x"]]},"command":"frobnicate"})"),
                  InputError);
  CHECK_THROWS_AS(
      parseJob(R"({"ring":{"kind":"polynomial","vars":["x"]},"module":{"row_degrees":[0],"matrix":[["x"]]},"command":"betti","max_h":0})"),
      InputError);
  CHECK_THROWS_AS(parseJob(R"({"ring":{"kind":"polynomial","vars":["x1","x2"]},"module":{"row_degrees":[0],"matrix":[["x1 + x2^2"]]},"command":"betti"})"),
                  InputError);
}

TEST_CASE("parse, serialize, parse is the identity") {
  for (int trial = 0; trial < 100; ++trial) {
    JobSpec spec = randomJob(rng());
    const std::string text = serializeJob(spec);
    JobSpec again = parseJob(text);
    CHECK(again == spec);
    CHECK(serializeJob(again) == text);
  }
  JobSpec example = parseJob(kSocleJob);
  CHECK(parseJob(serializeJob(example)) == example);
}

TEST_CASE("reports are deterministic") {
  for (int trial = 0; trial < 20; ++trial) {
    JobSpec spec = randomJob(rng());
    spec.maxH = std::min(spec.maxH.value_or(3), 3);
    const std::string a = render(spec, runJob(spec));
    const std::string b = render(spec, runJob(parseJob(serializeJob(spec))));
    CHECK(a == b);
  }
}

TEST_CASE("golden reports") {
  int count = 0;
  for (const auto& entry : fs::directory_iterator(KOSZUL_GOLDEN_DIR)) {
    const std::string name = entry.path().filename().string();
    const std::string suffix = ".job.json";
    if (name.size() <= suffix.size() || name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) continue;
    const std::string stem = name.substr(0, name.size() - suffix.size());
    CAPTURE(stem);
    JobSpec spec = parseJob(slurp(entry.path()));
    const std::string got = render(spec, runJob(spec));
    CHECK(trimmed(got) == trimmed(slurp(entry.path().parent_path() / (stem + ".expected.json"))));
    ++count;
  }
  CHECK(count >= 20);
}

TEST_CASE("the ld example reports agreement of both methods") {
  JobSpec spec = parseJob(kSocleJob);
  spec.method = "both";
  Report r = runJob(spec);
  CHECK(r.result["ld"] == 1);
  CHECK(r.result["certified"] == true);
  CHECK(r.result["methods_agree"] == true);
  nlohmann::json full = nlohmann::json::parse(reportJson(spec, r));
  CHECK(full["version"] == kReportVersion);
  CHECK(full["inputs_hash"] == inputsHash(spec));
  CHECK(full["inputs_hash"].get<std::string>().size() == 16);
}

TEST_CASE("table format prints Betti tables by strand") {
  JobSpec spec = parseJob(
      R"({"ring":{"kind":"polynomial","vars":["x1","x2"]},"module":{"row_degrees":[0],"matrix":[["x1^2","x1*x2"]]},"command":"betti","format":"table"})");
  const std::string out = render(spec, runJob(spec));
  CHECK(out.find("0:") != std::string::npos);
  CHECK(out.find("1:") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(runCli("--input " + writeTemp("ok", kSocleJob).string()) == 0);
  CHECK(runCli("--input " + writeTemp("syntax", "{").string()) == 1);
  CHECK(runCli("--input " + writeTemp("inhom", R"({"ring":{"kind":"polynomial","vars":["x1","x2"]},"module":{"row_degrees":[0],"matrix":[["x1 + x2^2"]]},"command":"betti"})").string()) == 1);
  CHECK(runCli("--input /nonexistent/job.json") == 1);

  const fs::path quotient = writeTemp(
      "bound", R"({"ring":{"kind":"quotient","vars":["x","y"],"relations":["x^2","y^2"]},"module":{"row_degrees":[0],"matrix":[["x*y"]]},"command":"betti","max_h":4,"max_deg":2})");
  CHECK(runCli("--input " + quotient.string()) == 2);
  CHECK(runCli("--input " + quotient.string() + " --force-bounds") == 0);
  CHECK(runCli("--input " + writeTemp("override", kSocleJob).string() + " --method both --max-h 5 --format table") == 0);
  CHECK(runCli("--input " + writeTemp("badmethod", kSocleJob).string() + " --method sideways") != 0);
}
