#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "job.hpp"
#include "koszul/errors.hpp"

namespace fs = std::filesystem;
using koszul::cli::JobSpec;

namespace {

struct Overrides {
  std::string command, method, format;
  std::optional<int> maxH, maxDeg;
  std::optional<std::int64_t> characteristic;
  bool forceBounds = false;
};

std::string readAll(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string readFile(const std::string& path) {
  if (path == "-") return readAll(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw koszul::InputError("cannot read " + path);
  return readAll(in);
}

JobSpec loadJob(const std::string& text, const Overrides& o) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw koszul::InputError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw koszul::InputError("job document must be a JSON object");
  if (!o.command.empty()) j["command"] = o.command;
  if (!o.method.empty()) j["method"] = o.method;
  if (!o.format.empty()) j["format"] = o.format;
  if (o.maxH) j["max_h"] = *o.maxH;
  if (o.maxDeg) j["max_deg"] = *o.maxDeg;
  if (o.characteristic) j["characteristic"] = *o.characteristic;
  if (o.forceBounds) j["force_bounds"] = true;
  return koszul::cli::parseJob(j.dump());
}

struct Outcome {
  int code = 0;
  std::string output;
  std::string error;
};

Outcome runOne(const std::string& text, const Overrides& o) {
  Outcome out;
  try {
    JobSpec spec = loadJob(text, o);
    out.output = koszul::cli::render(spec, koszul::cli::runJob(spec));
  } catch (const std::exception& e) {
    out.code = koszul::cli::exitCodeFor(e);
    out.error = e.what();
  }
  return out;
}

int runBatch(const std::string& dir, const Overrides& o) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files)
    jobs.push_back(std::async(std::launch::async, [f, &o] {
      try {
        return runOne(readFile(f.string()), o);
      } catch (const std::exception& e) {
        return Outcome{koszul::cli::exitCodeFor(e), "", e.what()};
      }
    }));
  int worst = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    Outcome r = jobs[i].get();
    std::cout << "== " << files[i].filename().string() << " (exit " << r.code << ")\n";
    if (r.code == 0) std::cout << r.output;
    else std::cout << "error: " << r.error << "\n";
    worst = std::max(worst, r.code);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal resolutions, regularity and linearity defect over S, E and quadratic quotients"};
  std::string input;
  std::string batch;
  Overrides o;
  app.add_option("--input", input, "Job file (JSON); - reads stdin");
  app.add_option("--batch", batch, "Run every *.json job in a directory");
  app.add_option("--command", o.command, "Override the command");
  app.add_option("--max-h", o.maxH, "Homological truncation H");
  app.add_option("--max-deg", o.maxDeg, "Internal degree truncation D (quotient rings)");
  app.add_option("--char", o.characteristic, "Field characteristic");
  app.add_option("--method", o.method, "ld/reg method: direct, bgg or both");
  app.add_option("--format", o.format, "Output format: json or table");
  app.add_flag("--force-bounds", o.forceBounds, "Allow D below the automatic bound");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (input.empty() == batch.empty()) {
    std::cerr << "error: give exactly one of --input or --batch\n";
    return 1;
  }
  if (!batch.empty()) return runBatch(batch, o);
  Outcome r;
  try {
    r = runOne(readFile(input), o);
  } catch (const std::exception& e) {
    r = {koszul::cli::exitCodeFor(e), "", e.what()};
  }
  if (r.code != 0) {
    std::cerr << "error: " << r.error << "\n";
    return r.code;
  }
  std::cout << r.output;
  return 0;
}
