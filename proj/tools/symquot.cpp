// Command-line front end: symquot analyze <file> [options].

#include "symquot/errors.hpp"
#include "symquot/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum ExitCode { kOk = 0, kSchema = 1, kCapacity = 2, kReconstruction = 3 };

std::vector<symquot::Index> parse_denominators(const std::string& list) {
  std::vector<symquot::Index> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || e < 1)
      throw symquot::SchemaError("option --denominator: expected positive integers separated by commas",
                                 "denominators", 0);
    out.push_back(e);
  }
  if (out.empty())
    throw symquot::SchemaError("option --denominator: expected at least one exponent", "denominators", 0);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series and Gorenstein diagnostics for symplectic quotients of torus and SL2 modules"};
  app.require_subcommand(1);

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze one request document");
  std::string file;
  std::optional<long> degree;
  std::string denominators;
  bool oracle = false;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  bool timing = false;
  analyze->add_option("file", file, "Request document (JSON object)")->required();
  analyze->add_option("--degree", degree, "Truncation degree")->check(CLI::NonNegativeNumber);
  analyze->add_option("--denominator", denominators, "Denominator exponents e1,e2,...");
  analyze->add_flag("--oracle", oracle, "Cross-check against brute-force enumeration");
  analyze->add_option("--seed", seed, "Seed for the randomized Jacobian probe");
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  analyze->add_flag("--timing", timing, "Append wall-clock time to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSchema;
  }

  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot read " << file << "\n";
    return kSchema;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  try {
    symquot::AnalysisRequest request = symquot::parse_request(buffer.str());
    if (degree) request.degree = *degree;
    if (!denominators.empty()) request.denominators = parse_denominators(denominators);
    if (oracle) request.oracle = true;
    if (seed) request.seed = *seed;

    const auto start = std::chrono::steady_clock::now();
    const symquot::AnalysisReport report = symquot::run(request);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    nlohmann::ordered_json doc = symquot::to_document(report);
    if (timing) doc["timing"] = {{"seconds", seconds}};
    std::cout << (format == "machine" ? symquot::render_machine(doc) : symquot::render_text(doc));
    return report.status == symquot::AnalysisStatus::Ok ? kOk : kReconstruction;
  } catch (const symquot::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kSchema;
  } catch (const symquot::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kCapacity;
  } catch (const symquot::PreconditionError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kSchema;
  }
}
