#pragma once

#include "symquot/sl2.hpp"
#include "symquot/torus.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symquot {

enum class AnalysisKind { Torus, SL2 };

constexpr Index kDefaultTorusDegree = 20;

struct AnalysisRequest {
  AnalysisKind kind = AnalysisKind::Torus;
  WeightMatrix weights;
  SL2Module irreps;
  Index degree = kDefaultTorusDegree;
  std::optional<std::vector<Index>> denominators;
  bool oracle = false;
  std::uint64_t seed = 1;
};

/// Malformed request document; line is 1-based, 0 when unknown.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& what, std::string field, std::size_t line)
      : std::runtime_error(what), field_(std::move(field)), line_(line) {}
  const std::string& field() const { return field_; }
  std::size_t line() const { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

/// Parses one request object. Fields: kind ("torus" | "sl2"), weights (torus) or
/// irreps (sl2), and optional degree, denominators, oracle, seed.
AnalysisRequest parse_request(const std::string& document);

struct OracleCheck {
  std::string name;
  Index degree_bound = 0;
  bool agree = false;
  bool skipped = false;
  std::string detail;
};

enum class AnalysisStatus { Ok, ReconstructionFailed };

struct AnalysisReport {
  AnalysisRequest request;

  std::optional<ReductionTrace> reduction;
  std::optional<TorusLargenessReport> torus_largeness;
  std::optional<ShellDiagnostics> torus_shell;
  std::optional<TorusQuotient> torus_quotient;
  std::optional<Index> generator_count;
  Index generator_degree_bound = 0;
  Index generator_lower_bound = 0;

  std::optional<SL2Classification> classification;
  std::optional<JacobianProbe> probe;
  std::optional<SL2Quotient> sl2_quotient;

  std::optional<HilbertSeries> shell_series;
  std::vector<OracleCheck> oracles;
  std::vector<std::string> caveats;
  AnalysisStatus status = AnalysisStatus::Ok;
  std::string failure;
};

/// Dispatches to the torus or SL2 pipeline. Capacity errors propagate.
AnalysisReport run(const AnalysisRequest& request);

/// Structured form of the report; key order is fixed.
nlohmann::ordered_json to_document(const AnalysisReport& report);

/// Sectioned text rendering of a report document.
std::string render_text(const nlohmann::ordered_json& document);
std::string render_machine(const nlohmann::ordered_json& document);

}  // namespace symquot
