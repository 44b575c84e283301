#include "symquot/report.hpp"

#include "symquot/errors.hpp"
#include "symquot/oracles.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace symquot {

using Json = nlohmann::ordered_json;

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

/// Line of the first occurrence of "field" as a key, 0 if absent.
std::size_t line_of_field(const std::string& text, const std::string& field) {
  const std::size_t pos = text.find("\"" + field + "\"");
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

class RequestParser {
 public:
  explicit RequestParser(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    const std::size_t line = line_of_field(text_, field);
    std::string what = "field '" + field + "': " + message;
    if (line > 0) what = "line " + std::to_string(line) + ": " + what;
    throw SchemaError(what, field, line);
  }

  long integer(const Json& value, const std::string& field, long lo, long hi) const {
    if (!value.is_number_integer()) fail(field, "expected an integer");
    if (value.is_number_unsigned() && value.get<std::uint64_t>() > static_cast<std::uint64_t>(hi))
      fail(field, "integer out of range");
    const long v = value.get<long>();
    if (v < lo || v > hi) fail(field, "integer out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
  }

  AnalysisRequest parse() const {
    Json doc;
    try {
      doc = Json::parse(text_);
    } catch (const nlohmann::json::parse_error& e) {
      const std::size_t line = line_of_offset(text_, e.byte == 0 ? 0 : e.byte - 1);
      throw SchemaError("line " + std::to_string(line) + ": malformed document: " + e.what(), "", line);
    }
    if (!doc.is_object()) throw SchemaError("line 1: request must be an object", "", 1);

    static const std::set<std::string> known{"kind", "weights", "irreps", "degree", "denominators", "oracle", "seed"};
    for (const auto& [key, value] : doc.items())
      if (!known.count(key)) fail(key, "unknown field");

    AnalysisRequest request;
    if (!doc.contains("kind") || !doc["kind"].is_string()) fail("kind", "expected \"torus\" or \"sl2\"");
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "torus") {
      request.kind = AnalysisKind::Torus;
      if (doc.contains("irreps")) fail("irreps", "not allowed for kind \"torus\"");
      request.weights = parse_weights(doc);
      request.degree = kDefaultTorusDegree;
    } else if (kind == "sl2") {
      request.kind = AnalysisKind::SL2;
      if (doc.contains("weights")) fail("weights", "not allowed for kind \"sl2\"");
      request.irreps = parse_irreps(doc);
      request.degree = kDefaultSL2Degree;
    } else {
      fail("kind", "expected \"torus\" or \"sl2\"");
    }

    if (doc.contains("degree")) request.degree = integer(doc["degree"], "degree", 0, 100000);
    if (doc.contains("denominators")) {
      const Json& d = doc["denominators"];
      if (!d.is_array()) fail("denominators", "expected an array of positive integers");
      std::vector<Index> den;
      for (const Json& e : d) den.push_back(integer(e, "denominators", 1, 100000));
      request.denominators = den;
    }
    if (doc.contains("oracle")) {
      if (!doc["oracle"].is_boolean()) fail("oracle", "expected true or false");
      request.oracle = doc["oracle"].get<bool>();
    }
    if (doc.contains("seed")) {
      if (!doc["seed"].is_number_integer() || (!doc["seed"].is_number_unsigned() && doc["seed"].get<long>() < 0))
        fail("seed", "expected a non-negative integer");
      request.seed = doc["seed"].get<std::uint64_t>();
    }
    return request;
  }

 private:
  WeightMatrix parse_weights(const Json& doc) const {
    if (!doc.contains("weights")) fail("weights", "required for kind \"torus\"");
    const Json& w = doc["weights"];
    if (!w.is_array() || w.empty()) fail("weights", "expected a nonempty array of integer rows");
    std::size_t cols = 0;
    for (const Json& row : w) {
      if (!row.is_array() || row.empty()) fail("weights", "every row must be a nonempty array of integers");
      if (cols == 0) cols = row.size();
      if (row.size() != cols) fail("weights", "rows have different lengths");
    }
    IntegerMatrix m(static_cast<Index>(w.size()), static_cast<Index>(cols));
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(static_cast<Index>(i), static_cast<Index>(j)) =
            Integer(integer(w[i][j], "weights", -1000000, 1000000));
    return WeightMatrix(std::move(m));
  }

  SL2Module parse_irreps(const Json& doc) const {
    if (!doc.contains("irreps")) fail("irreps", "required for kind \"sl2\"");
    const Json& r = doc["irreps"];
    if (!r.is_array() || r.empty()) fail("irreps", "expected a nonempty array of non-negative integers");
    std::vector<Index> labels;
    for (const Json& d : r) labels.push_back(integer(d, "irreps", 0, 64));
    return SL2Module(labels);
  }

  const std::string& text_;
};

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Json series_json(const TruncatedSeries& s) {
  Json out = Json::array();
  for (Index k = 0; k <= s.bound(); ++k) out.push_back(integer_json(s[k]));
  return out;
}

Json polynomial_json(const Polynomial<Integer>& p) {
  Json out = Json::array();
  for (Index k = 0; k <= p.degree(); ++k) out.push_back(integer_json(p.coefficient(k)));
  return out;
}

Json matrix_json(const IntegerMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json hilbert_json(const HilbertSeries& h) {
  Json out = Json::object();
  out["series"] = to_string(h);
  out["numerator"] = polynomial_json(h.numerator());
  out["denominator"] = h.denominator();
  out["dimension"] = h.dimension();
  out["a_invariant"] = h.a_invariant();
  return out;
}

Json verdict_json(const std::optional<GorensteinVerdict>& v) {
  if (!v) return nullptr;
  Json out = Json::object();
  out["dimension"] = v->dimension;
  out["a_invariant"] = v->a_invariant ? Json(*v->a_invariant) : Json(nullptr);
  out["functional_equation"] = v->functional_equation_holds;
  out["graded_gorenstein"] = v->graded_gorenstein;
  out["cohen_macaulay_caveat"] = v->cohen_macaulay_caveat;
  return out;
}

Json optional_hilbert(const std::optional<HilbertSeries>& h) { return h ? hilbert_json(*h) : Json(nullptr); }

std::string status_name(AnalysisStatus s) { return s == AnalysisStatus::Ok ? "ok" : "reconstruction_failed"; }

void run_torus(AnalysisReport& report) {
  const AnalysisRequest& req = report.request;
  const WeightMatrix& a = req.weights;
  report.torus_largeness = largeness_report(a);
  report.torus_shell = shell_diagnostics(a);
  if (report.torus_largeness->max_k_modular >= 0) report.shell_series = shell_hilbert(a);
  for (const std::string& c : report.torus_shell->caveats) report.caveats.push_back("shell: " + c);

  QuotientOptions options;
  options.denominators = req.denominators;
  TorusQuotient q = quotient_series(a, req.degree, options);
  report.reduction = q.reduction;
  if (!q.closed_form) {
    report.status = AnalysisStatus::ReconstructionFailed;
    report.failure = q.failure;
  }
  report.torus_quotient = std::move(q);

  const WeightMatrix& reduced = report.reduction->reduced;
  report.generator_lower_bound = 3 * (reduced.dimension() - reduced.torus_rank());
  report.generator_degree_bound = std::min<Index>(req.degree, 16);
  report.generator_count = static_cast<Index>(minimal_generators(reduced, report.generator_degree_bound).size());

  if (req.oracle) {
    OracleCheck check{"invariant series vs monomial enumeration", std::min<Index>(req.degree, 10), false, false, ""};
    if (a.dimension() > 3) {
      check.skipped = true;
      check.detail = "monomial enumeration runs for at most 3 coordinates";
    } else {
      const TruncatedSeries dp = invariant_series_dp(a, check.degree_bound);
      const TruncatedSeries brute = brute_force_invariant_series(a, check.degree_bound);
      check.agree = dp == brute;
      check.detail = to_string(brute);
    }
    report.oracles.push_back(check);
  }
}

void run_sl2(AnalysisReport& report) {
  const AnalysisRequest& req = report.request;
  const SL2Module& v = req.irreps;
  const SL2Module core = v.nontrivial_part();
  const Index m = v.trivial_count();

  bool koszul_applies = true;
  if (!core.is_zero()) {
    report.classification = classify_largeness(core);
    report.probe = jacobian_rank_probe(core, SL2QuotientOptions{}.probe_trials, req.seed);
    koszul_applies = report.classification->zero_modular;
  }
  if (koszul_applies) {
    Polynomial<Integer> shell_numerator = core.is_zero() ? Polynomial<Integer>::constant(1)
                                                         : pow(Polynomial<Integer>::one_minus_power(2), 3);
    report.shell_series = HilbertSeries(shell_numerator, std::vector<Index>(2 * (core.dimension() + m), 1));

    SL2QuotientOptions options;
    options.denominators = req.denominators;
    options.seed = req.seed;
    SL2Quotient q = koszul_quotient_series(v, req.degree, options);
    for (const std::string& c : q.caveats) report.caveats.push_back(c);
    if (!q.closed_form) {
      report.status = AnalysisStatus::ReconstructionFailed;
      report.failure = q.failure;
    }
    report.sl2_quotient = std::move(q);
  } else {
    report.caveats.push_back("moment components of " + to_string(core) +
                             " are not a regular sequence; the Koszul sum does not apply and no quotient series "
                             "is computed");
  }

  if (req.oracle) {
    const Index bound = std::min<Index>(req.degree, 4);
    const ABSeries ab = ab_series(v, bound);
    const TruncatedSeries a = brute_force_sl2_multiplicities(v, 0, bound);
    const TruncatedSeries b = brute_force_sl2_multiplicities(v, 2, bound);
    report.oracles.push_back({"trivial multiplicities vs highest-weight count", bound, ab.a == a, false, to_string(a)});
    report.oracles.push_back({"adjoint multiplicities vs highest-weight count", bound, ab.b == b, false, to_string(b)});
  }
}

std::string scalar_text(const Json& v) {
  if (v.is_null() || (v.is_string() && v.get<std::string>().empty()) || (v.is_array() && v.empty())) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

AnalysisRequest parse_request(const std::string& document) { return RequestParser(document).parse(); }

AnalysisReport run(const AnalysisRequest& request) {
  if (request.degree < 0) throw PreconditionError("degree must be non-negative");
  AnalysisReport report;
  report.request = request;
  if (request.kind == AnalysisKind::Torus)
    run_torus(report);
  else
    run_sl2(report);
  return report;
}

Json to_document(const AnalysisReport& report) {
  const AnalysisRequest& req = report.request;
  Json doc = Json::object();
  doc["kind"] = req.kind == AnalysisKind::Torus ? "torus" : "sl2";

  Json input = Json::object();
  if (req.kind == AnalysisKind::Torus)
    input["weights"] = matrix_json(req.weights.entries());
  else {
    input["irreps"] = req.irreps.irreps();
    input["module"] = to_string(req.irreps);
  }
  input["degree"] = req.degree;
  input["denominators"] = req.denominators ? Json(*req.denominators) : Json(nullptr);
  input["oracle"] = req.oracle;
  input["seed"] = req.seed;
  doc["input"] = input;

  if (req.kind == AnalysisKind::Torus) {
    const ReductionTrace& r = *report.reduction;
    Json red = Json::object();
    red["kept_columns"] = r.kept_columns;
    red["trivial_columns"] = r.trivial_columns;
    red["reduced_weights"] = matrix_json(r.reduced.entries());
    red["reduced_rank"] = r.reduced.torus_rank();
    red["reduced_dimension"] = r.reduced.dimension();
    red["empty"] = r.reduced.dimension() == 0;
    doc["reduction"] = red;

    const TorusLargenessReport& l = *report.torus_largeness;
    Json lg = Json::object();
    lg["faithful_up_to_finite"] = l.faithful_up_to_finite;
    lg["finite_kernel_order"] = l.finite_kernel_order ? integer_json(*l.finite_kernel_order) : Json(nullptr);
    lg["stable"] = l.stable;
    lg["fpig"] = l.fpig;
    lg["max_k_modular"] = l.max_k_modular;
    lg["one_large"] = l.one_large;
    lg["dimension_bound"] = l.dim_bound_ok;
    Json strata = Json::array();
    for (const IsotropyStratum& s : l.strata)
      strata.push_back(Json{{"isotropy_dimension", s.isotropy_dimension}, {"dimension", s.dimension}});
    lg["strata"] = strata;
    doc["largeness"] = lg;

    const ShellDiagnostics& s = *report.torus_shell;
    Json sh = Json::object();
    sh["hilbert"] = optional_hilbert(report.shell_series);
    sh["complete_intersection"] = s.complete_intersection;
    sh["dimension"] = s.shell_dimension;
    sh["singular_dimension"] = s.singular_dimension;
    sh["a_invariant"] = s.a_invariant ? Json(s.a_invariant->value) : Json(nullptr);
    sh["normal"] = to_string(s.normal);
    sh["rational_singularities"] = to_string(s.rational_singularities);
    doc["shell"] = sh;

    const TorusQuotient& q = *report.torus_quotient;
    Json qu = Json::object();
    qu["truncated"] = series_json(q.truncated);
    qu["hilbert"] = optional_hilbert(q.closed_form);
    qu["source"] = to_string(q.source);
    doc["quotient"] = qu;
    doc["gorenstein"] = verdict_json(q.verdict);

    Json gens = Json::object();
    gens["degree_bound"] = report.generator_degree_bound;
    gens["count"] = report.generator_count ? Json(*report.generator_count) : Json(nullptr);
    gens["lower_bound"] = report.generator_lower_bound;
    doc["generators"] = gens;
  } else {
    Json cl = Json::object();
    if (report.classification) {
      cl["two_large"] = report.classification->two_large;
      cl["one_large"] = report.classification->one_large;
      cl["orbifold"] = report.classification->orbifold;
      cl["zero_modular"] = report.classification->zero_modular;
    }
    doc["classification"] = report.classification ? cl : Json(nullptr);

    if (report.probe) {
      Json pr = Json::object();
      pr["generic_rank"] = report.probe->generic_rank;
      pr["shell_rank"] = report.probe->shell_rank;
      pr["shell_dimension_estimate"] = report.probe->shell_dimension_estimate;
      pr["probabilistic"] = report.probe->probabilistic;
      if (report.sl2_quotient) pr["gate_evidence"] = report.sl2_quotient->gate_evidence;
      doc["probe"] = pr;
    } else {
      doc["probe"] = nullptr;
    }

    Json sh = Json::object();
    sh["hilbert"] = optional_hilbert(report.shell_series);
    doc["shell"] = sh;

    if (report.sl2_quotient) {
      const SL2Quotient& q = *report.sl2_quotient;
      Json qu = Json::object();
      qu["truncated"] = series_json(q.truncated);
      qu["hilbert"] = optional_hilbert(q.closed_form);
      qu["denominator_supplied"] = q.denominator_supplied;
      doc["quotient"] = qu;
      doc["gorenstein"] = verdict_json(q.verdict);
    } else {
      doc["quotient"] = nullptr;
      doc["gorenstein"] = nullptr;
    }
  }

  Json oracles = Json::array();
  for (const OracleCheck& c : report.oracles) {
    Json o = Json::object();
    o["name"] = c.name;
    o["degree_bound"] = c.degree_bound;
    o["status"] = c.skipped ? "skipped" : (c.agree ? "agree" : "disagree");
    o["detail"] = c.detail;
    oracles.push_back(o);
  }
  doc["oracles"] = oracles;
  doc["caveats"] = report.caveats;
  doc["status"] = status_name(report.status);
  doc["failure"] = report.failure;
  return doc;
}

std::string render_machine(const Json& document) { return document.dump(2) + "\n"; }

std::string render_text(const Json& document) {
  std::ostringstream out;
  for (const auto& [key, value] : document.items()) {
    if (value.is_object()) {
      out << "== " << key << " ==\n";
      for (const auto& [field, entry] : value.items()) {
        if (entry.is_object()) {
          out << field << ":\n";
          for (const auto& [sub, leaf] : entry.items()) out << "  " << sub << ": " << scalar_text(leaf) << "\n";
        } else {
          out << field << ": " << scalar_text(entry) << "\n";
        }
      }
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << "== " << key << " ==\n";
      for (const Json& item : value) {
        bool first = true;
        for (const auto& [field, entry] : item.items()) {
          out << (first ? "- " : "  ") << field << ": " << scalar_text(entry) << "\n";
          first = false;
        }
      }
    } else if (value.is_array() && !value.empty() && value.front().is_string()) {
      out << "== " << key << " ==\n";
      for (const Json& item : value) out << "- " << item.get<std::string>() << "\n";
    } else {
      out << "== " << key << " ==\n" << scalar_text(value) << "\n";
    }
  }
  return out.str();
}

}  // namespace symquot
