#include "doctest.h"
#include "printers.hpp"

#include "symquot/errors.hpp"
#include "symquot/report.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace symquot;

namespace {

const std::string kData = SYMQUOT_TEST_DATA;
const std::string kCli = SYMQUOT_CLI;

struct Outcome {
  int exit_code = -1;
  std::string out;
};

Outcome invoke(const std::string& args) {
  const std::string command = kCli + " " + args + " 2>/dev/null";
  Outcome result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::multiset<std::string> numeric_tokens(const std::string& text) {
  static const std::regex number("-?[0-9]+");
  std::multiset<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it)
    out.insert(it->str());
  return out;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string(SYMQUOT_TEST_TMP) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("parse torus and sl2 requests") {
  const AnalysisRequest t = parse_request(R"({"kind":"torus","weights":[[1,-1],[0,2]],"oracle":true,"seed":5})");
  CHECK(t.kind == AnalysisKind::Torus);
  CHECK(t.weights == WeightMatrix{{1, -1}, {0, 2}});
  CHECK(t.degree == kDefaultTorusDegree);
  CHECK(t.oracle);
  CHECK(t.seed == 5);
  const AnalysisRequest s = parse_request(R"({"kind":"sl2","irreps":[1,2],"degree":10,"denominators":[2,3]})");
  CHECK(s.kind == AnalysisKind::SL2);
  CHECK(s.irreps == SL2Module{2, 1});
  CHECK(s.degree == 10);
  REQUIRE(s.denominators);
  CHECK(*s.denominators == std::vector<Index>{2, 3});
  CHECK(parse_request(R"({"kind":"sl2","irreps":[1,1]})").degree == kDefaultSL2Degree);
}

TEST_CASE("schema errors identify the field and line") {
  auto error_of = [](const std::string& text) -> SchemaError {
    try {
      parse_request(text);
    } catch (const SchemaError& e) {
      return e;
    }
    FAIL("no schema error");
    return SchemaError("", "", 0);
  };
  const SchemaError ragged = error_of("{\n\"kind\": \"torus\",\n\"weights\": [[1, -1], [2]]\n}");
  CHECK(ragged.field() == "weights");
  CHECK(ragged.line() == 3);
  CHECK(error_of(R"({"kind":"cube","weights":[[1]]})").field() == "kind");
  CHECK(error_of(R"({"weights":[[1]]})").field() == "kind");
  CHECK(error_of(R"({"kind":"torus"})").field() == "weights");
  CHECK(error_of(R"({"kind":"torus","weights":[[1]],"degree":-1})").field() == "degree");
  CHECK(error_of(R"({"kind":"torus","weights":[[1]],"degree":"7"})").field() == "degree");
  CHECK(error_of(R"({"kind":"torus","weights":[[1]],"denominators":[0]})").field() == "denominators");
  CHECK(error_of(R"({"kind":"torus","weights":[[1]],"oracle":1})").field() == "oracle");
  CHECK(error_of(R"({"kind":"torus","weights":[[1]],"seed":-2})").field() == "seed");
  CHECK(error_of(R"({"kind":"torus","weights":[[1]],"colour":1})").field() == "colour");
  CHECK(error_of(R"({"kind":"sl2","irreps":[-1]})").field() == "irreps");
  CHECK(error_of(R"({"kind":"sl2","irreps":[]})").field() == "irreps");
  CHECK(error_of(R"({"kind":"sl2","weights":[[1]]})").field() == "weights");
  const SchemaError syntax = error_of("{\n\"kind\": \"torus\"\n\"weights\": [[1]]\n}");
  CHECK(syntax.line() == 3);
  CHECK(error_of("[1, 2]").line() == 1);
}

TEST_CASE("run reproduces the reference examples") {
  const AnalysisReport sl2 = run(parse_request(R"({"kind":"sl2","irreps":[2,2],"degree":24})"));
  REQUIRE(sl2.sl2_quotient);
  REQUIRE(sl2.sl2_quotient->closed_form);
  CHECK(to_string(*sl2.sl2_quotient->closed_form) == "(1 + 4*t^2 + 4*t^4 + t^6) / (1-t^2)^6");
  CHECK(sl2.status == AnalysisStatus::Ok);

  const AnalysisReport torus = run(parse_request(R"({"kind":"torus","weights":[[1,-1]],"degree":20})"));
  REQUIRE(torus.torus_quotient);
  REQUIRE(torus.torus_quotient->closed_form);
  CHECK(to_string(*torus.torus_quotient->closed_form) == "(1 + t^2) / (1-t^2)^2");
  CHECK(torus.torus_quotient->verdict->graded_gorenstein);

  const AnalysisReport point = run(parse_request(R"({"kind":"torus","weights":[[1]]})"));
  CHECK(point.reduction->reduced.dimension() == 0);
  CHECK(to_string(*point.torus_quotient->closed_form) == "1");
}

TEST_CASE("oracle checks agree") {
  const AnalysisReport torus = run(parse_request(R"({"kind":"torus","weights":[[2,-1,1]],"oracle":true})"));
  REQUIRE(torus.oracles.size() == 1);
  CHECK(torus.oracles[0].agree);
  CHECK_FALSE(torus.oracles[0].skipped);
  const AnalysisReport sl2 = run(parse_request(R"({"kind":"sl2","irreps":[2,1],"oracle":true})"));
  REQUIRE(sl2.oracles.size() == 2);
  CHECK(sl2.oracles[0].agree);
  CHECK(sl2.oracles[1].agree);
}

TEST_CASE("modules outside the Koszul gate get a caveat and no series") {
  const AnalysisReport r = run(parse_request(R"({"kind":"sl2","irreps":[1]})"));
  CHECK_FALSE(r.sl2_quotient);
  CHECK_FALSE(r.caveats.empty());
  CHECK(r.status == AnalysisStatus::Ok);
}

TEST_CASE("cli exit codes") {
  CHECK(invoke("analyze " + kData + "/sl2_2r2.json").exit_code == 0);
  CHECK(invoke("analyze " + kData + "/bad_ragged.json").exit_code == 1);
  CHECK(invoke("analyze " + kData + "/bad_degree.json").exit_code == 1);
  CHECK(invoke("analyze " + kData + "/bad_syntax.json").exit_code == 1);
  CHECK(invoke("analyze " + kData + "/missing.json").exit_code == 1);
  CHECK(invoke("analyze " + kData + "/torus_1_m1.json --format yaml").exit_code == 1);
  CHECK(invoke("analyze " + kData + "/torus_1_m1.json --denominator 2,x").exit_code == 1);

  std::string wide = R"({"kind":"torus","weights":[[)";
  for (int j = 0; j < 17; ++j) wide += (j ? "," : "") + std::string(j % 2 ? "-1" : "1");
  wide += "]]}";
  CHECK(invoke("analyze " + write_temp("wide.json", wide)).exit_code == 2);

  const Outcome failed = invoke("analyze " + kData + "/sl2_3r2_short.json --format machine");
  CHECK(failed.exit_code == 3);
  const auto doc = nlohmann::ordered_json::parse(failed.out);
  CHECK(doc["status"] == "reconstruction_failed");
  CHECK(doc["quotient"]["truncated"].size() == 13);
  CHECK(doc["quotient"]["hilbert"].is_null());
}

TEST_CASE("cli options override the document") {
  const Outcome o = invoke("analyze " + kData + "/sl2_r2_r1.json --degree 20 --denominator 2,2,3,3 --format machine");
  REQUIRE(o.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(o.out);
  CHECK(doc["input"]["degree"] == 20);
  CHECK(doc["quotient"]["hilbert"]["denominator"] == nlohmann::ordered_json::array({2, 2, 3, 3}));
  CHECK(doc["quotient"]["truncated"].size() == 21);
}

TEST_CASE("machine output is deterministic and matches golden files") {
  for (const std::string name : {"sl2_2r2", "torus_1_m1", "torus_rank2", "sl2_2r1"}) {
    CAPTURE(name);
    const std::string args = "analyze " + kData + "/" + name + ".json --format machine";
    const Outcome first = invoke(args);
    const Outcome second = invoke(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out == read_file(kData + "/golden/" + name + ".machine.json"));
  }
}

TEST_CASE("seed changes only the probe evidence") {
  const Outcome a = invoke("analyze " + kData + "/sl2_3r1.json --format machine --seed 3");
  const Outcome b = invoke("analyze " + kData + "/sl2_3r1.json --format machine --seed 3");
  CHECK(a.out == b.out);
  const auto doc = nlohmann::ordered_json::parse(a.out);
  CHECK(doc["input"]["seed"] == 3);
  CHECK(doc["probe"]["shell_rank"] == 3);
}

TEST_CASE("text and machine reports carry the same numbers") {
  for (const std::string name : {"sl2_2r2", "sl2_r2_r1", "torus_1_m1", "torus_rank2", "torus_point", "sl2_r1"}) {
    CAPTURE(name);
    const Outcome text = invoke("analyze " + kData + "/" + name + ".json --format text --oracle");
    const Outcome machine = invoke("analyze " + kData + "/" + name + ".json --format machine --oracle");
    CHECK(text.exit_code == machine.exit_code);
    CHECK(numeric_tokens(text.out) == numeric_tokens(machine.out));
    if (name != "sl2_r1") CHECK(text.out.find(" / ") != std::string::npos);
  }
}

TEST_CASE("timing is reported only on request") {
  const Outcome plain = invoke("analyze " + kData + "/torus_1_m1.json --format machine");
  const Outcome timed = invoke("analyze " + kData + "/torus_1_m1.json --format machine --timing");
  CHECK_FALSE(nlohmann::ordered_json::parse(plain.out).contains("timing"));
  CHECK(nlohmann::ordered_json::parse(timed.out)["timing"]["seconds"].is_number());
}
