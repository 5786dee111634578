#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermat/cli/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fermat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Just enough of JSON Schema for docs/cli-schema.json: type, const, enum,
// pattern, required, properties, additionalProperties, items, oneOf, $ref.
class SchemaValidator {
 public:
  explicit SchemaValidator(json root) : root_(std::move(root)) {}

  bool validate(const json& doc, std::string& why) const { return check(root_, doc, "$", why); }

 private:
  const json& resolve(const json& schema) const {
    if (!schema.contains("$ref")) return schema;
    const std::string ref = schema["$ref"];
    const std::string prefix = "#/definitions/";
    REQUIRE(ref.rfind(prefix, 0) == 0);
    return root_["definitions"][ref.substr(prefix.size())];
  }

  static bool type_ok(const std::string& type, const json& v) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "integer") return v.is_number_integer();
    if (type == "boolean") return v.is_boolean();
    return false;
  }

  bool check(const json& raw, const json& v, const std::string& path, std::string& why) const {
    const json& s = resolve(raw);
    if (s.contains("oneOf")) {
      int matches = 0;
      for (const auto& branch : s["oneOf"]) {
        std::string ignored;
        if (check(branch, v, path, ignored)) ++matches;
      }
      if (matches != 1) {
        why = path + ": matched " + std::to_string(matches) + " oneOf branches";
        return false;
      }
      return true;
    }
    if (s.contains("type") && !type_ok(s["type"], v)) {
      why = path + ": expected " + s["type"].get<std::string>();
      return false;
    }
    if (s.contains("const") && v != s["const"]) {
      why = path + ": const mismatch";
      return false;
    }
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end()) {
      why = path + ": not in enum";
      return false;
    }
    if (s.contains("pattern") && !std::regex_match(v.get<std::string>(), std::regex(s["pattern"].get<std::string>()))) {
      why = path + ": pattern mismatch for " + v.dump();
      return false;
    }
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& key : s["required"])
          if (!v.contains(key.get<std::string>())) {
            why = path + ": missing " + key.get<std::string>();
            return false;
          }
      for (const auto& [key, value] : v.items()) {
        if (s.contains("properties") && s["properties"].contains(key)) {
          if (!check(s["properties"][key], value, path + "." + key, why)) return false;
        } else if (s.contains("additionalProperties")) {
          if (!check(s["additionalProperties"], value, path + "." + key, why)) return false;
        }
      }
    }
    if (v.is_array() && s.contains("items")) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!check(s["items"], v[i], path + "[" + std::to_string(i) + "]", why)) return false;
    }
    return true;
  }

  json root_;
};

SchemaValidator load_schema() {
  std::ifstream f(std::string(FERMAT_SOURCE_DIR) + "/docs/cli-schema.json");
  REQUIRE(f.good());
  return SchemaValidator(json::parse(f));
}

}  // namespace

TEST_CASE("documented examples") {
  const Result p = invoke({"poincare", "--n", "5"});
  CHECK(p.code == 0);
  CHECK(p.out.find("q^3+21q^2+181q+821") != std::string::npos);

  const Result e = invoke({"euler", "--n", "5"});
  CHECK(e.code == 0);
  CHECK(e.out.find("0,5,-10,10,-5") != std::string::npos);

  const Result q = invoke({"qseries", "quasimodular", "--wN", "50"});
  CHECK(q.code == 0);
  CHECK(q.out.find("residual: 0") != std::string::npos);
}

TEST_CASE("global flags may precede the subcommand") {
  CHECK(invoke({"--n", "5", "euler"}).out == invoke({"euler", "--n", "5"}).out);
}

TEST_CASE("bad arguments exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"orbit", "--n", "1"}).code == 2);
  CHECK(invoke({"orbit", "--n", "three"}).code == 2);
  CHECK(invoke({"orbit", "--format", "xml"}).code == 2);
  CHECK(invoke({"qseries", "quasimodular", "--wN", "0"}).code == 2);
  CHECK(invoke({"qseries", "theta"}).code == 2);
  CHECK(invoke({"qseries", "genfun", "--k", "2"}).code == 2);
  CHECK(invoke({"homtable", "--n", "3", "--a", "3"}).code == 2);
  CHECK(invoke({"euler", "--normalization", "sideways"}).code == 2);
  CHECK(invoke({"euler", "--config", "/nonexistent/fermat.cfg"}).code == 2);
  const Result r = invoke({"orbit", "--n", "1"});
  CHECK(r.out.empty());
  CHECK(!r.err.empty());
}

TEST_CASE("output is byte-stable") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"orbit", "--n", "4"}, {"stability", "--n", "5", "--format", "json"}, {"mf", "--n", "4"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
}

TEST_CASE("no floating point in output") {
  const Result r = invoke({"stability", "--n", "5"});
  CHECK(r.out.find('.') == std::string::npos);
  CHECK(r.out.find("-1/5") != std::string::npos);
}

TEST_CASE("json documents validate against the shipped schema") {
  const SchemaValidator schema = load_schema();
  const std::vector<std::vector<std::string>> runs = {
      {"mf", "--n", "3"},
      {"homtable", "--n", "3", "--a", "1", "--s", "0", "--a2", "1", "--s2", "-1"},
      {"orbit", "--n", "4"},
      {"euler", "--n", "5"},
      {"stability", "--n", "5"},
      {"qseries", "quasimodular", "--wN", "30"},
      {"qseries", "jm", "--m", "3", "--wN", "30"},
      {"qseries", "dilog", "--xN", "3", "--wN", "12"},
      {"qseries", "genfun", "--k", "3", "--wN", "20"},
      {"qseries", "e2", "--wN", "10"},
      {"poincare", "--n", "6"},
  };
  for (auto args : runs) {
    args.push_back("--format");
    args.push_back("json");
    const Result r = invoke(args);
    INFO(args[0]);
    REQUIRE(r.code == 0);
    std::string why;
    CHECK_MESSAGE(schema.validate(json::parse(r.out), why), why);
  }

  // A document from the wrong branch must be rejected.
  std::string why;
  CHECK_FALSE(schema.validate(json{{"command", "euler"}, {"n", 5}}, why));
  CHECK_FALSE(schema.validate(json{{"command", "poincare"}, {"n", 5}, {"poincare", "1"}, {"euler_char", "1.5"},
                                   {"closed_form", "1"}, {"literal", "1"}, {"literal_matches", true}},
                              why));
}

TEST_CASE("verify-all passes and validates") {
  const Result r = invoke({"verify-all", "--format", "json"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["criteria"].size() == 12);
  std::string why;
  CHECK_MESSAGE(load_schema().validate(doc, why), why);
}

TEST_CASE("config file supplies defaults and flags override") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto cfg = dir / "fermat_test.cfg";
  {
    std::ofstream f(cfg);
    f << "# defaults\nn = 4\nformat=json\n\n";
  }
  const Result from_file = invoke({"euler", "--config", cfg.string()});
  CHECK(from_file.code == 0);
  CHECK(json::parse(from_file.out)["n"] == 4);

  const Result overridden = invoke({"euler", "--config", cfg.string(), "--n", "5", "--format", "tsv"});
  CHECK(overridden.out.find("0,5,-10,10,-5") != std::string::npos);

  {
    std::ofstream f(cfg);
    f << "radius=7\n";
  }
  CHECK(invoke({"euler", "--config", cfg.string()}).code == 2);
  std::filesystem::remove(cfg);

  fermat::cli::RunConfig c;
  CHECK_THROWS_AS(fermat::cli::apply_config_text("n=x", c), std::invalid_argument);
  CHECK_THROWS_AS(fermat::cli::apply_config_text("just words", c), std::invalid_argument);
  fermat::cli::apply_config_text("wN=17 # trailing\nxN = 5", c);
  CHECK(c.wN == 17);
  CHECK(c.xN == 5);
}

TEST_CASE("--out writes the document to a file") {
  const auto path = std::filesystem::temp_directory_path() / "fermat_out.tsv";
  const Result r = invoke({"poincare", "--n", "4", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str().find("q^2+13q+67") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("verbose mf reports the convention") {
  CHECK(invoke({"mf", "--n", "3", "--verbose"}).out.find("# convention") != std::string::npos);
  CHECK(invoke({"mf", "--n", "3"}).out.find("# convention") == std::string::npos);
}
