#include "fermat/cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermat/mf/morphisms.hpp"
#include "fermat/mf/translate_table.hpp"
#include "fermat/orbifold/poincare.hpp"
#include "fermat/orbit/tensor_orbit.hpp"
#include "fermat/qmodular/dilog.hpp"
#include "fermat/qmodular/eisenstein.hpp"
#include "fermat/stability/collection.hpp"
#include "fermat/stability/quiver.hpp"
#include "fermat/verify/acceptance.hpp"

namespace fermat::cli {

using json = nlohmann::ordered_json;

namespace {

int parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty())
    throw std::invalid_argument("config: " + key + " expects an integer, got '" + value + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void validate(const RunConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("n must be >= 2");
  if (cfg.wN < 1 || cfg.xN < 1) throw std::invalid_argument("truncations must be positive");
  if (cfg.format != "tsv" && cfg.format != "json") throw std::invalid_argument("format must be tsv or json");
  if (cfg.normalization != "raw" && cfg.normalization != "shifted")
    throw std::invalid_argument("normalization must be raw or shifted");
}

// Emitted document: TSV text or a JSON object, never both.
struct Document {
  std::string text;
  json data = json::object();
};

std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out;
}

json table_json(const DegreeTable& t) {
  json j = json::object();
  for (const auto& [d, v] : t.entries()) j[std::to_string(d)] = v.get_str();
  return j;
}

json series_json(const HalfSeries& s) {
  json terms = json::object();
  for (const auto& [e, c] : s.terms()) terms[std::to_string(e)] = to_string(c);
  return json{{"trunc", s.trunc()}, {"terms", terms}};
}

Document cmd_mf(const RunConfig& cfg) {
  Document doc;
  const TranslateTable t = per_factor_table(cfg.n);
  const PeriodicityReport report = verify_periodicity(cfg.n);
  std::ostringstream os;
  os << "# per-factor table T(delta,d) = dim Hom^d(E, tau^{-delta} E), n=" << cfg.n << "\n";
  os << "# periodicity twist(n) ~ [2]: " << (report.ok() ? "pass" : "fail") << " ("
     << report.objects_checked << " objects)\n";
  if (cfg.verbose) {
    os << "# convention: tau~ = twist(1), the AR translate tau = twist(-1), so tau^{-delta} = tau~^{delta}\n";
    os << "# wrap: T(delta+n, d) = T(delta, d-2) since twist(n) ~ [2]\n";
  }
  os << "delta\tdegree\tdim\n";
  json rows = json::array();
  for (int delta = -cfg.n + 1; delta <= cfg.n; ++delta) {
    const DegreeTable here = t.at(delta);
    for (const auto& [d, v] : here.entries()) {
      os << delta << "\t" << d << "\t" << v.get_str() << "\n";
      rows.push_back(json{{"delta", delta}, {"degree", d}, {"dim", v.get_str()}});
    }
  }
  doc.text = os.str();
  doc.data = json{{"command", "mf"},
                  {"n", cfg.n},
                  {"convention", "tau~ = twist(1); tau = twist(-1)"},
                  {"periodicity", {{"ok", report.ok()}, {"objects", report.objects_checked},
                                   {"violations", report.violations}}},
                  {"table", rows}};
  return doc;
}

Document cmd_homtable(const RunConfig& cfg, int a, int s, int a2, int s2) {
  Document doc;
  const GradedMF m = mf_make(cfg.n, a, s);
  const GradedMF nn = mf_make(cfg.n, a2, s2);
  const DegreeTable t = mf_hom_table(m, nn);
  std::ostringstream os;
  os << "# Hom^d(" << to_string(m) << ", " << to_string(nn) << ")\n";
  os << "degree\tweight\tdim\n";
  json rows = json::array();
  for (const auto& [key, v] : t.refined()) {
    os << key.first << "\t" << key.second << "\t" << v.get_str() << "\n";
    rows.push_back(json{{"degree", key.first}, {"weight", key.second}, {"dim", v.get_str()}});
  }
  doc.text = os.str();
  doc.data = json{{"command", "homtable"}, {"n", cfg.n}, {"source", to_string(m)},
                  {"target", to_string(nn)}, {"table", rows}};
  return doc;
}

Document cmd_orbit(const RunConfig& cfg) {
  Document doc;
  const OrbitHomTable& t = cached_orbit_table(cfg.n);
  std::ostringstream os;
  os << "# orbit tables Hom^d(t^-D O, O), n=" << cfg.n << "\n";
  os << "offset\tdegree\tdim\n";
  json rows = json::array();
  for (int delta = 0; delta < cfg.n; ++delta) {
    for (const auto& [d, v] : t.offset(delta).entries())
      os << delta << "\t" << d << "\t" << v.get_str() << "\n";
    rows.push_back(json{{"offset", delta}, {"table", table_json(t.offset(delta))}});
  }
  doc.text = os.str();
  doc.data = json{{"command", "orbit"}, {"n", cfg.n}, {"tables", rows}};
  return doc;
}

Document cmd_euler(const RunConfig& cfg) {
  Document doc;
  const auto raw = gram_circulant(cfg.n, PairingNormalization::raw);
  const auto shifted = gram_circulant(cfg.n, PairingNormalization::shifted);
  const auto& primary = cfg.normalization == "raw" ? raw : shifted;
  std::ostringstream os;
  os << "# circulant row (" << cfg.normalization << "): " << join(primary) << "\n";
  os << "offset\tchi_raw\tchi_shifted\n";
  for (int d = 0; d < cfg.n; ++d) os << d << "\t" << raw[d].get_str() << "\t" << shifted[d].get_str() << "\n";
  os << "# k_rank\t" << k_rank(cfg.n).get_str() << "\n";
  doc.text = os.str();
  json jr = json::array(), js = json::array();
  for (const auto& v : raw) jr.push_back(v.get_str());
  for (const auto& v : shifted) js.push_back(v.get_str());
  doc.data = json{{"command", "euler"}, {"n", cfg.n}, {"normalization", cfg.normalization},
                  {"raw", jr}, {"shifted", js}, {"k_rank", k_rank(cfg.n).get_str()}};
  return doc;
}

json quiver_json(const GradedQuiver& q) {
  json arrows = json::array();
  for (const auto& [key, m] : q.arrows)
    arrows.push_back(json{{"source", q.vertices[std::get<0>(key)]},
                          {"target", q.vertices[std::get<1>(key)]},
                          {"degree", std::get<2>(key)},
                          {"multiplicity", m.get_str()}});
  return json{{"vertices", q.vertices}, {"arrows", arrows}};
}

Document cmd_stability(const RunConfig& cfg) {
  Document doc;
  std::ostringstream os;
  json j{{"command", "stability"}, {"n", cfg.n}};

  const StableCollection g = gepner_collection(cfg.n);
  os << "# gepner collection (phase in units of a full turn)\n";
  json entries = json::array();
  for (const auto& o : g.entries()) {
    os << label(g.kind(), o) << "\t" << to_string(o.phase) << "\n";
    entries.push_back(json{{"object", label(g.kind(), o)}, {"phase", to_string(o.phase)}});
  }
  j["gepner"] = entries;

  json quivers = json::object();
  auto emit = [&](const std::string& name, const GradedQuiver& q) {
    os << "# quiver " << name << "\n" << q.to_string();
    quivers[name] = quiver_json(q);
  };
  const std::size_t segment = std::min<std::size_t>(g.size(), 3);
  emit("pair", heart_quiver(g, 0, std::min<std::size_t>(g.size(), 2)));
  if (segment == 3) emit("triple", heart_quiver(g, 0, 3));
  try {
    emit("mutated-pair", heart_quiver(mutate(g, 0), 0, 2));
  } catch (const std::domain_error& e) {
    os << "# mutation unavailable: " << e.what() << "\n";
  }
  if (cfg.n >= 3) emit("large-radius-pair", heart_quiver(large_radius_collection(cfg.n, 0, 1), 0, 2));
  j["quivers"] = quivers;

  const std::vector<StableObject> first(g.entries().begin(), g.entries().begin() + segment);
  const ClusterCheck cluster = is_cluster_collection(StabilityKind::gepner, cfg.n, first);
  os << "# cluster collection (first " << segment << "): " << (cluster.ok ? "true" : "false");
  if (!cluster.ok) os << " (" << cluster.witness << ")";
  os << "\n";
  j["cluster"] = json{{"ok", cluster.ok}, {"witness", cluster.witness}};
  doc.text = os.str();
  doc.data = j;
  return doc;
}

Document cmd_qseries(const RunConfig& cfg, const std::string& what, int m, int k) {
  Document doc;
  std::ostringstream os;
  json j{{"command", "qseries"}, {"what", what}, {"wN", cfg.wN}};
  if (what == "quasimodular") {
    const HalfSeries r = quasimodular_check(cfg.wN);
    const HalfSeries control = quasimodular_negative_control(cfg.wN);
    os << "residual: " << (r.is_zero() ? std::string("0") : r.to_string()) << "\n";
    os << "negative control first nonzero: w^" << control.valuation() << "\n";
    j["residual"] = r.is_zero() ? "0" : r.to_string();
    j["residual_zero"] = r.is_zero();
    j["control_valuation"] = control.valuation();
  } else if (what == "jm") {
    const HalfSeries ext = jm(m, cfg.wN, JmMode::extracted);
    const HalfSeries closed = jm(m, cfg.wN, JmMode::closed);
    os << "exponent\textracted\tclosed\n";
    for (int e = 0; e <= cfg.wN; ++e)
      if (ext.coeff(e) != 0 || closed.coeff(e) != 0)
        os << e << "\t" << to_string(ext.coeff(e)) << "\t" << to_string(closed.coeff(e)) << "\n";
    j["m"] = m;
    j["extracted"] = series_json(ext);
    j["closed"] = series_json(closed);
    j["agree"] = ext == closed;
  } else if (what == "dilog") {
    const BiSeries d = quantum_dilog(cfg.xN, cfg.wN);
    os << "x_power\tw_power\tcoeff\n";
    json rows = json::array();
    for (int xm = 0; xm <= d.xtrunc(); ++xm) {
      for (const auto& [e, c] : d[xm].terms()) os << xm << "\t" << e << "\t" << to_string(c) << "\n";
      rows.push_back(series_json(d[xm]));
    }
    j["xN"] = cfg.xN;
    j["coefficients"] = rows;
  } else if (what == "genfun") {
    const HalfSeries lhs = gen_function(k, cfg.wN);
    const HalfSeries rhs = gen_function_double_sum(k, cfg.wN);
    os << "# k=" << k << " identity " << (lhs == rhs ? "holds" : "FAILS") << "\n";
    os << "exponent\tcoeff\n";
    for (const auto& [e, c] : lhs.terms()) os << e << "\t" << to_string(c) << "\n";
    j["k"] = k;
    j["series"] = series_json(lhs);
    j["identity_holds"] = lhs == rhs;
  } else if (what == "e2") {
    const HalfSeries e2 = eisenstein_e2(cfg.wN);
    os << "q_power\tcoeff\n";
    for (const auto& [e, c] : e2.terms()) os << e << "\t" << to_string(c) << "\n";
    j["series"] = series_json(e2);
  } else {
    throw CLI::ValidationError("qseries", "unknown series '" + what + "'");
  }
  doc.text = os.str();
  doc.data = j;
  return doc;
}

Document cmd_poincare(const RunConfig& cfg) {
  Document doc;
  const auto cmp = compare_literal(cfg.n);
  const Integer chi = cmp.sector_sum.eval(Integer(1));
  const Integer closed = ipow(Integer(cfg.n - 1), cfg.n);
  std::ostringstream os;
  os << "n\tpoincare\teuler_char\tclosed_form\tliteral\tliteral_matches\n";
  os << cfg.n << "\t" << cmp.sector_sum.to_string("q") << "\t" << chi.get_str() << "\t" << closed.get_str()
     << "\t" << cmp.literal.to_string("q") << "\t" << (cmp.matches ? "true" : "false") << "\n";
  doc.text = os.str();
  doc.data = json{{"command", "poincare"},        {"n", cfg.n},
                  {"poincare", cmp.sector_sum.to_string("q")}, {"euler_char", chi.get_str()},
                  {"closed_form", closed.get_str()}, {"literal", cmp.literal.to_string("q")},
                  {"literal_matches", cmp.matches}};
  return doc;
}

Document cmd_verify_all(bool& all_pass) {
  Document doc;
  std::ostringstream os;
  json rows = json::array();
  all_pass = true;
  for (const auto& r : acceptance::run_all()) {
    os << acceptance::format(r) << "\n";
    all_pass = all_pass && r.pass;
    rows.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  doc.text = os.str();
  doc.data = json{{"command", "verify-all"}, {"pass", all_pass}, {"criteria", rows}};
  return doc;
}

}  // namespace

void apply_config_text(const std::string& text, RunConfig& cfg) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config: expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "n") cfg.n = parse_int(key, value);
    else if (key == "wN") cfg.wN = parse_int(key, value);
    else if (key == "xN") cfg.xN = parse_int(key, value);
    else if (key == "format") cfg.format = value;
    else if (key == "out") cfg.out = value;
    else if (key == "normalization") cfg.normalization = value;
    else if (key == "verbose") cfg.verbose = (value == "true" || value == "1");
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;

  // The config file supplies defaults, so it is read before the flags.
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] != "--config") continue;
    std::ifstream f(args[i + 1]);
    if (!f) {
      err << "error: cannot read config file " << args[i + 1] << "\n";
      return bad_arguments;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    try {
      apply_config_text(buf.str(), cfg);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return bad_arguments;
    }
  }

  CLI::App app{"Exact computations for graded matrix factorizations of Fermat polynomials", "fermat"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value file with default settings");
  app.add_option("--n", cfg.n, "potential exponent / number of variables");
  app.add_option("--wN", cfg.wN, "truncation in w = q^{1/2}");
  app.add_option("--xN", cfg.xN, "truncation in x");
  app.add_option("--format", cfg.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--out", cfg.out, "write the document to FILE");
  app.add_option("--normalization", cfg.normalization, "euler pairing sign: raw or shifted")
      ->check(CLI::IsMember({"raw", "shifted"}));
  app.add_flag("--verbose", cfg.verbose);

  auto* mf = app.add_subcommand("mf", "per-factor translate table and periodicity check");
  int a = 1, s = 0, a2 = 1, s2 = 1;
  auto* homtable = app.add_subcommand("homtable", "Hom table between M(a,s) and M(a2,s2)");
  homtable->add_option("--a", a);
  homtable->add_option("--s", s);
  homtable->add_option("--a2", a2);
  homtable->add_option("--s2", s2);
  auto* orbit = app.add_subcommand("orbit", "orbit-category Hom tables");
  auto* euler = app.add_subcommand("euler", "Euler pairing circulant");
  auto* stability = app.add_subcommand("stability", "stable collections and their quivers");
  std::string what = "quasimodular";
  int m = 1, k = -1;
  auto* qseries = app.add_subcommand("qseries", "q-series: dilog, jm, genfun, e2, quasimodular");
  qseries->add_option("what", what)->check(CLI::IsMember({"dilog", "jm", "genfun", "e2", "quasimodular"}));
  qseries->add_option("--m", m)->check(CLI::PositiveNumber);
  qseries->add_option("--k", k);
  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial of Y_n");
  auto* verify_all = app.add_subcommand("verify-all", "run every acceptance criterion");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    validate(cfg);
    if (qseries->parsed() && what == "genfun" && k % 2 == 0)
      throw CLI::ValidationError("--k", "k must be odd");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  }

  Document doc;
  int code = ok;
  try {
    if (mf->parsed()) doc = cmd_mf(cfg);
    else if (homtable->parsed()) doc = cmd_homtable(cfg, a, s, a2, s2);
    else if (orbit->parsed()) doc = cmd_orbit(cfg);
    else if (euler->parsed()) doc = cmd_euler(cfg);
    else if (stability->parsed()) doc = cmd_stability(cfg);
    else if (qseries->parsed()) doc = cmd_qseries(cfg, what, m, k);
    else if (poincare_cmd->parsed()) doc = cmd_poincare(cfg);
    else if (verify_all->parsed()) {
      bool pass = true;
      doc = cmd_verify_all(pass);
      if (!pass) code = verification_failed;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  }

  const std::string rendered = cfg.format == "json" ? doc.data.dump(2) + "\n" : doc.text;
  if (cfg.out.empty()) {
    out << rendered;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return bad_arguments;
    }
    f << rendered;
  }
  return code;
}

}  // namespace fermat::cli
