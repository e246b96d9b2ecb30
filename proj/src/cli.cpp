#include "sl2vir/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sl2vir/error.hpp"
#include "sl2vir/json_io.hpp"
#include "sl2vir/modules.hpp"
#include "sl2vir/verify.hpp"

namespace sl2vir {

int default_depth() {
  if (const char* env = std::getenv("SL2VIR_DEPTH")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 64) return static_cast<int>(v);
  }
  return 6;
}

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidParameter, what); }

std::string strip(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  return s;
}

/// Splits `2*e-(1/2)*h+f` into signed (coefficient, atom) terms.
std::vector<std::pair<Scalar, std::string>> linear_terms(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) invalid("empty Lie algebra element");
  std::vector<std::string> pieces;
  int level = 0;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++level;
    if (ch == ')') --level;
    bool sign = (ch == '+' || ch == '-') && level == 0 && i > 0 && s[i - 1] != '_' && s[i - 1] != '*' &&
                s[i - 1] != '/';
    if (sign) {
      pieces.push_back(cur);
      cur.clear();
    }
    cur.push_back(ch);
  }
  pieces.push_back(cur);
  std::vector<std::pair<Scalar, std::string>> out;
  for (auto p : pieces) {
    Scalar sign(1);
    if (!p.empty() && (p[0] == '+' || p[0] == '-')) {
      if (p[0] == '-') sign = Scalar(-1);
      p.erase(0, 1);
    }
    auto star = p.rfind('*');
    Scalar coef(1);
    std::string atom = p;
    if (star != std::string::npos) {
      std::string c = p.substr(0, star);
      atom = p.substr(star + 1);
      if (c.size() >= 2 && c.front() == '(' && c.back() == ')') c = c.substr(1, c.size() - 2);
      coef = Scalar::parse(c);
    }
    if (atom.empty()) invalid("missing generator in '" + text + "'");
    out.emplace_back(sign * coef, atom);
  }
  return out;
}

std::optional<long> vir_index(const std::string& atom) {
  if (atom.size() < 3 || atom.compare(0, 2, "e_") != 0) return std::nullopt;
  std::string n = atom.substr(2);
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(n, &used);
  } catch (const std::exception&) {
    invalid("bad Vir index in '" + atom + "'");
  }
  if (used != n.size()) invalid("bad Vir index in '" + atom + "'");
  return v;
}

std::vector<std::string> comma_split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(strip(text));
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(part);
  return out;
}

bool looks_vir(const std::string& text) {
  return text.find("e_") != std::string::npos || text.find('z') != std::string::npos;
}

ModVec parse_vector(const Module& m, const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) return m.generator();
  ModVec v;
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    std::string entry = s.substr(start, end - start);
    start = end + 1;
    if (entry.empty()) continue;
    Scalar coef(1);
    if (auto colon = entry.find(':'); colon != std::string::npos) {
      coef = Scalar::parse(entry.substr(colon + 1));
      entry = entry.substr(0, colon);
    }
    if (entry.size() >= 2 && entry.front() == '(' && entry.back() == ')') entry = entry.substr(1, entry.size() - 2);
    BasisKey key;
    std::stringstream ss(entry);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        size_t used = 0;
        key.push_back(std::stol(part, &used));
        if (used != part.size()) invalid("bad basis key '" + entry + "'");
      } catch (const std::logic_error&) {
        invalid("bad basis key '" + entry + "'");
      }
    }
    if (static_cast<int>(key.size()) != m.key_arity())
      invalid("basis key " + key_to_string(key) + " needs " + std::to_string(m.key_arity()) + " entries");
    v.add_term(key, coef);
  }
  return v;
}

Scalar json_scalar(const json& j, const std::string& name) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  invalid("parameter '" + name + "' must be a string or an integer");
}

const json& need(const json& params, const std::string& key) {
  if (!params.is_object() || !params.contains(key)) invalid("missing parameter '" + key + "'");
  return params.at(key);
}

std::string need_string(const json& params, const std::string& key) {
  const json& j = need(params, key);
  if (!j.is_string()) invalid("parameter '" + key + "' must be a string");
  return j.get<std::string>();
}

MuData mu_from_text(const std::string& poly, const std::string& mu) {
  return MuData{parse_factored(poly), parse_polys(mu)};
}

void write_report(std::ostream& out, const SuiteReport& r, const std::string& format, bool timing) {
  if (format == "text") {
    out << r.suite << " " << r.params.dump() << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& [k, v] : r.flags) out << "  " << k << " = " << (v ? "true" : "false") << "\n";
    if (r.witness) out << "  witness: " << *r.witness << "\n";
  } else {
    out << r.to_json(timing).dump(2) << "\n";
  }
}

/// A parsed, not yet executed suite invocation.
using SuiteJob = std::function<SuiteReport()>;

SuiteJob make_job(const std::string& name, const json& params, int depth) {
  if (depth < 1) invalid("depth must be at least 1");
  if (name == "dense" || name == "suite_dense") {
    Scalar xi = json_scalar(need(params, "xi"), "xi"), tau = json_scalar(need(params, "tau"), "tau");
    return [=] { return suite_dense(xi, tau, depth); };
  }
  if (name == "restriction" || name == "suite_restriction") {
    MuData mu = mu_from_text(need_string(params, "poly"), need_string(params, "mu"));
    mu.validate();
    return [=] { return suite_restriction(mu, depth); };
  }
  if (name == "tensor" || name == "tensor_vermas" || name == "suite_tensor_vermas") {
    Scalar l1 = json_scalar(need(params, "lambda1"), "lambda1");
    Scalar l2 = json_scalar(need(params, "lambda2"), "lambda2");
    Scalar m1 = json_scalar(need(params, "mu1"), "mu1");
    Scalar m2 = json_scalar(need(params, "mu2"), "mu2");
    if (l1.is_zero() || l2.is_zero() || l1 == l2) invalid("lambda1, lambda2 must be nonzero and distinct");
    return [=] { return suite_tensor_vermas(l1, l2, m1, m2, depth); };
  }
  if (name == "induction" || name == "twist_induction" || name == "suite_twist_induction") {
    const json& b = need(params, "basis");
    const json& v = need(params, "values");
    if (!b.is_array() || !v.is_array() || b.size() != v.size() || b.empty() || b.size() > 2)
      invalid("induction needs 'basis' and 'values' arrays of length 1 or 2");
    std::vector<SL2Elt> basis;
    std::vector<Scalar> values;
    for (size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_string()) invalid("basis entries must be strings");
      basis.push_back(parse_sl2(b[i].get<std::string>()));
      values.push_back(json_scalar(v[i], "values"));
    }
    return [=] { return suite_twist_induction(basis, values, depth); };
  }
  invalid("unknown suite '" + name + "'");
}

int run_jobs(const std::vector<SuiteJob>& jobs, bool parallel, std::ostream& out, bool timing) {
  std::vector<SuiteReport> reports;
  if (parallel) {
    std::vector<std::future<SuiteReport>> futures;
    for (const auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
    for (auto& f : futures) reports.push_back(f.get());
  } else {
    for (const auto& job : jobs) reports.push_back(job());
  }
  std::sort(reports.begin(), reports.end(), [](const SuiteReport& a, const SuiteReport& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    return a.params.dump() < b.params.dump();
  });
  json list = json::array();
  bool passed = true;
  for (const auto& r : reports) {
    list.push_back(r.to_json(timing));
    passed = passed && r.passed();
  }
  out << json{{"schema", "report/1"}, {"passed", passed}, {"reports", list}}.dump(2) << "\n";
  return passed ? kExitOk : kExitSuiteFailed;
}

}  // namespace

SL2Elt parse_sl2(const std::string& text) {
  SL2Elt x;
  for (const auto& [c, atom] : linear_terms(text)) {
    if (atom == "e") x[SL2Elt::E] += c;
    else if (atom == "h") x[SL2Elt::H] += c;
    else if (atom == "f") x[SL2Elt::F] += c;
    else invalid("unknown sl2 generator '" + atom + "'");
  }
  return x;
}

VirElt parse_vir(const std::string& text) {
  VirElt x;
  for (const auto& [c, atom] : linear_terms(text)) {
    if (atom == "z") x.add_central(c);
    else if (auto n = vir_index(atom)) x.add(*n, c);
    else if (atom == "e" || atom == "h" || atom == "f") x += embed_sl2(parse_sl2(atom)) * c;
    else invalid("unknown Vir generator '" + atom + "'");
  }
  return x;
}

int run_config_json(const json& config, std::ostream& out, bool with_timing) {
  if (!config.is_object() || !config.contains("suites") || !config["suites"].is_array())
    invalid("config needs a 'suites' array");
  bool parallel = false;
  if (config.contains("parallel")) {
    if (!config["parallel"].is_boolean()) invalid("'parallel' must be a boolean");
    parallel = config["parallel"].get<bool>();
  }
  std::vector<SuiteJob> jobs;
  for (const auto& entry : config["suites"]) {
    if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string())
      invalid("each suite needs a 'name'");
    int depth = default_depth();
    if (entry.contains("depth")) {
      if (!entry["depth"].is_number_integer()) invalid("'depth' must be an integer");
      depth = entry["depth"].get<int>();
    }
    json params = entry.contains("params") ? entry["params"] : json::object();
    jobs.push_back(make_job(entry["name"].get<std::string>(), params, depth));
  }
  return run_jobs(jobs, parallel, out, with_timing);
}

int run_config(const std::string& path, std::ostream& out, std::ostream& err, bool with_timing) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open config '" << path << "'\n";
    return kExitInvalid;
  }
  try {
    json config = json::parse(in);
    return run_config_json(config, out, with_timing);
  } catch (const json::exception& e) {
    err << "error: malformed config: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInvalid;
}

int parse_and_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact modules for sl2 and the Virasoro algebra", "sl2vir"};
  app.require_subcommand(1);

  int depth = default_depth();
  bool as_json = false, as_text = false, as_csv = false, timing = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--depth,-N", depth, "Truncation depth (default: SL2VIR_DEPTH or 6)")->check(CLI::PositiveNumber);
    sub->add_flag("--json", as_json, "JSON output");
    sub->add_flag("--text", as_text, "Plain text output");
    sub->add_flag("--csv", as_csv, "CSV output");
  };

  std::string module_spec, elt, vec, x_text, y_text, xi_text, tau_text, config_path;
  bool generator_only = false;

  auto* act = app.add_subcommand("act", "Apply a Lie algebra element (or the Casimir 'c') to a vector");
  act->add_option("--module,-m", module_spec, "Module, e.g. Verma(2) or VirPoly(t-2;5)")->required();
  act->add_option("--x", elt, "Element: e, h, f combinations, e_n, z, or c")->required();
  act->add_option("--vec", vec, "Vector as key:coef entries separated by ';' (default: generator)");
  add_common(act);

  auto* classify = app.add_subcommand("classify", "Classify the subalgebra spanned by --x (and --y)");
  classify->add_option("--x", x_text, "First element")->required();
  classify->add_option("--y", y_text, "Second element");
  add_common(classify);

  auto* simplicity = app.add_subcommand("simplicity", "Irreducibility of the dense module V(xi + 2Z, tau)");
  simplicity->add_option("--xi", xi_text)->required();
  simplicity->add_option("--tau", tau_text)->required();
  simplicity->add_flag("--generator", generator_only, "Test whether v_xi generates instead");
  add_common(simplicity);

  auto* weights = app.add_subcommand("weights", "Weight decomposition of a vector (default: the depth window)");
  weights->add_option("--module,-m", module_spec)->required();
  weights->add_option("--vec", vec);
  add_common(weights);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  verify->add_flag("--timing", timing, "Report elapsed_ms");

  std::string poly, mu, l1, l2, mu1, mu2, values;
  auto* dense = verify->add_subcommand("dense", "Filtration and structure of Xbar(xi, tau)");
  dense->add_option("--xi", xi_text)->required();
  dense->add_option("--tau", tau_text)->required();
  auto* restriction = verify->add_subcommand("restriction", "Restriction of V^f_mu to sl2");
  restriction->add_option("--poly", poly, "Factored f, e.g. (t-1)^2")->required();
  restriction->add_option("--mu", mu, "p_i coefficients: ';' between roots, ',' within a polynomial")->required();
  auto* tensor = verify->add_subcommand("tensor", "Tensor product of two twisted Verma modules");
  tensor->add_option("--l1", l1)->required();
  tensor->add_option("--l2", l2)->required();
  tensor->add_option("--mu1", mu1)->required();
  tensor->add_option("--mu2", mu2)->required();
  auto* induction = verify->add_subcommand("induction", "Induction from a character of a subalgebra");
  induction->add_option("--x", x_text)->required();
  induction->add_option("--y", y_text);
  induction->add_option("--mu", values, "Character values, comma separated")->required();
  for (auto* sub : {dense, restriction, tensor, induction}) {
    add_common(sub);
    sub->add_flag("--timing", timing, "Report elapsed_ms");
  }

  auto* report = app.add_subcommand("report", "Run the suites listed in a JSON config");
  report->add_option("--config", config_path)->required();
  report->add_flag("--timing", timing, "Report elapsed_ms");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  auto format = [&](const char* fallback) -> std::string {
    if (as_json) return "json";
    if (as_text) return "text";
    if (as_csv) return "csv";
    return fallback;
  };

  try {
    if (*act) {
      auto m = parse_module(module_spec, depth + 2);
      ModVec v = parse_vector(*m, vec);
      std::string e = strip(elt);
      ModVec r;
      if (e == "c" || e == "casimir") r = casimir_action(*m, v);
      else if (looks_vir(e)) r = m->act_vir(parse_vir(e), v);
      else r = m->act(parse_sl2(e), v);
      std::string fmt = format("json");
      if (fmt == "text") {
        out << r.to_string() << "\n";
      } else if (fmt == "csv") {
        out << "key,coefficient\n";
        for (const auto& [k, c] : r.terms()) out << '"' << key_to_string(k) << "\"," << c.to_string() << "\n";
      } else {
        out << modvec_to_json(*m, r).dump() << "\n";
      }
      return kExitOk;
    }
    if (*classify) {
      json j;
      if (y_text.empty()) {
        auto c = classify_subalgebra_1d(parse_sl2(x_text));
        json params = json::array();
        for (const auto& p : c.params) params.push_back(p.to_string());
        j = {{"dimension", 1},           {"type", to_string(c.type)},        {"automorphism", c.automorphism.tag()},
             {"params", params},         {"basis", c.basis.to_string()},     {"scale", c.scale.to_string()}};
      } else {
        auto c = classify_subalgebra_2d(parse_sl2(x_text), parse_sl2(y_text));
        j = {{"dimension", 2},
             {"type", to_string(c.type)},
             {"automorphism", c.automorphism.tag()},
             {"lambda", c.lambda.to_string()}};
      }
      if (format("json") == "text") {
        for (auto& [k, v] : j.items()) out << k << ": " << v.dump() << "\n";
      } else {
        out << j.dump() << "\n";
      }
      return kExitOk;
    }
    if (*simplicity) {
      Scalar xi = Scalar::parse(xi_text), tau = Scalar::parse(tau_text);
      auto r = generator_only ? generator_test(xi, tau) : simplicity_test(xi, tau);
      json j = {{generator_only ? "generates" : "irreducible", r.holds},
                {"witness_i", r.witness_i ? json(*r.witness_i) : json(nullptr)}};
      out << j.dump() << "\n";
      return kExitOk;
    }
    if (*weights) {
      auto m = parse_module(module_spec, depth + 2);
      ModVec v;
      if (strip(vec).empty()) {
        for (const auto& k : m->window(depth)) v.add_term(k, Scalar(1));
      } else {
        v = parse_vector(*m, vec);
      }
      auto parts = weight_decompose(*m, v);
      if (format("csv") == "json") {
        json arr = json::array();
        for (const auto& [w, comp] : parts) {
          json terms = json::array();
          for (const auto& [k, c] : comp.terms()) terms.push_back({k, c.to_string()});
          arr.push_back({{"weight", w.to_string()}, {"terms", terms}});
        }
        out << arr.dump() << "\n";
      } else {
        out << "weight,key,coefficient\n";
        for (const auto& [w, comp] : parts)
          for (const auto& [k, c] : comp.terms())
            out << w.to_string() << ",\"" << key_to_string(k) << "\"," << c.to_string() << "\n";
      }
      return kExitOk;
    }
    if (*verify) {
      SuiteReport r;
      if (*dense) {
        r = suite_dense(Scalar::parse(xi_text), Scalar::parse(tau_text), depth);
      } else if (*restriction) {
        r = suite_restriction(mu_from_text(poly, mu), depth);
      } else if (*tensor) {
        r = suite_tensor_vermas(Scalar::parse(l1), Scalar::parse(l2), Scalar::parse(mu1), Scalar::parse(mu2), depth);
      } else {
        std::vector<SL2Elt> basis{parse_sl2(x_text)};
        if (!y_text.empty()) basis.push_back(parse_sl2(y_text));
        std::vector<Scalar> vals;
        for (const auto& t : comma_split(values)) vals.push_back(Scalar::parse(t));
        r = suite_twist_induction(basis, vals, depth);
      }
      write_report(out, r, format("json"), timing);
      return r.passed() ? kExitOk : kExitSuiteFailed;
    }
    if (*report) return run_config(config_path, out, err, timing);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace sl2vir
