#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "badred/analyzer/analyzer.hpp"
#include "badred/mpoly/parser.hpp"

using namespace badred;

namespace {

struct Settings {
  std::string field;
  std::string poly;
  std::string vars;
  std::string param;
  std::string out;
  std::uint64_t scan_bound = 100;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultOracleBudget;
  unsigned threads = 0;
  bool timings = false;
  bool json = false;
  int n = 0, d = 0, delta = 0;
};

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::uint64_t x = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || p != v.data() + v.size())
    throw Error(ErrorCode::InvalidInput, "config key " + key + " expects a non-negative integer, got '" + v + "'");
  return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw Error(ErrorCode::InvalidInput, "config key " + key + " expects a boolean, got '" + v + "'");
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  std::string t = s.substr(b, e - b + 1);
  if (t.size() >= 2 && t.front() == '"' && t.back() == '"') t = t.substr(1, t.size() - 2);
  return t;
}

// key=value lines; '#' starts a comment. Keys are the long flag names.
void load_config(const std::string& path, Settings& s) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IOError, "cannot read config file " + path);
  const std::map<std::string, std::function<void(const std::string&, const std::string&)>> setters = {
      {"field", [&](auto&, auto& v) { s.field = v; }},
      {"poly", [&](auto&, auto& v) { s.poly = v; }},
      {"vars", [&](auto&, auto& v) { s.vars = v; }},
      {"param", [&](auto&, auto& v) { s.param = v; }},
      {"out", [&](auto&, auto& v) { s.out = v; }},
      {"scan-bound", [&](auto& k, auto& v) { s.scan_bound = parse_u64(k, v); }},
      {"seed", [&](auto& k, auto& v) { s.seed = parse_u64(k, v); }},
      {"budget", [&](auto& k, auto& v) { s.budget = parse_u64(k, v); }},
      {"threads", [&](auto& k, auto& v) { s.threads = static_cast<unsigned>(parse_u64(k, v)); }},
      {"timings", [&](auto& k, auto& v) { s.timings = parse_bool(k, v); }},
      {"json", [&](auto& k, auto& v) { s.json = parse_bool(k, v); }},
      {"n", [&](auto& k, auto& v) { s.n = static_cast<int>(parse_u64(k, v)); }},
      {"d", [&](auto& k, auto& v) { s.d = static_cast<int>(parse_u64(k, v)); }},
      {"delta", [&](auto& k, auto& v) { s.delta = static_cast<int>(parse_u64(k, v)); }},
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::InvalidInput, path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end())
      throw Error(ErrorCode::InvalidInput, path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    it->second(key, val);
  }
}

// --config is read before CLI11 parses, so explicit flags overwrite it.
std::string find_config(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return "";
}

std::shared_ptr<const NumberField> field_of(const std::string& s) {
  if (s.empty() || s == "Q" || s == "QQ") return NumberField::rationals();
  return NumberField::parse(s);
}

NFPoly poly_of(const Settings& s, const NumberField& K) {
  if (s.poly.empty()) throw Error(ErrorCode::InvalidInput, "--poly is required");
  std::vector<std::string> vars;
  if (!s.vars.empty()) {
    std::stringstream ss(s.vars);
    for (std::string v; std::getline(ss, v, ',');) vars.push_back(trim(v));
  } else {
    vars = infer_variables(s.poly, K.is_rational() ? "" : K.generator_name());
  }
  return parse_nf_poly(s.poly, vars, K);
}

CurveParam param_of(const Settings& s, const NumberField& K) {
  if (s.param.empty()) throw Error(ErrorCode::InvalidInput, "--param is required");
  return parse_curve_param(s.param, K);
}

AnalyzerOptions options_of(const Settings& s) {
  AnalyzerOptions o;
  o.scan_bound = s.scan_bound;
  o.seed = s.seed;
  o.budget = s.budget;
  o.threads = s.threads;
  o.timings = s.timings;
  return o;
}

void write_out(const Settings& s, const std::string& text) {
  if (s.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(s.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::IOError, "cannot write " + s.out);
  f << text;
  if (!f) throw Error(ErrorCode::IOError, "write to " + s.out + " failed");
}

int run_report(const Settings& s, const AnalysisReport& r) {
  write_out(s, emit_report(r));
  std::cerr << r.verdict << ": sum log N(P) " << r.sum_log_norm.decimal() << " vs bound ";
  for (auto& b : r.bounds)
    if (b.used_for_verdict) std::cerr << b.value->decimal();
  std::cerr << " (" << r.bad.size() << (r.bad.size() == 1 ? " bad prime)\n" : " bad primes)\n");
  return exit_code(r);
}

void print_constant(const BoundConstants& c, bool json, nlohmann::ordered_json& arr) {
  if (json) {
    arr.push_back(constants_json(c));
    return;
  }
  static const char* kinds[] = {"C(delta)", "C(n,delta)", "C'(n,d,delta)"};
  std::cout << kinds[static_cast<int>(c.kind)] << " [";
  if (c.kind != ConstantKind::Curve) std::cout << "n=" << c.n << " ";
  if (c.kind == ConstantKind::General) std::cout << "d=" << c.d << " ";
  std::cout << "delta=" << c.delta;
  if (c.kind == ConstantKind::General) std::cout << " N=" << c.N.get_str();
  std::cout << "]\n  formula:  " << c.formula << "\n  symbolic: " << c.value.to_string()
            << "\n  decimal:  " << c.enclosure.mid_string(15) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  CLI::App app{"Bad reduction primes of hypersurfaces and curves over number fields"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value file mirroring the long flags; flags win");

  auto add_field = [&](CLI::App* c) { c->add_option("--field", s.field, "minimal polynomial, e.g. x^2+1 (default Q)"); };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--scan-bound", s.scan_bound, "oracle scan over primes of norm up to this bound");
    c->add_option("--seed", s.seed, "seed for plane sections and probes");
    c->add_option("--budget", s.budget, "trial divisions per oracle call");
    c->add_option("--threads", s.threads, "worker threads (0: all cores)");
    c->add_option("--out", s.out, "write the JSON report here instead of stdout");
    c->add_flag("--timings", s.timings, "include stage timings in the report");
  };

  auto* analyze = app.add_subcommand("analyze", "analyze a hypersurface given by a homogeneous polynomial");
  add_field(analyze);
  analyze->add_option("--poly", s.poly, "homogeneous polynomial, e.g. T0^2 + 6*T1*T2");
  analyze->add_option("--vars", s.vars, "comma-separated variables (default: inferred)");
  add_common(analyze);

  auto* curve = app.add_subcommand("curve", "analyze a curve given by a parametrization");
  add_field(curve);
  curve->add_option("--param", s.param, "binary forms in s, t, e.g. \"s^3, s^2*t, s*t^2, t^3\"");
  add_common(curve);

  auto* scan = app.add_subcommand("scan", "classify the reduction at every prime of norm up to a bound");
  add_field(scan);
  scan->add_option("--poly", s.poly, "homogeneous polynomial");
  scan->add_option("--vars", s.vars, "comma-separated variables (default: inferred)");
  scan->add_option("--scan-bound,--bound", s.scan_bound, "norm bound");
  scan->add_option("--budget", s.budget, "trial divisions per oracle call");
  scan->add_option("--threads", s.threads, "worker threads (0: all cores)");
  scan->add_option("--out", s.out, "output file");

  auto* cayley = app.add_subcommand("cayley", "print the Cayley form of a parametrized curve");
  add_field(cayley);
  cayley->add_option("--param", s.param, "binary forms in s, t");

  auto* height = app.add_subcommand("height", "naive height of a polynomial");
  add_field(height);
  height->add_option("--poly", s.poly, "polynomial");
  height->add_option("--vars", s.vars, "comma-separated variables (default: inferred)");

  auto* constants = app.add_subcommand("constants", "print the bound constants");
  constants->add_option("--n", s.n, "ambient projective dimension")->check(CLI::PositiveNumber);
  constants->add_option("--d", s.d, "dimension of the variety (for the general constant)");
  constants->add_option("--delta", s.delta, "degree")->check(CLI::PositiveNumber);
  constants->add_flag("--json", s.json, "JSON output");

  try {
    if (auto cfg = find_config(argc, argv); !cfg.empty()) load_config(cfg, s);
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (analyze->parsed()) {
      auto K = field_of(s.field);
      return run_report(s, analyze_hypersurface(poly_of(s, *K), options_of(s)));
    }
    if (curve->parsed()) {
      auto K = field_of(s.field);
      return run_report(s, analyze_curve(param_of(s, *K), options_of(s)));
    }
    if (scan->parsed()) {
      auto K = field_of(s.field);
      NFPoly f = poly_of(s, *K);
      auto table = scan_primes(f, s.scan_bound, options_of(s));
      write_out(s, to_json(table, f, s.scan_bound).dump(2) + "\n");
      return 0;
    }
    if (cayley->parsed()) {
      auto K = field_of(s.field);
      CayleyForm cf = cayley_form(param_of(s, *K));
      std::cout << to_string(cf.form) << "\n";
      return 0;
    }
    if (height->parsed()) {
      auto K = field_of(s.field);
      NFPoly f = poly_of(s, *K);
      nlohmann::ordered_json j;
      j["polynomial"] = to_string(f);
      j["height"] = number_json(naive_height(f));
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (constants->parsed()) {
      if (s.n < 1 || s.delta < 1) throw Error(ErrorCode::InvalidInput, "--n and --delta are required");
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      if (s.d > 0) {
        print_constant(constant_C_general(s.n, s.d, s.delta), s.json, arr);
      } else {
        if (s.n == 2) print_constant(constant_C_curve(s.delta), s.json, arr);
        print_constant(constant_C_hypersurface(s.n, s.delta), s.json, arr);
      }
      if (s.json) std::cout << arr.dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
