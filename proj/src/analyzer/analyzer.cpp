#include "badred/analyzer/analyzer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <set>
#include <thread>

namespace badred {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  Stopwatch(bool on, std::vector<Timing>& out) : on_(on), out_(out), start_(Clock::now()), last_(start_) {}
  void lap(const std::string& stage) {
    if (!on_) return;
    auto now = Clock::now();
    out_.push_back({stage, std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }
  void total() {
    if (on_) out_.push_back({"total", std::chrono::duration<double>(Clock::now() - start_).count()});
  }

 private:
  bool on_;
  std::vector<Timing>& out_;
  Clock::time_point start_, last_;
};

// fn(i) for i < n on a few threads; the first exception in index order is rethrown.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::exception_ptr> errs(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        fn(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

struct Key {
  Integer p;
  std::string label;
  bool operator<(const Key& o) const { return p != o.p ? p < o.p : label < o.label; }
};

struct Slot {
  PrimeEntry entry;
  std::optional<PrimeIdeal> P;
};

void classify_into(const NFPoly& f, Slot& s, std::uint64_t budget) {
  PrimeEntry& e = s.entry;
  const PrimeIdeal& P = *s.P;
  e.local_content = local_content(f, P);
  try {
    const FiniteField& F = P.residue_field();
    FFMPoly r = p_part_reduction(f, P);
    e.reduction = to_string(r);
    ReductionType t = classify_reduction(r, F, budget);
    e.status = t.is_geometrically_integral ? "good" : "bad";
    e.type = std::move(t);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::BudgetExceeded && err.code() != ErrorCode::InvalidInput) throw;
    e.status = "undecided";
    e.note = err.what();
  }
}

void add_prime(std::map<Key, Slot>& slots, const NumberField& K, const Integer& p, bool cert, std::uint64_t scan_bound,
               std::vector<std::string>& excluded) {
  std::vector<PrimeIdeal> ps;
  try {
    ps = K.prime_decomposition(p);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::IndexDivisorUnsupported) throw;
    Key k{p, "p=" + p.get_str()};
    Slot& s = slots[k];
    s.entry.label = k.label;
    s.entry.p = p;
    s.entry.status = "excluded";
    s.entry.note = err.what();
    (cert ? s.entry.from_certificate : s.entry.from_scan) = true;
    if (std::find(excluded.begin(), excluded.end(), k.label) == excluded.end()) excluded.push_back(k.label);
    return;
  }
  for (auto& P : ps) {
    if (!cert && P.norm() > Integer(static_cast<unsigned long>(scan_bound))) continue;
    Key k{p, P.label()};
    Slot& s = slots[k];
    if (!s.P) {
      s.P = P;
      s.entry.label = k.label;
      s.entry.p = p;
      s.entry.residue_degree = P.f();
      s.entry.norm = P.norm();
    }
    (cert ? s.entry.from_certificate : s.entry.from_scan) = true;
  }
}

ViewCertificate certificate_of(const RuppertView& v) {
  ViewCertificate c;
  c.change = v.change.to_string();
  if (v.section) {
    c.section = v.section->map.to_string();
    c.section_seed = v.section->seed;
  }
  c.affine = to_string(v.system.f);
  c.rows = v.system.M.rows();
  c.cols = v.system.M.cols();
  if (v.minor) {
    const MinorCertificate& m = *v.minor;
    c.minor_rows = m.rows;
    c.minor_value = m.value.field->to_string(m.value);
    c.norm = m.norm;
    c.norm_factors = m.norm_factors;
    c.norm_cofactor = m.norm_cofactor;
    c.divisor = m.divisor;
    c.divisor_factors = m.divisor_factors;
  }
  return c;
}

std::string witness_message(const CharZeroResult& res) {
  std::string msg = res.reason;
  if (!res.views.empty() && !res.views.back().g.is_zero())
    msg += "; kernel witness g = " + to_string(res.views.back().g) + ", h = " + to_string(res.views.back().h);
  return msg;
}

// Local contents at every prime dividing a coefficient numerator (norm) or denominator.
void local_contents(const NFPoly& f, AnalysisReport& r) {
  const NumberField& K = *f.lead().second.field;
  std::set<Integer> ps;
  FactorBudget light;
  light.rho_iterations = 200'000;
  auto add = [&](const Integer& n) {
    Integer a = abs(n);
    if (a <= 1) return;
    auto part = factor_integer_partial(a, light);
    for (auto& pp : part.factors) ps.insert(pp.prime);
    if (part.cofactor > 1) r.caveats.push_back("unfactored coefficient cofactor " + part.cofactor.get_str());
  };
  for (auto& [m, a] : f.terms()) {
    auto [num, den] = a.split_denominator();
    add(den);
    NFElem x = K.zero();
    for (std::size_t i = 0; i < num.size(); ++i) x.c[i] = num[i];
    Rational nrm = K.norm(x);
    add(nrm.get_num());
  }
  for (auto& p : ps) {
    try {
      for (auto& P : K.prime_decomposition(p)) r.local_contents.push_back({P.label(), p, P.f(), local_content(f, P)});
    } catch (const Error& err) {
      if (err.code() != ErrorCode::IndexDivisorUnsupported) throw;
      r.caveats.push_back("local content at p=" + p.get_str() + " not computed: index divisor");
    }
  }
}

struct Mode {
  const CurveParam* curve = nullptr;
};

AnalysisReport analyze_core(const NFPoly& f, const AnalyzerOptions& opt, Mode mode) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot analyze the zero polynomial");
  auto hd = f.homogeneous_degree();
  if (!hd) throw Error(ErrorCode::NonHomogeneous, "polynomial is not homogeneous");
  if (*hd < 1) throw Error(ErrorCode::InvalidInput, "degree 0 defines no hypersurface");
  const NumberField& K = *f.lead().second.field;

  AnalysisReport r;
  Stopwatch sw(opt.timings, r.timings);
  r.field = K.is_rational() ? "Q" : K.describe();
  r.polynomial = to_string(f);
  r.variables = *f.vars();
  r.delta = *hd;
  r.seed = opt.seed;
  r.scan_bound = opt.scan_bound;
  if (mode.curve) {
    r.kind = "curve";
    r.input = mode.curve->to_string();
    r.n = mode.curve->n;
    r.d = 1;
  } else {
    r.kind = "hypersurface";
    r.input = r.polynomial;
    r.n = f.nvars() - 1;
    r.d = r.n - 1;
  }

  CharZeroResult c0 = abs_irreducible_char0(f, opt.seed, true);
  if (!c0.absolutely_irreducible)
    throw Error(ErrorCode::NotGeometricallyIntegralOverK, witness_message(c0));
  r.char0_reason = c0.reason;
  for (auto& v : c0.views) r.certificates.push_back(certificate_of(v));
  r.candidate_divisor = c0.divisor;
  r.candidate_primes = c0.candidate_primes;
  sw.lap("char0");

  local_contents(f, r);
  r.height = naive_height(f);
  const int delta = r.delta;
  if (mode.curve) {
    const int N = f.nvars() - 1;
    BoundEntry b;
    b.name = "C(n,delta)";
    b.constants = constant_C_hypersurface(N, delta);
    b.value = bound_value(r.height, b.constants, delta);
    b.used_for_verdict = true;
    b.note = "hypersurface bound for the Cayley form in P^" + std::to_string(N);
    r.bounds.push_back(std::move(b));
    BoundEntry g;
    g.name = "C'(n,d,delta)";
    g.constants = constant_C_general(mode.curve->n, 1, delta);
    g.note = "informational; the Arakelov height of the curve is not computed";
    r.bounds.push_back(std::move(g));
  } else {
    if (r.n == 2) {
      BoundEntry b;
      b.name = "C(delta)";
      b.constants = constant_C_curve(delta);
      b.value = bound_value(r.height, b.constants, delta);
      b.used_for_verdict = true;
      b.note = "plane curve bound";
      r.bounds.push_back(std::move(b));
    }
    BoundEntry b;
    b.name = "C(n,delta)";
    b.constants = constant_C_hypersurface(r.n, delta);
    b.value = bound_value(r.height, b.constants, delta);
    b.used_for_verdict = r.n != 2;
    b.note = r.n == 2 ? "reported; the plane curve bound is tighter" : "hypersurface bound";
    r.bounds.push_back(std::move(b));
  }
  sw.lap("height");

  std::map<Key, Slot> slots;
  for (auto& p : r.candidate_primes) add_prime(slots, K, p, true, opt.scan_bound, r.excluded);
  for (auto p : primes_up_to(opt.scan_bound))
    add_prime(slots, K, Integer(static_cast<unsigned long>(p)), false, opt.scan_bound, r.excluded);
  std::vector<Slot*> work;
  for (auto& [k, s] : slots)
    if (s.P) work.push_back(&s);
  parallel_for(work.size(), opt.threads, [&](std::size_t i) { classify_into(f, *work[i], opt.budget); });
  sw.lap("classification");

  LogLinear sum;
  for (auto& [k, s] : slots) {
    PrimeEntry& e = s.entry;
    if (e.status == "bad") {
      r.bad.push_back(e.label);
      sum += LogLinear::log_int(e.norm);
      if (!e.from_certificate) r.missed_by_certificate.push_back(e.label);
      if (mode.curve) {
        try {
          e.specialization = cayley_specialization_check(*mode.curve, *s.P) ? "identity holds" : "identity fails";
        } catch (const Error& err) {
          if (err.code() != ErrorCode::DegenerateReduction) throw;
          e.specialization = "degenerate parametrization";
        }
      }
    } else if (e.status == "undecided") {
      r.undecided.push_back(e.label);
    }
    r.primes.push_back(std::move(e));
  }
  r.scan_agrees = r.missed_by_certificate.empty();
  r.sum_log_norm = HeightValue::of(sum.scaled(Rational(1, K.degree())));
  if (!r.excluded.empty())
    r.caveats.push_back("primes dividing the index of Z[theta] were not analyzed; Q may meet them");
  if (!r.undecided.empty()) r.caveats.push_back("some primes exceeded the oracle budget; verdict is conditional");
  if (!r.scan_agrees) r.caveats.push_back("the scan found bad primes outside the certificate candidates");

  const BoundEntry* used = nullptr;
  for (auto& b : r.bounds)
    if (b.used_for_verdict) used = &b;
  Cmp cmp = compare(r.sum_log_norm.value, used->value->value);
  r.comparison = cmp_name(cmp);
  if (cmp == Cmp::Greater)
    r.verdict = "FAIL";
  else if (cmp == Cmp::Undecided || !r.undecided.empty() || !r.excluded.empty())
    r.verdict = "CONDITIONAL";
  else
    r.verdict = "PASS";
  sw.total();
  return r;
}

nlohmann::ordered_json factors_json(const std::vector<PrimePower>& fs) {
  auto a = nlohmann::ordered_json::array();
  for (auto& pp : fs) a.push_back({{"p", pp.prime.get_str()}, {"e", pp.exponent}});
  return a;
}

nlohmann::ordered_json strings(const std::vector<std::string>& v) {
  auto a = nlohmann::ordered_json::array();
  for (auto& s : v) a.push_back(s);
  return a;
}

void type_json(nlohmann::ordered_json& j, const std::optional<ReductionType>& t) {
  if (!t) {
    j["reduced"] = nullptr;
    j["irreducible"] = nullptr;
    j["geometrically_integral"] = nullptr;
    j["witness_kind"] = nullptr;
    j["witness"] = nullptr;
    j["witness_extension"] = nullptr;
    return;
  }
  j["reduced"] = t->is_reduced;
  j["irreducible"] = t->is_irreducible;
  j["geometrically_integral"] = t->is_geometrically_integral;
  j["witness_kind"] = t->witness_kind;
  j["witness"] = t->witness;
  j["witness_extension"] = t->witness_extension;
}

}  // namespace

AnalysisReport analyze_hypersurface(const NFPoly& f, const AnalyzerOptions& opt) { return analyze_core(f, opt, {}); }

AnalysisReport analyze_curve(const CurveParam& c, const AnalyzerOptions& opt) {
  std::vector<Timing> pre;
  Stopwatch sw(opt.timings, pre);
  CayleyForm cf = cayley_form(c);
  check_birational(cf, c, opt.seed);
  sw.lap("cayley");
  AnalysisReport r = analyze_core(cf.form, opt, Mode{&c});
  if (opt.timings) {
    pre.insert(pre.end(), r.timings.begin(), r.timings.end());
    pre.back().seconds += pre.front().seconds;
    r.timings = std::move(pre);
  }
  return r;
}

std::vector<ScanEntry> scan_primes(const NFPoly& f, std::uint64_t bound, const AnalyzerOptions& opt) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot scan the zero polynomial");
  if (!f.homogeneous_degree()) throw Error(ErrorCode::NonHomogeneous, "polynomial is not homogeneous");
  const NumberField& K = *f.lead().second.field;
  std::map<Key, Slot> slots;
  std::vector<std::string> excluded;
  for (auto p : primes_up_to(bound)) add_prime(slots, K, Integer(static_cast<unsigned long>(p)), false, bound, excluded);
  std::vector<Slot*> work;
  for (auto& [k, s] : slots)
    if (s.P) work.push_back(&s);
  parallel_for(work.size(), opt.threads, [&](std::size_t i) { classify_into(f, *work[i], opt.budget); });
  std::vector<ScanEntry> out;
  for (auto& [k, s] : slots) {
    const PrimeEntry& e = s.entry;
    out.push_back({e.label, e.p, e.norm, e.status, e.reduction, e.type, e.note});
  }
  return out;
}

int exit_code(const AnalysisReport& r) {
  if (r.verdict == "PASS") return 0;
  if (r.verdict == "FAIL") return 2;
  return 3;
}

nlohmann::ordered_json number_json(const HeightValue& v) {
  nlohmann::ordered_json j;
  j["symbolic"] = v.value.to_string();
  j["decimal"] = v.decimal(15);
  j["enclosure"] = {v.enclosure.lo_string(20), v.enclosure.hi_string(20)};
  return j;
}

nlohmann::ordered_json constants_json(const BoundConstants& c) {
  static const char* kinds[] = {"C(delta)", "C(n,delta)", "C'(n,d,delta)"};
  nlohmann::ordered_json j;
  j["name"] = kinds[static_cast<int>(c.kind)];
  j["n"] = c.n;
  j["d"] = c.d;
  j["delta"] = c.delta;
  j["N"] = c.kind == ConstantKind::General ? nlohmann::ordered_json(c.N.get_str()) : nlohmann::ordered_json(nullptr);
  j["formula"] = c.formula;
  j["value"] = number_json(HeightValue{c.value, c.enclosure});
  return j;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  using J = nlohmann::ordered_json;
  J j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = r.kind;
  j["seed"] = r.seed;
  J in;
  in["field"] = r.field;
  in[r.kind == "curve" ? "parametrization" : "polynomial"] = r.input;
  j["input"] = in;
  j["analyzed_polynomial"] = r.polynomial;
  j["variables"] = strings(r.variables);
  j["delta"] = r.delta;
  j["n"] = r.n;
  j["d"] = r.d;
  J lc = J::array();
  for (auto& e : r.local_contents)
    lc.push_back({{"prime", e.label}, {"p", e.p.get_str()}, {"residue_degree", e.f}, {"content", e.content}});
  j["local_contents"] = lc;
  j["height"] = number_json(r.height);
  J bounds = J::array();
  for (auto& b : r.bounds) {
    J x;
    x["name"] = b.name;
    x["constant"] = constants_json(b.constants);
    x["value"] = b.value ? number_json(*b.value) : J(nullptr);
    x["used_for_verdict"] = b.used_for_verdict;
    x["note"] = b.note;
    bounds.push_back(x);
  }
  j["bounds"] = bounds;
  J c0;
  c0["reason"] = r.char0_reason;
  J certs = J::array();
  for (auto& c : r.certificates) {
    J x;
    x["change"] = c.change;
    x["section"] = c.section.empty() ? J(nullptr) : J(c.section);
    x["section_seed"] = c.section_seed;
    x["affine_polynomial"] = c.affine;
    x["matrix_rows"] = c.rows;
    x["matrix_cols"] = c.cols;
    x["minor_rows"] = c.minor_rows;
    x["minor_value"] = c.minor_value;
    x["norm"] = c.norm.get_str();
    x["norm_factors"] = factors_json(c.norm_factors);
    x["norm_cofactor"] = c.norm_cofactor.get_str();
    x["divisor"] = c.divisor.get_str();
    x["divisor_factors"] = factors_json(c.divisor_factors);
    certs.push_back(x);
  }
  c0["certificates"] = certs;
  c0["candidate_divisor"] = r.candidate_divisor.get_str();
  J cp = J::array();
  for (auto& p : r.candidate_primes) cp.push_back(p.get_str());
  c0["candidate_primes"] = cp;
  j["char0"] = c0;
  J primes = J::array();
  for (auto& e : r.primes) {
    J x;
    x["label"] = e.label;
    x["p"] = e.p.get_str();
    x["residue_degree"] = e.residue_degree;
    x["norm"] = e.norm.get_str();
    J src = J::array();
    if (e.from_certificate) src.push_back("certificate");
    if (e.from_scan) src.push_back("scan");
    x["sources"] = src;
    x["local_content"] = e.local_content;
    x["status"] = e.status;
    x["reduction"] = e.reduction;
    type_json(x, e.type);
    x["note"] = e.note;
    x["specialization"] = e.specialization.empty() ? J(nullptr) : J(e.specialization);
    primes.push_back(x);
  }
  j["primes"] = primes;
  j["bad_primes"] = strings(r.bad);
  j["undecided"] = strings(r.undecided);
  j["excluded"] = strings(r.excluded);
  j["sum_log_norm"] = number_json(r.sum_log_norm);
  j["comparison"] = r.comparison;
  j["verdict"] = r.verdict;
  J comp;
  comp["scan_bound"] = r.scan_bound;
  comp["agrees"] = r.scan_agrees;
  comp["missed_by_certificate"] = strings(r.missed_by_certificate);
  j["completeness"] = comp;
  j["caveats"] = strings(r.caveats);
  if (!r.timings.empty()) {
    J t = J::array();
    for (auto& x : r.timings) t.push_back({{"stage", x.stage}, {"seconds", x.seconds}});
    j["timings"] = t;
  }
  return j;
}

nlohmann::ordered_json to_json(const std::vector<ScanEntry>& scan, const NFPoly& f, std::uint64_t bound) {
  using J = nlohmann::ordered_json;
  const NumberField& K = *f.lead().second.field;
  J j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "scan";
  j["field"] = K.is_rational() ? "Q" : K.describe();
  j["polynomial"] = to_string(f);
  j["scan_bound"] = bound;
  J primes = J::array();
  for (auto& e : scan) {
    J x;
    x["label"] = e.label;
    x["p"] = e.p.get_str();
    x["norm"] = e.norm.get_str();
    x["status"] = e.status;
    x["reduction"] = e.reduction;
    type_json(x, e.type);
    x["note"] = e.note;
    primes.push_back(x);
  }
  j["primes"] = primes;
  return j;
}

std::string emit_report(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace badred
