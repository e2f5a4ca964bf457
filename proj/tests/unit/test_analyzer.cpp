#include <doctest.h>

#include "badred/analyzer/analyzer.hpp"

using namespace badred;

namespace {

const std::vector<std::string> kT = {"T0", "T1", "T2"};

NFPoly qpoly(const std::string& s, std::vector<std::string> vars = kT) {
  return parse_nf_poly(s, vars, *NumberField::rationals());
}

std::vector<std::string> bad_p(const AnalysisReport& r) {
  std::vector<std::string> out;
  for (auto& e : r.primes)
    if (e.status == "bad") out.push_back(e.p.get_str());
  return out;
}

}  // namespace

TEST_CASE("the T0^2 + 6 T1 T2 example") {
  AnalysisReport r = analyze_hypersurface(qpoly("T0^2 + 6*T1*T2"));
  CHECK(bad_p(r) == std::vector<std::string>{"2", "3"});
  CHECK(compare(r.sum_log_norm.value, LogLinear::log_int(6)) == Cmp::Equal);
  REQUIRE(r.bounds.size() == 2);
  CHECK(r.bounds[0].name == "C(delta)");
  CHECK(r.bounds[0].used_for_verdict);
  CHECK(r.bounds[0].value->value.prime_form().to_string() == (LogLinear::log_int(6, 3) + LogLinear::log_int(2, 9)).prime_form().to_string());
  CHECK(r.verdict == "PASS");
  CHECK(exit_code(r) == 0);
  CHECK(r.scan_agrees);
  CHECK(r.candidate_primes == std::vector<Integer>{2, 3});
  for (auto& e : r.primes)
    if (e.status == "bad") CHECK(e.type->witness_kind == "square factor");
}

TEST_CASE("hyperplanes and excluded inputs") {
  AnalysisReport r = analyze_hypersurface(qpoly("T0 + T1", {"T0", "T1"}));
  CHECK(r.bad.empty());
  CHECK(r.bounds.back().value->value.is_zero());
  CHECK(r.verdict == "PASS");
  CHECK(r.comparison == "equal");
  CHECK_THROWS_WITH_AS(analyze_hypersurface(qpoly("T0^2 + T1^2")), doctest::Contains("NotGeometricallyIntegralOverK"),
                       Error);
  CHECK_THROWS_AS(analyze_hypersurface(qpoly("T0^2 + T1")), Error);
}

TEST_CASE("scan_primes") {
  auto s = scan_primes(qpoly("T0^2 + 6*T1*T2"), 10);
  REQUIRE(s.size() == 4);
  CHECK(s[0].status == "bad");
  CHECK(s[1].status == "bad");
  CHECK(s[2].status == "good");
  CHECK(s[3].status == "good");
  for (auto& e : scan_primes(qpoly("T0 + T1", {"T0", "T1"}), 30)) CHECK(e.status == "good");
  auto t = scan_primes(qpoly("T0^2 + T1^2"), 10);
  CHECK(t[0].type->witness_kind == "square factor");  // 2
  CHECK(t[1].type->is_irreducible);                    // 3: -1 is not a square
  CHECK(!t[1].type->is_geometrically_integral);
  CHECK(!t[2].type->is_irreducible);                   // 5 splits
  CHECK(t[3].type->is_irreducible);                    // 7
  auto j = to_json(t, qpoly("T0^2 + T1^2"), 10);
  CHECK(validate_json(j, report_schema()).empty());
}

TEST_CASE("number field run") {
  auto K = NumberField::parse("x^2+1");
  NFPoly f = parse_nf_poly("T0^2 + (1+x)*5*T1*T2", kT, *K);
  AnalysisReport r = analyze_hypersurface(f, {.scan_bound = 30});
  REQUIRE(r.bad.size() == 3);
  std::vector<Integer> norms;
  for (auto& e : r.primes)
    if (e.status == "bad") norms.push_back(e.norm);
  CHECK(norms == std::vector<Integer>{2, 5, 5});
  CHECK(r.sum_log_norm.value.to_string() == "1/2*log(2) + log(5)");
  CHECK(r.verdict == "PASS");
}

TEST_CASE("curves") {
  auto Q = NumberField::rationals();
  AnalysisReport line = analyze_curve(parse_curve_param("s, t, 0, 0", *Q), {.scan_bound = 20});
  CHECK(line.polynomial == "u01");
  CHECK(line.bad.empty());
  CHECK(line.verdict == "PASS");
  AnalysisReport tc = analyze_curve(parse_curve_param("s^3, s^2*t, s*t^2, t^3", *Q), {.scan_bound = 50});
  CHECK(tc.bad.empty());
  CHECK(tc.delta == 3);
  CHECK(tc.verdict == "PASS");
  CHECK(tc.bounds.size() == 2);
  CHECK(!tc.bounds[1].value);
  AnalysisReport t2 = analyze_curve(parse_curve_param("s^3, s^2*t, s*t^2, 2*t^3", *Q), {.scan_bound = 50});
  CHECK(!t2.bad.empty());
  CHECK(t2.scan_agrees);
  CHECK(t2.verdict == "PASS");
  for (auto& e : t2.primes)
    if (e.status == "bad") CHECK(e.specialization != "identity fails");
  CHECK_THROWS_WITH_AS(analyze_curve(parse_curve_param("s^2, t^2", *Q)), doctest::Contains("NonBirationalSuspected"),
                       Error);
}

TEST_CASE("report JSON") {
  AnalysisReport r = analyze_hypersurface(qpoly("T0^2 + 6*T1*T2"), {.seed = 3});
  std::string a = emit_report(r);
  CHECK(a == emit_report(analyze_hypersurface(qpoly("T0^2 + 6*T1*T2"), {.seed = 3})));
  auto j = nlohmann::json::parse(a);
  auto errs = validate_json(j, report_schema());
  CHECK_MESSAGE(errs.empty(), (errs.empty() ? "" : errs.front()));
  CHECK(nlohmann::ordered_json::parse(a).dump(2) + "\n" == a);
  CHECK(j["schema_version"] == "1");
  CHECK(j["verdict"] == "PASS");
  CHECK(!j.contains("timings"));
  AnalyzerOptions o;
  o.timings = true;
  auto jt = to_json(analyze_hypersurface(qpoly("T0^2 + 6*T1*T2"), o));
  CHECK(jt.contains("timings"));
  CHECK(validate_json(nlohmann::json::parse(jt.dump()), report_schema()).empty());

  auto bad = j;
  bad["verdict"] = "MAYBE";
  bad.erase("height");
  bad["extra"] = 1;
  CHECK(validate_json(bad, report_schema()).size() >= 1);
  auto broken = j;
  broken["primes"][0]["status"] = 5;
  CHECK(!validate_json(broken, report_schema()).empty());
}

TEST_CASE("undecided primes make the verdict conditional") {
  AnalyzerOptions o;
  o.budget = 0;
  o.scan_bound = 10;
  // quartic: the degree-2 divisor search cannot run with no budget
  AnalysisReport r = analyze_hypersurface(qpoly("T0^4 + T1^3*T2 + 7*T2^4 + T0*T1*T2^2"), o);
  CHECK(!r.undecided.empty());
  CHECK(r.verdict == "CONDITIONAL");
  CHECK(exit_code(r) == 3);
  auto j = nlohmann::json::parse(emit_report(r));
  CHECK(validate_json(j, report_schema()).empty());
  CHECK(j["undecided"].size() == r.undecided.size());
}
