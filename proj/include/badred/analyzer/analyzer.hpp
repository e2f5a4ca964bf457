#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "badred/cayley/cayley.hpp"
#include "badred/ffalg/ffalg.hpp"
#include "badred/heights/heights.hpp"
#include "badred/ruppert/ruppert.hpp"

namespace badred {

inline constexpr const char* kReportSchemaVersion = "1";

struct AnalyzerOptions {
  std::uint64_t scan_bound = 100;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultOracleBudget;
  unsigned threads = 0;  // 0: hardware concurrency
  bool timings = false;  // off by default so reports stay byte-identical
};

struct PrimeEntry {
  std::string label;
  Integer p;
  int residue_degree = 1;
  Integer norm;
  bool from_certificate = false;
  bool from_scan = false;
  long local_content = 0;
  // "bad", "good", "undecided" (budget), "excluded" (index divisor)
  std::string status;
  std::string reduction;  // the P-part of f mod P
  std::optional<ReductionType> type;
  std::string note;
  // curves: "identity holds", "identity fails", "degenerate parametrization"
  std::string specialization;
};

struct BoundEntry {
  std::string name;  // "C(delta)", "C(n,delta)", "C'(n,d,delta)"
  BoundConstants constants;
  std::optional<HeightValue> value;  // absent when informational only
  bool used_for_verdict = false;
  std::string note;
};

struct ViewCertificate {
  std::string change;
  std::string section;
  std::uint64_t section_seed = 0;
  std::string affine;
  std::size_t rows = 0, cols = 0;
  std::vector<std::size_t> minor_rows;
  std::string minor_value;
  Integer norm;
  std::vector<PrimePower> norm_factors;
  Integer norm_cofactor;
  Integer divisor;
  std::vector<PrimePower> divisor_factors;
};

struct Timing {
  std::string stage;
  double seconds = 0;
};

struct AnalysisReport {
  std::string kind;  // "hypersurface" or "curve"
  std::string field;
  std::string input;
  std::string polynomial;  // f, or the Cayley form for curves
  std::vector<std::string> variables;
  int delta = 0, n = 0, d = 0;
  std::vector<LocalContentEntry> local_contents;
  HeightValue height;
  std::vector<BoundEntry> bounds;
  std::string char0_reason;
  std::vector<ViewCertificate> certificates;
  Integer candidate_divisor;
  std::vector<Integer> candidate_primes;
  std::vector<PrimeEntry> primes;  // candidates and scanned primes, sorted by (p, label)
  std::vector<std::string> bad;    // labels of Q
  std::vector<std::string> undecided;
  std::vector<std::string> excluded;
  HeightValue sum_log_norm;  // (1/[K:Q]) sum over Q of log N(P)
  std::string verdict;       // "PASS", "FAIL", "CONDITIONAL"
  std::string comparison;    // certified relation of sum to bound
  std::uint64_t scan_bound = 0;
  bool scan_agrees = true;
  std::vector<std::string> missed_by_certificate;
  std::vector<std::string> caveats;
  std::uint64_t seed = 0;
  std::vector<Timing> timings;
};

// Throws NotGeometricallyIntegralOverK with the kernel witness.
AnalysisReport analyze_hypersurface(const NFPoly& f, const AnalyzerOptions& opt = {});
// Throws NonBirationalSuspected.
AnalysisReport analyze_curve(const CurveParam& c, const AnalyzerOptions& opt = {});

struct ScanEntry {
  std::string label;
  Integer p;
  Integer norm;
  std::string status;  // as in PrimeEntry
  std::string reduction;
  std::optional<ReductionType> type;
  std::string note;
};
std::vector<ScanEntry> scan_primes(const NFPoly& f, std::uint64_t bound, const AnalyzerOptions& opt = {});

int exit_code(const AnalysisReport& r);  // 0 PASS, 2 FAIL, 3 CONDITIONAL

nlohmann::ordered_json to_json(const AnalysisReport& r);
nlohmann::ordered_json to_json(const std::vector<ScanEntry>& scan, const NFPoly& f, std::uint64_t bound);
nlohmann::ordered_json number_json(const HeightValue& v);
nlohmann::ordered_json constants_json(const BoundConstants& c);
std::string emit_report(const AnalysisReport& r);  // pretty JSON plus newline

// Validation against the subset of JSON Schema used by docs/report-schema.json
// (type, enum, const, required, properties, additionalProperties, items,
// minItems, maxItems, $ref into $defs). Returns the violations; empty means valid.
std::vector<std::string> validate_json(const nlohmann::json& doc, const nlohmann::json& schema);
// The schema shipped with the library (same text as docs/report-schema.json).
const nlohmann::json& report_schema();

}  // namespace badred
