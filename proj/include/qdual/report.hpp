/**
 * @file report.hpp
 * @brief Structured verification outcomes with exact, hand-recheckable
 *        witnesses, and their JSON form.
 *
 * JSON schema, one object per case:
 *   { case:{n,r,d,l,regime}, field, seed, trials, passed,
 *     failures:[{point:{q,x:[...]}, lhs, rhs}], elapsed_ms }
 * `residue --numeric` runs add one extra "numeric" object; failure witnesses
 * may carry an "at" tag naming the failing sub-check or fixed point.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qdual {

struct CaseDescriptor {
  int n = 0, r = 0, d = 0, l = 0;
  std::string regime;
};

struct PointWitness {
  std::string q;
  std::vector<std::string> x;
};

struct FailureWitness {
  PointWitness point;
  std::string lhs;
  std::string rhs;
  std::string at;  // optional context (sub-check / fixed point)
};

struct NumericSummary {
  int grid = 0;
  double rho = 0.0;
  double rel_err = 0.0;       // at `grid`
  double rel_err_half = 0.0;  // at grid/2
};

struct VerificationReport {
  CaseDescriptor case_;
  std::string field;
  std::uint64_t seed = 0;
  int trials = 0;
  int passed = 0;
  std::vector<FailureWitness> failures;
  std::int64_t elapsed_ms = 0;
  std::optional<NumericSummary> numeric;

  bool all_passed() const { return passed == trials && failures.empty(); }
};

std::string report_to_json_string(const VerificationReport& r, int indent = 2);
std::string reports_to_json_string(const std::vector<VerificationReport>& rs, int indent = 2);
void write_json_file(const std::string& path, const std::string& body);

/// One human-readable line per report.
std::string report_line(const VerificationReport& r, const std::string& command);

}  // namespace qdual
