#include "qdual/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qdual {

namespace {

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["case"] = {{"n", r.case_.n}, {"r", r.case_.r}, {"d", r.case_.d},
               {"l", r.case_.l}, {"regime", r.case_.regime}};
  j["field"] = r.field;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["passed"] = r.passed;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) {
    nlohmann::json w;
    w["point"] = {{"q", f.point.q}, {"x", f.point.x}};
    w["lhs"] = f.lhs;
    w["rhs"] = f.rhs;
    if (!f.at.empty()) w["at"] = f.at;
    j["failures"].push_back(std::move(w));
  }
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.numeric) {
    j["numeric"] = {{"grid", r.numeric->grid},
                    {"rho", r.numeric->rho},
                    {"rel_err", r.numeric->rel_err},
                    {"rel_err_half", r.numeric->rel_err_half}};
  }
  return j;
}

}  // namespace

std::string report_to_json_string(const VerificationReport& r, int indent) {
  return to_json(r).dump(indent);
}

std::string reports_to_json_string(const std::vector<VerificationReport>& rs, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr.dump(indent);
}

void write_json_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open JSON output path: " + path);
  out << body << "\n";
}

std::string report_line(const VerificationReport& r, const std::string& command) {
  std::ostringstream os;
  os << (r.all_passed() ? "[PASS] " : "[FAIL] ") << command << " n=" << r.case_.n
     << " r=" << r.case_.r << " d=" << r.case_.d << " l=" << r.case_.l << " ("
     << r.case_.regime << ") field=" << r.field << " seed=" << r.seed << " trials="
     << r.passed << "/" << r.trials << " " << r.elapsed_ms << "ms";
  if (r.numeric) {
    os << " numeric[grid=" << r.numeric->grid << " rel_err=" << r.numeric->rel_err
       << " rel_err_half=" << r.numeric->rel_err_half << "]";
  }
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    os << "\n  first witness: q=" << f.point.q << " x=[";
    for (size_t i = 0; i < f.point.x.size(); ++i) {
      if (i) os << ", ";
      os << f.point.x[i];
    }
    os << "] lhs=" << f.lhs << " rhs=" << f.rhs;
    if (!f.at.empty()) os << " at=" << f.at;
  }
  return os.str();
}

}  // namespace qdual
