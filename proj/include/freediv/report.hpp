#ifndef FREEDIV_REPORT_HPP
#define FREEDIV_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "freediv/families.hpp"

namespace freediv {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct AnalysisRequest {
  std::vector<std::string> ring_vars;
  std::string order = "grevlex";
  std::string polynomial_text;            // inline source
  std::optional<FamilySpec> family;       // or a family constructor
  std::vector<std::string> tasks;         // divisor blowup maxspread hessian
                                          // depth-table homaloidal
  int m_max = 0;                          // 0 = default (ring arity)
  double deadline_seconds = 300;
  std::string format = "json";            // json | text
  bool timing = false;                    // timing breaks byte-determinism,
                                          // so it is opt-in
};

// executes the requested pipelines; partial results on timeout are marked,
// never fabricated
nlohmann::ordered_json run_request(const AnalysisRequest& req);

std::string envelope_to_text(const nlohmann::ordered_json& envelope);

// runs every fixture claim, printing one PASS/FAIL line per claim (with the
// violated statement verbatim on failure); returns the number of failures
int run_regression(std::ostream& out, bool include_slow,
                   double deadline_seconds);
int run_fixtures(std::ostream& out, const std::vector<Fixture>& fixtures,
                 bool include_slow, double deadline_seconds);

// deterministic JSON form of the full regression run
nlohmann::ordered_json regression_json(bool include_slow,
                                       double deadline_seconds);

}  // namespace freediv

#endif
