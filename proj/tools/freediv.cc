// freediv: analyze freeness and blowup algebras of Jacobian ideals of
// homogeneous hypersurfaces, exactly over the rationals.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "freediv/parser.hpp"
#include "freediv/report.hpp"

using namespace freediv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::optional<FamilySpec> parse_family(const std::string& name,
                                       const std::vector<int>& params) {
  FamilySpec spec{};
  if (name == "family1" || name == "family2" || name == "normal-crossing") {
    if (params.size() != 1) return std::nullopt;
    spec.id = name == "family1" ? FamilyId::family1
              : name == "family2" ? FamilyId::family2
                                  : FamilyId::normal_crossing;
    spec.n = params[0];
    return spec;
  }
  if (name == "family3" || name == "family3g") {
    if (params.size() != 2) return std::nullopt;
    spec.id = name == "family3" ? FamilyId::family3 : FamilyId::family3g;
    spec.alpha = params[0];
    spec.beta = params[1];
    return spec;
  }
  return std::nullopt;
}

int emit(const nlohmann::ordered_json& env, const std::string& format) {
  if (format == "json")
    std::cout << env.dump(2) << "\n";
  else
    std::cout << envelope_to_text(env);
  if (env.contains("resource_exhausted") &&
      !env["resource_exhausted"].empty())
    return kExitExhausted;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact commutative-algebra analysis of hypersurface Jacobians"};
  app.require_subcommand(1);

  // analyze: inline polynomial
  auto* analyze = app.add_subcommand("analyze", "analyze a polynomial");
  std::string ring_csv, order = "grevlex", poly_text, tasks_csv = "divisor";
  std::string format = "json";
  int m_max = 0;
  double deadline = 300;
  bool timing = false;
  analyze->add_option("--ring", ring_csv, "comma-separated variables")
      ->required();
  analyze->add_option("--order", order, "grevlex|lex");
  analyze->add_option("poly", poly_text, "polynomial expression")->required();
  analyze->add_option("--tasks", tasks_csv,
                      "divisor,blowup,maxspread,depth-table,homaloidal,hessian");
  analyze->add_option("--max-power", m_max, "largest power for depth tables");
  analyze->add_option("--deadline", deadline, "seconds before giving up");
  analyze->add_option("--format", format, "json|text");
  analyze->add_flag("--timing", timing, "include wall-clock timing");

  // family: construct a family member and analyze it
  auto* family = app.add_subcommand("family", "analyze a family member");
  std::string fam_name;
  std::vector<int> fam_params;
  std::string fam_tasks = "divisor,blowup";
  std::string fam_format = "json";
  double fam_deadline = 300;
  int fam_m_max = 0;
  bool fam_timing = false;
  family->add_option("name", fam_name,
                     "family1|family2|family3|family3g|normal-crossing")
      ->required();
  family->add_option("params", fam_params, "family parameters")->required();
  family->add_option("--tasks", fam_tasks, "task list");
  family->add_option("--max-power", fam_m_max, "largest power for depth tables");
  family->add_option("--deadline", fam_deadline, "seconds before giving up");
  family->add_option("--format", fam_format, "json|text");
  family->add_flag("--timing", fam_timing, "include wall-clock timing");
  bool fam_override = false;
  family->add_flag("--override-caps", fam_override,
                   "allow parameters beyond the budgeted caps");

  // regress: run the fixture corpus
  auto* regress = app.add_subcommand("regress", "run the regression corpus");
  bool include_slow = false;
  double reg_deadline = 900;
  std::string reg_format = "text";
  bool manifest_only = false;
  regress->add_flag("--include-slow", include_slow,
                    "also run the long-running fixtures");
  regress->add_option("--deadline", reg_deadline, "per-fixture seconds");
  regress->add_option("--format", reg_format, "text|json");
  regress->add_flag("--manifest", manifest_only,
                    "print the fixture manifest and exit");

  // hessian-experiment: h(f) analysis of an inline polynomial
  auto* hess = app.add_subcommand("hessian-experiment",
                                  "hessian determinant freeness experiment");
  std::string h_ring, h_poly, h_format = "json";
  double h_deadline = 300;
  hess->add_option("--ring", h_ring, "comma-separated variables")->required();
  hess->add_option("poly", h_poly, "polynomial expression")->required();
  hess->add_option("--deadline", h_deadline, "seconds before giving up");
  hess->add_option("--format", h_format, "json|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      AnalysisRequest req;
      req.ring_vars = split_csv(ring_csv);
      req.order = order;
      req.polynomial_text = poly_text;
      req.tasks = split_csv(tasks_csv);
      req.m_max = m_max;
      req.deadline_seconds = deadline;
      req.format = format;
      req.timing = timing;
      if (req.tasks.empty()) {
        std::cerr << "no tasks requested\n";
        return kExitUsage;
      }
      return emit(run_request(req), format);
    }
    if (family->parsed()) {
      auto spec = parse_family(fam_name, fam_params);
      if (!spec) {
        std::cerr << "bad family name or parameter count\n";
        return kExitUsage;
      }
      AnalysisRequest req;
      spec->override_caps = fam_override;
      req.family = spec;
      req.tasks = split_csv(fam_tasks);
      req.m_max = fam_m_max;
      req.deadline_seconds = fam_deadline;
      req.format = fam_format;
      req.timing = fam_timing;
      return emit(run_request(req), fam_format);
    }
    if (regress->parsed()) {
      if (manifest_only) {
        std::cout << fixture_manifest(example_catalog());
        return kExitOk;
      }
      if (reg_format == "json") {
        nlohmann::ordered_json j = regression_json(include_slow, reg_deadline);
        std::cout << j.dump(2) << "\n";
        return j["failures"].get<int>() ? kExitFailure : kExitOk;
      }
      return run_regression(std::cout, include_slow, reg_deadline)
                 ? kExitFailure
                 : kExitOk;
    }
    if (hess->parsed()) {
      AnalysisRequest req;
      req.ring_vars = split_csv(h_ring);
      req.polynomial_text = h_poly;
      req.tasks = {"hessian"};
      req.deadline_seconds = h_deadline;
      req.format = h_format;
      return emit(run_request(req), h_format);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceExhausted& e) {
    std::cerr << "resource exhausted: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
