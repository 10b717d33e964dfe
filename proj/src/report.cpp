#include "freediv/report.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "freediv/parser.hpp"

namespace freediv {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json ideal_json(const Ideal& I, Deadline deadline) {
  ordered_json gens = ordered_json::array();
  for (const Polynomial& g : I.groebner(deadline)) gens.push_back(g.to_string());
  return gens;
}

ordered_json divisor_json(const DivisorReport& rep) {
  ordered_json j;
  j["degree"] = rep.degree;
  j["is_cone"] = rep.cone;
  if (rep.reduced) j["is_reduced"] = *rep.reduced;
  if (rep.jacobian_height) j["jacobian_height"] = *rep.jacobian_height;
  if (rep.jacobian_pd) j["jacobian_pd"] = *rep.jacobian_pd;
  if (rep.free_divisor) j["is_free"] = *rep.free_divisor;
  if (rep.linear_free) j["is_linear_free"] = *rep.linear_free;
  if (rep.saito_lambda) j["saito_lambda"] = to_string(*rep.saito_lambda);
  if (rep.der_reg) j["der_regularity"] = *rep.der_reg;
  if (rep.der_reg_matches_formula)
    j["der_reg_matches_formula"] = *rep.der_reg_matches_formula;
  if (!rep.jacobian_betti.empty()) j["jacobian_betti"] = rep.jacobian_betti;
  return j;
}

ordered_json blowup_json(const BlowupReport& rep, Deadline deadline) {
  ordered_json j;
  j["analytic_spread"] = rep.analytic_spread;
  j["linear_type"] = rep.linear_type;
  j["rees_cm"] = rep.rees_cm;
  j["fiber_cm"] = rep.fiber_cm;
  if (rep.reduction_number)
    j["reduction_number"] = *rep.reduction_number;
  else
    j["reduction_number"] = "unknown";
  j["rees_quotient_dim"] = rep.rees_quotient_dim;
  j["sym_complete_intersection"] = rep.sym_complete_intersection;
  j["sym_min_gens"] = rep.sym_min_gens;
  j["sym_height"] = rep.sym_height;
  j["sym_ideal"] = ideal_json(rep.sym_ideal, deadline);
  j["rees_ideal"] = ideal_json(rep.rees_ideal, deadline);
  j["fiber_ideal"] = ideal_json(rep.fiber_ideal, deadline);
  return j;
}

ordered_json maxspread_json(const MaxSpreadReport& rep) {
  ordered_json j;
  j["hessian_det_nonzero"] = rep.hessian_det_nonzero;
  j["dim_Cf"] = rep.dim_Cf;
  j["analytic_spread"] = rep.analytic_spread;
  j["max_spread"] = rep.max_spread;
  return j;
}

ordered_json depth_json(const DepthTable& t) {
  ordered_json j;
  ordered_json table;
  for (auto& [m, d] : t.depth) table[std::to_string(m)] = d;
  j["depth"] = table;
  j["truncated"] = t.truncated;
  return j;
}

ordered_json homaloidal_json(const HomaloidalEvidence& ev) {
  ordered_json j;
  switch (ev.status) {
    case HomaloidalEvidence::Status::established: j["status"] = "established"; break;
    case HomaloidalEvidence::Status::not_established:
      j["status"] = "not_established";
      break;
    case HomaloidalEvidence::Status::inconclusive:
      j["status"] = "inconclusive";
      break;
  }
  j["linear_minor_nonzero"] = ev.linear_minor_nonzero;
  j["linear_syzygy_count"] = ev.linear_syzygy_count;
  if (ev.rees_cm) j["rees_cm"] = *ev.rees_cm;
  if (ev.depth_zero_witness) j["depth_zero_witness"] = *ev.depth_zero_witness;
  return j;
}

ordered_json hessian_json(const HessianExperiment& ex) {
  ordered_json j;
  j["hessian_det"] = ex.hessian_det.to_string();
  j["det_zero"] = ex.det_zero;
  if (!ex.det_zero) {
    j["det_reduced"] = ex.det_reduced;
    j["reduced_part"] = ex.reduced_part.to_string();
    if (ex.reduced_part_free) j["reduced_part_free"] = *ex.reduced_part_free;
    if (ex.reduced_part_linear_free)
      j["reduced_part_linear_free"] = *ex.reduced_part_linear_free;
  }
  return j;
}

}  // namespace

ordered_json run_request(const AnalysisRequest& req) {
  if (req.tasks.empty())
    throw std::invalid_argument("request needs at least one task");
  if (req.deadline_seconds <= 0)
    throw std::invalid_argument("deadline must be positive");
  ordered_json env;
  env["schema"] = kSchemaVersion;
  env["engine_version"] = kEngineVersion;

  ordered_json reqj;
  reqj["ring"] = req.ring_vars;
  reqj["order"] = req.order;
  if (!req.polynomial_text.empty()) reqj["polynomial"] = req.polynomial_text;
  if (req.family) reqj["family"] = req.family->describe();
  reqj["tasks"] = req.tasks;
  reqj["m_max"] = req.m_max;
  reqj["deadline_seconds"] = req.deadline_seconds;
  env["request"] = reqj;

  auto started = std::chrono::steady_clock::now();
  Deadline deadline = Deadline::after_seconds(req.deadline_seconds);
  ordered_json results;
  ordered_json exhausted = ordered_json::array();

  Polynomial f;
  if (req.family) {
    Fixture fx = build(*req.family);
    if (fx.rejected) {
      env["rejected"] = fx.reject_reason;
      env["polynomial"] = fx.polynomial.to_string();
      env["results"] = results;
      return env;
    }
    f = fx.polynomial;
  } else {
    OrderSpec order = OrderSpec::Grevlex();
    if (req.order == "lex") order = OrderSpec::Lex();
    else if (req.order != "grevlex")
      throw std::invalid_argument("unknown order " + req.order);
    RingPtr R = make_ring(req.ring_vars, order);
    f = parse_expression(req.polynomial_text, R);
  }
  env["polynomial"] = f.to_string();
  env["ring"] = f.ring()->names();

  const int n = f.ring()->arity();
  const int m_max = req.m_max > 0 ? req.m_max : n;
  std::optional<BlowupContext> ctx;
  auto get_ctx = [&]() -> const BlowupContext& {
    if (!ctx) ctx = make_blowup_context(jacobian_ideal(f), deadline);
    return *ctx;
  };
  std::optional<bool> rees_cm_seen;

  for (const std::string& task : req.tasks) {
    try {
      if (task == "divisor") {
        results["divisor"] = divisor_json(analyze_divisor(f, deadline));
      } else if (task == "blowup") {
        BlowupReport rep = analyze_blowup(get_ctx(), deadline);
        rees_cm_seen = rep.rees_cm;
        results["blowup"] = blowup_json(rep, deadline);
      } else if (task == "maxspread") {
        MaxSpreadReport rep = max_spread_check(f, get_ctx(), deadline);
        ordered_json j = maxspread_json(rep);
        j["ext_consistency"] = ext_consistency_check(f, deadline);
        results["maxspread"] = j;
      } else if (task == "depth-table") {
        results["depth_table"] = depth_json(depth_power_table(f, m_max, deadline));
      } else if (task == "homaloidal") {
        results["homaloidal"] = homaloidal_json(
            homaloidal_sufficient(f, get_ctx(), m_max, deadline, rees_cm_seen));
      } else if (task == "hessian") {
        results["hessian"] = hessian_json(hessian_experiment(f, deadline));
      } else {
        throw std::invalid_argument("unknown task " + task);
      }
    } catch (const ResourceExhausted& e) {
      exhausted.push_back(ordered_json{{"task", task}, {"reason", e.what()}});
    }
  }
  env["results"] = results;
  env["resource_exhausted"] = exhausted;
  if (req.timing) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    env["timing_us"] = us;
  }
  return env;
}

std::string envelope_to_text(const ordered_json& env) {
  std::ostringstream os;
  std::function<void(const ordered_json&, int)> walk =
      [&](const ordered_json& j, int indent) {
        std::string pad(indent, ' ');
        if (j.is_object()) {
          for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
              os << pad << it.key() << ":\n";
              walk(it.value(), indent + 2);
            } else {
              os << pad << it.key() << ": " << it.value().dump() << "\n";
            }
          }
        } else if (j.is_array()) {
          for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
              walk(v, indent + 2);
            } else {
              os << pad << "- " << v.dump() << "\n";
            }
          }
        }
      };
  walk(env, 0);
  return os.str();
}

namespace {

ordered_json run_fixture(const Fixture& fx, double deadline_seconds,
                         int* failures) {
  ordered_json j;
  j["fixture"] = fx.name;
  j["polynomial"] = fx.polynomial.to_string();
  if (fx.rejected) {
    j["rejected"] = fx.reject_reason;
    return j;
  }
  ordered_json claims = ordered_json::array();
  FixtureSession session(fx.polynomial,
                         Deadline::after_seconds(deadline_seconds));
  for (const Claim& c : fx.claims) {
    ordered_json cj;
    cj["label"] = c.label;
    std::string status;
    try {
      status = c.check(session) ? "pass" : "fail";
    } catch (const ResourceExhausted&) {
      status = "resource_exhausted";
    }
    cj["status"] = status;
    if (status != "pass") {
      cj["citation"] = c.citation;
      ++*failures;
    }
    claims.push_back(cj);
  }
  j["claims"] = claims;
  return j;
}

}  // namespace

ordered_json regression_json(bool include_slow, double deadline_seconds) {
  ordered_json root;
  root["schema"] = kSchemaVersion;
  root["engine_version"] = kEngineVersion;
  ordered_json fixtures = ordered_json::array();
  int failures = 0;
  for (const Fixture& fx : example_catalog()) {
    if (fx.slow && !include_slow) continue;
    fixtures.push_back(run_fixture(fx, deadline_seconds, &failures));
  }
  root["fixtures"] = fixtures;
  root["failures"] = failures;
  return root;
}

int run_regression(std::ostream& out, bool include_slow,
                   double deadline_seconds) {
  return run_fixtures(out, example_catalog(), include_slow, deadline_seconds);
}

int run_fixtures(std::ostream& out, const std::vector<Fixture>& fixtures,
                 bool include_slow, double deadline_seconds) {
  int failures = 0;
  for (const Fixture& fx : fixtures) {
    if (fx.slow && !include_slow) {
      out << "SKIP " << fx.name << " (slow; use --include-slow)\n";
      continue;
    }
    if (fx.rejected) {
      out << "REJECTED " << fx.name << " :: " << fx.reject_reason
          << " (expected)\n";
      continue;
    }
    FixtureSession session(fx.polynomial,
                           Deadline::after_seconds(deadline_seconds));
    for (const Claim& c : fx.claims) {
      bool ok = false;
      std::string note;
      try {
        ok = c.check(session);
      } catch (const ResourceExhausted& e) {
        note = std::string(" [resource exhausted: ") + e.what() + "]";
      }
      if (ok) {
        out << "PASS " << fx.name << " :: " << c.label << "\n";
      } else {
        out << "FAIL " << fx.name << " :: " << c.label << " :: " << c.citation
            << note << "\n";
        ++failures;
      }
      out.flush();
    }
  }
  out << (failures ? "REGRESSION FAILURES: " : "ALL CLAIMS PASS: ")
      << failures << "\n";
  return failures;
}

}  // namespace freediv
