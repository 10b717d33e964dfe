#ifndef FREEDIV_MAXSPREAD_HPP
#define FREEDIV_MAXSPREAD_HPP

#include <map>

#include "freediv/divisor.hpp"

namespace freediv {

// presentation of C_f = coker(Hessian), generators R^n, relations twisted
// by d - 2
GradedModulePresentation cokernel_Cf(const Polynomial& f);

struct MaxSpreadReport {
  bool hessian_det_nonzero = false;
  long dim_Cf = 0;
  int analytic_spread = 0;
  bool max_spread = false;  // the agreed verdict of the three routes
};

// three independent routes (fiber dimension + Jacobian rank, dim R/(h),
// h != 0) that must agree; disagreement throws
MaxSpreadReport max_spread_check(const Polynomial& f, const BlowupContext& ctx,
                                 Deadline deadline = Deadline::none());

// Betti table and Hilbert series of Ext^1(C_f, R) match C_f(d-2)
bool ext_consistency_check(const Polynomial& f,
                           Deadline deadline = Deadline::none());

struct DepthTable {
  std::map<int, int> depth;  // m -> depth R/J_f^m
  bool truncated = false;    // deadline hit; later entries missing
};

DepthTable depth_power_table(const Polynomial& f, int m_max,
                             Deadline deadline = Deadline::none());

struct HomaloidalEvidence {
  enum class Status { established, not_established, inconclusive };
  Status status = Status::not_established;
  bool linear_minor_nonzero = false;  // I_{n-1}(phi_1) != 0
  int linear_syzygy_count = 0;
  std::optional<bool> rees_cm;            // the S2 certificate route
  std::optional<int> depth_zero_witness;  // least m <= m_max with depth 0

  bool established() const { return status == Status::established; }
};

// the paper-level sufficient conditions: enough linear syzygies plus the
// S2-certified depth collapse of some power.  Pass rees_cm_known to reuse an
// already-computed Cohen-Macaulay verdict for the Rees algebra.
HomaloidalEvidence homaloidal_sufficient(
    const Polynomial& f, const BlowupContext& ctx, int m_max,
    Deadline deadline = Deadline::none(),
    std::optional<bool> rees_cm_known = std::nullopt);

struct HessianExperiment {
  Polynomial hessian_det;
  bool det_zero = false;
  bool det_reduced = false;
  Polynomial reduced_part;  // squarefree part of the determinant, monic
  std::optional<bool> reduced_part_free;
  std::optional<bool> reduced_part_linear_free;
};

HessianExperiment hessian_experiment(const Polynomial& f,
                                     Deadline deadline = Deadline::none());

}  // namespace freediv

#endif
