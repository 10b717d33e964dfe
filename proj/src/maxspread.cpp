#include "freediv/maxspread.hpp"

#include "freediv/polygcd.hpp"

#include <stdexcept>

namespace freediv {

GradedModulePresentation cokernel_Cf(const Polynomial& f) {
  if (!f.is_homogeneous())
    throw std::invalid_argument("cokernel_Cf needs homogeneous f");
  return {hessian(f)};
}

MaxSpreadReport max_spread_check(const Polynomial& f, const BlowupContext& ctx,
                                 Deadline deadline) {
  const RingPtr& R = f.ring();
  const int n = R->arity();
  MaxSpreadReport rep;

  Polynomial h = determinant(hessian(f));
  rep.hessian_det_nonzero = !h.is_zero();

  // dim C_f = dim R/(h): the zeroth Fitting ideal of C_f is (h)
  rep.dim_Cf = dimension(Ideal(R, {h}), deadline).krull_dimension;

  rep.analytic_spread = analytic_spread(ctx, deadline);

  bool via_rank = rep.analytic_spread == n;
  bool via_dim = rep.dim_Cf == n - 1;
  bool via_hessian = rep.hessian_det_nonzero;
  if (via_rank != via_dim || via_dim != via_hessian)
    throw std::logic_error("max_spread_check: the three routes disagree");
  rep.max_spread = via_hessian;
  return rep;
}

bool ext_consistency_check(const Polynomial& f, Deadline deadline) {
  GradedModulePresentation C = cokernel_Cf(f);
  GradedModulePresentation E = ext1_against_ring(C, deadline);
  long d = f.degree();
  return same_betti_and_hilbert(E, C.shifted(d - 2), deadline);
}

DepthTable depth_power_table(const Polynomial& f, int m_max,
                             Deadline deadline) {
  if (m_max < 1) throw std::invalid_argument("depth_power_table: m_max >= 1");
  const int n = f.ring()->arity();
  Ideal J = jacobian_ideal(f);
  DepthTable table;
  for (int m = 1; m <= m_max; ++m) {
    try {
      Ideal Jm = m == 1 ? J : ideal_power(J, m, deadline);
      Resolution res =
          minimal_free_resolution(present_cyclic(Jm), -1, deadline);
      table.depth[m] = depth_AB(res, n);
    } catch (const ResourceExhausted&) {
      table.truncated = true;
      break;
    }
  }
  return table;
}

HomaloidalEvidence homaloidal_sufficient(const Polynomial& f,
                                         const BlowupContext& ctx, int m_max,
                                         Deadline deadline,
                                         std::optional<bool> rees_cm_known) {
  const int n = f.ring()->arity();
  HomaloidalEvidence ev;

  // (a) the linear-syzygy part phi_1 carries a nonzero maximal minor
  const GradedMatrix& phi = ctx.syzygy_matrix;
  std::vector<int> linear_cols;
  for (int j = 0; j < phi.cols(); ++j) {
    bool linear = true;
    for (int i = 0; i < phi.rows(); ++i)
      if (!phi.at(i, j).is_zero() && phi.at(i, j).degree() > 1) linear = false;
    if (linear) linear_cols.push_back(j);
  }
  ev.linear_syzygy_count = static_cast<int>(linear_cols.size());
  GradedMatrix phi1 = phi.select_columns(linear_cols);
  for (const Polynomial& m : minors(phi1, n - 1))
    if (!m.is_zero()) {
      ev.linear_minor_nonzero = true;
      break;
    }
  if (!ev.linear_minor_nonzero) {
    ev.status = HomaloidalEvidence::Status::not_established;
    return ev;
  }

  // (b) S2 via the Rees Cohen-Macaulay certificate, plus a depth-zero power
  bool cm = rees_cm_known ? *rees_cm_known : rees_is_cm(ctx, deadline);
  ev.rees_cm = cm;
  if (!cm) {
    // the route's hypothesis is not certified; never report false
    ev.status = HomaloidalEvidence::Status::inconclusive;
    return ev;
  }
  DepthTable table = depth_power_table(f, m_max, deadline);
  for (auto& [m, d] : table.depth)
    if (d == 0) {
      ev.depth_zero_witness = m;
      break;
    }
  ev.status = ev.depth_zero_witness
                  ? HomaloidalEvidence::Status::established
                  : (table.truncated
                         ? HomaloidalEvidence::Status::inconclusive
                         : HomaloidalEvidence::Status::not_established);
  return ev;
}

HessianExperiment hessian_experiment(const Polynomial& f, Deadline deadline) {
  HessianExperiment ex;
  ex.hessian_det = determinant(hessian(f));
  ex.det_zero = ex.hessian_det.is_zero();
  if (ex.det_zero) return ex;
  ex.reduced_part = squarefree_part(ex.hessian_det, deadline);
  ex.det_reduced = ex.reduced_part == ex.hessian_det.monic();
  try {
    FreenessCertificate cert = is_free_divisor(ex.reduced_part, deadline);
    ex.reduced_part_free = cert.free;
    ex.reduced_part_linear_free =
        cert.free && is_linear_free(ex.reduced_part, deadline);
  } catch (const std::invalid_argument&) {
    // cone or otherwise outside the freeness pipeline
    ex.reduced_part_free = false;
    ex.reduced_part_linear_free = false;
  }
  return ex;
}

}  // namespace freediv
