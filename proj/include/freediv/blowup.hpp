#ifndef FREEDIV_BLOWUP_HPP
#define FREEDIV_BLOWUP_HPP

#include <optional>

#include "freediv/homalg.hpp"

namespace freediv {

// Everything needed to study the blowup algebras of an ideal: chosen
// generators, their minimal syzygy matrix, and the ambient rings for the
// symmetric / Rees / special fiber presentations.  The engine always names
// the new variables T1..Tnu; the Rees elimination variable prints as _t.
// The heavy ideals are computed once and shared across copies.
struct BlowupContext {
  RingPtr base_ring;
  std::vector<Polynomial> generators;
  GradedMatrix syzygy_matrix;  // minimal presentation of the ideal
  RingPtr extended_ring;       // k[x.., T1..Tnu]
  RingPtr fiber_ring;          // k[T1..Tnu]

  int nvars() const { return base_ring->arity(); }
  int ngens() const { return static_cast<int>(generators.size()); }
  // common generator degree, when the generators share one
  std::optional<long> common_degree() const;

  struct Cache {
    std::mutex lock;
    std::optional<Ideal> sym, rees, fiber;
    std::optional<int> spread;
  };
  std::shared_ptr<Cache> cache = std::make_shared<Cache>();
};

BlowupContext make_blowup_context(const Ideal& I,
                                  Deadline deadline = Deadline::none());

// minimal presentation (syzygy) matrix of the ideal, rows = generators
GradedMatrix minimal_syzygy_matrix(const Ideal& I,
                                   Deadline deadline = Deadline::none());

// ideal of entries of [T1..Tnu] * phi, in the extended ring
Ideal symmetric_ideal(const BlowupContext& ctx,
                      Deadline deadline = Deadline::none());

// kernel of base[T] -> base[t], T_i -> t g_i, by eliminating the auxiliary
// variable; contains the symmetric ideal
Ideal rees_ideal(const BlowupContext& ctx,
                 Deadline deadline = Deadline::none());

// cross-check route: saturate the symmetric ideal by one nonzero maximal
// minor of the syzygy matrix (the ideal is principal off that locus)
Ideal rees_ideal_via_saturation(const BlowupContext& ctx,
                                Deadline deadline = Deadline::none());

// kernel of k[T] -> k[g_1..g_nu]; needs equal generator degrees.
// Realized as (rees + (x_1..x_n)) meet k[T] on top of the cached Rees
// ideal; fiber_ideal_direct is the independent elimination route.
Ideal fiber_ideal(const BlowupContext& ctx,
                  Deadline deadline = Deadline::none());
Ideal fiber_ideal_direct(const BlowupContext& ctx,
                         Deadline deadline = Deadline::none());

// dim of the special fiber, computed two ways (fiber dimension and the rank
// of the generator Jacobian); disagreement is an engine bug and throws
int analytic_spread(const BlowupContext& ctx,
                    Deadline deadline = Deadline::none());

// rank over the fraction field as the largest r with a nonzero r-minor;
// randomized evaluation lower bound with exhaustive symbolic confirmation
int polynomial_matrix_rank(const GradedMatrix& M,
                           Deadline deadline = Deadline::none());

bool is_linear_type(const BlowupContext& ctx,
                    Deadline deadline = Deadline::none());

// reg of the fiber ring when the fiber is Cohen-Macaulay; nullopt otherwise
std::optional<int> reduction_number(const BlowupContext& ctx,
                                    Deadline deadline = Deadline::none());

bool rees_is_cm(const BlowupContext& ctx,
                Deadline deadline = Deadline::none());
bool fiber_is_cm(const BlowupContext& ctx,
                 Deadline deadline = Deadline::none());

// depth of the Rees quotient over its ambient polynomial ring
int rees_depth(const BlowupContext& ctx,
               Deadline deadline = Deadline::none());
int rees_quotient_dim(const BlowupContext& ctx,
                      Deadline deadline = Deadline::none());

// number of minimal generators of the Rees ideal equals its height
bool complete_intersection_check(const BlowupContext& ctx,
                                 Deadline deadline = Deadline::none());

// ht I_(nu-j)(phi) >= j+1 for j = 1..s-1
bool g_condition(const BlowupContext& ctx, int s,
                 Deadline deadline = Deadline::none());

// both gradings (base | T) at once
bool is_bihomogeneous(const Polynomial& f, int base_vars);

struct BlowupReport {
  Ideal sym_ideal;
  Ideal rees_ideal;
  Ideal fiber_ideal;
  int analytic_spread = 0;
  bool linear_type = false;
  bool rees_cm = false;
  bool fiber_cm = false;
  std::optional<int> reduction_number;
  int rees_quotient_dim = 0;
  // probe, never an assertion: is Sym a complete intersection here?
  bool sym_complete_intersection = false;
  int sym_min_gens = 0;
  int sym_height = 0;
};

BlowupReport analyze_blowup(const BlowupContext& ctx,
                            Deadline deadline = Deadline::none());

}  // namespace freediv

#endif
