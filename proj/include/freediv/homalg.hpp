#ifndef FREEDIV_HOMALG_HPP
#define FREEDIV_HOMALG_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "freediv/ideal.hpp"
#include "freediv/matrix.hpp"
#include "freediv/module.hpp"

namespace freediv {

// Cokernel presentation of a graded module: coker(relations), generators in
// degrees relations.row_twists().
struct GradedModulePresentation {
  GradedMatrix relations;

  const RingPtr& ring() const { return relations.ring(); }
  int generator_count() const { return relations.rows(); }
  const std::vector<long>& generator_degrees() const {
    return relations.row_twists();
  }
  GradedModulePresentation shifted(long s) const {
    return {relations.shifted(s)};
  }
};

GradedModulePresentation present_cyclic(const Ideal& I);  // R/I
// the ideal as a module: generators + their syzygies
GradedModulePresentation present_ideal_module(
    const Ideal& I, Deadline deadline = Deadline::none());

// Minimal graded free resolution 0 <- M <- F0 <- F1 <- ... with
// maps[i] : F_{i+1} -> F_i; maps are unit-free, consecutive maps compose to
// zero, and the length never exceeds the ring arity.
struct Resolution {
  std::vector<long> f0_twists;
  std::vector<GradedMatrix> maps;

  int length() const { return static_cast<int>(maps.size()); }  // = pd
  // twists of F_i as a sorted list
  std::vector<long> step_twists(int i) const;
  // Betti table: (homological index i, internal degree j) -> rank
  std::map<std::pair<int, long>, int> betti() const;
  std::string betti_table_text() const;  // Macaulay2 layout: rows j-i
};

Resolution minimal_free_resolution(const GradedModulePresentation& P,
                                   int max_length = -1,
                                   Deadline deadline = Deadline::none());

int projective_dimension(const Resolution& res);
int depth_AB(const Resolution& res, int arity);  // arity - pd
long regularity(const Resolution& res);

// numerator / (1 - t)^denominator_exponent
struct HilbertSeries {
  std::map<long, long> numerator;
  int denominator_exponent = 0;

  HilbertSeries reduced() const;  // cancel common (1 - t) factors
  long coefficient(long degree) const;
  bool operator==(const HilbertSeries& o) const;
  HilbertSeries shifted(long s) const;  // series of M(s)
  std::string to_string() const;
};

HilbertSeries hilbert_series(const Resolution& res, int arity);

// graded dimension of coker(P) in one degree, by counting standard
// monomials against the module Groebner basis; low-degree oracle for the
// Hilbert series
long graded_dimension(const GradedModulePresentation& P, long degree,
                      Deadline deadline = Deadline::none());

// Ext^1_R(M, R) as a cokernel presentation (homology of the dualized
// resolution at step 1)
GradedModulePresentation ext1_against_ring(
    const GradedModulePresentation& P, Deadline deadline = Deadline::none());

// pd(R/I) == ht(I), the graded Auslander-Buchsbaum criterion
bool is_cohen_macaulay(const Ideal& I, Deadline deadline = Deadline::none());

// Betti tables and Hilbert series both agree (necessary conditions for a
// graded isomorphism; reported as consistency, never as isomorphism)
bool same_betti_and_hilbert(const GradedModulePresentation& A,
                            const GradedModulePresentation& B,
                            Deadline deadline = Deadline::none());

}  // namespace freediv

#endif
