#ifndef FREEDIV_MODULE_HPP
#define FREEDIV_MODULE_HPP

#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "freediv/deadline.hpp"
#include "freediv/matrix.hpp"
#include "freediv/polynomial.hpp"

namespace freediv {

// Term of a free-module element: coeff * mono * e_comp.
struct MTerm {
  Monomial mono;
  int comp;
  Rational coeff;
};

// Element of a free module, terms strictly descending under the module
// order in force.
struct MVec {
  std::vector<MTerm> terms;
  bool is_zero() const { return terms.empty(); }
  const MTerm& lead() const { return terms.front(); }
};

// Module monomial order over a ring order.  Components below value_rank are
// compared term-over-position; components at or above value_rank (the lift
// block, when present) are compared by the Schreyer order induced from the
// tagged parent leading terms, and every value-block term exceeds every
// lift-block term.
class ModOrder {
 public:
  ModOrder(RingPtr ring, int value_rank)
      : ring_(std::move(ring)), value_rank_(value_rank) {}

  void add_lift_tag(Monomial lead_mono, int lead_comp) {
    tags_mono_.push_back(std::move(lead_mono));
    tags_comp_.push_back(lead_comp);
  }

  int value_rank() const { return value_rank_; }
  int lift_rank() const { return static_cast<int>(tags_mono_.size()); }
  const RingPtr& ring() const { return ring_; }

  // three-way compare of module monomials; > 0 means a > b
  int cmp(const Monomial& am, int ac, const Monomial& bm, int bc) const;
  int cmp(const MTerm& a, const MTerm& b) const {
    return cmp(a.mono, a.comp, b.mono, b.comp);
  }

 private:
  RingPtr ring_;
  int value_rank_;
  std::vector<Monomial> tags_mono_;
  std::vector<int> tags_comp_;
};

// Buchberger engine over a free module (rank 1 = ideals).  Inputs may carry
// a lift block used for syzygy extraction and division certificates.
class GBEngine {
 public:
  // comp_twists: generator degrees of all components (value block, then
  // lift block); used for degree-driven pair selection and homogeneity
  // bookkeeping only.
  GBEngine(ModOrder order, std::vector<long> comp_twists,
           Deadline deadline = Deadline::none());

  void add_input(MVec v);

  // Run Buchberger to completion.  If track_syzygies, S-vectors reducing to
  // zero deposit their lift parts as pure syzygies in the basis.
  void run();

  // minimal, monic, auto-reduced basis, deterministically sorted
  std::vector<MVec> reduced_basis() const;
  // basis as computed (monic, minimal-lead, not tail-reduced)
  const std::vector<MVec>& raw_basis() const { return basis_; }

  MVec normal_form(MVec v) const;

  const ModOrder& order() const { return order_; }

 private:
  struct Pair {
    long deg;
    Monomial lcm;
    int i, j;
  };

  bool pair_less(const Pair& a, const Pair& b) const;
  MVec reduce_full(MVec v) const;
  int find_reducer(int comp, const Monomial& mono) const;
  void insert_element(MVec v);
  void make_pairs(int t);
  bool chain_criterion(const Pair& p) const;
  static uint64_t pair_key(int i, int j) {
    if (i > j) std::swap(i, j);
    return (uint64_t(uint32_t(i)) << 32) | uint32_t(j);
  }

  ModOrder order_;
  std::vector<long> comp_twists_;
  Deadline deadline_;
  std::vector<MVec> basis_;
  std::vector<Pair> queue_;  // heap by (deg, lcm, i, j), smallest first
  std::vector<std::vector<int>> by_comp_;  // basis indices by lead component
  std::vector<char> redundant_;
  // pairs already treated (popped or criterion-discarded)
  std::unordered_set<uint64_t> done_;
};

// --- module-level helpers -------------------------------------------------

MVec mvec_from_column(const std::vector<Polynomial>& col, const ModOrder& ord);
std::vector<Polynomial> mvec_to_column(const MVec& v, const RingPtr& ring,
                                       int rank);
MVec mvec_normalize(std::vector<MTerm> terms, const ModOrder& ord);
MVec mvec_sub_mult(const MVec& a, const MVec& b, const Monomial& m,
                   const Rational& c, const ModOrder& ord);
MVec mvec_scaled(const MVec& v, const Rational& c);
MVec mvec_primitive(const MVec& v);

// Kernel of the map F1 -> F0 given by M: returns a homogeneous matrix whose
// columns generate (indeed Groebner-generate, under the Schreyer order) the
// syzygies of the columns of M.
GradedMatrix syzygies(const GradedMatrix& M, Deadline deadline = Deadline::none());

// Membership + division certificate: expresses v as M * lambda, or nullopt
// when v is not in the column module of M.
std::optional<std::vector<Polynomial>> lift_through(
    const GradedMatrix& M, const std::vector<Polynomial>& v,
    Deadline deadline = Deadline::none());

}  // namespace freediv

#endif
