#ifndef FREEDIV_IDEAL_HPP
#define FREEDIV_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "freediv/deadline.hpp"
#include "freediv/module.hpp"
#include "freediv/polynomial.hpp"

namespace freediv {

struct DimensionReport {
  int krull_dimension;  // of R/I; -1 for the unit ideal
  int height;           // arity - dimension
};

// Ideal with a lazily computed, shared, reduced Groebner basis.  Values are
// immutable; the cache is filled once under a lock, so concurrent readers
// see either nothing or the final basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  const RingPtr& ring() const { return data_->ring; }
  const std::vector<Polynomial>& generators() const { return data_->gens; }

  // reduced Groebner basis: monic, auto-reduced, sorted by (degree, leading
  // monomial); cached
  const std::vector<Polynomial>& groebner(
      Deadline deadline = Deadline::none()) const;

  bool is_zero_ideal() const;
  bool is_unit_ideal(Deadline deadline = Deadline::none()) const;

 private:
  struct Data {
    RingPtr ring;
    std::vector<Polynomial> gens;
    mutable std::mutex lock;
    mutable std::optional<std::vector<Polynomial>> gb;
  };
  std::shared_ptr<Data> data_;
};

// Division-algorithm remainder of f against an arbitrary basis list (first
// divisor in list order wins).  No Groebner assumption.
Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       Deadline deadline = Deadline::none());

bool ideal_membership(const Polynomial& f, const Ideal& I,
                      Deadline deadline = Deadline::none());

// zero-test reduction with intermediate primitive scaling; cheaper than
// normal_form when only membership matters
bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& basis,
                     Deadline deadline = Deadline::none());

// generators of I intersected with k[keep]; result lives in the same ring
Ideal eliminate(const Ideal& I, const std::vector<int>& keep,
                Deadline deadline = Deadline::none());

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J,
                      Deadline deadline = Deadline::none());

// I : J = {f : fJ in I}
Ideal colon(const Ideal& I, const Ideal& J,
            Deadline deadline = Deadline::none());

// I : J^infinity.  Computed as the intersection over generators g of J of
// the principal saturations I : g^infinity, each via the Rabinowitsch trick
// (adjoin y, add 1 - y g, eliminate y).
Ideal saturate(const Ideal& I, const Ideal& J,
               Deadline deadline = Deadline::none());

// ordinary power with a graded-minimal generator list
Ideal ideal_power(const Ideal& I, int m, Deadline deadline = Deadline::none());

DimensionReport dimension(const Ideal& I, Deadline deadline = Deadline::none());

bool ideal_equal(const Ideal& I, const Ideal& J,
                 Deadline deadline = Deadline::none());
bool ideal_contains(const Ideal& I, const Ideal& J,
                    Deadline deadline = Deadline::none());

// graded-minimal generating subset (input need not be minimal)
std::vector<Polynomial> minimal_generators(const Ideal& I,
                                           Deadline deadline = Deadline::none());

// map an ideal's generators into another ring by variable name
Ideal transport(const Ideal& I, const RingPtr& target);
Polynomial transport(const Polynomial& f, const RingPtr& target);

// brute-force Krull dimension of a monomial ideal given by lead supports;
// independent-set oracle used both by dimension() and the tests
int max_independent_set(const std::vector<uint32_t>& supports, int arity);

}  // namespace freediv

#endif
