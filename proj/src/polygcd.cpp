#include "freediv/polygcd.hpp"

#include <stdexcept>

namespace freediv {

Polynomial poly_lcm(const Polynomial& f, const Polynomial& g,
                    Deadline deadline) {
  if (!same_ring(f.ring(), g.ring()))
    throw std::invalid_argument("lcm: mixed rings");
  const RingPtr& R = f.ring();
  if (f.is_zero() || g.is_zero()) return Polynomial(R);
  Ideal meet = ideal_intersect(Ideal(R, {f}), Ideal(R, {g}), deadline);
  const auto& gb = meet.groebner(deadline);
  if (gb.size() != 1)
    throw std::logic_error("lcm: intersection of principal ideals not principal");
  return gb[0].monic();
}

Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g,
                            Deadline deadline) {
  if (!same_ring(f.ring(), g.ring()))
    throw std::invalid_argument("gcd: mixed rings");
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("gcd(0, 0) undefined");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant())
    return Polynomial::constant(f.ring(), 1);
  Polynomial l = poly_lcm(f, g, deadline);
  auto q = (f * g).divided_by(l);
  if (!q) throw std::logic_error("gcd: lcm does not divide product");
  return q->monic();
}

Polynomial squarefree_part(const Polynomial& f, Deadline deadline) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part of zero");
  const RingPtr& R = f.ring();
  Polynomial g = f;
  for (int i = 0; i < R->arity(); ++i) {
    Polynomial fi = f.derivative(i);
    if (fi.is_zero()) continue;
    g = multivariate_gcd(g, fi, deadline);
    if (g.is_constant()) break;
  }
  auto q = f.divided_by(g);
  if (!q) throw std::logic_error("squarefree_part: gcd does not divide f");
  return q->monic();
}

}  // namespace freediv
