#ifndef FREEDIV_POLYGCD_HPP
#define FREEDIV_POLYGCD_HPP

#include "freediv/ideal.hpp"
#include "freediv/polynomial.hpp"

namespace freediv {

// monic lcm: generator of (f) meet (g)
Polynomial poly_lcm(const Polynomial& f, const Polynomial& g,
                    Deadline deadline = Deadline::none());

// monic gcd via f g / lcm(f, g)
Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g,
                            Deadline deadline = Deadline::none());

// f / gcd(f, f_x1, ..., f_xn), monic; the reduced part of f (char 0)
Polynomial squarefree_part(const Polynomial& f,
                           Deadline deadline = Deadline::none());

}  // namespace freediv

#endif
