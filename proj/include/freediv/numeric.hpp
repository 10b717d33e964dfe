#ifndef FREEDIV_NUMERIC_HPP
#define FREEDIV_NUMERIC_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace freediv {

// Exact rational coefficients. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the invariant
// we need, so we use it directly.
using Integer  = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Computation exceeded its deadline.  Never a wrong answer: callers treat
// this as "unknown", not as a value.
class ResourceExhausted : public std::runtime_error {
 public:
  explicit ResourceExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace freediv

#endif
