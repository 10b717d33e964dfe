#ifndef FREEDIV_POLYNOMIAL_HPP
#define FREEDIV_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freediv/ring.hpp"

namespace freediv {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in strictly descending ring order with no zero
// coefficients, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, Rational c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial term(RingPtr ring, Monomial m, Rational c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  // weighted total degree; -1 for the zero polynomial
  long degree() const;
  bool is_homogeneous() const;
  std::optional<long> homogeneous_degree() const;
  // homogeneity under an arbitrary weight vector (bigrading checks)
  bool is_homogeneous_under(std::span<const int> weights) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(int e) const;

  friend Polynomial operator*(const Polynomial& p, const Rational& c) {
    return p.scaled(c);
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    return p.scaled(c);
  }

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative(int var) const;

  // Ring-homomorphism image.  Unmapped variables go to the same-named
  // variable of the target ring; an unmapped variable with no counterpart
  // in the target is an error.
  Polynomial substitute(const RingPtr& target,
                        const std::map<int, Polynomial>& images) const;

  // Monic normalization (leading coefficient 1).  Scalars that matter (e.g.
  // Saito's lambda) are reported by callers, never hidden here.
  Polynomial monic() const;
  // integer-primitive scaling: clears denominators, divides by content,
  // makes the leading coefficient positive
  Polynomial primitive() const;

  // exact division: returns f/g when the division algorithm leaves zero
  // remainder, nullopt otherwise
  std::optional<Polynomial> divided_by(const Polynomial& g) const;
  // true iff *this = c * o for some nonzero scalar c (reported via *scale)
  bool proportional_to(const Polynomial& o, Rational* scale = nullptr) const;

  std::string to_string() const;

  // builder: accumulate unsorted (monomial, coeff) pairs, then normalize
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithKind { add, sub, mul };
Polynomial arithmetic(const Polynomial& a, const Polynomial& b, ArithKind k);

Polynomial partial_derivative(const Polynomial& f, int var);

// Euler's identity sum x_i f_{x_i} = deg(f) f; throws on non-homogeneous
// input.
bool euler_check(const Polynomial& f);

std::vector<Polynomial> gradient(const Polynomial& f);

}  // namespace freediv

#endif
