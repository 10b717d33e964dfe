#ifndef FREEDIV_RING_HPP
#define FREEDIV_RING_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "freediv/numeric.hpp"

namespace freediv {

// Monomial order tag.  Block orders eliminate the first `split` variables:
// any monomial involving those variables is larger than any monomial that
// does not, so the GB elements free of the first block generate the
// elimination ideal.
struct OrderSpec {
  enum Kind { grevlex, lex, block } kind = grevlex;
  int split = 0;  // only for block: number of leading variables to eliminate

  static OrderSpec Grevlex() { return {grevlex, 0}; }
  static OrderSpec Lex() { return {lex, 0}; }
  static OrderSpec Block(int split) { return {block, split}; }

  bool operator==(const OrderSpec& o) const {
    return kind == o.kind && (kind != block || split == o.split);
  }
};

// Describes a graded polynomial ring k[x_1..x_n] with a monomial order and
// per-variable positive weights (all 1 = standard grading).
class Ring {
 public:
  Ring(std::vector<std::string> names, OrderSpec order = OrderSpec::Grevlex(),
       std::vector<int> weights = {});

  int arity() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  const OrderSpec& order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_graded() const { return standard_; }

  // Index of a variable name, -1 when absent.
  int index_of(const std::string& name) const;

  bool same_as(const Ring& other) const {
    return this == &other ||
           (names_ == other.names_ && order_ == other.order_ &&
            weights_ == other.weights_);
  }

 private:
  std::vector<std::string> names_;
  OrderSpec order_;
  std::vector<int> weights_;
  bool standard_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names,
                  OrderSpec order = OrderSpec::Grevlex(),
                  std::vector<int> weights = {});

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

// Exponent vector of fixed length = ring arity, with the total (weighted)
// degree cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int arity) : e_(arity, 0), deg_(0) {}
  Monomial(std::vector<uint16_t> exps, const Ring& ring);

  int arity() const { return static_cast<int>(e_.size()); }
  uint16_t operator[](int i) const { return e_[i]; }
  const std::vector<uint16_t>& exponents() const { return e_; }
  // plain exponent sum; this is what the graded orders compare
  long degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  static Monomial variable(int i, const Ring& ring);

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // quotient o_this / o; caller must ensure divisibility
  Monomial quotient_into(const Monomial& o) const;  // returns *this / o
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // degree under an arbitrary weight vector (used for bihomogeneity checks)
  long degree_under(std::span<const int> weights) const;

  void bump(int i, int by, const Ring& ring);

 private:
  std::vector<uint16_t> e_;
  long deg_ = 0;

  friend int mono_cmp(const Monomial&, const Monomial&, const OrderSpec&);
};

// Three-way compare under the given order; > 0 means a > b.
int mono_cmp(const Monomial& a, const Monomial& b, const OrderSpec& order);

std::string mono_to_string(const Monomial& m, const Ring& ring);

}  // namespace freediv

#endif
