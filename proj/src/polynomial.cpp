#include "freediv/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace freediv {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw std::invalid_argument("polynomials live in different rings");
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
  Polynomial p(ring);
  if (!freediv::is_zero(c)) p.terms_.push_back({Monomial(ring->arity()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  if (i < 0 || i >= ring->arity())
    throw std::invalid_argument("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(i, *ring), Rational(1)});
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Rational c) {
  Polynomial p(ring);
  if (!freediv::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.front();
}

long Polynomial::degree() const {
  if (terms_.empty()) return -1;
  long d = -1;
  for (const Term& t : terms_)
    d = std::max(d, t.mono.degree_under(ring_->weights()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  return homogeneous_degree().has_value();
}

std::optional<long> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;  // zero is homogeneous of every degree
  long d = terms_[0].mono.degree_under(ring_->weights());
  for (const Term& t : terms_)
    if (t.mono.degree_under(ring_->weights()) != d) return std::nullopt;
  return d;
}

bool Polynomial::is_homogeneous_under(std::span<const int> weights) const {
  if (terms_.empty()) return true;
  long d = terms_[0].mono.degree_under(weights);
  for (const Term& t : terms_)
    if (t.mono.degree_under(weights) != d) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(*this, o);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  const OrderSpec& ord = ring_->order();
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(terms_[i].mono, o.terms_[j].mono, ord);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (!freediv::is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(*this, o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  // accumulate in an order-keyed map; fine at the sizes we handle
  const OrderSpec& ord = ring_->order();
  auto cmp = [&ord](const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b, ord) > 0;  // descending
  };
  std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
  for (const Term& s : terms_) {
    for (const Term& t : o.terms_) {
      Monomial m = s.mono * t.mono;
      Rational c = s.coeff * t.coeff;
      auto [it, fresh] = acc.emplace(std::move(m), c);
      if (!fresh) {
        it->second += c;
        if (freediv::is_zero(it->second)) acc.erase(it);
      }
    }
  }
  Polynomial r(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (freediv::is_zero(c)) return Polynomial(ring_);
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (freediv::is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial r = Polynomial::constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) r *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= ring_->arity())
    throw std::invalid_argument("variable index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    int e = t.mono[var];
    if (!e) continue;
    Monomial m = t.mono;
    m.bump(var, -1, *ring_);
    out.push_back({std::move(m), t.coeff * e});
  }
  // descending order is preserved termwise only up to collisions: there are
  // none, since m -> m/x_var is injective on monomials containing x_var
  Polynomial r(ring_);
  r.terms_ = std::move(out);
  std::sort(r.terms_.begin(), r.terms_.end(), [this](const Term& a, const Term& b) {
    return mono_cmp(a.mono, b.mono, ring_->order()) > 0;
  });
  return r;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::map<int, Polynomial>& images) const {
  for (const auto& [i, img] : images) {
    if (i < 0 || i >= ring_->arity())
      throw std::invalid_argument("substitute: variable index out of range");
    if (!same_ring(img.ring(), target))
      throw std::invalid_argument("substitute: image in wrong ring");
  }
  // per-variable image, resolved once
  std::vector<Polynomial> image(ring_->arity());
  std::vector<char> used(ring_->arity(), 0);
  for (const Term& t : terms_)
    for (int i = 0; i < ring_->arity(); ++i)
      if (t.mono[i]) used[i] = 1;
  for (int i = 0; i < ring_->arity(); ++i) {
    if (!used[i]) continue;
    auto it = images.find(i);
    if (it != images.end()) {
      image[i] = it->second;
    } else {
      int j = target->index_of(ring_->name(i));
      if (j < 0)
        throw std::invalid_argument("substitute: no image for variable " +
                                    ring_->name(i));
      image[i] = Polynomial::variable(target, j);
    }
  }
  Polynomial acc(target);
  for (const Term& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (int i = 0; i < ring_->arity(); ++i)
      if (t.mono[i]) prod *= image[i].pow(t.mono[i]);
    acc += prod;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading_coeff());
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den(1), num(0);
  for (const Term& t : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  for (const Term& t : terms_) {
    Integer scaled_num = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled_num.get_mpz_t());
  }
  Rational scale(den, num);  // canonicalized by assignment below
  scale.canonicalize();
  if (sgn(leading_coeff()) < 0) scale = -scale;
  return scaled(scale);
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& g) const {
  require_same_ring(*this, g);
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Polynomial rem = *this;
  Polynomial quo(ring_);
  const Monomial& glm = g.leading_monomial();
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!glm.divides(lt.mono)) return std::nullopt;
    Monomial q = lt.mono.quotient_into(glm);
    Rational c = lt.coeff / g.leading_coeff();
    quo.terms_.push_back({q, c});
    rem -= g.times_term(q, c);
  }
  return quo;
}

bool Polynomial::proportional_to(const Polynomial& o, Rational* scale) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (terms_.size() != o.terms_.size()) return false;
  Rational c = terms_[0].coeff / o.terms_[0].coeff;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono ||
        terms_[i].coeff != o.terms_[i].coeff * c)
      return false;
  if (scale) *scale = c;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Rational c = t.coeff;
    if (i == 0) {
      if (sgn(c) < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    std::string mono = mono_to_string(t.mono, *ring_);
    if (mono == "1") {
      s += freediv::to_string(c);
    } else if (is_one(c)) {
      s += mono;
    } else {
      s += freediv::to_string(c) + "*" + mono;
    }
  }
  return s;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const OrderSpec& ord = ring->order();
  std::sort(terms.begin(), terms.end(), [&ord](const Term& a, const Term& b) {
    return mono_cmp(a.mono, b.mono, ord) > 0;
  });
  Polynomial p(ring);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (freediv::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!freediv::is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial arithmetic(const Polynomial& a, const Polynomial& b, ArithKind k) {
  switch (k) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
  }
  throw std::logic_error("unreachable");
}

Polynomial partial_derivative(const Polynomial& f, int var) {
  return f.derivative(var);
}

bool euler_check(const Polynomial& f) {
  auto deg = f.homogeneous_degree();
  if (!deg) throw std::invalid_argument("euler_check needs homogeneous input");
  const RingPtr& R = f.ring();
  Polynomial acc(R);
  for (int i = 0; i < R->arity(); ++i)
    acc += Polynomial::variable(R, i) * f.derivative(i);
  // for weighted gradings Euler reads sum w_i x_i f_{x_i} = deg f; we only
  // certify the standard-graded form
  if (!R->standard_graded())
    throw std::invalid_argument("euler_check assumes standard grading");
  return acc == f.scaled(Rational(*deg));
}

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> g;
  g.reserve(f.ring()->arity());
  for (int i = 0; i < f.ring()->arity(); ++i) g.push_back(f.derivative(i));
  return g;
}

}  // namespace freediv
