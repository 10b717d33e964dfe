#include "freediv/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace freediv {

Ring::Ring(std::vector<std::string> names, OrderSpec order,
           std::vector<int> weights)
    : names_(std::move(names)), order_(order), weights_(std::move(weights)) {
  if (names_.empty()) throw std::invalid_argument("ring needs >= 1 variable");
  std::set<std::string> uniq(names_.begin(), names_.end());
  if (uniq.size() != names_.size())
    throw std::invalid_argument("duplicate variable names");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size())
    throw std::invalid_argument("weight count != arity");
  for (int w : weights_)
    if (w < 1) throw std::invalid_argument("weights must be >= 1");
  if (order_.kind == OrderSpec::block &&
      (order_.split < 1 || order_.split >= arity()))
    throw std::invalid_argument("bad elimination split");
  standard_ = std::all_of(weights_.begin(), weights_.end(),
                          [](int w) { return w == 1; });
}

int Ring::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::vector<std::string> names, OrderSpec order,
                  std::vector<int> weights) {
  return std::make_shared<Ring>(std::move(names), order, std::move(weights));
}

// The cached degree is the plain exponent sum: it drives the monomial order
// and stays consistent under products/lcm.  Weighted degrees are a separate
// query against the ring.
Monomial::Monomial(std::vector<uint16_t> exps, const Ring& ring)
    : e_(std::move(exps)) {
  if (static_cast<int>(e_.size()) != ring.arity())
    throw std::invalid_argument("exponent vector length != arity");
  deg_ = 0;
  for (auto x : e_) deg_ += x;
}

Monomial Monomial::variable(int i, const Ring& ring) {
  Monomial m(ring.arity());
  m.e_[i] = 1;
  m.deg_ = 1;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_into(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r = *this;
  long deg = 0;
  for (size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] = std::max(e_[i], o.e_[i]);
    deg += r.e_[i];
  }
  r.deg_ = deg;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

long Monomial::degree_under(std::span<const int> weights) const {
  long d = 0;
  for (size_t i = 0; i < e_.size(); ++i)
    d += static_cast<long>(e_[i]) * weights[i];
  return d;
}

void Monomial::bump(int i, int by, const Ring&) {
  e_[i] = static_cast<uint16_t>(e_[i] + by);
  deg_ += by;
}

namespace {

// grevlex on a contiguous index range [lo, hi)
int grevlex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
  long da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int mono_cmp(const Monomial& a, const Monomial& b, const OrderSpec& order) {
  const int n = a.arity();
  switch (order.kind) {
    case OrderSpec::grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (int i = n - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    }
    case OrderSpec::lex:
      return lex_cmp(a, b, 0, n);
    case OrderSpec::block: {
      if (int c = grevlex_cmp(a, b, 0, order.split)) return c;
      return grevlex_cmp(a, b, order.split, n);
    }
  }
  return 0;
}

std::string mono_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (int i = 0; i < ring.arity(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += ring.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace freediv
