#include "freediv/ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace freediv {

namespace {

MVec poly_to_mvec(const Polynomial& p) {
  MVec v;
  v.terms.reserve(p.term_count());
  for (const Term& t : p.terms()) v.terms.push_back({t.mono, 0, t.coeff});
  return v;
}

Polynomial mvec_to_poly(const MVec& v, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(v.terms.size());
  for (const MTerm& t : v.terms) terms.push_back({t.mono, t.coeff});
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> reduced_groebner(const RingPtr& ring,
                                         const std::vector<Polynomial>& gens,
                                         Deadline deadline) {
  ModOrder ord(ring, 1);
  GBEngine engine(ord, {0}, deadline);
  for (const Polynomial& g : gens)
    if (!g.is_zero()) engine.add_input(poly_to_mvec(g));
  engine.run();
  std::vector<Polynomial> out;
  for (const MVec& v : engine.reduced_basis())
    out.push_back(mvec_to_poly(v, ring));
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) {
  data_ = std::make_shared<Data>();
  data_->ring = std::move(ring);
  for (Polynomial& g : gens) {
    if (!same_ring(g.ring(), data_->ring))
      throw std::invalid_argument("ideal generator in wrong ring");
    if (!g.is_zero()) data_->gens.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner(Deadline deadline) const {
  std::lock_guard<std::mutex> hold(data_->lock);
  if (!data_->gb)
    data_->gb = reduced_groebner(data_->ring, data_->gens, deadline);
  return *data_->gb;
}

bool Ideal::is_zero_ideal() const { return data_->gens.empty(); }

bool Ideal::is_unit_ideal(Deadline deadline) const {
  const auto& gb = groebner(deadline);
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       Deadline deadline) {
  if (f.is_zero()) return f;
  const RingPtr& R = f.ring();
  for (const Polynomial& b : basis)
    if (!same_ring(b.ring(), R))
      throw std::invalid_argument("normal_form: mixed rings");
  ModOrder ord(R, 1);
  // direct division: no engine, first divisor in list order
  MVec rem;
  MVec work = poly_to_mvec(f);
  long steps = 0;
  while (!work.is_zero()) {
    if (((++steps) & 0xff) == 0) deadline.check("normal_form");
    const MTerm& lt = work.lead();
    const Polynomial* reducer = nullptr;
    for (const Polynomial& b : basis) {
      if (!b.is_zero() && b.leading_monomial().divides(lt.mono)) {
        reducer = &b;
        break;
      }
    }
    if (!reducer) {
      rem.terms.push_back(lt);
      work.terms.erase(work.terms.begin());
      continue;
    }
    Monomial q = lt.mono.quotient_into(reducer->leading_monomial());
    Rational c = lt.coeff / reducer->leading_coeff();
    work = mvec_sub_mult(work, poly_to_mvec(*reducer), q, c, ord);
  }
  return mvec_to_poly(rem, R);
}

bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& basis,
                     Deadline deadline) {
  if (f.is_zero()) return true;
  const RingPtr& R = f.ring();
  ModOrder ord(R, 1);
  MVec work = poly_to_mvec(f);
  long steps = 0;
  while (!work.is_zero()) {
    if (((++steps) & 0x3f) == 0) {
      deadline.check("reduces_to_zero");
      // scaling is free for a zero test and stops coefficient blowup
      work = mvec_primitive(work);
    }
    const MTerm& lt = work.lead();
    const Polynomial* reducer = nullptr;
    for (const Polynomial& b : basis)
      if (!b.is_zero() && b.leading_monomial().divides(lt.mono)) {
        reducer = &b;
        break;
      }
    if (!reducer) return false;
    Monomial q = lt.mono.quotient_into(reducer->leading_monomial());
    Rational c = lt.coeff / reducer->leading_coeff();
    work = mvec_sub_mult(work, poly_to_mvec(*reducer), q, c, ord);
  }
  return true;
}

bool ideal_membership(const Polynomial& f, const Ideal& I, Deadline deadline) {
  if (!same_ring(f.ring(), I.ring()))
    throw std::invalid_argument("membership: mixed rings");
  if (f.is_zero()) return true;
  return reduces_to_zero(f, I.groebner(deadline), deadline);
}

Polynomial transport(const Polynomial& f, const RingPtr& target) {
  return f.substitute(target, {});
}

Ideal transport(const Ideal& I, const RingPtr& target) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators())
    gens.push_back(transport(g, target));
  return Ideal(target, std::move(gens));
}

Ideal eliminate(const Ideal& I, const std::vector<int>& keep,
                Deadline deadline) {
  const RingPtr& R = I.ring();
  std::vector<char> kept(R->arity(), 0);
  for (int i : keep) {
    if (i < 0 || i >= R->arity())
      throw std::invalid_argument("eliminate: bad variable index");
    kept[i] = 1;
  }
  std::vector<std::string> names;
  int ndrop = 0;
  for (int i = 0; i < R->arity(); ++i)
    if (!kept[i]) {
      names.push_back(R->name(i));
      ++ndrop;
    }
  if (ndrop == 0) return I;
  for (int i = 0; i < R->arity(); ++i)
    if (kept[i]) names.push_back(R->name(i));
  RingPtr E = make_ring(names, OrderSpec::Block(ndrop));
  Ideal IE = transport(I, E);
  std::vector<Polynomial> kept_gens;
  for (const Polynomial& g : IE.groebner(deadline)) {
    bool pure = true;
    for (const Term& t : g.terms())
      for (int i = 0; i < ndrop && pure; ++i)
        if (t.mono[i]) pure = false;
    if (pure) kept_gens.push_back(transport(g, R));
  }
  return Ideal(R, std::move(kept_gens));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("ideal_sum: mixed rings");
  std::vector<Polynomial> gens = I.generators();
  for (const Polynomial& g : J.generators()) gens.push_back(g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("ideal_product: mixed rings");
  std::vector<Polynomial> gens;
  for (const Polynomial& a : I.generators())
    for (const Polynomial& b : J.generators()) gens.push_back(a * b);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J, Deadline deadline) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("intersect: mixed rings");
  const RingPtr& R = I.ring();
  // t I + (1-t) J, then eliminate t
  std::vector<std::string> names{"@t"};
  for (const auto& n : R->names()) names.push_back(n);
  RingPtr E = make_ring(names, OrderSpec::Block(1));
  Polynomial t = Polynomial::variable(E, 0);
  Polynomial one = Polynomial::constant(E, 1);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(t * transport(g, E));
  for (const Polynomial& g : J.generators())
    gens.push_back((one - t) * transport(g, E));
  Ideal big(E, std::move(gens));
  std::vector<Polynomial> out;
  for (const Polynomial& g : big.groebner(deadline)) {
    bool pure = true;
    for (const Term& term : g.terms())
      if (term.mono[0]) pure = false;
    if (pure) out.push_back(transport(g, R));
  }
  return Ideal(R, std::move(out));
}

namespace {

// I : g for a single nonzero g, via (I meet (g)) / g
Ideal colon_principal(const Ideal& I, const Polynomial& g, Deadline deadline) {
  Ideal meet = ideal_intersect(I, Ideal(I.ring(), {g}), deadline);
  std::vector<Polynomial> out;
  for (const Polynomial& h : meet.generators()) {
    auto q = h.divided_by(g);
    if (!q) throw std::logic_error("colon: intersection not divisible");
    out.push_back(std::move(*q));
  }
  return Ideal(I.ring(), std::move(out));
}

// I : g^infinity via Rabinowitsch: adjoin y, add 1 - y g, eliminate y
Ideal saturate_principal(const Ideal& I, const Polynomial& g,
                         Deadline deadline) {
  const RingPtr& R = I.ring();
  std::vector<std::string> names{"@y"};
  for (const auto& n : R->names()) names.push_back(n);
  RingPtr E = make_ring(names, OrderSpec::Block(1));
  std::vector<Polynomial> gens;
  for (const Polynomial& h : I.generators()) gens.push_back(transport(h, E));
  gens.push_back(Polynomial::constant(E, 1) -
                 Polynomial::variable(E, 0) * transport(g, E));
  Ideal big(E, std::move(gens));
  std::vector<Polynomial> out;
  for (const Polynomial& h : big.groebner(deadline)) {
    bool pure = true;
    for (const Term& term : h.terms())
      if (term.mono[0]) pure = false;
    if (pure) out.push_back(transport(h, R));
  }
  return Ideal(R, std::move(out));
}

}  // namespace

Ideal colon(const Ideal& I, const Ideal& J, Deadline deadline) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("colon: mixed rings");
  if (J.is_zero_ideal())
    return Ideal(I.ring(), {Polynomial::constant(I.ring(), 1)});
  std::optional<Ideal> acc;
  for (const Polynomial& g : J.generators()) {
    Ideal piece = colon_principal(I, g, deadline);
    acc = acc ? ideal_intersect(*acc, piece, deadline) : piece;
  }
  return *acc;
}

Ideal saturate(const Ideal& I, const Ideal& J, Deadline deadline) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("saturate: mixed rings");
  if (J.is_zero_ideal()) throw std::invalid_argument("saturate by zero ideal");
  // I : J^inf = intersection over generators of the principal saturations
  std::optional<Ideal> acc;
  for (const Polynomial& g : J.generators()) {
    if (g.is_constant()) return I;  // unit generator saturates to I itself
    Ideal piece = saturate_principal(I, g, deadline);
    acc = acc ? ideal_intersect(*acc, piece, deadline) : piece;
  }
  return *acc;
}

std::vector<Polynomial> minimal_generators(const Ideal& I, Deadline deadline) {
  std::vector<Polynomial> cand;
  for (const Polynomial& g : I.generators())
    if (!g.is_zero()) cand.push_back(g);
  std::sort(cand.begin(), cand.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return mono_cmp(a.leading_monomial(), b.leading_monomial(),
                    a.ring()->order()) < 0;
  });
  const RingPtr& R = I.ring();
  ModOrder ord(R, 1);
  GBEngine engine(ord, {0}, deadline);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : cand) {
    if (!engine.normal_form(poly_to_mvec(g)).is_zero()) {
      kept.push_back(g);
      engine.add_input(poly_to_mvec(g));
      engine.run();
    }
  }
  return kept;
}

Ideal ideal_power(const Ideal& I, int m, Deadline deadline) {
  if (m < 1) throw std::invalid_argument("ideal_power: m must be >= 1");
  const auto& gens = I.generators();
  if (gens.empty()) return I;
  // all m-fold products of generators (combinations with repetition)
  std::vector<Polynomial> prods;
  std::vector<int> pick(m, 0);
  while (true) {
    deadline.check("ideal_power");
    Polynomial p = gens[pick[0]];
    for (int i = 1; i < m; ++i) p *= gens[pick[i]];
    prods.push_back(std::move(p));
    int i = m - 1;
    while (i >= 0 && pick[i] == static_cast<int>(gens.size()) - 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[i];
  }
  Ideal raw(I.ring(), std::move(prods));
  return Ideal(I.ring(), minimal_generators(raw, deadline));
}

int max_independent_set(const std::vector<uint32_t>& supports, int arity) {
  // subset S of variables is independent iff no support is contained in S
  for (uint32_t s : supports)
    if (s == 0) return -1;  // unit ideal: no independent set at all
  int best = -1;
  uint32_t full = arity >= 32 ? ~uint32_t(0) : ((uint32_t(1) << arity) - 1);
  auto independent = [&](uint32_t mask) {
    for (uint32_t s : supports)
      if ((s & ~mask) == 0) return false;
    return true;
  };
  // exhaustive over subsets; arity stays small in this artifact
  for (uint32_t mask = 0;; ++mask) {
    if (independent(mask)) {
      int size = __builtin_popcount(mask);
      if (size > best) best = size;
    }
    if (mask == full) break;
  }
  return best;
}

DimensionReport dimension(const Ideal& I, Deadline deadline) {
  const RingPtr& R = I.ring();
  if (R->arity() > 24)
    throw std::invalid_argument("dimension: too many variables");
  std::vector<uint32_t> supports;
  for (const Polynomial& g : I.groebner(deadline)) {
    uint32_t s = 0;
    for (int i = 0; i < R->arity(); ++i)
      if (g.leading_monomial()[i]) s |= uint32_t(1) << i;
    supports.push_back(s);
  }
  int dim = supports.empty() ? R->arity()
                             : max_independent_set(supports, R->arity());
  return {dim, R->arity() - dim};
}

bool ideal_equal(const Ideal& I, const Ideal& J, Deadline deadline) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("ideal_equal: mixed rings");
  const auto& a = I.groebner(deadline);
  const auto& b = J.groebner(deadline);
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool ideal_contains(const Ideal& I, const Ideal& J, Deadline deadline) {
  for (const Polynomial& g : J.generators())
    if (!ideal_membership(g, I, deadline)) return false;
  return true;
}

}  // namespace freediv
