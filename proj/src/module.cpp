#include "freediv/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace freediv {

int ModOrder::cmp(const Monomial& am, int ac, const Monomial& bm,
                  int bc) const {
  const bool a_lift = ac >= value_rank_;
  const bool b_lift = bc >= value_rank_;
  if (a_lift != b_lift) return a_lift ? -1 : 1;  // value block dominates
  if (!a_lift) {
    if (int c = mono_cmp(am, bm, ring_->order())) return c;
    if (ac != bc) return ac < bc ? 1 : -1;  // lower component wins
    return 0;
  }
  // Schreyer: compare m * lead(parent) under the value-block order
  const int ia = ac - value_rank_, ib = bc - value_rank_;
  const Monomial pa = am * tags_mono_[ia];
  const Monomial pb = bm * tags_mono_[ib];
  if (int c = mono_cmp(pa, pb, ring_->order())) return c;
  if (tags_comp_[ia] != tags_comp_[ib])
    return tags_comp_[ia] < tags_comp_[ib] ? 1 : -1;
  if (ac != bc) return ac < bc ? 1 : -1;
  return 0;
}

MVec mvec_normalize(std::vector<MTerm> terms, const ModOrder& ord) {
  std::sort(terms.begin(), terms.end(),
            [&ord](const MTerm& a, const MTerm& b) { return ord.cmp(a, b) > 0; });
  MVec v;
  for (MTerm& t : terms) {
    if (is_zero(t.coeff)) continue;
    if (!v.terms.empty() && v.terms.back().comp == t.comp &&
        v.terms.back().mono == t.mono) {
      v.terms.back().coeff += t.coeff;
      if (is_zero(v.terms.back().coeff)) v.terms.pop_back();
    } else {
      v.terms.push_back(std::move(t));
    }
  }
  return v;
}

MVec mvec_from_column(const std::vector<Polynomial>& col, const ModOrder& ord) {
  std::vector<MTerm> terms;
  for (size_t i = 0; i < col.size(); ++i)
    for (const Term& t : col[i].terms())
      terms.push_back({t.mono, static_cast<int>(i), t.coeff});
  return mvec_normalize(std::move(terms), ord);
}

std::vector<Polynomial> mvec_to_column(const MVec& v, const RingPtr& ring,
                                       int rank) {
  std::vector<std::vector<Term>> per(rank);
  for (const MTerm& t : v.terms) {
    if (t.comp < 0 || t.comp >= rank)
      throw std::logic_error("component out of range");
    per[t.comp].push_back({t.mono, t.coeff});
  }
  std::vector<Polynomial> col;
  col.reserve(rank);
  for (int i = 0; i < rank; ++i)
    col.push_back(Polynomial::from_terms(ring, std::move(per[i])));
  return col;
}

MVec mvec_scaled(const MVec& v, const Rational& c) {
  MVec r = v;
  for (MTerm& t : r.terms) t.coeff *= c;
  return r;
}

MVec mvec_primitive(const MVec& v) {
  if (v.is_zero()) return v;
  Integer den(1), num(0);
  for (const MTerm& t : v.terms)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  for (const MTerm& t : v.terms) {
    Integer n = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(v.terms.front().coeff) < 0) scale = -scale;
  return mvec_scaled(v, scale);
}

MVec mvec_sub_mult(const MVec& a, const MVec& b, const Monomial& m,
                   const Rational& c, const ModOrder& ord) {
  std::vector<MTerm> terms = a.terms;
  for (const MTerm& t : b.terms)
    terms.push_back({t.mono * m, t.comp, -c * t.coeff});
  return mvec_normalize(std::move(terms), ord);
}

namespace {

// Geobucket accumulator for long reductions: terms are spread over sorted
// levels of geometrically growing capacity; the true leading term is
// assembled across levels on pop.
class Bucket {
 public:
  explicit Bucket(const ModOrder& ord) : ord_(ord) {}

  void push(std::vector<MTerm> v) {
    if (v.empty()) return;
    size_t lvl = 0;
    while (cap(lvl) < v.size()) ++lvl;
    while (true) {
      if (lvl >= levels_.size()) levels_.resize(lvl + 1);
      Level& L = levels_[lvl];
      if (L.empty()) {
        L.terms = std::move(v);
        L.pos = 0;
        return;
      }
      v = merge(L, v);
      L.terms.clear();
      L.pos = 0;
      if (v.size() <= cap(lvl)) {
        L.terms = std::move(v);
        return;
      }
      ++lvl;
    }
  }

  std::optional<MTerm> pop_lead() {
    while (true) {
      int best = -1;
      for (size_t l = 0; l < levels_.size(); ++l) {
        if (levels_[l].empty()) continue;
        if (best < 0 || ord_.cmp(levels_[l].head(), levels_[best].head()) > 0)
          best = static_cast<int>(l);
      }
      if (best < 0) return std::nullopt;
      MTerm t = levels_[best].head();
      ++levels_[best].pos;
      for (size_t l = 0; l < levels_.size(); ++l) {
        if (levels_[l].empty()) continue;
        const MTerm& h = levels_[l].head();
        if (h.comp == t.comp && h.mono == t.mono) {
          t.coeff += h.coeff;
          ++levels_[l].pos;
        }
      }
      if (!is_zero(t.coeff)) return t;
    }
  }

 private:
  struct Level {
    std::vector<MTerm> terms;
    size_t pos = 0;
    bool empty() const { return pos >= terms.size(); }
    const MTerm& head() const { return terms[pos]; }
  };

  static size_t cap(size_t lvl) { return size_t(8) << (2 * lvl); }

  std::vector<MTerm> merge(const Level& a, std::vector<MTerm>& b) {
    std::vector<MTerm> out;
    out.reserve(a.terms.size() - a.pos + b.size());
    size_t i = a.pos, j = 0;
    while (i < a.terms.size() && j < b.size()) {
      int c = ord_.cmp(a.terms[i], b[j]);
      if (c > 0) {
        out.push_back(a.terms[i++]);
      } else if (c < 0) {
        out.push_back(std::move(b[j++]));
      } else {
        Rational s = a.terms[i].coeff + b[j].coeff;
        if (!is_zero(s))
          out.push_back({a.terms[i].mono, a.terms[i].comp, std::move(s)});
        ++i, ++j;
      }
    }
    for (; i < a.terms.size(); ++i) out.push_back(a.terms[i]);
    for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
    return out;
  }

  const ModOrder& ord_;
  std::vector<Level> levels_;
};

std::vector<MTerm> scaled_shifted_tail(const MVec& g, const Monomial& q,
                                       const Rational& c, bool drop_lead) {
  std::vector<MTerm> out;
  size_t from = drop_lead ? 1 : 0;
  out.reserve(g.terms.size() - from);
  for (size_t i = from; i < g.terms.size(); ++i)
    out.push_back({g.terms[i].mono * q, g.terms[i].comp,
                   -c * g.terms[i].coeff});
  return out;
}

}  // namespace

GBEngine::GBEngine(ModOrder order, std::vector<long> comp_twists,
                   Deadline deadline)
    : order_(std::move(order)),
      comp_twists_(std::move(comp_twists)),
      deadline_(deadline) {
  by_comp_.resize(order_.value_rank() + order_.lift_rank());
}

bool GBEngine::pair_less(const Pair& a, const Pair& b) const {
  if (a.deg != b.deg) return a.deg < b.deg;
  if (int c = mono_cmp(a.lcm, b.lcm, order_.ring()->order())) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

void GBEngine::add_input(MVec v) {
  if (v.is_zero()) return;
  v = reduce_full(std::move(v));
  if (!v.is_zero()) insert_element(mvec_primitive(v));
}

MVec GBEngine::reduce_full(MVec v) const {
  Bucket bucket(order_);
  bucket.push(std::move(v.terms));
  std::vector<MTerm> out;
  long steps = 0;
  while (auto t = bucket.pop_lead()) {
    if (((++steps) & 0x3ff) == 0) deadline_.check("groebner reduction");
    int reducer = find_reducer(t->comp, t->mono);
    if (reducer < 0) {
      out.push_back(std::move(*t));
      continue;
    }
    const MVec& g = basis_[reducer];
    Monomial q = t->mono.quotient_into(g.lead().mono);
    Rational c = t->coeff / g.lead().coeff;
    bucket.push(scaled_shifted_tail(g, q, c, /*drop_lead=*/true));
  }
  return MVec{std::move(out)};
}

int GBEngine::find_reducer(int comp, const Monomial& mono) const {
  for (int idx : by_comp_[comp])
    if (basis_[idx].lead().mono.divides(mono)) return idx;
  return -1;
}

void GBEngine::insert_element(MVec v) {
  int t = static_cast<int>(basis_.size());
  int comp = v.lead().comp;
  for (int idx : by_comp_[comp])
    if (!redundant_[idx] && v.lead().mono.divides(basis_[idx].lead().mono))
      redundant_[idx] = 1;
  basis_.push_back(std::move(v));
  redundant_.push_back(0);
  by_comp_[comp].push_back(t);
  make_pairs(t);
}

void GBEngine::make_pairs(int t) {
  const MTerm& lt = basis_[t].lead();
  for (int s = 0; s < t; ++s) {
    if (basis_[s].lead().comp != lt.comp) continue;
    Monomial L = basis_[s].lead().mono.lcm(lt.mono);
    long deg = L.degree() + comp_twists_[lt.comp];
    queue_.push_back({deg, std::move(L), s, t});
    std::push_heap(queue_.begin(), queue_.end(),
                   [this](const Pair& a, const Pair& b) { return pair_less(b, a); });
  }
}

bool GBEngine::chain_criterion(const Pair& p) const {
  const int comp = basis_[p.i].lead().comp;
  for (int k : by_comp_[comp]) {
    if (k == p.i || k == p.j) continue;
    if (!basis_[k].lead().mono.divides(p.lcm)) continue;
    if (done_.count(pair_key(p.i, k)) && done_.count(pair_key(p.j, k)))
      return true;
  }
  return false;
}

void GBEngine::run() {
  auto heap_cmp = [this](const Pair& a, const Pair& b) { return pair_less(b, a); };
  const bool rank1_value = order_.value_rank() == 1;
  const bool has_lift = order_.lift_rank() > 0;
  const int vr = order_.value_rank();
  while (!queue_.empty()) {
    deadline_.check("groebner completion");
    std::pop_heap(queue_.begin(), queue_.end(), heap_cmp);
    Pair p = std::move(queue_.back());
    queue_.pop_back();
    done_.insert(pair_key(p.i, p.j));

    const MVec& f = basis_[p.i];
    const MVec& g = basis_[p.j];
    const bool value_pair = f.lead().comp < vr;

    // product criterion: sound on the rank-1 value block; with a lift block
    // the skipped pair still owes its Koszul syzygy
    if (value_pair && rank1_value && f.lead().mono.coprime(g.lead().mono)) {
      if (has_lift) {
        std::vector<MTerm> kos;  // lift part of  g_val * f - f_val * g
        for (const MTerm& a : f.terms)
          if (a.comp >= vr)
            for (const MTerm& b : g.terms)
              if (b.comp < vr)
                kos.push_back({a.mono * b.mono, a.comp, a.coeff * b.coeff});
        for (const MTerm& a : g.terms)
          if (a.comp >= vr)
            for (const MTerm& b : f.terms)
              if (b.comp < vr)
                kos.push_back({a.mono * b.mono, a.comp, -a.coeff * b.coeff});
        MVec w = reduce_full(mvec_normalize(std::move(kos), order_));
        if (!w.is_zero()) insert_element(mvec_primitive(w));
      }
      continue;
    }
    if (chain_criterion(p)) continue;

    Monomial uf = p.lcm.quotient_into(f.lead().mono);
    Monomial ug = p.lcm.quotient_into(g.lead().mono);
    Bucket bucket(order_);
    {
      std::vector<MTerm> sf;
      sf.reserve(f.terms.size());
      for (const MTerm& t : f.terms)
        sf.push_back({t.mono * uf, t.comp, t.coeff * g.lead().coeff});
      bucket.push(std::move(sf));
      std::vector<MTerm> sg;
      sg.reserve(g.terms.size());
      for (const MTerm& t : g.terms)
        sg.push_back({t.mono * ug, t.comp, -t.coeff * f.lead().coeff});
      bucket.push(std::move(sg));
    }
    std::vector<MTerm> out;
    long steps = 0;
    while (auto t = bucket.pop_lead()) {
      if (((++steps) & 0x3ff) == 0) deadline_.check("groebner completion");
      int reducer = find_reducer(t->comp, t->mono);
      if (reducer < 0) {
        out.push_back(std::move(*t));
        continue;
      }
      const MVec& h = basis_[reducer];
      Monomial q = t->mono.quotient_into(h.lead().mono);
      Rational c = t->coeff / h.lead().coeff;
      bucket.push(scaled_shifted_tail(h, q, c, true));
    }
    if (!out.empty()) insert_element(mvec_primitive(MVec{std::move(out)}));
  }
}

std::vector<MVec> GBEngine::reduced_basis() const {
  std::vector<MVec> kept;
  for (size_t i = 0; i < basis_.size(); ++i)
    if (!redundant_[i]) kept.push_back(basis_[i]);
  std::vector<MVec> out;
  for (size_t a = 0; a < kept.size(); ++a) {
    Bucket bucket(order_);
    bucket.push(kept[a].terms);
    std::vector<MTerm> res;
    while (auto t = bucket.pop_lead()) {
      int reducer = -1;
      for (size_t b = 0; b < kept.size(); ++b) {
        if (b == a) continue;
        const MTerm& lt = kept[b].lead();
        if (lt.comp == t->comp && lt.mono.divides(t->mono)) {
          reducer = static_cast<int>(b);
          break;
        }
      }
      if (reducer < 0) {
        res.push_back(std::move(*t));
        continue;
      }
      const MVec& h = kept[reducer];
      Monomial q = t->mono.quotient_into(h.lead().mono);
      Rational c = t->coeff / h.lead().coeff;
      bucket.push(scaled_shifted_tail(h, q, c, true));
    }
    if (!res.empty()) {
      MVec v{std::move(res)};
      out.push_back(mvec_scaled(v, Rational(1) / v.lead().coeff));
    }
  }
  std::sort(out.begin(), out.end(), [this](const MVec& x, const MVec& y) {
    long dx = x.lead().mono.degree() + comp_twists_[x.lead().comp];
    long dy = y.lead().mono.degree() + comp_twists_[y.lead().comp];
    if (dx != dy) return dx < dy;
    return order_.cmp(x.lead(), y.lead()) < 0;
  });
  return out;
}

MVec GBEngine::normal_form(MVec v) const { return reduce_full(std::move(v)); }

// --- syzygies and lifting --------------------------------------------------

namespace {

struct LiftedSetup {
  ModOrder order;
  std::vector<int> nonzero_cols;
  std::vector<MVec> columns;  // without lift tails
  std::vector<long> twists;
};

LiftedSetup prepare_lifted(const GradedMatrix& M) {
  const RingPtr& R = M.ring();
  const int r0 = M.rows();
  ModOrder probe(R, r0);
  LiftedSetup s{ModOrder(R, r0), {}, {}, M.row_twists()};
  for (int j = 0; j < M.cols(); ++j) {
    MVec c = mvec_from_column(M.column(j), probe);
    if (!c.is_zero()) {
      s.nonzero_cols.push_back(j);
      s.columns.push_back(std::move(c));
    }
  }
  for (size_t p = 0; p < s.columns.size(); ++p) {
    s.order.add_lift_tag(s.columns[p].lead().mono, s.columns[p].lead().comp);
    s.twists.push_back(M.col_twists()[s.nonzero_cols[p]]);
  }
  return s;
}

}  // namespace

GradedMatrix syzygies(const GradedMatrix& M, Deadline deadline) {
  M.require_homogeneous("syzygies");
  const RingPtr& R = M.ring();
  const int r0 = M.rows();
  const int k = M.cols();

  LiftedSetup s = prepare_lifted(M);
  GBEngine engine(s.order, s.twists, deadline);
  for (size_t p = 0; p < s.columns.size(); ++p) {
    MVec v = s.columns[p];
    v.terms.push_back(
        {Monomial(R->arity()), r0 + static_cast<int>(p), Rational(1)});
    engine.add_input(mvec_normalize(std::move(v.terms), s.order));
  }
  engine.run();

  std::vector<std::vector<Polynomial>> syz_cols;
  for (const MVec& g : engine.reduced_basis()) {
    if (g.lead().comp < r0) continue;
    std::vector<MTerm> shifted;
    shifted.reserve(g.terms.size());
    for (const MTerm& t : g.terms) {
      if (t.comp < r0) throw std::logic_error("mixed syzygy element");
      shifted.push_back({t.mono, t.comp - r0, t.coeff});
    }
    std::vector<Polynomial> packed = mvec_to_column(
        MVec{std::move(shifted)}, R, static_cast<int>(s.columns.size()));
    std::vector<Polynomial> col(k, Polynomial(R));
    for (size_t p = 0; p < packed.size(); ++p)
      col[s.nonzero_cols[p]] = std::move(packed[p]);
    syz_cols.push_back(std::move(col));
  }
  // a zero column of M is a unit syzygy all by itself
  for (int j = 0; j < k; ++j) {
    bool zero = true;
    for (int i = 0; i < r0; ++i)
      if (!M.at(i, j).is_zero()) zero = false;
    if (zero) {
      std::vector<Polynomial> col(k, Polynomial(R));
      col[j] = Polynomial::constant(R, 1);
      syz_cols.push_back(std::move(col));
    }
  }

  std::vector<long> out_col_twists;
  for (const auto& col : syz_cols) {
    long tw = 0;
    for (int i = 0; i < k; ++i)
      if (!col[i].is_zero()) {
        tw = *col[i].homogeneous_degree() + M.col_twists()[i];
        break;
      }
    out_col_twists.push_back(tw);
  }
  GradedMatrix S =
      GradedMatrix::from_columns(R, syz_cols, M.col_twists(), out_col_twists);
  S.require_homogeneous("syzygies output");
  return S;
}

std::optional<std::vector<Polynomial>> lift_through(
    const GradedMatrix& M, const std::vector<Polynomial>& v,
    Deadline deadline) {
  const RingPtr& R = M.ring();
  const int r0 = M.rows();
  const int k = M.cols();
  if (static_cast<int>(v.size()) != r0)
    throw std::invalid_argument("lift_through: vector rank mismatch");

  LiftedSetup s = prepare_lifted(M);
  GBEngine engine(s.order, s.twists, deadline);
  for (size_t p = 0; p < s.columns.size(); ++p) {
    MVec w = s.columns[p];
    w.terms.push_back(
        {Monomial(R->arity()), r0 + static_cast<int>(p), Rational(1)});
    engine.add_input(mvec_normalize(std::move(w.terms), s.order));
  }
  engine.run();

  // reduce (v | 0), cancelling value-block leads only, so the residual lift
  // part is a genuine division certificate
  MVec w = mvec_from_column(v, s.order);
  const auto& basis = engine.raw_basis();
  while (!w.is_zero() && w.lead().comp < r0) {
    deadline.check("lift_through");
    int reducer = -1;
    for (size_t b = 0; b < basis.size(); ++b) {
      const MTerm& lt = basis[b].lead();
      if (lt.comp == w.lead().comp && lt.mono.divides(w.lead().mono)) {
        reducer = static_cast<int>(b);
        break;
      }
    }
    if (reducer < 0) return std::nullopt;
    const MVec& g = basis[static_cast<size_t>(reducer)];
    Monomial q = w.lead().mono.quotient_into(g.lead().mono);
    Rational c = w.lead().coeff / g.lead().coeff;
    w = mvec_sub_mult(w, g, q, c, s.order);
  }
  // remaining lift part tau satisfies v = -(columns of M) * tau
  std::vector<MTerm> shifted;
  for (const MTerm& t : w.terms)
    shifted.push_back({t.mono, t.comp - r0, -t.coeff});
  std::vector<Polynomial> packed = mvec_to_column(
      MVec{std::move(shifted)}, R, static_cast<int>(s.columns.size()));
  std::vector<Polynomial> lambda(k, Polynomial(R));
  for (size_t p = 0; p < packed.size(); ++p)
    lambda[s.nonzero_cols[p]] = std::move(packed[p]);
  return lambda;
}

}  // namespace freediv
