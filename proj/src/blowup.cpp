#include "freediv/blowup.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace freediv {

std::optional<long> BlowupContext::common_degree() const {
  std::optional<long> d;
  for (const Polynomial& g : generators) {
    auto e = g.homogeneous_degree();
    if (!e) return std::nullopt;
    if (d && *d != *e) return std::nullopt;
    d = *e;
  }
  return d;
}

GradedMatrix minimal_syzygy_matrix(const Ideal& I, Deadline deadline) {
  Resolution res = minimal_free_resolution(present_cyclic(I), -1, deadline);
  if (res.length() < 2) {
    // no relations among the surviving generators
    GradedMatrix phi(I.ring(), res.length() == 0 ? 0 : res.maps[0].cols(), 0);
    if (res.length() >= 1) phi.mutable_row_twists() = res.maps[0].col_twists();
    return phi;
  }
  return res.maps[1];
}

BlowupContext make_blowup_context(const Ideal& I, Deadline deadline) {
  BlowupContext ctx;
  ctx.base_ring = I.ring();
  ctx.generators = I.generators();
  for (const Polynomial& g : ctx.generators)
    if (!g.is_homogeneous() || g.is_zero())
      throw std::invalid_argument(
          "blowup context needs homogeneous nonzero generators");
  ctx.syzygy_matrix = minimal_syzygy_matrix(I, deadline);
  if (ctx.syzygy_matrix.rows() != ctx.ngens())
    throw std::logic_error("blowup context: generators are not minimal");

  std::vector<std::string> ext = ctx.base_ring->names();
  std::vector<std::string> fib;
  for (int i = 1; i <= ctx.ngens(); ++i) {
    std::string t = "T" + std::to_string(i);
    if (ctx.base_ring->index_of(t) >= 0)
      throw std::invalid_argument("base ring already uses " + t);
    ext.push_back(t);
    fib.push_back(t);
  }
  ctx.extended_ring = make_ring(ext);
  ctx.fiber_ring = make_ring(fib);
  return ctx;
}

Ideal symmetric_ideal(const BlowupContext& ctx, Deadline) {
  std::lock_guard<std::mutex> hold(ctx.cache->lock);
  if (ctx.cache->sym) return *ctx.cache->sym;
  const RingPtr& E = ctx.extended_ring;
  const int n = ctx.nvars();
  std::vector<Polynomial> gens;
  for (int j = 0; j < ctx.syzygy_matrix.cols(); ++j) {
    Polynomial acc(E);
    for (int i = 0; i < ctx.syzygy_matrix.rows(); ++i) {
      const Polynomial& e = ctx.syzygy_matrix.at(i, j);
      if (!e.is_zero())
        acc += Polynomial::variable(E, n + i) * transport(e, E);
    }
    if (!acc.is_zero()) gens.push_back(std::move(acc));
  }
  ctx.cache->sym = Ideal(E, std::move(gens));
  return *ctx.cache->sym;
}

Ideal rees_ideal(const BlowupContext& ctx, Deadline deadline) {
  {
    std::lock_guard<std::mutex> hold(ctx.cache->lock);
    if (ctx.cache->rees) return *ctx.cache->rees;
  }
  const int n = ctx.nvars();
  const int nu = ctx.ngens();
  std::vector<std::string> names{"_t"};
  for (const auto& s : ctx.extended_ring->names()) names.push_back(s);
  RingPtr REE = make_ring(names, OrderSpec::Block(1));
  Polynomial t = Polynomial::variable(REE, 0);
  std::vector<Polynomial> gens;
  for (int i = 0; i < nu; ++i)
    gens.push_back(Polynomial::variable(REE, 1 + n + i) -
                   t * transport(ctx.generators[i], REE));
  Ideal big(REE, std::move(gens));
  std::vector<Polynomial> out;
  for (const Polynomial& g : big.groebner(deadline)) {
    bool pure = true;
    for (const Term& term : g.terms())
      if (term.mono[0]) pure = false;
    if (pure) out.push_back(transport(g, ctx.extended_ring));
  }
  Ideal result(ctx.extended_ring, std::move(out));
  std::lock_guard<std::mutex> hold(ctx.cache->lock);
  if (!ctx.cache->rees) ctx.cache->rees = result;
  return *ctx.cache->rees;
}

Ideal rees_ideal_via_saturation(const BlowupContext& ctx, Deadline deadline) {
  const GradedMatrix& phi = ctx.syzygy_matrix;
  const int nu = ctx.ngens();
  // one nonzero maximal minor certifies the locus where the ideal is
  // locally principal; the Rees ideal is the saturation of Sym by it
  if (phi.cols() < nu - 1)
    throw std::invalid_argument("saturation route needs rank nu-1 syzygies");
  Polynomial delta(ctx.base_ring);
  for (const Polynomial& m : minors(phi, nu - 1)) {
    if (!m.is_zero()) {
      delta = m;
      break;
    }
  }
  if (delta.is_zero())
    throw std::invalid_argument("saturation route: no nonzero maximal minor");
  Ideal sym = symmetric_ideal(ctx, deadline);
  Ideal d(ctx.extended_ring, {transport(delta, ctx.extended_ring)});
  return saturate(sym, d, deadline);
}

Ideal fiber_ideal(const BlowupContext& ctx, Deadline deadline) {
  {
    std::lock_guard<std::mutex> hold(ctx.cache->lock);
    if (ctx.cache->fiber) return *ctx.cache->fiber;
  }
  if (!ctx.common_degree())
    throw std::invalid_argument("fiber ideal needs equal generator degrees");
  // fiber ideal = (rees ideal + (x_1..x_n)) meet k[T]: substituting the
  // base variables to zero in the Rees generators realizes the contraction,
  // and reuses the cached Rees elimination.  fiber_ideal_direct is the
  // independent route the tests compare against.
  const int n = ctx.nvars();
  Ideal rees = rees_ideal(ctx, deadline);
  std::map<int, Polynomial> kill;
  for (int i = 0; i < n; ++i)
    kill[i] = Polynomial::zero(ctx.fiber_ring);
  std::vector<Polynomial> out;
  for (const Polynomial& g : rees.generators()) {
    Polynomial h = g.substitute(ctx.fiber_ring, kill);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  Ideal result(ctx.fiber_ring, std::move(out));
  result.groebner(deadline);
  std::lock_guard<std::mutex> hold(ctx.cache->lock);
  if (!ctx.cache->fiber) ctx.cache->fiber = result;
  return *ctx.cache->fiber;
}

Ideal fiber_ideal_direct(const BlowupContext& ctx, Deadline deadline) {
  if (!ctx.common_degree())
    throw std::invalid_argument("fiber ideal needs equal generator degrees");
  const int n = ctx.nvars();
  const int nu = ctx.ngens();
  // eliminate the base variables from (T_i - g_i)
  std::vector<std::string> names = ctx.base_ring->names();
  for (const auto& s : ctx.fiber_ring->names()) names.push_back(s);
  RingPtr E = make_ring(names, OrderSpec::Block(n));
  std::vector<Polynomial> gens;
  for (int i = 0; i < nu; ++i)
    gens.push_back(Polynomial::variable(E, n + i) -
                   transport(ctx.generators[i], E));
  Ideal big(E, std::move(gens));
  std::vector<Polynomial> out;
  for (const Polynomial& g : big.groebner(deadline)) {
    bool pure = true;
    for (const Term& term : g.terms())
      for (int i = 0; i < n && pure; ++i)
        if (term.mono[i]) pure = false;
    if (pure) out.push_back(transport(g, ctx.fiber_ring));
  }
  return Ideal(ctx.fiber_ring, std::move(out));
}

int polynomial_matrix_rank(const GradedMatrix& M, Deadline deadline) {
  const int maxr = std::min(M.rows(), M.cols());
  if (maxr == 0) return 0;
  // deterministic pseudo-random evaluations give a certain lower bound
  std::mt19937_64 rng(0xC0FFEE);
  const RingPtr& R = M.ring();
  RingPtr scalars = make_ring({"@"});
  int lower = 0;
  for (int trial = 0; trial < 4; ++trial) {
    std::map<int, Polynomial> point;
    for (int i = 0; i < R->arity(); ++i)
      point[i] = Polynomial::constant(
          scalars, Rational(static_cast<long>(rng() % 2000) - 1000));
    std::vector<std::vector<Rational>> A(M.rows(),
                                         std::vector<Rational>(M.cols()));
    for (int i = 0; i < M.rows(); ++i)
      for (int j = 0; j < M.cols(); ++j) {
        Polynomial v = M.at(i, j).substitute(scalars, point);
        A[i][j] = v.is_zero() ? Rational(0) : v.leading_coeff();
      }
    int rank = 0;
    for (int col = 0; col < M.cols() && rank < M.rows(); ++col) {
      int pivot = -1;
      for (int i = rank; i < M.rows(); ++i)
        if (sgn(A[i][col]) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      std::swap(A[rank], A[pivot]);
      for (int i = rank + 1; i < M.rows(); ++i) {
        if (sgn(A[i][col]) == 0) continue;
        Rational f = A[i][col] / A[rank][col];
        for (int j = col; j < M.cols(); ++j) A[i][j] -= f * A[rank][j];
      }
      ++rank;
    }
    lower = std::max(lower, rank);
  }
  // exact confirmation: climb while some (r+1)-minor is nonzero
  int r = lower;
  while (r < maxr) {
    deadline.check("matrix rank");
    bool found = false;
    for (const Polynomial& m : minors(M, r + 1))
      if (!m.is_zero()) {
        found = true;
        break;
      }
    if (!found) break;
    ++r;
  }
  return r;
}

int analytic_spread(const BlowupContext& ctx, Deadline deadline) {
  {
    std::lock_guard<std::mutex> hold(ctx.cache->lock);
    if (ctx.cache->spread) return *ctx.cache->spread;
  }
  Ideal F = fiber_ideal(ctx, deadline);
  int method_a = dimension(F, deadline).krull_dimension;

  const RingPtr& R = ctx.base_ring;
  GradedMatrix theta(R, ctx.ngens(), ctx.nvars());
  for (int i = 0; i < ctx.ngens(); ++i)
    for (int j = 0; j < ctx.nvars(); ++j)
      theta.set(i, j, ctx.generators[i].derivative(j));
  int method_b = polynomial_matrix_rank(theta, deadline);

  if (method_a != method_b)
    throw std::logic_error("analytic spread methods disagree: fiber dim " +
                           std::to_string(method_a) + " vs jacobian rank " +
                           std::to_string(method_b));
  std::lock_guard<std::mutex> hold(ctx.cache->lock);
  ctx.cache->spread = method_a;
  return method_a;
}

bool is_linear_type(const BlowupContext& ctx, Deadline deadline) {
  return ideal_equal(symmetric_ideal(ctx, deadline),
                     rees_ideal(ctx, deadline), deadline);
}

std::optional<int> reduction_number(const BlowupContext& ctx,
                                    Deadline deadline) {
  Ideal F = fiber_ideal(ctx, deadline);
  Resolution res = minimal_free_resolution(present_cyclic(F), -1, deadline);
  int ht = dimension(F, deadline).height;
  if (projective_dimension(res) != ht) return std::nullopt;  // fiber not CM
  return static_cast<int>(regularity(res));
}

bool rees_is_cm(const BlowupContext& ctx, Deadline deadline) {
  return is_cohen_macaulay(rees_ideal(ctx, deadline), deadline);
}

bool fiber_is_cm(const BlowupContext& ctx, Deadline deadline) {
  return is_cohen_macaulay(fiber_ideal(ctx, deadline), deadline);
}

int rees_depth(const BlowupContext& ctx, Deadline deadline) {
  Ideal RI = rees_ideal(ctx, deadline);
  Resolution res = minimal_free_resolution(present_cyclic(RI), -1, deadline);
  return depth_AB(res, ctx.extended_ring->arity());
}

int rees_quotient_dim(const BlowupContext& ctx, Deadline deadline) {
  return dimension(rees_ideal(ctx, deadline), deadline).krull_dimension;
}

bool complete_intersection_check(const BlowupContext& ctx, Deadline deadline) {
  Ideal RI = rees_ideal(ctx, deadline);
  int mu = static_cast<int>(minimal_generators(RI, deadline).size());
  return mu == dimension(RI, deadline).height;
}

bool g_condition(const BlowupContext& ctx, int s, Deadline deadline) {
  const GradedMatrix& phi = ctx.syzygy_matrix;
  const int nu = ctx.ngens();
  for (int j = 1; j <= s - 1; ++j) {
    int r = nu - j;
    if (r <= 0) continue;  // unit ideal of minors
    std::vector<Polynomial> ms;
    for (Polynomial& m : minors(phi, r))
      if (!m.is_zero()) ms.push_back(std::move(m));
    if (ms.empty()) return false;  // zero Fitting ideal has height 0
    Ideal Fj(ctx.base_ring, std::move(ms));
    if (dimension(Fj, deadline).height < j + 1) return false;
  }
  return true;
}

bool is_bihomogeneous(const Polynomial& f, int base_vars) {
  const int n = f.ring()->arity();
  std::vector<int> wx(n, 0), wt(n, 0);
  for (int i = 0; i < n; ++i) (i < base_vars ? wx : wt)[i] = 1;
  return f.is_homogeneous_under(wx) && f.is_homogeneous_under(wt);
}

BlowupReport analyze_blowup(const BlowupContext& ctx, Deadline deadline) {
  BlowupReport rep;
  rep.sym_ideal = symmetric_ideal(ctx, deadline);
  rep.rees_ideal = rees_ideal(ctx, deadline);
  rep.fiber_ideal = fiber_ideal(ctx, deadline);
  rep.analytic_spread = analytic_spread(ctx, deadline);
  rep.linear_type = ideal_equal(rep.sym_ideal, rep.rees_ideal, deadline);
  rep.rees_cm = is_cohen_macaulay(rep.rees_ideal, deadline);
  rep.fiber_cm = is_cohen_macaulay(rep.fiber_ideal, deadline);
  if (rep.fiber_cm) {
    Resolution res = minimal_free_resolution(present_cyclic(rep.fiber_ideal),
                                             -1, deadline);
    rep.reduction_number = static_cast<int>(regularity(res));
  }
  rep.rees_quotient_dim = dimension(rep.rees_ideal, deadline).krull_dimension;
  rep.sym_min_gens =
      static_cast<int>(minimal_generators(rep.sym_ideal, deadline).size());
  rep.sym_height = dimension(rep.sym_ideal, deadline).height;
  rep.sym_complete_intersection = rep.sym_min_gens == rep.sym_height;
  return rep;
}

}  // namespace freediv
