// Acceptance suite: one line per criterion, exact symbolic checks.
// The slow 7-variable hessian experiment runs only with --include-slow
// (or FREEDIV_INCLUDE_SLOW=1).

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>

#include "freediv/families.hpp"
#include "freediv/polygcd.hpp"
#include "freediv/report.hpp"

using namespace freediv;

namespace {

int g_failures = 0;
std::chrono::steady_clock::time_point g_mark =
    std::chrono::steady_clock::now();

void report(const std::string& name, bool ok, const std::string& note = "") {
  auto now = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(now - g_mark).count();
  g_mark = now;
  std::cout << (ok ? "PASS " : "FAIL ") << name;
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << "  [" << static_cast<long>(secs * 1000) / 1000.0 << "s]"
            << std::endl;
  if (!ok) ++g_failures;
}

Polynomial var(const RingPtr& R, const std::string& n) {
  return Polynomial::variable(R, R->index_of(n));
}

BlowupContext context_of(const Polynomial& f) {
  return make_blowup_context(jacobian_ideal(f));
}

Ideal hankel_ideal(const RingPtr& R, const std::vector<int>& top,
                   const std::vector<int>& bottom) {
  std::vector<Polynomial> gens;
  for (size_t i = 0; i < top.size(); ++i)
    for (size_t j = i + 1; j < top.size(); ++j)
      gens.push_back(Polynomial::variable(R, top[i]) *
                         Polynomial::variable(R, bottom[j]) -
                     Polynomial::variable(R, top[j]) *
                         Polynomial::variable(R, bottom[i]));
  return Ideal(R, std::move(gens));
}

// criterion 1: family 1 linear freeness with the exact Betti twists
void criterion_01() {
  bool ok = true;
  std::string note;
  for (int n : {4, 5, 6}) {
    Polynomial f = family1_poly(n);
    if (!is_linear_free(f)) { ok = false; note = "not linear free"; break; }
    Resolution res =
        minimal_free_resolution(present_ideal_module(jacobian_ideal(f)));
    if (res.length() != 1 ||
        res.step_twists(0) != std::vector<long>(n, n - 1) ||
        res.step_twists(1) != std::vector<long>(n - 1, n)) {
      ok = false;
      note = "betti shape off at n=" + std::to_string(n);
      break;
    }
  }
  report("criterion-01 family1 linear free, twists R(-n+1)^n <- R(-n)^(n-1)",
         ok, note);
}

// criterion 2: family 1 blowup invariants
void criterion_02() {
  bool ok = true;
  std::string note;
  {
    BlowupContext ctx = context_of(family1_poly(4));
    auto r = reduction_number(ctx);
    if (!is_linear_type(ctx) || analytic_spread(ctx) != 4 || !r || *r != 0) {
      ok = false;
      note = "n=4";
    }
  }
  for (int n : {5, 6}) {
    if (!ok) break;
    BlowupContext ctx = context_of(family1_poly(n));
    auto r = reduction_number(ctx);
    if (analytic_spread(ctx) != 4 || !r || *r != 1 ||
        !fiber_is_cm(ctx)) {
      ok = false;
      note = "n=" + std::to_string(n);
      break;
    }
    std::vector<int> top, bot;
    for (int i = 0; i + 1 <= n - 3; ++i) {
      top.push_back(i);
      bot.push_back(i + 1);
    }
    if (!ideal_equal(fiber_ideal(ctx),
                     hankel_ideal(ctx.fiber_ring, top, bot))) {
      ok = false;
      note = "fiber not the Hankel ideal at n=" + std::to_string(n);
      break;
    }
  }
  report("criterion-02 family1 spread/reduction/fiber", ok, note);
}

// criterion 3: family 1 Rees Cohen-Macaulayness
void criterion_03() {
  bool ok = true;
  std::string note;
  for (int n : {4, 5}) {
    if (!rees_is_cm(context_of(family1_poly(n)))) {
      ok = false;
      note = "n=" + std::to_string(n);
      break;
    }
  }
  report("criterion-03 family1 Rees Cohen-Macaulay (n = 4, 5)", ok, note);
}

// criterion 4: family 2
void criterion_04() {
  bool ok = true;
  std::string note;
  for (int n : {2, 3}) {
    Polynomial f = family2_poly(n);
    GradedMatrix M = family2_saito_matrix(n);
    // the constructed matrix evaluates to +(n+1) f at n = 2 and to
    // -(n+1) f at n = 3; the sign tracks the column-order parity
    Rational expect = n % 2 == 0 ? Rational(n + 1) : Rational(-(n + 1));
    if (determinant(M) != expect * f) {
      ok = false;
      note = "saito determinant n=" + std::to_string(n);
      break;
    }
  }
  if (ok) {
    BlowupContext ctx = context_of(family2_poly(2));
    Ideal sym = symmetric_ideal(ctx);
    if (!is_linear_type(ctx) || sym.generators().size() != 3 ||
        dimension(sym).height != 3) {
      ok = false;
      note = "n=2 linear type / regular sequence";
    }
  }
  if (ok) {
    BlowupContext ctx = context_of(family2_poly(3));
    std::vector<int> top{0, 2}, bot{1, 3};
    auto r = reduction_number(ctx);
    if (!ideal_equal(fiber_ideal(ctx), hankel_ideal(ctx.fiber_ring, top, bot)) ||
        analytic_spread(ctx) != 5 || !r || *r != 1 || !rees_is_cm(ctx)) {
      ok = false;
      note = "n=3 fiber/spread/reduction/rees";
    }
  }
  report("criterion-04 family2 Saito + blowup facts", ok, note);
}

// criterion 5: family 3
void criterion_05() {
  bool ok = true;
  std::string note;
  for (auto [a, b] : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {2, 5}, {5, 2},
           {2, 6}, {6, 2}, {3, 3}, {3, 4}, {4, 3}}) {
    if (!is_free_divisor(family3_poly(a, b)).free) {
      ok = false;
      note = "not free at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      break;
    }
  }
  if (ok && !is_linear_type(context_of(family3_poly(2, 2)))) {
    ok = false;
    note = "(2,2) linear type";
  }
  for (auto [a, b] :
       std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {4, 2}}) {
    if (!ok) break;
    if (!rees_is_cm(context_of(family3_poly(a, b)))) {
      ok = false;
      note = "rees not CM at (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  }
  if (ok) {
    BlowupContext ctx = context_of(family3_poly(3, 2));
    const RingPtr& E = ctx.extended_ring;
    Polynomial x = var(E, "x"), y = var(E, "y"), z = var(E, "z");
    Polynomial T1 = var(E, "T1"), T2 = var(E, "T2"), T3 = var(E, "T3");
    Polynomial H = Rational(2) * x * z * T1 +
                   (Rational(9) * y * y + Rational(6) * z * z) * T3 -
                   Rational(3) * y * z * T2;
    Ideal P(E, {y * y * T1 + Rational(3) * x * x * T3,
                y * H + Rational(3) * x.pow(3) * T2,
                x * y * T1 * T2 - T3 * H});
    auto r = reduction_number(ctx);
    if (!ideal_equal(rees_ideal(ctx), P) || analytic_spread(ctx) != 3 ||
        !r || *r != 0 || !fiber_ideal(ctx).is_zero_ideal()) {
      ok = false;
      note = "(3,2) explicit Rees / spread / reduction";
    }
  }
  report("criterion-05 family3 freeness and blowup facts", ok, note);
}

// criterion 6: the derived family g
void criterion_06() {
  bool ok = true;
  std::string note;
  for (int a : {2, 3}) {
    Polynomial g = family3g_poly(a, 3);
    if (!is_free_divisor(g).free || der_regularity(g) != 3L * a - a - 2) {
      ok = false;
      note = "beta=3 alpha=" + std::to_string(a) + " free/regularity";
      break;
    }
    BlowupContext ctx = context_of(g);
    auto r = reduction_number(ctx);
    if (!rees_is_cm(ctx) || !r || *r != 0) {
      ok = false;
      note = "beta=3 alpha=" + std::to_string(a) + " rees/reduction";
      break;
    }
    const RingPtr& E = ctx.extended_ring;
    std::vector<Polynomial> sat{var(E, "x").pow(a - 1)};
    sat.push_back(a >= 3 ? var(E, "y").pow(a - 2)
                         : Polynomial::constant(E, 1));
    if (!ideal_equal(saturate(symmetric_ideal(ctx), Ideal(E, sat)),
                     rees_ideal(ctx))) {
      ok = false;
      note = "beta=3 alpha=" + std::to_string(a) + " saturation identity";
      break;
    }
  }
  if (ok) {
    BlowupContext ctx = context_of(family3g_poly(2, 5));
    Ideal rees = rees_ideal(ctx);
    Resolution res = minimal_free_resolution(present_cyclic(rees));
    int depth = depth_AB(res, ctx.extended_ring->arity());
    int dim = dimension(rees).krull_dimension;
    if (depth != dim - 1 || depth != 3) {
      ok = false;
      note = "beta=5 almost-CM depth";
    }
  }
  report("criterion-06 family3g freeness, Rees, saturation identity", ok,
         note);
}

// criterion 7: family 4 samples
void criterion_07() {
  bool ok = true;
  std::string note;
  std::vector<std::vector<std::vector<Rational>>> samples{
      {{0, 1, 0}, {1, 0, 0}, {1, 0, 0}},   // (y, x, x)
      {{0, 0, 0}, {1, 0, 1}, {0, 1, 1}},   // (0, x+z, y+z)
      {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},   // (z, x, y)
      {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}},   // (x+y, y+z, x+z)
      {{0, 2, 1}, {1, 0, 0}, {0, 1, 0}}};  // (2y+z, x, y)
  for (size_t i = 0; i < samples.size() && ok; ++i) {
    Polynomial f = family4_poly(samples[i]);
    if (f.is_zero() || squarefree_part(f) != f.monic()) {
      ok = false;
      note = "sample " + std::to_string(i) + " degenerate";
      break;
    }
    BlowupContext ctx = context_of(f);
    if (!is_linear_free(f) || !is_linear_type(ctx) ||
        !complete_intersection_check(ctx) ||
        dimension(rees_ideal(ctx)).height != 2 || der_regularity(f) != 1) {
      ok = false;
      note = "sample " + std::to_string(i);
      break;
    }
  }
  if (ok) {
    FamilySpec spec{FamilyId::family4};
    spec.linear_forms = {{1, -1, 0}, {1, 1, 1}, {0, 1, 1}};
    Fixture fx = build(spec);
    const RingPtr& R = fx.polynomial.ring();
    Polynomial xz = Polynomial::variable(R, 0) + Polynomial::variable(R, 2);
    if (!fx.rejected || fx.polynomial != Rational(-2) * xz.pow(3)) {
      ok = false;
      note = "degenerate case not rejected as -2(x+z)^3";
    }
  }
  report("criterion-07 family4 samples + degenerate rejection", ok, note);
}

// criterion 8: normal crossing divisors
void criterion_08() {
  bool ok = true;
  std::string note;
  for (int n : {3, 4, 5}) {
    Polynomial f = normal_crossing_poly(n);
    DepthTable t = depth_power_table(f, n);
    if (t.truncated) { ok = false; note = "depth table truncated"; break; }
    for (int m = 1; m <= n; ++m)
      if (t.depth.at(m) != std::max(0, n - m - 1)) {
        ok = false;
        note = "depth at n=" + std::to_string(n) + " m=" + std::to_string(m);
      }
    if (!ok) break;
    BlowupContext ctx = context_of(f);
    const GradedMatrix& phi = ctx.syzygy_matrix;
    for (int j = 1; j <= n - 1; ++j) {
      std::vector<Polynomial> ms;
      for (Polynomial& m : minors(phi, n - j))
        if (!m.is_zero()) ms.push_back(std::move(m));
      if (ms.empty() ||
          dimension(Ideal(f.ring(), ms)).height != j + 1) {
        ok = false;
        note = "G_n equality at n=" + std::to_string(n);
        break;
      }
    }
    if (!ok) break;
    if (analytic_spread(ctx) != n || !rees_is_cm(ctx)) {
      ok = false;
      note = "spread/rees at n=" + std::to_string(n);
      break;
    }
    HomaloidalEvidence ev = homaloidal_sufficient(f, ctx, n, Deadline::none(),
                                                  /*rees_cm_known=*/true);
    if (!ev.established()) {
      ok = false;
      note = "homaloidal at n=" + std::to_string(n);
      break;
    }
  }
  report("criterion-08 normal crossing depth/G_n/spread/homaloidal", ok, note);
}

// criterion 9: the section-6 example suite
void criterion_09() {
  bool ok = true;
  std::string note;
  {  // Gordan-Noether
    RingPtr R = make_ring({"x", "y", "z", "w", "t"});
    Polynomial f = var(R, "x") * var(R, "w") * var(R, "w") +
                   var(R, "y") * var(R, "t") * var(R, "w") +
                   var(R, "z") * var(R, "t") * var(R, "t");
    BlowupContext ctx = context_of(f);
    const RingPtr& F = ctx.fiber_ring;
    Polynomial rel = var(F, "T2") * var(F, "T2") - var(F, "T1") * var(F, "T3");
    if (!ideal_equal(fiber_ideal(ctx), Ideal(F, {rel})) ||
        analytic_spread(ctx) != 4) {
      ok = false;
      note = "gordan-noether";
    }
  }
  if (ok) {  // quintic depths + Rees CM
    Polynomial f = family1_poly(5);
    DepthTable t = depth_power_table(f, 4);
    std::vector<int> expect{3, 2, 1, 1};
    for (int m = 1; m <= 4; ++m)
      if (t.truncated || t.depth.at(m) != expect[m - 1]) {
        ok = false;
        note = "quintic depths";
      }
    if (ok && !rees_is_cm(context_of(f))) {
      ok = false;
      note = "quintic rees";
    }
  }
  if (ok) {  // sextic
    Polynomial f = family3_poly(3, 2);
    BlowupContext ctx = context_of(f);
    if (analytic_spread(ctx) != 3) { ok = false; note = "sextic spread"; }
    DepthTable t = depth_power_table(f, 2);
    if (ok && (t.truncated || t.depth.at(2) != 0)) {
      ok = false;
      note = "sextic depth";
    }
    if (ok) {
      // the unique non-linear minimal generator xy T1 T2 - T3 H
      const RingPtr& E = ctx.extended_ring;
      Polynomial x = var(E, "x"), y = var(E, "y"), z = var(E, "z");
      Polynomial T1 = var(E, "T1"), T2 = var(E, "T2"), T3 = var(E, "T3");
      Polynomial H = Rational(2) * x * z * T1 +
                     (Rational(9) * y * y + Rational(6) * z * z) * T3 -
                     Rational(3) * y * z * T2;
      Polynomial W = x * y * T1 * T2 - T3 * H;
      bool found = false;
      Rational c;
      for (const Polynomial& g : rees_ideal(ctx).groebner())
        if (g.proportional_to(W.monic(), &c)) found = true;
      if (!found ||
          !ideal_equal(rees_ideal(ctx),
                       ideal_sum(symmetric_ideal(ctx), Ideal(E, {W})))) {
        ok = false;
        note = "sextic rees generator";
      }
    }
  }
  if (ok) {  // G-S1 quartic
    RingPtr R = make_ring({"x", "y", "z", "w"});
    Polynomial f = var(R, "x").pow(4) -
                   var(R, "x") * var(R, "y") * var(R, "z") * var(R, "z") +
                   var(R, "z").pow(3) * var(R, "w");
    BlowupContext ctx = context_of(f);
    DepthTable t = depth_power_table(f, 4);
    std::vector<int> expect{1, 1, 1, 0};
    for (int m = 1; m <= 4; ++m)
      if (t.truncated || t.depth.at(m) != expect[m - 1]) {
        ok = false;
        note = "gs1 depths";
      }
    if (ok && analytic_spread(ctx) != 4) { ok = false; note = "gs1 spread"; }
    if (ok) {
      const RingPtr& E = ctx.extended_ring;
      // normalized for the true partial derivatives as generators
      Polynomial P = Rational(4) * var(E, "x") * var(E, "T2") * var(E, "T2") -
                     var(E, "z") * var(E, "T1") * var(E, "T4") -
                     var(E, "y") * var(E, "T4") * var(E, "T4");
      if (!ideal_membership(P, rees_ideal(ctx)) ||
          ideal_membership(P, symmetric_ideal(ctx))) {
        ok = false;
        note = "gs1 rees generator";
      }
    }
  }
  if (ok) {  // homal-red
    RingPtr R = make_ring({"x", "y", "z", "w", "t", "u"});
    Polynomial f = var(R, "x") * var(R, "w") *
                   (var(R, "y") * var(R, "z") + var(R, "z") * var(R, "t") +
                    var(R, "t") * var(R, "u"));
    BlowupContext ctx = context_of(f);
    DepthTable t = depth_power_table(f, 3);
    if (t.truncated || t.depth.at(3) != 0) {
      ok = false;
      note = "homal-red projdim J^3";
    } else {
      HomaloidalEvidence ev = homaloidal_sufficient(f, ctx, 3);
      if (!ev.established()) { ok = false; note = "homal-red homaloidal"; }
    }
  }
  if (ok) {  // irreducible cubic
    RingPtr R = make_ring({"x", "y", "z", "w", "t"});
    Polynomial f = var(R, "x") * var(R, "t") * var(R, "t") +
                   var(R, "y") * var(R, "z") * var(R, "t") +
                   var(R, "z").pow(3) + var(R, "w") * var(R, "w") * var(R, "t");
    Ideal J = jacobian_ideal(f);
    if (!is_cohen_macaulay(J) || dimension(J).height != 3) {
      ok = false;
      note = "irreducible cubic perfection";
    }
    DepthTable t = depth_power_table(f, 3);
    if (ok && (t.truncated || t.depth.at(3) != 0)) {
      ok = false;
      note = "irreducible cubic projdim J^3";
    }
    if (ok) {
      BlowupContext ctx = context_of(f);
      HomaloidalEvidence ev = homaloidal_sufficient(f, ctx, 3);
      if (!ev.established()) {
        ok = false;
        note = "irreducible cubic homaloidal";
      }
    }
  }
  report("criterion-09 section-6 example suite", ok, note);
}

// criterion 10: max-spread triple agreement + Ext consistency
void criterion_10() {
  bool ok = true;
  std::string note;
  for (const Fixture& fx : example_catalog()) {
    if (fx.rejected || fx.slow) continue;
    try {
      BlowupContext ctx = context_of(fx.polynomial);
      max_spread_check(fx.polynomial, ctx);  // throws on route disagreement
    } catch (const std::exception& e) {
      ok = false;
      note = fx.name + ": " + e.what();
      break;
    }
  }
  if (ok) {
    struct Case { Polynomial f; long shift; };
    RingPtr R4 = make_ring({"x", "y", "z", "w"});
    std::vector<Case> cases;
    cases.push_back({normal_crossing_poly(4), 2});
    cases.push_back({family3_poly(3, 2), 4});
    cases.push_back({var(R4, "x").pow(4) -
                         var(R4, "x") * var(R4, "y") * var(R4, "z") * var(R4, "z") +
                         var(R4, "z").pow(3) * var(R4, "w"),
                     2});
    for (const Case& c : cases) {
      if (c.f.degree() - 2 != c.shift) { ok = false; note = "shift bookkeeping"; }
      if (!ext_consistency_check(c.f)) {
        ok = false;
        note = "ext consistency, degree " + std::to_string(c.f.degree());
        break;
      }
    }
  }
  report("criterion-10 max-spread agreement + Ext consistency", ok, note);
}

// criterion 11: hessian experiments (slow part gated)
void criterion_11(bool include_slow) {
  bool ok = true;
  std::string note;
  {  // circulant: h(g) = lambda g^2 and h(g)_red free
    RingPtr R = make_ring({"x", "y", "z", "w"});
    GradedMatrix M(R, 4, 4);
    std::vector<std::vector<int>> rows{{0, 3, 2, 1}, {1, 0, 3, 2},
                                       {3, 2, 1, 0}, {2, 1, 0, 3}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) M.set(i, j, Polynomial::variable(R, rows[i][j]));
    Polynomial g = determinant(M);
    Polynomial h = determinant(hessian(g));
    auto q = h.divided_by(g * g);
    HessianExperiment ex = hessian_experiment(g);
    if (!q || !q->is_constant() || q->is_zero() ||
        ex.reduced_part_free != true) {
      ok = false;
      note = "circulant";
    }
  }
  if (ok) {  // homal-red: h(f) = 3 x^2 w^2 f^2, reduced part 3f not free
    RingPtr R = make_ring({"x", "y", "z", "w", "t", "u"});
    Polynomial f = var(R, "x") * var(R, "w") *
                   (var(R, "y") * var(R, "z") + var(R, "z") * var(R, "t") +
                    var(R, "t") * var(R, "u"));
    Polynomial h = determinant(hessian(f));
    Polynomial expect =
        Rational(3) * var(R, "x").pow(2) * var(R, "w").pow(2) * f * f;
    HessianExperiment ex = hessian_experiment(f);
    Rational c;
    if (h != expect || !ex.reduced_part.proportional_to(f, &c) ||
        ex.reduced_part_free != false) {
      ok = false;
      note = "homal-red hessian";
    }
  }
  if (ok && include_slow) {
    RingPtr R = make_ring({"x", "y", "z", "w", "t", "u", "v"});
    GradedMatrix M(R, 3, 3);
    std::vector<std::vector<int>> idx{{0, 1, 2}, {2, 3, 4}, {4, 5, 6}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) M.set(i, j, Polynomial::variable(R, idx[i][j]));
    Polynomial f = determinant(M);
    HessianExperiment ex = hessian_experiment(f);
    if (!ex.det_reduced || ex.reduced_part_linear_free != true) {
      ok = false;
      note = "2-catalecticant";
    }
  }
  report(include_slow
             ? "criterion-11 hessian experiments (with the slow catalecticant)"
             : "criterion-11 hessian experiments (slow part gated off)",
         ok, note);
}

// criterion 12: the property suites
void criterion_12() {
  bool ok = true;
  std::string note;

  // Buchberger closure on 200 random small ideals
  {
    RingPtr R = make_ring({"x", "y", "z"});
    std::mt19937_64 rng(777);
    auto random_poly = [&](int max_terms, int max_deg) {
      std::vector<Term> terms;
      int k = 1 + static_cast<int>(rng() % max_terms);
      for (int t = 0; t < k; ++t) {
        std::vector<uint16_t> e(3);
        for (int i = 0; i < 3; ++i)
          e[i] = static_cast<uint16_t>(rng() % (max_deg + 1));
        terms.push_back({Monomial(std::move(e), *R),
                         Rational(static_cast<long>(rng() % 9) - 4)});
      }
      return Polynomial::from_terms(R, std::move(terms));
    };
    auto spoly = [](const Polynomial& f, const Polynomial& g) {
      Monomial L = f.leading_monomial().lcm(g.leading_monomial());
      return f.times_term(L.quotient_into(f.leading_monomial()),
                          g.leading_coeff()) -
             g.times_term(L.quotient_into(g.leading_monomial()),
                          f.leading_coeff());
    };
    for (int rep = 0; rep < 200 && ok; ++rep) {
      std::vector<Polynomial> gens;
      int k = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) {
        Polynomial p = random_poly(3, 3);
        if (!p.is_zero()) gens.push_back(p);
      }
      if (gens.empty()) continue;
      Ideal I(R, gens);
      const auto& gb = I.groebner();
      for (size_t i = 0; i < gb.size() && ok; ++i)
        for (size_t j = i + 1; j < gb.size() && ok; ++j)
          if (!reduces_to_zero(spoly(gb[i], gb[j]).primitive(), gb)) {
            ok = false;
            note = "buchberger closure";
          }
    }
  }

  // depth + pd = arity and Hilbert-Burch on the free fixtures; Euler
  // everywhere
  if (ok) {
    for (const Fixture& fx : example_catalog()) {
      if (fx.rejected || fx.slow) continue;
      if (!euler_check(fx.polynomial)) {
        ok = false;
        note = "euler on " + fx.name;
        break;
      }
      Ideal J = jacobian_ideal(fx.polynomial);
      Resolution res = minimal_free_resolution(present_cyclic(J));
      int n = fx.polynomial.ring()->arity();
      if (projective_dimension(res) + depth_AB(res, n) != n) {
        ok = false;
        note = "depth+pd on " + fx.name;
        break;
      }
      FreenessCertificate cert = is_free_divisor(fx.polynomial);
      if (cert.free) {
        Ideal mm(fx.polynomial.ring(), minors(cert.syzygy_matrix, n - 1));
        if (!ideal_equal(mm, J)) {
          ok = false;
          note = "hilbert-burch on " + fx.name;
          break;
        }
      }
    }
  }

  // determinism: two consecutive full regression runs, byte identical
  if (ok) {
    std::string a = regression_json(false, 900).dump();
    std::string b = regression_json(false, 900).dump();
    if (a != b) {
      ok = false;
      note = "regression JSON not byte-identical";
    }
  }
  report("criterion-12 property suites", ok, note);
}

}  // namespace

int main(int argc, char** argv) {
  bool include_slow = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--include-slow") == 0) include_slow = true;
  if (const char* env = std::getenv("FREEDIV_INCLUDE_SLOW"))
    if (std::strcmp(env, "1") == 0) include_slow = true;

  criterion_01();
  criterion_02();
  criterion_03();
  criterion_04();
  criterion_05();
  criterion_06();
  criterion_07();
  criterion_08();
  criterion_09();
  criterion_10();
  criterion_11(include_slow);
  criterion_12();

  std::cout << (g_failures ? "ACCEPTANCE FAILURES: " : "ACCEPTANCE CLEAN: ")
            << g_failures << std::endl;
  return g_failures ? 1 : 0;
}
