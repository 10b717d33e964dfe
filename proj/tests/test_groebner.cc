#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "freediv/ideal.hpp"
#include "freediv/module.hpp"

using namespace freediv;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }

Polynomial var(const RingPtr& R, const std::string& n) {
  return Polynomial::variable(R, R->index_of(n));
}

Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, int max_terms,
                       int max_deg) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  std::uniform_int_distribution<int> ed(0, max_deg);
  std::uniform_int_distribution<int> cf(-4, 4);
  std::vector<Term> terms;
  int k = nt(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<uint16_t> e(R->arity());
    for (int i = 0; i < R->arity(); ++i) e[i] = static_cast<uint16_t>(ed(rng));
    terms.push_back({Monomial(std::move(e), *R), Rational(cf(rng))});
  }
  return Polynomial::from_terms(R, std::move(terms));
}

// brute-force S-polynomial; oracle for the Buchberger closure property
Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial L = f.leading_monomial().lcm(g.leading_monomial());
  Monomial uf = L.quotient_into(f.leading_monomial());
  Monomial ug = L.quotient_into(g.leading_monomial());
  return f.times_term(uf, g.leading_coeff()) -
         g.times_term(ug, f.leading_coeff());
}

void check_is_groebner(const std::vector<Polynomial>& gb) {
  for (size_t i = 0; i < gb.size(); ++i)
    for (size_t j = i + 1; j < gb.size(); ++j)
      CHECK(reduces_to_zero(spoly(gb[i], gb[j]).primitive(), gb));
}

}  // namespace

TEST_CASE("normal form basics") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
  CHECK(normal_form(x * x, {x}).is_zero());
  Polynomial f = x * y + z;
  CHECK(normal_form(f, {}) == f);

  // Euler identity rearranged reduces to zero against GB(0) = {}
  Polynomial g = x * y * z;
  Polynomial e = x * g.derivative(0) + y * g.derivative(1) +
                 z * g.derivative(2) - Rational(3) * g;
  CHECK(normal_form(e, {}).is_zero());
}

TEST_CASE("buchberger on small ideals") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");

  Ideal I(R, {x + y, x - y});
  const auto& gb = I.groebner();
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == y);
  CHECK(gb[1] == x);

  Ideal J(R, {x});
  CHECK(J.groebner() == std::vector<Polynomial>{x});

  // (yz, xz, xy) already a GB under grevlex
  Ideal K(R, {y * z, x * z, x * y});
  CHECK(K.groebner().size() == 3);
  check_is_groebner(K.groebner());
}

TEST_CASE("buchberger closure on random ideals") {
  auto R = xyz();
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Polynomial> gens;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      Polynomial p = random_poly(R, rng, 3, 3);
      if (!p.is_zero()) gens.push_back(p);
    }
    Ideal I(R, gens);
    const auto& gb = I.groebner();
    check_is_groebner(gb);
    // normal_form is ideal-invariant: f - NF(f) reduces to 0
    for (const Polynomial& g : gens) {
      Polynomial nf = normal_form(g, gb);
      CHECK(normal_form(g - nf, gb).is_zero());
      CHECK(ideal_membership(g, I));
    }
  }
}

TEST_CASE("membership") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
  CHECK_FALSE(ideal_membership(x, Ideal(R, {y})));

  // f in J_f by Euler
  Polynomial f = x * y * z;
  Ideal Jf(R, {f.derivative(0), f.derivative(1), f.derivative(2)});
  CHECK(ideal_membership(f, Jf));

  // epsilon_n(f) = n f lies in (f) for the normal crossing divisor
  auto R4 = make_ring({"x1", "x2", "x3", "x4"});
  Polynomial g = Polynomial::constant(R4, 1);
  for (int i = 0; i < 4; ++i) g *= Polynomial::variable(R4, i);
  Polynomial eps(R4);
  for (int i = 0; i < 4; ++i)
    eps += Polynomial::variable(R4, i) * g.derivative(i);
  CHECK(ideal_membership(eps, Ideal(R4, {g})));
}

TEST_CASE("elimination") {
  auto R = make_ring({"t", "x", "y"});
  auto t = var(R, "t"), x = var(R, "x"), y = var(R, "y");
  Ideal I(R, {t - x, t - y});
  Ideal E = eliminate(I, {1, 2});
  REQUIRE(E.generators().size() == 1);
  Rational c;
  CHECK(E.generators()[0].proportional_to(x - y, &c));

  Ideal J(R, {x});
  CHECK(ideal_equal(eliminate(J, {1}), J));

  // elimination output is contained in I
  for (const Polynomial& g : E.generators()) CHECK(ideal_membership(g, I));
}

TEST_CASE("kernel of the power map at n = 6 is the Hankel ideal") {
  // kernel of k[y1..y4] -> k[w^3, w^2 u, w u^2, u^3]
  auto Y = make_ring({"y1", "y2", "y3", "y4"});
  auto E = make_ring({"w", "u", "y1", "y2", "y3", "y4"}, OrderSpec::Block(2));
  auto w = var(E, "w"), u = var(E, "u");
  std::vector<Polynomial> gens;
  for (int i = 0; i < 4; ++i)
    gens.push_back(Polynomial::variable(E, 2 + i) - w.pow(3 - i) * u.pow(i));
  Ideal big(E, gens);
  std::vector<Polynomial> ker;
  for (const Polynomial& g : big.groebner()) {
    bool pure = true;
    for (const Term& t : g.terms())
      if (t.mono[0] || t.mono[1]) pure = false;
    if (pure) ker.push_back(transport(g, Y));
  }
  Ideal K(Y, ker);

  auto y1 = var(Y, "y1"), y2 = var(Y, "y2"), y3 = var(Y, "y3"),
       y4 = var(Y, "y4");
  Ideal hankel(Y, {y1 * y3 - y2 * y2, y1 * y4 - y2 * y3, y2 * y4 - y3 * y3});
  CHECK(ideal_equal(K, hankel));
}

TEST_CASE("saturation and colon") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y");

  CHECK(ideal_equal(saturate(Ideal(R, {x * x * y}), Ideal(R, {x})),
                    Ideal(R, {y})));
  Ideal I(R, {x * x, x * y});
  CHECK(ideal_equal(saturate(I, Ideal(R, {Polynomial::constant(R, 1)})), I));

  CHECK(ideal_equal(colon(Ideal(R, {x * y}), Ideal(R, {x})), Ideal(R, {y})));
  CHECK(colon(Ideal(R, {x}), Ideal(R, {x})).is_unit_ideal());
  CHECK(ideal_equal(colon(I, Ideal(R, {x})), Ideal(R, {x, y})));

  // saturation contains I and is idempotent
  Ideal J(R, {x});
  Ideal S = saturate(I, J);
  CHECK(ideal_contains(S, I));
  CHECK(ideal_equal(saturate(S, J), S));

  // multi-generator saturation is the intersection of the principal ones:
  // (x) : (x, y)^inf = (x), not the unit ideal
  Ideal P(R, {x});
  CHECK(ideal_equal(saturate(P, Ideal(R, {x, y})), P));
}

TEST_CASE("ideal powers") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y");
  Ideal I(R, {x, y});
  Ideal I2 = ideal_power(I, 2);
  CHECK(ideal_equal(I2, Ideal(R, {x * x, x * y, y * y})));
  CHECK(I2.generators().size() == 3);
  CHECK(ideal_equal(ideal_power(I, 1), I));

  Ideal Ia = ideal_power(I, 2), Ib = ideal_power(I, 3);
  Ideal Iab = ideal_power(I, 5);
  CHECK(ideal_contains(Iab, ideal_product(Ia, Ib)));
  CHECK_THROWS_AS(ideal_power(I, 0), std::invalid_argument);
}

TEST_CASE("dimension and height") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
  DimensionReport d0 = dimension(Ideal::zero(R));
  CHECK(d0.krull_dimension == 3);
  CHECK(d0.height == 0);

  DimensionReport d1 = dimension(Ideal(R, {y * z, x * z, x * y}));
  CHECK(d1.krull_dimension == 1);
  CHECK(d1.height == 2);

  // oracle agreement on random monomial ideals (initial ideal = itself)
  std::mt19937_64 rng(5);
  auto R6 = make_ring({"a", "b", "c", "d", "e", "f"});
  for (int rep = 0; rep < 30; ++rep) {
    std::vector<Polynomial> gens;
    int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
      std::vector<uint16_t> e(6, 0);
      for (int v = 0; v < 6; ++v)
        if (rng() % 3 == 0) e[v] = static_cast<uint16_t>(1 + rng() % 2);
      Monomial m(std::move(e), *R6);
      if (!m.is_one()) gens.push_back(Polynomial::term(R6, m, Rational(1)));
    }
    if (gens.empty()) continue;
    Ideal I(R6, gens);
    DimensionReport fast = dimension(I);
    std::vector<uint32_t> sup;
    for (const Polynomial& g : gens) {
      uint32_t s = 0;
      for (int v = 0; v < 6; ++v)
        if (g.leading_monomial()[v]) s |= uint32_t(1) << v;
      sup.push_back(s);
    }
    CHECK(fast.krull_dimension == max_independent_set(sup, 6));
  }
}

TEST_CASE("ideal equality") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y");
  CHECK(ideal_equal(Ideal(R, {x, y}), Ideal(R, {x + y, x - y})));
  CHECK_FALSE(ideal_equal(Ideal(R, {x}), Ideal(R, {x * x})));
}

TEST_CASE("syzygies of simple maps") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");

  // Koszul: syz of [x y] is spanned by (y, -x)
  GradedMatrix M = GradedMatrix::from_columns(R, {{x}, {y}}, {0}, {1, 1});
  GradedMatrix S = syzygies(M);
  REQUIRE(S.cols() == 1);
  Rational c;
  CHECK(S.at(0, 0).proportional_to(y, &c));
  CHECK(S.at(1, 0).proportional_to(x, &c));
  CHECK((M * S).is_zero());

  // normal crossing n = 3: linear syzygies of [yz xz xy]
  GradedMatrix M2 = GradedMatrix::from_columns(
      R, {{y * z}, {x * z}, {x * y}}, {0}, {2, 2, 2});
  GradedMatrix S2 = syzygies(M2);
  CHECK((M2 * S2).is_zero());
  CHECK(S2.cols() == 2);
  for (int j = 0; j < S2.cols(); ++j)
    for (int i = 0; i < S2.rows(); ++i)
      if (!S2.at(i, j).is_zero()) CHECK(S2.at(i, j).degree() == 1);

  // spans agree with the expected columns (x, -y, 0), (x, 0, -z)
  GradedMatrix expect = GradedMatrix::from_columns(
      R, {{x, -y, Polynomial(R)}, {x, Polynomial(R), -z}}, {2, 2, 2}, {3, 3});
  for (int j = 0; j < expect.cols(); ++j)
    CHECK(lift_through(S2, expect.column(j)).has_value());
  for (int j = 0; j < S2.cols(); ++j)
    CHECK(lift_through(expect, S2.column(j)).has_value());
}

TEST_CASE("lift_through certificates") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
  GradedMatrix M = GradedMatrix::from_columns(
      R, {{x * x}, {x * y + z * z}}, {0}, {2, 2});
  Polynomial target = x * x * y - (x * y + z * z) * x;
  auto lam = lift_through(M, {target});
  REQUIRE(lam.has_value());
  Polynomial check = (*lam)[0] * (x * x) + (*lam)[1] * (x * y + z * z);
  CHECK(check == target);
  CHECK_FALSE(lift_through(M, {y}).has_value());
}

TEST_CASE("deadline raises resource exhaustion") {
  auto R = make_ring({"a", "b", "c", "d", "e"});
  std::mt19937_64 rng(99);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(random_poly(R, rng, 6, 6));
  Ideal I(R, gens);
  CHECK_THROWS_AS(I.groebner(Deadline::after_seconds(1e-7)),
                  ResourceExhausted);
}

TEST_CASE("syzygy completeness on random kernel elements") {
  // v = M mu is in the column module; its division certificate differs from
  // mu by a kernel element, which must lie in the span of the computed
  // syzygies
  auto R = xyz();
  std::mt19937_64 rng(31337);
  for (int rep = 0; rep < 12; ++rep) {
    int rows = 1 + static_cast<int>(rng() % 2);
    int cols = 2 + static_cast<int>(rng() % 2);
    GradedMatrix M(R, rows, cols);
    bool homog_ok = true;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        // homogeneous quadratic entries keep the matrix graded
        std::vector<Term> terms;
        for (int t = 0; t < 2; ++t) {
          std::vector<uint16_t> e(3, 0);
          int a = rng() % 3, b = rng() % 3;
          e[a] += 1;
          e[b] += 1;
          terms.push_back({Monomial(std::move(e), *R),
                           Rational(static_cast<long>(rng() % 5) - 2)});
        }
        M.set(i, j, Polynomial::from_terms(R, std::move(terms)));
      }
    M.mutable_row_twists().assign(rows, 0);
    M.mutable_col_twists().assign(cols, 2);
    if (!M.is_homogeneous() || !homog_ok) continue;
    GradedMatrix S = syzygies(M);
    CHECK((M * S).is_zero());

    std::vector<Polynomial> mu;
    for (int j = 0; j < cols; ++j) {
      std::vector<Term> terms;
      std::vector<uint16_t> e(3, 0);
      e[rng() % 3] = 1;
      terms.push_back({Monomial(std::move(e), *R),
                       Rational(static_cast<long>(rng() % 5) - 2)});
      mu.push_back(Polynomial::from_terms(R, std::move(terms)));
    }
    std::vector<Polynomial> v(rows, Polynomial(R));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) v[i] += M.at(i, j) * mu[j];
    auto lift = lift_through(M, v);
    REQUIRE(lift.has_value());
    std::vector<Polynomial> kernel_elt(cols, Polynomial(R));
    bool zero = true;
    for (int j = 0; j < cols; ++j) {
      kernel_elt[j] = mu[j] - (*lift)[j];
      if (!kernel_elt[j].is_zero()) zero = false;
    }
    if (!zero) CHECK(lift_through(S, kernel_elt).has_value());
  }
}
