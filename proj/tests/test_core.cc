#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "freediv/matrix.hpp"
#include "freediv/polygcd.hpp"
#include "freediv/polynomial.hpp"

using namespace freediv;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }

Polynomial var(const RingPtr& R, const std::string& n) {
  return Polynomial::variable(R, R->index_of(n));
}

Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, int max_terms,
                       int max_deg) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> ed(0, max_deg);
  std::uniform_int_distribution<int> cf(-5, 5);
  std::vector<Term> terms;
  int k = nt(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<uint16_t> e(R->arity());
    for (int i = 0; i < R->arity(); ++i) e[i] = static_cast<uint16_t>(ed(rng));
    terms.push_back({Monomial(std::move(e), *R), Rational(cf(rng))});
  }
  return Polynomial::from_terms(R, std::move(terms));
}

}  // namespace

TEST_CASE("basic arithmetic identities") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");

  CHECK(arithmetic(x + y, x - y, ArithKind::mul) == x * x - y * y);
  Polynomial f = x * y + z;
  CHECK(arithmetic(f, Polynomial::zero(R), ArithKind::add) == f);

  // (x^a - y^(a-1) z)^b + y^(a b) at (a, b) = (2, 2)
  Polynomial g = (x.pow(2) - y * z).pow(2) + y.pow(4);
  Polynomial expect = x.pow(4) - x.pow(2) * y * z * Rational(2) +
                      y.pow(2) * z.pow(2) + y.pow(4);
  CHECK(g == expect);
}

TEST_CASE("ring axioms on random polynomials") {
  auto R = xyz();
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 60; ++rep) {
    Polynomial a = random_poly(R, rng, 5, 3);
    Polynomial b = random_poly(R, rng, 5, 3);
    Polynomial c = random_poly(R, rng, 5, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("partial derivatives") {
  auto R = make_ring({"x1", "x2", "x3"});
  Polynomial m = Polynomial::variable(R, 0) * Polynomial::variable(R, 1) *
                 Polynomial::variable(R, 2);
  CHECK(partial_derivative(m, 0) ==
        Polynomial::variable(R, 1) * Polynomial::variable(R, 2));

  // d(x w^2 + y t w + z t^2)/dt = y w + 2 z t
  auto S = make_ring({"x", "y", "z", "w", "t"});
  auto sx = var(S, "x"), sy = var(S, "y"), sz = var(S, "z"), sw = var(S, "w"),
       st = var(S, "t");
  Polynomial f = sx * sw * sw + sy * st * sw + sz * st * st;
  CHECK(f.derivative(S->index_of("t")) == sy * sw + sz * st * Rational(2));

  // d(2 w^(n-1) u)/du at n = 4
  auto T = make_ring({"w", "u"});
  Polynomial lead = var(T, "w").pow(3) * var(T, "u") * Rational(2);
  CHECK(lead.derivative(1) == var(T, "w").pow(3) * Rational(2));

  // Hessian symmetry on random polynomials
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    Polynomial p = random_poly(R, rng, 6, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        CHECK(p.derivative(i).derivative(j) == p.derivative(j).derivative(i));
  }
}

TEST_CASE("euler identity") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
  CHECK(euler_check(x * y * z));
  CHECK(euler_check(x * x + x * y));
  CHECK_THROWS_AS(euler_check(x * x + x), std::invalid_argument);
}

TEST_CASE("hessian shape and twists") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
  GradedMatrix H = hessian(x * y * z);
  CHECK(H.rows() == 3);
  CHECK(H.at(0, 0).is_zero());
  CHECK(H.at(0, 1) == z);
  CHECK(H.at(0, 2) == y);
  CHECK(H.at(1, 2) == x);
  CHECK(H.is_homogeneous());
  CHECK(H.col_twists() == std::vector<long>{1, 1, 1});

  GradedMatrix H2 = hessian(x * x);
  CHECK(H2.at(0, 0) == Polynomial::constant(R, 2));
  CHECK(H2.at(1, 1).is_zero());
}

TEST_CASE("determinant basics and oracle agreement") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
  CHECK(determinant(GradedMatrix::identity(R, 3, {})) ==
        Polynomial::constant(R, 1));

  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 25; ++rep) {
    int n = 2 + static_cast<int>(rng() % 3);
    GradedMatrix M(R, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M.set(i, j, random_poly(R, rng, 2, 2));
    CHECK(determinant(M) == determinant_cofactor(M));
  }

  // 2x2 with polynomial entries
  GradedMatrix M(R, 2, 2);
  M.set(0, 0, x);
  M.set(0, 1, y);
  M.set(1, 0, z);
  M.set(1, 1, x);
  CHECK(determinant(M) == x * x - y * z);
}

TEST_CASE("exact division and proportionality") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y");
  Polynomial p = (x + y) * (x - y);
  auto q = p.divided_by(x + y);
  REQUIRE(q.has_value());
  CHECK(*q == x - y);
  CHECK_FALSE(p.divided_by(x * x).has_value());

  Rational c;
  CHECK((p * Rational(3)).proportional_to(p, &c));
  CHECK(c == Rational(3));
  CHECK_FALSE(p.proportional_to(x + y));
}

TEST_CASE("gcd and squarefree part") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y");

  CHECK(multivariate_gcd(x * x * y, x * y * y) == x * y);
  CHECK(multivariate_gcd(x * x * y, Polynomial::constant(R, 1)) ==
        Polynomial::constant(R, 1));
  CHECK(multivariate_gcd(x * x - y * y, x * x + x * y * Rational(2) + y * y) ==
        x + y);
  CHECK_THROWS_AS(
      multivariate_gcd(Polynomial::zero(R), Polynomial::zero(R)),
      std::invalid_argument);

  CHECK(squarefree_part(x * x * y) == x * y);
  // idempotence and power collapse
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 8; ++rep) {
    Polynomial f = random_poly(R, rng, 3, 2);
    if (f.is_zero() || f.is_constant()) continue;
    Polynomial s = squarefree_part(f);
    CHECK(squarefree_part(s) == s);
    Polynomial s3 = squarefree_part(f.pow(3));
    Rational c;
    CHECK(s3.proportional_to(s, &c));
    // gcd divides both inputs exactly
    Polynomial g = random_poly(R, rng, 3, 2);
    if (g.is_zero()) continue;
    Polynomial d = multivariate_gcd(f, g);
    CHECK(f.divided_by(d).has_value());
    CHECK(g.divided_by(d).has_value());
  }
}

TEST_CASE("substitution") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y");
  std::map<int, Polynomial> kill_x{{0, Polynomial::zero(R)}};
  CHECK((x + y).substitute(R, kill_x) == y);

  // cross-ring: z maps to a polynomial in a bigger ring
  auto S = make_ring({"x", "y", "z", "w"});
  std::map<int, Polynomial> img{{2, var(S, "w") * var(S, "w")}};
  Polynomial p = var(R, "z") * var(R, "x");
  CHECK(p.substitute(S, img) == var(S, "w") * var(S, "w") * var(S, "x"));

  // undefined variable
  auto T = make_ring({"a", "b"});
  CHECK_THROWS_AS(x.substitute(T, {}), std::invalid_argument);
}

TEST_CASE("printing round-trips basic forms") {
  auto R = xyz();
  auto x = var(R, "x"), y = var(R, "y");
  CHECK(Polynomial::zero(R).to_string() == "0");
  CHECK((x * x - y).to_string() == "x^2 - y");
  CHECK((x.pow(3) * y * Rational(2) + Polynomial::constant(R, 5)).to_string() ==
        "2*x^3*y + 5");
}
