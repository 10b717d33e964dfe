#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freediv/families.hpp"

using namespace freediv;

TEST_CASE("family polynomials match the stated forms") {
  // family1 n = 4: 2w^3 u + x1 u^3 + x2 w u^2
  Polynomial f1 = family1_poly(4);
  const RingPtr& R1 = f1.ring();
  auto v = [&](const char* n) {
    return Polynomial::variable(R1, R1->index_of(n));
  };
  CHECK(f1 == Rational(2) * v("w").pow(3) * v("u") + v("x1") * v("u").pow(3) +
                  v("x2") * v("w") * v("u").pow(2));

  // family3g (2,3): x^4 - 2x^2 y z - x^2 y^2 + y^2 z^2 + y^3 z + y^4
  Polynomial g = family3g_poly(2, 3);
  const RingPtr& R3 = g.ring();
  auto w3 = [&](const char* n) {
    return Polynomial::variable(R3, R3->index_of(n));
  };
  Polynomial x = w3("x"), y = w3("y"), z = w3("z");
  CHECK(g == x.pow(4) - Rational(2) * x * x * y * z - x * x * y * y +
                 y * y * z * z + y.pow(3) * z + y.pow(4));

  // every fixture polynomial is homogeneous of the stated degree
  CHECK(family1_poly(5).homogeneous_degree() == 5);
  CHECK(family2_poly(3).homogeneous_degree() == 6);
  CHECK(family3_poly(3, 4).homogeneous_degree() == 12);
  CHECK(family3g_poly(3, 3).homogeneous_degree() == 6);
  CHECK(normal_crossing_poly(5).homogeneous_degree() == 5);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(family1_poly(3), std::invalid_argument);
  CHECK_THROWS_AS(family3_poly(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(family3g_poly(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(build({FamilyId::family1, 9}), std::invalid_argument);
  FamilySpec over{FamilyId::family1, 7};
  over.override_caps = true;
  CHECK(build(over).polynomial.degree() == 7);
}

TEST_CASE("factor identity f = B g for odd beta") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 5}}) {
    Polynomial g = family3g_poly(a, b);
    const RingPtr& R = g.ring();
    Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1),
               z = Polynomial::variable(R, 2);
    Polynomial B = x.pow(a) - y.pow(a - 1) * z + y.pow(a);
    CHECK(B * g == family3_poly(a, b));
  }
}

TEST_CASE("reference matrices annihilate the gradient") {
  for (const FamilySpec& spec :
       {FamilySpec{FamilyId::family1, 4}, FamilySpec{FamilyId::family1, 5},
        FamilySpec{FamilyId::family2, 2}, FamilySpec{FamilyId::family2, 3}}) {
    Fixture fx = build(spec);
    for (const ReferenceMatrix& rm : reference_matrices(spec)) {
      if (rm.label == "saito" || rm.label.rfind("phi_r", 0) == 0) continue;
      std::vector<Polynomial> grad = gradient(fx.polynomial);
      for (int j = 0; j < rm.matrix.cols(); ++j) {
        Polynomial acc(fx.polynomial.ring());
        for (int i = 0; i < rm.matrix.rows(); ++i)
          if (!rm.matrix.at(i, j).is_zero())
            acc += grad[i] * rm.matrix.at(i, j);
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("phi_r is the staircase syzygy matrix of (w,u)^r") {
  RingPtr S = make_ring({"w", "u"});
  GradedMatrix phi = power_syzygy_matrix(S, 0, 1, 2);
  CHECK(phi.rows() == 3);
  CHECK(phi.cols() == 2);
  // columns annihilate the generators taken in increasing w-order,
  // matching the family-1 usage where row i carries w^(i-1) u^(n-i)
  Polynomial w = Polynomial::variable(S, 0), u = Polynomial::variable(S, 1);
  std::vector<Polynomial> row{u * u, u * w, w * w};
  for (int j = 0; j < 2; ++j) {
    Polynomial acc(S);
    for (int i = 0; i < 3; ++i) acc += row[i] * phi.at(i, j);
    CHECK(acc.is_zero());
  }
  CHECK(phi.is_homogeneous());
}

TEST_CASE("family4 legal degenerations are rejected fixtures") {
  FamilySpec spec{FamilyId::family4};
  spec.linear_forms = {{1, -1, 0}, {1, 1, 1}, {0, 1, 1}};
  Fixture fx = build(spec);
  CHECK(fx.rejected);
  // the non-reduced cubic is exactly -2 (x+z)^3
  const RingPtr& R = fx.polynomial.ring();
  Polynomial xz = Polynomial::variable(R, 0) + Polynomial::variable(R, 2);
  CHECK(fx.polynomial == Rational(-2) * xz.pow(3));

  // f = 0 when the quadrics are linearly dependent
  FamilySpec zero{FamilyId::family4};
  zero.linear_forms = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(build(zero).rejected);
}

TEST_CASE("catalog sanity") {
  auto cat = example_catalog();
  CHECK(cat.size() > 25);
  int rejected = 0, slow = 0;
  for (const Fixture& fx : cat) {
    if (fx.rejected) ++rejected;
    if (fx.slow) ++slow;
    if (!fx.rejected) {
      CHECK(fx.polynomial.is_homogeneous());
      CHECK_FALSE(fx.claims.empty());
    }
  }
  CHECK(rejected >= 1);
  CHECK(slow == 1);
  // manifest renders and mentions every fixture
  std::string manifest = fixture_manifest(cat);
  for (const Fixture& fx : cat)
    CHECK(manifest.find(fx.name) != std::string::npos);
}

TEST_CASE("euler check holds on every catalog polynomial") {
  for (const Fixture& fx : example_catalog()) {
    if (fx.rejected || fx.polynomial.is_zero()) continue;
    CHECK(euler_check(fx.polynomial));
  }
}

TEST_CASE("specializing psi kills the x-block as in the freeness proof") {
  // sending x_1..x_{n-2} to zero leaves the staircase together with the
  // lower-triangular tail whose top minor is a w-power
  for (int n : {4, 5}) {
    GradedMatrix psi = family1_psi(n);
    const RingPtr& R = psi.ring();
    std::map<int, Polynomial> kill;
    for (int i = 0; i < n - 2; ++i) kill[i] = Polynomial::zero(R);
    GradedMatrix bar(R, n, n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n - 1; ++j)
        bar.set(i, j, psi.at(i, j).substitute(R, kill));
    Polynomial w = Polynomial::variable(R, n - 2);
    Polynomial u = Polynomial::variable(R, n - 1);
    // expected: eta unchanged, delta1 -> (0..,2(n-1)w,-u,0),
    // delta2 -> (0..,w,-(n-1)u)
    GradedMatrix expect(R, n, n - 1);
    for (int j = 0; j < n - 3; ++j) {
      expect.set(j, j, -w);
      expect.set(j + 1, j, u);
    }
    expect.set(n - 3, n - 3, Rational(2 * (n - 1)) * w);
    expect.set(n - 2, n - 3, -u);
    expect.set(n - 2, n - 2, w);
    expect.set(n - 1, n - 2, Rational(-(n - 1)) * u);
    bool same = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n - 1; ++j)
        if (!(bar.at(i, j) == expect.at(i, j))) same = false;
    CHECK(same);
    // the (n-1)-minor omitting the last row is a nonzero multiple of w^(n-1)
    std::vector<int> rows, cols;
    for (int i = 0; i < n - 1; ++i) rows.push_back(i);
    for (int j = 0; j < n - 1; ++j) cols.push_back(j);
    Polynomial minor = determinant(bar.submatrix(rows, cols));
    Rational c;
    CHECK(minor.proportional_to(w.pow(n - 1), &c));
  }
}

TEST_CASE("fiber relations vanish under T_i -> f_{x_i}") {
  // the kernel property of the special fiber, by direct substitution
  Polynomial f = family1_poly(5);
  BlowupContext ctx = make_blowup_context(jacobian_ideal(f));
  Ideal fib = fiber_ideal(ctx);
  std::map<int, Polynomial> img;
  for (int i = 0; i < ctx.ngens(); ++i) img[i] = ctx.generators[i];
  for (const Polynomial& g : fib.generators())
    CHECK(g.substitute(ctx.base_ring, img).is_zero());
}

TEST_CASE("the simpler presentation matrix of the worked family-4 example") {
  // columns (y, x, x) and (x, y, 3y-2z) present J_f for L = (y, x, x)
  Polynomial f = family4_poly({{0, 1, 0}, {1, 0, 0}, {1, 0, 0}});
  const RingPtr& R = f.ring();
  Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1),
             z = Polynomial::variable(R, 2);
  GradedMatrix simple = GradedMatrix::from_columns(
      R, {{y, x, x}, {x, y, Rational(3) * y - Rational(2) * z}}, {2, 2, 2},
      {3, 3});
  std::vector<Polynomial> grad = gradient(f);
  for (int j = 0; j < 2; ++j) {
    Polynomial acc(R);
    for (int i = 0; i < 3; ++i) acc += grad[i] * simple.at(i, j);
    CHECK(acc.is_zero());
  }
  GradedMatrix engine = minimal_syzygy_matrix(jacobian_ideal(f));
  for (int j = 0; j < 2; ++j) {
    CHECK(lift_through(engine, simple.column(j)).has_value());
    CHECK(lift_through(simple, engine.column(j)).has_value());
  }
}
