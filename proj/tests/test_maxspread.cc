#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freediv/families.hpp"
#include "freediv/maxspread.hpp"

using namespace freediv;

namespace {

Polynomial var(const RingPtr& R, const std::string& n) {
  return Polynomial::variable(R, R->index_of(n));
}

BlowupContext context_of(const Polynomial& f) {
  return make_blowup_context(jacobian_ideal(f));
}

}  // namespace

TEST_CASE("C_f presentation and triple agreement") {
  auto R = make_ring({"x", "y", "z"});
  Polynomial f = var(R, "x") * var(R, "y") * var(R, "z");
  GradedModulePresentation C = cokernel_Cf(f);
  CHECK(C.generator_count() == 3);
  CHECK(C.relations.col_twists() == std::vector<long>{1, 1, 1});

  BlowupContext ctx = context_of(f);
  MaxSpreadReport rep = max_spread_check(f, ctx);
  CHECK(rep.max_spread);
  CHECK(rep.dim_Cf == 2);
  CHECK(rep.analytic_spread == 3);

  Resolution res = minimal_free_resolution(C);
  CHECK(projective_dimension(res) == 1);  // C_f Cohen-Macaulay here
}

TEST_CASE("triple agreement on a non-maximal example") {
  // Gordan-Noether cubic: ell = 4 < 5, Hessian determinant vanishes
  auto R = make_ring({"x", "y", "z", "w", "t"});
  Polynomial f = var(R, "x") * var(R, "w") * var(R, "w") +
                 var(R, "y") * var(R, "t") * var(R, "w") +
                 var(R, "z") * var(R, "t") * var(R, "t");
  BlowupContext ctx = context_of(f);
  MaxSpreadReport rep = max_spread_check(f, ctx);
  CHECK_FALSE(rep.max_spread);
  CHECK_FALSE(rep.hessian_det_nonzero);
  CHECK(rep.dim_Cf == 5);
  CHECK(rep.analytic_spread == 4);
}

TEST_CASE("ext consistency") {
  auto R = make_ring({"x", "y", "z"});
  Polynomial f = var(R, "x") * var(R, "y") * var(R, "z");
  CHECK(ext_consistency_check(f));

  // fails exactly when the spread is not maximal
  auto S = make_ring({"x", "y", "z", "w", "t"});
  Polynomial g = var(S, "x") * var(S, "w") * var(S, "w") +
                 var(S, "y") * var(S, "t") * var(S, "w") +
                 var(S, "z") * var(S, "t") * var(S, "t");
  CHECK_FALSE(ext_consistency_check(g));
}

TEST_CASE("hessian self-duality of the presentation") {
  // H is symmetric, so the dual presentation is the shifted presentation
  auto R = make_ring({"x", "y", "z", "w"});
  Polynomial f = var(R, "x") * var(R, "y") * var(R, "z") + var(R, "w").pow(3);
  GradedMatrix H = hessian(f);
  CHECK(H.dual() == H.shifted(f.degree() - 2));
}

TEST_CASE("depth power tables") {
  // normal crossing n = 4: 2, 1, 0, 0
  Polynomial f = normal_crossing_poly(4);
  DepthTable t = depth_power_table(f, 4);
  REQUIRE_FALSE(t.truncated);
  CHECK(t.depth.at(1) == 2);
  CHECK(t.depth.at(2) == 1);
  CHECK(t.depth.at(3) == 0);
  CHECK(t.depth.at(4) == 0);
  CHECK_THROWS_AS(depth_power_table(f, 0), std::invalid_argument);

  // once depth hits zero it stays zero on this Rees-CM fixture
  int first_zero = 0;
  for (auto& [m, d] : t.depth)
    if (d == 0) {
      first_zero = m;
      break;
    }
  for (auto& [m, d] : t.depth)
    if (m > first_zero) CHECK(d == 0);
}

TEST_CASE("homaloidal sufficient conditions") {
  {  // normal crossing: fires (the Cremona involution)
    Polynomial f = normal_crossing_poly(4);
    BlowupContext ctx = context_of(f);
    HomaloidalEvidence ev = homaloidal_sufficient(f, ctx, 4);
    CHECK(ev.established());
    CHECK(ev.linear_minor_nonzero);
    CHECK(ev.rees_cm == true);
    CHECK(ev.depth_zero_witness == 3);
  }
  {  // family-1 n = 5 has spread 4 < 5: must never fire
    Polynomial f = family1_poly(5);
    BlowupContext ctx = context_of(f);
    HomaloidalEvidence ev = homaloidal_sufficient(f, ctx, 3);
    CHECK_FALSE(ev.established());
  }
}

TEST_CASE("hessian experiments") {
  {  // homal-red: h(f) = 3 x^2 w^2 f^2
    auto R = make_ring({"x", "y", "z", "w", "t", "u"});
    Polynomial f = var(R, "x") * var(R, "w") *
                   (var(R, "y") * var(R, "z") + var(R, "z") * var(R, "t") +
                    var(R, "t") * var(R, "u"));
    HessianExperiment ex = hessian_experiment(f);
    Polynomial expect = Rational(3) * var(R, "x").pow(2) * var(R, "w").pow(2) * f * f;
    CHECK(ex.hessian_det == expect);
    CHECK_FALSE(ex.det_reduced);
    Rational c;
    CHECK(ex.reduced_part.proportional_to(f, &c));
    CHECK(ex.reduced_part_free == false);
  }
  {  // zero Hessian determinant is reported, not resolved
    auto R = make_ring({"x", "y", "z", "w", "t"});
    Polynomial f = var(R, "x") * var(R, "w") * var(R, "w") +
                   var(R, "y") * var(R, "t") * var(R, "w") +
                   var(R, "z") * var(R, "t") * var(R, "t");
    HessianExperiment ex = hessian_experiment(f);
    CHECK(ex.det_zero);
  }
}
