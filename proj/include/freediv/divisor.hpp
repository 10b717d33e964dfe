#ifndef FREEDIV_DIVISOR_HPP
#define FREEDIV_DIVISOR_HPP

#include <optional>

#include "freediv/blowup.hpp"
#include "freediv/homalg.hpp"

namespace freediv {

// theta = sum g_i d/dx_i with theta(f) in (f).  The derivation degree is
// one less than the common degree of the coefficients (the Euler derivation
// sits in degree 0).
struct LogDerivation {
  std::vector<Polynomial> coefficients;

  Polynomial applied_to(const Polynomial& f) const;
};

// checked constructor: throws unless sum g_i f_{x_i} lies in (f)
LogDerivation make_log_derivation(const Polynomial& f,
                                  std::vector<Polynomial> coefficients);

LogDerivation euler_derivation(const RingPtr& R);

Ideal jacobian_ideal(const Polynomial& f);

// k-linear dependence of the partials (rank of their coefficient matrix)
bool is_cone(const Polynomial& f);

// height criterion: ht J_f >= 2; the gcd-based squarefree check is the
// independent test oracle
bool is_reduced(const Polynomial& f, Deadline deadline = Deadline::none());

struct FreenessCertificate {
  bool free = false;
  GradedMatrix syzygy_matrix;  // Hilbert-Burch matrix when free
  int jacobian_height = 0;
  int jacobian_pd = 0;  // pd of J_f as a module
};

FreenessCertificate is_free_divisor(const Polynomial& f,
                                    Deadline deadline = Deadline::none());

bool is_linear_free(const Polynomial& f, Deadline deadline = Deadline::none());

// Saito's criterion: det [theta_j(x_i)] = lambda f for a nonzero scalar;
// returns lambda on success
std::optional<Rational> saito_check(const Polynomial& f,
                                    const std::vector<LogDerivation>& thetas,
                                    Deadline deadline = Deadline::none());

// generators of T_{R/k}(f): projections of the syzygies of
// [f_{x_1} .. f_{x_n} f], with the Euler derivation appended last.
// Columns of the returned matrix are the coefficient vectors; ambient
// twists are the Der_k(R) grading (each d/dx_i in degree -1).
GradedMatrix log_derivation_generators(const Polynomial& f,
                                       Deadline deadline = Deadline::none());

// presentation of Der_k(R/(f)) = T_{R/k}(f) / f Der_k(R)
GradedModulePresentation der_module_presentation(
    const Polynomial& f, Deadline deadline = Deadline::none());

long der_regularity(const Polynomial& f, Deadline deadline = Deadline::none());

struct DivisorReport {
  long degree = 0;
  bool cone = false;
  std::optional<bool> reduced;
  std::optional<int> jacobian_height;
  std::optional<int> jacobian_pd;
  std::optional<bool> free_divisor;
  std::optional<bool> linear_free;
  std::optional<Rational> saito_lambda;
  std::optional<long> der_reg;
  std::optional<bool> der_reg_matches_formula;  // reg == deg - 2
  std::string jacobian_betti;  // Macaulay2-layout table for R/J_f
};

// the freeness part of the pipeline; blowup and maxspread reports are
// assembled separately
DivisorReport analyze_divisor(const Polynomial& f,
                              Deadline deadline = Deadline::none());

}  // namespace freediv

#endif
