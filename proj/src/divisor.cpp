#include "freediv/divisor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace freediv {

Polynomial LogDerivation::applied_to(const Polynomial& f) const {
  Polynomial acc(f.ring());
  for (size_t i = 0; i < coefficients.size(); ++i)
    if (!coefficients[i].is_zero())
      acc += coefficients[i] * f.derivative(static_cast<int>(i));
  return acc;
}

LogDerivation make_log_derivation(const Polynomial& f,
                                  std::vector<Polynomial> coefficients) {
  LogDerivation theta{std::move(coefficients)};
  if (static_cast<int>(theta.coefficients.size()) != f.ring()->arity())
    throw std::invalid_argument("derivation needs one coefficient per variable");
  Polynomial v = theta.applied_to(f);
  if (!v.is_zero() && !v.divided_by(f))
    throw std::invalid_argument("not a logarithmic derivation");
  return theta;
}

LogDerivation euler_derivation(const RingPtr& R) {
  std::vector<Polynomial> c;
  for (int i = 0; i < R->arity(); ++i) c.push_back(Polynomial::variable(R, i));
  return {std::move(c)};
}

Ideal jacobian_ideal(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous())
    throw std::invalid_argument("jacobian_ideal needs nonzero homogeneous f");
  return Ideal(f.ring(), gradient(f));
}

bool is_cone(const Polynomial& f) {
  if (!f.is_homogeneous())
    throw std::invalid_argument("is_cone needs homogeneous f");
  const RingPtr& R = f.ring();
  const int n = R->arity();
  // coefficient matrix of the partials in the monomial basis
  std::vector<Polynomial> parts = gradient(f);
  std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> cols(
      [](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, OrderSpec::Grevlex()) < 0;
      });
  for (const Polynomial& p : parts)
    for (const Term& t : p.terms())
      cols.emplace(t.mono, 0);
  int k = 0;
  for (auto& [m, idx] : cols) idx = k++;
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (const Term& t : parts[i].terms()) A[i][cols[t.mono]] = t.coeff;
  // rank by Gaussian elimination
  int rank = 0;
  for (int col = 0; col < k && rank < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i)
      if (sgn(A[i][col]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(A[rank], A[pivot]);
    for (int i = rank + 1; i < n; ++i) {
      if (sgn(A[i][col]) == 0) continue;
      Rational fac = A[i][col] / A[rank][col];
      for (int j = col; j < k; ++j) A[i][j] -= fac * A[rank][j];
    }
    ++rank;
  }
  return rank < n;
}

bool is_reduced(const Polynomial& f, Deadline deadline) {
  if (!f.is_homogeneous() || f.is_zero())
    throw std::invalid_argument("is_reduced needs nonzero homogeneous f");
  if (is_cone(f)) throw std::invalid_argument("is_reduced: input is a cone");
  return dimension(jacobian_ideal(f), deadline).height >= 2;
}

FreenessCertificate is_free_divisor(const Polynomial& f, Deadline deadline) {
  if (!f.is_homogeneous() || f.is_zero())
    throw std::invalid_argument("is_free_divisor needs nonzero homogeneous f");
  if (is_cone(f))
    throw std::invalid_argument("is_free_divisor: input is a cone");
  if (!is_reduced(f, deadline))
    throw std::invalid_argument("is_free_divisor: input is not reduced");
  Ideal J = jacobian_ideal(f);
  FreenessCertificate cert;
  cert.jacobian_height = dimension(J, deadline).height;
  Resolution res = minimal_free_resolution(present_cyclic(J), -1, deadline);
  cert.jacobian_pd = std::max(0, projective_dimension(res) - 1);  // pd of J
  cert.free = cert.jacobian_height == 2 && cert.jacobian_pd == 1;
  if (res.length() >= 2) cert.syzygy_matrix = res.maps[1];
  else cert.syzygy_matrix = GradedMatrix(f.ring(), f.ring()->arity(), 0);
  return cert;
}

bool is_linear_free(const Polynomial& f, Deadline deadline) {
  if (f.is_zero() || !f.is_homogeneous()) return false;
  if (is_cone(f)) return false;
  if (!is_reduced(f, deadline)) return false;
  FreenessCertificate cert = is_free_divisor(f, deadline);
  if (!cert.free) return false;
  const GradedMatrix& phi = cert.syzygy_matrix;
  for (int i = 0; i < phi.rows(); ++i)
    for (int j = 0; j < phi.cols(); ++j)
      if (!phi.at(i, j).is_zero() && phi.at(i, j).degree() > 1) return false;
  return true;
}

std::optional<Rational> saito_check(const Polynomial& f,
                                    const std::vector<LogDerivation>& thetas,
                                    Deadline deadline) {
  const RingPtr& R = f.ring();
  const int n = R->arity();
  if (static_cast<int>(thetas.size()) != n)
    throw std::invalid_argument("saito_check needs exactly n derivations");
  for (int j = 0; j < n; ++j) {
    Polynomial v = thetas[j].applied_to(f);
    if (!v.is_zero() && !v.divided_by(f))
      throw std::invalid_argument("saito_check: candidate " +
                                  std::to_string(j) + " is not logarithmic");
  }
  deadline.check("saito_check");
  GradedMatrix M(R, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M.set(i, j, thetas[j].coefficients[i]);
  Polynomial det = determinant(M);
  if (det.is_zero()) return std::nullopt;
  auto q = det.divided_by(f);
  if (!q || !q->is_constant() || q->is_zero()) return std::nullopt;
  return q->leading_coeff();
}

GradedMatrix log_derivation_generators(const Polynomial& f,
                                       Deadline deadline) {
  if (f.is_zero() || !f.is_homogeneous())
    throw std::invalid_argument("log derivations need nonzero homogeneous f");
  const RingPtr& R = f.ring();
  const int n = R->arity();
  const long d = f.degree();
  // syzygies of the row [f_x1 .. f_xn f]
  std::vector<std::vector<Polynomial>> cols;
  std::vector<long> ctw;
  for (int i = 0; i < n; ++i) {
    cols.push_back({f.derivative(i)});
    ctw.push_back(d - 1);
  }
  cols.push_back({f});
  ctw.push_back(d);
  GradedMatrix row = GradedMatrix::from_columns(R, cols, {0}, ctw);
  GradedMatrix S = syzygies(row, deadline);

  std::vector<std::vector<Polynomial>> gen_cols;
  std::vector<long> gen_tw;
  for (int j = 0; j < S.cols(); ++j) {
    std::vector<Polynomial> c;
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      c.push_back(S.at(i, j));
      if (!S.at(i, j).is_zero()) nonzero = true;
    }
    if (!nonzero) continue;  // relation purely in the f slot cannot occur
    gen_cols.push_back(std::move(c));
    gen_tw.push_back(S.col_twists()[j] - (d - 1) - 1);
  }
  // Euler derivation, always the last generator
  LogDerivation eps = euler_derivation(R);
  gen_cols.push_back(eps.coefficients);
  gen_tw.push_back(0);

  // Der_k(R) grading: each d/dx_i sits in degree -1
  GradedMatrix G = GradedMatrix::from_columns(R, gen_cols,
                                              std::vector<long>(n, -1), gen_tw);
  G.require_homogeneous("log_derivation_generators");
  // every column is certified logarithmic
  for (size_t j = 0; j < gen_cols.size(); ++j)
    make_log_derivation(f, gen_cols[j]);
  return G;
}

GradedModulePresentation der_module_presentation(const Polynomial& f,
                                                 Deadline deadline) {
  const RingPtr& R = f.ring();
  const int n = R->arity();
  const long d = f.degree();
  GradedMatrix G = log_derivation_generators(f, deadline);
  const int k = G.cols();
  // relations of T/(f R^n): syzygies of [G | f Id], first block coordinates
  std::vector<std::vector<Polynomial>> cols;
  std::vector<long> ctw;
  for (int j = 0; j < k; ++j) {
    cols.push_back(G.column(j));
    ctw.push_back(G.col_twists()[j]);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Polynomial> c(n, Polynomial(R));
    c[i] = f;
    cols.push_back(std::move(c));
    ctw.push_back(d - 1);
  }
  GradedMatrix big = GradedMatrix::from_columns(R, cols, G.row_twists(), ctw);
  GradedMatrix S = syzygies(big, deadline);
  // keep the first k coordinates of each syzygy
  std::vector<int> first_rows;
  for (int i = 0; i < k; ++i) first_rows.push_back(i);
  std::vector<int> all_cols;
  for (int j = 0; j < S.cols(); ++j) all_cols.push_back(j);
  GradedMatrix rel = S.submatrix(first_rows, all_cols);
  rel.require_homogeneous("der_module_presentation");
  return {std::move(rel)};
}

long der_regularity(const Polynomial& f, Deadline deadline) {
  Resolution res =
      minimal_free_resolution(der_module_presentation(f, deadline), -1,
                              deadline);
  return regularity(res);
}

DivisorReport analyze_divisor(const Polynomial& f, Deadline deadline) {
  DivisorReport rep;
  rep.degree = f.degree();
  rep.cone = is_cone(f);
  if (rep.cone) return rep;
  rep.reduced = is_reduced(f, deadline);
  if (!*rep.reduced) return rep;
  rep.jacobian_betti =
      minimal_free_resolution(present_cyclic(jacobian_ideal(f)), -1, deadline)
          .betti_table_text();
  FreenessCertificate cert = is_free_divisor(f, deadline);
  rep.jacobian_height = cert.jacobian_height;
  rep.jacobian_pd = cert.jacobian_pd;
  rep.free_divisor = cert.free;
  rep.linear_free = false;
  if (cert.free) {
    const GradedMatrix& phi = cert.syzygy_matrix;
    bool linear = true;
    for (int i = 0; i < phi.rows(); ++i)
      for (int j = 0; j < phi.cols(); ++j)
        if (!phi.at(i, j).is_zero() && phi.at(i, j).degree() > 1)
          linear = false;
    rep.linear_free = linear;
    // Saito scalar from the engine's own basis: syzygy columns + Euler
    std::vector<LogDerivation> basis;
    for (int j = 0; j < phi.cols(); ++j)
      basis.push_back(make_log_derivation(f, phi.column(j)));
    basis.push_back(euler_derivation(f.ring()));
    rep.saito_lambda = saito_check(f, basis, deadline);
  }
  rep.der_reg = der_regularity(f, deadline);
  rep.der_reg_matches_formula = (*rep.der_reg == rep.degree - 2);
  return rep;
}

}  // namespace freediv
