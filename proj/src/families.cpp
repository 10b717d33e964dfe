#include "freediv/families.hpp"

#include "freediv/polygcd.hpp"

#include <sstream>
#include <stdexcept>

namespace freediv {

namespace {

Polynomial var(const RingPtr& R, int i) { return Polynomial::variable(R, i); }

Rational binom(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r *= Rational(n - k + i) / Rational(i);
  return r;
}

}  // namespace

std::string FamilySpec::describe() const {
  std::ostringstream os;
  switch (id) {
    case FamilyId::family1: os << "family1(n=" << n << ")"; break;
    case FamilyId::family2: os << "family2(n=" << n << ")"; break;
    case FamilyId::family3:
      os << "family3(alpha=" << alpha << ",beta=" << beta << ")";
      break;
    case FamilyId::family3g:
      os << "family3g(alpha=" << alpha << ",beta=" << beta << ")";
      break;
    case FamilyId::family4: os << "family4"; break;
    case FamilyId::normal_crossing:
      os << "normal_crossing(n=" << n << ")";
      break;
    case FamilyId::example: os << "example(" << example_name << ")"; break;
  }
  return os.str();
}

const Ideal& FixtureSession::jacobian() {
  if (!jacobian_) jacobian_ = jacobian_ideal(f_);
  return *jacobian_;
}

const BlowupContext& FixtureSession::blowup() {
  if (!blowup_) blowup_ = make_blowup_context(jacobian(), deadline_);
  return *blowup_;
}

const DivisorReport& FixtureSession::divisor() {
  if (!divisor_) divisor_ = analyze_divisor(f_, deadline_);
  return *divisor_;
}

const Ideal& FixtureSession::sym() {
  if (!sym_) sym_ = symmetric_ideal(blowup(), deadline_);
  return *sym_;
}

const Ideal& FixtureSession::rees() {
  if (!rees_) rees_ = rees_ideal(blowup(), deadline_);
  return *rees_;
}

const Ideal& FixtureSession::fiber() {
  if (!fiber_) fiber_ = fiber_ideal(blowup(), deadline_);
  return *fiber_;
}

// --- polynomials ------------------------------------------------------------

Polynomial family1_poly(int n) {
  if (n < 4) throw std::invalid_argument("family1 needs n >= 4");
  std::vector<std::string> names;
  for (int i = 1; i <= n - 2; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("w");
  names.push_back("u");
  RingPtr R = make_ring(names);
  Polynomial w = var(R, n - 2), u = var(R, n - 1);
  Polynomial f = Rational(2) * w.pow(n - 1) * u;
  for (int i = 1; i <= n - 2; ++i)
    f += var(R, i - 1) * w.pow(i - 1) * u.pow(n - i);
  return f;
}

Polynomial family2_poly(int n) {
  if (n < 2) throw std::invalid_argument("family2 needs n >= 2");
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * n - 2; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("w");
  names.push_back("u");
  RingPtr R = make_ring(names);
  Polynomial w = var(R, 2 * n - 2), u = var(R, 2 * n - 1);
  Polynomial f = w * u;
  for (int i = 1; i <= n - 1; ++i)
    f *= var(R, 2 * i - 2) * u - var(R, 2 * i - 1) * w;
  return f;
}

Polynomial family3_poly(int alpha, int beta) {
  if (alpha < 2 || beta < 2)
    throw std::invalid_argument("family3 needs alpha, beta >= 2");
  RingPtr R = make_ring({"x", "y", "z"});
  Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2);
  return (x.pow(alpha) - y.pow(alpha - 1) * z).pow(beta) +
         y.pow(alpha * beta);
}

Polynomial family3g_poly(int alpha, int beta) {
  if (alpha < 2 || beta < 3 || beta % 2 == 0)
    throw std::invalid_argument("family3g needs alpha >= 2 and odd beta >= 3");
  RingPtr R = make_ring({"x", "y", "z"});
  Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2);
  Polynomial B = x.pow(alpha) - y.pow(alpha - 1) * z + y.pow(alpha);
  Polynomial g(R);
  for (int j = 0; j <= beta - 1; ++j) {
    Rational c = binom(beta, j);
    if (j % 2) c = -c;
    g += c * B.pow(beta - 1 - j) * y.pow(alpha * j);
  }
  return g;
}

Polynomial family4_poly(const std::vector<std::vector<Rational>>& coeffs);

Polynomial normal_crossing_poly(int n) {
  if (n < 3) throw std::invalid_argument("normal crossing needs n >= 3");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  RingPtr R = make_ring(names);
  Polynomial f = Polynomial::constant(R, 1);
  for (int i = 0; i < n; ++i) f *= var(R, i);
  return f;
}

// --- reference matrices -----------------------------------------------------

GradedMatrix power_syzygy_matrix(const RingPtr& R, int w_index, int u_index,
                                 int r) {
  GradedMatrix phi(R, r + 1, r);
  for (int j = 0; j < r; ++j) {
    phi.set(j, j, -var(R, w_index));
    phi.set(j + 1, j, var(R, u_index));
  }
  phi.mutable_row_twists().assign(r + 1, r);
  phi.mutable_col_twists().assign(r, r + 1);
  return phi;
}

GradedMatrix family1_psi(int n) {
  Polynomial f = family1_poly(n);
  const RingPtr& R = f.ring();
  Polynomial w = var(R, n - 2), u = var(R, n - 1);
  GradedMatrix psi(R, n, n - 1);
  // eta block: the staircase syzygies of u^2 (w,u)^(n-3)
  for (int j = 0; j < n - 3; ++j) {
    psi.set(j, j, -w);
    psi.set(j + 1, j, u);
  }
  // delta_1: positions 0..n-4 hold alpha_{p+2} x_{p+2}
  for (int p = 0; p <= n - 4; ++p)
    psi.set(p, n - 3, Rational(p + 1) * var(R, p + 1));
  psi.set(n - 3, n - 3, Rational(2 * (n - 1)) * w);
  psi.set(n - 2, n - 3, -u);
  // delta_2
  for (int p = 0; p <= n - 3; ++p)
    psi.set(p, n - 2, Rational(n * (n - p - 2) + 1) * var(R, p));
  psi.set(n - 2, n - 2, w);
  psi.set(n - 1, n - 2, Rational(-(n - 1)) * u);

  psi.mutable_row_twists().assign(n, n - 1);
  psi.mutable_col_twists().assign(n - 1, n);
  return psi;
}

GradedMatrix family2_psi(int n) {
  Polynomial f = family2_poly(n);
  const RingPtr& R = f.ring();
  Polynomial w = var(R, 2 * n - 2), u = var(R, 2 * n - 1);
  GradedMatrix psi(R, 2 * n, 2 * n - 1);
  Rational np1(n + 1);
  for (int i = 1; i <= n - 1; ++i) {
    int a_col = 2 * (i - 1), e_col = 2 * i - 1;
    psi.set(2 * i - 2, a_col, w);
    psi.set(2 * i - 1, a_col, u);
    psi.set(2 * i - 2, e_col, np1 * var(R, 2 * i - 2));
    psi.set(2 * i - 1, e_col, np1 * var(R, 2 * i - 1));
    psi.set(2 * n - 2, e_col, -w);
    psi.set(2 * n - 1, e_col, -u);
  }
  int f_col = 2 * n - 2;
  for (int i = 1; i <= n - 1; ++i)
    psi.set(2 * i - 1, f_col, np1 * var(R, 2 * i - 1));
  psi.set(2 * n - 2, f_col, Rational(-n) * w);
  psi.set(2 * n - 1, f_col, u);

  psi.mutable_row_twists().assign(2 * n, 2 * n - 1);
  psi.mutable_col_twists().assign(2 * n - 1, 2 * n);
  return psi;
}

GradedMatrix family2_saito_matrix(int n) {
  Polynomial f = family2_poly(n);
  const RingPtr& R = f.ring();
  Polynomial w = var(R, 2 * n - 2), u = var(R, 2 * n - 1);
  GradedMatrix M(R, 2 * n, 2 * n);
  Rational np1(n + 1);
  for (int i = 1; i <= n - 1; ++i) {
    int a_col = 2 * (i - 1), b_col = 2 * i - 1;
    M.set(2 * i - 2, a_col, w);
    M.set(2 * i - 1, a_col, u);
    M.set(2 * i - 2, b_col, var(R, 2 * i - 2));
    M.set(2 * i - 1, b_col, var(R, 2 * i - 1));
  }
  int c_col = 2 * n - 2, d_col = 2 * n - 1;
  for (int i = 1; i <= n - 1; ++i)
    M.set(2 * i - 1, c_col, np1 * var(R, 2 * i - 1));
  M.set(2 * n - 2, c_col, Rational(-n) * w);
  M.set(2 * n - 1, c_col, u);
  for (int i = 0; i < 2 * n; ++i) M.set(i, d_col, var(R, i));
  M.mutable_row_twists().assign(2 * n, 0);
  M.mutable_col_twists().assign(2 * n, 1);
  return M;
}

GradedMatrix family3_phi(int alpha) {
  Polynomial f = family3_poly(alpha, 2);
  const RingPtr& R = f.ring();
  Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2);
  Rational a(alpha);
  GradedMatrix phi(R, 3, 2);
  phi.set(0, 0, y.pow(alpha - 1));
  phi.set(2, 0, a * x.pow(alpha - 1));
  phi.set(0, 1, Rational(alpha - 1) * x * y.pow(alpha - 2) * z);
  phi.set(1, 1, a * (x.pow(alpha) - y.pow(alpha - 1) * z));
  phi.set(2, 1,
          a * a * y.pow(alpha) + a * Rational(alpha - 1) * y.pow(alpha - 2) * z * z);
  phi.mutable_row_twists().assign(3, 2 * alpha - 1);
  phi.mutable_col_twists() = {3 * alpha - 2, 3 * alpha - 1};
  return phi;
}

namespace {

struct Family4Data {
  RingPtr ring;
  std::vector<Polynomial> L;      // the three linear forms
  std::vector<Polynomial> Q;      // the three quadric minors
  GradedMatrix theta;             // Jacobian of Q
  Polynomial f;                   // det theta
};

Family4Data family4_data(const std::vector<std::vector<Rational>>& coeffs) {
  if (coeffs.size() != 3 || coeffs[0].size() != 3 || coeffs[1].size() != 3 ||
      coeffs[2].size() != 3)
    throw std::invalid_argument("family4 needs a 3x3 coefficient grid");
  Family4Data d;
  d.ring = make_ring({"x", "y", "z"});
  Polynomial x = var(d.ring, 0), y = var(d.ring, 1), z = var(d.ring, 2);
  for (int i = 0; i < 3; ++i) {
    Polynomial L(d.ring);
    for (int j = 0; j < 3; ++j) L += Polynomial::constant(d.ring, coeffs[i][j]) * var(d.ring, j);
    d.L.push_back(std::move(L));
  }
  d.Q.push_back(x * d.L[1] - y * d.L[0]);
  d.Q.push_back(x * d.L[2] - z * d.L[0]);
  d.Q.push_back(y * d.L[2] - z * d.L[1]);
  bool rank2 = false;
  for (const Polynomial& q : d.Q)
    if (!q.is_zero()) rank2 = true;
  if (!rank2) throw std::invalid_argument("family4: matrix has rank < 2");
  d.theta = GradedMatrix(d.ring, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d.theta.set(i, j, d.Q[j].derivative(i));
  d.theta.mutable_row_twists().assign(3, 0);
  d.theta.mutable_col_twists().assign(3, 1);
  d.f = determinant(d.theta);
  return d;
}

}  // namespace

Polynomial family4_poly(const std::vector<std::vector<Rational>>& coeffs) {
  return family4_data(coeffs).f;
}

GradedMatrix family4_phi(const std::vector<std::vector<Rational>>& coeffs) {
  Family4Data d = family4_data(coeffs);
  const auto& a = coeffs;
  Rational A = a[0][0] + a[1][1] + a[2][2];
  Rational B = -Rational(4) * a[1][2] * a[2][1] -
               (a[1][1] - a[2][2]) * (a[1][1] - a[2][2]) -
               Rational(4) * a[0][2] * a[2][0] -
               Rational(4) * a[0][1] * a[1][0] +
               Rational(3) * a[0][0] * (a[1][1] + a[2][2]);
  Rational C = Rational(2) * a[0][0] + a[1][1] + a[2][2];
  GradedMatrix phi(d.ring, 3, 2);
  for (int i = 0; i < 3; ++i) {
    Polynomial theta1(d.ring);
    for (int j = 0; j < 3; ++j)
      theta1 += Polynomial::constant(d.ring, a[i][j]) * d.L[j];
    phi.set(i, 0, Rational(6) * theta1 +
                      Polynomial::constant(d.ring, B - A * C) * var(d.ring, i));
    phi.set(i, 1, Rational(3) * d.L[i] -
                      Polynomial::constant(d.ring, A) * var(d.ring, i));
  }
  phi.mutable_row_twists().assign(3, 2);
  phi.mutable_col_twists().assign(2, 3);
  return phi;
}

GradedMatrix family4_saito_matrix(
    const std::vector<std::vector<Rational>>& coeffs) {
  Family4Data d = family4_data(coeffs);
  const auto& a = coeffs;
  GradedMatrix Phi(d.ring, 3, 3);
  for (int i = 0; i < 3; ++i) {
    Polynomial theta1(d.ring);
    for (int j = 0; j < 3; ++j)
      theta1 += Polynomial::constant(d.ring, a[i][j]) * d.L[j];
    Phi.set(i, 0, theta1);
    Phi.set(i, 1, d.L[i]);
    Phi.set(i, 2, var(d.ring, i));
  }
  Phi.mutable_row_twists().assign(3, 0);
  Phi.mutable_col_twists().assign(3, 1);
  return Phi;
}

std::vector<ReferenceMatrix> reference_matrices(const FamilySpec& spec) {
  std::vector<ReferenceMatrix> out;
  switch (spec.id) {
    case FamilyId::family1: {
      RingPtr S = make_ring({"w", "u"});
      out.push_back({"phi_r(r=" + std::to_string(spec.n - 3) + ")",
                     power_syzygy_matrix(S, 0, 1, spec.n - 3)});
      out.push_back({"psi", family1_psi(spec.n)});
      break;
    }
    case FamilyId::family2:
      out.push_back({"psi_n", family2_psi(spec.n)});
      out.push_back({"saito", family2_saito_matrix(spec.n)});
      break;
    case FamilyId::family3:
      if (spec.beta == 2) out.push_back({"phi", family3_phi(spec.alpha)});
      break;
    case FamilyId::family4:
      out.push_back({"phi", family4_phi(spec.linear_forms)});
      out.push_back({"saito", family4_saito_matrix(spec.linear_forms)});
      break;
    default:
      break;
  }
  return out;
}

// --- claims -----------------------------------------------------------------

namespace {

Claim claim(std::string label, std::string citation,
            std::function<bool(FixtureSession&)> fn) {
  return Claim{std::move(label), std::move(citation), std::move(fn)};
}

bool same_column_span(const GradedMatrix& A, const GradedMatrix& B,
                      Deadline deadline) {
  for (int j = 0; j < B.cols(); ++j)
    if (!lift_through(A, B.column(j), deadline)) return false;
  for (int j = 0; j < A.cols(); ++j)
    if (!lift_through(B, A.column(j), deadline)) return false;
  return true;
}

std::vector<Polynomial> gradient_row(const Polynomial& f) {
  return gradient(f);
}

bool annihilates_gradient(const Polynomial& f, const GradedMatrix& M) {
  std::vector<Polynomial> g = gradient_row(f);
  for (int j = 0; j < M.cols(); ++j) {
    Polynomial acc(f.ring());
    for (int i = 0; i < M.rows(); ++i)
      if (!M.at(i, j).is_zero()) acc += g[i] * M.at(i, j);
    if (!acc.is_zero()) return false;
  }
  return true;
}

// resolution of the ideal as a module and its twist shape
bool ideal_resolution_shape(FixtureSession& s, std::vector<long> step0,
                            std::vector<long> step1) {
  Resolution res = minimal_free_resolution(
      present_ideal_module(s.jacobian(), s.deadline()), -1, s.deadline());
  if (res.length() != 1) return false;
  return res.step_twists(0) == step0 && res.step_twists(1) == step1;
}

Ideal hankel_2row_ideal(const RingPtr& R, const std::vector<int>& top,
                        const std::vector<int>& bottom) {
  std::vector<Polynomial> gens;
  for (size_t i = 0; i < top.size(); ++i)
    for (size_t j = i + 1; j < top.size(); ++j)
      gens.push_back(var(R, top[i]) * var(R, bottom[j]) -
                     var(R, top[j]) * var(R, bottom[i]));
  return Ideal(R, std::move(gens));
}

void add_family1_claims(Fixture& fx, int n) {
  fx.claims.push_back(claim("linear-free",
                            "f is a linear free divisor",
                            [](FixtureSession& s) {
                              return s.divisor().linear_free == true;
                            }));
  fx.claims.push_back(claim(
      "betti-shape", "0 -> R(-n)^(n-1) -> R(-n+1)^n -> J_f -> 0",
      [n](FixtureSession& s) {
        return ideal_resolution_shape(
            s, std::vector<long>(n, n - 1), std::vector<long>(n - 1, n));
      }));
  fx.claims.push_back(claim("reg-der", "reg Der_k(R/(f)) = n-2",
                            [n](FixtureSession& s) {
                              return s.divisor().der_reg == n - 2;
                            }));
  fx.claims.push_back(claim(
      "psi-is-syzygy-matrix",
      "psi = [eta | delta1 | delta2] presents J_f",
      [n](FixtureSession& s) {
        GradedMatrix psi = family1_psi(n);
        if (!annihilates_gradient(s.f(), psi)) return false;
        GradedMatrix engine = minimal_syzygy_matrix(s.jacobian(), s.deadline());
        return same_column_span(psi, engine, s.deadline());
      }));
  if (n == 4) {
    fx.claims.push_back(claim("linear-type",
                              "J_f is of linear type (n = 4)",
                              [](FixtureSession& s) {
                                return ideal_equal(s.sym(), s.rees(),
                                                   s.deadline());
                              }));
    fx.claims.push_back(claim("spread", "ell(J_f) = 4", [](FixtureSession& s) {
      return analytic_spread(s.blowup(), s.deadline()) == 4;
    }));
    fx.claims.push_back(claim("reduction-number", "r(J_f) = 0",
                              [](FixtureSession& s) {
                                auto r = reduction_number(s.blowup(), s.deadline());
                                return r && *r == 0;
                              }));
  } else {
    fx.claims.push_back(claim("spread", "ell(J_f) = 4 (n >= 5)",
                              [](FixtureSession& s) {
                                return analytic_spread(s.blowup(),
                                                       s.deadline()) == 4;
                              }));
    fx.claims.push_back(claim("reduction-number", "r(J_f) = 1",
                              [](FixtureSession& s) {
                                auto r = reduction_number(s.blowup(), s.deadline());
                                return r && *r == 1;
                              }));
    fx.claims.push_back(claim(
        "fiber-hankel",
        "F(J_f) = T / I_2 of the 2 x (n-3) Hankel in the first n-2 variables",
        [n](FixtureSession& s) {
          const RingPtr& F = s.blowup().fiber_ring;
          std::vector<int> top, bot;
          for (int i = 0; i + 1 <= n - 3; ++i) {
            top.push_back(i);
            bot.push_back(i + 1);
          }
          return ideal_equal(s.fiber(), hankel_2row_ideal(F, top, bot),
                             s.deadline());
        }));
    fx.claims.push_back(claim("fiber-cm", "F(J_f) is Cohen-Macaulay",
                              [](FixtureSession& s) {
                                return is_cohen_macaulay(s.fiber(), s.deadline());
                              }));
    fx.claims.push_back(claim("not-linear-type",
                              "J_f is not of linear type (n >= 5)",
                              [](FixtureSession& s) {
                                return !ideal_equal(s.sym(), s.rees(),
                                                    s.deadline());
                              }));
  }
  if (n <= 5)
    fx.claims.push_back(claim("rees-cm", "R(J_f) is Cohen-Macaulay",
                              [](FixtureSession& s) {
                                return is_cohen_macaulay(s.rees(), s.deadline());
                              }));
  fx.claims.push_back(claim("rees-dim", "dim R(J_f) = n + 1",
                            [n](FixtureSession& s) {
                              return dimension(s.rees(), s.deadline())
                                         .krull_dimension == n + 1;
                            }));
}

void add_family2_claims(Fixture& fx, int n) {
  const int N = 2 * n;
  fx.claims.push_back(claim("linear-free", "f is a linear free divisor",
                            [](FixtureSession& s) {
                              return s.divisor().linear_free == true;
                            }));
  fx.claims.push_back(claim("reg-der", "reg Der_k(R/(f)) = 2(n-1)",
                            [n](FixtureSession& s) {
                              return s.divisor().der_reg == 2 * (n - 1);
                            }));
  fx.claims.push_back(claim(
      "relations",
      "the structural relations among the partial derivatives hold",
      [n, N](FixtureSession& s) {
        const Polynomial& f = s.f();
        const RingPtr& R = f.ring();
        std::vector<Polynomial> d = gradient(f);
        Polynomial w = var(R, N - 2), u = var(R, N - 1);
        for (int i = 1; i <= n - 1; ++i) {
          // 2x2 vanishing minors of the x-partials
          for (int j = i + 1; j <= n - 1; ++j)
            if (!(d[2 * i - 2] * d[2 * j - 1] - d[2 * j - 2] * d[2 * i - 1])
                     .is_zero())
              return false;
          if (!(w * d[2 * i - 2] + u * d[2 * i - 1]).is_zero()) return false;
          if (!(var(R, 2 * i - 2) * d[2 * i - 2] +
                var(R, 2 * i - 1) * d[2 * i - 1] - f)
                   .is_zero())
            return false;
          Polynomial syz4 = Rational(n + 1) * (var(R, 2 * i - 2) * d[2 * i - 2] +
                                               var(R, 2 * i - 1) * d[2 * i - 1]) -
                            u * d[N - 1] - w * d[N - 2];
          if (!syz4.is_zero()) return false;
        }
        Polynomial syz5(R);
        for (int i = 1; i <= n - 1; ++i)
          syz5 += Rational(n + 1) * var(R, 2 * i - 1) * d[2 * i - 1];
        syz5 -= Rational(n) * w * d[N - 2];
        syz5 += u * d[N - 1];
        return syz5.is_zero();
      }));
  fx.claims.push_back(claim(
      "saito-determinant", "det M = (n+1) f up to the column-order sign",
      [n](FixtureSession& s) {
        // the displayed matrix evaluates to +(n+1)f at n = 2 and -(n+1)f at
        // n = 3; Saito's criterion only needs the scalar to be nonzero
        Rational expect =
            n % 2 == 0 ? Rational(n + 1) : Rational(-(n + 1));
        GradedMatrix M = family2_saito_matrix(n);
        if (determinant(M) != expect * s.f()) return false;
        std::vector<LogDerivation> thetas;
        for (int j = 0; j < M.cols(); ++j)
          thetas.push_back(make_log_derivation(s.f(), M.column(j)));
        auto lambda = saito_check(s.f(), thetas, s.deadline());
        return lambda && *lambda == expect;
      }));
  fx.claims.push_back(claim(
      "psi-is-syzygy-matrix", "psi_n presents J_f; basis = columns + Euler",
      [n](FixtureSession& s) {
        GradedMatrix psi = family2_psi(n);
        if (!annihilates_gradient(s.f(), psi)) return false;
        GradedMatrix engine = minimal_syzygy_matrix(s.jacobian(), s.deadline());
        return same_column_span(psi, engine, s.deadline());
      }));
  if (n == 2) {
    fx.claims.push_back(claim("linear-type", "J_f is of linear type iff n = 2",
                              [](FixtureSession& s) {
                                return ideal_equal(s.sym(), s.rees(),
                                                   s.deadline());
                              }));
    fx.claims.push_back(claim(
        "sym-complete-intersection",
        "Sym J_f is a complete intersection: the three forms are regular",
        [](FixtureSession& s) {
          return dimension(s.sym(), s.deadline()).height == 3 &&
                 s.sym().generators().size() == 3;
        }));
    fx.claims.push_back(claim(
        "stated-forms", "L1 = 3x1z1+3x2z2-ws-ut and L2 = wz1+uz2 generate",
        [](FixtureSession& s) {
          const RingPtr& E = s.blowup().extended_ring;
          Polynomial x1 = var(E, 0), x2 = var(E, 1), w = var(E, 2),
                     u = var(E, 3);
          Polynomial T1 = var(E, 4), T2 = var(E, 5), T3 = var(E, 6),
                     T4 = var(E, 7);
          Polynomial L1 =
              Rational(3) * x1 * T1 + Rational(3) * x2 * T2 - w * T3 - u * T4;
          Polynomial L2 = w * T1 + u * T2;
          return ideal_membership(L1, s.sym(), s.deadline()) &&
                 ideal_membership(L2, s.sym(), s.deadline());
        }));
  } else {
    fx.claims.push_back(claim(
        "fiber-generic-determinantal",
        "F(J_f) = T / I_2 of the generic 2 x (n-1) matrix in the z pairs",
        [n](FixtureSession& s) {
          const RingPtr& F = s.blowup().fiber_ring;
          std::vector<int> top, bot;
          for (int i = 0; i < n - 1; ++i) {
            top.push_back(2 * i);
            bot.push_back(2 * i + 1);
          }
          return ideal_equal(s.fiber(), hankel_2row_ideal(F, top, bot),
                             s.deadline());
        }));
    fx.claims.push_back(claim("spread", "ell(J_f) = n + 2",
                              [n](FixtureSession& s) {
                                return analytic_spread(s.blowup(),
                                                       s.deadline()) == n + 2;
                              }));
    fx.claims.push_back(claim("reduction-number", "r(J_f) = 1",
                              [](FixtureSession& s) {
                                auto r = reduction_number(s.blowup(), s.deadline());
                                return r && *r == 1;
                              }));
    fx.claims.push_back(claim("rees-cm", "R(J_f) is Cohen-Macaulay",
                              [](FixtureSession& s) {
                                return is_cohen_macaulay(s.rees(), s.deadline());
                              }));
    if (n == 3)
      fx.claims.push_back(claim(
          "sym-complete-intersection",
          "the entries of [z..t] psi_3 form a regular sequence",
          [](FixtureSession& s) {
            return dimension(s.sym(), s.deadline()).height ==
                   static_cast<int>(s.sym().generators().size());
          }));
  }
  fx.claims.push_back(claim("rees-dim", "dim R(J_f) = dim R + 1",
                            [N](FixtureSession& s) {
                              return dimension(s.rees(), s.deadline())
                                         .krull_dimension == N + 1;
                            }));
}

void add_family3_claims(Fixture& fx, int alpha, int beta) {
  fx.claims.push_back(claim("free", "f is a free divisor",
                            [](FixtureSession& s) {
                              return s.divisor().free_divisor == true;
                            }));
  fx.claims.push_back(claim("degree", "deg f = alpha beta",
                            [alpha, beta](FixtureSession& s) {
                              return s.f().degree() == long(alpha) * beta;
                            }));
  fx.claims.push_back(claim("reg-der", "reg Der_k(R/(f)) = alpha beta - 2",
                            [alpha, beta](FixtureSession& s) {
                              return s.divisor().der_reg ==
                                     long(alpha) * beta - 2;
                            }));
  if (alpha == 2 && beta == 2)
    fx.claims.push_back(claim("linear-type", "J_f is of linear type at (2,2)",
                              [](FixtureSession& s) {
                                return ideal_equal(s.sym(), s.rees(),
                                                   s.deadline());
                              }));
  if ((beta == 2 && alpha >= 3) || (alpha == 2 && beta == 3))
    fx.claims.push_back(claim("rees-cm", "R(J_f) is Cohen-Macaulay",
                              [](FixtureSession& s) {
                                return is_cohen_macaulay(s.rees(), s.deadline());
                              }));
  if ((alpha == 2 && beta >= 3) || (alpha >= 3 && beta == 2)) {
    fx.claims.push_back(claim("not-linear-type", "J_f is not of linear type",
                              [](FixtureSession& s) {
                                return !ideal_equal(s.sym(), s.rees(),
                                                    s.deadline());
                              }));
    fx.claims.push_back(claim("fiber-polynomial-ring",
                              "F(J_f) = k[s,t,u], so ell = 3 and r = 0",
                              [](FixtureSession& s) {
                                if (!s.fiber().is_zero_ideal()) return false;
                                auto r = reduction_number(s.blowup(), s.deadline());
                                return analytic_spread(s.blowup(),
                                                       s.deadline()) == 3 &&
                                       r && *r == 0;
                              }));
  }
  if (alpha == 3 && beta == 2)
    fx.claims.push_back(claim(
        "rees-explicit",
        "the Rees ideal is the two Sym forms plus xy T1 T2 - T3 H",
        [](FixtureSession& s) {
          const RingPtr& E = s.blowup().extended_ring;
          Polynomial x = var(E, 0), y = var(E, 1), z = var(E, 2);
          Polynomial T1 = var(E, 3), T2 = var(E, 4), T3 = var(E, 5);
          Polynomial H = Rational(2) * x * z * T1 +
                         (Rational(9) * y * y + Rational(6) * z * z) * T3 -
                         Rational(3) * y * z * T2;
          Polynomial g1 = y * y * T1 + Rational(3) * x * x * T3;
          Polynomial g2 = y * H + Rational(3) * x.pow(3) * T2;
          Polynomial g3 = x * y * T1 * T2 - T3 * H;
          return ideal_equal(s.rees(), Ideal(E, {g1, g2, g3}), s.deadline());
        }));
  fx.claims.push_back(claim("rees-dim", "dim R(J_f) = 4",
                            [](FixtureSession& s) {
                              return dimension(s.rees(), s.deadline())
                                         .krull_dimension == 4;
                            }));
}

void add_family3g_claims(Fixture& fx, int alpha, int beta) {
  fx.claims.push_back(claim("free", "g is a free divisor for odd beta >= 3",
                            [](FixtureSession& s) {
                              return s.divisor().free_divisor == true;
                            }));
  fx.claims.push_back(claim("degree", "deg g = alpha(beta - 1)",
                            [alpha, beta](FixtureSession& s) {
                              return s.f().degree() == long(alpha) * (beta - 1);
                            }));
  fx.claims.push_back(claim("reg-der", "reg Der_k(R/(g)) = alpha beta - alpha - 2",
                            [alpha, beta](FixtureSession& s) {
                              return s.divisor().der_reg ==
                                     long(alpha) * beta - alpha - 2;
                            }));
  fx.claims.push_back(claim(
      "factor-identity", "f_{alpha,beta} = B g_{alpha,beta}",
      [alpha, beta](FixtureSession& s) {
        const RingPtr& R = s.f().ring();
        Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2);
        Polynomial B = x.pow(alpha) - y.pow(alpha - 1) * z + y.pow(alpha);
        return B * s.f() == family3_poly(alpha, beta);
      }));
  if (beta == 3) {
    fx.claims.push_back(claim("rees-cm", "R(J_g) is Cohen-Macaulay",
                              [](FixtureSession& s) {
                                return is_cohen_macaulay(s.rees(), s.deadline());
                              }));
    fx.claims.push_back(claim("reduction-number", "r(J_g) = 0",
                              [](FixtureSession& s) {
                                auto r = reduction_number(s.blowup(), s.deadline());
                                return r && *r == 0;
                              }));
    fx.claims.push_back(claim(
        "sym-saturation", "saturating Sym by (x^(a-1), y^(a-2)) gives Rees",
        [alpha](FixtureSession& s) {
          const RingPtr& E = s.blowup().extended_ring;
          std::vector<Polynomial> sat;
          sat.push_back(var(E, 0).pow(alpha - 1));
          if (alpha >= 3) sat.push_back(var(E, 1).pow(alpha - 2));
          else sat.push_back(Polynomial::constant(E, 1));
          return ideal_equal(saturate(s.sym(), Ideal(E, sat), s.deadline()),
                             s.rees(), s.deadline());
        }));
    if (alpha == 2)
      fx.claims.push_back(claim("linear-type", "J_g linear type iff alpha = 2",
                                [](FixtureSession& s) {
                                  return ideal_equal(s.sym(), s.rees(),
                                                     s.deadline());
                                }));
    else
      fx.claims.push_back(claim("not-linear-type",
                                "J_g linear type iff alpha = 2",
                                [](FixtureSession& s) {
                                  return !ideal_equal(s.sym(), s.rees(),
                                                      s.deadline());
                                }));
  }
  if (beta == 5) {
    fx.claims.push_back(claim(
        "rees-almost-cm", "depth R(J_g) = 3 = dim - 1",
        [](FixtureSession& s) {
          int depth = rees_depth(s.blowup(), s.deadline());
          int dim = dimension(s.rees(), s.deadline()).krull_dimension;
          return depth == 3 && dim == 4;
        }));
    fx.claims.push_back(claim("reduction-number", "r(J_g) = 0",
                              [](FixtureSession& s) {
                                auto r = reduction_number(s.blowup(), s.deadline());
                                return r && *r == 0;
                              }));
  }
}

void add_family4_claims(Fixture& fx,
                        const std::vector<std::vector<Rational>>& coeffs) {
  fx.claims.push_back(claim("linear-free", "det Theta is a linear free divisor",
                            [](FixtureSession& s) {
                              return s.divisor().linear_free == true;
                            }));
  fx.claims.push_back(claim("linear-type", "J_f is of linear type",
                            [](FixtureSession& s) {
                              return ideal_equal(s.sym(), s.rees(), s.deadline());
                            }));
  fx.claims.push_back(claim(
      "linear-type-consequences",
      "linear type forces ell = n and r = 0",
      [](FixtureSession& s) {
        auto r = reduction_number(s.blowup(), s.deadline());
        return analytic_spread(s.blowup(), s.deadline()) == 3 && r && *r == 0;
      }));
  fx.claims.push_back(claim(
      "rees-complete-intersection",
      "R(J_f) = Sym J_f is a height 2 complete intersection",
      [](FixtureSession& s) {
        return complete_intersection_check(s.blowup(), s.deadline()) &&
               dimension(s.rees(), s.deadline()).height == 2;
      }));
  fx.claims.push_back(claim("reg-der", "reg Der_k(R/(f)) = 1",
                            [](FixtureSession& s) {
                              return s.divisor().der_reg == 1;
                            }));
  fx.claims.push_back(claim(
      "saito-phi", "det Phi = f/2 and the Saito basis is {theta1, theta2, e3}",
      [coeffs](FixtureSession& s) {
        GradedMatrix Phi = family4_saito_matrix(coeffs);
        if (Rational(2) * determinant(Phi) != s.f()) return false;
        std::vector<LogDerivation> thetas;
        for (int j = 0; j < 3; ++j)
          thetas.push_back(make_log_derivation(s.f(), Phi.column(j)));
        auto lambda = saito_check(s.f(), thetas, s.deadline());
        return lambda && *lambda == Rational(1, 2);
      }));
  fx.claims.push_back(claim(
      "phi-presents", "the closed-form phi presents J_f",
      [coeffs](FixtureSession& s) {
        GradedMatrix phi = family4_phi(coeffs);
        if (!annihilates_gradient(s.f(), phi)) return false;
        GradedMatrix engine = minimal_syzygy_matrix(s.jacobian(), s.deadline());
        return same_column_span(phi, engine, s.deadline());
      }));
}

void add_normal_crossing_claims(Fixture& fx, int n) {
  fx.claims.push_back(claim("linear-free", "x_1...x_n is a linear free divisor",
                            [](FixtureSession& s) {
                              return s.divisor().linear_free == true;
                            }));
  fx.claims.push_back(claim(
      "depth-powers", "depth R/J_f^m = max(0, n-m-1) for m = 1..n",
      [n](FixtureSession& s) {
        DepthTable t = depth_power_table(s.f(), n, s.deadline());
        if (t.truncated) return false;
        for (int m = 1; m <= n; ++m)
          if (t.depth.at(m) != std::max(0, n - m - 1)) return false;
        return true;
      }));
  fx.claims.push_back(claim(
      "gn-equality", "ht I_(n-j)(phi) = j+1 for j = 1..n-1",
      [n](FixtureSession& s) {
        const GradedMatrix& phi = s.blowup().syzygy_matrix;
        for (int j = 1; j <= n - 1; ++j) {
          std::vector<Polynomial> ms;
          for (Polynomial& m : minors(phi, n - j))
            if (!m.is_zero()) ms.push_back(std::move(m));
          if (ms.empty()) return false;
          if (dimension(Ideal(s.f().ring(), ms), s.deadline()).height != j + 1)
            return false;
        }
        return true;
      }));
  fx.claims.push_back(claim("linear-type", "the monomial ideal J_f is of linear type",
                            [](FixtureSession& s) {
                              return ideal_equal(s.sym(), s.rees(), s.deadline());
                            }));
  fx.claims.push_back(claim("spread", "ell(J_f) = n",
                            [n](FixtureSession& s) {
                              return analytic_spread(s.blowup(), s.deadline()) == n;
                            }));
  fx.claims.push_back(claim("rees-cm", "R(J_f) is Cohen-Macaulay",
                            [](FixtureSession& s) {
                              return is_cohen_macaulay(s.rees(), s.deadline());
                            }));
  fx.claims.push_back(claim(
      "homaloidal", "f is homaloidal (Cremona involution)",
      [n](FixtureSession& s) {
        HomaloidalEvidence ev =
            homaloidal_sufficient(s.f(), s.blowup(), n, s.deadline());
        return ev.established();
      }));
  fx.claims.push_back(claim(
      "Cf-cohen-macaulay", "C_f has pd 1 and dim n-1",
      [n](FixtureSession& s) {
        GradedModulePresentation C = cokernel_Cf(s.f());
        Resolution res = minimal_free_resolution(C, -1, s.deadline());
        MaxSpreadReport rep = max_spread_check(s.f(), s.blowup(), s.deadline());
        return projective_dimension(res) == 1 && rep.dim_Cf == n - 1 &&
               rep.max_spread;
      }));
}

}  // namespace

Fixture build(const FamilySpec& spec) {
  Fixture fx;
  fx.spec = spec;
  fx.name = spec.describe();
  switch (spec.id) {
    case FamilyId::family1:
      if (spec.n < 4) throw std::invalid_argument("family1 needs n >= 4");
      if (spec.n > 6 && !spec.override_caps)
        throw std::invalid_argument("family1 capped at n <= 6");
      fx.polynomial = family1_poly(spec.n);
      add_family1_claims(fx, spec.n);
      break;
    case FamilyId::family2:
      if (spec.n < 2) throw std::invalid_argument("family2 needs 2n >= 4");
      if (spec.n > 3 && !spec.override_caps)
        throw std::invalid_argument("family2 capped at n <= 3");
      fx.polynomial = family2_poly(spec.n);
      add_family2_claims(fx, spec.n);
      break;
    case FamilyId::family3:
      if (spec.alpha < 2 || spec.beta < 2)
        throw std::invalid_argument("family3 needs alpha, beta >= 2");
      if (spec.alpha * spec.beta > 12 && !spec.override_caps)
        throw std::invalid_argument("family3 capped at alpha beta <= 12");
      fx.polynomial = family3_poly(spec.alpha, spec.beta);
      add_family3_claims(fx, spec.alpha, spec.beta);
      break;
    case FamilyId::family3g:
      if (spec.beta < 3 || spec.beta % 2 == 0)
        throw std::invalid_argument("family3g needs odd beta >= 3");
      if (spec.alpha * spec.beta > 12 && !spec.override_caps)
        throw std::invalid_argument("family3g capped at alpha beta <= 12");
      fx.polynomial = family3g_poly(spec.alpha, spec.beta);
      add_family3g_claims(fx, spec.alpha, spec.beta);
      break;
    case FamilyId::family4: {
      Family4Data d = family4_data(spec.linear_forms);
      fx.polynomial = d.f;
      if (d.f.is_zero()) {
        fx.rejected = true;
        fx.reject_reason = "det Theta vanishes";
        break;
      }
      Polynomial red = squarefree_part(d.f);
      if (red != d.f.monic()) {
        fx.rejected = true;
        fx.reject_reason = "det Theta is not reduced";
        break;
      }
      add_family4_claims(fx, spec.linear_forms);
      break;
    }
    case FamilyId::normal_crossing:
      fx.polynomial = normal_crossing_poly(spec.n);
      add_normal_crossing_claims(fx, spec.n);
      break;
    case FamilyId::example:
      throw std::invalid_argument("example fixtures come from example_catalog");
  }
  if (!fx.polynomial.is_zero()) fx.ring = fx.polynomial.ring();
  return fx;
}

namespace {

Fixture example_fixture(const std::string& name, Polynomial f) {
  Fixture fx;
  fx.spec.id = FamilyId::example;
  fx.spec.example_name = name;
  fx.name = "example(" + name + ")";
  fx.polynomial = std::move(f);
  fx.ring = fx.polynomial.ring();
  return fx;
}

Polynomial circulant4_poly() {
  RingPtr R = make_ring({"x", "y", "z", "w"});
  Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2), w = var(R, 3);
  GradedMatrix M(R, 4, 4);
  std::vector<std::vector<Polynomial>> rows{
      {x, w, z, y}, {y, x, w, z}, {w, z, y, x}, {z, y, x, w}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M.set(i, j, rows[i][j]);
  return determinant(M);
}

Polynomial catalecticant2_poly() {
  RingPtr R = make_ring({"x", "y", "z", "w", "t", "u", "v"});
  GradedMatrix M(R, 3, 3);
  std::vector<std::vector<int>> idx{{0, 1, 2}, {2, 3, 4}, {4, 5, 6}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M.set(i, j, var(R, idx[i][j]));
  return determinant(M);
}

bool depth_table_matches(FixtureSession& s, const std::vector<int>& expect) {
  DepthTable t =
      depth_power_table(s.f(), static_cast<int>(expect.size()), s.deadline());
  if (t.truncated) return false;
  for (size_t m = 1; m <= expect.size(); ++m)
    if (t.depth.at(static_cast<int>(m)) != expect[m - 1]) return false;
  return true;
}

void add_section6_fixtures(std::vector<Fixture>& out) {
  {  // non-free smooth surface: the irrelevant-power complete intersection
    RingPtr R = make_ring({"x", "y", "z"});
    Polynomial f = var(R, 0).pow(3) + var(R, 1).pow(3) + var(R, 2).pow(3);
    Fixture fx = example_fixture("fermat-cubic", f);
    fx.claims.push_back(claim("not-free", "ht J_f = 3 rules out freeness",
                              [](FixtureSession& s) {
                                return s.divisor().free_divisor == false &&
                                       s.divisor().jacobian_height == 3;
                              }));
    out.push_back(std::move(fx));
  }
  {  // xyz + w^3: of linear type, so the spread is maximal
    RingPtr R = make_ring({"x", "y", "z", "w"});
    Polynomial f = var(R, 0) * var(R, 1) * var(R, 2) + var(R, 3).pow(3);
    Fixture fx = example_fixture("xyzw3", f);
    fx.claims.push_back(claim("linear-type", "J_f is of linear type",
                              [](FixtureSession& s) {
                                return ideal_equal(s.sym(), s.rees(),
                                                   s.deadline());
                              }));
    fx.claims.push_back(claim("max-spread", "ell(J_f) = 4",
                              [](FixtureSession& s) {
                                MaxSpreadReport rep = max_spread_check(
                                    s.f(), s.blowup(), s.deadline());
                                return rep.max_spread &&
                                       rep.analytic_spread == 4;
                              }));
    out.push_back(std::move(fx));
  }
  {  // Gordan-Noether cubic
    RingPtr R = make_ring({"x", "y", "z", "w", "t"});
    Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2), w = var(R, 3),
               t = var(R, 4);
    Fixture fx = example_fixture("gordan-noether", x * w * w + y * t * w + z * t * t);
    fx.claims.push_back(claim(
        "fiber", "F(J_f) = k[t1..t5]/(t2^2 - t1 t3)",
        [](FixtureSession& s) {
          const RingPtr& F = s.blowup().fiber_ring;
          Polynomial rel = var(F, 1) * var(F, 1) - var(F, 0) * var(F, 2);
          return ideal_equal(s.fiber(), Ideal(F, {rel}), s.deadline());
        }));
    fx.claims.push_back(claim("spread", "ell(J_f) = 4 < 5",
                              [](FixtureSession& s) {
                                MaxSpreadReport rep = max_spread_check(
                                    s.f(), s.blowup(), s.deadline());
                                return rep.analytic_spread == 4 &&
                                       !rep.max_spread;
                              }));
    fx.claims.push_back(claim("depths", "depth R/J_f = 2, depth R/J_f^2 = 1",
                              [](FixtureSession& s) {
                                return depth_table_matches(s, {2, 1});
                              }));
    fx.claims.push_back(claim(
        "ext-inconsistent",
        "Ext^1(C_f, R) cannot match C_f(d-2) when the spread is not maximal",
        [](FixtureSession& s) {
          return !ext_consistency_check(s.f(), s.deadline());
        }));
    fx.claims.push_back(claim(
        "homaloidal-never-fires",
        "the sufficient criterion cannot fire at ell < n",
        [](FixtureSession& s) {
          HomaloidalEvidence ev =
              homaloidal_sufficient(s.f(), s.blowup(), 3, s.deadline());
          return !ev.established();
        }));
    out.push_back(std::move(fx));
  }
  {  // the quintic is family 1 at n = 5; only the depth table is new here
    Fixture fx = example_fixture("quintic", family1_poly(5));
    fx.claims.push_back(claim(
        "depths", "depth R/J^m = 3, 2, 1, 1 for m = 1..4",
        [](FixtureSession& s) { return depth_table_matches(s, {3, 2, 1, 1}); }));
    fx.claims.push_back(claim(
        "homaloidal-never-fires",
        "the sufficient criterion cannot fire at ell = 4 < 5",
        [](FixtureSession& s) {
          HomaloidalEvidence ev =
              homaloidal_sufficient(s.f(), s.blowup(), 3, s.deadline());
          return !ev.established();
        }));
    out.push_back(std::move(fx));
  }
  {  // plane sextic = family 3 at (3, 2)
    Fixture fx = example_fixture("sextic", family3_poly(3, 2));
    fx.claims.push_back(claim("spread", "ell(J_f) = 3", [](FixtureSession& s) {
      MaxSpreadReport rep = max_spread_check(s.f(), s.blowup(), s.deadline());
      return rep.max_spread && rep.analytic_spread == 3;
    }));
    fx.claims.push_back(claim("depth-squared", "depth R/J_f^2 = 0",
                              [](FixtureSession& s) {
                                DepthTable t =
                                    depth_power_table(s.f(), 2, s.deadline());
                                return !t.truncated && t.depth.at(2) == 0;
                              }));
    fx.claims.push_back(claim(
        "rees-generator",
        "the non-linear Rees generator xy T1 T2 - T3 H joins the two Sym forms",
        [](FixtureSession& s) {
          const RingPtr& E = s.blowup().extended_ring;
          Polynomial x = var(E, 0), y = var(E, 1), z = var(E, 2);
          Polynomial T1 = var(E, 3), T2 = var(E, 4), T3 = var(E, 5);
          Polynomial H = Rational(2) * x * z * T1 +
                         (Rational(9) * y * y + Rational(6) * z * z) * T3 -
                         Rational(3) * y * z * T2;
          Polynomial W = x * y * T1 * T2 - T3 * H;
          if (!ideal_membership(W, s.rees(), s.deadline())) return false;
          if (ideal_membership(W, s.sym(), s.deadline())) return false;
          return ideal_equal(s.rees(), ideal_sum(s.sym(), Ideal(E, {W})),
                             s.deadline());
        }));
    fx.claims.push_back(claim("ext-consistency",
                              "Ext^1(C_f, R) is consistent with C_f(4)",
                              [](FixtureSession& s) {
                                return ext_consistency_check(s.f(), s.deadline());
                              }));
    out.push_back(std::move(fx));
  }
  {  // the quartic of the first maximal-spread example
    RingPtr R = make_ring({"x", "y", "z", "w"});
    Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2), w = var(R, 3);
    Fixture fx = example_fixture("gs1-quartic",
                                 x.pow(4) - x * y * z * z + z.pow(3) * w);
    fx.claims.push_back(claim("not-free", "J_f is not perfect",
                              [](FixtureSession& s) {
                                return s.divisor().free_divisor == false;
                              }));
    fx.claims.push_back(claim(
        "rees-generator",
        "4x T2^2 - z T1 T4 - y T4^2 is a non-linear Rees relation",
        [](FixtureSession& s) {
          const RingPtr& E = s.blowup().extended_ring;
          Polynomial x = var(E, 0), y = var(E, 1), z = var(E, 2);
          Polynomial T1 = var(E, 4), T2 = var(E, 5), T4 = var(E, 7);
          Polynomial P = Rational(4) * x * T2 * T2 - z * T1 * T4 - y * T4 * T4;
          return ideal_membership(P, s.rees(), s.deadline()) &&
                 !ideal_membership(P, s.sym(), s.deadline());
        }));
    fx.claims.push_back(claim("depths", "depth R/J^m = 1, 1, 1, 0 for m = 1..4",
                              [](FixtureSession& s) {
                                return depth_table_matches(s, {1, 1, 1, 0});
                              }));
    fx.claims.push_back(claim("spread", "ell(J_f) = 4",
                              [](FixtureSession& s) {
                                MaxSpreadReport rep = max_spread_check(
                                    s.f(), s.blowup(), s.deadline());
                                return rep.max_spread &&
                                       rep.analytic_spread == 4;
                              }));
    fx.claims.push_back(claim("ext-consistency",
                              "Ext^1(C_f, R) is consistent with C_f(2)",
                              [](FixtureSession& s) {
                                return ext_consistency_check(s.f(), s.deadline());
                              }));
    fx.claims.push_back(claim("rees-cm", "R(J_f) is Cohen-Macaulay",
                              [](FixtureSession& s) {
                                return is_cohen_macaulay(s.rees(), s.deadline());
                              }));
    out.push_back(std::move(fx));
  }
  {  // hyperplane-quadric arrangement in six variables
    RingPtr R = make_ring({"x", "y", "z", "w", "t", "u"});
    Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2), w = var(R, 3),
               t = var(R, 4), u = var(R, 5);
    Polynomial f = x * w * (y * z + z * t + t * u);
    Fixture fx = example_fixture("homal-red", f);
    fx.claims.push_back(claim("not-free", "J_f is not perfect",
                              [](FixtureSession& s) {
                                return s.divisor().free_divisor == false;
                              }));
    fx.claims.push_back(claim(
        "linearly-presented", "the minimal syzygy matrix is linear",
        [](FixtureSession& s) {
          const GradedMatrix& phi = s.blowup().syzygy_matrix;
          for (int i = 0; i < phi.rows(); ++i)
            for (int j = 0; j < phi.cols(); ++j)
              if (!phi.at(i, j).is_zero() && phi.at(i, j).degree() > 1)
                return false;
          return phi.cols() > 0;
        }));
    fx.claims.push_back(claim("projdim-cube", "projdim J_f^3 = 5",
                              [](FixtureSession& s) {
                                DepthTable t =
                                    depth_power_table(s.f(), 3, s.deadline());
                                return !t.truncated && t.depth.at(3) == 0;
                              }));
    fx.claims.push_back(claim(
        "homaloidal", "f is homaloidal by the sufficient criterion",
        [](FixtureSession& s) {
          HomaloidalEvidence ev =
              homaloidal_sufficient(s.f(), s.blowup(), 3, s.deadline());
          return ev.established();
        }));
    fx.claims.push_back(claim(
        "hessian", "h(f) = 3 x^2 w^2 f^2 and its reduced part 3f is not free",
        [](FixtureSession& s) {
          const Polynomial& f = s.f();
          const RingPtr& R = f.ring();
          Polynomial h = determinant(hessian(f));
          Polynomial expect = Rational(3) * var(R, 0).pow(2) *
                              var(R, 3).pow(2) * f * f;
          if (h != expect) return false;
          HessianExperiment ex = hessian_experiment(f, s.deadline());
          Rational c;
          return ex.reduced_part.proportional_to(f.monic(), &c) &&
                 ex.reduced_part_free == false;
        }));
    out.push_back(std::move(fx));
  }
  {  // irreducible homaloidal cubic in five variables
    RingPtr R = make_ring({"x", "y", "z", "w", "t"});
    Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2), w = var(R, 3),
               t = var(R, 4);
    Polynomial f = x * t * t + y * z * t + z.pow(3) + w * w * t;
    Fixture fx = example_fixture("irreducible-cubic", f);
    fx.claims.push_back(claim("perfect-height-3",
                              "J_f is perfect of height 3, so f is not free",
                              [](FixtureSession& s) {
                                return is_cohen_macaulay(s.jacobian(),
                                                         s.deadline()) &&
                                       s.divisor().jacobian_height == 3 &&
                                       s.divisor().free_divisor == false;
                              }));
    fx.claims.push_back(claim("projdim-cube", "projdim J_f^3 = 4",
                              [](FixtureSession& s) {
                                DepthTable t =
                                    depth_power_table(s.f(), 3, s.deadline());
                                return !t.truncated && t.depth.at(3) == 0;
                              }));
    fx.claims.push_back(claim(
        "homaloidal", "f is homaloidal by the sufficient criterion",
        [](FixtureSession& s) {
          HomaloidalEvidence ev =
              homaloidal_sufficient(s.f(), s.blowup(), 3, s.deadline());
          return ev.established() && ev.linear_minor_nonzero;
        }));
    out.push_back(std::move(fx));
  }
  {  // the irreducible homaloidal cubic in four variables
    RingPtr R = make_ring({"x", "y", "z", "w"});
    Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2), w = var(R, 3);
    Polynomial f = x * w * w + y * z * w + z.pow(3);
    Fixture fx = example_fixture("huh-cubic", f);
    fx.claims.push_back(claim(
        "not-linearly-presented",
        "J_f is not linearly presented: one minimal syzygy is quadratic",
        [](FixtureSession& s) {
          const GradedMatrix& phi = s.blowup().syzygy_matrix;
          bool has_quadratic = false;
          for (int i = 0; i < phi.rows(); ++i)
            for (int j = 0; j < phi.cols(); ++j)
              if (!phi.at(i, j).is_zero() && phi.at(i, j).degree() > 1)
                has_quadratic = true;
          return has_quadratic;
        }));
    // computed fact: beta_{2,3} = 3 linear syzygies with I_3(phi_1) != 0,
    // e.g. (2x, y, 0, -w); so the sufficient criterion does fire here
    fx.claims.push_back(claim(
        "three-linear-syzygies",
        "three minimal syzygies are linear and I_3(phi_1) != 0",
        [](FixtureSession& s) {
          HomaloidalEvidence ev =
              homaloidal_sufficient(s.f(), s.blowup(), 3, s.deadline());
          return ev.linear_syzygy_count == 3 && ev.linear_minor_nonzero &&
                 ev.established();
        }));
    fx.claims.push_back(claim("rees-cm", "R(J_f) is Cohen-Macaulay",
                              [](FixtureSession& s) {
                                return is_cohen_macaulay(s.rees(), s.deadline());
                              }));
    out.push_back(std::move(fx));
  }
  {  // the 4x4 circulant-style determinant
    Fixture fx = example_fixture("circulant4", circulant4_poly());
    fx.claims.push_back(claim("linear-free", "g is a linear free divisor",
                              [](FixtureSession& s) {
                                return s.divisor().linear_free == true;
                              }));
    fx.claims.push_back(claim(
        "hessian-square", "h(g) = lambda g^2 and h(g)_red is free",
        [](FixtureSession& s) {
          const Polynomial& g = s.f();
          Polynomial h = determinant(hessian(g));
          auto q = h.divided_by(g * g);
          if (!q || !q->is_constant() || q->is_zero()) return false;
          HessianExperiment ex = hessian_experiment(g, s.deadline());
          return ex.reduced_part_free == true;
        }));
    out.push_back(std::move(fx));
  }
  {  // 7-variable 2-catalecticant; the long-running experiment
    Fixture fx = example_fixture("catalecticant2", catalecticant2_poly());
    fx.slow = true;
    fx.claims.push_back(claim(
        "hessian-linear-free", "h(f) is reduced and a linear free divisor",
        [](FixtureSession& s) {
          HessianExperiment ex = hessian_experiment(s.f(), s.deadline());
          return ex.det_reduced && ex.reduced_part_linear_free == true;
        }));
    out.push_back(std::move(fx));
  }
}

}  // namespace

std::vector<Fixture> example_catalog() {
  std::vector<Fixture> out;
  for (int n : {4, 5, 6}) out.push_back(build({FamilyId::family1, n}));
  for (int n : {2, 3}) out.push_back(build({FamilyId::family2, n}));
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2},
                                                      {2, 3},
                                                      {3, 2},
                                                      {2, 4},
                                                      {4, 2},
                                                      {2, 5},
                                                      {5, 2},
                                                      {2, 6},
                                                      {6, 2},
                                                      {3, 3},
                                                      {3, 4},
                                                      {4, 3}}) {
    FamilySpec spec{FamilyId::family3};
    spec.alpha = a;
    spec.beta = b;
    out.push_back(build(spec));
  }
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 5}}) {
    FamilySpec spec{FamilyId::family3g};
    spec.alpha = a;
    spec.beta = b;
    out.push_back(build(spec));
  }
  {
    auto f4 = [&](std::vector<std::vector<Rational>> rows, const char* tag) {
      FamilySpec spec{FamilyId::family4};
      spec.linear_forms = std::move(rows);
      Fixture fx = build(spec);
      fx.name = "family4(" + std::string(tag) + ")";
      out.push_back(std::move(fx));
    };
    // L = (y, x, x)
    f4({{0, 1, 0}, {1, 0, 0}, {1, 0, 0}}, "y,x,x");
    // L = (0, x+z, y+z)
    f4({{0, 0, 0}, {1, 0, 1}, {0, 1, 1}}, "0,x+z,y+z");
    // degenerate: L = (x-y, x+y+z, y+z) gives a non-reduced cubic
    f4({{1, -1, 0}, {1, 1, 1}, {0, 1, 1}}, "x-y,x+y+z,y+z");
    // further samples
    f4({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, "z,x,y");
    f4({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, "x+y,y+z,x+z");
    f4({{0, 2, 1}, {1, 0, 0}, {0, 1, 0}}, "2y+z,x,y");
  }
  for (int n : {3, 4, 5}) {
    FamilySpec spec{FamilyId::normal_crossing};
    spec.n = n;
    out.push_back(build(spec));
  }
  add_section6_fixtures(out);
  return out;
}

std::string fixture_manifest(const std::vector<Fixture>& fixtures) {
  std::ostringstream os;
  os << "# fixture manifest v1\n";
  for (const Fixture& fx : fixtures) {
    os << "fixture " << fx.name << "\n";
    if (fx.ring) {
      os << "  ring";
      for (const auto& v : fx.ring->names()) os << " " << v;
      os << "\n";
    }
    os << "  poly " << fx.polynomial.to_string() << "\n";
    if (fx.rejected) os << "  rejected " << fx.reject_reason << "\n";
    if (fx.slow) os << "  slow\n";
    for (const Claim& c : fx.claims)
      os << "  claim " << c.label << " :: " << c.citation << "\n";
  }
  return os.str();
}

}  // namespace freediv
