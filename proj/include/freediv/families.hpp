#ifndef FREEDIV_FAMILIES_HPP
#define FREEDIV_FAMILIES_HPP

#include <functional>
#include <string>

#include "freediv/maxspread.hpp"

namespace freediv {

enum class FamilyId {
  family1,
  family2,
  family3,
  family3g,
  family4,
  normal_crossing,
  example,
};

struct FamilySpec {
  FamilyId id;
  int n = 0;            // family1, family2 (ring arity 2n), normal_crossing
  int alpha = 0, beta = 0;  // family3, family3g
  // family4: coefficient rows of the three linear forms in x, y, z
  std::vector<std::vector<Rational>> linear_forms;
  std::string example_name;
  bool override_caps = false;

  std::string describe() const;
};

// Lazily computed per-fixture analysis shared by the claims.
class FixtureSession {
 public:
  FixtureSession(Polynomial f, Deadline deadline)
      : f_(std::move(f)), deadline_(deadline) {}

  const Polynomial& f() const { return f_; }
  Deadline deadline() const { return deadline_; }
  const Ideal& jacobian();
  const BlowupContext& blowup();
  const DivisorReport& divisor();
  const Ideal& sym();
  const Ideal& rees();
  const Ideal& fiber();

 private:
  Polynomial f_;
  Deadline deadline_;
  std::optional<Ideal> jacobian_;
  std::optional<BlowupContext> blowup_;
  std::optional<DivisorReport> divisor_;
  std::optional<Ideal> sym_, rees_, fiber_;
};

struct Claim {
  std::string label;     // short machine-ish tag
  std::string citation;  // the statement being regressed, printed on failure
  std::function<bool(FixtureSession&)> check;
};

struct Fixture {
  std::string name;
  FamilySpec spec;
  RingPtr ring;
  Polynomial polynomial;
  bool rejected = false;  // legal degenerate outcome (family 4)
  std::string reject_reason;
  bool slow = false;  // excluded unless explicitly included
  std::vector<Claim> claims;
};

// the exact polynomial plus the paper-stated expectations
Fixture build(const FamilySpec& spec);

struct ReferenceMatrix {
  std::string label;
  GradedMatrix matrix;
};

// the paper's explicit matrices for the family, entry-exact
std::vector<ReferenceMatrix> reference_matrices(const FamilySpec& spec);

// the full catalog of worked examples (plus the families at paper-featured
// parameters) forming the regression corpus
std::vector<Fixture> example_catalog();

// --- raw constructors (used by the fixtures and the CLI) -------------------

Polynomial family1_poly(int n);          // k[x1..x_{n-2}, w, u]
Polynomial family2_poly(int n);          // k[x1..x_{2n-2}, w, u], arity 2n
Polynomial family3_poly(int alpha, int beta);   // k[x, y, z]
Polynomial family3g_poly(int alpha, int beta);  // beta >= 3 odd
// returns the cubic det Theta(Q) of the three quadric minors; the matrix
// rows are the coefficients of L1, L2, L3
Polynomial family4_poly(const std::vector<std::vector<Rational>>& coeffs);
Polynomial normal_crossing_poly(int n);  // x_1 ... x_n

// the (r+1) x r staircase syzygy matrix of (w, u)^r
GradedMatrix power_syzygy_matrix(const RingPtr& R, int w_index, int u_index,
                                 int r);
GradedMatrix family1_psi(int n);   // n x (n-1), columns eta | delta1 | delta2
GradedMatrix family2_psi(int n);   // 2n x (2n-1)
GradedMatrix family2_saito_matrix(int n);  // the square matrix with det (n+1)f
GradedMatrix family3_phi(int alpha);       // beta = 2 syzygy matrix
GradedMatrix family4_phi(const std::vector<std::vector<Rational>>& coeffs);
GradedMatrix family4_saito_matrix(
    const std::vector<std::vector<Rational>>& coeffs);

// serializable manifest of the fixture corpus (names, polynomials, claims)
std::string fixture_manifest(const std::vector<Fixture>& fixtures);

}  // namespace freediv

#endif
