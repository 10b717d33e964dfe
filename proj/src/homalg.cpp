#include "freediv/homalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace freediv {

GradedModulePresentation present_cyclic(const Ideal& I) {
  const RingPtr& R = I.ring();
  const auto& gens = I.generators();
  GradedMatrix M(R, 1, static_cast<int>(gens.size()));
  std::vector<long> col(gens.size());
  for (size_t j = 0; j < gens.size(); ++j) {
    auto d = gens[j].homogeneous_degree();
    if (!d) throw std::invalid_argument("present_cyclic: inhomogeneous ideal");
    col[j] = *d;
    M.set(0, static_cast<int>(j), gens[j]);
  }
  M.mutable_col_twists() = std::move(col);
  M.mutable_row_twists() = {0};
  return {std::move(M)};
}

GradedModulePresentation present_ideal_module(const Ideal& I,
                                              Deadline deadline) {
  GradedModulePresentation cyc = present_cyclic(I);
  GradedMatrix S = syzygies(cyc.relations, deadline);
  return {std::move(S)};
}

namespace {

bool is_unit_entry(const Polynomial& p) {
  return !p.is_zero() && p.is_constant();
}

void drop_row(GradedMatrix& M, int r) {
  std::vector<int> rows, cols;
  for (int i = 0; i < M.rows(); ++i)
    if (i != r) rows.push_back(i);
  for (int j = 0; j < M.cols(); ++j) cols.push_back(j);
  M = M.submatrix(rows, cols);
}

void drop_col(GradedMatrix& M, int c) {
  std::vector<int> rows, cols;
  for (int i = 0; i < M.rows(); ++i) rows.push_back(i);
  for (int j = 0; j < M.cols(); ++j)
    if (j != c) cols.push_back(j);
  M = M.submatrix(rows, cols);
}

// Remove one trivial summand of cur (a unit pivot), keeping coker and
// exactness.  prev, when given, is the previous map of the complex, whose
// columns are indexed by cur's rows.
bool prune_one(GradedMatrix& cur, GradedMatrix* prev) {
  int r = -1, c = -1;
  for (int i = 0; i < cur.rows() && r < 0; ++i)
    for (int j = 0; j < cur.cols(); ++j)
      if (is_unit_entry(cur.at(i, j))) {
        r = i;
        c = j;
        break;
      }
  if (r < 0) return false;
  const Rational u = cur.at(r, c).leading_coeff();

  // clear row r by column operations on cur
  for (int j = 0; j < cur.cols(); ++j) {
    if (j == c || cur.at(r, j).is_zero()) continue;
    Polynomial lam = cur.at(r, j).scaled(Rational(1) / u);
    for (int i = 0; i < cur.rows(); ++i)
      cur.set(i, j, cur.at(i, j) - lam * cur.at(i, c));
  }
  // clear column c by row operations on cur; mirror on prev columns
  for (int i = 0; i < cur.rows(); ++i) {
    if (i == r || cur.at(i, c).is_zero()) continue;
    Polynomial lam = cur.at(i, c).scaled(Rational(1) / u);
    for (int j = 0; j < cur.cols(); ++j)
      cur.set(i, j, cur.at(i, j) - lam * cur.at(r, j));
    if (prev)
      for (int a = 0; a < prev->rows(); ++a)
        prev->set(a, r, prev->at(a, r) + lam * prev->at(a, i));
  }
  if (prev) drop_col(*prev, r);
  drop_row(cur, r);
  drop_col(cur, c);
  return true;
}

void prune_pair(GradedMatrix& cur, GradedMatrix* prev) {
  while (prune_one(cur, prev)) {
  }
}

}  // namespace

std::vector<long> Resolution::step_twists(int i) const {
  std::vector<long> t =
      i == 0 ? f0_twists : maps[i - 1].col_twists();
  std::sort(t.begin(), t.end());
  return t;
}

std::map<std::pair<int, long>, int> Resolution::betti() const {
  std::map<std::pair<int, long>, int> b;
  for (int i = 0; i <= length(); ++i)
    for (long t : step_twists(i)) b[{i, t}]++;
  return b;
}

std::string Resolution::betti_table_text() const {
  auto b = betti();
  if (b.empty()) return "(zero module)\n";
  long lo = 1 << 30, hi = -(1 << 30);
  for (auto& [key, v] : b) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  std::ostringstream os;
  os << "       ";
  for (int i = 0; i <= length(); ++i) os << i << "\t";
  os << "\n";
  for (long d = lo; d <= hi; ++d) {
    os << d << ":\t";
    for (int i = 0; i <= length(); ++i) {
      auto it = b.find({i, d + i});
      os << (it == b.end() ? std::string(".") : std::to_string(it->second))
         << "\t";
    }
    os << "\n";
  }
  return os.str();
}

Resolution minimal_free_resolution(const GradedModulePresentation& P,
                                   int max_length, Deadline deadline) {
  const RingPtr& R = P.ring();
  const int n = R->arity();
  if (max_length < 0) max_length = n;
  P.relations.require_homogeneous("minimal_free_resolution");

  Resolution res;
  GradedMatrix d1 = P.relations;
  prune_pair(d1, nullptr);
  res.f0_twists = d1.row_twists();
  if (d1.cols() == 0) return res;  // free module
  res.maps.push_back(std::move(d1));

  while (true) {
    int len = static_cast<int>(res.maps.size());
    if (len >= max_length && max_length < n) break;  // caller cutoff
    deadline.check("minimal_free_resolution");
    GradedMatrix next = syzygies(res.maps.back(), deadline);
    if (next.cols() == 0) break;
    prune_pair(next, &res.maps.back());
    if (res.maps.back().cols() == 0) {
      // the whole previous step was trivial
      res.maps.pop_back();
      break;
    }
    if (next.cols() == 0) break;
    if (len >= n)
      throw std::logic_error("resolution exceeds the Hilbert syzygy bound");
    res.maps.push_back(std::move(next));
  }
  return res;
}

int projective_dimension(const Resolution& res) { return res.length(); }

int depth_AB(const Resolution& res, int arity) { return arity - res.length(); }

long regularity(const Resolution& res) {
  long reg = 0;
  bool seen = false;
  for (int i = 0; i <= res.length(); ++i)
    for (long t : res.step_twists(i)) {
      reg = seen ? std::max(reg, t - i) : t - i;
      seen = true;
    }
  return reg;
}

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries h = *this;
  // cancel (1 - t) factors while the division is exact
  while (h.denominator_exponent > 0 && !h.numerator.empty()) {
    long sum = 0;
    for (auto& [d, c] : h.numerator) sum += c;
    if (sum != 0) break;  // numerator(1) != 0: not divisible
    std::map<long, long> rem = h.numerator;
    std::map<long, long> quot;
    while (!rem.empty() && rem.rbegin()->first > 0) {
      long d = rem.rbegin()->first;
      long c = rem.rbegin()->second;
      // c t^d = (-t) * (-c t^(d-1)); subtract (1 - t)(-c t^(d-1))
      quot[d - 1] -= c;
      rem.erase(d);
      rem[d - 1] += c;
      if (rem[d - 1] == 0) rem.erase(d - 1);
    }
    if (!rem.empty()) break;
    for (auto it = quot.begin(); it != quot.end();)
      it = it->second == 0 ? quot.erase(it) : std::next(it);
    h.numerator = std::move(quot);
    --h.denominator_exponent;
  }
  return h;
}

long HilbertSeries::coefficient(long degree) const {
  // [t^degree] numerator / (1-t)^n with n = denominator_exponent
  long n = denominator_exponent;
  long acc = 0;
  for (auto& [d, c] : numerator) {
    long k = degree - d;
    if (k < 0) continue;
    if (n == 0) {
      if (k == 0) acc += c;
      continue;
    }
    // C(k + n - 1, n - 1)
    long binom = 1;
    for (long i = 1; i <= n - 1; ++i) binom = binom * (k + i) / i;
    acc += c * binom;
  }
  return acc;
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
  HilbertSeries a = reduced(), b = o.reduced();
  return a.denominator_exponent == b.denominator_exponent &&
         a.numerator == b.numerator;
}

HilbertSeries HilbertSeries::shifted(long s) const {
  HilbertSeries h;
  h.denominator_exponent = denominator_exponent;
  for (auto& [d, c] : numerator) h.numerator[d - s] = c;
  return h;
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (auto& [d, c] : numerator) {
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    long a = std::abs(c);
    if (a != 1 || d == 0) os << a;
    if (d != 0) {
      if (a != 1) os << "*";
      os << "t";
      if (d != 1) os << "^" << d;
    }
    first = false;
  }
  if (first) os << "0";
  os << ") / (1-t)^" << denominator_exponent;
  return os.str();
}

HilbertSeries hilbert_series(const Resolution& res, int arity) {
  HilbertSeries h;
  h.denominator_exponent = arity;
  for (int i = 0; i <= res.length(); ++i)
    for (long t : res.step_twists(i)) h.numerator[t] += (i % 2) ? -1 : 1;
  for (auto it = h.numerator.begin(); it != h.numerator.end();) {
    if (it->second == 0) it = h.numerator.erase(it); else ++it;
  }
  return h;
}

long graded_dimension(const GradedModulePresentation& P, long degree,
                      Deadline deadline) {
  const RingPtr& R = P.ring();
  const int rank = P.generator_count();
  // module GB of the relation columns
  ModOrder ord(R, rank);
  GBEngine engine(ord, P.relations.row_twists(), deadline);
  for (int j = 0; j < P.relations.cols(); ++j)
    engine.add_input(mvec_from_column(P.relations.column(j), ord));
  engine.run();
  std::vector<std::pair<Monomial, int>> leads;
  for (const MVec& g : engine.reduced_basis())
    leads.push_back({g.lead().mono, g.lead().comp});

  // count standard monomials of each component in the right degree
  long count = 0;
  std::vector<uint16_t> exps(R->arity(), 0);
  for (int comp = 0; comp < rank; ++comp) {
    long d = degree - P.generator_degrees()[comp];
    if (d < 0) continue;
    // enumerate monomials of total weighted degree d
    std::function<void(int, long)> rec = [&](int var, long left) {
      if (var == R->arity()) {
        if (left != 0) return;
        Monomial m(exps, *R);
        for (auto& [lm, lc] : leads)
          if (lc == comp && lm.divides(m)) return;
        ++count;
        return;
      }
      long w = R->weights()[var];
      for (long e = 0; e * w <= left; ++e) {
        exps[var] = static_cast<uint16_t>(e);
        rec(var + 1, left - e * w);
      }
      exps[var] = 0;
    };
    rec(0, d);
  }
  return count;
}

GradedModulePresentation ext1_against_ring(const GradedModulePresentation& P,
                                           Deadline deadline) {
  const RingPtr& R = P.ring();
  Resolution res = minimal_free_resolution(P, -1, deadline);
  if (res.maps.empty()) {
    // free module: Ext^1 = 0
    GradedMatrix zero(R, 0, 0);
    return {zero};
  }
  GradedMatrix d1t = res.maps[0].dual();  // F0* -> F1*
  GradedMatrix K;                          // generators of ker(d2*)
  if (res.maps.size() >= 2) {
    GradedMatrix d2t = res.maps[1].dual();  // F1* -> F2*
    K = syzygies(d2t, deadline);
  } else {
    K = GradedMatrix::identity(R, d1t.rows(), d1t.row_twists());
  }
  // relations of coker: lifts of the image generators + syzygies of K
  std::vector<std::vector<Polynomial>> rel_cols;
  std::vector<long> rel_twists;
  for (int j = 0; j < d1t.cols(); ++j) {
    auto lam = lift_through(K, d1t.column(j), deadline);
    if (!lam)
      throw std::logic_error("ext1: image does not lift into the kernel");
    rel_cols.push_back(std::move(*lam));
    rel_twists.push_back(d1t.col_twists()[j]);
  }
  GradedMatrix SK = syzygies(K, deadline);
  for (int j = 0; j < SK.cols(); ++j) {
    rel_cols.push_back(SK.column(j));
    rel_twists.push_back(SK.col_twists()[j]);
  }
  GradedMatrix rel = GradedMatrix::from_columns(R, rel_cols, K.col_twists(),
                                                rel_twists);
  rel.require_homogeneous("ext1 presentation");
  return {std::move(rel)};
}

bool is_cohen_macaulay(const Ideal& I, Deadline deadline) {
  for (const Polynomial& g : I.generators())
    if (!g.is_homogeneous())
      throw std::invalid_argument("is_cohen_macaulay: inhomogeneous ideal");
  Resolution res = minimal_free_resolution(present_cyclic(I), -1, deadline);
  DimensionReport dim = dimension(I, deadline);
  return projective_dimension(res) == dim.height;
}

bool same_betti_and_hilbert(const GradedModulePresentation& A,
                            const GradedModulePresentation& B,
                            Deadline deadline) {
  Resolution ra = minimal_free_resolution(A, -1, deadline);
  Resolution rb = minimal_free_resolution(B, -1, deadline);
  if (ra.betti() != rb.betti()) return false;
  return hilbert_series(ra, A.ring()->arity()) ==
         hilbert_series(rb, B.ring()->arity());
}

}  // namespace freediv
