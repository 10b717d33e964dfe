#include "freediv/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace freediv {

GradedMatrix::GradedMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  entries_.assign(rows, std::vector<Polynomial>(cols, Polynomial(ring_)));
  row_twists_.assign(rows, 0);
  col_twists_.assign(cols, 0);
}

GradedMatrix::GradedMatrix(RingPtr ring,
                           std::vector<std::vector<Polynomial>> entries,
                           std::vector<long> row_twists,
                           std::vector<long> col_twists)
    : ring_(std::move(ring)),
      rows_(static_cast<int>(entries.size())),
      cols_(entries.empty() ? static_cast<int>(col_twists.size())
                            : static_cast<int>(entries[0].size())),
      entries_(std::move(entries)),
      row_twists_(std::move(row_twists)),
      col_twists_(std::move(col_twists)) {
  if (static_cast<int>(row_twists_.size()) != rows_ ||
      static_cast<int>(col_twists_.size()) != cols_)
    throw std::invalid_argument("twist lengths do not match matrix shape");
  for (auto& row : entries_)
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("ragged matrix");
}

bool GradedMatrix::is_homogeneous() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Polynomial& p = entries_[i][j];
      if (p.is_zero()) continue;
      auto d = p.homogeneous_degree();
      if (!d || *d != col_twists_[j] - row_twists_[i]) return false;
    }
  return true;
}

void GradedMatrix::require_homogeneous(const char* what) const {
  if (!is_homogeneous())
    throw std::invalid_argument(std::string(what) +
                                ": matrix is not graded-homogeneous");
}

bool GradedMatrix::is_zero() const {
  for (const auto& row : entries_)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

GradedMatrix GradedMatrix::transpose() const {
  GradedMatrix t(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.entries_[j][i] = entries_[i][j];
  t.row_twists_ = col_twists_;
  t.col_twists_ = row_twists_;
  return t;
}

GradedMatrix GradedMatrix::dual() const {
  GradedMatrix t = transpose();
  for (long& w : t.row_twists_) w = -w;
  for (long& w : t.col_twists_) w = -w;
  return t;
}

GradedMatrix GradedMatrix::shifted(long s) const {
  GradedMatrix t = *this;
  for (long& w : t.row_twists_) w -= s;
  for (long& w : t.col_twists_) w -= s;
  return t;
}

std::vector<Polynomial> GradedMatrix::column(int j) const {
  std::vector<Polynomial> c;
  c.reserve(rows_);
  for (int i = 0; i < rows_; ++i) c.push_back(entries_[i][j]);
  return c;
}

std::vector<Polynomial> GradedMatrix::row(int i) const { return entries_[i]; }

GradedMatrix GradedMatrix::select_columns(const std::vector<int>& js) const {
  GradedMatrix m(ring_, rows_, static_cast<int>(js.size()));
  m.row_twists_ = row_twists_;
  for (size_t k = 0; k < js.size(); ++k) {
    m.col_twists_[k] = col_twists_[js[k]];
    for (int i = 0; i < rows_; ++i) m.entries_[i][k] = entries_[i][js[k]];
  }
  return m;
}

GradedMatrix GradedMatrix::submatrix(const std::vector<int>& rows,
                                     const std::vector<int>& cols) const {
  GradedMatrix m(ring_, static_cast<int>(rows.size()),
                 static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    m.row_twists_[i] = row_twists_[rows[i]];
    for (size_t j = 0; j < cols.size(); ++j)
      m.entries_[i][j] = entries_[rows[i]][cols[j]];
  }
  for (size_t j = 0; j < cols.size(); ++j) m.col_twists_[j] = col_twists_[cols[j]];
  return m;
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
  GradedMatrix r(ring_, rows_, o.cols_);
  r.row_twists_ = row_twists_;
  r.col_twists_ = o.col_twists_;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      Polynomial acc(ring_);
      for (int k = 0; k < cols_; ++k)
        if (!entries_[i][k].is_zero() && !o.entries_[k][j].is_zero())
          acc += entries_[i][k] * o.entries_[k][j];
      r.entries_[i][j] = std::move(acc);
    }
  return r;
}

std::vector<Polynomial> GradedMatrix::apply(
    const std::vector<Polynomial>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("vector length mismatch");
  std::vector<Polynomial> out(rows_, Polynomial(ring_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!entries_[i][j].is_zero() && !v[j].is_zero())
        out[i] += entries_[i][j] * v[j];
  return out;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (row_twists_ != o.row_twists_ || col_twists_ != o.col_twists_)
    return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (entries_[i][j] != o.entries_[i][j]) return false;
  return true;
}

GradedMatrix GradedMatrix::identity(RingPtr ring, int n,
                                    std::vector<long> twists) {
  GradedMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i)
    m.entries_[i][i] = Polynomial::constant(ring, 1);
  if (twists.empty()) twists.assign(n, 0);
  m.row_twists_ = twists;
  m.col_twists_ = std::move(twists);
  return m;
}

GradedMatrix GradedMatrix::from_columns(
    RingPtr ring, const std::vector<std::vector<Polynomial>>& cols,
    std::vector<long> row_twists, std::vector<long> col_twists) {
  int rows = static_cast<int>(row_twists.size());
  GradedMatrix m(ring, rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows)
      throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < rows; ++i) m.entries_[i][j] = cols[j][i];
  }
  m.row_twists_ = std::move(row_twists);
  m.col_twists_ = std::move(col_twists);
  return m;
}

std::string GradedMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += "[ ";
    for (int j = 0; j < cols_; ++j) {
      s += entries_[i][j].to_string();
      if (j + 1 < cols_) s += ", ";
    }
    s += " ]\n";
  }
  return s;
}

namespace {

// expansion over columns left to right, memoized on the set of still-unused
// rows; effective on the sparse structured matrices we meet
Polynomial det_memo(const GradedMatrix& M, uint64_t row_mask, int col,
                    std::unordered_map<uint64_t, Polynomial>& memo) {
  const RingPtr& R = M.ring();
  if (col == M.cols()) return Polynomial::constant(R, 1);
  auto it = memo.find(row_mask);
  if (it != memo.end()) return it->second;
  Polynomial acc(R);
  int sign_toggle = 0;
  for (int i = 0; i < M.rows(); ++i) {
    if (!(row_mask & (uint64_t(1) << i))) continue;
    if (!M.at(i, col).is_zero()) {
      Polynomial sub =
          det_memo(M, row_mask & ~(uint64_t(1) << i), col + 1, memo);
      if (!sub.is_zero()) {
        Polynomial piece = M.at(i, col) * sub;
        acc += (sign_toggle % 2) ? -piece : piece;
      }
    }
    ++sign_toggle;
  }
  memo.emplace(row_mask, acc);
  return acc;
}

Polynomial det_bareiss(const GradedMatrix& M) {
  const RingPtr& R = M.ring();
  int n = M.rows();
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = M.at(i, j);
  Polynomial prev = Polynomial::constant(R, 1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a[i][k].is_zero()) { p = i; break; }
      if (p < 0) return Polynomial(R);  // singular
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = num.divided_by(prev);
        if (!q) throw std::logic_error("bareiss: exact division failed");
        a[i][j] = std::move(*q);
      }
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

Polynomial determinant(const GradedMatrix& M) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  if (M.rows() == 0) return Polynomial::constant(M.ring(), 1);
  if (M.rows() > 64) throw std::invalid_argument("matrix too large");
  // count nonzero entries; sparse or small goes to memoized expansion
  int nz = 0;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (!M.at(i, j).is_zero()) ++nz;
  bool sparse = nz <= M.rows() * M.cols() / 2;
  if (M.rows() <= 8 || sparse) {
    std::unordered_map<uint64_t, Polynomial> memo;
    uint64_t full = M.rows() == 64 ? ~uint64_t(0)
                                   : ((uint64_t(1) << M.rows()) - 1);
    return det_memo(M, full, 0, memo);
  }
  return det_bareiss(M);
}

Polynomial determinant_cofactor(const GradedMatrix& M) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  int n = M.rows();
  if (n == 0) return Polynomial::constant(M.ring(), 1);
  if (n == 1) return M.at(0, 0);
  Polynomial acc(M.ring());
  std::vector<int> rows, cols;
  for (int i = 1; i < n; ++i) rows.push_back(i);
  for (int j = 0; j < n; ++j) {
    if (M.at(0, j).is_zero()) continue;
    cols.clear();
    for (int c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    Polynomial cof = M.at(0, j) * determinant_cofactor(M.submatrix(rows, cols));
    acc += (j % 2) ? -cof : cof;
  }
  return acc;
}

namespace {

void subsets_rec(int n, int r, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - (r - static_cast<int>(cur.size())); ++i) {
    cur.push_back(i);
    subsets_rec(n, r, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (r >= 0 && r <= n) subsets_rec(n, r, 0, cur, out);
  return out;
}

}  // namespace

std::vector<Polynomial> minors(const GradedMatrix& M, int r) {
  std::vector<Polynomial> out;
  if (r <= 0) {
    out.push_back(Polynomial::constant(M.ring(), 1));
    return out;
  }
  if (r > M.rows() || r > M.cols()) return out;  // empty: zero ideal
  auto rsets = subsets(M.rows(), r);
  auto csets = subsets(M.cols(), r);
  for (const auto& rs : rsets)
    for (const auto& cs : csets) out.push_back(determinant(M.submatrix(rs, cs)));
  return out;
}

GradedMatrix hessian(const Polynomial& f) {
  const RingPtr& R = f.ring();
  int n = R->arity();
  long d = f.is_zero() ? 2 : f.degree();
  GradedMatrix H(R, n, n);
  for (int i = 0; i < n; ++i) {
    Polynomial fi = f.derivative(i);
    for (int j = i; j < n; ++j) {
      Polynomial fij = fi.derivative(j);
      H.set(i, j, fij);
      if (j != i) H.set(j, i, std::move(fij));
    }
  }
  // degree-0 map R^n(-(d-2)) -> R^n
  H.mutable_col_twists().assign(n, d - 2);
  H.mutable_row_twists().assign(n, 0);
  return H;
}

}  // namespace freediv
