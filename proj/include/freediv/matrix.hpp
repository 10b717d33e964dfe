#ifndef FREEDIV_MATRIX_HPP
#define FREEDIV_MATRIX_HPP

#include <vector>

#include "freediv/polynomial.hpp"

namespace freediv {

// Matrix of homogeneous polynomials with degree twists: entry (i,j) is
// homogeneous of degree col_twists[j] - row_twists[i] (or zero).  Rows
// index generators of the target free module F0 = (+) R(-row_twists[i]),
// columns generators of the source.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(RingPtr ring, int rows, int cols);
  GradedMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> entries,
               std::vector<long> row_twists, std::vector<long> col_twists);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Polynomial& at(int i, int j) const { return entries_[i][j]; }
  void set(int i, int j, Polynomial p) { entries_[i][j] = std::move(p); }

  const std::vector<long>& row_twists() const { return row_twists_; }
  const std::vector<long>& col_twists() const { return col_twists_; }
  std::vector<long>& mutable_row_twists() { return row_twists_; }
  std::vector<long>& mutable_col_twists() { return col_twists_; }

  // verify entry (i,j) is zero or homogeneous of degree col[j] - row[i]
  bool is_homogeneous() const;
  void require_homogeneous(const char* what) const;

  bool is_zero() const;
  GradedMatrix transpose() const;
  // graded dual: transpose with negated twists (Hom(-, R))
  GradedMatrix dual() const;
  GradedMatrix shifted(long s) const;  // twist all degrees by -s (M(s))

  std::vector<Polynomial> column(int j) const;
  std::vector<Polynomial> row(int i) const;
  GradedMatrix select_columns(const std::vector<int>& js) const;
  GradedMatrix submatrix(const std::vector<int>& rows,
                         const std::vector<int>& cols) const;

  // matrix product (twists must be compatible: this->col == o.row)
  GradedMatrix operator*(const GradedMatrix& o) const;
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;

  bool operator==(const GradedMatrix& o) const;

  static GradedMatrix identity(RingPtr ring, int n, std::vector<long> twists);
  static GradedMatrix from_columns(RingPtr ring,
                                   const std::vector<std::vector<Polynomial>>& cols,
                                   std::vector<long> row_twists,
                                   std::vector<long> col_twists);

  std::string to_string() const;

 private:
  RingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<Polynomial>> entries_;
  std::vector<long> row_twists_, col_twists_;
};

// Exact determinant.  Sparse-aware minor expansion with memoization on row
// subsets; falls back to fraction-free (Bareiss) elimination for larger
// dense matrices.
Polynomial determinant(const GradedMatrix& M);

// determinant by cofactor expansion along the first row; test oracle
Polynomial determinant_cofactor(const GradedMatrix& M);

// all r x r minors of M (row/column index subsets in lexicographic order)
std::vector<Polynomial> minors(const GradedMatrix& M, int r);

// Hessian of f as a degree-0 map R^n(-(d-2)) -> R^n.
GradedMatrix hessian(const Polynomial& f);

}  // namespace freediv

#endif
