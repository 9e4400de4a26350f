#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "entwine/field.hpp"

namespace entwine {

// Dense row-major matrix over a single field. Column vectors are n x 1.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  // Small integer literals; every row must have `cols` entries.
  static Matrix from_ints(const FieldSpec& f, std::size_t rows, std::size_t cols,
                          std::initializer_list<long long> entries);
  static Matrix from_ints(const FieldSpec& f, std::size_t rows, std::size_t cols,
                          const std::vector<long long>& entries);
  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix column(const std::vector<Scalar>& entries);  // entries non-empty
  static Matrix column(const FieldSpec& f, const std::vector<Scalar>& entries);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  // Row-major flat access.
  Scalar& at_flat(std::size_t i) { return data_[i]; }
  const Scalar& at_flat(std::size_t i) const { return data_[i]; }
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const;
  Matrix column_at(std::size_t c) const;
  Matrix transposed() const;
  Matrix scaled(const Scalar& s) const;
  // Same entries read as a rows*cols x 1 column (row-major order).
  Matrix flattened() const;
  Matrix reshaped(std::size_t rows, std::size_t cols) const;
  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Throws FieldMismatch, then DimensionMismatch.
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
// [a | b], rows must agree.
Matrix hconcat(const Matrix& a, const Matrix& b);
// a stacked over b, cols must agree.
Matrix vconcat(const Matrix& a, const Matrix& b);
// Columns side by side; all must share rows and field. `rows` is used
// when the list is empty.
Matrix hconcat_all(const FieldSpec& f, std::size_t rows, const std::vector<Matrix>& cols);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return mat_sub(a, b); }

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
RowEchelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

// Throws DimensionMismatch for non-square input, DivisionByZero when singular.
Matrix inverse(const Matrix& m);

// Basis of {x : m x = 0}, one column vector per free column of the reduced
// row echelon form of m. Each basis vector is 1 at its own free coordinate
// and 0 at every other free coordinate, so the basis depends only on the
// subspace. Its length is cols(m) - rank(m).
std::vector<Matrix> nullspace(const Matrix& m);

struct AffineSolution {
  bool feasible = false;
  // Free coordinates set to zero. Present only when feasible.
  std::optional<Matrix> particular;
  std::vector<Matrix> kernel;
  std::size_t rank = 0;            // rank(m)
  std::size_t augmented_rank = 0;  // rank([m | b]); equals rank + 1 when infeasible
};

// Solves m x = b for a column b.
AffineSolution solve_affine(const Matrix& m, const Matrix& b);

// Columns of `basis` reduced to the canonical basis of their span: the
// nonzero columns of the transposed reduced row echelon form.
std::vector<Matrix> canonical_span_basis(const FieldSpec& f, std::size_t dim,
                                         const std::vector<Matrix>& vectors);

}  // namespace entwine
