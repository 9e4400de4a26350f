#include "entwine/matrix.hpp"

#include <sstream>

#include "entwine/errors.hpp"

namespace entwine {

namespace {

void require_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatch(a.field().to_string() + " vs " + b.field().to_string());
}

std::string dims(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Residue arithmetic on raw words; p < 2^32.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

RowEchelon row_reduce_prime(const Matrix& m) {
  const FieldSpec& f = m.field();
  const std::uint64_t p = f.characteristic();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = m.at_flat(i).residue();

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[sel * cols + k], a[r * cols + k]);
    const std::uint64_t inv = inv_mod(a[r * cols + c], p);
    for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = a[r * cols + k] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint64_t factor = a[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        a[i * cols + k] = (a[i * cols + k] + (p - factor) * a[r * cols + k]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(f, rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) out.at_flat(i) = Scalar::from_int(f, static_cast<long long>(a[i]));
  return {std::move(out), std::move(pivots)};
}

RowEchelon row_reduce_generic(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(sel, k), a(r, k));
    const Scalar inv = a(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (std::size_t k = c; k < cols; ++k) a(i, k) -= factor * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::from_ints(const FieldSpec& f, std::size_t rows, std::size_t cols,
                         std::initializer_list<long long> entries) {
  return from_ints(f, rows, cols, std::vector<long long>(entries));
}

Matrix Matrix::from_ints(const FieldSpec& f, std::size_t rows, std::size_t cols,
                         const std::vector<long long>& entries) {
  if (entries.size() != rows * cols)
    throw DimensionMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                            std::to_string(entries.size()));
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = Scalar::from_int(f, entries[i]);
  return m;
}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries) {
  if (entries.empty()) throw DimensionMismatch("column(): empty entry list needs a field");
  return column(entries.front().field(), entries);
}

Matrix Matrix::column(const FieldSpec& f, const std::vector<Scalar>& entries) {
  Matrix m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!(entries[i].field() == f)) throw FieldMismatch("column entry field");
    m.data_[i] = entries[i];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::column_at(std::size_t c) const {
  Matrix m(field_, rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) m.data_[r] = (*this)(r, c);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& e : m.data_) e *= s;
  return m;
}

Matrix Matrix::flattened() const { return reshaped(size(), 1); }

Matrix Matrix::reshaped(std::size_t rows, std::size_t cols) const {
  if (rows * cols != size())
    throw DimensionMismatch("cannot reshape " + dims(*this) + " to " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  Matrix m = *this;
  m.rows_ = rows;
  m.cols_ = cols;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  if (a.cols() != b.rows()) throw DimensionMismatch(dims(a) + " * " + dims(b));
  const FieldSpec& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  if (f.is_prime_field()) {
    const std::uint64_t p = f.characteristic();
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const std::uint64_t x = a(i, k).residue();
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + x * b(k, j).residue()) % p;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = Scalar::from_int(f, static_cast<long long>(acc[j]));
    }
    return out;
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch(dims(a) + " + " + dims(b));
  Matrix out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.at_flat(i) += b.at_flat(i);
  return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch(dims(a) + " - " + dims(b));
  Matrix out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.at_flat(i) -= b.at_flat(i);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  if (a.rows() != b.rows()) throw DimensionMismatch(dims(a) + " | " + dims(b));
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  if (a.cols() != b.cols()) throw DimensionMismatch(dims(a) + " over " + dims(b));
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out.at_flat(i) = a.at_flat(i);
  for (std::size_t i = 0; i < b.size(); ++i) out.at_flat(a.size() + i) = b.at_flat(i);
  return out;
}

Matrix hconcat_all(const FieldSpec& f, std::size_t rows, const std::vector<Matrix>& cols) {
  std::size_t total = 0;
  for (const auto& c : cols) {
    if (!(c.field() == f)) throw FieldMismatch("hconcat_all");
    if (c.rows() != rows) throw DimensionMismatch("hconcat_all: " + dims(c) + " with " + std::to_string(rows) + " rows");
    total += c.cols();
  }
  Matrix out(f, rows, total);
  std::size_t offset = 0;
  for (const auto& c : cols) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t k = 0; k < c.cols(); ++k) out(r, offset + k) = c(r, k);
    offset += c.cols();
  }
  return out;
}

RowEchelon row_reduce(const Matrix& m) {
  return m.field().is_prime_field() ? row_reduce_prime(m) : row_reduce_generic(m);
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of " + dims(m));
  const std::size_t n = m.rows();
  const RowEchelon e = row_reduce(hconcat(m, Matrix::identity(m.field(), n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw DivisionByZero("matrix is singular");
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  return out;
}

std::vector<Matrix> nullspace(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  const FieldSpec& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Matrix> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Matrix v(f, m.cols(), 1);
    v(j, 0) = Scalar::one(f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v(e.pivots[i], 0) = -e.reduced(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

AffineSolution solve_affine(const Matrix& m, const Matrix& b) {
  require_field(m, b);
  if (b.cols() != 1 || b.rows() != m.rows())
    throw DimensionMismatch("solve_affine: " + dims(m) + " with right-hand side " + dims(b));
  const RowEchelon e = row_reduce(hconcat(m, b));
  AffineSolution out;
  out.augmented_rank = e.pivots.size();
  const bool rhs_pivot = !e.pivots.empty() && e.pivots.back() == m.cols();
  out.rank = rhs_pivot ? out.augmented_rank - 1 : out.augmented_rank;
  out.feasible = !rhs_pivot;
  out.kernel = nullspace(m);
  if (out.feasible) {
    Matrix x(m.field(), m.cols(), 1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x(e.pivots[i], 0) = e.reduced(i, m.cols());
    out.particular = std::move(x);
  }
  return out;
}

std::vector<Matrix> canonical_span_basis(const FieldSpec& f, std::size_t dim,
                                         const std::vector<Matrix>& vectors) {
  Matrix rows(f, vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw DimensionMismatch("canonical_span_basis: vector length");
    for (std::size_t k = 0; k < dim; ++k) rows(i, k) = vectors[i].at_flat(k);
  }
  const RowEchelon e = row_reduce(rows);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    Matrix v(f, dim, 1);
    for (std::size_t k = 0; k < dim; ++k) v(k, 0) = e.reduced(i, k);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace entwine
