#pragma once

#include <functional>
#include <vector>

#include "entwine/matrix.hpp"

namespace entwine::detail {

struct LinearSystem {
  Matrix coefficients;
  Matrix rhs;  // column
};

// `residual` must be affine in its argument; each returned matrix lists
// quantities that must vanish. Builds M, b with residual(x) = 0 <=> M x = b
// by evaluating at zero and at each unit vector.
using Residual = std::function<std::vector<Matrix>(const std::vector<Scalar>&)>;

inline Matrix flatten_all(const FieldSpec& f, const std::vector<Matrix>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  Matrix out(f, total, 1);
  std::size_t k = 0;
  for (const auto& p : parts)
    for (std::size_t i = 0; i < p.size(); ++i) out(k++, 0) = p.at_flat(i);
  return out;
}

inline LinearSystem assemble_affine(const FieldSpec& f, std::size_t unknowns, const Residual& residual) {
  std::vector<Scalar> x(unknowns, Scalar::zero(f));
  const Matrix base = flatten_all(f, residual(x));
  Matrix m(f, base.rows(), unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    x[k] = Scalar::one(f);
    const Matrix col = flatten_all(f, residual(x));
    x[k] = Scalar::zero(f);
    for (std::size_t r = 0; r < base.rows(); ++r) m(r, k) = col(r, 0) - base(r, 0);
  }
  Matrix rhs(f, base.rows(), 1);
  for (std::size_t r = 0; r < base.rows(); ++r) rhs(r, 0) = -base(r, 0);
  return {std::move(m), std::move(rhs)};
}

// Splits a flat unknown vector into consecutive matrices of given sizes.
inline std::vector<Matrix> unpack(const FieldSpec& f, const std::vector<Scalar>& x,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& sizes) {
  std::vector<Matrix> out;
  std::size_t k = 0;
  for (auto [r, c] : sizes) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r * c; ++i) m.at_flat(i) = x[k++];
    out.push_back(std::move(m));
  }
  return out;
}

inline std::vector<Scalar> column_entries(const Matrix& v) { return v.entries(); }

}  // namespace entwine::detail
