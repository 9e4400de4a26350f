#include "entwine/tensor.hpp"

#include <numeric>

#include "entwine/errors.hpp"

namespace entwine {

std::size_t TensorShape::total() const {
  return std::accumulate(factors.begin(), factors.end(), std::size_t{1}, std::multiplies<>());
}

TensorShape TensorShape::concat(const TensorShape& other) const {
  TensorShape out = *this;
  out.factors.insert(out.factors.end(), other.factors.begin(), other.factors.end());
  return out;
}

std::string TensorShape::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "," : "") + std::to_string(factors[i]);
  return s + ")";
}

ShapedMap::ShapedMap(Matrix m, TensorShape dom, TensorShape cod)
    : matrix(std::move(m)), domain(std::move(dom)), codomain(std::move(cod)) {
  if (matrix.rows() != codomain.total() || matrix.cols() != domain.total())
    throw DimensionMismatch("matrix " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()) + " for shapes " + domain.to_string() +
                            " -> " + codomain.to_string());
}

ShapedMap ShapedMap::with_shapes(TensorShape dom, TensorShape cod) const {
  return ShapedMap(matrix, std::move(dom), std::move(cod));
}

ShapedMap ShapedMap::flat() const {
  return ShapedMap(matrix, TensorShape{domain.total()}, TensorShape{codomain.total()});
}

ShapedMap identity_map(const FieldSpec& f, const TensorShape& shape) {
  return ShapedMap(Matrix::identity(f, shape.total()), shape, shape);
}

ShapedMap identity_map(const FieldSpec& f, std::size_t dim) {
  return identity_map(f, TensorShape{dim});
}

ShapedMap zero_map(const FieldSpec& f, const TensorShape& dom, const TensorShape& cod) {
  return ShapedMap(Matrix(f, cod.total(), dom.total()), dom, cod);
}

ShapedMap compose(const ShapedMap& g, const ShapedMap& f) {
  if (g.domain.total() != f.codomain.total())
    throw DimensionMismatch("compose: " + g.domain.to_string() + " after " + f.codomain.to_string());
  return ShapedMap(mat_mul(g.matrix, f.matrix), f.domain, g.codomain);
}

ShapedMap compose_all(std::initializer_list<ShapedMap> maps) {
  auto it = maps.begin();
  ShapedMap acc = *it;
  for (++it; it != maps.end(); ++it) acc = compose(acc, *it);
  return acc;
}

ShapedMap add(const ShapedMap& a, const ShapedMap& b) {
  return ShapedMap(mat_add(a.matrix, b.matrix), a.domain, a.codomain);
}

ShapedMap subtract(const ShapedMap& a, const ShapedMap& b) {
  return ShapedMap(mat_sub(a.matrix, b.matrix), a.domain, a.codomain);
}

ShapedMap kron(const ShapedMap& a, const ShapedMap& b) {
  return ShapedMap(kron(a.matrix, b.matrix), a.domain.concat(b.domain), a.codomain.concat(b.codomain));
}

ShapedMap kron_all(std::initializer_list<ShapedMap> maps) {
  auto it = maps.begin();
  ShapedMap acc = *it;
  for (++it; it != maps.end(); ++it) acc = kron(acc, *it);
  return acc;
}

TensorShape permuted_shape(const TensorShape& shape, const std::vector<std::size_t>& perm) {
  const std::size_t n = shape.rank();
  if (perm.size() != n)
    throw InvalidPermutation("length " + std::to_string(perm.size()) + " for " + std::to_string(n) + " factors");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw InvalidPermutation("not a permutation of 0.." + std::to_string(n - 1));
    seen[p] = true;
  }
  TensorShape out;
  out.factors.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.factors[perm[k]] = shape.factors[k];
  return out;
}

ShapedMap permute_factors(const FieldSpec& f, const TensorShape& shape,
                          const std::vector<std::size_t>& perm) {
  const TensorShape target = permuted_shape(shape, perm);
  const std::size_t n = shape.rank();
  const std::size_t total = shape.total();
  Matrix m(f, total, total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    // idx holds the multi-index of `flat` in `shape`.
    std::size_t out = 0;
    std::vector<std::size_t> moved(n);
    for (std::size_t k = 0; k < n; ++k) moved[perm[k]] = idx[k];
    for (std::size_t k = 0; k < n; ++k) out = out * target.factors[k] + moved[k];
    m(out, flat) = Scalar::one(f);
    for (std::size_t k = n; k-- > 0;) {
      if (++idx[k] < shape.factors[k]) break;
      idx[k] = 0;
    }
  }
  return ShapedMap(std::move(m), shape, target);
}

ShapedMap swap_map(const FieldSpec& f, std::size_t u, std::size_t v) {
  return permute_factors(f, TensorShape{u, v}, {1, 0});
}

ShapedMap apply_on_factors(const ShapedMap& f, const TensorShape& shape, std::size_t first) {
  const std::size_t count = f.domain.rank();
  if (first + count > shape.rank())
    throw ShapeMismatch("factors [" + std::to_string(first) + ", " + std::to_string(first + count) +
                        ") outside " + shape.to_string());
  for (std::size_t k = 0; k < count; ++k)
    if (shape.factors[first + k] != f.domain.factors[k])
      throw ShapeMismatch("map domain " + f.domain.to_string() + " does not match factors of " +
                          shape.to_string() + " at " + std::to_string(first));
  TensorShape left, right;
  left.factors.assign(shape.factors.begin(), shape.factors.begin() + first);
  right.factors.assign(shape.factors.begin() + first + count, shape.factors.end());
  return kron_all({identity_map(f.field(), left), f, identity_map(f.field(), right)});
}

ShapedMap dual_map(const ShapedMap& f) {
  return ShapedMap(f.matrix.transposed(), f.codomain, f.domain);
}

TensorShape hom_as_tensor(std::size_t u_dim, std::size_t w_dim) { return TensorShape{u_dim, w_dim}; }

Matrix hom_to_tensor(const Matrix& map) { return map.transposed().flattened(); }

Matrix tensor_to_hom(const Matrix& column, std::size_t u_dim, std::size_t w_dim) {
  return column.reshaped(u_dim, w_dim).transposed();
}

ShapedMap evaluation_pairing(const FieldSpec& f, std::size_t u_dim) {
  Matrix m(f, 1, u_dim * u_dim);
  for (std::size_t i = 0; i < u_dim; ++i) m(0, i * u_dim + i) = Scalar::one(f);
  return ShapedMap(std::move(m), TensorShape{u_dim, u_dim}, TensorShape{1});
}

ShapedMap curry_to_tensor(const FieldSpec& f, std::size_t u, std::size_t v, std::size_t w) {
  return permute_factors(f, TensorShape{u, v, w}, {1, 0, 2});
}

}  // namespace entwine
