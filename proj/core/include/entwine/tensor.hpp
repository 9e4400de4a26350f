#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "entwine/matrix.hpp"

namespace entwine {

// Ordered list of factor dimensions. Flat index of a basis tensor is
// left-factor-major: (i, j) in (a, b) sits at i * b + j. The empty product
// has total dimension 1; the ground field is written as the shape {1}.
struct TensorShape {
  std::vector<std::size_t> factors;

  TensorShape() = default;
  TensorShape(std::initializer_list<std::size_t> f) : factors(f) {}
  explicit TensorShape(std::vector<std::size_t> f) : factors(std::move(f)) {}

  std::size_t total() const;
  std::size_t rank() const { return factors.size(); }
  TensorShape concat(const TensorShape& other) const;
  std::string to_string() const;

  friend bool operator==(const TensorShape&, const TensorShape&) = default;
};

// A linear map between flattened tensor spaces: matrix has
// codomain.total() rows and domain.total() columns.
struct ShapedMap {
  Matrix matrix;
  TensorShape domain;
  TensorShape codomain;

  ShapedMap() = default;
  // Throws DimensionMismatch when the matrix disagrees with the shapes.
  ShapedMap(Matrix m, TensorShape dom, TensorShape cod);

  const FieldSpec& field() const { return matrix.field(); }
  ShapedMap with_shapes(TensorShape dom, TensorShape cod) const;
  // Collapses both shapes to a single factor.
  ShapedMap flat() const;

  friend bool operator==(const ShapedMap& a, const ShapedMap& b) { return a.matrix == b.matrix; }
};

ShapedMap identity_map(const FieldSpec& f, const TensorShape& shape);
ShapedMap identity_map(const FieldSpec& f, std::size_t dim);
ShapedMap zero_map(const FieldSpec& f, const TensorShape& dom, const TensorShape& cod);

// g after f. Total dimensions must agree (DimensionMismatch); factor
// groupings may differ, the result keeps f's domain and g's codomain.
ShapedMap compose(const ShapedMap& g, const ShapedMap& f);
// Composes right to left: compose_all({h, g, f}) = h o g o f.
ShapedMap compose_all(std::initializer_list<ShapedMap> maps);
ShapedMap add(const ShapedMap& a, const ShapedMap& b);
ShapedMap subtract(const ShapedMap& a, const ShapedMap& b);

// Kronecker product with concatenated shapes.
ShapedMap kron(const ShapedMap& a, const ShapedMap& b);
ShapedMap kron_all(std::initializer_list<ShapedMap> maps);

// Factor k of `shape` is moved to position perm[k]. Throws
// InvalidPermutation unless perm is a permutation of 0..rank-1.
// Composition: permute(perm2) o permute(perm1) = permute(perm2 o perm1).
ShapedMap permute_factors(const FieldSpec& f, const TensorShape& shape,
                          const std::vector<std::size_t>& perm);
TensorShape permuted_shape(const TensorShape& shape, const std::vector<std::size_t>& perm);
// Exchanges the two factors of a two-factor space U (x) V -> V (x) U.
ShapedMap swap_map(const FieldSpec& f, std::size_t u, std::size_t v);

// id (x) f (x) id acting on factors [first, first + f.domain.rank()) of
// `shape`. Throws ShapeMismatch when those factors differ from f.domain.
ShapedMap apply_on_factors(const ShapedMap& f, const TensorShape& shape, std::size_t first);

// Transpose; domain and codomain shapes exchange.
ShapedMap dual_map(const ShapedMap& f);

// Hom(U, W) is identified with U* (x) W: the map sending u_i to w_j
// corresponds to the basis tensor at flat index i * dim W + j.
TensorShape hom_as_tensor(std::size_t u_dim, std::size_t w_dim);
// Matrix of a map U -> W (w x u) as a column in U* (x) W.
Matrix hom_to_tensor(const Matrix& map);
Matrix tensor_to_hom(const Matrix& column, std::size_t u_dim, std::size_t w_dim);
// Evaluation pairing U* (x) U -> K.
ShapedMap evaluation_pairing(const FieldSpec& f, std::size_t u_dim);
// Hom(U, Hom(V, W)) -> Hom(V (x) U, W) in tensor coordinates: the nested
// triple (u, v, w) is sent to (v, u, w), i.e. h(u)(v) = h~(v (x) u).
ShapedMap curry_to_tensor(const FieldSpec& f, std::size_t u, std::size_t v, std::size_t w);

}  // namespace entwine
