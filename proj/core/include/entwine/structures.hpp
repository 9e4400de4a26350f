#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "entwine/tensor.hpp"

namespace entwine {

// Finite-dimensional unital algebra. mul: A (x) A -> A, unit: K -> A.
struct AlgebraData {
  FieldSpec field;
  std::size_t dim = 0;
  ShapedMap mul;   // dim x dim^2, shapes (dim, dim) -> (dim)
  ShapedMap unit;  // dim x 1,     shapes (1) -> (dim)

  static AlgebraData make(const FieldSpec& f, std::size_t dim, Matrix mul, Matrix unit);
  // The ground field as an algebra.
  static AlgebraData ground(const FieldSpec& f);
};

// Coalgebra over a finite set of objects. Objects are addressed by their
// position in `objects`; C(X, Y) has dimension hom_dim(x, y).
//   delta(x, y, z): C(X, Z) -> C(Y, Z) (x) C(X, Y)
//   counit(x):      C(X, X) -> K
// Entries whose matrix would be empty (a zero-dimensional space on either
// side) are stored as empty matrices.
struct CoalgebraData {
  FieldSpec field;
  std::vector<std::string> objects;
  std::vector<std::size_t> hom_dims;  // row-major n x n
  std::vector<ShapedMap> deltas;      // indexed (x, y, z), n^3 entries
  std::vector<ShapedMap> counits;     // indexed x

  std::size_t size() const { return objects.size(); }
  std::size_t hom_dim(std::size_t x, std::size_t y) const { return hom_dims[x * size() + y]; }
  const ShapedMap& delta(std::size_t x, std::size_t y, std::size_t z) const;
  ShapedMap& delta(std::size_t x, std::size_t y, std::size_t z);
  const ShapedMap& counit(std::size_t x) const { return counits[x]; }
  // Throws UnknownName.
  std::size_t index_of(const std::string& object) const;

  // Zero structure maps with the right shapes.
  static CoalgebraData zeros(const FieldSpec& f, std::vector<std::string> objects,
                             std::vector<std::size_t> hom_dims);
  // One object with C(X, X) = K.
  static CoalgebraData ground(const FieldSpec& f, const std::string& object = "X");
};

// psi(x, y): C(X, Y) (x) A -> A (x) C(X, Y).
struct EntwiningData {
  std::vector<ShapedMap> psis;  // indexed (x, y)
  std::size_t objects = 0;

  const ShapedMap& psi(std::size_t x, std::size_t y) const { return psis[x * objects + y]; }
  ShapedMap& psi(std::size_t x, std::size_t y) { return psis[x * objects + y]; }
};

struct StructureBundle {
  FieldSpec field;
  CoalgebraData coalgebra;
  AlgebraData algebra;
  EntwiningData entwining;

  std::size_t a_dim() const { return algebra.dim; }
  std::size_t c_dim(std::size_t x, std::size_t y) const { return coalgebra.hom_dim(x, y); }
  std::size_t object_count() const { return coalgebra.size(); }
};

struct Violation {
  std::string label;   // which axiom, e.g. "coalgebra axiom: coassociativity"
  std::string where;   // the failing tuple, e.g. "(X,Y,W,Z)"
  std::string detail;  // short description of the mismatch
};

struct Report {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void merge(const Report& other);
  std::string to_string() const;
};

// Each checker evaluates every instance of every axiom and reports all
// failures; it throws ShapeMismatch if a structure map has the wrong shape.
Report check_algebra(const AlgebraData& a);
// Also rejects zero-dimensional C(X, X).
Report check_coalgebra(const CoalgebraData& c);
Report check_entwining(const CoalgebraData& c, const AlgebraData& a, const EntwiningData& e);
Report check_bundle(const StructureBundle& b);

// psi(f (x) a) = a (x) f for every pair of objects.
EntwiningData flip_entwining(const CoalgebraData& c, const AlgebraData& a);

StructureBundle make_bundle(CoalgebraData c, AlgebraData a, EntwiningData e);

// Label text for a tuple of objects, e.g. "(X,Y)".
std::string tuple_label(const CoalgebraData& c, std::initializer_list<std::size_t> idx);

}  // namespace entwine
