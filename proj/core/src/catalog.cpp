#include "entwine/catalog.hpp"

#include <functional>

#include "entwine/errors.hpp"

namespace entwine {

namespace {

Matrix ints(const FieldSpec& f, std::size_t rows, std::size_t cols, std::vector<long long> v) {
  return Matrix::from_ints(f, rows, cols, v);
}

// Two-dimensional algebra with basis {1, x} and x*x = s*1 + t*x.
AlgebraData two_dim_algebra(const FieldSpec& f, long long s, long long t) {
  return AlgebraData::make(f, 2, ints(f, 2, 4, {1, 0, 0, s, 0, 1, 1, t}), ints(f, 2, 1, {1, 0}));
}

StructureBundle one_object(const FieldSpec& f, AlgebraData a) {
  CoalgebraData c = CoalgebraData::ground(f);
  EntwiningData e = flip_entwining(c, a);
  return make_bundle(std::move(c), std::move(a), std::move(e));
}

StructureBundle build_trivial(const FieldSpec& f) { return one_object(f, AlgebraData::ground(f)); }

StructureBundle build_group_c2(const FieldSpec& f) { return one_object(f, two_dim_algebra(f, 1, 0)); }

StructureBundle build_dual_numbers(const FieldSpec& f) { return one_object(f, two_dim_algebra(f, 0, 0)); }

// Basis {1, x, y}; every product of x and y vanishes.
StructureBundle build_local_3dim(const FieldSpec& f) {
  Matrix mul(f, 3, 9);
  mul(0, 0) = Scalar::one(f);
  mul(1, 1) = mul(1, 3) = Scalar::one(f);
  mul(2, 2) = mul(2, 6) = Scalar::one(f);
  return one_object(f, AlgebraData::make(f, 3, mul, ints(f, 3, 1, {1, 0, 0})));
}

// Objects X, Y; every C(X, Y) is spanned by e_XY with
// delta(e_XZ) = e_YZ (x) e_XY and counit 1.
StructureBundle build_matrix_coalgebra(const FieldSpec& f) {
  CoalgebraData c = CoalgebraData::zeros(f, {"X", "Y"}, {1, 1, 1, 1});
  for (auto& d : c.deltas) d.matrix = Matrix::identity(f, 1);
  for (auto& e : c.counits) e.matrix = Matrix::identity(f, 1);
  AlgebraData a = AlgebraData::ground(f);
  EntwiningData e = flip_entwining(c, a);
  return make_bundle(std::move(c), std::move(a), std::move(e));
}

// Paths of the quiver X --alpha--> Y: C(X,X) = <e_X>, C(Y,Y) = <e_Y>,
// C(X,Y) = <alpha>, C(Y,X) = 0. Dual numbers act through the flip.
StructureBundle build_path_a2(const FieldSpec& f) {
  CoalgebraData c = CoalgebraData::zeros(f, {"X", "Y"}, {1, 1, 0, 1});
  const std::size_t X = 0, Y = 1;
  c.delta(X, X, X).matrix = Matrix::identity(f, 1);
  c.delta(Y, Y, Y).matrix = Matrix::identity(f, 1);
  c.delta(X, Y, Y).matrix = Matrix::identity(f, 1);  // alpha -> e_Y (x) alpha
  c.delta(X, X, Y).matrix = Matrix::identity(f, 1);  // alpha -> alpha (x) e_X
  for (auto& e : c.counits) e.matrix = Matrix::identity(f, 1);
  AlgebraData a = two_dim_algebra(f, 0, 0);
  EntwiningData e = flip_entwining(c, a);
  return make_bundle(std::move(c), std::move(a), std::move(e));
}

// One object over F_2. C has basis d, g with g grouplike and
// delta(d) = d (x) g + g (x) d; A = F_2[x]/(x^2) with basis x, 1. The
// entwining is the flip except g (x) x -> x (x) g + 1 (x) d. First
// bundle of this size, in coefficient order, without a normalised sigma.
StructureBundle build_nonsep_f(const FieldSpec& f) {
  CoalgebraData c = CoalgebraData::zeros(f, {"X"}, {2});
  c.delta(0, 0, 0).matrix = ints(f, 4, 2, {0, 0, 1, 0, 1, 0, 0, 1});
  c.counits[0].matrix = ints(f, 1, 2, {0, 1});
  AlgebraData a = AlgebraData::make(f, 2, ints(f, 2, 4, {0, 1, 1, 0, 0, 0, 0, 1}), ints(f, 2, 1, {0, 1}));
  EntwiningData e;
  e.objects = 1;
  e.psis.push_back(ShapedMap(ints(f, 4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1}), TensorShape{2, 2},
                             TensorShape{2, 2}));
  return make_bundle(std::move(c), std::move(a), std::move(e));
}

struct Builder {
  CatalogEntry entry;
  std::function<StructureBundle(const FieldSpec&)> build;
};

const std::vector<Builder>& builders() {
  static const std::vector<Builder> list = {
      {{"trivial", "C = K and A = K over Q", FieldSpec::rationals()}, build_trivial},
      {{"group-c2-q", "A = Q[C2] with C = K, flip entwining", FieldSpec::rationals()}, build_group_c2},
      {{"group-c2-f2", "A = F2[C2] with C = K, flip entwining", FieldSpec::prime(2)}, build_group_c2},
      {{"dual-numbers-q", "A = Q[x]/(x^2) with C = K, flip entwining", FieldSpec::rationals()}, build_dual_numbers},
      {{"local-3dim-f2", "A = F2[x,y]/(x,y)^2 with C = K, flip entwining", FieldSpec::prime(2)}, build_local_3dim},
      {{"matrix-coalg-2obj", "two objects, all hom spaces one-dimensional, A = K", FieldSpec::rationals()},
       build_matrix_coalgebra},
      {{"path-a2", "path coalgebra of X -> Y with A = Q[x]/(x^2), flip entwining", FieldSpec::rationals()},
       build_path_a2},
      {{"nonsep-F", "one object over F2, dim C = dim A = 2, free functor not separable", FieldSpec::prime(2)},
       build_nonsep_f},
  };
  return list;
}

const Builder& find_builder(const std::string& name) {
  for (const auto& b : builders())
    if (b.entry.name == name) return b;
  throw UnknownName("catalog entry '" + name + "'");
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> list = [] {
    std::vector<CatalogEntry> out;
    for (const auto& b : builders()) out.push_back(b.entry);
    return out;
  }();
  return list;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries()) out.push_back(e.name);
  return out;
}

StructureBundle catalog_build(const std::string& name, std::optional<FieldSpec> field) {
  const Builder& b = find_builder(name);
  StructureBundle bundle = b.build(field.value_or(b.entry.default_field));
  if (Report r = check_bundle(bundle); !r.ok())
    throw ValidationError("'" + name + "' over " + bundle.field.to_string() + ": " + r.violations.front().label + " " +
                          r.violations.front().where);
  return bundle;
}

std::optional<AugmentationSetup> catalog_augmentation(const std::string& name, const StructureBundle& b) {
  find_builder(name);
  if (name != "group-c2-q" && name != "group-c2-f2") return std::nullopt;
  const FieldSpec& f = b.field;
  AugmentationSetup s;
  s.character = ints(f, 1, 2, {1, 1});
  s.regular_comodule = regular_comodule(b, 0, right_regular_module(b.algebra));
  s.trivial_comodule = regular_comodule(b, 0, right_character_module(b.algebra, s.character));
  s.comodule_augmentation = MorphismData{{s.character}};
  s.regular_contramodule = contramodule_HXP(b, 0, left_regular_module(b.algebra));
  s.trivial_contramodule = contramodule_HXP(b, 0, left_character_module(b.algebra, s.character));
  s.contramodule_augmentation = MorphismData{{s.character}};
  return s;
}

TestObjects catalog_test_objects(const std::string& name, const StructureBundle& b) {
  TestObjects t = standard_test_objects(b);
  if (auto s = catalog_augmentation(name, b)) {
    t.entwined_comodules.push_back({"trivial", s->trivial_comodule});
    t.entwined_contramodules.push_back({"trivial", s->trivial_contramodule});
  }
  return t;
}

}  // namespace entwine
