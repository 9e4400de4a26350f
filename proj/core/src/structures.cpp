#include "entwine/structures.hpp"

#include "entwine/errors.hpp"
#include "internal.hpp"

namespace entwine {

using detail::comp;
using detail::expect_equal;
using detail::id;
using detail::tens;

namespace {

void require_size(const ShapedMap& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.matrix.rows() != rows || m.matrix.cols() != cols)
    throw ShapeMismatch(what + " is " + std::to_string(m.matrix.rows()) + "x" +
                        std::to_string(m.matrix.cols()) + ", expected " + std::to_string(rows) + "x" +
                        std::to_string(cols));
}

void require_field(const ShapedMap& m, const FieldSpec& f, const std::string& what) {
  if (!(m.field() == f)) throw FieldMismatch(what + " is over " + m.field().to_string());
}

void validate_algebra_shapes(const AlgebraData& a) {
  require_field(a.mul, a.field, "multiplication");
  require_field(a.unit, a.field, "unit");
  require_size(a.mul, a.dim, a.dim * a.dim, "multiplication");
  require_size(a.unit, a.dim, 1, "unit");
}

void validate_coalgebra_shapes(const CoalgebraData& c) {
  const std::size_t n = c.size();
  if (c.hom_dims.size() != n * n) throw ShapeMismatch("hom dimension table size");
  if (c.deltas.size() != n * n * n) throw ShapeMismatch("comultiplication table size");
  if (c.counits.size() != n) throw ShapeMismatch("counit table size");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto& d = c.delta(x, y, z);
        require_size(d, c.hom_dim(y, z) * c.hom_dim(x, y), c.hom_dim(x, z),
                     "comultiplication " + tuple_label(c, {x, y, z}));
        if (!d.matrix.empty()) require_field(d, c.field, "comultiplication");
      }
  for (std::size_t x = 0; x < n; ++x) {
    require_size(c.counit(x), 1, c.hom_dim(x, x), "counit " + tuple_label(c, {x}));
    require_field(c.counit(x), c.field, "counit");
  }
}

void validate_entwining_shapes(const CoalgebraData& c, const AlgebraData& a, const EntwiningData& e) {
  const std::size_t n = c.size();
  if (e.objects != n || e.psis.size() != n * n) throw ShapeMismatch("entwining table size");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t d = c.hom_dim(x, y) * a.dim;
      require_size(e.psi(x, y), d, d, "entwining " + tuple_label(c, {x, y}));
      if (d) require_field(e.psi(x, y), a.field, "entwining");
    }
}

}  // namespace

AlgebraData AlgebraData::make(const FieldSpec& f, std::size_t dim, Matrix mul, Matrix unit) {
  AlgebraData a;
  a.field = f;
  a.dim = dim;
  a.mul = ShapedMap(std::move(mul), TensorShape{dim, dim}, TensorShape{dim});
  a.unit = ShapedMap(std::move(unit), TensorShape{1}, TensorShape{dim});
  return a;
}

AlgebraData AlgebraData::ground(const FieldSpec& f) {
  return make(f, 1, Matrix::identity(f, 1), Matrix::identity(f, 1));
}

const ShapedMap& CoalgebraData::delta(std::size_t x, std::size_t y, std::size_t z) const {
  return deltas[(x * size() + y) * size() + z];
}

ShapedMap& CoalgebraData::delta(std::size_t x, std::size_t y, std::size_t z) {
  return deltas[(x * size() + y) * size() + z];
}

std::size_t CoalgebraData::index_of(const std::string& object) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == object) return i;
  throw UnknownName("object '" + object + "'");
}

CoalgebraData CoalgebraData::zeros(const FieldSpec& f, std::vector<std::string> objects,
                                   std::vector<std::size_t> hom_dims) {
  CoalgebraData c;
  c.field = f;
  c.objects = std::move(objects);
  c.hom_dims = std::move(hom_dims);
  const std::size_t n = c.size();
  if (c.hom_dims.size() != n * n) throw ShapeMismatch("hom dimension table size");
  c.deltas.resize(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        c.delta(x, y, z) = zero_map(f, TensorShape{c.hom_dim(x, z)},
                                    TensorShape{c.hom_dim(y, z), c.hom_dim(x, y)});
  for (std::size_t x = 0; x < n; ++x)
    c.counits.push_back(zero_map(f, TensorShape{c.hom_dim(x, x)}, TensorShape{1}));
  return c;
}

CoalgebraData CoalgebraData::ground(const FieldSpec& f, const std::string& object) {
  CoalgebraData c = zeros(f, {object}, {1});
  c.delta(0, 0, 0).matrix = Matrix::identity(f, 1);
  c.counits[0].matrix = Matrix::identity(f, 1);
  return c;
}

void Report::merge(const Report& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string Report::to_string() const {
  if (ok()) return "all axioms hold\n";
  std::string s;
  for (const auto& v : violations) s += v.label + " " + v.where + ": " + v.detail + "\n";
  return s;
}

std::string tuple_label(const CoalgebraData& c, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    s += (first ? "" : ",") + c.objects[i];
    first = false;
  }
  return s + ")";
}

Report check_algebra(const AlgebraData& a) {
  validate_algebra_shapes(a);
  Report r;
  const FieldSpec& f = a.field;
  const std::size_t d = a.dim;
  expect_equal(r, comp(a.mul, tens(a.mul, id(f, d))), comp(a.mul, tens(id(f, d), a.mul)),
               "algebra axiom: associativity", "");
  expect_equal(r, comp(a.mul, tens(a.unit, id(f, d))), id(f, d), "algebra axiom: left unit", "");
  expect_equal(r, comp(a.mul, tens(id(f, d), a.unit)), id(f, d), "algebra axiom: right unit", "");
  return r;
}

Report check_coalgebra(const CoalgebraData& c) {
  validate_coalgebra_shapes(c);
  Report r;
  const FieldSpec& f = c.field;
  const std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x)
    if (c.hom_dim(x, x) == 0)
      r.violations.push_back({"coalgebra axiom: nonzero identity space", tuple_label(c, {x}),
                              "C(X,X) must be nonzero"});
  // (delta_YWZ (x) id) o delta_XYZ = (id (x) delta_XYW) o delta_XWZ
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t z = 0; z < n; ++z) {
          auto lhs = comp(tens(c.delta(y, w, z), id(f, c.hom_dim(x, y))), c.delta(x, y, z));
          auto rhs = comp(tens(id(f, c.hom_dim(w, z)), c.delta(x, y, w)), c.delta(x, w, z));
          expect_equal(r, lhs, rhs, "coalgebra axiom: coassociativity", tuple_label(c, {x, y, w, z}));
        }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t dxy = c.hom_dim(x, y);
      expect_equal(r, comp(tens(c.counit(y), id(f, dxy)), c.delta(x, y, y)), id(f, dxy),
                   "coalgebra axiom: left counit", tuple_label(c, {x, y}));
      expect_equal(r, comp(tens(id(f, dxy), c.counit(x)), c.delta(x, x, y)), id(f, dxy),
                   "coalgebra axiom: right counit", tuple_label(c, {x, y}));
    }
  return r;
}

Report check_entwining(const CoalgebraData& c, const AlgebraData& a, const EntwiningData& e) {
  validate_coalgebra_shapes(c);
  validate_algebra_shapes(a);
  validate_entwining_shapes(c, a, e);
  Report r;
  const FieldSpec& f = a.field;
  const std::size_t n = c.size();
  const std::size_t da = a.dim;
  auto C = [&](std::size_t x, std::size_t y) { return c.hom_dim(x, y); };
  // (id_A (x) delta_XYZ) o psi_XZ = (psi_YZ (x) id) o (id (x) psi_XY) o (delta_XYZ (x) id_A)
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto lhs = comp(tens(id(f, da), c.delta(x, y, z)), e.psi(x, z));
        auto rhs = comp(tens(e.psi(y, z), id(f, C(x, y))), tens(id(f, C(y, z)), e.psi(x, y)),
                        tens(c.delta(x, y, z), id(f, da)));
        expect_equal(r, lhs, rhs, "entwining axiom: comultiplication condition", tuple_label(c, {x, y, z}));
      }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t dc = C(x, y);
      // psi o (id (x) mu) = (mu (x) id) o (id (x) psi) o (psi (x) id)
      auto lhs = comp(e.psi(x, y), tens(id(f, dc), a.mul));
      auto rhs = comp(tens(a.mul, id(f, dc)), tens(id(f, da), e.psi(x, y)), tens(e.psi(x, y), id(f, da)));
      expect_equal(r, lhs, rhs, "entwining axiom: multiplication condition", tuple_label(c, {x, y}));
      // psi o (id (x) u) = u (x) id
      expect_equal(r, comp(e.psi(x, y), tens(id(f, dc), a.unit)), tens(a.unit, id(f, dc)),
                   "entwining axiom: unit condition", tuple_label(c, {x, y}));
    }
  for (std::size_t x = 0; x < n; ++x) {
    // (id_A (x) eps) o psi_XX = eps (x) id_A
    expect_equal(r, comp(tens(id(f, da), c.counit(x)), e.psi(x, x)), tens(c.counit(x), id(f, da)),
                 "entwining axiom: counit condition", tuple_label(c, {x}));
  }
  return r;
}

Report check_bundle(const StructureBundle& b) {
  if (!(b.coalgebra.field == b.field) || !(b.algebra.field == b.field))
    throw FieldMismatch("bundle components disagree on the field");
  Report r = check_algebra(b.algebra);
  r.merge(check_coalgebra(b.coalgebra));
  r.merge(check_entwining(b.coalgebra, b.algebra, b.entwining));
  return r;
}

EntwiningData flip_entwining(const CoalgebraData& c, const AlgebraData& a) {
  EntwiningData e;
  e.objects = c.size();
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y)
      e.psis.push_back(swap_map(a.field, c.hom_dim(x, y), a.dim));
  return e;
}

StructureBundle make_bundle(CoalgebraData c, AlgebraData a, EntwiningData e) {
  StructureBundle b;
  b.field = c.field;
  b.coalgebra = std::move(c);
  b.algebra = std::move(a);
  b.entwining = std::move(e);
  return b;
}

}  // namespace entwine
