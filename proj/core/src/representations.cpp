#include "entwine/representations.hpp"

#include "entwine/errors.hpp"
#include "internal.hpp"
#include "linear_system.hpp"

namespace entwine {

using detail::comp;
using detail::expect_equal;
using detail::id;
using detail::sw;
using detail::tens;

namespace {

struct Labeled {
  std::string label;
  std::string where;
  Matrix residual;
};

ShapedMap as_map(const Matrix& m) {
  return ShapedMap(m, TensorShape{m.cols()}, TensorShape{m.rows()});
}

ShapedMap transposed(const ShapedMap& m) { return dual_map(m); }

void require_size(const ShapedMap& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.matrix.rows() != rows || m.matrix.cols() != cols)
    throw ShapeMismatch(what + " is " + std::to_string(m.matrix.rows()) + "x" +
                        std::to_string(m.matrix.cols()) + ", expected " + std::to_string(rows) + "x" +
                        std::to_string(cols));
}

void require_objects(const StructureBundle& b, std::size_t n, const std::string& what) {
  if (n != b.object_count())
    throw ShapeMismatch(what + " has " + std::to_string(n) + " objects, bundle has " +
                        std::to_string(b.object_count()));
}

void validate(const StructureBundle& b, const ComoduleData& m) {
  const std::size_t n = b.object_count();
  require_objects(b, m.size(), "comodule");
  if (m.coaction.size() != n * n) throw ShapeMismatch("coaction table size");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      require_size(m.rho(x, y), m.carrier[y] * b.c_dim(x, y), m.carrier[x],
                   "coaction " + tuple_label(b.coalgebra, {x, y}));
}

void validate(const StructureBundle& b, const EntwinedComoduleData& m) {
  validate(b, m.comodule);
  if (m.action.size() != m.size()) throw ShapeMismatch("action table size");
  for (std::size_t x = 0; x < m.size(); ++x)
    require_size(m.action[x], m.carrier()[x], m.carrier()[x] * b.a_dim(),
                 "action " + tuple_label(b.coalgebra, {x}));
}

void validate(const StructureBundle& b, const ContramoduleData& m) {
  const std::size_t n = b.object_count();
  require_objects(b, m.size(), "contramodule");
  if (m.contraaction.size() != n * n) throw ShapeMismatch("contraaction table size");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      require_size(m.pi(x, y), m.carrier[x], b.c_dim(x, y) * m.carrier[y],
                   "contraaction " + tuple_label(b.coalgebra, {x, y}));
}

void validate(const StructureBundle& b, const EntwinedContramoduleData& m) {
  validate(b, m.contramodule);
  if (m.action.size() != m.size()) throw ShapeMismatch("action table size");
  for (std::size_t x = 0; x < m.size(); ++x)
    require_size(m.action[x], b.a_dim() * m.carrier()[x], m.carrier()[x],
                 "action " + tuple_label(b.coalgebra, {x}));
}

void validate_morphism(const std::vector<std::size_t>& source, const std::vector<std::size_t>& target,
                       const MorphismData& f) {
  if (f.components.size() != source.size())
    throw ShapeMismatch("morphism has " + std::to_string(f.components.size()) + " components, expected " +
                        std::to_string(source.size()));
  for (std::size_t x = 0; x < source.size(); ++x)
    if (f.components[x].rows() != target[x] || f.components[x].cols() != source[x])
      throw ShapeMismatch("morphism component " + std::to_string(x) + " is " +
                          std::to_string(f.components[x].rows()) + "x" + std::to_string(f.components[x].cols()) +
                          ", expected " + std::to_string(target[x]) + "x" + std::to_string(source[x]));
}

Report to_report(const std::vector<Labeled>& parts) {
  Report r;
  for (const auto& p : parts) {
    std::size_t nz = 0;
    for (const auto& s : p.residual.entries())
      if (!s.is_zero()) ++nz;
    if (nz) r.violations.push_back({p.label, p.where, "sides differ in " + std::to_string(nz) + " entries"});
  }
  return r;
}

// Morphism conditions for each category, as residual matrices.

std::vector<Labeled> comod_residuals(const StructureBundle& b, const ComoduleData& m, const ComoduleData& n,
                                     const MorphismData& f) {
  const FieldSpec& k = b.field;
  std::vector<Labeled> out;
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) {
      auto lhs = comp(n.rho(x, y), as_map(f.components[x]));
      auto rhs = comp(tens(as_map(f.components[y]), id(k, b.c_dim(x, y))), m.rho(x, y));
      out.push_back({"comodule morphism: coaction", tuple_label(b.coalgebra, {x, y}),
                     mat_sub(lhs.matrix, rhs.matrix)});
    }
  return out;
}

std::vector<Labeled> entwined_comod_residuals(const StructureBundle& b, const EntwinedComoduleData& m,
                                              const EntwinedComoduleData& n, const MorphismData& f) {
  auto out = comod_residuals(b, m.comodule, n.comodule, f);
  const FieldSpec& k = b.field;
  for (std::size_t x = 0; x < m.size(); ++x) {
    auto lhs = comp(as_map(f.components[x]), m.action[x]);
    auto rhs = comp(n.action[x], tens(as_map(f.components[x]), id(k, b.a_dim())));
    out.push_back({"comodule morphism: A-linearity", tuple_label(b.coalgebra, {x}),
                   mat_sub(lhs.matrix, rhs.matrix)});
  }
  return out;
}

std::vector<Labeled> contra_residuals(const StructureBundle& b, const ContramoduleData& m,
                                      const ContramoduleData& n, const MorphismData& f) {
  const FieldSpec& k = b.field;
  std::vector<Labeled> out;
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) {
      auto lhs = comp(as_map(f.components[x]), m.pi(x, y));
      auto rhs = comp(n.pi(x, y), tens(id(k, b.c_dim(x, y)), as_map(f.components[y])));
      out.push_back({"contramodule morphism: contraaction", tuple_label(b.coalgebra, {x, y}),
                     mat_sub(lhs.matrix, rhs.matrix)});
    }
  return out;
}

std::vector<Labeled> entwined_contra_residuals(const StructureBundle& b, const EntwinedContramoduleData& m,
                                               const EntwinedContramoduleData& n, const MorphismData& f) {
  auto out = contra_residuals(b, m.contramodule, n.contramodule, f);
  const FieldSpec& k = b.field;
  for (std::size_t x = 0; x < m.size(); ++x) {
    auto lhs = comp(tens(id(k, b.a_dim()), as_map(f.components[x])), m.action[x]);
    auto rhs = comp(n.action[x], as_map(f.components[x]));
    out.push_back({"contramodule morphism: A-linearity", tuple_label(b.coalgebra, {x}),
                   mat_sub(lhs.matrix, rhs.matrix)});
  }
  return out;
}

std::vector<Labeled> morphism_residuals(const StructureBundle& b, const AnyModule& source,
                                        const AnyModule& target, const MorphismData& f) {
  if (source.index() != target.index())
    throw ShapeMismatch("source is in " + category_name(category_of(source)) + ", target in " +
                        category_name(category_of(target)));
  return std::visit(
      [&](const auto& s) -> std::vector<Labeled> {
        using T = std::decay_t<decltype(s)>;
        const auto& t = std::get<T>(target);
        if constexpr (std::is_same_v<T, ComoduleData>)
          return comod_residuals(b, s, t, f);
        else if constexpr (std::is_same_v<T, EntwinedComoduleData>)
          return entwined_comod_residuals(b, s, t, f);
        else if constexpr (std::is_same_v<T, ContramoduleData>)
          return contra_residuals(b, s, t, f);
        else
          return entwined_contra_residuals(b, s, t, f);
      },
      source);
}

void require_morphism(const StructureBundle& b, const AnyModule& source, const AnyModule& target,
                      const MorphismData& f, const std::string& what) {
  Report r;
  try {
    r = check_morphism(b, source, target, f);
  } catch (const ShapeMismatch& e) {
    throw InvalidMorphism(what + ": " + e.what());
  }
  if (!r.ok()) throw InvalidMorphism(what + ": " + r.violations.front().label + " " + r.violations.front().where);
}

}  // namespace

RightModule right_regular_module(const AlgebraData& a) { return {a.dim, a.mul}; }

LeftModule left_regular_module(const AlgebraData& a) {
  const std::size_t d = a.dim;
  Matrix m(a.field, d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) m(i * d + k, j) = a.mul.matrix(k, i * d + j);
  return {d, ShapedMap(std::move(m), TensorShape{d}, TensorShape{d, d})};
}

RightModule right_character_module(const AlgebraData& a, const Matrix& character) {
  return {1, ShapedMap(character, TensorShape{1, a.dim}, TensorShape{1})};
}

LeftModule left_character_module(const AlgebraData& a, const Matrix& character) {
  return {1, ShapedMap(character.transposed(), TensorShape{1}, TensorShape{a.dim, 1})};
}

Report check_right_module(const AlgebraData& a, const RightModule& p) {
  const FieldSpec& k = a.field;
  require_size(p.action, p.dim, p.dim * a.dim, "right action");
  Report r;
  expect_equal(r, comp(p.action, tens(p.action, id(k, a.dim))), comp(p.action, tens(id(k, p.dim), a.mul)),
               "module axiom: associativity", "");
  expect_equal(r, comp(p.action, tens(id(k, p.dim), a.unit)), id(k, p.dim), "module axiom: unit", "");
  return r;
}

Report check_left_module(const AlgebraData& a, const LeftModule& p) {
  const FieldSpec& k = a.field;
  const std::size_t d = a.dim;
  require_size(p.action, d * p.dim, p.dim, "left action");
  Report r;
  expect_equal(r, comp(tens(id(k, d), p.action), p.action),
               comp(tens(sw(k, d, d), id(k, p.dim)), tens(transposed(a.mul), id(k, p.dim)), p.action),
               "module axiom: associativity", "");
  expect_equal(r, comp(tens(transposed(a.unit), id(k, p.dim)), p.action), id(k, p.dim), "module axiom: unit", "");
  return r;
}

std::string category_name(Category c) {
  switch (c) {
    case Category::Comod: return "comod";
    case Category::EntwinedComod: return "entwined-comod";
    case Category::Contra: return "contra";
    case Category::EntwinedContra: return "entwined-contra";
  }
  return "?";
}

Category parse_category(const std::string& text) {
  for (Category c : {Category::Comod, Category::EntwinedComod, Category::Contra, Category::EntwinedContra})
    if (category_name(c) == text) return c;
  throw ParseError("unknown category '" + text + "'");
}

Category category_of(const AnyModule& m) { return static_cast<Category>(m.index()); }

const std::vector<std::size_t>& carrier_of(const AnyModule& m) {
  return std::visit(
      [](const auto& v) -> const std::vector<std::size_t>& {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ComoduleData> || std::is_same_v<T, ContramoduleData>)
          return v.carrier;
        else
          return v.carrier();
      },
      m);
}

Report check_comodule(const StructureBundle& b, const ComoduleData& m) {
  validate(b, m);
  const FieldSpec& k = b.field;
  const auto& c = b.coalgebra;
  const std::size_t n = m.size();
  Report r;
  // (id (x) delta_XZY) o rho_XY = (rho_ZY (x) id) o rho_XZ
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        expect_equal(r, comp(tens(id(k, m.carrier[y]), c.delta(x, z, y)), m.rho(x, y)),
                     comp(tens(m.rho(z, y), id(k, c.hom_dim(x, z))), m.rho(x, z)),
                     "comodule axiom: coassociativity", tuple_label(c, {x, y, z}));
  for (std::size_t x = 0; x < n; ++x)
    expect_equal(r, comp(tens(id(k, m.carrier[x]), c.counit(x)), m.rho(x, x)), id(k, m.carrier[x]),
                 "comodule axiom: counit", tuple_label(c, {x}));
  return r;
}

Report check_entwined_comodule(const StructureBundle& b, const EntwinedComoduleData& m) {
  validate(b, m);
  Report r = check_comodule(b, m.comodule);
  const FieldSpec& k = b.field;
  const auto& a = b.algebra;
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t mx = m.carrier()[x];
    expect_equal(r, comp(m.action[x], tens(m.action[x], id(k, a.dim))),
                 comp(m.action[x], tens(id(k, mx), a.mul)), "module axiom: associativity",
                 tuple_label(b.coalgebra, {x}));
    expect_equal(r, comp(m.action[x], tens(id(k, mx), a.unit)), id(k, mx), "module axiom: unit",
                 tuple_label(b.coalgebra, {x}));
  }
  // rho_XY o mu_X = (mu_Y (x) id) o (id (x) psi_XY) o (rho_XY (x) id_A)
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      expect_equal(r, comp(m.comodule.rho(x, y), m.action[x]),
                   comp(tens(m.action[y], id(k, b.c_dim(x, y))), tens(id(k, m.carrier()[y]), b.entwining.psi(x, y)),
                        tens(m.comodule.rho(x, y), id(k, a.dim))),
                   "entwined comodule axiom: compatibility", tuple_label(b.coalgebra, {x, y}));
  return r;
}

Report check_contramodule(const StructureBundle& b, const ContramoduleData& m) {
  validate(b, m);
  const FieldSpec& k = b.field;
  const auto& c = b.coalgebra;
  const std::size_t n = m.size();
  Report r;
  // pi_XY o (id (x) pi_YZ) = pi_XZ o (delta_XYZ^T (x) id) o (swap (x) id)
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        expect_equal(r, comp(m.pi(x, y), tens(id(k, c.hom_dim(x, y)), m.pi(y, z))),
                     comp(m.pi(x, z), tens(transposed(c.delta(x, y, z)), id(k, m.carrier[z])),
                          tens(sw(k, c.hom_dim(x, y), c.hom_dim(y, z)), id(k, m.carrier[z]))),
                     "contramodule axiom: contraassociativity", tuple_label(c, {x, y, z}));
  for (std::size_t x = 0; x < n; ++x)
    expect_equal(r, comp(m.pi(x, x), tens(transposed(c.counit(x)), id(k, m.carrier[x]))), id(k, m.carrier[x]),
                 "contramodule axiom: counit", tuple_label(c, {x}));
  return r;
}

Report check_entwined_contramodule(const StructureBundle& b, const EntwinedContramoduleData& m) {
  validate(b, m);
  Report r = check_contramodule(b, m.contramodule);
  const FieldSpec& k = b.field;
  const auto& a = b.algebra;
  const std::size_t d = a.dim;
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    r.merge([&] {
      Report mr = check_left_module(a, LeftModule{m.carrier()[x], m.action[x]});
      for (auto& v : mr.violations) v.where = tuple_label(b.coalgebra, {x});
      return mr;
    }());
  }
  // mu_X o pi_XY = (id (x) pi_XY) o swap o (psi_XY^T (x) id) o swap o (id (x) mu_Y)
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t cxy = b.c_dim(x, y);
      const std::size_t my = m.carrier()[y];
      auto rhs = comp(tens(id(k, d), m.contramodule.pi(x, y)), tens(sw(k, cxy, d), id(k, my)),
                      tens(transposed(b.entwining.psi(x, y)), id(k, my)), tens(sw(k, cxy, d), id(k, my)),
                      tens(id(k, cxy), m.action[y]));
      expect_equal(r, comp(m.action[x], m.contramodule.pi(x, y)), rhs,
                   "entwined contramodule axiom: compatibility", tuple_label(b.coalgebra, {x, y}));
    }
  return r;
}

Report check_module(const StructureBundle& b, const AnyModule& m) {
  return std::visit(
      [&](const auto& v) -> Report {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ComoduleData>)
          return check_comodule(b, v);
        else if constexpr (std::is_same_v<T, EntwinedComoduleData>)
          return check_entwined_comodule(b, v);
        else if constexpr (std::is_same_v<T, ContramoduleData>)
          return check_contramodule(b, v);
        else
          return check_entwined_contramodule(b, v);
      },
      m);
}

Report check_morphism(const StructureBundle& b, const AnyModule& source, const AnyModule& target,
                      const MorphismData& f) {
  validate_morphism(carrier_of(source), carrier_of(target), f);
  return to_report(morphism_residuals(b, source, target, f));
}

std::vector<MorphismData> hom_space(const StructureBundle& b, const AnyModule& source, const AnyModule& target) {
  const FieldSpec& k = b.field;
  const auto& s = carrier_of(source);
  const auto& t = carrier_of(target);
  if (s.size() != t.size()) throw ShapeMismatch("source and target have different object counts");
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  std::size_t unknowns = 0;
  for (std::size_t x = 0; x < s.size(); ++x) {
    sizes.emplace_back(t[x], s[x]);
    unknowns += t[x] * s[x];
  }
  // Shape errors surface here rather than inside the probe loop.
  check_module(b, source);
  check_module(b, target);
  auto system = detail::assemble_affine(k, unknowns, [&](const std::vector<Scalar>& x) {
    auto parts = morphism_residuals(b, source, target, MorphismData{detail::unpack(k, x, sizes)});
    std::vector<Matrix> out;
    for (auto& p : parts) out.push_back(std::move(p.residual));
    return out;
  });
  std::vector<MorphismData> basis;
  for (const auto& v : nullspace(system.coefficients))
    basis.push_back(MorphismData{detail::unpack(k, v.entries(), sizes)});
  return basis;
}

MorphismData identity_morphism(const FieldSpec& f, const std::vector<std::size_t>& carrier) {
  MorphismData m;
  for (auto d : carrier) m.components.push_back(Matrix::identity(f, d));
  return m;
}

MorphismData zero_morphism(const FieldSpec& f, const std::vector<std::size_t>& source,
                           const std::vector<std::size_t>& target) {
  MorphismData m;
  for (std::size_t x = 0; x < source.size(); ++x) m.components.emplace_back(f, target[x], source[x]);
  return m;
}

MorphismData compose_morphisms(const MorphismData& g, const MorphismData& f) {
  if (g.components.size() != f.components.size()) throw ShapeMismatch("morphisms have different object counts");
  MorphismData out;
  for (std::size_t x = 0; x < f.components.size(); ++x)
    out.components.push_back(mat_mul(g.components[x], f.components[x]));
  return out;
}

EntwinedComoduleData functor_F(const StructureBundle& b, const ComoduleData& m) {
  validate(b, m);
  const FieldSpec& k = b.field;
  const std::size_t d = b.a_dim();
  const std::size_t n = m.size();
  EntwinedComoduleData out;
  for (auto c : m.carrier) out.comodule.carrier.push_back(c * d);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto rho = comp(tens(id(k, m.carrier[y]), b.entwining.psi(x, y)), tens(m.rho(x, y), id(k, d)));
      out.comodule.coaction.push_back(
          rho.with_shapes(TensorShape{m.carrier[x] * d}, TensorShape{m.carrier[y] * d, b.c_dim(x, y)}));
    }
  for (std::size_t x = 0; x < n; ++x)
    out.action.push_back(tens(id(k, m.carrier[x]), b.algebra.mul)
                             .with_shapes(TensorShape{m.carrier[x] * d, d}, TensorShape{m.carrier[x] * d}));
  return out;
}

MorphismData functor_F(const StructureBundle& b, const MorphismData& f) {
  MorphismData out;
  for (const auto& c : f.components) out.components.push_back(kron(c, Matrix::identity(b.field, b.a_dim())));
  return out;
}

ComoduleData functor_G(const EntwinedComoduleData& m) { return m.comodule; }

ContramoduleData functor_S(const EntwinedContramoduleData& m) { return m.contramodule; }

EntwinedContramoduleData functor_T(const StructureBundle& b, const ContramoduleData& m) {
  validate(b, m);
  const FieldSpec& k = b.field;
  const std::size_t d = b.a_dim();
  const std::size_t n = m.size();
  EntwinedContramoduleData out;
  for (auto c : m.carrier) out.contramodule.carrier.push_back(d * c);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t cxy = b.c_dim(x, y);
      const std::size_t my = m.carrier[y];
      auto pi = comp(tens(id(k, d), m.pi(x, y)), tens(sw(k, cxy, d), id(k, my)),
                     tens(transposed(b.entwining.psi(x, y)), id(k, my)), tens(sw(k, cxy, d), id(k, my)));
      out.contramodule.contraaction.push_back(
          pi.with_shapes(TensorShape{cxy, d * my}, TensorShape{d * m.carrier[x]}));
    }
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t mx = m.carrier[x];
    auto act = comp(tens(sw(k, d, d), id(k, mx)), tens(transposed(b.algebra.mul), id(k, mx)));
    out.action.push_back(act.with_shapes(TensorShape{d * mx}, TensorShape{d, d * mx}));
  }
  return out;
}

MorphismData functor_T(const StructureBundle& b, const MorphismData& f) {
  MorphismData out;
  for (const auto& c : f.components) out.components.push_back(kron(Matrix::identity(b.field, b.a_dim()), c));
  return out;
}

MorphismData fg_unit(const StructureBundle& b, const ComoduleData& m) {
  MorphismData out;
  for (auto c : m.carrier) out.components.push_back(kron(Matrix::identity(b.field, c), b.algebra.unit.matrix));
  return out;
}

MorphismData fg_counit(const StructureBundle&, const EntwinedComoduleData& n) {
  MorphismData out;
  for (const auto& a : n.action) out.components.push_back(a.matrix);
  return out;
}

MorphismData st_unit(const StructureBundle&, const EntwinedContramoduleData& m) {
  MorphismData out;
  for (const auto& a : m.action) out.components.push_back(a.matrix);
  return out;
}

MorphismData st_counit(const StructureBundle& b, const ContramoduleData& n) {
  MorphismData out;
  for (auto c : n.carrier)
    out.components.push_back(kron(b.algebra.unit.matrix.transposed(), Matrix::identity(b.field, c)));
  return out;
}

MorphismData transpose_free_to_forgetful(const StructureBundle& b, const ComoduleData& m,
                                         const EntwinedComoduleData& n, const MorphismData& f) {
  require_morphism(b, functor_F(b, m), n, f, "input");
  MorphismData out;
  for (std::size_t x = 0; x < m.size(); ++x)
    out.components.push_back(
        mat_mul(f.components[x], kron(Matrix::identity(b.field, m.carrier[x]), b.algebra.unit.matrix)));
  require_morphism(b, m, functor_G(n), out, "output");
  return out;
}

MorphismData transpose_forgetful_to_free(const StructureBundle& b, const ComoduleData& m,
                                         const EntwinedComoduleData& n, const MorphismData& f) {
  require_morphism(b, m, functor_G(n), f, "input");
  MorphismData out;
  for (std::size_t x = 0; x < m.size(); ++x)
    out.components.push_back(
        mat_mul(n.action[x].matrix, kron(f.components[x], Matrix::identity(b.field, b.a_dim()))));
  require_morphism(b, functor_F(b, m), n, out, "output");
  return out;
}

MorphismData transpose_forgetful_to_cofree(const StructureBundle& b, const EntwinedContramoduleData& m,
                                           const ContramoduleData& n, const MorphismData& f) {
  require_morphism(b, functor_S(m), n, f, "input");
  MorphismData out;
  for (std::size_t x = 0; x < m.size(); ++x)
    out.components.push_back(
        mat_mul(kron(Matrix::identity(b.field, b.a_dim()), f.components[x]), m.action[x].matrix));
  require_morphism(b, m, functor_T(b, n), out, "output");
  return out;
}

MorphismData transpose_cofree_to_forgetful(const StructureBundle& b, const EntwinedContramoduleData& m,
                                           const ContramoduleData& n, const MorphismData& f) {
  require_morphism(b, m, functor_T(b, n), f, "input");
  MorphismData out;
  for (std::size_t x = 0; x < m.size(); ++x)
    out.components.push_back(mat_mul(
        kron(b.algebra.unit.matrix.transposed(), Matrix::identity(b.field, n.carrier[x])), f.components[x]));
  require_morphism(b, functor_S(m), n, out, "output");
  return out;
}

ComoduleData regular_comodule(const StructureBundle& b, std::size_t x) {
  const auto& c = b.coalgebra;
  const std::size_t n = c.size();
  if (x >= n) throw UnknownName("object index " + std::to_string(x));
  ComoduleData m;
  for (std::size_t y = 0; y < n; ++y) m.carrier.push_back(c.hom_dim(y, x));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) m.coaction.push_back(c.delta(y, z, x));
  return m;
}

EntwinedComoduleData regular_comodule(const StructureBundle& b, std::size_t x, const RightModule& p) {
  const FieldSpec& k = b.field;
  const auto& c = b.coalgebra;
  const std::size_t n = c.size();
  if (x >= n) throw UnknownName("object index " + std::to_string(x));
  EntwinedComoduleData m;
  for (std::size_t y = 0; y < n; ++y) m.comodule.carrier.push_back(p.dim * c.hom_dim(y, x));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      m.comodule.coaction.push_back(tens(id(k, p.dim), c.delta(y, z, x))
                                        .with_shapes(TensorShape{p.dim * c.hom_dim(y, x)},
                                                     TensorShape{p.dim * c.hom_dim(z, x), c.hom_dim(y, z)}));
  for (std::size_t y = 0; y < n; ++y) {
    const std::size_t cyx = c.hom_dim(y, x);
    auto act = comp(tens(p.action, id(k, cyx)), tens(id(k, p.dim), b.entwining.psi(y, x)));
    m.action.push_back(act.with_shapes(TensorShape{p.dim * cyx, b.a_dim()}, TensorShape{p.dim * cyx}));
  }
  return m;
}

ContramoduleData contramodule_HXU(const StructureBundle& b, std::size_t x, std::size_t u_dim) {
  const FieldSpec& k = b.field;
  const auto& c = b.coalgebra;
  const std::size_t n = c.size();
  if (x >= n) throw UnknownName("object index " + std::to_string(x));
  ContramoduleData m;
  for (std::size_t y = 0; y < n; ++y) m.carrier.push_back(c.hom_dim(y, x) * u_dim);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      auto pi = comp(tens(transposed(c.delta(y, z, x)), id(k, u_dim)),
                     tens(sw(k, c.hom_dim(y, z), c.hom_dim(z, x)), id(k, u_dim)));
      m.contraaction.push_back(
          pi.with_shapes(TensorShape{c.hom_dim(y, z), c.hom_dim(z, x) * u_dim}, TensorShape{c.hom_dim(y, x) * u_dim}));
    }
  return m;
}

EntwinedContramoduleData contramodule_HXP(const StructureBundle& b, std::size_t x, const LeftModule& p) {
  const FieldSpec& k = b.field;
  const std::size_t d = b.a_dim();
  EntwinedContramoduleData m;
  m.contramodule = contramodule_HXU(b, x, p.dim);
  for (std::size_t y = 0; y < b.object_count(); ++y) {
    const std::size_t cyx = b.c_dim(y, x);
    auto act = comp(tens(sw(k, cyx, d), id(k, p.dim)), tens(transposed(b.entwining.psi(y, x)), id(k, p.dim)),
                    tens(sw(k, cyx, d), id(k, p.dim)), tens(id(k, cyx), p.action));
    m.action.push_back(act.with_shapes(TensorShape{cyx * p.dim}, TensorShape{d, cyx * p.dim}));
  }
  return m;
}

Subcomodule subcomodule_generated(const StructureBundle& b, const ComoduleData& m, std::size_t x,
                                  const Matrix& v) {
  validate(b, m);
  const FieldSpec& k = b.field;
  const std::size_t n = m.size();
  if (x >= n) throw UnknownName("object index " + std::to_string(x));
  if (v.size() != m.carrier[x]) throw DimensionMismatch("generator length differs from M(X)");
  std::vector<std::vector<Matrix>> spans(n);
  spans[x] = canonical_span_basis(k, m.carrier[x], {v.flattened()});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t y = 0; y < n; ++y) {
      const auto current = spans[y];
      for (const auto& w : current)
        for (std::size_t z = 0; z < n; ++z) {
          const std::size_t cyz = b.c_dim(y, z);
          const std::size_t mz = m.carrier[z];
          const Matrix image = mat_mul(m.rho(y, z).matrix, w);
          std::vector<Matrix> grown = spans[z];
          for (std::size_t j = 0; j < cyz; ++j) {
            Matrix part(k, mz, 1);
            for (std::size_t i = 0; i < mz; ++i) part(i, 0) = image(i * cyz + j, 0);
            grown.push_back(std::move(part));
          }
          auto reduced = canonical_span_basis(k, mz, grown);
          if (reduced.size() != spans[z].size()) changed = true;
          spans[z] = std::move(reduced);
        }
    }
  }
  Subcomodule out;
  for (std::size_t y = 0; y < n; ++y) {
    out.spans.push_back(hconcat_all(k, m.carrier[y], spans[y]));
    out.comodule.carrier.push_back(spans[y].size());
  }
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      const std::size_t cyz = b.c_dim(y, z);
      const std::size_t ny = out.comodule.carrier[y], nz = out.comodule.carrier[z];
      const Matrix image = mat_mul(m.rho(y, z).matrix, out.spans[y]);
      const Matrix embed = kron(out.spans[z], Matrix::identity(k, cyz));
      Matrix restricted(k, nz * cyz, ny);
      for (std::size_t col = 0; col < ny; ++col) {
        auto sol = solve_affine(embed, image.column_at(col));
        if (!sol.feasible) throw ValidationError("subcomodule closure failed to stabilise");
        for (std::size_t r = 0; r < nz * cyz; ++r) restricted(r, col) = (*sol.particular)(r, 0);
      }
      out.comodule.coaction.push_back(
          ShapedMap(std::move(restricted), TensorShape{ny}, TensorShape{nz, cyz}));
    }
  return out;
}

}  // namespace entwine
