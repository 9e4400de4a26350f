#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "entwine/structures.hpp"

namespace entwine {

// Right comodule over the coalgebra: one space M(X) per object and
//   coaction(x, y): M(X) -> M(Y) (x) C(X, Y).
struct ComoduleData {
  std::vector<std::size_t> carrier;
  std::vector<ShapedMap> coaction;  // indexed (x, y)

  std::size_t size() const { return carrier.size(); }
  const ShapedMap& rho(std::size_t x, std::size_t y) const { return coaction[x * size() + y]; }
  ShapedMap& rho(std::size_t x, std::size_t y) { return coaction[x * size() + y]; }
};

// Comodule with right A-actions action(x): M(X) (x) A -> M(X).
struct EntwinedComoduleData {
  ComoduleData comodule;
  std::vector<ShapedMap> action;

  std::size_t size() const { return comodule.size(); }
  const std::vector<std::size_t>& carrier() const { return comodule.carrier; }
};

// Contramodule: contraaction(x, y): C(X, Y)* (x) M(Y) -> M(X).
struct ContramoduleData {
  std::vector<std::size_t> carrier;
  std::vector<ShapedMap> contraaction;  // indexed (x, y)

  std::size_t size() const { return carrier.size(); }
  const ShapedMap& pi(std::size_t x, std::size_t y) const { return contraaction[x * size() + y]; }
  ShapedMap& pi(std::size_t x, std::size_t y) { return contraaction[x * size() + y]; }
};

// Contramodule whose spaces are left A-modules, written in the dual form
// action(x): M(X) -> A* (x) M(X), i.e. m |-> (a |-> a m).
struct EntwinedContramoduleData {
  ContramoduleData contramodule;
  std::vector<ShapedMap> action;

  std::size_t size() const { return contramodule.size(); }
  const std::vector<std::size_t>& carrier() const { return contramodule.carrier; }
};

// Component x is a target(X) x source(X) matrix.
struct MorphismData {
  std::vector<Matrix> components;

  friend bool operator==(const MorphismData&, const MorphismData&) = default;
};

// A right A-module P (x) A -> P and a left A-module in dual form P -> A* (x) P.
struct RightModule {
  std::size_t dim = 0;
  ShapedMap action;
};
struct LeftModule {
  std::size_t dim = 0;
  ShapedMap action;
};

RightModule right_regular_module(const AlgebraData& a);
LeftModule left_regular_module(const AlgebraData& a);
// The ground field with A acting through `character` (a 1 x dim A matrix,
// e.g. an augmentation).
RightModule right_character_module(const AlgebraData& a, const Matrix& character);
LeftModule left_character_module(const AlgebraData& a, const Matrix& character);
Report check_right_module(const AlgebraData& a, const RightModule& p);
Report check_left_module(const AlgebraData& a, const LeftModule& p);

enum class Category { Comod, EntwinedComod, Contra, EntwinedContra };
std::string category_name(Category c);
// "comod", "entwined-comod", "contra", "entwined-contra"; throws ParseError.
Category parse_category(const std::string& text);

using AnyModule = std::variant<ComoduleData, EntwinedComoduleData, ContramoduleData, EntwinedContramoduleData>;
Category category_of(const AnyModule& m);
const std::vector<std::size_t>& carrier_of(const AnyModule& m);

// Axiom checkers; all instances are evaluated and every failure reported.
// They throw ShapeMismatch when a map has the wrong size.
Report check_comodule(const StructureBundle& b, const ComoduleData& m);
Report check_entwined_comodule(const StructureBundle& b, const EntwinedComoduleData& m);
Report check_contramodule(const StructureBundle& b, const ContramoduleData& m);
Report check_entwined_contramodule(const StructureBundle& b, const EntwinedContramoduleData& m);
Report check_module(const StructureBundle& b, const AnyModule& m);

// Morphism conditions in the given category.
Report check_morphism(const StructureBundle& b, const AnyModule& source, const AnyModule& target,
                      const MorphismData& f);

// Basis of the morphism space source -> target, in the canonical reduced
// form of nullspace() on the flattened components (object order, then
// row-major). Both modules must be of the same category.
std::vector<MorphismData> hom_space(const StructureBundle& b, const AnyModule& source, const AnyModule& target);

MorphismData identity_morphism(const FieldSpec& f, const std::vector<std::size_t>& carrier);
MorphismData zero_morphism(const FieldSpec& f, const std::vector<std::size_t>& source,
                           const std::vector<std::size_t>& target);
// g after f, componentwise.
MorphismData compose_morphisms(const MorphismData& g, const MorphismData& f);

// Free functor: F(M)(X) = M(X) (x) A with coaction (id (x) psi) o (rho (x) id_A).
EntwinedComoduleData functor_F(const StructureBundle& b, const ComoduleData& m);
MorphismData functor_F(const StructureBundle& b, const MorphismData& f);
// Forgetful functors.
ComoduleData functor_G(const EntwinedComoduleData& m);
ContramoduleData functor_S(const EntwinedContramoduleData& m);
// T(N)(X) = A* (x) N(X) = Hom(A, N(X)).
EntwinedContramoduleData functor_T(const StructureBundle& b, const ContramoduleData& n);
MorphismData functor_T(const StructureBundle& b, const MorphismData& f);

// Units and counits of the two adjunctions.
MorphismData fg_unit(const StructureBundle& b, const ComoduleData& m);             // M -> GF(M)
MorphismData fg_counit(const StructureBundle& b, const EntwinedComoduleData& n);   // FG(N) -> N
MorphismData st_unit(const StructureBundle& b, const EntwinedContramoduleData& m);  // M -> TS(M)
MorphismData st_counit(const StructureBundle& b, const ContramoduleData& n);       // ST(N) -> N

// Adjunction bijections. Each validates its input (InvalidMorphism) and
// its output.
//   Hom(F M, N) -> Hom(M, G N)
MorphismData transpose_free_to_forgetful(const StructureBundle& b, const ComoduleData& m,
                                         const EntwinedComoduleData& n, const MorphismData& f);
//   Hom(M, G N) -> Hom(F M, N)
MorphismData transpose_forgetful_to_free(const StructureBundle& b, const ComoduleData& m,
                                         const EntwinedComoduleData& n, const MorphismData& f);
//   Hom(S M, N) -> Hom(M, T N)
MorphismData transpose_forgetful_to_cofree(const StructureBundle& b, const EntwinedContramoduleData& m,
                                           const ContramoduleData& n, const MorphismData& f);
//   Hom(M, T N) -> Hom(S M, N)
MorphismData transpose_cofree_to_forgetful(const StructureBundle& b, const EntwinedContramoduleData& m,
                                           const ContramoduleData& n, const MorphismData& f);

// H_X: Y |-> C(Y, X) with coaction delta_YZX.
ComoduleData regular_comodule(const StructureBundle& b, std::size_t x);
// P (x) H_X with action through psi.
EntwinedComoduleData regular_comodule(const StructureBundle& b, std::size_t x, const RightModule& p);
// H_X^U: Y |-> C(Y, X)* (x) U.
ContramoduleData contramodule_HXU(const StructureBundle& b, std::size_t x, std::size_t u_dim);
// H_X^P for a left A-module P, with action through psi.
EntwinedContramoduleData contramodule_HXP(const StructureBundle& b, std::size_t x, const LeftModule& p);

struct Subcomodule {
  std::vector<Matrix> spans;  // basis columns of N(Y) inside M(Y), per object
  ComoduleData comodule;      // coaction restricted to the spans
};
// Smallest subcomodule containing v in M(X): repeatedly add the M(Z)
// components of the coactions of basis vectors, scanning objects in
// declared order until nothing new appears.
Subcomodule subcomodule_generated(const StructureBundle& b, const ComoduleData& m, std::size_t x,
                                  const Matrix& v);

}  // namespace entwine
