#pragma once

#include <string>
#include <string_view>

#include "entwine/criteria.hpp"

namespace entwine {

// JSON bundle format:
//   field     {"kind": "Q"} or {"kind": "Fp", "p": 2}
//   objects   ["X", "Y", ...]
//   hom_dims  {"X->Y": n, ...} for every ordered pair
//   delta     {"X->Y->Z": matrix}  C(X,Z) -> C(Y,Z) (x) C(X,Y)
//   counit    {"X": matrix}        1 x dim C(X,X)
//   algebra   {"dim": n, "mul": matrix (n x n^2), "unit": matrix (n x 1)}
//   entwining {"X->Y": matrix}     C(X,Y) (x) A -> A (x) C(X,Y)
// Matrices are arrays of rows of scalar strings ("p/q" or a residue).
// Entries whose matrix has no coefficients may be omitted.
//
// Loading throws ParseError (with the offending line or field path) for
// malformed input and ValidationError naming the failing axiom.
StructureBundle parse_bundle(std::string_view text);
// Shapes and syntax only; the axioms are left to the caller.
StructureBundle parse_bundle_unchecked(std::string_view text);
StructureBundle load_bundle(const std::string& path);
std::string save_bundle(const StructureBundle& b);
void save_bundle(const StructureBundle& b, const std::string& path);

// Module files: {"kind": "comodule" | "entwined-comodule" | "contramodule"
// | "entwined-contramodule", "carrier": {"X": n}, "coaction" or
// "contraaction": {"X->Y": matrix}, "action": {"X": matrix}}.
// Parsed modules are checked against their axioms (ValidationError).
AnyModule parse_module(const StructureBundle& b, std::string_view text);
AnyModule parse_module_unchecked(const StructureBundle& b, std::string_view text);
AnyModule load_module(const StructureBundle& b, const std::string& path);
std::string save_module(const StructureBundle& b, const AnyModule& m);

// {"components": {"X": matrix}}; sizes are checked against the carriers.
MorphismData parse_morphism(const StructureBundle& b, const std::vector<std::size_t>& source,
                            const std::vector<std::size_t>& target, std::string_view text);
std::string save_morphism(const StructureBundle& b, const MorphismData& m);

// Certificates: {"sigma": {"X": matrix}}, {"lambda": {...}},
// {"gamma": {...}, "coev": matrix}. Shapes are checked, membership is not.
std::string save_sigma(const StructureBundle& b, const SigmaElement& s);
std::string save_lambda(const StructureBundle& b, const LambdaElement& l);
std::string save_cointegral(const StructureBundle& b, const CointegralData& g);
SigmaElement parse_sigma(const StructureBundle& b, std::string_view text);
LambdaElement parse_lambda(const StructureBundle& b, std::string_view text);
CointegralData parse_cointegral(const StructureBundle& b, std::string_view text);

// {"outcome", "sigma"?, "lambda"?, "gamma"?, "coev"?, "witness"?, "enumeration"?}
std::string save_decision(const StructureBundle& b, const Decision& d);
Decision parse_decision(const StructureBundle& b, std::string_view text);

std::string read_text_file(const std::string& path);  // ParseError if unreadable

}  // namespace entwine
