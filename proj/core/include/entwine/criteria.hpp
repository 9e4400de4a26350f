#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entwine/representations.hpp"

namespace entwine {

// sigma[x]: C(X, X) (x) A -> K, a 1 x (dim C(X,X) * dim A) map.
struct SigmaElement {
  std::vector<ShapedMap> sigma;
  friend bool operator==(const SigmaElement&, const SigmaElement&) = default;
};

// lambda[x]: C(X, X) -> A (x) A.
struct LambdaElement {
  std::vector<ShapedMap> lambda;
  friend bool operator==(const LambdaElement&, const LambdaElement&) = default;
};

// gamma[x]: A* (x) C(X, X) -> A, together with the coevaluation
// K -> A (x) A* used to pair it.
struct CointegralData {
  std::vector<ShapedMap> gamma;
  ShapedMap coev;
  friend bool operator==(const CointegralData&, const CointegralData&) = default;
};

enum class Outcome { Yes, No, Unknown };
std::string outcome_name(Outcome o);  // "yes", "no", "unknown"

// rank(M) and rank([M | b]) of an infeasible system M x = b.
struct RankWitness {
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;
};

struct EnumerationStats {
  std::string strategy;           // "basis", "exhaustive", "height-bounded"
  std::size_t w1_dim = 0;         // dimension of the lambda space searched
  std::uint64_t search_space = 0;  // number of candidates in the chosen family
  std::uint64_t examined = 0;     // candidates examined, in enumeration order
  bool exhaustive = false;        // the family covers every lambda
};

struct Decision {
  Outcome outcome = Outcome::Unknown;
  std::optional<SigmaElement> sigma;
  std::optional<LambdaElement> lambda;
  std::optional<CointegralData> cointegral;
  std::optional<RankWitness> witness;
  std::optional<EnumerationStats> enumeration;
};

// Element conditions without normalisation.
Report check_v1(const StructureBundle& b, const SigmaElement& s);
Report check_w1(const StructureBundle& b, const LambdaElement& l);
// The normalisations that make an element a separability certificate.
Report check_sigma_normalised(const StructureBundle& b, const SigmaElement& s);
Report check_lambda_normalised(const StructureBundle& b, const LambdaElement& l);

// Canonical bases (see nullspace()) of the two element spaces.
std::vector<SigmaElement> v1_basis(const StructureBundle& b);
std::vector<LambdaElement> w1_basis(const StructureBundle& b);

// Exact linear decisions; never Unknown. Yes carries the canonical
// particular solution, No carries the rank witness.
Decision decide_sep_F(const StructureBundle& b);
Decision decide_sep_G(const StructureBundle& b);

struct FrobeniusOptions {
  std::uint64_t budget = 1'000'000;  // cap on enumerated lambda candidates
  int height = 3;                    // coefficient bound over Q
  unsigned threads = 0;              // 0: hardware concurrency, capped by ENTWINE_THREADS
};

// For each candidate lambda in W1 the pairing identities are linear in
// sigma and solved exactly. Candidates: the separability certificate of G
// if any, each basis vector of W1, then all of W1 over F_p when
// p^dim(W1) <= budget (a miss gives No), else small integer combinations.
Decision decide_frobenius(const StructureBundle& b, const FrobeniusOptions& opts = {});

// Test objects on which the natural-transformation identities are checked.
struct TestObjects {
  std::vector<std::pair<std::string, ComoduleData>> comodules;
  std::vector<std::pair<std::string, EntwinedComoduleData>> entwined_comodules;
  std::vector<std::pair<std::string, ContramoduleData>> contramodules;
  std::vector<std::pair<std::string, EntwinedContramoduleData>> entwined_contramodules;
};
// H_X, F(H_X), A (x) H_X, H_X^K, H_X^{K^2}, T(H_X^K), H_X^A for every X.
TestObjects standard_test_objects(const StructureBundle& b);

// Natural maps built from sigma and lambda.
//   tau on comodules:      GF(N) -> N
//   kappa on comodules:    M -> FG(M)
//   tau on contramodules:  N -> ST(N)
//   kappa on contramodules: TS(M) -> M
MorphismData tau_comod(const StructureBundle& b, const SigmaElement& s, const ComoduleData& n);
MorphismData kappa_comod(const StructureBundle& b, const LambdaElement& l, const EntwinedComoduleData& m);
MorphismData tau_contra(const StructureBundle& b, const SigmaElement& s, const ContramoduleData& n);
MorphismData kappa_contra(const StructureBundle& b, const LambdaElement& l, const EntwinedContramoduleData& m);

// Throws MembershipViolation when sigma is not in V1 or lambda not in W1.
// Otherwise reports failures of the two pairing identities and of the
// four composite identities (plus naturality of tau and kappa) on the
// test objects.
Report verify_frobenius_pair(const StructureBundle& b, const SigmaElement& s, const LambdaElement& l);
Report verify_frobenius_pair(const StructureBundle& b, const SigmaElement& s, const LambdaElement& l,
                             const TestObjects& objects);
// Only the two pairing identities.
Report check_frobenius_identities(const StructureBundle& b, const SigmaElement& s, const LambdaElement& l);

// sum_i a_i (x) a_i^*, or the same built from the basis given by the
// columns of an invertible matrix.
ShapedMap coevaluation(const AlgebraData& a);
ShapedMap coevaluation(const AlgebraData& a, const Matrix& basis);

Report check_cointegral(const StructureBundle& b, const CointegralData& g);
// Exact linear decision; Yes carries gamma with the standard coevaluation.
Decision find_cointegral(const StructureBundle& b);

// Averaging of a morphism between the underlying (co)contramodules into
// an entwined one. Throws InvalidMorphism if f is not a morphism of the
// underlying category.
MorphismData average_morphism_contra(const StructureBundle& b, const CointegralData& g,
                                     const EntwinedContramoduleData& source, const EntwinedContramoduleData& target,
                                     const MorphismData& f);
MorphismData average_morphism_comod(const StructureBundle& b, const CointegralData& g,
                                    const EntwinedComoduleData& source, const EntwinedComoduleData& target,
                                    const MorphismData& f);

enum class SplitKind { Section, Retraction };

// f: source -> target is an entwined morphism. For a section, base is a
// morphism target -> source of the underlying category with f o base = id;
// for a retraction, base: target -> source with base o f = id. Returns the
// averaged splitting, which is entwined. Throws InvalidMorphism for a bad
// f or base, NotASection when base does not split f.
MorphismData maschke_split(const StructureBundle& b, const CointegralData& g, const AnyModule& source,
                           const AnyModule& target, const MorphismData& f, const MorphismData& base,
                           SplitKind kind);

}  // namespace entwine
