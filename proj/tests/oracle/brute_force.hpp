#pragma once

// Independent reference implementation for one-object bundles over a small
// prime field. Everything is plain integer arithmetic on coefficient
// arrays, evaluated element by element; nothing here goes through the
// library's matrix or tensor code.

#include <cstdint>
#include <functional>
#include <vector>

#include <entwine/structures.hpp>

namespace oracle {

struct Algebra {
  int dim = 0;
  std::vector<int> mul;   // mul[(k * dim + i) * dim + j]: coefficient of a_k in a_i a_j
  std::vector<int> unit;  // coefficient of a_k in 1
};

struct Coalgebra {
  int dim = 0;
  std::vector<int> delta;   // delta[(u * dim + v) * dim + f]: coefficient of e_u (x) e_v in delta(e_f)
  std::vector<int> counit;  // counit[f]
};

// psi(e_f (x) a_i) = sum psi[k, g; f, i] a_k (x) e_g
struct Bundle {
  int p = 2;
  Coalgebra c;
  Algebra a;
  std::vector<int> psi;

  int at(int k, int g, int f, int i) const {
    return psi[(k * c.dim + g) * (c.dim * a.dim) + f * a.dim + i];
  }
};

bool is_algebra(int p, const Algebra& a);
bool is_coalgebra(int p, const Coalgebra& c);
bool is_entwining(const Bundle& b);

// All structures of the given dimension over F_p, in increasing order of
// their coefficient vectors read as base-p numbers.
std::vector<Algebra> all_algebras(int p, int dim);
std::vector<Coalgebra> all_coalgebras(int p, int dim);
// Every valid bundle with these dimensions; the order is coalgebras, then
// algebras, then entwinings by coefficient vector.
std::vector<Bundle> all_bundles(int p, int c_dim, int a_dim);

// Existence of normalised elements, by trying every coefficient vector.
bool exists_sigma(const Bundle& b);
bool exists_lambda(const Bundle& b);
bool exists_cointegral(const Bundle& b);

// Candidate checks on flat coefficient vectors (same layout as the
// library: sigma is 1 x (c*a), lambda is a^2 x c, gamma is a x (a*c)).
bool sigma_ok(const Bundle& b, const std::vector<int>& sigma);
bool lambda_ok(const Bundle& b, const std::vector<int>& lambda);
bool gamma_ok(const Bundle& b, const std::vector<int>& gamma);

// Conversion to the library representation, object named "X".
entwine::StructureBundle to_library(const Bundle& b);

}  // namespace oracle
