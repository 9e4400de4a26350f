#pragma once

#include <random>
#include <vector>

#include <entwine/entwine.hpp>

namespace testing_support {

using namespace entwine;

inline FieldSpec Q() { return FieldSpec::rationals(); }
inline FieldSpec F(std::uint64_t p) { return FieldSpec::prime(p); }

inline Matrix M(const FieldSpec& f, std::size_t r, std::size_t c, std::initializer_list<long long> e) {
  return Matrix::from_ints(f, r, c, e);
}

inline Matrix col(const FieldSpec& f, std::initializer_list<long long> e) {
  return Matrix::from_ints(f, e.size(), 1, e);
}

inline Scalar frac(long long n, long long d) { return Scalar::from_fraction(Q(), n, d); }

// Small-entry random matrix; over Q entries lie in [-bound, bound].
inline Matrix random_matrix(std::mt19937& rng, const FieldSpec& f, std::size_t r, std::size_t c, int bound = 3,
                            double zero_bias = 0.3) {
  std::uniform_int_distribution<int> val(-bound, bound);
  std::bernoulli_distribution zero(zero_bias);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r * c; ++i) m.at_flat(i) = zero(rng) ? Scalar::zero(f) : Scalar::from_int(f, val(rng));
  return m;
}

inline ShapedMap random_map(std::mt19937& rng, const FieldSpec& f, const TensorShape& dom, const TensorShape& cod) {
  return ShapedMap(random_matrix(rng, f, cod.total(), dom.total()), dom, cod);
}

inline bool has_label(const Report& r, const std::string& needle) {
  for (const auto& v : r.violations)
    if (v.label.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace testing_support
