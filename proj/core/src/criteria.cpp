#include "entwine/criteria.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

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

using Sizes = std::vector<std::pair<std::size_t, std::size_t>>;

ShapedMap as_map(const Matrix& m) { return ShapedMap(m, TensorShape{m.cols()}, TensorShape{m.rows()}); }

Sizes sigma_sizes(const StructureBundle& b) {
  Sizes s;
  for (std::size_t x = 0; x < b.object_count(); ++x) s.emplace_back(1, b.c_dim(x, x) * b.a_dim());
  return s;
}

Sizes lambda_sizes(const StructureBundle& b) {
  Sizes s;
  for (std::size_t x = 0; x < b.object_count(); ++x) s.emplace_back(b.a_dim() * b.a_dim(), b.c_dim(x, x));
  return s;
}

Sizes gamma_sizes(const StructureBundle& b) {
  Sizes s;
  for (std::size_t x = 0; x < b.object_count(); ++x) s.emplace_back(b.a_dim(), b.a_dim() * b.c_dim(x, x));
  return s;
}

std::size_t total(const Sizes& s) {
  std::size_t n = 0;
  for (auto [r, c] : s) n += r * c;
  return n;
}

SigmaElement sigma_from(const StructureBundle& b, const std::vector<Scalar>& x) {
  SigmaElement s;
  auto parts = detail::unpack(b.field, x, sigma_sizes(b));
  for (std::size_t i = 0; i < parts.size(); ++i)
    s.sigma.emplace_back(std::move(parts[i]), TensorShape{b.c_dim(i, i), b.a_dim()}, TensorShape{1});
  return s;
}

LambdaElement lambda_from(const StructureBundle& b, const std::vector<Scalar>& x) {
  LambdaElement l;
  auto parts = detail::unpack(b.field, x, lambda_sizes(b));
  for (std::size_t i = 0; i < parts.size(); ++i)
    l.lambda.emplace_back(std::move(parts[i]), TensorShape{b.c_dim(i, i)}, TensorShape{b.a_dim(), b.a_dim()});
  return l;
}

CointegralData gamma_from(const StructureBundle& b, const std::vector<Scalar>& x) {
  CointegralData g;
  auto parts = detail::unpack(b.field, x, gamma_sizes(b));
  for (std::size_t i = 0; i < parts.size(); ++i)
    g.gamma.emplace_back(std::move(parts[i]), TensorShape{b.a_dim(), b.c_dim(i, i)}, TensorShape{b.a_dim()});
  g.coev = coevaluation(b.algebra);
  return g;
}

void require_count(const StructureBundle& b, std::size_t n, const std::string& what) {
  if (n != b.object_count())
    throw ShapeMismatch(what + " has " + std::to_string(n) + " components, expected " +
                        std::to_string(b.object_count()));
}

void require_sizes(const std::vector<ShapedMap>& maps, const Sizes& sizes, const std::string& what) {
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (maps[i].matrix.rows() != sizes[i].first || maps[i].matrix.cols() != sizes[i].second)
      throw ShapeMismatch(what + " component " + std::to_string(i) + " has the wrong size");
}

struct Labeled {
  std::string label;
  std::string where;
  ShapedMap lhs;
  ShapedMap rhs;
};

std::vector<Matrix> differences(const std::vector<Labeled>& parts) {
  std::vector<Matrix> out;
  for (const auto& p : parts) out.push_back(mat_sub(p.lhs.matrix, p.rhs.matrix));
  return out;
}

Report report_of(const std::vector<Labeled>& parts) {
  Report r;
  for (const auto& p : parts) expect_equal(r, p.lhs, p.rhs, p.label, p.where);
  return r;
}

std::vector<Labeled> v1_conditions(const StructureBundle& b, const SigmaElement& s) {
  const FieldSpec& k = b.field;
  const auto& c = b.coalgebra;
  const std::size_t d = b.a_dim();
  std::vector<Labeled> out;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) {
      auto lhs = comp(tens(s.sigma[y], id(k, c.hom_dim(x, y))), tens(id(k, c.hom_dim(y, y)), b.entwining.psi(x, y)),
                      tens(c.delta(x, y, y), id(k, d)));
      auto rhs = comp(tens(id(k, c.hom_dim(x, y)), s.sigma[x]), tens(c.delta(x, x, y), id(k, d)));
      out.push_back({"sigma condition: colinearity", tuple_label(c, {x, y}), lhs, rhs});
    }
  return out;
}

std::vector<Labeled> sigma_normalisation(const StructureBundle& b, const SigmaElement& s) {
  const FieldSpec& k = b.field;
  const auto& c = b.coalgebra;
  std::vector<Labeled> out;
  for (std::size_t x = 0; x < c.size(); ++x)
    out.push_back({"sigma condition: normalisation", tuple_label(c, {x}),
                   comp(s.sigma[x], tens(id(k, c.hom_dim(x, x)), b.algebra.unit)), c.counit(x)});
  return out;
}

std::vector<Labeled> w1_conditions(const StructureBundle& b, const LambdaElement& l) {
  const FieldSpec& k = b.field;
  const auto& c = b.coalgebra;
  const auto& a = b.algebra;
  const std::size_t d = a.dim;
  std::vector<Labeled> out;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) {
      const std::size_t cxy = c.hom_dim(x, y);
      auto lhs = comp(tens(l.lambda[y], id(k, cxy)), c.delta(x, y, y));
      auto rhs = comp(tens(id(k, d), b.entwining.psi(x, y)), tens(b.entwining.psi(x, y), id(k, d)),
                      tens(id(k, cxy), l.lambda[x]), c.delta(x, x, y));
      out.push_back({"lambda condition: colinearity", tuple_label(c, {x, y}), lhs, rhs});
    }
  for (std::size_t z = 0; z < c.size(); ++z) {
    auto lhs = comp(tens(id(k, d), a.mul), tens(l.lambda[z], id(k, d)));
    auto rhs = comp(tens(a.mul, id(k, d)), tens(id(k, d), l.lambda[z]), b.entwining.psi(z, z));
    out.push_back({"lambda condition: A-bilinearity", tuple_label(c, {z}), lhs, rhs});
  }
  return out;
}

std::vector<Labeled> lambda_normalisation(const StructureBundle& b, const LambdaElement& l) {
  const auto& c = b.coalgebra;
  std::vector<Labeled> out;
  for (std::size_t x = 0; x < c.size(); ++x)
    out.push_back({"lambda condition: normalisation", tuple_label(c, {x}), comp(b.algebra.mul, l.lambda[x]),
                   comp(b.algebra.unit, c.counit(x))});
  return out;
}

// Left sides of the two pairing identities; each should equal u o eps.
std::vector<Labeled> pairing_conditions(const StructureBundle& b, const SigmaElement& s, const LambdaElement& l) {
  const FieldSpec& k = b.field;
  const auto& c = b.coalgebra;
  const std::size_t d = b.a_dim();
  std::vector<Labeled> out;
  for (std::size_t x = 0; x < c.size(); ++x) {
    const std::size_t cxx = c.hom_dim(x, x);
    auto target = comp(b.algebra.unit, c.counit(x));
    auto first = comp(tens(s.sigma[x], id(k, d)), tens(id(k, cxx), l.lambda[x]), c.delta(x, x, x));
    auto second = comp(tens(id(k, d), s.sigma[x]), tens(b.entwining.psi(x, x), id(k, d)),
                       tens(id(k, cxx), l.lambda[x]), c.delta(x, x, x));
    out.push_back({"Frobenius pairing: sigma on the left factor", tuple_label(c, {x}), first, target});
    out.push_back({"Frobenius pairing: sigma through the entwining", tuple_label(c, {x}), second, target});
  }
  return out;
}

std::vector<Labeled> cointegral_conditions(const StructureBundle& b, const CointegralData& g) {
  const FieldSpec& k = b.field;
  const auto& c = b.coalgebra;
  const auto& a = b.algebra;
  const std::size_t d = a.dim;
  const ShapedMap& coev = g.coev;
  std::vector<Labeled> out;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) {
      const std::size_t cxy = c.hom_dim(x, y);
      auto lhs = comp(tens(id(k, d), b.entwining.psi(x, y)), tens(b.entwining.psi(x, y), g.gamma[x]),
                      tens(id(k, cxy), coev, id(k, c.hom_dim(x, x))), c.delta(x, x, y));
      auto rhs = comp(tens(id(k, d), g.gamma[y], id(k, cxy)), tens(coev, c.delta(x, y, y)));
      out.push_back({"cointegral condition: colinearity", tuple_label(c, {x, y}), lhs, rhs});
    }
  for (std::size_t x = 0; x < c.size(); ++x) {
    const std::size_t cxx = c.hom_dim(x, x);
    auto lhs = comp(tens(id(k, d), a.mul), tens(id(k, d), g.gamma[x], id(k, d)), tens(coev, id(k, cxx), id(k, d)));
    auto rhs = comp(tens(a.mul, g.gamma[x]), tens(id(k, d), coev, id(k, cxx)), b.entwining.psi(x, x));
    out.push_back({"cointegral condition: A-bilinearity", tuple_label(c, {x}), lhs, rhs});
    out.push_back({"cointegral condition: normalisation", tuple_label(c, {x}),
                   comp(a.mul, tens(id(k, d), g.gamma[x]), tens(coev, id(k, cxx))), comp(a.unit, c.counit(x))});
  }
  return out;
}

void validate_sigma(const StructureBundle& b, const SigmaElement& s) {
  require_count(b, s.sigma.size(), "sigma");
  require_sizes(s.sigma, sigma_sizes(b), "sigma");
}

void validate_lambda(const StructureBundle& b, const LambdaElement& l) {
  require_count(b, l.lambda.size(), "lambda");
  require_sizes(l.lambda, lambda_sizes(b), "lambda");
}

void validate_gamma(const StructureBundle& b, const CointegralData& g) {
  require_count(b, g.gamma.size(), "gamma");
  require_sizes(g.gamma, gamma_sizes(b), "gamma");
  const std::size_t d = b.a_dim();
  if (g.coev.matrix.rows() != d * d || g.coev.matrix.cols() != 1)
    throw ShapeMismatch("coevaluation has the wrong size");
}

std::vector<Scalar> zeros(const FieldSpec& f, std::size_t n) { return std::vector<Scalar>(n, Scalar::zero(f)); }

unsigned worker_count(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ENTWINE_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap > 0) n = std::min<unsigned long>(n, cap);
  }
  return std::max(1u, n);
}

// Smallest index in [0, count) satisfying pred, searched by `threads`
// workers over ascending chunks. Every chunk below the reported index is
// fully examined, so the answer does not depend on the worker count.
template <typename Pred>
std::optional<std::uint64_t> first_match(std::uint64_t count, unsigned threads, const Pred& pred) {
  constexpr std::uint64_t kChunk = 64;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (;;) {
        const std::uint64_t start = next.fetch_add(kChunk);
        if (start >= count || start > best.load()) return;
        const std::uint64_t stop = std::min(count, start + kChunk);
        for (std::uint64_t i = start; i < stop && i < best.load(); ++i)
          if (pred(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };
  if (threads <= 1 || count <= kChunk) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  const std::uint64_t b = best.load();
  if (b == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return b;
}

// base^exp, saturating at limit + 1.
std::uint64_t bounded_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && v > (limit + 1) / base + 1) return limit + 1;
    v *= base;
    if (v > limit) return limit + 1;
  }
  return v;
}

// Coefficients of candidate `index`: base-p digits over F_p, and the
// sequence 0, 1, -1, 2, -2, ... over Q.
std::vector<Scalar> candidate_coefficients(const FieldSpec& f, std::uint64_t index, std::size_t k, std::uint64_t base) {
  std::vector<Scalar> t;
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint64_t digit = index % base;
    index /= base;
    if (f.is_prime_field()) {
      t.push_back(Scalar::from_int(f, static_cast<long long>(digit)));
    } else {
      const long long v = digit % 2 ? static_cast<long long>((digit + 1) / 2) : -static_cast<long long>(digit / 2);
      t.push_back(Scalar::from_int(f, v));
    }
  }
  return t;
}

MorphismData require_entwined(const StructureBundle& b, const AnyModule& s, const AnyModule& t, const MorphismData& f,
                              const std::string& what) {
  Report r;
  try {
    r = check_morphism(b, s, t, f);
  } catch (const ShapeMismatch& e) {
    throw InvalidMorphism(what + ": " + e.what());
  }
  if (!r.ok()) throw InvalidMorphism(what + ": " + r.violations.front().label + " " + r.violations.front().where);
  return f;
}

}  // namespace

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Yes: return "yes";
    case Outcome::No: return "no";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

Report check_v1(const StructureBundle& b, const SigmaElement& s) {
  validate_sigma(b, s);
  return report_of(v1_conditions(b, s));
}

Report check_w1(const StructureBundle& b, const LambdaElement& l) {
  validate_lambda(b, l);
  return report_of(w1_conditions(b, l));
}

Report check_sigma_normalised(const StructureBundle& b, const SigmaElement& s) {
  validate_sigma(b, s);
  return report_of(sigma_normalisation(b, s));
}

Report check_lambda_normalised(const StructureBundle& b, const LambdaElement& l) {
  validate_lambda(b, l);
  return report_of(lambda_normalisation(b, l));
}

std::vector<SigmaElement> v1_basis(const StructureBundle& b) {
  auto sys = detail::assemble_affine(b.field, total(sigma_sizes(b)), [&](const std::vector<Scalar>& x) {
    return differences(v1_conditions(b, sigma_from(b, x)));
  });
  std::vector<SigmaElement> out;
  for (const auto& v : nullspace(sys.coefficients)) out.push_back(sigma_from(b, v.entries()));
  return out;
}

std::vector<LambdaElement> w1_basis(const StructureBundle& b) {
  auto sys = detail::assemble_affine(b.field, total(lambda_sizes(b)), [&](const std::vector<Scalar>& x) {
    return differences(w1_conditions(b, lambda_from(b, x)));
  });
  std::vector<LambdaElement> out;
  for (const auto& v : nullspace(sys.coefficients)) out.push_back(lambda_from(b, v.entries()));
  return out;
}

Decision decide_sep_F(const StructureBundle& b) {
  auto sys = detail::assemble_affine(b.field, total(sigma_sizes(b)), [&](const std::vector<Scalar>& x) {
    auto s = sigma_from(b, x);
    auto parts = v1_conditions(b, s);
    auto norm = sigma_normalisation(b, s);
    parts.insert(parts.end(), norm.begin(), norm.end());
    return differences(parts);
  });
  const AffineSolution sol = solve_affine(sys.coefficients, sys.rhs);
  Decision d;
  if (!sol.feasible) {
    d.outcome = Outcome::No;
    d.witness = RankWitness{sol.rank, sol.augmented_rank};
    return d;
  }
  SigmaElement s = sigma_from(b, sol.particular->entries());
  if (!check_v1(b, s).ok() || !check_sigma_normalised(b, s).ok())
    throw std::logic_error("sigma certificate failed re-verification");
  d.outcome = Outcome::Yes;
  d.sigma = std::move(s);
  return d;
}

Decision decide_sep_G(const StructureBundle& b) {
  auto sys = detail::assemble_affine(b.field, total(lambda_sizes(b)), [&](const std::vector<Scalar>& x) {
    auto l = lambda_from(b, x);
    auto parts = w1_conditions(b, l);
    auto norm = lambda_normalisation(b, l);
    parts.insert(parts.end(), norm.begin(), norm.end());
    return differences(parts);
  });
  const AffineSolution sol = solve_affine(sys.coefficients, sys.rhs);
  Decision d;
  if (!sol.feasible) {
    d.outcome = Outcome::No;
    d.witness = RankWitness{sol.rank, sol.augmented_rank};
    return d;
  }
  LambdaElement l = lambda_from(b, sol.particular->entries());
  if (!check_w1(b, l).ok() || !check_lambda_normalised(b, l).ok())
    throw std::logic_error("lambda certificate failed re-verification");
  d.outcome = Outcome::Yes;
  d.lambda = std::move(l);
  return d;
}

Report check_frobenius_identities(const StructureBundle& b, const SigmaElement& s, const LambdaElement& l) {
  validate_sigma(b, s);
  validate_lambda(b, l);
  return report_of(pairing_conditions(b, s, l));
}

Decision decide_frobenius(const StructureBundle& b, const FrobeniusOptions& opts) {
  const FieldSpec& k = b.field;
  const std::size_t ns = total(sigma_sizes(b));
  const auto basis = w1_basis(b);
  const std::size_t dim = basis.size();

  // sigma-system: V1 rows (homogeneous) stacked over pairing rows, which are
  // linear in sigma for a fixed lambda and linear in lambda for fixed sigma.
  const Matrix v1_rows = detail::assemble_affine(k, ns, [&](const std::vector<Scalar>& x) {
                           return differences(v1_conditions(b, sigma_from(b, x)));
                         }).coefficients;
  auto pairing_rows = [&](const LambdaElement& l) {
    return detail::assemble_affine(k, ns, [&](const std::vector<Scalar>& x) {
      std::vector<Matrix> out;
      for (const auto& p : pairing_conditions(b, sigma_from(b, x), l)) out.push_back(p.lhs.matrix);
      return out;
    });
  };
  Matrix target_rhs;
  {
    std::vector<Matrix> parts;
    for (const auto& p : pairing_conditions(b, sigma_from(b, zeros(k, ns)), lambda_from(b, zeros(k, total(lambda_sizes(b))))))
      parts.push_back(p.rhs.matrix);
    target_rhs = detail::flatten_all(k, parts);
  }
  const Matrix rhs = vconcat(Matrix(k, v1_rows.rows(), 1), target_rhs);
  auto solve_for = [&](const Matrix& pairing) -> std::optional<SigmaElement> {
    auto sol = solve_affine(vconcat(v1_rows, pairing), rhs);
    if (!sol.feasible) return std::nullopt;
    return sigma_from(b, sol.particular->entries());
  };

  Decision d;
  EnumerationStats stats;
  stats.w1_dim = dim;
  auto accept = [&](SigmaElement s, LambdaElement l) {
    if (!check_v1(b, s).ok() || !check_w1(b, l).ok() || !check_frobenius_identities(b, s, l).ok())
      throw std::logic_error("Frobenius certificate failed re-verification");
    d.outcome = Outcome::Yes;
    d.sigma = std::move(s);
    d.lambda = std::move(l);
    d.enumeration = stats;
  };

  std::vector<LambdaElement> seeds;
  if (auto g = decide_sep_G(b); g.outcome == Outcome::Yes) seeds.push_back(*g.lambda);
  seeds.insert(seeds.end(), basis.begin(), basis.end());
  stats.strategy = "basis";
  stats.search_space = seeds.size();
  for (const auto& l : seeds) {
    ++stats.examined;
    if (auto s = solve_for(pairing_rows(l).coefficients)) {
      accept(std::move(*s), l);
      return d;
    }
  }

  std::vector<Matrix> rows_per_basis;
  for (const auto& l : basis) rows_per_basis.push_back(pairing_rows(l).coefficients);
  const std::uint64_t base = k.is_prime_field() ? k.characteristic() : 2 * static_cast<std::uint64_t>(std::max(0, opts.height)) + 1;
  const std::uint64_t space = bounded_power(base, dim, opts.budget);
  const bool finite_family = k.is_prime_field() || dim == 0;
  stats.exhaustive = finite_family && space <= opts.budget;
  stats.strategy = stats.exhaustive ? "exhaustive" : "height-bounded";
  stats.search_space = space;
  const std::uint64_t count = std::min(space, opts.budget);

  auto combine = [&](const std::vector<Scalar>& t) {
    Matrix pairing(k, target_rhs.rows(), ns);
    for (std::size_t j = 0; j < dim; ++j)
      if (!t[j].is_zero()) pairing = mat_add(pairing, rows_per_basis[j].scaled(t[j]));
    return pairing;
  };
  auto found = first_match(count, worker_count(opts.threads), [&](std::uint64_t i) {
    return solve_for(combine(candidate_coefficients(k, i, dim, base))).has_value();
  });
  if (found) {
    stats.examined = *found + 1;
    const auto t = candidate_coefficients(k, *found, dim, base);
    LambdaElement l = lambda_from(b, zeros(k, total(lambda_sizes(b))));
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t x = 0; x < l.lambda.size(); ++x)
        l.lambda[x].matrix = mat_add(l.lambda[x].matrix, basis[j].lambda[x].matrix.scaled(t[j]));
    accept(*solve_for(combine(t)), std::move(l));
    return d;
  }
  stats.examined = count;
  d.outcome = stats.exhaustive ? Outcome::No : Outcome::Unknown;
  d.enumeration = stats;
  return d;
}

TestObjects standard_test_objects(const StructureBundle& b) {
  TestObjects t;
  const auto& names = b.coalgebra.objects;
  for (std::size_t x = 0; x < b.object_count(); ++x) {
    const std::string& n = names[x];
    auto hx = regular_comodule(b, x);
    t.comodules.push_back({"H_" + n, hx});
    t.entwined_comodules.push_back({"F(H_" + n + ")", functor_F(b, hx)});
    t.entwined_comodules.push_back({"A(x)H_" + n, regular_comodule(b, x, right_regular_module(b.algebra))});
    auto hk = contramodule_HXU(b, x, 1);
    t.contramodules.push_back({"H_" + n + "^K", hk});
    t.contramodules.push_back({"H_" + n + "^K2", contramodule_HXU(b, x, 2)});
    t.entwined_contramodules.push_back({"T(H_" + n + "^K)", functor_T(b, hk)});
    t.entwined_contramodules.push_back({"H_" + n + "^A", contramodule_HXP(b, x, left_regular_module(b.algebra))});
  }
  return t;
}

MorphismData tau_comod(const StructureBundle& b, const SigmaElement& s, const ComoduleData& n) {
  validate_sigma(b, s);
  const FieldSpec& k = b.field;
  MorphismData out;
  for (std::size_t x = 0; x < n.size(); ++x)
    out.components.push_back(
        comp(tens(id(k, n.carrier[x]), s.sigma[x]), tens(n.rho(x, x), id(k, b.a_dim()))).matrix);
  return out;
}

MorphismData kappa_comod(const StructureBundle& b, const LambdaElement& l, const EntwinedComoduleData& m) {
  validate_lambda(b, l);
  const FieldSpec& k = b.field;
  MorphismData out;
  for (std::size_t x = 0; x < m.size(); ++x)
    out.components.push_back(comp(tens(m.action[x], id(k, b.a_dim())), tens(id(k, m.carrier()[x]), l.lambda[x]),
                                  m.comodule.rho(x, x))
                                 .matrix);
  return out;
}

MorphismData tau_contra(const StructureBundle& b, const SigmaElement& s, const ContramoduleData& n) {
  validate_sigma(b, s);
  const FieldSpec& k = b.field;
  const std::size_t d = b.a_dim();
  MorphismData out;
  for (std::size_t x = 0; x < n.size(); ++x) {
    const std::size_t cxx = b.c_dim(x, x), nx = n.carrier[x];
    out.components.push_back(comp(tens(id(k, d), n.pi(x, x)), tens(sw(k, cxx, d), id(k, nx)),
                                  tens(dual_map(s.sigma[x]), id(k, nx)))
                                 .matrix);
  }
  return out;
}

MorphismData kappa_contra(const StructureBundle& b, const LambdaElement& l, const EntwinedContramoduleData& m) {
  validate_lambda(b, l);
  const FieldSpec& k = b.field;
  const std::size_t d = b.a_dim();
  MorphismData out;
  for (std::size_t x = 0; x < m.size(); ++x) {
    const std::size_t mx = m.carrier()[x];
    out.components.push_back(comp(m.contramodule.pi(x, x), tens(dual_map(l.lambda[x]), id(k, mx)),
                                  tens(sw(k, d, d), id(k, mx)), tens(id(k, d), m.action[x]))
                                 .matrix);
  }
  return out;
}

Report verify_frobenius_pair(const StructureBundle& b, const SigmaElement& s, const LambdaElement& l) {
  return verify_frobenius_pair(b, s, l, standard_test_objects(b));
}

Report verify_frobenius_pair(const StructureBundle& b, const SigmaElement& s, const LambdaElement& l,
                             const TestObjects& objects) {
  if (Report r = check_v1(b, s); !r.ok())
    throw MembershipViolation("sigma is not in V1: " + r.violations.front().label + " " + r.violations.front().where);
  if (Report r = check_w1(b, l); !r.ok())
    throw MembershipViolation("lambda is not in W1: " + r.violations.front().label + " " + r.violations.front().where);
  Report r = check_frobenius_identities(b, s, l);
  const FieldSpec& k = b.field;
  auto expect_identity = [&](const MorphismData& m, const std::vector<std::size_t>& carrier, const std::string& label,
                             const std::string& where) {
    const MorphismData want = identity_morphism(k, carrier);
    if (!(m == want)) r.violations.push_back({label, where, "composite is not the identity"});
  };
  auto expect_morphism = [&](const AnyModule& src, const AnyModule& dst, const MorphismData& m, const std::string& label,
                             const std::string& where) {
    if (!check_morphism(b, src, dst, m).ok()) r.violations.push_back({label, where, "not a morphism"});
  };
  for (const auto& [name, n] : objects.comodules) {
    auto fn = functor_F(b, n);
    auto tau = tau_comod(b, s, n);
    expect_morphism(functor_G(fn), n, tau, "natural map: tau on comodules", name);
    expect_identity(compose_morphisms(functor_F(b, tau), kappa_comod(b, l, fn)), fn.carrier(),
                    "composite identity: F(tau) after kappa_F", name);
  }
  for (const auto& [name, m] : objects.entwined_comodules) {
    auto kap = kappa_comod(b, l, m);
    expect_morphism(m, functor_F(b, functor_G(m)), kap, "natural map: kappa on comodules", name);
    expect_identity(compose_morphisms(tau_comod(b, s, functor_G(m)), kap), m.carrier(),
                    "composite identity: tau_G after G(kappa)", name);
  }
  for (const auto& [name, m] : objects.entwined_contramodules) {
    auto sm = functor_S(m);
    auto tau = tau_contra(b, s, sm);
    auto kap = kappa_contra(b, l, m);
    expect_morphism(sm, functor_S(functor_T(b, sm)), tau, "natural map: tau on contramodules", name);
    expect_identity(compose_morphisms(kap, tau), sm.carrier, "composite identity: S(kappa) after tau_S", name);
    expect_morphism(functor_T(b, functor_S(m)), m, kap, "natural map: kappa on contramodules", name);
  }
  for (const auto& [name, n] : objects.contramodules) {
    auto tn = functor_T(b, n);
    auto tau = tau_contra(b, s, n);
    expect_morphism(n, functor_S(functor_T(b, n)), tau, "natural map: tau on contramodules", name);
    expect_identity(compose_morphisms(kappa_contra(b, l, tn), functor_T(b, tau)), tn.carrier(),
                    "composite identity: kappa_T after T(tau)", name);
  }
  return r;
}

ShapedMap coevaluation(const AlgebraData& a) { return coevaluation(a, Matrix::identity(a.field, a.dim)); }

ShapedMap coevaluation(const AlgebraData& a, const Matrix& basis) {
  const std::size_t d = a.dim;
  const Matrix inv = inverse(basis);
  Matrix m(a.field, d * d, 1);
  // sum_i p_i (x) p_i^*, where p_i^* is row i of the inverse.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) m(j * d + l, 0) += basis(j, i) * inv(i, l);
  return ShapedMap(std::move(m), TensorShape{1}, TensorShape{d, d});
}

Report check_cointegral(const StructureBundle& b, const CointegralData& g) {
  validate_gamma(b, g);
  return report_of(cointegral_conditions(b, g));
}

Decision find_cointegral(const StructureBundle& b) {
  auto sys = detail::assemble_affine(b.field, total(gamma_sizes(b)), [&](const std::vector<Scalar>& x) {
    return differences(cointegral_conditions(b, gamma_from(b, x)));
  });
  const AffineSolution sol = solve_affine(sys.coefficients, sys.rhs);
  Decision d;
  if (!sol.feasible) {
    d.outcome = Outcome::No;
    d.witness = RankWitness{sol.rank, sol.augmented_rank};
    return d;
  }
  CointegralData g = gamma_from(b, sol.particular->entries());
  if (!check_cointegral(b, g).ok()) throw std::logic_error("cointegral failed re-verification");
  d.outcome = Outcome::Yes;
  d.cointegral = std::move(g);
  return d;
}

MorphismData average_morphism_contra(const StructureBundle& b, const CointegralData& g,
                                     const EntwinedContramoduleData& source, const EntwinedContramoduleData& target,
                                     const MorphismData& f) {
  validate_gamma(b, g);
  require_entwined(b, functor_S(source), functor_S(target), f, "morphism to average");
  const FieldSpec& k = b.field;
  const std::size_t d = b.a_dim();
  MorphismData out;
  for (std::size_t y = 0; y < source.size(); ++y) {
    const std::size_t c = b.c_dim(y, y);
    const std::size_t mt = target.carrier()[y];
    auto m = comp(target.contramodule.pi(y, y), tens(id(k, c), dual_map(g.coev), id(k, mt)),
                  tens(id(k, c), sw(k, d, d), id(k, mt)), tens(sw(k, d, c), id(k, d * mt)),
                  tens(dual_map(g.gamma[y]), id(k, d * mt)), tens(id(k, d), target.action[y]),
                  tens(id(k, d), as_map(f.components[y])), source.action[y]);
    out.components.push_back(m.matrix);
  }
  return out;
}

MorphismData average_morphism_comod(const StructureBundle& b, const CointegralData& g,
                                    const EntwinedComoduleData& source, const EntwinedComoduleData& target,
                                    const MorphismData& f) {
  validate_gamma(b, g);
  require_entwined(b, functor_G(source), functor_G(target), f, "morphism to average");
  const FieldSpec& k = b.field;
  const std::size_t d = b.a_dim();
  MorphismData out;
  for (std::size_t y = 0; y < source.size(); ++y) {
    const std::size_t c = b.c_dim(y, y);
    const std::size_t ms = source.carrier()[y];
    auto m = comp(target.action[y], tens(as_map(f.components[y]), id(k, d)), tens(source.action[y], id(k, d)),
                  tens(id(k, ms), id(k, d), g.gamma[y]), tens(id(k, ms), g.coev, id(k, c)),
                  source.comodule.rho(y, y));
    out.components.push_back(m.matrix);
  }
  return out;
}

MorphismData maschke_split(const StructureBundle& b, const CointegralData& g, const AnyModule& source,
                           const AnyModule& target, const MorphismData& f, const MorphismData& base, SplitKind kind) {
  const Category cat = category_of(source);
  if (cat != category_of(target) || (cat != Category::EntwinedComod && cat != Category::EntwinedContra))
    throw InvalidMorphism("splitting needs two entwined modules of the same kind");
  require_entwined(b, source, target, f, "morphism to split");
  const bool comod = cat == Category::EntwinedComod;
  auto underlying = [&](const AnyModule& m) -> AnyModule {
    if (comod) return functor_G(std::get<EntwinedComoduleData>(m));
    return functor_S(std::get<EntwinedContramoduleData>(m));
  };
  require_entwined(b, underlying(target), underlying(source), base, "base splitting");
  const FieldSpec& k = b.field;
  const bool section = kind == SplitKind::Section;
  const auto& split_carrier = section ? carrier_of(target) : carrier_of(source);
  auto composite = [&](const MorphismData& s) { return section ? compose_morphisms(f, s) : compose_morphisms(s, f); };
  if (!(composite(base) == identity_morphism(k, split_carrier)))
    throw NotASection(section ? "f o s is not the identity" : "r o f is not the identity");
  MorphismData averaged =
      comod ? average_morphism_comod(b, g, std::get<EntwinedComoduleData>(target), std::get<EntwinedComoduleData>(source), base)
            : average_morphism_contra(b, g, std::get<EntwinedContramoduleData>(target),
                                      std::get<EntwinedContramoduleData>(source), base);
  if (!check_morphism(b, target, source, averaged).ok() || !(composite(averaged) == identity_morphism(k, split_carrier)))
    throw ValidationError("averaged splitting failed verification; check the cointegral");
  return averaged;
}

}  // namespace entwine
