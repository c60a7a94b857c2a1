#include "ssg/benchmarks.hpp"

#include <cstdlib>
#include <random>
#include <string>

#include "ssg/errors.hpp"

namespace ssg {

BenchmarkFamily benchmark_family_from_string(std::string_view name) {
  if (name == "cyclic") return BenchmarkFamily::cyclic;
  if (name == "katsura") return BenchmarkFamily::katsura;
  throw ContractError("unknown benchmark family '" + std::string(name) + "'");
}

namespace {

SystemDescription cyclic(int n, const Ring& ring) {
  const PrimeField& field = ring.field();
  const auto nv = static_cast<std::size_t>(n);
  SystemDescription desc{ring, {}, {}};
  for (int i = 1; i <= n; ++i) desc.variables.push_back("x" + std::to_string(i));
  for (std::size_t d = 1; d < nv; ++d) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < nv; ++i) {
      std::vector<Exponent> e(nv, 0);
      for (std::size_t j = 0; j < d; ++j) ++e[(i + j) % nv];
      terms.push_back({field.one(), Monomial(std::move(e))});
    }
    desc.generators.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  desc.generators.push_back(Polynomial::from_terms(
      ring, {{field.one(), Monomial(std::vector<Exponent>(nv, 1))},
             {field.from_int(-1), ring.one()}}));
  return desc;
}

SystemDescription katsura(int n, const Ring& ring) {
  const PrimeField& field = ring.field();
  SystemDescription desc{ring, {}, {}};
  for (int i = 0; i <= n; ++i) desc.variables.push_back("u" + std::to_string(i));
  // index of u_i, or -1 when u_i is identically zero
  auto var = [n](int i) { return std::abs(i) > n ? -1 : std::abs(i); };
  for (int m = 0; m < n; ++m) {
    std::vector<Term> terms;
    for (int i = -n; i <= n; ++i) {
      int a = var(i);
      int b = var(m - i);
      if (a < 0 || b < 0) continue;
      Monomial mono = ring.variable(static_cast<std::size_t>(a)) * ring.variable(static_cast<std::size_t>(b));
      terms.push_back({field.one(), std::move(mono)});
    }
    terms.push_back({field.from_int(-1), ring.variable(static_cast<std::size_t>(m))});
    desc.generators.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  std::vector<Term> linear;
  for (int i = -n; i <= n; ++i) linear.push_back({field.one(), ring.variable(static_cast<std::size_t>(var(i)))});
  linear.push_back({field.from_int(-1), ring.one()});
  desc.generators.push_back(Polynomial::from_terms(ring, std::move(linear)));
  return desc;
}

}  // namespace

SystemDescription gen_benchmark(BenchmarkFamily family, int n, std::uint32_t modulus, OrderKind order) {
  if (n < 2) throw ContractError("benchmark size must be at least 2");
  const PrimeField field(modulus);
  if (family == BenchmarkFamily::cyclic)
    return cyclic(n, Ring(field, static_cast<std::size_t>(n), MonomialOrder(order)));
  return katsura(n, Ring(field, static_cast<std::size_t>(n) + 1, MonomialOrder(order)));
}

SystemDescription random_system(std::uint64_t seed, const RandomSystemParams& params) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  const std::size_t nvars = uniform(params.min_vars, params.max_vars);
  const Ring ring(PrimeField(params.modulus), nvars, MonomialOrder(params.order));
  SystemDescription desc{ring, {}, {}};
  static constexpr const char* kNames[] = {"x", "y", "z", "w"};
  for (std::size_t i = 0; i < nvars; ++i)
    desc.variables.push_back(i < 4 ? kNames[i] : "v" + std::to_string(i));

  const std::size_t ngens = uniform(1, params.max_generators);
  for (std::size_t g = 0; g < ngens; ++g) {
    std::vector<Term> terms;
    const std::size_t nterms = uniform(1, params.max_terms);
    for (std::size_t t = 0; t < nterms; ++t) {
      std::vector<Exponent> e(nvars, 0);
      const auto degree = uniform(0, params.max_degree);
      for (std::uint64_t d = 0; d < degree; ++d) ++e[uniform(0, nvars - 1)];
      terms.push_back({FieldElement(static_cast<std::uint32_t>(uniform(1, params.modulus - 1))),
                       Monomial(std::move(e))});
    }
    desc.generators.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return desc;
}

}  // namespace ssg
