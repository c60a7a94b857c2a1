#pragma once

#include <cstdint>
#include <string_view>

#include "ssg/field.hpp"
#include "ssg/ring.hpp"
#include "ssg/system.hpp"

namespace ssg {

enum class BenchmarkFamily { cyclic, katsura };

// Throws ContractError for an unknown family name.
BenchmarkFamily benchmark_family_from_string(std::string_view name);

/// Standard benchmark systems.
///
/// cyclic-n, variables x1..xn: the elementary cyclic sums
///   e_d = sum_i prod_{j<d} x_{(i+j) mod n}, d = 1..n-1, and x1*...*xn - 1.
/// katsura-n, variables u0..un with u_{-i} = u_i and u_i = 0 for |i| > n:
///   sum_{i=-n..n} u_i*u_{m-i} - u_m for m = 0..n-1, and sum_{i=-n..n} u_i - 1.
///
/// Throws ContractError for n < 2.
SystemDescription gen_benchmark(BenchmarkFamily family, int n,
                                std::uint32_t modulus = PrimeField::kDefaultModulus,
                                OrderKind order = OrderKind::grevlex);

struct RandomSystemParams {
  std::size_t min_vars = 2;
  std::size_t max_vars = 3;
  std::size_t max_generators = 4;
  std::uint32_t max_degree = 3;
  std::size_t max_terms = 5;
  std::uint32_t modulus = PrimeField::kDefaultModulus;
  OrderKind order = OrderKind::grevlex;
};

// Small random dense-ish system, fully determined by `seed` and `params`.
SystemDescription random_system(std::uint64_t seed, const RandomSystemParams& params = {});

}  // namespace ssg
