#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/engine.hpp"
#include "ssg/system.hpp"

namespace ssg {

enum class Algorithm { ssg, buchberger };

std::string_view to_string(Algorithm algorithm);
// Throws ContractError for anything other than "ssg" or "buchberger".
Algorithm algorithm_from_string(std::string_view name);

struct RunOptions {
  Algorithm algorithm = Algorithm::ssg;
  EngineOptions engine;
  bool certify = false;  // ssg only
  bool verify = false;
};

struct Verdicts {
  std::optional<bool> gb_check;
  std::optional<bool> ideal_equality;
  std::optional<bool> certify;

  bool all_passed() const {
    return gb_check.value_or(true) && ideal_equality.value_or(true) && certify.value_or(true);
  }
};

struct RunReport {
  Algorithm algorithm = Algorithm::ssg;
  std::vector<Polynomial> basis;  // reduced
  std::vector<Polynomial> raw;    // literal algorithm output
  RunStats stats;
  std::uint64_t signature_regressions = 0;
  std::uint64_t certified_count = 0;
  Verdicts verdicts;
};

/// Computes the reduced Groebner basis of desc.generators with the selected
/// algorithm, then runs the requested cross-checks.
RunReport run_system(const SystemDescription& desc, const RunOptions& options);

struct BasisCheck {
  bool groebner = false;     // every S-polynomial reduces to zero
  bool same_ideal = false;   // generators and basis generate the same ideal
};

// Checks `basis` against the ideal of `generators` using the Buchberger oracle.
BasisCheck check_basis(const Ring& ring, std::span<const Polynomial> generators,
                       std::span<const Polynomial> basis);

// Flat JSON object with one field per RunStats member.
std::string stats_to_json(const RunStats& stats);

}  // namespace ssg
