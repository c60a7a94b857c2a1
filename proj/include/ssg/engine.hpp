#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ssg/labeled.hpp"
#include "ssg/polynomial.hpp"
#include "ssg/ring.hpp"

namespace ssg {

// How select_next orders B elements that share the minimal signature.
enum class SelectionTieBreak { smaller_head, larger_head };

struct EngineOptions {
  // Carry cofactors u through every operation and keep a copy of each
  // labeled polynomial inserted into R.
  bool track_cofactors = false;
  // Run check_invariants at every loop phase; failures throw InvariantViolation.
  bool check_invariants = false;
  // Main-loop iterations allowed per increment before the run is aborted.
  std::uint64_t iteration_limit = 1'000'000;
  SelectionTieBreak tie_break = SelectionTieBreak::smaller_head;
  // Driver only: process generators by ascending total degree (stable).
  bool sort_by_degree = false;
};

struct RunStats {
  std::uint64_t iterations = 0;
  std::uint64_t pairs_generated = 0;
  std::uint64_t pairs_pruned = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
  std::uint64_t basis_size_raw = 0;
  std::uint64_t basis_size_reduced = 0;
  double wall_time = 0.0;  // seconds
};

// Lazy element t*R[base] of B. Only its signature and head are materialized.
struct PendingMultiple {
  Monomial multiplier;
  std::size_t base = 0;
  Monomial signature;
  Monomial head;
  // Length of the R prefix already scanned by prune_pending for this element.
  std::size_t pruned_against = 0;
};

struct EngineState {
  Ring ring;
  EngineOptions options;
  Polynomial f;
  std::vector<Polynomial> previous;
  std::vector<LabeledPolynomial> R;
  std::vector<PendingMultiple> B;
  LabeledPolynomial current;
  RunStats stats;
  // Selected signatures that were smaller than the one selected before them.
  std::uint64_t signature_regressions = 0;
};

/// Seeds R with (HM(g_i), 0) for every g_i followed by (Zero, g_i), leaves B
/// empty and sets the current element to (1, f).
///
/// `previous` must be a Groebner basis. Throws ContractError if f is zero or
/// some g_i is a constant.
EngineState init_state(const Ring& ring, std::span<const Polynomial> previous, const Polynomial& f,
                       const EngineOptions& options = {});

/// Adds to B the multiples prescribed for the new element R[index]:
/// (LCM/HM(r))*r for every r <_H R[index] with nonzero head, and
/// (LCM/HM(p))*R[index] for every r >_H R[index]. Multiples already in B are
/// not added twice.
void generate_pairs(EngineState& state, std::size_t index);

/// Drops every b in B for which some r in R has r <_H b and SIG(r) | SIG(b).
void prune_pending(EngineState& state);

/// Removes and returns the element of B with the smallest signature; ties go
/// to the smaller head (or the larger one, per options.tie_break), then the
/// lower base index. Empty when B is.
std::optional<PendingMultiple> select_next(EngineState& state);

enum class CheckPhase {
  BeforeReduction,  // current = (sigma, p') as selected
  AfterReduction,   // current = (sigma, p), not yet inserted into R
  AfterPrune,
};

/// Verifies the loop invariants that hold at `phase`:
///   BeforeReduction: no r <_H current has SIG(r) | sigma.
///   AfterReduction (p != 0): no r >_H current has HM(r) | HM(p), and no r
///     has both HM(r) | HM(p) and SIG(r) | sigma.
///   AfterReduction (always): inserting current strictly enlarges the
///     monomial ideal of syzygy signatures (p = 0) or of (sigma, HM(p))
///     pairs (p != 0).
///   AfterPrune: every b in B has a signature-safe reductor in R.
/// Throws InvariantViolation naming the failed property.
void check_invariants(const EngineState& state, CheckPhase phase);

struct SignatureRunResult {
  // {poly(r) | r in R} in insertion order, zeros and seed copies included.
  std::vector<Polynomial> raw;
  // `raw` without zero polynomials.
  std::vector<Polynomial> basis;
  RunStats stats;
  std::uint64_t signature_regressions = 0;
  // Every labeled polynomial inserted into R, cofactors attached; only filled
  // when tracking cofactors.
  std::vector<LabeledPolynomial> inserted;
};

/// One incremental step: a Groebner basis of (previous, f) from a Groebner
/// basis `previous` and a new generator f.
SignatureRunResult simple_signature_groebner(const Ring& ring, std::span<const Polynomial> previous,
                                             const Polynomial& f, const EngineOptions& options = {});

struct Increment {
  std::vector<Polynomial> previous;
  Polynomial f;
  std::vector<LabeledPolynomial> inserted;
};

struct IncrementalResult {
  std::vector<Polynomial> basis;  // reduced Groebner basis
  std::vector<Polynomial> raw;    // raw set returned by the last increment
  RunStats stats;                 // summed over increments
  std::uint64_t signature_regressions = 0;
  std::vector<Increment> increments;  // filled only when tracking cofactors
};

/// Groebner basis of (F) built one generator at a time. Zero generators and
/// generators already in the current ideal are skipped; a unit ideal returns
/// {1} as soon as it appears.
IncrementalResult incremental_groebner(const Ring& ring, std::span<const Polynomial> generators,
                                       const EngineOptions& options = {});

}  // namespace ssg
