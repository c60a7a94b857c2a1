#include "ssg/engine.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

bool same_multiple(const PendingMultiple& a, std::size_t base, const Monomial& multiplier) {
  return a.base == base && a.multiplier == multiplier;
}

void push_pending(EngineState& state, Monomial multiplier, std::size_t base) {
  for (const PendingMultiple& b : state.B)
    if (same_multiple(b, base, multiplier)) return;
  const LabeledPolynomial& r = state.R[base];
  Monomial sig = r.signature.monomial() * multiplier;
  Monomial head = r.poly.head_monomial() * multiplier;
  state.B.push_back({std::move(multiplier), base, std::move(sig), std::move(head), 0});
  ++state.stats.pairs_generated;
}

void accumulate(RunStats& total, const RunStats& part) {
  total.iterations += part.iterations;
  total.pairs_generated += part.pairs_generated;
  total.pairs_pruned += part.pairs_pruned;
  total.zero_reductions += part.zero_reductions;
  total.reduction_steps += part.reduction_steps;
}

}  // namespace

EngineState init_state(const Ring& ring, std::span<const Polynomial> previous, const Polynomial& f,
                       const EngineOptions& options) {
  if (f.is_zero()) throw ContractError("init_state: f must be nonzero");
  for (const Polynomial& g : previous)
    if (g.is_zero() || g.is_constant())
      throw ContractError("init_state: previous basis contains a zero or constant polynomial");

  const bool track = options.track_cofactors;
  EngineState state{ring, options, f, {previous.begin(), previous.end()}, {}, {}, {}, {}, 0};
  state.R.reserve(2 * previous.size());
  for (const Polynomial& g : previous) {
    LabeledPolynomial seed{g.head(), Polynomial{}, std::nullopt};
    if (track) seed.cofactor = g;
    state.R.push_back(std::move(seed));
  }
  for (const Polynomial& g : previous) {
    LabeledPolynomial seed{Monomial0::zero(), g, std::nullopt};
    if (track) seed.cofactor = Polynomial{};
    state.R.push_back(std::move(seed));
  }
  state.current = LabeledPolynomial{ring.one(), f, std::nullopt};
  if (track) state.current.cofactor = Polynomial::constant(ring, ring.field().one());
  return state;
}

void generate_pairs(EngineState& state, std::size_t index) {
  const Ring& ring = state.ring;
  if (state.R[index].poly.is_zero()) throw ContractError("generate_pairs: zero polynomial");
  // R grows inside the loops only through B, never through R itself.
  const std::size_t count = state.R.size();
  for (std::size_t i = 0; i < count; ++i) {
    const LabeledPolynomial& r = state.R[i];
    const LabeledPolynomial& h = state.R[index];
    if (r.poly.is_zero()) continue;
    switch (h_compare(ring, r, h)) {
      case HOrdering::FirstBelow: {
        Monomial t = quotient(lcm(r.poly.head_monomial(), h.poly.head_monomial()),
                              r.poly.head_monomial());
        push_pending(state, std::move(t), i);
        break;
      }
      case HOrdering::FirstAbove: {
        Monomial t = quotient(lcm(r.poly.head_monomial(), h.poly.head_monomial()),
                              h.poly.head_monomial());
        if (state.options.check_invariants && t.is_one())
          throw InvariantViolation("r-gvw-big",
                                   "multiplier 1 in the second pair loop");
        push_pending(state, std::move(t), index);
        break;
      }
      case HOrdering::Tied:
      case HOrdering::Incomparable:
        break;
    }
  }
}

void prune_pending(EngineState& state) {
  const Ring& ring = state.ring;
  const std::size_t count = state.R.size();
  auto pruned = [&](PendingMultiple& b) {
    const Monomial0 sig(b.signature);
    const Monomial0 head(b.head);
    for (std::size_t i = b.pruned_against; i < count; ++i) {
      const LabeledPolynomial& r = state.R[i];
      if (r.signature.is_zero() || !divides(r.signature.monomial(), b.signature)) continue;
      if (h_compare(ring, r.signature, r.head(), sig, head) == HOrdering::FirstBelow) return true;
    }
    b.pruned_against = count;
    return false;
  };
  const auto before = state.B.size();
  std::erase_if(state.B, pruned);
  state.stats.pairs_pruned += before - state.B.size();
}

std::optional<PendingMultiple> select_next(EngineState& state) {
  if (state.B.empty()) return std::nullopt;
  const MonomialOrder& order = state.ring.order();
  const bool smaller_head = state.options.tie_break == SelectionTieBreak::smaller_head;
  auto before = [&](const PendingMultiple& a, const PendingMultiple& b) {
    if (auto c = order.compare(a.signature, b.signature); c != 0) return c < 0;
    if (auto c = order.compare(a.head, b.head); c != 0) return smaller_head ? c < 0 : c > 0;
    return a.base < b.base;
  };
  auto it = std::min_element(state.B.begin(), state.B.end(), before);
  PendingMultiple out = std::move(*it);
  state.B.erase(it);
  return out;
}

void check_invariants(const EngineState& state, CheckPhase phase) {
  const Ring& ring = state.ring;
  const LabeledPolynomial& cur = state.current;
  switch (phase) {
    case CheckPhase::BeforeReduction:
      for (const LabeledPolynomial& r : state.R)
        if (h_compare(ring, r, cur) == HOrdering::FirstBelow && divides(r.signature, cur.signature))
          throw InvariantViolation("r-gvw-small",
                                   "an element below the selected one has a dividing signature");
      return;

    case CheckPhase::AfterReduction: {
      if (!cur.poly.is_zero()) {
        for (const LabeledPolynomial& r : state.R) {
          if (!r.poly.is_zero() && h_compare(ring, r, cur) == HOrdering::FirstAbove &&
              divides(r.poly.head_monomial(), cur.poly.head_monomial()))
            throw InvariantViolation("r-gvw-big",
                                     "a signature-safe reductor is still available");
        }
        for (const LabeledPolynomial& r : state.R) {
          if (divides(r.head(), cur.head()) && divides(r.signature, cur.signature))
            throw InvariantViolation("adds-really-new",
                                     "an element has dividing head and dividing signature");
        }
      }
      // Monomial ideal growth; Zero-signature seeds belong to neither ideal.
      const bool syzygy = cur.poly.is_zero();
      for (const LabeledPolynomial& r : state.R) {
        if (r.signature.is_zero() || r.poly.is_zero() != syzygy) continue;
        if (!divides(r.signature, cur.signature)) continue;
        if (syzygy || divides(r.poly.head_monomial(), cur.poly.head_monomial()))
          throw InvariantViolation(syzygy ? "monoideal growth (L*0)" : "monoideal growth (L**)",
                                   "the inserted element lies in the existing monomial ideal");
      }
      return;
    }

    case CheckPhase::AfterPrune:
      for (const PendingMultiple& b : state.B) {
        bool found = std::any_of(state.R.begin(), state.R.end(), [&](const LabeledPolynomial& r) {
          return !r.poly.is_zero() && divides(r.poly.head_monomial(), b.head) &&
                 h_compare(ring, r.signature, r.head(), Monomial0(b.signature),
                           Monomial0(b.head)) == HOrdering::FirstAbove;
        });
        if (!found)
          throw InvariantViolation("exist-reductor",
                                   "a pending multiple has no signature-safe reductor");
      }
      return;
  }
}

SignatureRunResult simple_signature_groebner(const Ring& ring, std::span<const Polynomial> previous,
                                             const Polynomial& f, const EngineOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  EngineState state = init_state(ring, previous, f, options);
  SignatureRunResult result;
  const PrimeField& field = ring.field();

  while (true) {
    if (++state.stats.iterations > options.iteration_limit)
      throw InvariantViolation("termination", "iteration limit " +
                                                  std::to_string(options.iteration_limit) +
                                                  " exceeded");
    if (options.check_invariants) check_invariants(state, CheckPhase::BeforeReduction);

    ReductionTrace trace;
    state.current = reduce_checking_signatures(ring, std::move(state.current), state.R, &trace);
    state.stats.reduction_steps += trace.steps;
    if (options.check_invariants) check_invariants(state, CheckPhase::AfterReduction);

    LabeledPolynomial& cur = state.current;
    if (cur.poly.is_zero()) {
      ++state.stats.zero_reductions;
    } else if (cur.poly.head_coeff() != field.one()) {
      const FieldElement k = field.inv(cur.poly.head_coeff());
      cur.poly = scale(ring, cur.poly, k);
      if (cur.cofactor) cur.cofactor = scale(ring, *cur.cofactor, k);
    }
    if (options.track_cofactors) result.inserted.push_back(cur);
    state.R.push_back(std::move(cur));
    if (!state.R.back().poly.is_zero()) generate_pairs(state, state.R.size() - 1);
    prune_pending(state);
    if (options.check_invariants) check_invariants(state, CheckPhase::AfterPrune);

    std::optional<PendingMultiple> next = select_next(state);
    if (!next) break;
    const Monomial& previous_sig = state.R.back().signature.monomial();
    if (ring.order().less(next->signature, previous_sig)) ++state.signature_regressions;
    state.current = labeled_mul(ring, next->multiplier, state.R[next->base]);
  }

  result.raw.reserve(state.R.size());
  for (LabeledPolynomial& r : state.R) {
    if (!r.poly.is_zero()) result.basis.push_back(r.poly);
    result.raw.push_back(std::move(r.poly));
  }
  result.stats = state.stats;
  result.stats.basis_size_raw = result.raw.size();
  result.stats.basis_size_reduced = interreduce(ring, result.basis).size();
  result.stats.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  result.signature_regressions = state.signature_regressions;
  return result;
}

IncrementalResult incremental_groebner(const Ring& ring, std::span<const Polynomial> generators,
                                       const EngineOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : generators)
    if (!g.is_zero()) gens.push_back(g);
  if (options.sort_by_degree)
    std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
      return a.total_degree() < b.total_degree();
    });

  IncrementalResult result;
  auto is_unit = [](const std::vector<Polynomial>& basis) {
    return std::any_of(basis.begin(), basis.end(),
                       [](const Polynomial& g) { return g.is_constant(); });
  };

  for (const Polynomial& f : gens) {
    if (result.basis.empty()) {
      result.basis = interreduce(ring, std::span<const Polynomial>(&f, 1));
      result.raw = {f};
    } else {
      if (normal_form(ring, f, result.basis).is_zero()) continue;
      SignatureRunResult step = simple_signature_groebner(ring, result.basis, f, options);
      accumulate(result.stats, step.stats);
      result.signature_regressions += step.signature_regressions;
      if (options.track_cofactors)
        result.increments.push_back({result.basis, f, std::move(step.inserted)});
      result.raw = std::move(step.raw);
      result.basis = interreduce(ring, step.basis);
    }
    if (is_unit(result.basis)) {
      result.basis = {Polynomial::constant(ring, ring.field().one())};
      break;
    }
  }
  result.stats.basis_size_raw = result.raw.size();
  result.stats.basis_size_reduced = result.basis.size();
  result.stats.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace ssg
