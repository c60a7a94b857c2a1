#include "ssg/report.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"

#include "ssg/errors.hpp"
#include "ssg/oracle.hpp"

namespace ssg {

std::string_view to_string(Algorithm algorithm) {
  return algorithm == Algorithm::buchberger ? "buchberger" : "ssg";
}

Algorithm algorithm_from_string(std::string_view name) {
  if (name == "ssg") return Algorithm::ssg;
  if (name == "buchberger") return Algorithm::buchberger;
  throw ContractError("unknown algorithm '" + std::string(name) + "'");
}

BasisCheck check_basis(const Ring& ring, std::span<const Polynomial> generators,
                       std::span<const Polynomial> basis) {
  std::vector<Polynomial> nonzero;
  for (const Polynomial& g : basis)
    if (!g.is_zero()) nonzero.push_back(g);
  BasisCheck out;
  out.groebner = oracle::is_groebner_basis(ring, nonzero);
  const std::vector<Polynomial> reference = oracle::buchberger(ring, generators);
  out.same_ideal =
      std::all_of(generators.begin(), generators.end(),
                  [&](const Polynomial& g) { return oracle::ideal_membership(ring, g, nonzero); }) &&
      std::all_of(nonzero.begin(), nonzero.end(),
                  [&](const Polynomial& g) { return oracle::ideal_membership(ring, g, reference); });
  return out;
}

RunReport run_system(const SystemDescription& desc, const RunOptions& options) {
  const Ring& ring = desc.ring;
  RunReport report;
  report.algorithm = options.algorithm;

  if (options.algorithm == Algorithm::buchberger) {
    if (options.certify) throw ContractError("certification needs the signature algorithm");
    const auto started = std::chrono::steady_clock::now();
    oracle::BuchbergerStats bs;
    report.raw = oracle::buchberger(ring, desc.generators, &bs);
    report.basis = interreduce(ring, report.raw);
    report.stats.iterations = bs.reductions;
    report.stats.pairs_generated = bs.pairs_generated;
    report.stats.pairs_pruned = bs.pairs_skipped;
    report.stats.zero_reductions = bs.zero_reductions;
    report.stats.reduction_steps = bs.reduction_steps;
    report.stats.basis_size_raw = report.raw.size();
    report.stats.basis_size_reduced = report.basis.size();
    report.stats.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  } else {
    EngineOptions engine = options.engine;
    engine.track_cofactors = engine.track_cofactors || options.certify;
    IncrementalResult result = incremental_groebner(ring, desc.generators, engine);
    report.basis = std::move(result.basis);
    report.raw = std::move(result.raw);
    report.stats = result.stats;
    report.signature_regressions = result.signature_regressions;
    if (options.certify) {
      bool ok = true;
      for (const Increment& inc : result.increments) {
        for (const LabeledPolynomial& h : inc.inserted) {
          ok = oracle::certify_labeled(ring, h, inc.f, inc.previous) && ok;
          ++report.certified_count;
        }
      }
      report.verdicts.certify = ok;
    }
  }

  if (options.verify) {
    BasisCheck check = check_basis(ring, desc.generators, report.basis);
    report.verdicts.gb_check = check.groebner;
    report.verdicts.ideal_equality = check.same_ideal;
  }
  return report;
}

std::string stats_to_json(const RunStats& stats) {
  nlohmann::ordered_json j;
  j["iterations"] = stats.iterations;
  j["pairs_generated"] = stats.pairs_generated;
  j["pairs_pruned"] = stats.pairs_pruned;
  j["zero_reductions"] = stats.zero_reductions;
  j["reduction_steps"] = stats.reduction_steps;
  j["basis_size_raw"] = stats.basis_size_raw;
  j["basis_size_reduced"] = stats.basis_size_reduced;
  j["wall_time"] = stats.wall_time;
  return j.dump(2) + "\n";
}

}  // namespace ssg
