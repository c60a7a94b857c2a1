#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ssg/labeled.hpp"
#include "ssg/polynomial.hpp"
#include "ssg/ring.hpp"

// Classical reference machinery used to validate the signature engine. It
// depends on the polynomial layer only.
namespace ssg::oracle {

struct CriticalPair {
  std::size_t i = 0;  // i < j
  std::size_t j = 0;
  Monomial lcm;
  std::uint32_t sugar = 0;
};

struct BuchbergerStats {
  std::uint64_t pairs_generated = 0;
  std::uint64_t pairs_skipped = 0;  // coprime head monomials
  std::uint64_t reductions = 0;     // S-polynomials reduced
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
};

// (lcm/HM(p))*p/HC(p) - (lcm/HM(q))*q/HC(q). Throws ContractError for zero input.
Polynomial s_polynomial(const Ring& ring, const Polynomial& p, const Polynomial& q);

/// Buchberger's algorithm with the coprime-head criterion. Pairs are taken by
/// (sugar, lcm, i, j). The working basis is kept minimal: whenever a live
/// element's head becomes divisible by another live head, that element is
/// replaced by its normal form modulo the others, and its pending pairs give
/// way to pairs of the replacement. Zero generators are ignored. The result
/// is a monic, minimal Groebner basis; interreduce it for the reduced one.
std::vector<Polynomial> buchberger(const Ring& ring, std::span<const Polynomial> generators,
                                   BuchbergerStats* stats = nullptr);

// Every S-polynomial of G reduces to zero modulo G. Zero entries are ignored.
bool is_groebner_basis(const Ring& ring, std::span<const Polynomial> basis);

// NF(p, basis) == 0; `basis` must be a Groebner basis.
bool ideal_membership(const Ring& ring, const Polynomial& p, std::span<const Polynomial> basis);

/// Checks the labeled-polynomial property of h for generator f over the
/// Groebner basis `previous`: HM(u) == SIG(h) and u*f - poly(h) reduces to 0.
/// Throws ContractError when h carries no cofactor.
bool certify_labeled(const Ring& ring, const LabeledPolynomial& h, const Polynomial& f,
                     std::span<const Polynomial> previous);

}  // namespace ssg::oracle
