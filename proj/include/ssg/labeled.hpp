#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "ssg/monomial.hpp"
#include "ssg/polynomial.hpp"
#include "ssg/ring.hpp"

namespace ssg {

/// A pair (signature, polynomial) such that some cofactor u with HM(u) equal
/// to the signature satisfies u*f == polynomial modulo the previous ideal.
///
/// The cofactor itself is only stored when it is being tracked (certified
/// runs); otherwise it stays empty. The pair (Zero, 0) is never a valid
/// labeled polynomial.
struct LabeledPolynomial {
  Monomial0 signature;
  Polynomial poly;
  std::optional<Polynomial> cofactor;

  Monomial0 head() const { return poly.head(); }

  friend bool operator==(const LabeledPolynomial&, const LabeledPolynomial&) = default;
};

/// Outcome of comparing h1 against h2 through the cross products
/// HM(p1)*sig2 and HM(p2)*sig1.
enum class HOrdering {
  FirstBelow,    // h1 <_H h2
  FirstAbove,    // h1 >_H h2
  Tied,          // equal nonzero cross products
  Incomparable,  // both cross products are Zero
};

HOrdering h_compare(const Ring& ring, const Monomial0& sig1, const Monomial0& head1,
                    const Monomial0& sig2, const Monomial0& head2);
HOrdering h_compare(const Ring& ring, const LabeledPolynomial& h1, const LabeledPolynomial& h2);

// (t*sig, t*p), and t*u for a tracked cofactor.
LabeledPolynomial labeled_mul(const Ring& ring, const Monomial& t, const LabeledPolynomial& h);

/// Cancels the head of h1 against t*h2:
///   (SIG(h1), poly(h1) - HC(h1)/HC(h2) * t * poly(h2)).
/// Requires SIG(h1) > SIG(t*h2) and HM(h1) == HM(t*h2) != 0; a violation
/// throws ContractError. A tracked cofactor of h1 is updated with the same
/// combination (h2 must then track one as well).
LabeledPolynomial sig_safe_reduce_step(const Ring& ring, const LabeledPolynomial& h1,
                                       const LabeledPolynomial& h2, const Monomial& t);

struct ReductionTrace {
  std::size_t steps = 0;
};

/// Head-reduces h while some r in `reductors` has r >_H h and HM(r) | HM(h),
/// always using the >_H-maximal such r. Among >_H-equivalent candidates the
/// one with the smaller head monomial wins, then the earlier position.
/// Stops as soon as the polynomial becomes zero. The signature never changes.
LabeledPolynomial reduce_checking_signatures(const Ring& ring, LabeledPolynomial h,
                                             std::span<const LabeledPolynomial> reductors,
                                             ReductionTrace* trace = nullptr);

Polynomial reduce_checking_signatures(const Ring& ring, const Monomial& sigma, const Polynomial& p,
                                      std::span<const LabeledPolynomial> reductors);

}  // namespace ssg
