#include "ssg/labeled.hpp"

#include <cassert>

#include "ssg/errors.hpp"

namespace ssg {

HOrdering h_compare(const Ring& ring, const Monomial0& sig1, const Monomial0& head1,
                    const Monomial0& sig2, const Monomial0& head2) {
  const Monomial0 left = head1 * sig2;
  const Monomial0 right = head2 * sig1;
  if (left.is_zero() && right.is_zero()) return HOrdering::Incomparable;
  auto c = ring.order().compare(left, right);
  if (c < 0) return HOrdering::FirstBelow;
  if (c > 0) return HOrdering::FirstAbove;
  return HOrdering::Tied;
}

HOrdering h_compare(const Ring& ring, const LabeledPolynomial& h1, const LabeledPolynomial& h2) {
  return h_compare(ring, h1.signature, h1.head(), h2.signature, h2.head());
}

LabeledPolynomial labeled_mul(const Ring& ring, const Monomial& t, const LabeledPolynomial& h) {
  LabeledPolynomial out{h.signature * Monomial0(t), mul_term(ring, h.poly, ring.field().one(), t),
                        std::nullopt};
  if (h.cofactor) out.cofactor = mul_term(ring, *h.cofactor, ring.field().one(), t);
  return out;
}

LabeledPolynomial sig_safe_reduce_step(const Ring& ring, const LabeledPolynomial& h1,
                                       const LabeledPolynomial& h2, const Monomial& t) {
  const Monomial0 scaled_sig = h2.signature * Monomial0(t);
  if (ring.order().compare(h1.signature, scaled_sig) <= 0)
    throw ContractError("signature-safe reduction: reductor signature is not smaller");
  if (h1.poly.is_zero() || h2.poly.is_zero() ||
      !(h1.poly.head_monomial() == t * h2.poly.head_monomial()))
    throw ContractError("signature-safe reduction: head monomials do not match");
  if (h1.cofactor && !h2.cofactor)
    throw ContractError("signature-safe reduction: reductor has no cofactor");

  const PrimeField& field = ring.field();
  const FieldElement k = field.neg(field.div(h1.poly.head_coeff(), h2.poly.head_coeff()));
  LabeledPolynomial out{h1.signature, add_scaled(ring, h1.poly, k, t, h2.poly), std::nullopt};
  if (h1.cofactor) out.cofactor = add_scaled(ring, *h1.cofactor, k, t, *h2.cofactor);
  assert(ring.order().less(out.head(), h1.head()));
  return out;
}

LabeledPolynomial reduce_checking_signatures(const Ring& ring, LabeledPolynomial h,
                                             std::span<const LabeledPolynomial> reductors,
                                             ReductionTrace* trace) {
  if (h.signature.is_zero())
    throw ContractError("reduce_checking_signatures: zero signature");
  while (!h.poly.is_zero()) {
    const Monomial& head = h.poly.head_monomial();
    const Monomial0 head0 = h.head();
    const LabeledPolynomial* best = nullptr;
    for (const LabeledPolynomial& r : reductors) {
      if (r.poly.is_zero() || !divides(r.poly.head_monomial(), head)) continue;
      if (h_compare(ring, r.signature, r.head(), h.signature, head0) != HOrdering::FirstAbove)
        continue;
      if (best == nullptr) {
        best = &r;
        continue;
      }
      switch (h_compare(ring, r, *best)) {
        case HOrdering::FirstAbove:
          best = &r;
          break;
        case HOrdering::Tied:
        case HOrdering::Incomparable:
          if (ring.order().less(r.poly.head_monomial(), best->poly.head_monomial())) best = &r;
          break;
        case HOrdering::FirstBelow:
          break;
      }
    }
    if (best == nullptr) break;
    h = sig_safe_reduce_step(ring, h, *best, quotient(head, best->poly.head_monomial()));
    if (trace) ++trace->steps;
  }
  return h;
}

Polynomial reduce_checking_signatures(const Ring& ring, const Monomial& sigma, const Polynomial& p,
                                      std::span<const LabeledPolynomial> reductors) {
  return reduce_checking_signatures(ring, LabeledPolynomial{sigma, p, std::nullopt}, reductors).poly;
}

}  // namespace ssg
