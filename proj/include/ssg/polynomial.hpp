#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ssg/field.hpp"
#include "ssg/monomial.hpp"
#include "ssg/ring.hpp"

namespace ssg {

struct Term {
  FieldElement coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero terms in strictly decreasing order of the ring's
/// monomial order. The empty term list is the zero polynomial.
///
/// A Polynomial does not carry its Ring; every operation that needs the order
/// or the field takes the Ring explicitly.
class Polynomial {
 public:
  Polynomial() = default;

  // Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);
  // Takes terms that already satisfy the representation invariant.
  static Polynomial from_sorted_terms(const Ring& ring, std::vector<Term> terms);
  static Polynomial constant(const Ring& ring, FieldElement c);
  static Polynomial term(const Ring& ring, FieldElement c, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& operator[](std::size_t i) const { return terms_[i]; }

  // HM; Zero for the zero polynomial.
  Monomial0 head() const { return is_zero() ? Monomial0::zero() : Monomial0(terms_.front().mono); }
  // HC; 0 for the zero polynomial.
  FieldElement head_coeff() const { return is_zero() ? FieldElement(0) : terms_.front().coeff; }
  // Precondition: !is_zero().
  const Monomial& head_monomial() const { return terms_.front().mono; }

  bool is_constant() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }
  std::uint32_t total_degree() const;

  // Representation invariant under `ring`.
  bool is_normalized(const Ring& ring) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

  std::vector<Term> terms_;
};

// (HM(p), HC(p)), with (Zero, 0) for p = 0.
std::pair<Monomial0, FieldElement> leading(const Polynomial& p);

// p + K*t*q in one linear merge.
Polynomial add_scaled(const Ring& ring, const Polynomial& p, FieldElement k, const Monomial& t,
                      const Polynomial& q);

Polynomial add(const Ring& ring, const Polynomial& p, const Polynomial& q);
Polynomial sub(const Ring& ring, const Polynomial& p, const Polynomial& q);
Polynomial scale(const Ring& ring, const Polynomial& p, FieldElement k);
Polynomial mul_term(const Ring& ring, const Polynomial& p, FieldElement k, const Monomial& t);
Polynomial mul(const Ring& ring, const Polynomial& p, const Polynomial& q);
// p / HC(p); zero stays zero.
Polynomial make_monic(const Ring& ring, const Polynomial& p);

/// Full (head and tail) reduction of p modulo divisors.
///
/// The reductor for each term is the first divisor, in the order (HM ascending,
/// then position in `divisors`), whose head monomial divides it. When
/// `quotients` is given it receives one cofactor per divisor such that
/// p = sum(quotients[i] * divisors[i]) + result.
///
/// Throws ContractError if a divisor is zero.
Polynomial normal_form(const Ring& ring, const Polynomial& p, std::span<const Polynomial> divisors,
                       std::vector<Polynomial>* quotients = nullptr);

/// Autoreduced, monic set sorted by ascending head monomial: every element is
/// in normal form modulo the others, and elements reducing to zero are
/// dropped. For a Groebner basis this is the reduced Groebner basis.
std::vector<Polynomial> interreduce(const Ring& ring, std::span<const Polynomial> basis);

}  // namespace ssg
