#pragma once

#include <cstdint>

namespace ssg {

/// Residue modulo the ring's prime. The modulus lives in PrimeField, not here.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;

 private:
  std::uint32_t value_ = 0;
};

/// Arithmetic in Z/p for a prime p < 2^31. Every result is a canonical
/// residue in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultModulus = 32003;
  static constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;

  // Throws ContractError unless p is a prime no larger than kMaxModulus.
  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }

  FieldElement from_int(std::int64_t v) const;
  FieldElement one() const { return FieldElement(1); }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t s = a.value() + b.value();
    return FieldElement(s >= p_ ? s - p_ : s);
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return FieldElement(a.value() >= b.value() ? a.value() - b.value()
                                               : a.value() + p_ - b.value());
  }
  FieldElement neg(FieldElement a) const {
    return FieldElement(a.is_zero() ? 0 : p_ - a.value());
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return FieldElement(static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.value()) * b.value() % p_));
  }
  // Throws ArithmeticError for a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  static bool is_prime(std::uint64_t n);

 private:
  std::uint32_t p_;
};

}  // namespace ssg
