#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace ssg {

using Exponent = std::uint16_t;
// Up to 8 variables stay inline.
using ExponentVector = boost::container::small_vector<Exponent, 8>;

/// Power product x_0^e_0 ... x_{n-1}^e_{n-1}. The total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  // The unit monomial in n variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  // Throws OverflowError if the total degree does not fit 32 bits.
  explicit Monomial(std::span<const Exponent> exps);
  explicit Monomial(std::vector<Exponent> exps) : Monomial(std::span<const Exponent>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  friend Monomial operator*(const Monomial&, const Monomial&);
  friend Monomial quotient(const Monomial&, const Monomial&);
  friend Monomial lcm(const Monomial&, const Monomial&);
  Monomial(ExponentVector exps, std::uint32_t degree) : exps_(std::move(exps)), degree_(degree) {}

  ExponentVector exps_;
  std::uint32_t degree_ = 0;
};

// Componentwise sum. Throws OverflowError when an exponent would wrap.
Monomial operator*(const Monomial& a, const Monomial& b);

// a | b, i.e. componentwise a <= b.
bool divides(const Monomial& a, const Monomial& b);

// b / a. Throws ContractError unless a | b.
Monomial quotient(const Monomial& b, const Monomial& a);

Monomial lcm(const Monomial& a, const Monomial& b);

/// A monomial or the adjoined zero element. Zero absorbs products and is
/// divisible by everything; it divides only itself.
class Monomial0 {
 public:
  Monomial0() = default;  // zero
  Monomial0(Monomial m) : mono_(std::move(m)) {}  // NOLINT(google-explicit-constructor)

  static Monomial0 zero() { return {}; }

  bool is_zero() const { return !mono_.has_value(); }
  // Precondition: !is_zero().
  const Monomial& monomial() const { return *mono_; }

  friend bool operator==(const Monomial0&, const Monomial0&) = default;

 private:
  std::optional<Monomial> mono_;
};

Monomial0 operator*(const Monomial0& a, const Monomial0& b);
bool divides(const Monomial0& a, const Monomial0& b);
// b / a for a | b. Zero / t is Zero; t / t-divisible returns the quotient.
Monomial0 quotient(const Monomial0& b, const Monomial0& a);

}  // namespace ssg
