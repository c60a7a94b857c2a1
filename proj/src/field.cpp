#include "ssg/field.hpp"

#include <string>

#include "ssg/errors.hpp"

namespace ssg {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxModulus)
    throw ContractError("modulus " + std::to_string(p) + " exceeds 2^31-1");
  if (!is_prime(p))
    throw ContractError("modulus " + std::to_string(p) + " is not prime");
}

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldElement PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElement(static_cast<std::uint32_t>(r));
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.is_zero()) throw ArithmeticError("inverse of zero");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.value();
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

}  // namespace ssg
