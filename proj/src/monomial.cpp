#include "ssg/monomial.hpp"

#include <algorithm>
#include <limits>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw ContractError("monomials over different variable counts");
}

}  // namespace

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  if (d > std::numeric_limits<std::uint32_t>::max())
    throw OverflowError("monomial degree overflow");
  degree_ = static_cast<std::uint32_t>(d);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw ContractError("variable index out of range");
  std::vector<Exponent> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  if (std::uint64_t{a.degree_} + b.degree_ > std::numeric_limits<std::uint32_t>::max())
    throw OverflowError("monomial degree overflow");
  ExponentVector e(a.nvars(), boost::container::default_init);
  for (std::size_t i = 0; i < e.size(); ++i) {
    unsigned s = unsigned{a[i]} + unsigned{b[i]};
    if (s > std::numeric_limits<Exponent>::max())
      throw OverflowError("exponent overflow in monomial product");
    e[i] = static_cast<Exponent>(s);
  }
  return Monomial(std::move(e), a.degree_ + b.degree_);
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw ContractError("quotient of non-divisible monomials");
  ExponentVector e(a.nvars(), boost::container::default_init);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<Exponent>(b[i] - a[i]);
  return Monomial(std::move(e), b.degree_ - a.degree_);
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  ExponentVector e(a.nvars(), boost::container::default_init);
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = std::max(a[i], b[i]);
    d += e[i];
  }
  return Monomial(std::move(e), d);
}

Monomial0 operator*(const Monomial0& a, const Monomial0& b) {
  if (a.is_zero() || b.is_zero()) return Monomial0::zero();
  return a.monomial() * b.monomial();
}

bool divides(const Monomial0& a, const Monomial0& b) {
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  return divides(a.monomial(), b.monomial());
}

Monomial0 quotient(const Monomial0& b, const Monomial0& a) {
  if (!divides(a, b)) throw ContractError("quotient of non-divisible monomials");
  if (b.is_zero()) return Monomial0::zero();
  return quotient(b.monomial(), a.monomial());
}

}  // namespace ssg
