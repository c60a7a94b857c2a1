#include "ssg/ring.hpp"

#include <string>

#include "ssg/errors.hpp"

namespace ssg {

std::string_view to_string(OrderKind kind) {
  return kind == OrderKind::lex ? "lex" : "grevlex";
}

OrderKind order_kind_from_string(std::string_view name) {
  if (name == "grevlex") return OrderKind::grevlex;
  if (name == "lex") return OrderKind::lex;
  throw ContractError("unknown monomial order '" + std::string(name) + "'");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw ContractError("comparing monomials of different arity");
  const std::size_t n = a.nvars();
  if (kind_ == OrderKind::lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial0& a, const Monomial0& b) const {
  if (a.is_zero() || b.is_zero()) return !a.is_zero() <=> !b.is_zero();
  return compare(a.monomial(), b.monomial());
}

}  // namespace ssg
