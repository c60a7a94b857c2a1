#pragma once

#include <compare>
#include <cstddef>
#include <string_view>

#include "ssg/field.hpp"
#include "ssg/monomial.hpp"

namespace ssg {

enum class OrderKind { grevlex, lex };

std::string_view to_string(OrderKind kind);
// Throws ContractError for anything other than "grevlex" or "lex".
OrderKind order_kind_from_string(std::string_view name);

/// Monomial order with variable 0 as the greatest variable.
///
/// grevlex: higher total degree is greater; on equal degree the monomial with
/// the smaller exponent in the last differing variable (scanning from the
/// last variable backwards) is greater.
/// lex: the first differing exponent from variable 0 decides.
///
/// The extension to Monomial0 places Zero strictly below every monomial.
class MonomialOrder {
 public:
  constexpr explicit MonomialOrder(OrderKind kind = OrderKind::grevlex) : kind_(kind) {}

  constexpr OrderKind kind() const { return kind_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::strong_ordering compare(const Monomial0& a, const Monomial0& b) const;

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool less(const Monomial0& a, const Monomial0& b) const { return compare(a, b) < 0; }

  friend constexpr bool operator==(MonomialOrder, MonomialOrder) = default;

 private:
  OrderKind kind_;
};

/// Immutable context shared by every polynomial operation: the coefficient
/// field, the variable count and the active order.
class Ring {
 public:
  Ring(PrimeField field, std::size_t nvars, MonomialOrder order = MonomialOrder{})
      : field_(field), nvars_(nvars), order_(order) {}

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }

  Monomial one() const { return Monomial(nvars_); }
  Monomial variable(std::size_t i, Exponent power = 1) const {
    return Monomial::variable(nvars_, i, power);
  }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  PrimeField field_;
  std::size_t nvars_;
  MonomialOrder order_;
};

}  // namespace ssg
