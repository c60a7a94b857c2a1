#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "ssg/errors.hpp"
#include "ssg/field.hpp"
#include "ssg/monomial.hpp"
#include "ssg/polynomial.hpp"
#include "ssg/ring.hpp"
#include "test_support.hpp"

using namespace ssg;
using namespace ssg::testing;

TEST_CASE("prime field arithmetic") {
  PrimeField f7(7);
  CHECK(f7.inv(FieldElement(2)) == FieldElement(4));

  PrimeField f(32003);
  CHECK(f.add(FieldElement(32002), FieldElement(1)) == FieldElement(0));
  CHECK(f.mul(FieldElement(12345), f.inv(FieldElement(12345))) == FieldElement(1));
  CHECK(f.sub(FieldElement(0), FieldElement(1)) == FieldElement(32002));
  CHECK(f.neg(FieldElement(0)) == FieldElement(0));
  CHECK(f.from_int(-3) == FieldElement(32000));
  CHECK(f.from_int(64006) == FieldElement(0));

  CHECK_THROWS_AS(f.inv(FieldElement(0)), ArithmeticError);
  CHECK_THROWS_AS(PrimeField(4), ContractError);
  CHECK_THROWS_AS(PrimeField(1), ContractError);
  CHECK_THROWS_AS(PrimeField(0), ContractError);
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(2147483647));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 7u, 32003u, 2147483647u}) {
    PrimeField f(p);
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    for (int i = 0; i < 500; ++i) {
      FieldElement a(d(rng)), b(d(rng)), c(d(rng));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == FieldElement(0));
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      CHECK(a.value() < p);
      if (!a.is_zero()) CHECK(f.mul(a, f.inv(a)) == FieldElement(1));
    }
  }
}

TEST_CASE("monomial multiplication, division and lcm") {
  // variables x, y, z
  CHECK(M({2, 1, 0}) * M({0, 1, 1}) == M({2, 2, 1}));
  CHECK(M({0, 0, 0}) * M({3, 0, 0}) == M({3, 0, 0}));
  CHECK((Monomial0::zero() * Monomial0(M({1, 0, 0}))).is_zero());

  CHECK(divides(M({1, 1}), M({2, 3})));
  CHECK(quotient(M({2, 3}), M({1, 1})) == M({1, 2}));
  CHECK_FALSE(divides(M({1, 1}), M({2, 0})));
  CHECK_THROWS_AS(quotient(M({2, 0}), M({1, 1})), ContractError);

  CHECK(divides(Monomial0(M({1, 0})), Monomial0::zero()));
  CHECK_FALSE(divides(Monomial0::zero(), Monomial0(M({1, 0}))));
  CHECK(divides(Monomial0::zero(), Monomial0::zero()));

  CHECK(lcm(M({2, 1, 0}), M({0, 1, 1})) == M({2, 1, 1}));
  CHECK(lcm(M({1, 2, 3}), M({1, 2, 3})) == M({1, 2, 3}));
  CHECK(lcm(M({2, 0}), M({0, 3})) == M({2, 3}));

  CHECK(M({2, 0, 1}).degree() == 3);
  CHECK_THROWS_AS(M({65535, 0}) * M({1, 0}), OverflowError);
  CHECK_THROWS_AS(M({1, 0}) * M({1, 0, 0}), ContractError);
}

TEST_CASE("grevlex and lex comparisons") {
  MonomialOrder grevlex(OrderKind::grevlex);
  MonomialOrder lex(OrderKind::lex);
  CHECK(grevlex.compare(M({2, 0, 1}), M({1, 2, 0})) < 0);
  CHECK(grevlex.compare(Monomial0::zero(), Monomial0(M({0, 0, 0}))) < 0);
  CHECK(grevlex.compare(Monomial0::zero(), Monomial0::zero()) == 0);
  CHECK(lex.compare(M({1, 0}), M({0, 5})) > 0);
  CHECK(grevlex.compare(M({1, 0}), M({0, 5})) < 0);
  CHECK_THROWS_AS(grevlex.compare(M({1, 0}), M({1, 0, 0})), ContractError);

  // Degree-3 monomials in x > y > z, descending grevlex, from a hand table.
  std::vector<Monomial> table = {M({3, 0, 0}), M({2, 1, 0}), M({1, 2, 0}), M({0, 3, 0}), M({2, 0, 1}),
                                 M({1, 1, 1}), M({0, 2, 1}), M({1, 0, 2}), M({0, 1, 2}), M({0, 0, 3})};
  std::vector<Monomial> sorted = table;
  std::mt19937_64 rng(3);
  std::shuffle(sorted.begin(), sorted.end(), rng);
  std::sort(sorted.begin(), sorted.end(),
            [&](const Monomial& a, const Monomial& b) { return grevlex.less(b, a); });
  CHECK(sorted == table);
}

namespace {

// Textbook characterizations, independent of MonomialOrder::compare:
// grevlex: a > b iff deg a > deg b, or equal degree and the last nonzero entry
// of a - b is negative. lex: the first nonzero entry of a - b is positive.
int reference_compare(OrderKind kind, const Monomial& a, const Monomial& b) {
  std::vector<int> diff;
  for (std::size_t i = 0; i < a.nvars(); ++i) diff.push_back(int{a[i]} - int{b[i]});
  if (kind == OrderKind::lex) {
    for (int d : diff)
      if (d != 0) return d > 0 ? 1 : -1;
    return 0;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (auto it = diff.rbegin(); it != diff.rend(); ++it)
    if (*it != 0) return *it < 0 ? 1 : -1;
  return 0;
}

}  // namespace

TEST_CASE("monomial orders: totality, multiplicativity, minimality") {
  std::mt19937_64 rng(17);
  for (OrderKind kind : {OrderKind::grevlex, OrderKind::lex}) {
    MonomialOrder order(kind);
    for (int i = 0; i < 2000; ++i) {
      Monomial a = random_monomial(rng, 4, 4);
      Monomial b = random_monomial(rng, 4, 4);
      Monomial t = random_monomial(rng, 4, 3);
      auto c = order.compare(a, b);
      int expected = reference_compare(kind, a, b);
      CHECK((c < 0 ? -1 : c > 0 ? 1 : 0) == expected);
      CHECK(int(c < 0) + int(c == 0) + int(c > 0) == 1);
      CHECK((c == 0) == (a == b));
      CHECK((order.compare(b, a) < 0) == (c > 0));
      if (c < 0) CHECK(order.less(a * t, b * t));
      CHECK_FALSE(order.less(a, Monomial(4)));
      if (!a.is_one()) CHECK(order.less(Monomial(4), a));
      CHECK(order.less(Monomial0::zero(), Monomial0(a)));
    }
  }
}

TEST_CASE("leading term") {
  Ring ring = make_ring(3);
  auto [hm, hc] = leading(P(ring, {{3, {2, 1, 0}}, {1, {0, 0, 1}}}));
  CHECK(hm == Monomial0(M({2, 1, 0})));
  CHECK(hc == FieldElement(3));

  auto [zm, zc] = leading(Polynomial{});
  CHECK(zm.is_zero());
  CHECK(zc == FieldElement(0));

  auto [cm, cc] = leading(P(ring, {{5, {0, 0, 0}}}));
  CHECK(cm == Monomial0(M({0, 0, 0})));
  CHECK(cc == FieldElement(5));
}

TEST_CASE("construction normalizes terms") {
  Ring ring = make_ring(2, 7);
  Polynomial p = P(ring, {{1, {0, 1}}, {3, {1, 0}}, {4, {1, 0}}, {2, {2, 0}}});
  // 3x + 4x = 7x = 0 over F7
  CHECK(p == P(ring, {{2, {2, 0}}, {1, {0, 1}}}));
  CHECK(p.is_normalized(ring));
  CHECK(P(ring, {{7, {1, 1}}}).is_zero());
}

TEST_CASE("add_scaled examples") {
  Ring ring = make_ring(1);
  const PrimeField& f = ring.field();
  Polynomial x2 = P(ring, {{1, {2}}});
  Polynomial x_plus_1 = P(ring, {{1, {1}}, {1, {0}}});
  CHECK(add_scaled(ring, x2, f.from_int(-1), M({1}), x_plus_1) == P(ring, {{-1, {1}}}));
  CHECK(add_scaled(ring, x2, FieldElement(0), M({1}), x_plus_1) == x2);
  CHECK(add_scaled(ring, x_plus_1, f.from_int(-1), M({0}), x_plus_1).is_zero());
}

TEST_CASE("add_scaled agrees with dictionary arithmetic") {
  std::mt19937_64 rng(23);
  for (std::uint32_t p : {7u, 32003u}) {
    Ring ring = make_ring(3, p);
    const PrimeField& f = ring.field();
    std::uniform_int_distribution<std::uint32_t> cd(0, p - 1);
    for (int i = 0; i < 300; ++i) {
      Polynomial a = random_polynomial(rng, ring, 8, 3);
      Polynomial b = random_polynomial(rng, ring, 8, 3);
      FieldElement k(cd(rng));
      Monomial t = random_monomial(rng, 3, 2);

      std::map<std::vector<Exponent>, std::uint64_t> dict;
      auto key = [](const Monomial& m) { return std::vector<Exponent>(m.exponents().begin(), m.exponents().end()); };
      for (const Term& term : a.terms()) dict[key(term.mono)] += term.coeff.value();
      for (const Term& term : b.terms())
        dict[key(term.mono * t)] += std::uint64_t{k.value()} * term.coeff.value();

      Polynomial got = add_scaled(ring, a, k, t, b);
      CHECK(got.is_normalized(ring));
      std::size_t nonzero = 0;
      for (auto& [mono, c] : dict)
        if (c % p != 0) ++nonzero;
      CHECK(got.size() == nonzero);
      for (const Term& term : got.terms()) CHECK(dict[key(term.mono)] % p == term.coeff.value());
      (void)f;
    }
  }
}

TEST_CASE("normal form examples") {
  Ring ring = make_ring(2);  // x > y, grevlex
  Polynomial x2_y = P(ring, {{1, {2, 0}}, {-1, {0, 1}}});
  Polynomial xy_1 = P(ring, {{1, {1, 1}}, {-1, {0, 0}}});
  Polynomial y2_x = P(ring, {{1, {0, 2}}, {-1, {1, 0}}});

  std::vector<Polynomial> g1{x2_y};
  CHECK(normal_form(ring, P(ring, {{1, {2, 1}}}), g1) == P(ring, {{1, {0, 2}}}));
  CHECK(normal_form(ring, x2_y, g1).is_zero());

  std::vector<Polynomial> gb{x2_y, xy_1, y2_x};
  Polynomial x3_y3 = P(ring, {{1, {3, 0}}, {-1, {0, 3}}});
  std::vector<Polynomial> quotients;
  CHECK(normal_form(ring, x3_y3, gb, &quotients).is_zero());
  // x^3 - y^3 == sum q_i g_i exactly
  Polynomial recombined;
  for (std::size_t i = 0; i < gb.size(); ++i) recombined = add(ring, recombined, mul(ring, quotients[i], gb[i]));
  CHECK(recombined == x3_y3);

  std::vector<Polynomial> with_zero{x2_y, Polynomial{}};
  CHECK_THROWS_AS(normal_form(ring, x3_y3, with_zero), ContractError);
}

TEST_CASE("normal form: remainder is reduced and the trace recombines") {
  std::mt19937_64 rng(5);
  for (OrderKind kind : {OrderKind::grevlex, OrderKind::lex}) {
    Ring ring = make_ring(3, 32003, kind);
    for (int i = 0; i < 200; ++i) {
      std::vector<Polynomial> g;
      for (int j = 0; j < 3; ++j) {
        Polynomial q = random_polynomial(rng, ring, 4, 2);
        if (!q.is_zero()) g.push_back(q);
      }
      Polynomial p = random_polynomial(rng, ring, 8, 4);
      std::vector<Polynomial> quotients;
      Polynomial r = normal_form(ring, p, g, &quotients);
      REQUIRE(quotients.size() == g.size());
      Polynomial recombined = r;
      for (std::size_t j = 0; j < g.size(); ++j) recombined = add(ring, recombined, mul(ring, quotients[j], g[j]));
      CHECK(recombined == p);
      for (const Term& t : r.terms())
        for (const Polynomial& d : g) CHECK_FALSE(divides(d.head_monomial(), t.mono));
    }
  }
}

TEST_CASE("interreduce") {
  Ring ring = make_ring(2);
  Polynomial x = P(ring, {{1, {1, 0}}});
  // {x + y, 3y} is a Groebner basis whose first element has a reducible tail.
  std::vector<Polynomial> in{P(ring, {{1, {1, 0}}, {1, {0, 1}}}), P(ring, {{3, {0, 1}}})};
  std::vector<Polynomial> expected{P(ring, {{1, {0, 1}}}), x};  // ascending heads: y < x
  CHECK(interreduce(ring, in) == expected);

  Ring f7 = make_ring(1, 7);
  std::vector<Polynomial> two_x{P(f7, {{2, {1}}})};
  CHECK(interreduce(f7, two_x) == std::vector<Polynomial>{P(f7, {{1, {1}}})});

  std::vector<Polynomial> reduced{P(ring, {{1, {0, 2}}, {-1, {1, 0}}}), P(ring, {{1, {1, 1}}, {-1, {0, 0}}}),
                                  P(ring, {{1, {2, 0}}, {-1, {0, 1}}})};
  CHECK(interreduce(ring, reduced) == reduced);
  // a non-minimal element is dropped
  std::vector<Polynomial> with_multiple{x, P(ring, {{1, {2, 0}}, {1, {1, 0}}}), P(ring, {{1, {0, 1}}})};
  CHECK(interreduce(ring, with_multiple) == expected);
  // tails are reduced before anything is discarded: x^2 + y becomes y
  std::vector<Polynomial> tail_first{x, P(ring, {{1, {2, 0}}, {1, {0, 1}}})};
  CHECK(interreduce(ring, tail_first) == expected);
  std::vector<Polynomial> zeros{Polynomial{}, x};
  CHECK(interreduce(ring, zeros) == std::vector<Polynomial>{x});
  CHECK(interreduce(ring, interreduce(ring, in)) == interreduce(ring, in));
}
