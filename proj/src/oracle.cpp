#include "ssg/oracle.hpp"

#include <algorithm>
#include <queue>

#include "ssg/errors.hpp"

namespace ssg::oracle {

Polynomial s_polynomial(const Ring& ring, const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw ContractError("s_polynomial: zero argument");
  const PrimeField& field = ring.field();
  const Monomial l = lcm(p.head_monomial(), q.head_monomial());
  Polynomial left = mul_term(ring, p, field.inv(p.head_coeff()), quotient(l, p.head_monomial()));
  return add_scaled(ring, left, field.neg(field.inv(q.head_coeff())),
                    quotient(l, q.head_monomial()), q);
}

namespace {

struct Element {
  Polynomial poly;
  std::uint32_t sugar = 0;
  bool alive = true;
};

// Head-reduces p modulo `divisors` until its head is irreducible; the tail is
// not touched.
Polynomial top_reduce(const Ring& ring, Polynomial p, std::span<const Polynomial> divisors) {
  const PrimeField& field = ring.field();
  while (!p.is_zero()) {
    const Polynomial* reductor = nullptr;
    for (const Polynomial& g : divisors)
      if (divides(g.head_monomial(), p.head_monomial())) {
        reductor = &g;
        break;
      }
    if (reductor == nullptr) break;
    FieldElement c = field.div(p.head_coeff(), reductor->head_coeff());
    p = add_scaled(ring, p, field.neg(c), quotient(p.head_monomial(), reductor->head_monomial()),
                   *reductor);
  }
  return p;
}

}  // namespace

std::vector<Polynomial> buchberger(const Ring& ring, std::span<const Polynomial> generators,
                                   BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  // Every element ever created, indexed by id. Replaced elements stay in the
  // table as dead entries so that pair ids remain valid.
  std::vector<Element> elements;
  for (const Polynomial& g : generators)
    if (!g.is_zero()) elements.push_back({make_monic(ring, g), g.total_degree(), true});

  const MonomialOrder& order = ring.order();
  // priority_queue pops its greatest element, so "after" means "processed later".
  auto after = [&](const CriticalPair& a, const CriticalPair& b) {
    if (a.sugar != b.sugar) return a.sugar > b.sugar;
    if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c > 0;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  };
  std::priority_queue<CriticalPair, std::vector<CriticalPair>, decltype(after)> queue(after);

  auto alive_polys = [&](std::size_t skip) {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < elements.size(); ++k)
      if (k != skip && elements[k].alive) out.push_back(elements[k].poly);
    return out;
  };

  auto head_redundant = [&](std::size_t k) {
    const Monomial& hk = elements[k].poly.head_monomial();
    for (std::size_t q = 0; q < elements.size(); ++q)
      if (q != k && elements[q].alive && divides(elements[q].poly.head_monomial(), hk)) return true;
    return false;
  };

  // Keeps the live heads minimal: an element whose head is divisible by
  // another live head is replaced by its top reduction modulo the others,
  // until no such element is left. Full normal forms here swell badly on lex
  // inputs. Returns the ids created.
  auto minimalize = [&](std::size_t first_new) {
    std::vector<std::size_t> created;
    for (std::size_t k = first_new; k < elements.size(); ++k) created.push_back(k);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t k = 0; k < elements.size(); ++k) {
        if (!elements[k].alive || !head_redundant(k)) continue;
        Polynomial r = top_reduce(ring, elements[k].poly, alive_polys(k));
        changed = true;
        elements[k].alive = false;
        if (r.is_zero()) continue;
        const std::uint32_t sugar = std::max(elements[k].sugar, r.total_degree());
        elements.push_back({make_monic(ring, r), sugar, true});
        created.push_back(elements.size() - 1);
      }
    }
    return created;
  };

  auto add_pairs_for = [&](std::size_t j) {
    const Monomial& hj = elements[j].poly.head_monomial();
    for (std::size_t i = 0; i < j; ++i) {
      if (!elements[i].alive) continue;
      const Monomial& hi = elements[i].poly.head_monomial();
      ++st.pairs_generated;
      Monomial l = lcm(hi, hj);
      if (l == hi * hj) {
        ++st.pairs_skipped;
        continue;
      }
      std::uint32_t s = std::max(elements[i].sugar + (l.degree() - hi.degree()),
                                 elements[j].sugar + (l.degree() - hj.degree()));
      queue.push({i, j, std::move(l), s});
    }
  };
  auto add_pairs = [&](const std::vector<std::size_t>& created) {
    for (std::size_t j : created)
      if (elements[j].alive) add_pairs_for(j);
  };

  minimalize(0);
  for (std::size_t j = 0; j < elements.size(); ++j)
    if (elements[j].alive) add_pairs_for(j);

  std::vector<Polynomial> quotients;
  while (!queue.empty()) {
    CriticalPair pair = queue.top();
    queue.pop();
    if (!elements[pair.i].alive || !elements[pair.j].alive) continue;
    ++st.reductions;
    Polynomial s = s_polynomial(ring, elements[pair.i].poly, elements[pair.j].poly);
    Polynomial h = normal_form(ring, s, alive_polys(elements.size()), &quotients);
    for (const Polynomial& q : quotients) st.reduction_steps += q.size();
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    elements.push_back({make_monic(ring, h), std::max(pair.sugar, h.total_degree()), true});
    add_pairs(minimalize(elements.size() - 1));
  }
  return alive_polys(elements.size());
}

bool is_groebner_basis(const Ring& ring, std::span<const Polynomial> basis) {
  std::vector<Polynomial> g;
  for (const Polynomial& p : basis)
    if (!p.is_zero()) g.push_back(p);
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!normal_form(ring, s_polynomial(ring, g[i], g[j]), g).is_zero()) return false;
  return true;
}

bool ideal_membership(const Ring& ring, const Polynomial& p, std::span<const Polynomial> basis) {
  std::vector<Polynomial> g;
  for (const Polynomial& q : basis)
    if (!q.is_zero()) g.push_back(q);
  return normal_form(ring, p, g).is_zero();
}

bool certify_labeled(const Ring& ring, const LabeledPolynomial& h, const Polynomial& f,
                     std::span<const Polynomial> previous) {
  if (!h.cofactor) throw ContractError("certify_labeled: no cofactor tracked");
  if (!(h.cofactor->head() == h.signature)) return false;
  Polynomial residue = sub(ring, mul(ring, *h.cofactor, f), h.poly);
  return ideal_membership(ring, residue, previous);
}

}  // namespace ssg::oracle
