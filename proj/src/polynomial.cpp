#include "ssg/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

// p + k*t*q over raw sorted term ranges.
std::vector<Term> merge_scaled(const Ring& ring, std::span<const Term> p, FieldElement k,
                               const Monomial& t, std::span<const Term> q) {
  if (k.is_zero() || q.empty()) return {p.begin(), p.end()};
  const PrimeField& field = ring.field();
  const MonomialOrder& order = ring.order();
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0;
  for (const Term& qt : q) {
    Monomial m = t * qt.mono;
    FieldElement c = field.mul(k, qt.coeff);
    while (i < p.size() && order.less(m, p[i].mono)) out.push_back(p[i++]);
    if (i < p.size() && p[i].mono == m) {
      FieldElement s = field.add(p[i].coeff, c);
      if (!s.is_zero()) out.push_back({s, std::move(m)});
      ++i;
    } else {
      out.push_back({c, std::move(m)});
    }
  }
  out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
  return out;
}

}  // namespace

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  const MonomialOrder& order = ring.order();
  for (const Term& t : terms)
    if (t.mono.nvars() != ring.nvars()) throw ContractError("term arity does not match ring");
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term& a, const Term& b) { return order.less(b.mono, a.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = ring.field().add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial Polynomial::from_sorted_terms(const Ring& ring, std::vector<Term> terms) {
  Polynomial p(std::move(terms));
  assert(p.is_normalized(ring));
  (void)ring;
  return p;
}

Polynomial Polynomial::constant(const Ring& ring, FieldElement c) {
  if (c.is_zero()) return {};
  return Polynomial({{c, ring.one()}});
}

Polynomial Polynomial::term(const Ring& ring, FieldElement c, Monomial m) {
  if (m.nvars() != ring.nvars()) throw ContractError("term arity does not match ring");
  if (c.is_zero()) return {};
  return Polynomial({{c, std::move(m)}});
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_normalized(const Ring& ring) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff.is_zero() || terms_[i].coeff.value() >= ring.field().modulus()) return false;
    if (terms_[i].mono.nvars() != ring.nvars()) return false;
    if (i > 0 && !ring.order().less(terms_[i].mono, terms_[i - 1].mono)) return false;
  }
  return true;
}

std::pair<Monomial0, FieldElement> leading(const Polynomial& p) {
  return {p.head(), p.head_coeff()};
}

Polynomial add_scaled(const Ring& ring, const Polynomial& p, FieldElement k, const Monomial& t,
                      const Polynomial& q) {
  return Polynomial::from_sorted_terms(ring, merge_scaled(ring, p.terms(), k, t, q.terms()));
}

Polynomial add(const Ring& ring, const Polynomial& p, const Polynomial& q) {
  return add_scaled(ring, p, ring.field().one(), ring.one(), q);
}

Polynomial sub(const Ring& ring, const Polynomial& p, const Polynomial& q) {
  return add_scaled(ring, p, ring.field().neg(ring.field().one()), ring.one(), q);
}

Polynomial scale(const Ring& ring, const Polynomial& p, FieldElement k) {
  return mul_term(ring, p, k, ring.one());
}

Polynomial mul_term(const Ring& ring, const Polynomial& p, FieldElement k, const Monomial& t) {
  if (k.is_zero()) return {};
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& pt : p.terms()) out.push_back({ring.field().mul(k, pt.coeff), t * pt.mono});
  return Polynomial::from_sorted_terms(ring, std::move(out));
}

Polynomial mul(const Ring& ring, const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const Term& t : q.terms()) out = add_scaled(ring, out, t.coeff, t.mono, p);
  return out;
}

Polynomial make_monic(const Ring& ring, const Polynomial& p) {
  if (p.is_zero() || p.head_coeff() == ring.field().one()) return p;
  return scale(ring, p, ring.field().inv(p.head_coeff()));
}

Polynomial normal_form(const Ring& ring, const Polynomial& p, std::span<const Polynomial> divisors,
                       std::vector<Polynomial>* quotients) {
  const PrimeField& field = ring.field();
  std::vector<std::size_t> by_head(divisors.size());
  std::iota(by_head.begin(), by_head.end(), std::size_t{0});
  for (const Polynomial& g : divisors)
    if (g.is_zero()) throw ContractError("normal_form: zero divisor");
  std::stable_sort(by_head.begin(), by_head.end(), [&](std::size_t a, std::size_t b) {
    return ring.order().less(divisors[a].head_monomial(), divisors[b].head_monomial());
  });

  std::vector<std::vector<Term>> quotient_terms(quotients ? divisors.size() : 0);
  std::vector<Term> current(p.terms().begin(), p.terms().end());
  std::vector<Term> remainder;
  std::size_t pos = 0;
  while (pos < current.size()) {
    const Term& lead = current[pos];
    const Polynomial* reductor = nullptr;
    std::size_t which = 0;
    for (std::size_t idx : by_head) {
      if (divides(divisors[idx].head_monomial(), lead.mono)) {
        reductor = &divisors[idx];
        which = idx;
        break;
      }
    }
    if (reductor == nullptr) {
      remainder.push_back(lead);
      ++pos;
      continue;
    }
    FieldElement c = field.div(lead.coeff, reductor->head_coeff());
    Monomial t = quotient(lead.mono, reductor->head_monomial());
    if (quotients) quotient_terms[which].push_back({c, t});
    auto tail = std::span<const Term>(current).subspan(pos);
    current = merge_scaled(ring, tail, field.neg(c), t, reductor->terms());
    pos = 0;
  }
  if (quotients) {
    quotients->clear();
    for (auto& qt : quotient_terms) quotients->push_back(Polynomial::from_terms(ring, std::move(qt)));
  }
  return Polynomial::from_sorted_terms(ring, std::move(remainder));
}

std::vector<Polynomial> interreduce(const Ring& ring, std::span<const Polynomial> basis) {
  std::vector<Polynomial> g;
  for (const Polynomial& p : basis)
    if (!p.is_zero()) g.push_back(make_monic(ring, p));
  // Autoreduce: replace each element by its normal form modulo the others
  // until nothing changes. Elements reducing to zero are dropped.
  std::vector<Polynomial> others;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < g.size();) {
      others.clear();
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      Polynomial r = normal_form(ring, g[i], others);
      if (r == g[i]) {
        ++i;
        continue;
      }
      changed = true;
      if (r.is_zero()) {
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        g[i] = make_monic(ring, r);
        ++i;
      }
    }
  }
  std::stable_sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring.order().less(a.head_monomial(), b.head_monomial());
  });
  return g;
}

}  // namespace ssg
