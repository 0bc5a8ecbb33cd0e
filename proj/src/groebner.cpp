#include "groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "error.hpp"

namespace gitfan {

MonomialOrder MonomialOrder::lex(std::size_t variable_count) {
  std::vector<std::size_t> p(variable_count);
  std::iota(p.begin(), p.end(), 0);
  return {Kind::Lex, std::move(p)};
}

MonomialOrder MonomialOrder::degrevlex(std::size_t variable_count) {
  std::vector<std::size_t> p(variable_count);
  std::iota(p.begin(), p.end(), 0);
  return {Kind::DegRevLex, std::move(p)};
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw Error(ErrorKind::Contract, "monomial order priority is not a permutation");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::Lex) {
    for (auto v : priority_)
      if (a[v] != b[v]) return a[v] <=> b[v];
    return std::strong_ordering::equal;
  }
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it)
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  return std::strong_ordering::equal;
}

namespace {

// Working representation: terms sorted by descending monomial order.
using Term = std::pair<Monomial, Rational>;
using Sorted = std::vector<Term>;

Sorted to_sorted(const Polynomial& p, const MonomialOrder& order) {
  Sorted s(p.terms().begin(), p.terms().end());
  std::sort(s.begin(), s.end(), [&](const Term& a, const Term& b) { return order.compare(a.first, b.first) > 0; });
  return s;
}

Polynomial from_sorted(const Sorted& s, std::size_t variable_count) {
  Polynomial p(variable_count);
  for (const auto& [m, c] : s) p.add_term(m, c);
  return p;
}

// a - c * m * b, all sorted.
Sorted sub_scaled(const Sorted& a, const Rational& c, const Monomial& m, const Sorted& b,
                  const MonomialOrder& order) {
  Sorted out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = m * b[j].first;
    if (i == a.size()) {
      out.emplace_back(std::move(mb), -(c * b[j].second));
      ++j;
      continue;
    }
    const auto cmp = order.compare(a[i].first, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.emplace_back(std::move(mb), -(c * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Sorted& s) {
  if (s.empty()) return;
  const Rational inv = Rational(1) / s.front().second;
  for (auto& t : s) t.second *= inv;
}

// Full reduction of f modulo `basis`; the skip index excludes one element.
Sorted reduce(Sorted f, const std::vector<Sorted>& basis, const MonomialOrder& order,
              std::size_t skip = static_cast<std::size_t>(-1)) {
  Sorted remainder;
  while (!f.empty()) {
    const Term lead = f.front();
    bool divided = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      const auto& g = basis[k];
      if (!g.front().first.divides(lead.first)) continue;
      f = sub_scaled(f, lead.second / g.front().second, g.front().first.quotient_of(lead.first), g, order);
      divided = true;
      break;
    }
    if (!divided) {
      remainder.push_back(lead);
      f.erase(f.begin());
    }
  }
  return remainder;
}

Sorted spoly(const Sorted& f, const Sorted& g, const MonomialOrder& order) {
  const Monomial l = f.front().first.lcm(g.front().first);
  Sorted a = sub_scaled({}, Rational(-1) / f.front().second, f.front().first.quotient_of(l), f, order);
  return sub_scaled(a, Rational(1) / g.front().second, g.front().first.quotient_of(l), g, order);
}

bool is_unit(const Sorted& s) { return s.size() == 1 && s.front().first.is_one(); }

}  // namespace

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorKind::Contract, "leading monomial of the zero polynomial");
  return to_sorted(f, order).front().first;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::Contract, "S-polynomial of the zero polynomial");
  return from_sorted(spoly(to_sorted(f, order), to_sorted(g, order), order), f.variable_count());
}

Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
  const std::size_t n = ideal.variable_count;
  if (order.variable_count() != n) throw Error(ErrorKind::Contract, "monomial order has the wrong number of variables");
  std::vector<Sorted> basis;
  for (const auto& g : ideal.generators) {
    if (g.variable_count() != n) throw Error(ErrorKind::Contract, "generator lives in a different ring");
    Sorted s = to_sorted(g, order);
    if (s.empty()) continue;
    make_monic(s);
    if (is_unit(s)) return {n, {Polynomial::constant(n, 1)}};
    basis.push_back(std::move(s));
  }

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

  auto chain_skip = [&](std::size_t i, std::size_t j, const Monomial& l) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].front().first.divides(l)) continue;
      if (pending.count({std::min(i, k), std::max(i, k)}) || pending.count({std::min(j, k), std::max(j, k)})) continue;
      return true;
    }
    return false;
  };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm first, ties broken by index for determinism.
    auto best = pending.begin();
    Monomial best_lcm = basis[best->first].front().first.lcm(basis[best->second].front().first);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = basis[it->first].front().first.lcm(basis[it->second].front().first);
      if (order.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);
    const Monomial& li = basis[i].front().first;
    const Monomial& lj = basis[j].front().first;
    if (li.coprime(lj)) continue;
    if (chain_skip(i, j, best_lcm)) continue;

    Sorted r = reduce(spoly(basis[i], basis[j], order), basis, order);
    if (r.empty()) continue;
    make_monic(r);
    if (is_unit(r)) return {n, {Polynomial::constant(n, 1)}};
    basis.push_back(std::move(r));
    const std::size_t k = basis.size() - 1;
    for (std::size_t m = 0; m < k; ++m) pending.emplace(m, k);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const auto& lj = basis[j].front().first;
      const auto& li = basis[i].front().first;
      if (lj.divides(li) && (lj != li || j < i)) keep[i] = false;
    }
  }
  std::vector<Sorted> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Sorted r = reduce(minimal[i], minimal, order, i);
    make_monic(r);
    minimal[i] = std::move(r);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Sorted& a, const Sorted& b) { return order.compare(a.front().first, b.front().first) > 0; });

  Ideal out{n, {}};
  for (const auto& s : minimal) out.generators.push_back(from_sorted(s, n));
  return out;
}

Polynomial normal_form(const Polynomial& f, const Ideal& basis, const MonomialOrder& order) {
  std::vector<Sorted> g;
  for (const auto& p : basis.generators) g.push_back(to_sorted(p, order));
  return from_sorted(reduce(to_sorted(f, order), g, order), f.variable_count());
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order) {
  return normal_form(f, groebner_basis(ideal, order), order).is_zero();
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  return ideal_membership(f, ideal, MonomialOrder::degrevlex(ideal.variable_count));
}

bool is_unit_basis(const Ideal& basis) {
  return basis.generators.size() == 1 && basis.generators.front().is_constant() &&
         !basis.generators.front().is_zero();
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  if (f.variable_count() != ideal.variable_count) throw Error(ErrorKind::Contract, "polynomial ring mismatch");
  if (f.is_zero()) return true;
  const std::size_t n = ideal.variable_count + 1;
  Ideal extended{n, {}};
  for (const auto& g : ideal.generators) extended.generators.push_back(g.extended(n));
  const Polynomial t = Polynomial::variable(n, n - 1);
  extended.generators.push_back(Polynomial::constant(n, 1) - t * f.extended(n));
  return is_unit_basis(groebner_basis(extended, MonomialOrder::degrevlex(n)));
}

}  // namespace gitfan
