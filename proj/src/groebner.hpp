#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "polynomial.hpp"

namespace gitfan {

/// Lexicographic or graded reverse lexicographic order. `priority` lists the
/// variable indices from most to least significant (T1 > T2 > ... by default).
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex };

  static MonomialOrder lex(std::size_t variable_count);
  static MonomialOrder degrevlex(std::size_t variable_count);
  MonomialOrder(Kind kind, std::vector<std::size_t> priority);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t variable_count() const { return priority_.size(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

 private:
  Kind kind_;
  std::vector<std::size_t> priority_;
};

struct Ideal {
  std::size_t variable_count = 0;
  std::vector<Polynomial> generators;
};

/// Reduced Groebner basis (Buchberger with the coprime and chain criteria).
/// Generators are monic and sorted by descending leading monomial; the zero
/// ideal yields an empty basis and the unit ideal yields {1}.
Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order);

/// Remainder of multivariate division by `basis`.
Polynomial normal_form(const Polynomial& f, const Ideal& basis, const MonomialOrder& order);

/// Leading monomial of a nonzero polynomial under `order`.
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);
bool ideal_membership(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order);

/// f in sqrt(I), decided by the Rabinowitsch trick: 1 in I + <1 - t*f> with t
/// a fresh variable appended after the existing ones.
bool radical_membership(const Polynomial& f, const Ideal& ideal);

/// The basis is {1}.
bool is_unit_basis(const Ideal& basis);

}  // namespace gitfan
