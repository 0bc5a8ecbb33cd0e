#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "exact.hpp"

namespace gitfan {

/// Exponent vector of a monomial in r variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t variable_count) : exponents_(variable_count, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  static Monomial variable(std::size_t variable_count, std::size_t index);

  std::size_t variable_count() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  std::uint64_t total_degree() const;
  bool is_one() const { return total_degree() == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Copy with additional variables of exponent zero appended.
  Monomial extended(std::size_t variable_count) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Graded reverse lexicographic order with T1 > T2 > ... > Tr; strict "greater".
struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial over Q. Terms are kept in descending degrevlex order and never
/// carry a zero coefficient.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, DegRevLexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t variable_count) : variable_count_(variable_count) {}

  static Polynomial constant(std::size_t variable_count, const Rational& c);
  static Polynomial variable(std::size_t variable_count, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c);

  /// Parses e.g. "3*T1^2*T4 - T2*T3" or "1/2*x*y + 5". Variable names are
  /// looked up in `names`.
  static Polynomial parse(const std::string& text, const std::vector<std::string>& names);

  /// Default names T1..Tr.
  static std::vector<std::string> default_names(std::size_t variable_count);

  std::size_t variable_count() const { return variable_count_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint64_t total_degree() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned k) const;

  /// Same polynomial in a ring with more variables.
  Polynomial extended(std::size_t variable_count) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const { return to_string(default_names(variable_count_)); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.variable_count_ == b.variable_count_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t variable_count_ = 0;
  Terms terms_;
};

/// Sets every variable outside `keep` to zero; indices are not renumbered.
Polynomial substitute_subset(const Polynomial& q, const std::vector<bool>& keep);

/// Product of the variables flagged in `subset` (the constant 1 for the empty set).
Polynomial subset_monomial(std::size_t variable_count, const std::vector<bool>& subset);

}  // namespace gitfan
