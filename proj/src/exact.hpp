#pragma once

// Exact rational and integer linear algebra. Everything here is backed by
// GMP; no machine-width arithmetic is used for values.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gitfan {

using Integer = mpz_class;

/// Reduced fraction with positive denominator. Canonical on construction.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);

  /// Accepts "n" or "n/d" with optional leading sign.
  static Rational parse(const std::string& text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return value_.get_str(); }

 private:
  explicit Rational(mpq_class canonical) : value_(std::move(canonical)) {}

  mpq_class value_;
};

/// Fixed-length vector of arbitrary-precision integers. Ordered lexicographically.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t length) : entries_(length, 0) {}
  explicit IntVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  IntVector(std::initializer_list<long> entries);

  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_nonnegative() const;

  IntVector& operator+=(const IntVector& o);
  IntVector& operator-=(const IntVector& o);
  IntVector operator-() const;
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(const Integer& k, const IntVector& v);

  friend bool operator==(const IntVector& a, const IntVector& b) { return a.entries_ == b.entries_; }
  friend std::strong_ordering operator<=>(const IntVector& a, const IntVector& b);

  /// "(4,1)"
  std::string to_string() const;

 private:
  std::vector<Integer> entries_;
};

Integer dot(const IntVector& a, const IntVector& b);

/// v divided by the gcd of its entries. Throws Contract on the zero vector.
IntVector primitive(const IntVector& v);

/// Smallest positive integer multiple of a rational vector, made primitive.
/// Direction is preserved; the zero vector maps to the zero vector.
IntVector integral_direction(const std::vector<Rational>& v);

/// Row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static RatMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  RatMatrix transpose() const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RowEchelon {
  RatMatrix reduced;                // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each remaining row
};

RowEchelon reduced_row_echelon(RatMatrix mat);

std::size_t rank(const RatMatrix& mat);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols);

struct LinearSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;
};

/// Solves mat * x = rhs. Returns nullopt iff the system is inconsistent.
std::optional<LinearSolution> solve_linear(const RatMatrix& mat, const std::vector<Rational>& rhs);

/// Basis of {x : rows * x = 0}, each basis vector primitive and integral.
std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t cols);

/// Canonical basis of span(rows): reduced row echelon rows scaled to primitive integers.
std::vector<IntVector> canonical_span_basis(const std::vector<IntVector>& rows, std::size_t cols);

/// Reduces v modulo the span of a canonical basis (as returned by
/// canonical_span_basis): zeroes v at every pivot column. Result is scaled to be
/// primitive unless it vanishes.
IntVector reduce_modulo(const IntVector& v, const std::vector<IntVector>& canonical_basis);

}  // namespace gitfan
