#include "exact.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace gitfan {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Contract: return "contract-violation";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Invalid: return "invalid-presentation";
    case ErrorKind::Dimension: return "dimension-refused";
    case ErrorKind::Unbounded: return "unbounded-fibers";
    case ErrorKind::SubsetCap: return "subset-cap-exceeded";
    case ErrorKind::Domain: return "outside-weight-cone";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Internal: return "internal-error";
  }
  return "unknown";
}

// --- Rational ---------------------------------------------------------------

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw Error(ErrorKind::Contract, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::Contract, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                          [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorKind::Parse, "malformed number '" + text + "'");
    }
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const std::string den = text.substr(slash + 1);
  if (!den.empty() && (den[0] == '-' || den[0] == '+')) {
    throw Error(ErrorKind::Parse, "malformed number '" + text + "'");
  }
  return Rational(parse_int(text.substr(0, slash)), parse_int(den));
}

// --- IntVector --------------------------------------------------------------

IntVector::IntVector(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long e : entries) entries_.emplace_back(e);
}

bool IntVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return e == 0; });
}

bool IntVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return e >= 0; });
}

static void require_same_length(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::Contract, "vector length mismatch: " + std::to_string(a.size()) +
                                         " vs " + std::to_string(b.size()));
  }
}

IntVector& IntVector::operator+=(const IntVector& o) {
  require_same_length(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& o) {
  require_same_length(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

IntVector IntVector::operator-() const {
  IntVector r(*this);
  for (auto& e : r.entries_) e = -e;
  return r;
}

IntVector operator*(const Integer& k, const IntVector& v) {
  IntVector r(v);
  for (auto& e : r.entries_) e *= k;
  return r;
}

std::strong_ordering operator<=>(const IntVector& a, const IntVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string IntVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i].get_str();
  }
  out << ')';
  return out.str();
}

Integer dot(const IntVector& a, const IntVector& b) {
  require_same_length(a, b);
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& e : v.entries()) g = gcd(g, e);
  if (g == 0) throw Error(ErrorKind::Contract, "primitive() of the zero vector");
  if (g == 1) return v;
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVector integral_direction(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.denominator());
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].numerator() * (l / v[i].denominator());
  return r.is_zero() ? r : primitive(r);
}

// --- RatMatrix --------------------------------------------------------------

RatMatrix RatMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorKind::Contract, "row " + std::to_string(i) + " has length " +
                                           std::to_string(rows[i].size()) + ", expected " +
                                           std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rows[i][j]);
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::Contract, "matrix-vector dimension mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

RowEchelon reduced_row_echelon(RatMatrix mat) {
  const std::size_t rows = mat.rows();
  const std::size_t cols = mat.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && mat(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(mat(p, j), mat(r, j));
    const Rational inv = Rational(1) / mat(r, c);
    for (std::size_t j = c; j < cols; ++j) mat(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || mat(i, c).is_zero()) continue;
      const Rational f = mat(i, c);
      for (std::size_t j = c; j < cols; ++j) mat(i, j) -= f * mat(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RatMatrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = mat(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RatMatrix& mat) { return reduced_row_echelon(mat).pivots.size(); }

std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(RatMatrix::from_rows(rows, cols));
}

std::optional<LinearSolution> solve_linear(const RatMatrix& mat, const std::vector<Rational>& rhs) {
  if (rhs.size() != mat.rows()) {
    throw Error(ErrorKind::Contract, "right-hand side has length " + std::to_string(rhs.size()) +
                                         ", matrix has " + std::to_string(mat.rows()) + " rows");
  }
  const std::size_t n = mat.cols();
  RatMatrix aug(mat.rows(), n + 1);
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = mat(i, j);
    aug(i, n) = rhs[i];
  }
  const RowEchelon ech = reduced_row_echelon(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == n) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(n, Rational());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    sol.particular[ech.pivots[i]] = ech.reduced(i, n);
    is_pivot[ech.pivots[i]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> k(n);
    k[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) k[ech.pivots[i]] = -ech.reduced(i, f);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t cols) {
  const RatMatrix m = rows.empty() ? RatMatrix(0, cols) : RatMatrix::from_rows(rows, cols);
  const auto sol = solve_linear(m, std::vector<Rational>(m.rows()));
  std::vector<IntVector> out;
  for (const auto& k : sol->kernel) out.push_back(integral_direction(k));
  return out;
}

std::vector<IntVector> canonical_span_basis(const std::vector<IntVector>& rows, std::size_t cols) {
  if (rows.empty()) return {};
  const RowEchelon ech = reduced_row_echelon(RatMatrix::from_rows(rows, cols));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < ech.reduced.rows(); ++i) {
    std::vector<Rational> row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = ech.reduced(i, j);
    out.push_back(integral_direction(row));
  }
  return out;
}

IntVector reduce_modulo(const IntVector& v, const std::vector<IntVector>& canonical_basis) {
  IntVector r = v;
  for (const auto& b : canonical_basis) {
    std::size_t p = 0;
    while (p < b.size() && b[p] == 0) ++p;
    if (p == b.size() || r[p] == 0) continue;
    // b[p] > 0 for rows produced by canonical_span_basis.
    const Integer scale = b[p];
    const Integer coeff = r[p];
    r = scale * r - coeff * b;
  }
  return r.is_zero() ? r : primitive(r);
}

}  // namespace gitfan
