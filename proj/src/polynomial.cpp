#include "polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "error.hpp"

namespace gitfan {

// --- Monomial ---------------------------------------------------------------

Monomial Monomial::variable(std::size_t variable_count, std::size_t index) {
  Monomial m(variable_count);
  m.exponents_.at(index) = 1;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exponents_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) m.exponents_[i] += other.exponents_[i];
  return m;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial m(other);
  for (std::size_t i = 0; i < exponents_.size(); ++i) m.exponents_[i] -= exponents_[i];
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    m.exponents_[i] = std::max(m.exponents_[i], other.exponents_[i]);
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] && other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::extended(std::size_t variable_count) const {
  Monomial m(*this);
  m.exponents_.resize(variable_count, 0);
  return m;
}

bool DegRevLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da > db;
  for (std::size_t i = a.variable_count(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// --- Polynomial -------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t variable_count, const Rational& c) {
  return term(Monomial(variable_count), c);
}

Polynomial Polynomial::variable(std::size_t variable_count, std::size_t index) {
  return term(Monomial::variable(variable_count, index), 1);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.variable_count());
  p.add_term(m, c);
  return p;
}

std::vector<std::string> Polynomial::default_names(std::size_t variable_count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < variable_count; ++i) names.push_back("T" + std::to_string(i + 1));
  return names;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.variable_count() != variable_count_) {
    throw Error(ErrorKind::Contract, "monomial has the wrong number of variables");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.variable_count_ != variable_count_) throw Error(ErrorKind::Contract, "polynomial ring mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.variable_count_ != variable_count_) throw Error(ErrorKind::Contract, "polynomial ring mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(variable_count_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variable_count_ != b.variable_count_) throw Error(ErrorKind::Contract, "polynomial ring mismatch");
  Polynomial p(a.variable_count_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(variable_count_, 1);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

Polynomial Polynomial::extended(std::size_t variable_count) const {
  Polynomial p(variable_count);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m.extended(variable_count), c);
  return p;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = negative ? -c : c;
    const bool unit = magnitude == Rational(1);
    if (m.is_one()) {
      out << magnitude.to_string();
      continue;
    }
    if (!unit) out << magnitude.to_string() << '*';
    bool first_factor = true;
    for (std::size_t i = 0; i < m.variable_count(); ++i) {
      if (m[i] == 0) continue;
      if (!first_factor) out << '*';
      first_factor = false;
      out << names.at(i);
      if (m[i] > 1) out << '^' << m[i];
    }
  }
  return out.str();
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  Polynomial parse() {
    Polynomial result(names_.size());
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      result.add_term(m, sign < 0 ? -c : c);
      skip_space();
      if (at_end()) break;
    }
    return result;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Monomial m(names_.size());
    Rational c = 1;
    while (true) {
      skip_space();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string num = digits();
        skip_space();
        if (peek() == '/') {
          take();
          skip_space();
          num += "/" + digits();
        }
        c *= Rational::parse(num);
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        const std::string name = identifier();
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) fail("unknown variable '" + name + "'");
        std::uint32_t exponent = 1;
        skip_space();
        if (peek() == '^') {
          take();
          skip_space();
          const std::string e = digits();
          if (e.size() > 6) fail("exponent too large");
          exponent = static_cast<std::uint32_t>(std::stoul(e));
        }
        m = m * Monomial(exponent_vector(static_cast<std::size_t>(it - names_.begin()), exponent));
      } else {
        fail("expected a coefficient or a variable");
      }
      skip_space();
      if (peek() != '*') break;
      take();
    }
    return {m, c};
  }

  std::vector<std::uint32_t> exponent_vector(std::size_t index, std::uint32_t e) const {
    std::vector<std::uint32_t> v(names_.size(), 0);
    v[index] = e;
    return v;
  }

  std::string digits() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += take();
    if (s.empty()) fail("expected digits");
    return s;
  }

  std::string identifier() {
    std::string s;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') s += take();
    return s;
  }

  void skip_space() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse,
                "cannot parse polynomial '" + text_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  const std::string& text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& names) {
  return PolynomialParser(text, names).parse();
}

Polynomial substitute_subset(const Polynomial& q, const std::vector<bool>& keep) {
  if (keep.size() != q.variable_count()) throw Error(ErrorKind::Contract, "subset mask has the wrong length");
  Polynomial out(q.variable_count());
  for (const auto& [m, c] : q.terms()) {
    bool survives = true;
    for (std::size_t i = 0; i < m.variable_count() && survives; ++i)
      if (m[i] > 0 && !keep[i]) survives = false;
    if (survives) out.add_term(m, c);
  }
  return out;
}

Polynomial subset_monomial(std::size_t variable_count, const std::vector<bool>& subset) {
  if (subset.size() != variable_count) throw Error(ErrorKind::Contract, "subset mask has the wrong length");
  std::vector<std::uint32_t> e(variable_count, 0);
  for (std::size_t i = 0; i < variable_count; ++i) e[i] = subset[i] ? 1 : 0;
  return Polynomial::term(Monomial(std::move(e)), 1);
}

}  // namespace gitfan
