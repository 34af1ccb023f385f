#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclift/rational.hpp"

namespace cyclift {

using Exponent = std::vector<int>;

/// Graded reverse lexicographic comparison: true when a > b.
/// Both vectors must have the same length.
bool grevlex_greater(const Exponent& a, const Exponent& b);

struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const { return grevlex_greater(a, b); }
};

/// Ordered variable names, shared between all polynomials of one ring.
class Variables {
 public:
  Variables() = default;
  explicit Variables(std::vector<std::string> names);

  std::size_t size() const { return names_ ? names_->size() : 0; }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const Variables& a, const Variables& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Sparse multivariate polynomial over Q. Terms are kept in grevlex-descending
/// order with no zero coefficients, so begin() is the leading term.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrevlexGreater>;

  Polynomial() = default;
  explicit Polynomial(Variables vars) : vars_(std::move(vars)) {}

  static Polynomial constant(const Variables& vars, const Rational& c);
  static Polynomial variable(const Variables& vars, std::size_t index);
  static Polynomial monomial(const Variables& vars, Exponent exp, const Rational& c);

  const Variables& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;

  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  /// Adds c * x^exp in place.
  void add_term(const Exponent& exp, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial make_monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Deterministic text form, e.g. "x^2*y - 3/2*z + 1".
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;

  Variables vars_;
  TermMap terms_;
};

/// Quotient a / b when b divides a exactly, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Canonical order on polynomials of the same ring (for deterministic sorting).
bool canonical_less(const Polynomial& a, const Polynomial& b);

}  // namespace cyclift
