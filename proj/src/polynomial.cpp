#include "cyclift/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclift {

bool grevlex_greater(const Exponent& a, const Exponent& b) {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Variables::Variables(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    for (std::size_t j = i + 1; j < names_->size(); ++j) {
      if ((*names_)[i] == (*names_)[j]) {
        throw std::invalid_argument("duplicate variable name '" + (*names_)[i] + "'");
      }
    }
  }
}

const std::vector<std::string>& Variables::names() const {
  static const std::vector<std::string> empty;
  return names_ ? *names_ : empty;
}

std::optional<std::size_t> Variables::index_of(const std::string& name) const {
  const auto& ns = names();
  auto it = std::find(ns.begin(), ns.end(), name);
  if (it == ns.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ns.begin());
}

bool operator==(const Variables& a, const Variables& b) {
  if (a.names_ == b.names_) return true;
  return a.names() == b.names();
}

Polynomial Polynomial::constant(const Variables& vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term(Exponent(vars.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const Variables& vars, std::size_t index) {
  Exponent e(vars.size(), 0);
  e.at(index) = 1;
  return monomial(vars, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(const Variables& vars, Exponent exp, const Rational& c) {
  if (exp.size() != vars.size()) throw std::invalid_argument("exponent length mismatch");
  Polynomial p(vars);
  p.add_term(exp, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(leading_exponent().begin(), leading_exponent().end(),
                      [](int e) { return e == 0; }));
}

Rational Polynomial::constant_term() const {
  if (terms_.empty()) return Rational(0);
  // The constant monomial is the grevlex-smallest, so it sits at the end.
  const auto& [exp, c] = *terms_.rbegin();
  for (int e : exp) {
    if (e != 0) return Rational(0);
  }
  return c;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = leading_exponent();
  return std::accumulate(e.begin(), e.end(), 0);
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [exp, c] : terms_) d = std::max(d, exp[var]);
  return d;
}

void Polynomial::add_term(const Exponent& exp, const Rational& c) {
  if (cyclift::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (cyclift::is_zero(it->second)) terms_.erase(it);
  }
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!(vars_ == o.vars_)) throw std::invalid_argument("polynomials over different variable lists");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (vars_.size() == 0 && terms_.empty()) vars_ = o.vars_;
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (vars_.size() == 0 && terms_.empty()) vars_ = o.vars_;
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (cyclift::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.vars_);
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(vars_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(vars_);
  for (const auto& [exp, c] : terms_) {
    if (exp[var] == 0) continue;
    Exponent e = exp;
    --e[var];
    r.add_term(e, c * exp[var]);
  }
  return r;
}

Polynomial Polynomial::make_monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool has_vars = std::any_of(exp.begin(), exp.end(), [](int v) { return v != 0; });
    bool wrote = false;
    if (!has_vars || mag != 1) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (wrote) out << "*";
      out << vars_.name(i);
      if (exp[i] > 1) out << "^" << exp[i];
      wrote = true;
    }
  }
  return out.str();
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial quotient(b.vars());
  Polynomial rem = a;
  const Exponent& lb = b.leading_exponent();
  const Rational& cb = b.leading_coefficient();
  Exponent shift(lb.size());
  // {b} is a Groebner basis of (b), so a non-divisible leading term means a
  // nonzero remainder.
  while (!rem.is_zero()) {
    const Exponent& lr = rem.leading_exponent();
    for (std::size_t i = 0; i < lb.size(); ++i) {
      shift[i] = lr[i] - lb[i];
      if (shift[i] < 0) return std::nullopt;
    }
    Polynomial t = Polynomial::monomial(b.vars(), shift, rem.leading_coefficient() / cb);
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return grevlex_greater(ib->first, ia->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

}  // namespace cyclift
