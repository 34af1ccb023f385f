#include "cyclift/local_ring.hpp"

#include <stdexcept>

#include "cyclift/errors.hpp"

namespace cyclift {

PrimePoint PrimePoint::origin(const Variables& vars) {
  std::vector<Polynomial> coords;
  for (std::size_t i = 0; i < vars.size(); ++i) coords.push_back(Polynomial::variable(vars, i));
  IdealBasis ideal = groebner_basis(IdealBasis(vars, std::move(coords)));
  return PrimePoint(std::make_shared<const Data>(Data{Kind::MaximalOrigin, {}, std::move(ideal)}));
}

PrimePoint PrimePoint::sequence(std::vector<Polynomial> generators) {
  if (generators.empty()) throw std::invalid_argument("sequence prime needs at least one generator");
  const Variables vars = generators.front().vars();
  if (!is_regular_sequence(generators, vars.size())) {
    std::string s;
    for (const auto& g : generators) s += (s.empty() ? "" : ", ") + g.to_string();
    throw NotRegularSequence("(" + s + ") is not a regular sequence");
  }
  IdealBasis ideal = groebner_basis(IdealBasis(vars, generators));
  return PrimePoint(
      std::make_shared<const Data>(Data{Kind::SequencePrime, std::move(generators), std::move(ideal)}));
}

bool PrimePoint::contains(const Polynomial& f) const {
  if (kind() == Kind::MaximalOrigin) return sgn(f.constant_term()) == 0;
  return ideal_member(f, ideal());
}

bool operator==(const PrimePoint& a, const PrimePoint& b) {
  if (a.data_ == b.data_) return true;
  return a.kind() == b.kind() && a.vars() == b.vars() && a.generators() == b.generators();
}

std::string PrimePoint::to_string() const {
  if (kind() == Kind::MaximalOrigin) return "origin";
  std::string s = "(";
  for (std::size_t i = 0; i < generators().size(); ++i) {
    if (i) s += ", ";
    s += generators()[i].to_string();
  }
  return s + ")";
}

LocalFraction::LocalFraction(Polynomial numerator, Polynomial denominator, PrimePoint locus)
    : num_(std::move(numerator)), den_(std::move(denominator)), locus_(std::move(locus)) {
  if (den_.is_zero()) throw InvalidFraction("zero denominator");
  if (locus_.contains(den_)) {
    throw InvalidFraction("denominator " + den_.to_string() + " lies in the locus " +
                          locus_.to_string());
  }
  normalize();
}

LocalFraction::LocalFraction(Polynomial numerator, Polynomial denominator, PrimePoint locus,
                             Unchecked)
    : num_(std::move(numerator)), den_(std::move(denominator)), locus_(std::move(locus)) {
  normalize();
}

LocalFraction LocalFraction::from_polynomial(Polynomial p, PrimePoint locus) {
  Polynomial one = Polynomial::constant(locus.vars(), Rational(1));
  return LocalFraction(std::move(p), std::move(one), std::move(locus), Unchecked{});
}

LocalFraction LocalFraction::zero(const PrimePoint& locus) {
  return from_polynomial(Polynomial(locus.vars()), locus);
}

LocalFraction LocalFraction::one(const PrimePoint& locus) {
  return from_polynomial(Polynomial::constant(locus.vars(), Rational(1)), locus);
}

void LocalFraction::normalize() {
  const Variables& vars = locus_.vars();
  if (num_.is_zero()) {
    num_ = Polynomial(vars);
    den_ = Polynomial::constant(vars, Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    if (auto q = divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = Polynomial::constant(vars, Rational(1));
      return;
    }
  }
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

void LocalFraction::check_locus(const LocalFraction& o) const {
  if (locus_ != o.locus_) throw std::invalid_argument("fractions at different loci");
}

LocalFraction LocalFraction::operator-() const {
  return LocalFraction(-num_, den_, locus_, Unchecked{});
}

LocalFraction operator+(const LocalFraction& a, const LocalFraction& b) {
  a.check_locus(b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  if (a.den_ == b.den_) return LocalFraction(a.num_ + b.num_, a.den_, a.locus_, LocalFraction::Unchecked{});
  if (b.den_.is_constant()) {
    return LocalFraction(a.num_ + b.num_ * a.den_, a.den_, a.locus_, LocalFraction::Unchecked{});
  }
  if (a.den_.is_constant()) {
    return LocalFraction(a.num_ * b.den_ + b.num_, b.den_, a.locus_, LocalFraction::Unchecked{});
  }
  // Products of elements outside a prime stay outside it.
  return LocalFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.locus_,
                       LocalFraction::Unchecked{});
}

LocalFraction operator-(const LocalFraction& a, const LocalFraction& b) { return a + (-b); }

LocalFraction operator*(const LocalFraction& a, const LocalFraction& b) {
  a.check_locus(b);
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  return LocalFraction(a.num_ * b.num_, a.den_ * b.den_, a.locus_, LocalFraction::Unchecked{});
}

LocalFraction operator*(const LocalFraction& a, const Rational& c) {
  return LocalFraction(a.num_ * c, a.den_, a.locus_, LocalFraction::Unchecked{});
}

LocalFraction LocalFraction::times(const Polynomial& p) const {
  return LocalFraction(num_ * p, den_, locus_, Unchecked{});
}

LocalFraction LocalFraction::inverse() const {
  if (!is_unit()) {
    throw NonUnitError(to_string() + " is not a unit at " + locus_.to_string());
  }
  return LocalFraction(den_, num_, locus_, Unchecked{});
}

LocalFraction LocalFraction::at(const PrimePoint& locus) const {
  return LocalFraction(num_, den_, locus);
}

bool operator==(const LocalFraction& a, const LocalFraction& b) {
  if (a.locus_ != b.locus_) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string LocalFraction::to_string() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  auto wrap = [](const Polynomial& p) {
    std::string s = p.to_string();
    return p.term_count() > 1 || (!p.is_constant() && sgn(p.leading_coefficient()) < 0)
               ? "(" + s + ")"
               : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

bool local_ideal_member(const LocalFraction& u, const IdealBasis& ideal, const PrimePoint& locus) {
  if (locus.contains(u.denominator())) {
    throw InvalidFraction("denominator " + u.denominator().to_string() + " lies in the locus " +
                          locus.to_string());
  }
  if (u.is_zero()) return true;
  IdealBasis quotient = ideal_quotient(ideal, u.numerator());
  for (const auto& g : quotient.generators()) {
    if (!locus.contains(g)) return true;
  }
  return false;
}

}  // namespace cyclift
