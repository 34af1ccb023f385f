#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cyclift/groebner.hpp"
#include "cyclift/polynomial.hpp"

namespace cyclift {

/// A prime of Q[x_1..x_n] passing through the origin: either the maximal
/// ideal (x_1, ..., x_n) or the ideal of a regular sequence. Primality of a
/// sequence ideal is taken on trust; only its codimension is checked.
class PrimePoint {
 public:
  enum class Kind { MaximalOrigin, SequencePrime };

  static PrimePoint origin(const Variables& vars);
  /// Throws NotRegularSequence when the generators are not a regular
  /// sequence, std::invalid_argument when one does not vanish at the origin.
  static PrimePoint sequence(std::vector<Polynomial> generators);

  Kind kind() const { return data_->kind; }
  const Variables& vars() const { return data_->ideal.vars(); }
  /// Empty for MaximalOrigin.
  const std::vector<Polynomial>& generators() const { return data_->generators; }
  /// The ideal with its Groebner basis computed.
  const IdealBasis& ideal() const { return data_->ideal; }

  /// Membership of a polynomial in the prime.
  bool contains(const Polynomial& f) const;

  friend bool operator==(const PrimePoint& a, const PrimePoint& b);
  friend bool operator!=(const PrimePoint& a, const PrimePoint& b) { return !(a == b); }

  std::string to_string() const;

 private:
  struct Data {
    Kind kind;
    std::vector<Polynomial> generators;
    IdealBasis ideal;
  };
  explicit PrimePoint(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// numerator / denominator in the localization of Q[x] at a prime.
/// Stored reduced as far as exact division allows, with a monic denominator.
class LocalFraction {
 public:
  /// Throws InvalidFraction when the denominator lies in the locus.
  LocalFraction(Polynomial numerator, Polynomial denominator, PrimePoint locus);
  static LocalFraction from_polynomial(Polynomial p, PrimePoint locus);
  static LocalFraction zero(const PrimePoint& locus);
  static LocalFraction one(const PrimePoint& locus);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const PrimePoint& locus() const { return locus_; }
  const Variables& vars() const { return locus_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  /// Unit in the local ring: numerator outside the locus.
  bool is_unit() const { return !locus_.contains(num_); }

  LocalFraction operator-() const;
  friend LocalFraction operator+(const LocalFraction& a, const LocalFraction& b);
  friend LocalFraction operator-(const LocalFraction& a, const LocalFraction& b);
  friend LocalFraction operator*(const LocalFraction& a, const LocalFraction& b);
  friend LocalFraction operator*(const LocalFraction& a, const Rational& c);
  LocalFraction times(const Polynomial& p) const;
  /// Throws NonUnitError when the fraction is not a unit at its locus.
  LocalFraction inverse() const;
  /// Same value viewed at another locus (used when moving a class to the
  /// origin). Throws InvalidFraction if the denominator lies in it.
  LocalFraction at(const PrimePoint& locus) const;

  /// Equality as elements of the fraction field (cross-multiplication).
  friend bool operator==(const LocalFraction& a, const LocalFraction& b);
  friend bool operator!=(const LocalFraction& a, const LocalFraction& b) { return !(a == b); }

  std::string to_string() const;

 private:
  struct Unchecked {};
  LocalFraction(Polynomial numerator, Polynomial denominator, PrimePoint locus, Unchecked);
  void normalize();
  void check_locus(const LocalFraction& o) const;

  Polynomial num_;
  Polynomial den_;
  PrimePoint locus_;
};

/// True iff u lies in ideal * Q[x]_locus, decided as (ideal : numerator)
/// not contained in the locus.
bool local_ideal_member(const LocalFraction& u, const IdealBasis& ideal, const PrimePoint& locus);

}  // namespace cyclift
