#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclift/exterior.hpp"
#include "cyclift/koszul.hpp"
#include "cyclift/local_ring.hpp"

namespace cyclift {

/// A (p-1)-form coefficient * ds_2 ∧ ... ∧ ds_p in the coordinate basis.
/// The scalar coefficient is folded into every coordinate entry, so sums and
/// boundaries act coordinate by coordinate. Zero entries are not stored.
struct FormNumerator {
  std::map<Subset, LocalFraction> coordinates;

  /// coefficient * wedge, with the wedge's polynomial entries moved to the
  /// coefficient's locus.
  static FormNumerator make(const LocalFraction& coefficient, const Form& wedge);

  bool is_zero() const { return coordinates.empty(); }
  friend bool operator==(const FormNumerator& a, const FormNumerator& b) {
    return a.coordinates == b.coordinates;
  }
};

struct Denominator {
  Polynomial base;
  int power = 1;
  friend bool operator==(const Denominator& a, const Denominator& b) {
    return a.power == b.power && a.base == b.base;
  }
};

/// Generalized fraction [omega_1, ..., omega_j / (s_1^k_1, ..., s_m^k_m)] at a
/// point, one form per eps-order. Equality and triviality are decided at the
/// stored denominator powers (after aligning them), which certifies equality
/// in the colimit; a "not equal" answer only speaks for that presentation.
class CohClass {
 public:
  /// Throws NotRegularSequence when the denominator bases are not regular,
  /// std::invalid_argument on a locus mismatch or a nonpositive power.
  CohClass(std::vector<Denominator> denominators, PrimePoint locus,
           std::vector<FormNumerator> components);

  const std::vector<Denominator>& denominators() const { return denominators_; }
  const PrimePoint& locus() const { return locus_; }
  const std::vector<FormNumerator>& components() const { return components_; }
  int order() const { return static_cast<int>(components_.size()); }
  /// Every stored coordinate is zero.
  bool is_zero() const;

  /// Same class with the power of denominator i raised to `power`, using
  /// [w / (.., s, ..)] = [s w / (.., s^2, ..)].
  CohClass raised(std::size_t i, int power) const;

  CohClass operator-() const;
  friend CohClass operator*(const Rational& c, const CohClass& a);
  /// Componentwise, after aligning powers. Throws std::invalid_argument when
  /// the shapes differ (locus, bases, order).
  friend CohClass operator+(const CohClass& a, const CohClass& b);
  friend CohClass operator-(const CohClass& a, const CohClass& b);

  /// Structural equality (same powers, same coordinates).
  friend bool operator==(const CohClass& a, const CohClass& b);

  std::string to_string() const;

 private:
  std::vector<Denominator> denominators_;
  PrimePoint locus_;
  std::vector<FormNumerator> components_;
};

struct MembershipWitness {
  int component = 0;  // eps-order, from 1
  Subset basis;
  LocalFraction coefficient;
  bool member = false;
};

struct TrivialityVerdict {
  bool trivial = true;
  std::vector<MembershipWitness> witnesses;
};

/// Ch of a deformed Koszul complex: component i is h_i ds_2 ∧ ... ∧ ds_p over
/// the base sequence with powers 1.
CohClass ch_representative(const DeformedKoszul& d);

/// Trivial iff every coordinate lies in (s_1^k_1, ..., s_m^k_m) localized at
/// the class's point.
TrivialityVerdict class_is_trivial(const CohClass& c);

/// Triviality of c1 - c2 with its witnesses. Throws std::invalid_argument
/// when the classes do not share locus, bases and order.
TrivialityVerdict compare_classes(const CohClass& c1, const CohClass& c2);
bool class_equal(const CohClass& c1, const CohClass& c2);

/// Boundary toward the origin along `extra`, for coordinates of the form
/// u / (s * extra^k) with s a unit at the origin. Result lives at the origin
/// over the old denominators followed by (extra, K), K the largest k (at
/// least 1). Throws UnsupportedShape for other coordinates and
/// std::invalid_argument when extra is in the class's prime or not in the
/// maximal ideal of the origin.
CohClass boundary(const CohClass& c, const Polynomial& extra);

/// Class over the denominators (d_{perm[0]}, ..., d_{perm[m-1]}), every
/// component multiplied by the sign of perm.
CohClass reorder_class(const CohClass& c, const std::vector<int>& perm);

}  // namespace cyclift
