#pragma once

#include <string>
#include <vector>

#include "cyclift/local_ring.hpp"

namespace cyclift {

/// Element of R_P[eps]/eps^(order+1): one LocalFraction per power of eps,
/// all at the same locus. Products drop powers above order.
class EpsElement {
 public:
  /// coefficients.size() - 1 is the order; must be nonempty.
  explicit EpsElement(std::vector<LocalFraction> coefficients);
  static EpsElement constant(const LocalFraction& value, int order);
  static EpsElement zero(const PrimePoint& locus, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<LocalFraction>& coefficients() const { return coeffs_; }
  const LocalFraction& operator[](std::size_t i) const { return coeffs_[i]; }
  const PrimePoint& locus() const { return coeffs_.front().locus(); }

  bool is_zero() const;
  /// Coefficients of eps^1..eps^order all vanish.
  bool is_eps_free() const;

  EpsElement operator-() const;
  friend EpsElement operator+(const EpsElement& a, const EpsElement& b);
  friend EpsElement operator-(const EpsElement& a, const EpsElement& b);
  friend EpsElement operator*(const EpsElement& a, const EpsElement& b);

  /// Image under eps^(to+1) = 0.
  EpsElement truncate(int to) const;

  friend bool operator==(const EpsElement& a, const EpsElement& b);
  friend bool operator!=(const EpsElement& a, const EpsElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<LocalFraction> coeffs_;
};

/// Inverse in R_P[eps]/eps^(order+1) by the truncated geometric series
/// v_0 = 1/u_0, v_k = -v_0 * sum_{i=1..k} u_i v_{k-i}.
/// Throws NonUnitError when u_0 is not a unit at the locus.
EpsElement eps_invert(const EpsElement& u);

}  // namespace cyclift
