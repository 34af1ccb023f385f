#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclift/polynomial.hpp"

namespace cyclift {

/// Generators of an ideal of Q[vars], optionally carrying its reduced
/// Groebner basis under grevlex. Values are immutable; groebner_basis()
/// returns a copy with the basis filled in.
class IdealBasis {
 public:
  IdealBasis(Variables vars, std::vector<Polynomial> generators);

  const Variables& vars() const { return vars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool has_groebner() const { return groebner_.has_value(); }
  /// Reduced basis, monic, sorted by increasing leading monomial.
  /// Throws std::logic_error when absent.
  const std::vector<Polynomial>& groebner() const;

  std::string to_string() const;

 private:
  friend IdealBasis groebner_basis(const IdealBasis& ideal);

  Variables vars_;
  std::vector<Polynomial> generators_;
  std::optional<std::vector<Polynomial>> groebner_;
};

/// Buchberger's algorithm with the coprime and chain criteria, followed by
/// interreduction. The result is canonical for the ideal.
IdealBasis groebner_basis(const IdealBasis& ideal);

/// Remainder of u on full reduction by the Groebner basis of the ideal.
Polynomial normal_form(const Polynomial& u, const IdealBasis& ideal);

bool ideal_member(const Polynomial& u, const IdealBasis& ideal);

/// Generators of (I : u) = { v : v*u in I }, computed from I ∩ (u) by
/// eliminating an auxiliary variable.
IdealBasis ideal_quotient(const IdealBasis& ideal, const Polynomial& u);

bool same_ideal(const IdealBasis& a, const IdealBasis& b);

/// Krull dimension of Q[vars]/I via the leading-term ideal; -1 for the unit ideal.
int krull_dimension(const IdealBasis& ideal);

/// True iff the ideal generated by seq has dimension n - p. Throws
/// std::invalid_argument for an empty sequence or an entry that does not
/// vanish at the origin.
bool is_regular_sequence(const std::vector<Polynomial>& seq, std::size_t n);

}  // namespace cyclift
