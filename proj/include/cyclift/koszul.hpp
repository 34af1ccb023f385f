#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclift/eps.hpp"
#include "cyclift/exterior.hpp"
#include "cyclift/local_ring.hpp"

namespace cyclift {

/// Dense row-major matrix over a ring-like value type.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const T& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

/// a * b; zero supplies the additive identity of the entry type.
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc = zero;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
      out.at(i, j) = acc;
    }
  }
  return out;
}

/// Koszul differential d_k : Lambda^k -> Lambda^(k-1) of a sequence s,
///   d_k(e_{i_1} ∧ ... ∧ e_{i_k}) = sum_j (-1)^j s_{i_j} e_{i_1} ∧ .. omit i_j .. ∧ e_{i_k}
/// with j counted from 1. Rows and columns follow subsets() order.
template <class T>
Matrix<T> koszul_differential(const std::vector<T>& seq, int k, const T& zero) {
  const int p = static_cast<int>(seq.size());
  const auto rows = subsets(p, k - 1);
  const auto cols = subsets(p, k);
  Matrix<T> d(rows.size(), cols.size(), zero);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Subset& I = cols[c];
    for (std::size_t j = 0; j < I.size(); ++j) {
      Subset omitted = I;
      omitted.erase(omitted.begin() + static_cast<std::ptrdiff_t>(j));
      const T& entry = seq[static_cast<std::size_t>(I[j])];
      if (j % 2 == 0) {
        T negated = zero - entry;
        d.at(subset_index(rows, omitted), c) = negated;
      } else {
        d.at(subset_index(rows, omitted), c) = entry;
      }
    }
  }
  return d;
}

/// A regular sequence whose first entry carries an eps-deformation:
///   (base_1 + eps*h_1 + ... + eps^j*h_j, base_2, ..., base_p)
/// at a prime containing the base.
class DeformedKoszul {
 public:
  /// Throws NotRegularSequence for a non-regular base, std::invalid_argument
  /// when the base is not contained in the locus or a fraction lives elsewhere.
  DeformedKoszul(std::vector<Polynomial> base, std::vector<LocalFraction> deformation,
                 PrimePoint locus);
  static DeformedKoszul undeformed(std::vector<Polynomial> base, PrimePoint locus, int order = 0);

  const std::vector<Polynomial>& base() const { return base_; }
  const std::vector<LocalFraction>& deformation() const { return deformation_; }
  const PrimePoint& locus() const { return locus_; }
  int order() const { return static_cast<int>(deformation_.size()); }
  int length() const { return static_cast<int>(base_.size()); }

  /// Some h_i is nonzero.
  bool is_deformed() const;
  /// The sequence as elements of R_locus[eps]/eps^(order+1).
  std::vector<EpsElement> entries() const;
  /// Drops h_i for i > to.
  DeformedKoszul truncate(int to) const;

  friend bool operator==(const DeformedKoszul& a, const DeformedKoszul& b);
  friend bool operator!=(const DeformedKoszul& a, const DeformedKoszul& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<Polynomial> base_;
  std::vector<LocalFraction> deformation_;
  PrimePoint locus_;
};

struct KoszulComplex {
  int length = 0;
  PrimePoint locus;
  int order = 0;
  std::vector<EpsElement> entries;
  /// differentials[k-1] is d_k, of shape C(p,k-1) x C(p,k).
  std::vector<Matrix<EpsElement>> differentials;
};

/// Builds the complex and checks d_(k-1) d_k = 0; a failed check throws
/// std::logic_error.
KoszulComplex build_koszul(const DeformedKoszul& d);

/// How many complexes build_koszul has built and checked in this process.
std::size_t complexes_checked();

/// True iff every product of consecutive differentials vanishes exactly.
bool verify_complex(const KoszulComplex& c);

/// Chain map between the Koszul complexes of s and of s permuted,
/// (s_{perm[0]}, ..., s_{perm[p-1]}), induced by the permutation matrix A and
/// its exterior powers.
struct PermutationChainMap {
  std::vector<int> permutation;
  /// stage_matrices[k] = Lambda^k A, k = 0..p.
  std::vector<Matrix<Rational>> stage_matrices;
  /// det A.
  Rational sign;
};

/// Throws std::invalid_argument if perm is not a bijection of the positions.
PermutationChainMap permutation_chain_map(const std::vector<Polynomial>& seq,
                                          const std::vector<int>& perm);

/// Checks E_k * Lambda^k A = Lambda^(k-1) A * D_k at every stage, D the
/// complex of seq and E that of the permuted sequence.
bool ladder_commutes(const std::vector<Polynomial>& seq, const PermutationChainMap& map);

/// first followed by second.
PermutationChainMap compose(const PermutationChainMap& first, const PermutationChainMap& second);

/// Length of the K_0 class at its point. Only bases generating the locus
/// prime are supported (multiplicity 1); anything else throws UnsupportedShape.
Rational multiplicity(const DeformedKoszul& d);

}  // namespace cyclift
