#include "cyclift/koszul.hpp"

#include <algorithm>
#include <atomic>

#include "cyclift/errors.hpp"

namespace cyclift {

DeformedKoszul::DeformedKoszul(std::vector<Polynomial> base, std::vector<LocalFraction> deformation,
                               PrimePoint locus)
    : base_(std::move(base)), deformation_(std::move(deformation)), locus_(std::move(locus)) {
  if (base_.empty()) throw std::invalid_argument("Koszul sequence must be nonempty");
  for (const auto& f : base_) {
    if (!(f.vars() == locus_.vars())) throw std::invalid_argument("base over a different ring");
    if (!locus_.contains(f)) {
      throw std::invalid_argument("base entry " + f.to_string() + " is not in the locus " +
                                  locus_.to_string());
    }
  }
  if (!is_regular_sequence(base_, locus_.vars().size())) {
    throw NotRegularSequence("Koszul base is not a regular sequence");
  }
  for (const auto& h : deformation_) {
    if (h.locus() != locus_) throw std::invalid_argument("deformation fraction at another locus");
  }
}

DeformedKoszul DeformedKoszul::undeformed(std::vector<Polynomial> base, PrimePoint locus, int order) {
  std::vector<LocalFraction> zeros(static_cast<std::size_t>(order), LocalFraction::zero(locus));
  return DeformedKoszul(std::move(base), std::move(zeros), std::move(locus));
}

bool DeformedKoszul::is_deformed() const {
  return std::any_of(deformation_.begin(), deformation_.end(),
                     [](const LocalFraction& h) { return !h.is_zero(); });
}

std::vector<EpsElement> DeformedKoszul::entries() const {
  std::vector<EpsElement> out;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    std::vector<LocalFraction> slots{LocalFraction::from_polynomial(base_[i], locus_)};
    for (const auto& h : deformation_) slots.push_back(i == 0 ? h : LocalFraction::zero(locus_));
    out.emplace_back(std::move(slots));
  }
  return out;
}

DeformedKoszul DeformedKoszul::truncate(int to) const {
  if (to < 0 || to > order()) throw std::invalid_argument("truncation order out of range");
  DeformedKoszul out = *this;
  out.deformation_.resize(static_cast<std::size_t>(to), LocalFraction::zero(locus_));
  return out;
}

bool operator==(const DeformedKoszul& a, const DeformedKoszul& b) {
  return a.locus_ == b.locus_ && a.base_ == b.base_ && a.deformation_ == b.deformation_;
}

std::string DeformedKoszul::to_string() const {
  std::string s = "Koszul(";
  auto e = entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ", ";
    s += e[i].to_string();
  }
  return s + ") at " + locus_.to_string();
}

namespace {
std::atomic<std::size_t> checked{0};
}

std::size_t complexes_checked() { return checked.load(); }

KoszulComplex build_koszul(const DeformedKoszul& d) {
  KoszulComplex c{d.length(), d.locus(), d.order(), d.entries(), {}};
  const EpsElement zero = EpsElement::zero(d.locus(), d.order());
  for (int k = 1; k <= c.length; ++k) {
    c.differentials.push_back(koszul_differential(c.entries, k, zero));
  }
  if (!verify_complex(c)) throw std::logic_error("Koszul differentials do not compose to zero");
  ++checked;
  return c;
}

bool verify_complex(const KoszulComplex& c) {
  const EpsElement zero = EpsElement::zero(c.locus, c.order);
  for (std::size_t k = 1; k < c.differentials.size(); ++k) {
    Matrix<EpsElement> prod = multiply(c.differentials[k - 1], c.differentials[k], zero);
    for (std::size_t i = 0; i < prod.rows(); ++i) {
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        if (!prod.at(i, j).is_zero()) return false;
      }
    }
  }
  return true;
}

namespace {

// Lambda^k A for the permutation matrix with A[k][perm[k]] = 1, i.e.
// A e_old = e_new where perm[new] = old.
Matrix<Rational> exterior_power(const std::vector<int>& perm, int k) {
  const int p = static_cast<int>(perm.size());
  std::vector<int> new_position(perm.size());
  for (int n = 0; n < p; ++n) new_position[static_cast<std::size_t>(perm[static_cast<std::size_t>(n)])] = n;
  const auto basis = subsets(p, k);
  Matrix<Rational> m(basis.size(), basis.size(), Rational(0));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    Subset image;
    for (int i : basis[c]) image.push_back(new_position[static_cast<std::size_t>(i)]);
    int inversions = 0;
    for (std::size_t i = 0; i < image.size(); ++i) {
      for (std::size_t j = i + 1; j < image.size(); ++j) {
        if (image[i] > image[j]) ++inversions;
      }
    }
    std::sort(image.begin(), image.end());
    m.at(subset_index(basis, image), c) = inversions % 2 ? -1 : 1;
  }
  return m;
}

Matrix<Polynomial> lift(const Matrix<Rational>& m, const Variables& vars) {
  Matrix<Polynomial> out(m.rows(), m.cols(), Polynomial(vars));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = Polynomial::constant(vars, m.at(i, j));
  }
  return out;
}

}  // namespace

PermutationChainMap permutation_chain_map(const std::vector<Polynomial>& seq,
                                          const std::vector<int>& perm) {
  if (perm.size() != seq.size() || !is_permutation(perm)) {
    throw std::invalid_argument("permutation does not match the sequence positions");
  }
  PermutationChainMap map{perm, {}, Rational(0)};
  const int p = static_cast<int>(perm.size());
  for (int k = 0; k <= p; ++k) map.stage_matrices.push_back(exterior_power(perm, k));
  map.sign = map.stage_matrices.back().at(0, 0);
  return map;
}

bool ladder_commutes(const std::vector<Polynomial>& seq, const PermutationChainMap& map) {
  if (seq.empty()) return true;
  const Variables& vars = seq.front().vars();
  const Polynomial zero(vars);
  std::vector<Polynomial> permuted;
  for (int old : map.permutation) permuted.push_back(seq[static_cast<std::size_t>(old)]);
  const int p = static_cast<int>(seq.size());
  for (int k = 1; k <= p; ++k) {
    auto D = koszul_differential(seq, k, zero);
    auto E = koszul_differential(permuted, k, zero);
    auto lhs = multiply(E, lift(map.stage_matrices[static_cast<std::size_t>(k)], vars), zero);
    auto rhs = multiply(lift(map.stage_matrices[static_cast<std::size_t>(k - 1)], vars), D, zero);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

PermutationChainMap compose(const PermutationChainMap& first, const PermutationChainMap& second) {
  if (first.permutation.size() != second.permutation.size()) {
    throw std::invalid_argument("chain maps of different lengths");
  }
  PermutationChainMap out{{}, {}, first.sign * second.sign};
  for (int k : second.permutation) out.permutation.push_back(first.permutation[static_cast<std::size_t>(k)]);
  for (std::size_t k = 0; k < first.stage_matrices.size(); ++k) {
    out.stage_matrices.push_back(
        multiply(second.stage_matrices[k], first.stage_matrices[k], Rational(0)));
  }
  return out;
}

Rational multiplicity(const DeformedKoszul& d) {
  if (d.locus().kind() != PrimePoint::Kind::SequencePrime) {
    throw UnsupportedShape("multiplicity is only defined at sequence primes");
  }
  IdealBasis generated(d.locus().vars(), d.base());
  if (!same_ideal(generated, d.locus().ideal())) {
    throw UnsupportedShape("base does not generate the locus prime " + d.locus().to_string());
  }
  return Rational(1);
}

}  // namespace cyclift
