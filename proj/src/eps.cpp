#include "cyclift/eps.hpp"

#include <stdexcept>

#include "cyclift/errors.hpp"

namespace cyclift {

EpsElement::EpsElement(std::vector<LocalFraction> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("EpsElement needs at least the eps^0 slot");
  for (const auto& c : coeffs_) {
    if (c.locus() != coeffs_.front().locus()) {
      throw std::invalid_argument("EpsElement slots at different loci");
    }
  }
}

EpsElement EpsElement::constant(const LocalFraction& value, int order) {
  std::vector<LocalFraction> c(static_cast<std::size_t>(order) + 1, LocalFraction::zero(value.locus()));
  c[0] = value;
  return EpsElement(std::move(c));
}

EpsElement EpsElement::zero(const PrimePoint& locus, int order) {
  return EpsElement(std::vector<LocalFraction>(static_cast<std::size_t>(order) + 1,
                                               LocalFraction::zero(locus)));
}

bool EpsElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool EpsElement::is_eps_free() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

EpsElement EpsElement::operator-() const {
  std::vector<LocalFraction> c;
  c.reserve(coeffs_.size());
  for (const auto& v : coeffs_) c.push_back(-v);
  return EpsElement(std::move(c));
}

static void check_order(const EpsElement& a, const EpsElement& b) {
  if (a.order() != b.order()) throw std::invalid_argument("EpsElement orders differ");
}

EpsElement operator+(const EpsElement& a, const EpsElement& b) {
  check_order(a, b);
  std::vector<LocalFraction> c;
  c.reserve(a.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] + b.coeffs_[i]);
  return EpsElement(std::move(c));
}

EpsElement operator-(const EpsElement& a, const EpsElement& b) { return a + (-b); }

EpsElement operator*(const EpsElement& a, const EpsElement& b) {
  check_order(a, b);
  const std::size_t n = a.coeffs_.size();
  std::vector<LocalFraction> c(n, LocalFraction::zero(a.locus()));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return EpsElement(std::move(c));
}

EpsElement EpsElement::truncate(int to) const {
  if (to < 0 || to > order()) throw std::invalid_argument("truncation order out of range");
  return EpsElement(std::vector<LocalFraction>(coeffs_.begin(), coeffs_.begin() + to + 1));
}

bool operator==(const EpsElement& a, const EpsElement& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  }
  return true;
}

std::string EpsElement::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string v = coeffs_[i].to_string();
    if (i == 0) {
      s += v;
    } else {
      s += (i == 1 ? std::string("eps") : "eps^" + std::to_string(i)) + "*(" + v + ")";
    }
  }
  return s.empty() ? "0" : s;
}

EpsElement eps_invert(const EpsElement& u) {
  const LocalFraction& u0 = u[0];
  if (u0.is_zero() || !u0.is_unit()) {
    throw NonUnitError("eps^0 slot " + u0.to_string() + " is not a unit at " +
                       u.locus().to_string());
  }
  const LocalFraction v0 = u0.inverse();
  std::vector<LocalFraction> v{v0};
  for (int k = 1; k <= u.order(); ++k) {
    LocalFraction acc = LocalFraction::zero(u.locus());
    for (int i = 1; i <= k; ++i) {
      if (u[static_cast<std::size_t>(i)].is_zero()) continue;
      acc = acc + u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(k - i)];
    }
    v.push_back(-(v0 * acc));
  }
  return EpsElement(std::move(v));
}

}  // namespace cyclift
