#include "cyclift/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclift/errors.hpp"

namespace cyclift {

namespace {

void add_into(std::map<Subset, LocalFraction>& acc, const Subset& key, const LocalFraction& v) {
  if (v.is_zero()) return;
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, v);
    return;
  }
  it->second = it->second + v;
  if (it->second.is_zero()) acc.erase(it);
}

FormNumerator scale_form(const FormNumerator& w, const LocalFraction& by) {
  FormNumerator out;
  for (const auto& [key, v] : w.coordinates) add_into(out.coordinates, key, v * by);
  return out;
}

void require_same_shape(const CohClass& a, const CohClass& b) {
  if (a.locus() != b.locus()) throw std::invalid_argument("classes live at different points");
  if (a.order() != b.order()) throw std::invalid_argument("classes have different eps-orders");
  const auto& da = a.denominators();
  const auto& db = b.denominators();
  if (da.size() != db.size()) throw std::invalid_argument("denominator sequences differ in length");
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (!(da[i].base == db[i].base)) {
      throw std::invalid_argument("denominator sequences differ at position " + std::to_string(i + 1));
    }
  }
}

// Both classes raised to the larger power in each slot.
std::pair<CohClass, CohClass> aligned(const CohClass& a, const CohClass& b) {
  require_same_shape(a, b);
  CohClass x = a;
  CohClass y = b;
  for (std::size_t i = 0; i < a.denominators().size(); ++i) {
    const int k = std::max(a.denominators()[i].power, b.denominators()[i].power);
    x = x.raised(i, k);
    y = y.raised(i, k);
  }
  return {x, y};
}

}  // namespace

FormNumerator FormNumerator::make(const LocalFraction& coefficient, const Form& wedge) {
  FormNumerator out;
  for (const auto& [key, poly] : wedge) add_into(out.coordinates, key, coefficient.times(poly));
  return out;
}

CohClass::CohClass(std::vector<Denominator> denominators, PrimePoint locus,
                   std::vector<FormNumerator> components)
    : denominators_(std::move(denominators)), locus_(std::move(locus)),
      components_(std::move(components)) {
  if (denominators_.empty()) throw std::invalid_argument("class needs at least one denominator");
  std::vector<Polynomial> bases;
  for (const auto& d : denominators_) {
    if (d.power < 1) throw std::invalid_argument("denominator powers must be positive");
    if (!(d.base.vars() == locus_.vars())) throw std::invalid_argument("denominator over another ring");
    bases.push_back(d.base);
  }
  if (!is_regular_sequence(bases, locus_.vars().size())) {
    throw NotRegularSequence("class denominators are not a regular sequence");
  }
  for (auto& w : components_) {
    for (auto it = w.coordinates.begin(); it != w.coordinates.end();) {
      if (it->second.locus() != locus_) throw std::invalid_argument("component fraction at another locus");
      it = it->second.is_zero() ? w.coordinates.erase(it) : std::next(it);
    }
  }
}

bool CohClass::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const FormNumerator& w) { return w.is_zero(); });
}

CohClass CohClass::raised(std::size_t i, int power) const {
  if (i >= denominators_.size()) throw std::out_of_range("denominator index");
  const int have = denominators_[i].power;
  if (power < have) throw std::invalid_argument("cannot lower a denominator power");
  if (power == have) return *this;
  const LocalFraction factor =
      LocalFraction::from_polynomial(denominators_[i].base.pow(static_cast<unsigned>(power - have)), locus_);
  CohClass out = *this;
  out.denominators_[i].power = power;
  for (auto& w : out.components_) w = scale_form(w, factor);
  return out;
}

CohClass CohClass::operator-() const { return Rational(-1) * *this; }

CohClass operator*(const Rational& c, const CohClass& a) {
  CohClass out = a;
  const LocalFraction by = LocalFraction::one(a.locus_) * c;
  for (auto& w : out.components_) w = scale_form(w, by);
  return out;
}

CohClass operator+(const CohClass& a, const CohClass& b) {
  auto [x, y] = aligned(a, b);
  for (std::size_t i = 0; i < x.components_.size(); ++i) {
    for (const auto& [key, v] : y.components_[i].coordinates) add_into(x.components_[i].coordinates, key, v);
  }
  return x;
}

CohClass operator-(const CohClass& a, const CohClass& b) { return a + (-b); }

bool operator==(const CohClass& a, const CohClass& b) {
  return a.locus_ == b.locus_ && a.denominators_ == b.denominators_ && a.components_ == b.components_;
}

std::string CohClass::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += "; ";
    s += "eps^" + std::to_string(i + 1) + ": ";
    const auto& coords = components_[i].coordinates;
    if (coords.empty()) s += "0";
    bool first = true;
    for (const auto& [key, v] : coords) {
      if (!first) s += " + ";
      first = false;
      s += "(" + v.to_string() + ")";
      for (int var : key) s += " d" + locus_.vars().name(static_cast<std::size_t>(var));
    }
  }
  s += " / (";
  for (std::size_t i = 0; i < denominators_.size(); ++i) {
    if (i) s += ", ";
    s += denominators_[i].base.to_string();
    if (denominators_[i].power != 1) s += "^" + std::to_string(denominators_[i].power);
  }
  return s + ")] at " + locus_.to_string();
}

CohClass ch_representative(const DeformedKoszul& d) {
  const std::vector<Polynomial> tail(d.base().begin() + 1, d.base().end());
  const Form wedge = wedge_of_differentials(tail, d.locus().vars());
  std::vector<Denominator> denominators;
  for (const auto& f : d.base()) denominators.push_back({f, 1});
  std::vector<FormNumerator> components;
  for (const auto& h : d.deformation()) components.push_back(FormNumerator::make(h, wedge));
  return CohClass(std::move(denominators), d.locus(), std::move(components));
}

TrivialityVerdict class_is_trivial(const CohClass& c) {
  std::vector<Polynomial> gens;
  for (const auto& d : c.denominators()) gens.push_back(d.base.pow(static_cast<unsigned>(d.power)));
  const IdealBasis ideal(c.locus().vars(), gens);
  TrivialityVerdict verdict;
  for (std::size_t i = 0; i < c.components().size(); ++i) {
    for (const auto& [key, v] : c.components()[i].coordinates) {
      const bool member = local_ideal_member(v, ideal, c.locus());
      verdict.witnesses.push_back({static_cast<int>(i + 1), key, v, member});
      verdict.trivial = verdict.trivial && member;
    }
  }
  return verdict;
}

TrivialityVerdict compare_classes(const CohClass& c1, const CohClass& c2) {
  return class_is_trivial(c1 - c2);
}

bool class_equal(const CohClass& c1, const CohClass& c2) { return compare_classes(c1, c2).trivial; }

CohClass boundary(const CohClass& c, const Polynomial& extra) {
  if (c.locus().contains(extra)) {
    throw std::invalid_argument("boundary divisor " + extra.to_string() + " lies in " +
                                c.locus().to_string());
  }
  if (!is_zero(extra.constant_term())) {
    throw std::invalid_argument("boundary divisor " + extra.to_string() + " does not pass through the origin");
  }
  struct Split {
    Polynomial numerator;
    Polynomial unit;
    int k;
  };
  // One split per stored coordinate, in iteration order.
  std::vector<std::vector<std::pair<Subset, Split>>> splits(c.components().size());
  int K = 1;
  for (std::size_t i = 0; i < c.components().size(); ++i) {
    for (const auto& [key, v] : c.components()[i].coordinates) {
      Polynomial s = v.denominator();
      int k = 0;
      while (auto q = divide_exact(s, extra)) {
        s = std::move(*q);
        ++k;
      }
      if (is_zero(s.constant_term())) {
        throw UnsupportedShape("coefficient " + v.to_string() + " is not a unit times a power of " +
                               extra.to_string());
      }
      K = std::max(K, k);
      splits[i].push_back({key, Split{v.numerator(), s, k}});
    }
  }
  const PrimePoint origin = PrimePoint::origin(c.locus().vars());
  std::vector<FormNumerator> components(c.components().size());
  for (std::size_t i = 0; i < splits.size(); ++i) {
    for (const auto& [key, sp] : splits[i]) {
      add_into(components[i].coordinates, key,
               LocalFraction(sp.numerator * extra.pow(static_cast<unsigned>(K - sp.k)), sp.unit, origin));
    }
  }
  std::vector<Denominator> denominators = c.denominators();
  denominators.push_back({extra, K});
  return CohClass(std::move(denominators), origin, std::move(components));
}

CohClass reorder_class(const CohClass& c, const std::vector<int>& perm) {
  if (perm.size() != c.denominators().size()) {
    throw std::invalid_argument("permutation does not match the denominator sequence");
  }
  const int sign = permutation_sign(perm);
  std::vector<Denominator> denominators;
  for (int old : perm) denominators.push_back(c.denominators()[static_cast<std::size_t>(old)]);
  CohClass moved(std::move(denominators), c.locus(), c.components());
  return sign > 0 ? moved : -moved;
}

}  // namespace cyclift
