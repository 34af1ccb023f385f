#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclift/cohomology.hpp"
#include "cyclift/koszul.hpp"

namespace cyclift {

/// Scenario data violates one of its invariants.
class InvalidScenario : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The geometry around one closed point w (the origin): Y cut out by
/// f = (f_1..f_p) at Q1, Z cut out by (fnext, f_2..f_p) at Q2, a first-order
/// deformation g of f_1, and the corrections a_1..a_j of the product sequence
/// (f_1 fnext + eps a_1 + ... + eps^j a_j, f_2, ..., f_p).
class Scenario {
 public:
  /// Throws NotRegularSequence when (f), (fnext, f_2..f_p) or (f, fnext) is
  /// not regular, InvalidScenario for the remaining invariants.
  Scenario(Variables vars, std::vector<Polynomial> f, Polynomial fnext, int order, LocalFraction g,
           std::vector<Polynomial> a, std::optional<std::vector<Polynomial>> b_decomp = std::nullopt);

  const Variables& vars() const { return vars_; }
  int p() const { return static_cast<int>(f_.size()); }
  const std::vector<Polynomial>& f() const { return f_; }
  const Polynomial& fnext() const { return fnext_; }
  int order() const { return order_; }
  const LocalFraction& g() const { return g_; }
  const std::vector<Polynomial>& a() const { return a_; }
  const std::optional<std::vector<Polynomial>>& b_decomp() const { return b_decomp_; }

  const PrimePoint& q1() const { return q1_; }
  const PrimePoint& q2() const { return q2_; }
  /// (fnext, f_2, ..., f_p).
  std::vector<Polynomial> z_sequence() const;

  /// Copy with a_1 replaced.
  Scenario with_a1(const Polynomial& a1) const;

 private:
  Variables vars_;
  std::vector<Polynomial> f_;
  Polynomial fnext_;
  int order_;
  LocalFraction g_;
  std::vector<Polynomial> a_;
  std::optional<std::vector<Polynomial>> b_decomp_;
  PrimePoint q1_;
  PrimePoint q2_;
};

struct CycleTerm {
  Rational coefficient;
  DeformedKoszul generator;
};

/// Formal Q-combination of deformed Koszul generators, all of eps-order
/// order(). Equal generators are merged and zero coefficients dropped; terms
/// keep first-appearance order.
class CycleElement {
 public:
  explicit CycleElement(int order) : order_(order) {}
  /// Throws std::invalid_argument when a generator has another order.
  CycleElement(int order, const std::vector<CycleTerm>& terms);
  static CycleElement single(const DeformedKoszul& generator);

  int order() const { return order_; }
  const std::vector<CycleTerm>& terms() const { return terms_; }

  CycleElement operator-() const;
  friend CycleElement operator+(const CycleElement& a, const CycleElement& b);
  friend CycleElement operator-(const CycleElement& a, const CycleElement& b);
  friend CycleElement operator*(const Rational& c, const CycleElement& a);
  /// a - b has no terms.
  friend bool operator==(const CycleElement& a, const CycleElement& b);
  friend bool operator!=(const CycleElement& a, const CycleElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void add(const Rational& c, const DeformedKoszul& g);
  int order_;
  std::vector<CycleTerm> terms_;
};

/// Image under eps^(to_order+1) = 0. Throws std::invalid_argument unless
/// to_order <= e.order().
CycleElement restrict_order(const CycleElement& e, int to_order);

/// Same generators viewed at a higher order, with zero deformations on top.
CycleElement pad_order(const CycleElement& e, int order);

/// Koszul(f_1 + eps g, f_2, ..., f_p) at Q1; order 0 (undeformed) when g = 0.
CycleElement mu_Y(const Scenario& s);
/// Undeformed Koszul(fnext, f_2, ..., f_p) at Q2.
CycleElement mu_Z(const Scenario& s);
/// The two localizations of Koszul(f_1 fnext + sum eps^i a_i, f_2, ..., f_p):
/// Koszul(f_1 + sum eps^i a_i/fnext, ...) at Q1 plus
/// Koszul(fnext + sum eps^i a_i/f_1, ...) at Q2.
CycleElement build_C(const Scenario& s, int j);
/// Koszul(f_1 + eps g + sum_{i>=2} eps^i a_i, f_2, ..., f_p) at Q1.
CycleElement lift_T(const Scenario& s, int j);

/// A Ch coordinate whose denominator was replaced by one congruent to it
/// modulo the locus ideal, so that the boundary applies.
struct DenominatorRewrite {
  std::size_t term = 0;
  std::string from;
  std::string to;
  bool certified = false;
};

struct TermBoundary {
  std::size_t term = 0;
  std::string locus;  // "Q1" or "Q2"
  /// Boundary of the term's Ch over (f_1, ..., f_p, fnext), sign included,
  /// term coefficient not applied.
  CohClass boundary;
  TrivialityVerdict verdict;
};

struct MilnorVerdict {
  bool is_cycle = false;
  /// Sum of coefficient * boundary over (f_1, ..., f_p, fnext) at the origin.
  CohClass total;
  TrivialityVerdict verdict;
  std::vector<TermBoundary> terms;  // deformed terms only
  std::vector<DenominatorRewrite> rewrites;
};

/// d_1-vanishing, tested as triviality of the summed boundaries at the
/// origin. eps-free terms contribute nothing. Throws std::invalid_argument
/// for a generator at a point other than Q1 or Q2, UnsupportedShape when a
/// Ch coordinate cannot be brought into boundary shape.
MilnorVerdict is_milnor_cycle(const CycleElement& e, const Scenario& s);

enum class Branch { Unobstructed, Obstructed, Unsupported };
std::string to_string(Branch b);

struct Classification {
  Branch branch;
  std::string reason;
};

/// Writes g = a/b. b a unit at the origin: Unobstructed. b = sum b_i f_i +
/// fnext with the supplied decomposition: Obstructed. Anything else:
/// Unsupported.
Classification detect_obstruction(const Scenario& s);

struct Check {
  std::string name;
  bool passed = false;
  std::vector<std::string> witnesses;
};

struct PipelineReport {
  Branch branch = Branch::Unsupported;
  std::string reason;
  int order = 0;
  std::vector<Check> checks;
  bool passed() const;
};

/// The obstruction-elimination checks up to `order` (default: s.order()):
/// ([C_1] - mu_Z)|_Y agrees with mu_Y(Y^1); D_1 = [C_1] - mu_Z is a cycle
/// restricting to mu_Y(Y); each D_i is a cycle restricting to D_{i-1}.
/// a_1 is the numerator of g over b = sum b_i f_i + fnext. Throws
/// std::logic_error unless the scenario is Obstructed.
PipelineReport eliminate_obstruction(const Scenario& s, std::optional<int> order = std::nullopt);

/// For an Unobstructed scenario: every T^j is a cycle and restricts to
/// T^(j-1), with T^0 = mu_Y(Y). Throws std::logic_error otherwise.
PipelineReport lift_unobstructed(const Scenario& s, std::optional<int> order = std::nullopt);

/// Classification followed by the matching pipeline. Unsupported scenarios
/// yield a single failed check.
PipelineReport verify_scenario(const Scenario& s, std::optional<int> order = std::nullopt);

/// is_milnor_cycle as a report record: rewrites, per-term boundaries, the
/// summed class and its membership witnesses. An UnsupportedShape failure
/// becomes a failed check.
Check milnor_check(const std::string& name, const CycleElement& e, const Scenario& s);

/// One line per membership witness, for reports.
std::vector<std::string> describe(const TrivialityVerdict& v);

}  // namespace cyclift
