#include "cyclift/cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclift/errors.hpp"
#include "cyclift/eps.hpp"

namespace cyclift {

namespace {

PrimePoint y_point(const std::vector<Polynomial>& f) {
  if (f.empty()) throw InvalidScenario("p must be at least 1");
  return PrimePoint::sequence(f);
}

PrimePoint z_point(const std::vector<Polynomial>& f, const Polynomial& fnext) {
  if (!is_zero(fnext.constant_term())) throw InvalidScenario("fnext must vanish at the origin");
  std::vector<Polynomial> seq{fnext};
  seq.insert(seq.end(), f.begin() + 1, f.end());
  return PrimePoint::sequence(seq);
}

std::vector<Denominator> with_powers_one(const std::vector<Polynomial>& fs) {
  std::vector<Denominator> out;
  for (const auto& f : fs) out.push_back({f, 1});
  return out;
}

// d = unit * extra^k with the unit not vanishing at the origin.
bool boundary_shape(Polynomial d, const Polynomial& extra) {
  while (auto q = divide_exact(d, extra)) d = std::move(*q);
  return !is_zero(d.constant_term());
}

// lambda with sum b_i f_i + fnext = lambda * b, where b is the stored (monic)
// denominator of g; the user's b may differ from it by that scalar.
std::optional<Rational> decomposition_scale(const Scenario& s) {
  if (!s.b_decomp()) return std::nullopt;
  Polynomial rhs = s.fnext();
  for (int i = 0; i < s.p(); ++i) rhs += (*s.b_decomp())[static_cast<std::size_t>(i)] * s.f()[static_cast<std::size_t>(i)];
  const Polynomial& b = s.g().denominator();
  if (rhs.is_zero()) return std::nullopt;
  Rational lambda = rhs.leading_coefficient() / b.leading_coefficient();
  if (!(rhs == b * Polynomial::constant(s.vars(), lambda))) return std::nullopt;
  return lambda;
}

// A denominator congruent to d modulo the locus ideal that has boundary
// shape. At Q1 the factor b of g = a/b is first traded for fnext, which is
// the substitution b -> fnext licensed by b = sum b_i f_i + fnext.
std::optional<Polynomial> rewrite_denominator(const Polynomial& d, const Scenario& s,
                                              const PrimePoint& locus, const Polynomial& extra) {
  const auto lambda = decomposition_scale(s);
  if (locus == s.q1() && lambda) {
    const Polynomial& b = s.g().denominator();
    Polynomial rest = d;
    unsigned m = 0;
    while (auto q = divide_exact(rest, b)) {
      rest = std::move(*q);
      ++m;
    }
    if (m > 0) {
      Rational scale = 1;
      for (unsigned i = 0; i < m; ++i) scale /= *lambda;
      Polynomial candidate = rest * s.fnext().pow(m) * Polynomial::constant(s.vars(), scale);
      if (boundary_shape(candidate, extra)) return candidate;
    }
  }
  Polynomial reduced = normal_form(d, locus.ideal());
  if (!reduced.is_zero() && boundary_shape(reduced, extra)) return reduced;
  return std::nullopt;
}

CohClass rewrite_for_boundary(const CohClass& ch, const Scenario& s, const Polynomial& extra,
                              std::size_t term, std::vector<DenominatorRewrite>& log) {
  std::vector<FormNumerator> components;
  bool changed = false;
  std::vector<DenominatorRewrite> local;
  for (const auto& w : ch.components()) {
    FormNumerator out;
    for (const auto& [key, v] : w.coordinates) {
      if (boundary_shape(v.denominator(), extra)) {
        out.coordinates.emplace(key, v);
        continue;
      }
      auto d = rewrite_denominator(v.denominator(), s, ch.locus(), extra);
      if (!d) {
        throw UnsupportedShape("no rewrite of " + v.to_string() + " into unit * " + extra.to_string() +
                               "^k at " + ch.locus().to_string());
      }
      LocalFraction nv(v.numerator(), *d, ch.locus());
      local.push_back({term, v.to_string(), nv.to_string(), false});
      out.coordinates.emplace(key, nv);
      changed = true;
    }
    components.push_back(std::move(out));
  }
  if (!changed) return ch;
  CohClass rewritten(ch.denominators(), ch.locus(), std::move(components));
  const bool certified = class_equal(ch, rewritten);
  for (auto& r : local) {
    r.certified = certified;
    log.push_back(r);
  }
  if (!certified) {
    throw UnsupportedShape("denominator rewrite at " + ch.locus().to_string() +
                           " does not preserve the class");
  }
  return rewritten;
}

std::string subset_name(const Subset& key, const Variables& vars) {
  if (key.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) s += "^";
    s += "d" + vars.name(static_cast<std::size_t>(key[i]));
  }
  return s;
}

}  // namespace

// ---- Scenario ----

Scenario::Scenario(Variables vars, std::vector<Polynomial> f, Polynomial fnext, int order,
                   LocalFraction g, std::vector<Polynomial> a,
                   std::optional<std::vector<Polynomial>> b_decomp)
    : vars_(std::move(vars)), f_(std::move(f)), fnext_(std::move(fnext)), order_(order),
      g_(std::move(g)), a_(std::move(a)), b_decomp_(std::move(b_decomp)), q1_(y_point(f_)),
      q2_(z_point(f_, fnext_)) {
  for (const auto& fi : f_) {
    if (!(fi.vars() == vars_)) throw InvalidScenario("f over a different ring");
  }
  if (!(fnext_.vars() == vars_)) throw InvalidScenario("fnext over a different ring");
  if (q1_.contains(fnext_)) throw InvalidScenario("fnext lies in (f)");
  std::vector<Polynomial> full = f_;
  full.push_back(fnext_);
  if (!is_regular_sequence(full, vars_.size())) {
    throw NotRegularSequence("(f, fnext) is not a regular sequence");
  }
  if (g_.locus() != q1_) throw InvalidScenario("g must live at " + q1_.to_string());
  if (order_ < 0) throw InvalidScenario("order must be nonnegative");
  if (static_cast<int>(a_.size()) < order_) {
    throw InvalidScenario("a needs at least " + std::to_string(order_) + " entries");
  }
  for (const auto& ai : a_) {
    if (!(ai.vars() == vars_)) throw InvalidScenario("a over a different ring");
  }
  if (b_decomp_ && b_decomp_->size() != f_.size()) {
    throw InvalidScenario("b_decomp needs exactly p entries");
  }
}

std::vector<Polynomial> Scenario::z_sequence() const {
  std::vector<Polynomial> seq{fnext_};
  seq.insert(seq.end(), f_.begin() + 1, f_.end());
  return seq;
}

Scenario Scenario::with_a1(const Polynomial& a1) const {
  Scenario out = *this;
  if (out.a_.empty()) {
    out.a_.push_back(a1);
  } else {
    out.a_[0] = a1;
  }
  return out;
}

// ---- CycleElement ----

CycleElement::CycleElement(int order, const std::vector<CycleTerm>& terms) : order_(order) {
  for (const auto& t : terms) add(t.coefficient, t.generator);
}

CycleElement CycleElement::single(const DeformedKoszul& generator) {
  return CycleElement(generator.order(), {{Rational(1), generator}});
}

void CycleElement::add(const Rational& c, const DeformedKoszul& g) {
  if (g.order() != order_) {
    throw std::invalid_argument("generator of order " + std::to_string(g.order()) +
                                " in an element of order " + std::to_string(order_));
  }
  if (is_zero(c)) return;
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const CycleTerm& t) { return t.generator == g; });
  if (it == terms_.end()) {
    terms_.push_back({c, g});
    return;
  }
  it->coefficient += c;
  if (is_zero(it->coefficient)) terms_.erase(it);
}

CycleElement CycleElement::operator-() const { return Rational(-1) * *this; }

CycleElement operator+(const CycleElement& a, const CycleElement& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("adding cycle elements of different orders");
  CycleElement out = a;
  for (const auto& t : b.terms_) out.add(t.coefficient, t.generator);
  return out;
}

CycleElement operator-(const CycleElement& a, const CycleElement& b) { return a + (-b); }

CycleElement operator*(const Rational& c, const CycleElement& a) {
  CycleElement out(a.order_);
  for (const auto& t : a.terms_) out.add(c * t.coefficient, t.generator);
  return out;
}

bool operator==(const CycleElement& a, const CycleElement& b) {
  return a.order_ == b.order_ && (a - b).terms_.empty();
}

std::string CycleElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Rational& c = terms_[i].coefficient;
    if (i) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    Rational mag = abs(c);
    if (mag != 1) s += cyclift::to_string(mag) + "*";
    s += terms_[i].generator.to_string();
  }
  return s;
}

CycleElement restrict_order(const CycleElement& e, int to_order) {
  if (to_order < 0 || to_order > e.order()) throw std::invalid_argument("restriction order out of range");
  std::vector<CycleTerm> terms;
  for (const auto& t : e.terms()) terms.push_back({t.coefficient, t.generator.truncate(to_order)});
  return CycleElement(to_order, terms);
}

CycleElement pad_order(const CycleElement& e, int order) {
  if (order < e.order()) throw std::invalid_argument("padding cannot lower the order");
  std::vector<CycleTerm> terms;
  for (const auto& t : e.terms()) {
    auto h = t.generator.deformation();
    h.resize(static_cast<std::size_t>(order), LocalFraction::zero(t.generator.locus()));
    terms.push_back({t.coefficient, DeformedKoszul(t.generator.base(), h, t.generator.locus())});
  }
  return CycleElement(order, terms);
}

// ---- constructions ----

CycleElement mu_Y(const Scenario& s) {
  if (s.g().is_zero()) return CycleElement::single(DeformedKoszul::undeformed(s.f(), s.q1()));
  return CycleElement::single(DeformedKoszul(s.f(), {s.g()}, s.q1()));
}

CycleElement mu_Z(const Scenario& s) {
  return CycleElement::single(DeformedKoszul::undeformed(s.z_sequence(), s.q2()));
}

namespace {

// Localization of Koszul(first * unit + sum eps^i a_i, rest) at a point where
// `unit` is invertible: (first + sum eps^i a_i / unit, rest).
DeformedKoszul split_part(const Polynomial& first, const Polynomial& unit,
                          const std::vector<Polynomial>& rest, const std::vector<Polynomial>& a,
                          int j, const PrimePoint& at) {
  std::vector<LocalFraction> slots{LocalFraction::from_polynomial(first * unit, at)};
  for (int i = 1; i <= j; ++i) slots.push_back(LocalFraction::from_polynomial(a[static_cast<std::size_t>(i - 1)], at));
  EpsElement product(std::move(slots));
  EpsElement inverse = eps_invert(EpsElement::constant(LocalFraction::from_polynomial(unit, at), j));
  EpsElement q = product * inverse;
  if (!(q[0].denominator() == Polynomial::constant(at.vars(), Rational(1))) || !(q[0].numerator() == first)) {
    throw std::logic_error("splitting did not recover " + first.to_string());
  }
  std::vector<Polynomial> base{first};
  base.insert(base.end(), rest.begin(), rest.end());
  std::vector<LocalFraction> h(q.coefficients().begin() + 1, q.coefficients().end());
  return DeformedKoszul(std::move(base), std::move(h), at);
}

}  // namespace

CycleElement build_C(const Scenario& s, int j) {
  if (j < 0 || j > static_cast<int>(s.a().size())) {
    throw std::invalid_argument("build_C needs a_1..a_" + std::to_string(j));
  }
  const std::vector<Polynomial> rest(s.f().begin() + 1, s.f().end());
  const Polynomial& f1 = s.f().front();
  CycleElement out(j);
  out = out + CycleElement::single(split_part(f1, s.fnext(), rest, s.a(), j, s.q1()));
  out = out + CycleElement::single(split_part(s.fnext(), f1, rest, s.a(), j, s.q2()));
  return out;
}

CycleElement lift_T(const Scenario& s, int j) {
  if (j < 0 || j > static_cast<int>(s.a().size())) {
    throw std::invalid_argument("lift_T needs a_2..a_" + std::to_string(j));
  }
  std::vector<LocalFraction> h;
  for (int i = 1; i <= j; ++i) {
    h.push_back(i == 1 ? s.g() : LocalFraction::from_polynomial(s.a()[static_cast<std::size_t>(i - 1)], s.q1()));
  }
  return CycleElement::single(DeformedKoszul(s.f(), std::move(h), s.q1()));
}

// ---- Milnor cycles ----

MilnorVerdict is_milnor_cycle(const CycleElement& e, const Scenario& s) {
  const PrimePoint origin = PrimePoint::origin(s.vars());
  std::vector<Polynomial> target = s.f();
  target.push_back(s.fnext());
  CohClass total(with_powers_one(target), origin, std::vector<FormNumerator>(static_cast<std::size_t>(e.order())));
  std::vector<TermBoundary> terms;
  std::vector<DenominatorRewrite> rewrites;
  const std::vector<Polynomial> z_seq = s.z_sequence();

  std::vector<int> swap_ends(target.size());
  for (std::size_t i = 0; i < swap_ends.size(); ++i) swap_ends[i] = static_cast<int>(i);
  std::swap(swap_ends.front(), swap_ends.back());

  for (std::size_t t = 0; t < e.terms().size(); ++t) {
    const DeformedKoszul& g = e.terms()[t].generator;
    const bool at_y = g.locus() == s.q1() && g.base() == s.f();
    const bool at_z = g.locus() == s.q2() && g.base() == z_seq;
    if (!at_y && !at_z) {
      throw std::invalid_argument("generator " + g.to_string() + " is not at Q1 or Q2 of the scenario");
    }
    build_koszul(g);  // asserts d o d = 0
    if (!g.is_deformed()) continue;
    const Polynomial& extra = at_y ? s.fnext() : s.f().front();
    CohClass ch = rewrite_for_boundary(ch_representative(g), s, extra, t, rewrites);
    CohClass b = boundary(ch, extra);
    if (at_z) b = reorder_class(b, swap_ends);
    TrivialityVerdict v = class_is_trivial(b);
    total = total + e.terms()[t].coefficient * b;
    terms.push_back({t, at_y ? "Q1" : "Q2", b, std::move(v)});
  }
  TrivialityVerdict verdict = class_is_trivial(total);
  const bool ok = verdict.trivial;
  return MilnorVerdict{ok, std::move(total), std::move(verdict), std::move(terms), std::move(rewrites)};
}

// ---- obstruction ----

std::string to_string(Branch b) {
  switch (b) {
    case Branch::Unobstructed: return "Unobstructed";
    case Branch::Obstructed: return "Obstructed";
    case Branch::Unsupported: return "Unsupported";
  }
  return "?";
}

Classification detect_obstruction(const Scenario& s) {
  if (s.g().is_zero()) return {Branch::Unobstructed, "g = 0"};
  const Polynomial& b = s.g().denominator();
  if (!is_zero(b.constant_term())) {
    return {Branch::Unobstructed, "b = " + b.to_string() + " is a unit at the origin"};
  }
  if (s.q1().contains(b)) throw InvalidFraction("b = " + b.to_string() + " lies in (f)");
  if (s.b_decomp()) {
    if (decomposition_scale(s)) {
      return {Branch::Obstructed, "b = " + b.to_string() + " = sum b_i f_i + fnext"};
    }
    return {Branch::Unsupported, "b_decomp does not satisfy b - sum b_i f_i - fnext = 0"};
  }
  std::vector<Polynomial> full = s.f();
  full.push_back(s.fnext());
  const PrimePoint origin = PrimePoint::origin(s.vars());
  if (local_ideal_member(LocalFraction::from_polynomial(b, origin), IdealBasis(s.vars(), full), origin)) {
    return {Branch::Unsupported, "b = " + b.to_string() + " lies in (f, fnext) but no b_decomp was given"};
  }
  return {Branch::Unsupported, "b = " + b.to_string() + " is a non-unit outside (f, fnext)"};
}

// ---- pipelines ----

bool PipelineReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> describe(const TrivialityVerdict& v) {
  std::vector<std::string> out;
  for (const auto& w : v.witnesses) {
    out.push_back("eps^" + std::to_string(w.component) + " " + subset_name(w.basis, w.coefficient.vars()) +
                  ": " + w.coefficient.to_string() + (w.member ? " in ideal" : " NOT in ideal"));
  }
  return out;
}

Check milnor_check(const std::string& name, const CycleElement& e, const Scenario& s) {
  Check c{name, false, {}};
  try {
    MilnorVerdict v = is_milnor_cycle(e, s);
    c.passed = v.is_cycle;
    for (const auto& r : v.rewrites) {
      c.witnesses.push_back("rewrite term " + std::to_string(r.term + 1) + ": " + r.from + " -> " + r.to +
                            (r.certified ? " (certified)" : " (NOT certified)"));
    }
    for (const auto& tb : v.terms) {
      c.witnesses.push_back("boundary of term " + std::to_string(tb.term + 1) + " at " + tb.locus + ": " +
                            tb.boundary.to_string() + (tb.verdict.trivial ? " trivial" : " nontrivial"));
    }
    c.witnesses.push_back("sum: " + v.total.to_string());
    for (auto& line : describe(v.verdict)) c.witnesses.push_back(std::move(line));
  } catch (const UnsupportedShape& err) {
    c.witnesses.push_back(std::string("unsupported: ") + err.what());
  }
  return c;
}

namespace {

Check equality_check(const std::string& name, const CycleElement& got, const CycleElement& want) {
  Check c{name, got == want, {}};
  if (!c.passed) {
    c.witnesses.push_back("got " + got.to_string());
    c.witnesses.push_back("expected " + want.to_string());
  }
  return c;
}

int target_order(const Scenario& s, std::optional<int> order) {
  const int J = order.value_or(s.order());
  if (J < 1) throw std::invalid_argument("lifting order must be at least 1");
  if (J > static_cast<int>(s.a().size()) && J > 1) {
    throw std::invalid_argument("order " + std::to_string(J) + " needs a_1..a_" + std::to_string(J));
  }
  return J;
}

}  // namespace

PipelineReport eliminate_obstruction(const Scenario& s, std::optional<int> order) {
  Classification cls = detect_obstruction(s);
  if (cls.branch != Branch::Obstructed) {
    throw std::logic_error("elimination not applicable: scenario is " + to_string(cls.branch));
  }
  const int J = target_order(s, order);
  // g = a/b with b = sum b_i f_i + fnext exactly, so a = lambda * numerator
  const Rational lambda = *decomposition_scale(s);
  const Scenario sc = s.with_a1(s.g().numerator() * Polynomial::constant(s.vars(), lambda));
  PipelineReport report{cls.branch, cls.reason, J, {}};

  auto D = [&](int i) { return build_C(sc, i) - pad_order(mu_Z(sc), i); };
  CycleElement prev = D(1);

  {
    Check c{"([C_1] - mu_Z(Z))|_Y = mu_Y(Y^1)", false, {}};
    std::vector<CycleTerm> y_terms;
    for (const auto& t : prev.terms()) {
      if (t.generator.locus() == sc.q1()) y_terms.push_back(t);
    }
    const DeformedKoszul muY1 = mu_Y(sc).terms().front().generator;
    if (y_terms.size() != 1 || y_terms.front().coefficient != 1) {
      c.witnesses.push_back("Y-summand is not a single generator with coefficient 1");
    } else {
      const DeformedKoszul& y = y_terms.front().generator;
      const Rational m1 = multiplicity(y);
      const Rational m2 = multiplicity(muY1);
      TrivialityVerdict v = compare_classes(ch_representative(y), ch_representative(muY1));
      c.passed = m1 == m2 && v.trivial;
      c.witnesses.push_back("multiplicity " + cyclift::to_string(m1) + " vs " + cyclift::to_string(m2));
      c.witnesses.push_back("Ch " + ch_representative(y).to_string() + " vs " +
                            ch_representative(muY1).to_string());
      for (auto& line : describe(v)) c.witnesses.push_back("difference " + line);
    }
    report.checks.push_back(std::move(c));
  }

  report.checks.push_back(milnor_check("D_1 = [C_1] - mu_Z(Z) is a Milnor cycle", prev, sc));
  report.checks.push_back(equality_check("restrict(D_1, 0) = mu_Y(Y)", restrict_order(prev, 0),
                                         CycleElement::single(DeformedKoszul::undeformed(sc.f(), sc.q1()))));
  for (int i = 2; i <= J; ++i) {
    CycleElement cur = D(i);
    const std::string n = std::to_string(i);
    report.checks.push_back(milnor_check("D_" + n + " = [C_" + n + "] - mu_Z(Z) is a Milnor cycle", cur, sc));
    report.checks.push_back(equality_check("restrict(D_" + n + ", " + std::to_string(i - 1) + ") = D_" +
                                               std::to_string(i - 1),
                                           restrict_order(cur, i - 1), prev));
    prev = std::move(cur);
  }
  return report;
}

PipelineReport lift_unobstructed(const Scenario& s, std::optional<int> order) {
  Classification cls = detect_obstruction(s);
  if (cls.branch != Branch::Unobstructed) {
    throw std::logic_error("successive lifting needs an unobstructed scenario, got " + to_string(cls.branch));
  }
  const int J = target_order(s, order);
  PipelineReport report{cls.branch, cls.reason, J, {}};
  CycleElement prev = CycleElement::single(DeformedKoszul::undeformed(s.f(), s.q1()));
  for (int j = 1; j <= J; ++j) {
    CycleElement cur = lift_T(s, j);
    const std::string n = std::to_string(j);
    report.checks.push_back(milnor_check("T^" + n + " is a Milnor cycle", cur, s));
    report.checks.push_back(equality_check("restrict(T^" + n + ", " + std::to_string(j - 1) + ") = T^" +
                                               std::to_string(j - 1),
                                           restrict_order(cur, j - 1), prev));
    prev = std::move(cur);
  }
  return report;
}

PipelineReport verify_scenario(const Scenario& s, std::optional<int> order) {
  Classification cls = detect_obstruction(s);
  switch (cls.branch) {
    case Branch::Unobstructed: return lift_unobstructed(s, order);
    case Branch::Obstructed: return eliminate_obstruction(s, order);
    case Branch::Unsupported: break;
  }
  return PipelineReport{cls.branch, cls.reason, order.value_or(s.order()),
                        {Check{"scenario shape is supported", false, {cls.reason}}}};
}

}  // namespace cyclift
