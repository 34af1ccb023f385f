#include "cyclift/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclift {
namespace {

enum class Order { Grevlex, EliminateFirst };

// Block order used for elimination: degree in variable 0 first, then grevlex
// on the remaining variables.
bool greater(Order order, const Exponent& a, const Exponent& b) {
  if (order == Order::EliminateFirst && a[0] != b[0]) return a[0] > b[0];
  return grevlex_greater(a, b);
}

struct Term {
  Exponent exp;
  Rational coef;
};

// Dense-ordered sparse polynomial used inside the Groebner engine.
using Poly = std::vector<Term>;

Poly from_polynomial(const Polynomial& p, Order order) {
  Poly out;
  out.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) out.push_back({e, c});
  if (order != Order::Grevlex) {
    std::sort(out.begin(), out.end(),
              [order](const Term& a, const Term& b) { return greater(order, a.exp, b.exp); });
  }
  return out;
}

Polynomial to_polynomial(const Poly& p, const Variables& vars) {
  Polynomial out(vars);
  for (const auto& t : p) out.add_term(t.exp, t.coef);
  return out;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

void make_monic(Poly& p) {
  if (p.empty() || p.front().coef == 1) return;
  Rational inv = 1 / p.front().coef;
  for (auto& t : p) t.coef *= inv;
}

// p - c * x^shift * g, with both inputs sorted under order.
Poly sub_scaled(const Poly& p, const Rational& c, const Exponent& shift, const Poly& g,
                Order order) {
  Poly out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  Exponent e(shift.size());
  auto shifted = [&](std::size_t k) {
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = g[k].exp[v] + shift[v];
  };
  if (j < g.size()) shifted(j);
  while (i < p.size() || j < g.size()) {
    if (j >= g.size() || (i < p.size() && greater(order, p[i].exp, e))) {
      out.push_back(p[i++]);
    } else if (i >= p.size() || greater(order, e, p[i].exp)) {
      out.push_back({e, -c * g[j].coef});
      if (++j < g.size()) shifted(j);
    } else {
      Rational v = p[i].coef - c * g[j].coef;
      if (sgn(v) != 0) out.push_back({p[i].exp, v});
      ++i;
      if (++j < g.size()) shifted(j);
    }
  }
  return out;
}

// Full reduction of p modulo basis.
Poly reduce(Poly p, const std::vector<Poly>& basis, Order order) {
  Poly rem;
  Exponent shift;
  while (!p.empty()) {
    const Term& lead = p.front();
    const Poly* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && divides(g.front().exp, lead.exp)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.push_back(lead);
      p.erase(p.begin());
      continue;
    }
    shift.assign(lead.exp.size(), 0);
    for (std::size_t v = 0; v < shift.size(); ++v) shift[v] = lead.exp[v] - divisor->front().exp[v];
    Rational c = lead.coef / divisor->front().coef;
    p = sub_scaled(p, c, shift, *divisor, order);
  }
  return rem;
}

Poly s_polynomial(const Poly& f, const Poly& g, Order order) {
  Exponent l = lcm(f.front().exp, g.front().exp);
  Exponent sf(l.size()), sg(l.size());
  for (std::size_t v = 0; v < l.size(); ++v) {
    sf[v] = l[v] - f.front().exp[v];
    sg[v] = l[v] - g.front().exp[v];
  }
  // (1/lc f) x^sf f - (1/lc g) x^sg g
  Poly zero;
  Poly a = sub_scaled(zero, -1 / f.front().coef, sf, f, order);
  return sub_scaled(a, 1 / g.front().coef, sg, g, order);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponent lcm;
};

std::vector<Poly> buchberger(std::vector<Poly> input, Order order) {
  std::vector<Poly> basis;
  std::vector<Pair> pairs;
  std::vector<bool> active;

  auto add = [&](Poly p) {
    make_monic(p);
    const std::size_t k = basis.size();
    basis.push_back(std::move(p));
    active.push_back(true);
    for (std::size_t i = 0; i < k; ++i) {
      if (!active[i]) continue;
      pairs.push_back({i, k, lcm(basis[i].front().exp, basis[k].front().exp)});
    }
  };

  for (auto& p : input) {
    Poly r = reduce(std::move(p), basis, order);
    if (!r.empty()) add(std::move(r));
  }

  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pairs.begin(), pairs.end(),
                       [&](const Pair& q) { return q.i == a && q.j == b; });
  };

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [order](const Pair& a, const Pair& b) {
      return greater(order, b.lcm, a.lcm);
    });
    Pair pr = *best;
    pairs.erase(best);
    const Poly& f = basis[pr.i];
    const Poly& g = basis[pr.j];
    if (coprime(f.front().exp, g.front().exp)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || basis[k].empty()) continue;
      if (divides(basis[k].front().exp, pr.lcm) && !pending(pr.i, k) && !pending(pr.j, k)) {
        chain = true;
      }
    }
    if (chain) continue;
    Poly r = reduce(s_polynomial(f, g, order), basis, order);
    if (!r.empty()) add(std::move(r));
  }

  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const auto& ek = basis[k].front().exp;
      const auto& ei = basis[i].front().exp;
      if (divides(ek, ei) && (ek != ei || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce the tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    Poly head{minimal[i].front()};
    Poly tail(minimal[i].begin() + 1, minimal[i].end());
    Poly reduced_tail = reduce(std::move(tail), others, order);
    head.insert(head.end(), reduced_tail.begin(), reduced_tail.end());
    make_monic(head);
    minimal[i] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(), [order](const Poly& a, const Poly& b) {
    return greater(order, b.front().exp, a.front().exp);
  });
  return minimal;
}

std::vector<Polynomial> basis_of(const IdealBasis& ideal) {
  if (ideal.has_groebner()) return ideal.groebner();
  return groebner_basis(ideal).groebner();
}

}  // namespace

IdealBasis::IdealBasis(Variables vars, std::vector<Polynomial> generators)
    : vars_(std::move(vars)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (!g.is_zero() && !(g.vars() == vars_)) {
      throw std::invalid_argument("ideal generator over a different variable list");
    }
  }
}

const std::vector<Polynomial>& IdealBasis::groebner() const {
  if (!groebner_) throw std::logic_error("Groebner basis not computed");
  return *groebner_;
}

std::string IdealBasis::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string();
  }
  return s + ")";
}

IdealBasis groebner_basis(const IdealBasis& ideal) {
  if (ideal.has_groebner()) return ideal;
  std::vector<Poly> input;
  for (const auto& g : ideal.generators()) {
    if (!g.is_zero()) input.push_back(from_polynomial(g, Order::Grevlex));
  }
  IdealBasis out = ideal;
  std::vector<Polynomial> gb;
  for (const auto& p : buchberger(std::move(input), Order::Grevlex)) {
    gb.push_back(to_polynomial(p, ideal.vars()));
  }
  out.groebner_ = std::move(gb);
  return out;
}

Polynomial normal_form(const Polynomial& u, const IdealBasis& ideal) {
  std::vector<Poly> basis;
  for (const auto& g : basis_of(ideal)) basis.push_back(from_polynomial(g, Order::Grevlex));
  return to_polynomial(reduce(from_polynomial(u, Order::Grevlex), basis, Order::Grevlex),
                       ideal.vars());
}

bool ideal_member(const Polynomial& u, const IdealBasis& ideal) {
  return normal_form(u, ideal).is_zero();
}

IdealBasis ideal_quotient(const IdealBasis& ideal, const Polynomial& u) {
  const Variables& vars = ideal.vars();
  if (u.is_zero() || ideal_member(u, ideal)) {
    return IdealBasis(vars, {Polynomial::constant(vars, Rational(1))});
  }
  // I ∩ (u) = (t*I + (1-t)*u) ∩ Q[x], with t prepended as variable 0.
  auto lift = [](const Polynomial& p, int t_power) {
    Poly out;
    for (const auto& [e, c] : p.terms()) {
      Exponent le;
      le.reserve(e.size() + 1);
      le.push_back(t_power);
      le.insert(le.end(), e.begin(), e.end());
      out.push_back({std::move(le), c});
    }
    return out;
  };
  auto sorted = [](Poly p) {
    std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) {
      return greater(Order::EliminateFirst, a.exp, b.exp);
    });
    return p;
  };
  std::vector<Poly> input;
  for (const auto& g : ideal.generators()) {
    if (!g.is_zero()) input.push_back(sorted(lift(g, 1)));
  }
  Poly ut = lift(u, 0);
  Poly tu = lift(-u, 1);
  ut.insert(ut.end(), tu.begin(), tu.end());
  input.push_back(sorted(std::move(ut)));

  std::vector<Polynomial> quotient_gens;
  for (const auto& p : buchberger(std::move(input), Order::EliminateFirst)) {
    if (p.front().exp[0] != 0) continue;
    Polynomial q(vars);
    for (const auto& t : p) q.add_term(Exponent(t.exp.begin() + 1, t.exp.end()), t.coef);
    auto div = divide_exact(q, u);
    if (!div) throw std::logic_error("intersection element not divisible by u");
    quotient_gens.push_back(div->make_monic());
  }
  std::sort(quotient_gens.begin(), quotient_gens.end(), canonical_less);
  return IdealBasis(vars, std::move(quotient_gens));
}

bool same_ideal(const IdealBasis& a, const IdealBasis& b) {
  if (!(a.vars() == b.vars())) return false;
  return basis_of(a) == basis_of(b);
}

int krull_dimension(const IdealBasis& ideal) {
  const auto gb = basis_of(ideal);
  const std::size_t n = ideal.vars().size();
  for (const auto& g : gb) {
    if (g.is_constant()) return -1;
  }
  // A set S of variables is independent when no leading monomial is
  // supported inside S; the dimension is the largest such |S|.
  int best = 0;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool independent = true;
    for (const auto& g : gb) {
      const auto& e = g.leading_exponent();
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v) {
        if (e[v] != 0 && !(mask & (1ul << v))) inside = false;
      }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcountl(mask));
  }
  return best;
}

bool is_regular_sequence(const std::vector<Polynomial>& seq, std::size_t n) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  for (const auto& f : seq) {
    if (sgn(f.constant_term()) != 0) {
      throw std::invalid_argument("sequence entry " + f.to_string() +
                                  " does not vanish at the origin");
    }
  }
  if (seq.size() > n) return false;
  for (const auto& f : seq) {
    if (f.is_zero()) return false;
  }
  IdealBasis ideal(seq.front().vars(), seq);
  return krull_dimension(ideal) == static_cast<int>(n - seq.size());
}

}  // namespace cyclift
