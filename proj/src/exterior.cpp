#include "cyclift/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclift {

std::vector<Subset> subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::size_t subset_index(const std::vector<Subset>& basis, const Subset& s) {
  auto it = std::lower_bound(basis.begin(), basis.end(), s);
  if (it == basis.end() || *it != s) throw std::out_of_range("subset not in basis");
  return static_cast<std::size_t>(it - basis.begin());
}

bool is_permutation(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

int permutation_sign(const std::vector<int>& perm) {
  if (!is_permutation(perm)) throw std::invalid_argument("not a permutation");
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Form differential(const Polynomial& f) {
  Form out;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    Polynomial d = f.derivative(i);
    if (!d.is_zero()) out.emplace(Subset{static_cast<int>(i)}, std::move(d));
  }
  return out;
}

Form wedge(const Form& a, const Form& b) {
  Form out;
  for (const auto& [ja, ca] : a) {
    for (const auto& [jb, cb] : b) {
      // dx_ja ∧ dx_jb vanishes on a repeated index; otherwise sort with sign.
      Subset merged = ja;
      merged.insert(merged.end(), jb.begin(), jb.end());
      int inversions = 0;
      bool repeated = false;
      for (std::size_t i = 0; i < merged.size() && !repeated; ++i) {
        for (std::size_t j = i + 1; j < merged.size(); ++j) {
          if (merged[i] == merged[j]) {
            repeated = true;
            break;
          }
          if (merged[i] > merged[j]) ++inversions;
        }
      }
      if (repeated) continue;
      std::sort(merged.begin(), merged.end());
      Polynomial term = ca * cb;
      if (inversions % 2) term = -term;
      auto [it, inserted] = out.try_emplace(merged, term);
      if (!inserted) {
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

Form wedge_of_differentials(const std::vector<Polynomial>& fs, const Variables& vars) {
  Form acc;
  acc.emplace(Subset{}, Polynomial::constant(vars, Rational(1)));
  for (const auto& f : fs) acc = wedge(acc, differential(f));
  return acc;
}

}  // namespace cyclift
