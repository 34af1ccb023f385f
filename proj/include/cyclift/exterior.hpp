#pragma once

#include <map>
#include <vector>

#include "cyclift/polynomial.hpp"

namespace cyclift {

using Subset = std::vector<int>;

/// Sorted k-subsets of {0..n-1} in lexicographic order; the basis of
/// Lambda^k of a rank-n free module.
std::vector<Subset> subsets(int n, int k);

/// Position of s in subsets(n, s.size()).
std::size_t subset_index(const std::vector<Subset>& basis, const Subset& s);

/// +1 or -1 for a bijection of {0..n-1}; throws std::invalid_argument otherwise.
int permutation_sign(const std::vector<int>& perm);

bool is_permutation(const std::vector<int>& perm);

/// Differential form with polynomial coefficients in the coordinate basis:
/// dx_J for sorted J maps to its coefficient. Zero coefficients are not stored.
using Form = std::map<Subset, Polynomial>;

/// d f = sum_i (df/dx_i) dx_i.
Form differential(const Polynomial& f);

Form wedge(const Form& a, const Form& b);

/// d f_1 ∧ ... ∧ d f_m expanded in coordinates; the empty wedge is the
/// constant 1 on the empty subset.
Form wedge_of_differentials(const std::vector<Polynomial>& fs, const Variables& vars);

}  // namespace cyclift
