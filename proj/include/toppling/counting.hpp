#pragma once

#include <gmpxx.h>

#include "toppling/permutation.hpp"

namespace toppling {

// Closed-form counts for the toppling model, evaluated through kernel().

/// Number of p-toppleable configurations in S(n,p): B_{n-p+1,p} / 2.
/// Throws std::logic_error if the division leaves a remainder.
mpz_class count_toppleable_configs(int n, int p);

enum class RpMethod { delta, c_sum };

/// |T_n^{(r,p)}|. `delta`: Delta^{r-1} B_{n-p+1-r,p} on the first index, evaluated at
/// the mirrored point (n+1-p, n+2-r) when r > n-p+1. `c_sum`: binomially weighted
/// sums of C numbers, one branch per side of n-p+1.
mpz_class count_rp_toppleable(int n, int p, int r, RpMethod method);

/// Permutations of S_n that are (r,p)-toppleable for every r: C_{p,n-p}.
mpz_class count_all_r_toppleable(int n, int p);

/// Configurations toppling to one resultant permutation with i left-to-right maxima
/// on the left and j right-to-left minima on the right: B_{i,j} / 2.
mpz_class count_resultant_class(int i, int j);

/// N_pi(r,p) for a resultant pi in S_n (configurations live in S(n-1,p)). With the
/// left records of the first n-p entries split as a below r and b above r, and k
/// right-to-left minima on the right, N_pi = Delta^a B_{b,k}. For r > n-p the value
/// is taken at the mirrored (reverse-complement) instance. Throws
/// std::invalid_argument when pi is not p-resultant or r is not a valid placement.
mpz_class count_N_pi(const Permutation& pi, int r, int p);

/// The r == n-p special case in closed form: C_{k,i-1} with i left records and k
/// right minima. Throws std::invalid_argument unless r == n-p is a valid placement.
mpz_class count_N_pi_corner(const Permutation& pi, int p);

}  // namespace toppling
