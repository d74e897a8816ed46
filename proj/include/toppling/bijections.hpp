#pragma once

#include "toppling/configuration.hpp"
#include "toppling/families.hpp"
#include "toppling/permutation.hpp"

namespace toppling {

/// Maps a (U,O)-Callan word to a (U,O)-Vesztergombi permutation of S_{U+O}.
/// Requires U, O >= 1. Words starting with an underlined value w_1 satisfy
/// sigma(w_1) = O+1.
Permutation callan_to_vesztergombi(const CallanWord& w);

/// Inverse of callan_to_vesztergombi. Throws std::invalid_argument unless sigma is
/// (U,O)-Vesztergombi with U, O >= 1.
CallanWord vesztergombi_to_callan(const Permutation& sigma, int underlined, int overlined);

/// Reduction of a configuration C in S(n,p) toppling to pi in S_{n+1}: keeps the chips
/// that are left-to-right maxima of the first n+1-p entries of pi or right-to-left
/// minima of the rest, drops the other sites, and relabels the kept chips
/// order-preservingly. With i and j record counts, the image lies in S(i+j-1, j) and
/// sorts under toppling. pi is taken as given; throws std::invalid_argument if pi is
/// not a valid resultant for C's size and site, or if a pair chip is not a record.
Configuration phi(const Configuration& c, const Permutation& pi);

/// phi with pi recomputed from C.
Configuration phi_checked(const Configuration& c);

/// Rebuilds the configuration of S(n,p) from its reduction. n = |pi| - 1 and the
/// site is p. Non-records of the left part sit at p+t-1 (t their position in pi),
/// non-records of the right part at p+t-n-1; records fill the remaining sites in the
/// order of `reduced`. Throws std::invalid_argument on size mismatches.
Configuration phi_inverse(const Configuration& reduced, const Permutation& pi, int p);

}  // namespace toppling
