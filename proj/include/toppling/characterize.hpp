#pragma once

#include "toppling/configuration.hpp"
#include "toppling/permutation.hpp"

namespace toppling {

// Closed-form toppleability tests. None of these run the dynamics.

/// True iff every chip i satisfies p+i-n-1 <= C^{-1}(i) <= p+i-1 (both chips of the
/// pair sit at p). Equivalent to the configuration stabilizing to sorted order.
bool is_p_toppleable(const Configuration& c);

/// is_p_toppleable(lift(pi, r, p)). Throws std::invalid_argument for r or p out of range.
bool is_rp_toppleable(const Permutation& pi, int r, int p);

/// True iff p+i-n <= pi^{-1}(i) <= p+i-1 for all i, i.e. pi is (r,p)-toppleable
/// for every r in 1..n+1.
bool is_all_r_toppleable(const Permutation& pi, int p);

}  // namespace toppling
