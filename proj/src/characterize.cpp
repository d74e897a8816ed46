#include "toppling/characterize.hpp"

#include <stdexcept>
#include <string>

namespace toppling {

bool is_p_toppleable(const Configuration& c) {
    const int n = c.n();
    const int p = c.p();
    const auto& chips = c.chips();
    for (std::size_t idx = 0; idx < chips.size(); ++idx) {
        const int site = static_cast<int>(idx) < p ? static_cast<int>(idx) + 1 : static_cast<int>(idx);
        const int i = chips[idx];
        if (site < p + i - n - 1 || site > p + i - 1) return false;
    }
    return true;
}

bool is_rp_toppleable(const Permutation& pi, int r, int p) {
    return is_p_toppleable(lift(pi, r, p).config);
}

bool is_all_r_toppleable(const Permutation& pi, int p) {
    const int n = pi.size();
    if (p < 1 || p > n) {
        throw std::invalid_argument("is_all_r_toppleable: p=" + std::to_string(p) + " outside 1.." +
                                    std::to_string(n));
    }
    for (int pos = 1; pos <= n; ++pos) {
        const int i = pi(pos);  // pi^{-1}(i) == pos
        if (pos < p + i - n || pos > p + i - 1) return false;
    }
    return true;
}

}  // namespace toppling
