#include "toppling/counting.hpp"

#include <stdexcept>
#include <string>

#include "toppling/families.hpp"
#include "toppling/polybernoulli.hpp"

namespace toppling {

namespace {

void require_site(int n, int p) {
    if (n < 1 || p < 1 || p > n) {
        throw std::invalid_argument("need 1 <= p <= n, got n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
}

mpz_class halve(const mpz_class& v) {
    if (mpz_odd_p(v.get_mpz_t())) throw std::logic_error("odd poly-Bernoulli value " + v.get_str());
    return v / 2;
}

mpz_class delta_B(int order, int base, int k) {
    auto f = [k](int x) { return kernel().B(x, k); };
    return forward_difference(f, order, base);
}

int count_below(const RecordList& recs, int r) {
    int c = 0;
    for (const auto& rec : recs) c += rec.value < r ? 1 : 0;
    return c;
}

}  // namespace

mpz_class count_toppleable_configs(int n, int p) {
    require_site(n, p);
    return halve(kernel().B(n - p + 1, p));
}

mpz_class count_rp_toppleable(int n, int p, int r, RpMethod method) {
    require_site(n, p);
    if (r < 1 || r > n + 1) {
        throw std::invalid_argument("need 1 <= r <= n+1, got r=" + std::to_string(r));
    }
    const int m = n - p + 1;
    if (method == RpMethod::delta) {
        if (r > m) {
            p = n + 1 - p;
            r = n + 2 - r;
        }
        return delta_B(r - 1, n - p + 1 - r, p);
    }
    mpz_class sum = 0;
    if (r <= m) {
        const int top = m - r;
        for (int i = 0; i <= top; ++i) sum += binomial(top, i) * kernel().C(p, n - p - i);
    } else {
        const int top = r - n + p - 2;
        for (int i = 0; i <= top; ++i) sum += binomial(top, i) * kernel().C(m, p - i - 1);
    }
    return sum;
}

mpz_class count_all_r_toppleable(int n, int p) {
    require_site(n, p);
    return kernel().C(p, n - p);
}

mpz_class count_resultant_class(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("record counts must be positive");
    return halve(kernel().B(i, j));
}

mpz_class count_N_pi(const Permutation& pi, int r, int p) {
    const int n = pi.size();
    if (p < 1 || p > n - 1 || !validate_r_placement(pi, p, r)) {
        throw std::invalid_argument("r=" + std::to_string(r) + " is not a valid placement for " +
                                    to_string(pi) + " at p=" + std::to_string(p));
    }
    const int m = n - p;
    if (r > m) return count_N_pi(pi.reverse_complement(), n + 1 - r, n - p);
    auto v = pi.values();
    auto left = records(v.subspan(0, static_cast<std::size_t>(m)), RecordDirection::left_max);
    auto right = records(v.subspan(static_cast<std::size_t>(m)), RecordDirection::right_min);
    const int a = count_below(left, r);
    const int b = static_cast<int>(left.size()) - a - 1;
    const int k = static_cast<int>(right.size());
    return delta_B(a, b, k);
}

mpz_class count_N_pi_corner(const Permutation& pi, int p) {
    const int n = pi.size();
    const int m = n - p;
    if (p < 1 || p > n - 1 || !validate_r_placement(pi, p, m)) {
        throw std::invalid_argument(to_string(pi) + " is not " + std::to_string(p) + "-resultant");
    }
    auto v = pi.values();
    const int i = static_cast<int>(records(v.subspan(0, static_cast<std::size_t>(m)), RecordDirection::left_max).size());
    const int k = static_cast<int>(records(v.subspan(static_cast<std::size_t>(m)), RecordDirection::right_min).size());
    return kernel().C(k, i - 1);
}

}  // namespace toppling
