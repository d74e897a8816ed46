#include "toppling/polybernoulli.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toppling {

const char* to_string(PbMethod m) {
    switch (m) {
        case PbMethod::closed: return "closed";
        case PbMethod::inclusion_exclusion: return "inclusion_exclusion";
        case PbMethod::recurrence: return "recurrence";
    }
    return "?";
}

namespace {

void require_nonnegative(int n, int k, const char* what) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument(std::string(what) + ": negative index (" + std::to_string(n) + "," +
                                    std::to_string(k) + ")");
    }
}

mpz_class power(int base, int exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

}  // namespace

mpz_class binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class stirling1(int n, int k) {
    require_nonnegative(n, k, "stirling1");
    if (k > n) return 0;
    std::vector<mpz_class> row{1};  // row 0
    for (int i = 1; i <= n; ++i) {
        std::vector<mpz_class> next(static_cast<std::size_t>(i) + 1, 0);
        for (int j = 1; j <= i; ++j) {
            mpz_class v = row.size() > static_cast<std::size_t>(j - 1) ? row[static_cast<std::size_t>(j - 1)] : 0;
            if (static_cast<std::size_t>(j) < row.size()) v += (i - 1) * row[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(j)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

mpz_class stirling2(int n, int m) {
    require_nonnegative(n, m, "stirling2");
    if (m > n) return 0;
    std::vector<mpz_class> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<mpz_class> next(static_cast<std::size_t>(i) + 1, 0);
        for (int j = 1; j <= i; ++j) {
            mpz_class v = row.size() > static_cast<std::size_t>(j - 1) ? row[static_cast<std::size_t>(j - 1)] : 0;
            if (static_cast<std::size_t>(j) < row.size()) v += j * row[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(j)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(m)];
}

namespace {

// Column-by-column tables; rows never exceed n.
std::vector<std::vector<mpz_class>> b_recurrence_table(int n, int k) {
    std::vector<std::vector<mpz_class>> t(static_cast<std::size_t>(n) + 1,
                                          std::vector<mpz_class>(static_cast<std::size_t>(k) + 1));
    for (int i = 0; i <= n; ++i) t[static_cast<std::size_t>(i)][0] = 1;
    for (int col = 0; col < k; ++col) {
        for (int i = 0; i <= n; ++i) {
            mpz_class v = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            for (int m = 1; m <= i; ++m) {
                v += binomial(i, m) * t[static_cast<std::size_t>(i - m + 1)][static_cast<std::size_t>(col)];
            }
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(col) + 1] = v;
        }
    }
    return t;
}

std::vector<std::vector<mpz_class>> c_recurrence_table(int n, int k) {
    std::vector<std::vector<mpz_class>> t(static_cast<std::size_t>(n) + 1,
                                          std::vector<mpz_class>(static_cast<std::size_t>(k) + 1));
    for (int i = 0; i <= n; ++i) t[static_cast<std::size_t>(i)][0] = 1;
    for (int col = 0; col < k; ++col) {
        t[0][static_cast<std::size_t>(col) + 1] = 0;
        for (int i = 1; i <= n; ++i) {
            mpz_class v = 0;
            for (int m = 1; m <= i; ++m) {
                v += binomial(i, m) * t[static_cast<std::size_t>(i - m + 1)][static_cast<std::size_t>(col)];
            }
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(col) + 1] = v;
        }
    }
    return t;
}

}  // namespace

mpz_class poly_bernoulli_B(int n, int k, PbMethod method) {
    require_nonnegative(n, k, "poly_bernoulli_B");
    mpz_class sum = 0;
    switch (method) {
        case PbMethod::closed:
            for (int m = 0; m <= std::min(n, k); ++m) {
                mpz_class f = factorial(m);
                sum += f * f * stirling2(n + 1, m + 1) * stirling2(k + 1, m + 1);
            }
            return sum;
        case PbMethod::inclusion_exclusion:
            for (int m = 0; m <= n; ++m) {
                mpz_class term = factorial(m) * stirling2(n, m) * power(m + 1, k);
                if ((n - m) % 2 == 0) sum += term; else sum -= term;
            }
            return sum;
        case PbMethod::recurrence:
            return b_recurrence_table(n, k)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    throw std::invalid_argument("poly_bernoulli_B: unknown method");
}

mpz_class poly_bernoulli_C(int n, int k, PbMethod method) {
    require_nonnegative(n, k, "poly_bernoulli_C");
    mpz_class sum = 0;
    switch (method) {
        case PbMethod::closed:
            for (int m = 0; m <= std::min(n, k); ++m) {
                mpz_class f = factorial(m);
                sum += f * f * stirling2(n + 1, m + 1) * stirling2(k, m);
            }
            return sum;
        case PbMethod::inclusion_exclusion:
            for (int m = 0; m <= k; ++m) {
                mpz_class term = factorial(m) * power(m + 1, n) * stirling2(k + 1, m + 1);
                if ((k + m) % 2 == 0) sum += term; else sum -= term;
            }
            return sum;
        case PbMethod::recurrence:
            return c_recurrence_table(n, k)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    throw std::invalid_argument("poly_bernoulli_C: unknown method");
}

template <typename F>
mpz_class PolyBernoulliTable::lookup(Key key, F&& compute) {
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    mpz_class value = compute();
    std::unique_lock lock(mutex_);
    return memo_.emplace(key, std::move(value)).first->second;
}

mpz_class PolyBernoulliTable::B(int n, int k) {
    require_nonnegative(n, k, "B");
    return lookup({Kind::b, n, k}, [&] {
        mpz_class v = poly_bernoulli_B(n, k, PbMethod::closed);
        if (verify_ && (v != poly_bernoulli_B(n, k, PbMethod::inclusion_exclusion) ||
                        v != poly_bernoulli_B(n, k, PbMethod::recurrence))) {
            throw std::logic_error("B(" + std::to_string(n) + "," + std::to_string(k) + "): methods disagree");
        }
        return v;
    });
}

mpz_class PolyBernoulliTable::C(int n, int k) {
    require_nonnegative(n, k, "C");
    return lookup({Kind::c, n, k}, [&] {
        mpz_class v = poly_bernoulli_C(n, k, PbMethod::closed);
        if (verify_ && (v != poly_bernoulli_C(n, k, PbMethod::inclusion_exclusion) ||
                        v != poly_bernoulli_C(n, k, PbMethod::recurrence))) {
            throw std::logic_error("C(" + std::to_string(n) + "," + std::to_string(k) + "): methods disagree");
        }
        return v;
    });
}

mpz_class PolyBernoulliTable::stirling2(int n, int m) {
    return lookup({Kind::s2, n, m}, [&] { return toppling::stirling2(n, m); });
}

std::size_t PolyBernoulliTable::size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

PolyBernoulliTable& kernel() {
#ifdef NDEBUG
    static PolyBernoulliTable table(false);
#else
    static PolyBernoulliTable table(true);
#endif
    return table;
}

mpz_class forward_difference(const std::function<mpz_class(int)>& f, int order, int base) {
    if (order < 0) throw std::invalid_argument("forward_difference: negative order");
    mpz_class sum = 0;
    for (int j = 0; j <= order; ++j) {
        mpz_class term = binomial(order, j) * f(base + j);
        if ((order - j) % 2 == 0) sum += term; else sum -= term;
    }
    return sum;
}

std::vector<mpz_class> binomial_transform(std::span<const mpz_class> a) {
    std::vector<mpz_class> b(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        mpz_class sum = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            mpz_class term = binomial(static_cast<int>(n), static_cast<int>(k)) * a[k];
            if (k % 2 == 0) sum += term; else sum -= term;
        }
        b[n] = sum;
    }
    return b;
}

}  // namespace toppling
