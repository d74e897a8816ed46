#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <tuple>
#include <vector>

#include <gmpxx.h>

namespace toppling {

/// Evaluation route for the poly-Bernoulli numbers.
enum class PbMethod { closed, inclusion_exclusion, recurrence };

const char* to_string(PbMethod m);

mpz_class binomial(int n, int k);
mpz_class factorial(int n);

/// Unsigned Stirling numbers of the first kind, [n k].
mpz_class stirling1(int n, int k);

/// Stirling numbers of the second kind; S(0,0) = 1, S(n,m) = 0 for m > n.
mpz_class stirling2(int n, int m);

/// B_{n,k}. Throws std::invalid_argument for negative indices.
///   closed:              sum_m (m!)^2 S(n+1,m+1) S(k+1,m+1)
///   inclusion_exclusion: sum_m (-1)^{n-m} m! S(n,m) (m+1)^k
///   recurrence:          B_{n,k+1} = B_{n,k} + sum_{m=1..n} binom(n,m) B_{n-m+1,k}, B_{n,0} = 1
mpz_class poly_bernoulli_B(int n, int k, PbMethod method);

/// C_{n,k}. Boundaries C_{n,0} = 1, C_{0,k} = 0 for k >= 1.
///   closed:              sum_m (m!)^2 S(n+1,m+1) S(k,m)
///   inclusion_exclusion: sum_{m<=k} (-1)^{k+m} m! (m+1)^n S(k+1,m+1)
///   recurrence:          C_{n,k+1} = sum_{m=1..n} binom(n,m) C_{n-m+1,k}
mpz_class poly_bernoulli_C(int n, int k, PbMethod method);

/// Memoized B, C and Stirling-2 values, safe for concurrent use. With `verify`
/// set, the first computation of each B/C entry evaluates all three methods and
/// throws std::logic_error if they disagree.
class PolyBernoulliTable {
public:
    explicit PolyBernoulliTable(bool verify = false) : verify_(verify) {}

    mpz_class B(int n, int k);
    mpz_class C(int n, int k);
    mpz_class stirling2(int n, int m);

    std::size_t size() const;

private:
    enum class Kind { b, c, s2 };
    using Key = std::tuple<Kind, int, int>;

    template <typename F>
    mpz_class lookup(Key key, F&& compute);

    bool verify_;
    mutable std::shared_mutex mutex_;
    std::map<Key, mpz_class> memo_;
};

/// Process-wide table used by the counting functions.
PolyBernoulliTable& kernel();

/// Delta^order f(base) = sum_j (-1)^{order-j} binom(order,j) f(base+j).
mpz_class forward_difference(const std::function<mpz_class(int)>& f, int order, int base);

/// b_n = sum_k (-1)^k binom(n,k) a_k for every n of the prefix.
std::vector<mpz_class> binomial_transform(std::span<const mpz_class> a);

}  // namespace toppling
