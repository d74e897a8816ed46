#include <functional>
#include <set>

#include "toppling/bijections.hpp"
#include "toppling/characterize.hpp"
#include "toppling/counting.hpp"
#include "toppling/engine.hpp"
#include "toppling/families.hpp"
#include "toppling/harness.hpp"
#include "toppling/polybernoulli.hpp"

namespace toppling {

namespace {

// Reference values as printed for n, k = 0..5.
constexpr long kPrintedB[6][6] = {{1, 1, 1, 1, 1, 1},          {1, 2, 4, 8, 16, 32},
                                  {1, 4, 14, 46, 146, 454},    {1, 8, 46, 230, 1066, 4718},
                                  {1, 16, 146, 1066, 6906, 41506}, {1, 32, 454, 4718, 41506, 329462}};
constexpr long kPrintedC[6][6] = {{1, 0, 0, 0, 0, 0},          {1, 1, 1, 1, 1, 1},
                                  {1, 3, 7, 15, 31, 63},       {1, 7, 31, 115, 391, 1267},
                                  {1, 15, 115, 675, 3451, 16275}, {1, 31, 391, 3451, 25231, 164731}};

// Toppleable configuration counts as printed, keyed by the printed row label.
const std::vector<std::vector<long>> kPrintedToppleable = {
    {1}, {2, 2}, {4, 7, 4}, {16, 73, 115, 73, 16}, {32, 227, 533, 533, 227, 32}};

// |T_n^{(r,p)}| as printed, rows p = 1..n, columns r = 1..n+1.
const std::vector<std::vector<long>> kPrintedT4 = {
    {8, 4, 2, 1, 1}, {14, 10, 7, 7, 8}, {8, 7, 7, 10, 14}, {1, 1, 2, 4, 8}};
const std::vector<std::vector<long>> kPrintedT5 = {{16, 8, 4, 2, 1, 1},     {46, 32, 22, 15, 15, 16},
                                                   {46, 38, 31, 31, 38, 46}, {16, 15, 15, 22, 32, 46},
                                                   {1, 1, 2, 4, 8, 16}};

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
        if (!out.empty()) out += ',';
        out += s;
    }
    return out;
}

template <class T>
std::string join_values(const std::vector<T>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) {
        if constexpr (std::is_same_v<T, mpz_class>) {
            s.push_back(x.get_str());
        } else {
            s.push_back(std::to_string(x));
        }
    }
    return join(s);
}

class Recorder {
public:
    explicit Recorder(VerifyReport& r) : report_(r) {}

    void check(std::string claim, std::string params, std::string expected, std::string observed) {
        const Status s = expected == observed ? Status::match : Status::mismatch;
        report_.items.push_back({std::move(claim), std::move(params), std::move(expected), std::move(observed), s, {}});
    }

    /// A printed value that disagrees with the computation for a known reason.
    void printed(std::string claim, std::string params, std::string printed_value, std::string observed,
                 bool explained, std::string note) {
        Status s = Status::match;
        if (printed_value != observed) s = explained ? Status::documented_discrepancy : Status::mismatch;
        report_.items.push_back({std::move(claim), std::move(params), std::move(printed_value), std::move(observed), s,
                                 s == Status::match ? std::string{} : std::move(note)});
    }

    /// Checks a predicate over a range; observed is "all" or the first failing case.
    void for_all(std::string claim, std::string params, const std::function<std::string()>& first_failure) {
        auto f = first_failure();
        check(std::move(claim), std::move(params), "all", f.empty() ? "all" : "fails at " + f);
    }

private:
    VerifyReport& report_;
};

std::string nk(int n, int k) { return "n=" + std::to_string(n) + ", k=" + std::to_string(k); }
std::string np(int n, int p) { return "n=" + std::to_string(n) + ", p=" + std::to_string(p); }

void verify_polybernoulli(Recorder& rec) {
    constexpr int kMax = 12;
    for (auto kind : {'B', 'C'}) {
        rec.for_all(std::string(1, kind) + " methods agree", "0 <= n,k <= 12", [&]() -> std::string {
            for (int n = 0; n <= kMax; ++n) {
                for (int k = 0; k <= kMax; ++k) {
                    auto f = kind == 'B' ? poly_bernoulli_B : poly_bernoulli_C;
                    auto a = f(n, k, PbMethod::closed);
                    if (a != f(n, k, PbMethod::inclusion_exclusion) || a != f(n, k, PbMethod::recurrence)) return nk(n, k);
                }
            }
            return {};
        });
    }
    for (int n = 0; n <= 5; ++n) {
        std::vector<long> pb(kPrintedB[n], kPrintedB[n] + 6);
        std::vector<long> pc(kPrintedC[n], kPrintedC[n] + 6);
        std::vector<mpz_class> b;
        std::vector<mpz_class> c;
        for (int k = 0; k <= 5; ++k) {
            b.push_back(kernel().B(n, k));
            c.push_back(kernel().C(n, k));
        }
        // The printed B_{4,4} is 6906; the Vesztergombi and orientation counts below pin 6902.
        const bool typo_only = n == 4 && b[4] == 6902 && count_family(family::Vesztergombi{4, 4}, 8) == 6902 &&
                               count_acyclic_orientations(4, 4, SinkMode::all) == 6902;
        rec.printed("B reference row", "n=" + std::to_string(n), join_values(pb), join_values(b), typo_only,
                    "printed B_{4,4} = 6906; brute-force Vesztergombi and acyclic-orientation counts give 6902");
        rec.check("C reference row", "n=" + std::to_string(n), join_values(pc), join_values(c));
    }
    auto& K = kernel();
    rec.for_all("B symmetric", "0 <= n,k <= 12", [&]() -> std::string {
        for (int n = 0; n <= kMax; ++n)
            for (int k = 0; k <= kMax; ++k)
                if (K.B(n, k) != K.B(k, n)) return nk(n, k);
        return {};
    });
    rec.for_all("C_{n+1,k} = C_{k+1,n}", "0 <= n,k <= 11", [&]() -> std::string {
        for (int n = 0; n < kMax; ++n)
            for (int k = 0; k < kMax; ++k)
                if (K.C(n + 1, k) != K.C(k + 1, n)) return nk(n, k);
        return {};
    });
    rec.for_all("B_{n,k} = sum_i binom(k,i) C_{n,i}", "0 <= n,k <= 12", [&]() -> std::string {
        for (int n = 0; n <= kMax; ++n)
            for (int k = 0; k <= kMax; ++k) {
                mpz_class s = 0;
                for (int i = 0; i <= k; ++i) s += binomial(k, i) * K.C(n, i);
                if (s != K.B(n, k)) return nk(n, k);
            }
        return {};
    });
    rec.for_all("B_{n,k} = C_{n,k} + C_{n+1,k-1}", "0 <= n <= 11, 1 <= k <= 12", [&]() -> std::string {
        for (int n = 0; n < kMax; ++n)
            for (int k = 1; k <= kMax; ++k)
                if (K.B(n, k) != K.C(n, k) + K.C(n + 1, k - 1)) return nk(n, k);
        return {};
    });
    {
        // Printed: C_{n,k} = (-1)^n sum_i (-1)^i binom(n,i) B_{i,k}. The sum gives C_{k,n}.
        int printed_fail = 0;
        bool swapped_ok = true;
        for (int n = 0; n <= kMax; ++n)
            for (int k = 0; k <= kMax; ++k) {
                std::vector<mpz_class> a;
                for (int i = 0; i <= n; ++i) a.push_back(K.B(i, k));
                mpz_class t = binomial_transform(a).back();
                if (n % 2) t = -t;
                printed_fail += t != K.C(n, k) ? 1 : 0;
                swapped_ok = swapped_ok && t == K.C(k, n);
            }
        rec.printed("C from the binomial transform of B", "0 <= n,k <= 12", "0 failing cells",
                    std::to_string(printed_fail) + " failing cells", swapped_ok,
                    "the transform yields C_{k,n}; holds for every cell with indices swapped");
    }
    {
        // Printed inclusion-exclusion for C: sum_m (-1)^{n+m} m! (m+1)^k S(n+1,m+1).
        int printed_fail = 0;
        bool swapped_ok = true;
        for (int n = 0; n <= kMax; ++n)
            for (int k = 0; k <= kMax; ++k) {
                mpz_class s = 0;
                for (int m = 0; m <= n; ++m) {
                    mpz_class pw;
                    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(k));
                    mpz_class term = factorial(m) * pw * stirling2(n + 1, m + 1);
                    s += (n + m) % 2 ? mpz_class(-term) : term;
                }
                printed_fail += s != K.C(n, k) ? 1 : 0;
                swapped_ok = swapped_ok && s == K.C(k, n);
            }
        rec.printed("C inclusion-exclusion formula as printed", "0 <= n,k <= 12", "0 failing cells",
                    std::to_string(printed_fail) + " failing cells", swapped_ok,
                    "the printed sum evaluates to C_{k,n}");
    }
    rec.for_all("B_{n,k} even for n,k > 0; B_{n,1} = 2^n", "1 <= n,k <= 12", [&]() -> std::string {
        for (int n = 1; n <= kMax; ++n) {
            if (K.B(n, 1) != mpz_class(1) << n) return nk(n, 1);
            for (int k = 1; k <= kMax; ++k)
                if (mpz_odd_p(K.B(n, k).get_mpz_t())) return nk(n, k);
        }
        return {};
    });
}

void verify_toppleable(Recorder& rec, int n_max, int jobs) {
    for (int n = 1; n <= n_max; ++n) {
        for (int p = 1; p <= n; ++p) {
            const auto formula = count_toppleable_configs(n, p).get_str();
            rec.check("toppleable configurations (simulation)", np(n, p), formula,
                      std::to_string(brute_count_toppleable(n, p, Oracle::simulate, jobs)));
            rec.check("toppleable configurations (window)", np(n, p), formula,
                      std::to_string(brute_count_toppleable(n, p, Oracle::characterize, jobs)));
        }
    }
    auto row = [](int n) {
        std::vector<mpz_class> v;
        for (int p = 1; p <= n; ++p) v.push_back(count_toppleable_configs(n, p));
        return join_values(v);
    };
    for (std::size_t label = 1; label <= kPrintedToppleable.size(); ++label) {
        const int n = static_cast<int>(label);
        const auto printed = join_values(kPrintedToppleable[label - 1]);
        rec.printed("printed toppleable-configuration row", "row label n=" + std::to_string(n), printed, row(n),
                    printed == row(n + 1), "printed row equals the computed row for n=" + std::to_string(n + 1));
    }
}

void verify_rp(Recorder& rec, int n_max, int jobs) {
    for (int n = 1; n <= std::min(n_max, 6); ++n) {
        for (int p = 1; p <= n; ++p) {
            mpz_class low = 0;
            mpz_class high = 0;
            for (int r = 1; r <= n + 1; ++r) {
                const auto params = np(n, p) + ", r=" + std::to_string(r);
                const auto brute = std::to_string(brute_T(n, p, r, Oracle::simulate, jobs));
                auto delta = count_rp_toppleable(n, p, r, RpMethod::delta);
                rec.check("|T| Delta formula", params, delta.get_str(), brute);
                rec.check("|T| C-sum formula", params, count_rp_toppleable(n, p, r, RpMethod::c_sum).get_str(), brute);
                rec.check("|T| window oracle", params, brute, std::to_string(brute_T(n, p, r, Oracle::characterize, jobs)));
                rec.check("|T| Callan words with given first letter", params, brute,
                          std::to_string(count_family(family::CallanFirst{n - p + 1, p, r}, 8)));
                (r <= n - p + 1 ? low : high) += delta;
            }
            rec.check("sum of |T| over r <= n-p+1 is C_{n-p+1,p}", np(n, p), kernel().C(n - p + 1, p).get_str(),
                      low.get_str());
            rec.check("sum of |T| over r = n-p+2..n+1 is C_{p,n-p+1}", np(n, p), kernel().C(p, n - p + 1).get_str(),
                      high.get_str());
            if (p < n) {
                // Printed range stops at r = n.
                mpz_class printed_range = high - count_rp_toppleable(n, p, n + 1, RpMethod::delta);
                rec.printed("sum of |T| over r = n-p+2..n as printed", np(n, p), kernel().C(p, n - p + 1).get_str(),
                            printed_range.get_str(), true, "the identity needs the range to extend to r = n+1");
            }
        }
    }
    for (const auto& [n, table] : {std::pair{4, &kPrintedT4}, std::pair{5, &kPrintedT5}}) {
        for (int p = 1; p <= n; ++p) {
            std::vector<mpz_class> row;
            for (int r = 1; r <= n + 1; ++r) row.push_back(count_rp_toppleable(n, p, r, RpMethod::delta));
            rec.check("printed |T| row", np(n, p), join_values((*table)[static_cast<std::size_t>(p - 1)]),
                      join_values(row));
        }
    }
    for (int n = 1; n <= 11; n += 2) {
        const int p = (n + 1) / 2;
        for (int r : {p, p + 1}) {
            auto observed = count_rp_toppleable(n, p, r, RpMethod::delta);
            auto printed = kernel().C((n - 1) / 2, (n - 1) / 2);
            rec.printed("|T| at the middle site for odd n as printed", np(n, p) + ", r=" + std::to_string(r),
                        printed.get_str(), observed.get_str(), observed == kernel().C((n + 1) / 2, (n - 1) / 2),
                        "observed value is C_{(n+1)/2,(n-1)/2}");
        }
    }
}

void verify_all_r(Recorder& rec, int n_max, int jobs) {
    for (int n = 1; n <= n_max; ++n) {
        for (int p = 1; p <= n; ++p) {
            const auto expected = count_all_r_toppleable(n, p).get_str();
            rec.check("toppleable for every r (simulation)", np(n, p), expected,
                      std::to_string(brute_all_r(n, p, Oracle::simulate, jobs)));
            rec.check("toppleable for every r (window)", np(n, p), expected,
                      std::to_string(brute_all_r(n, p, Oracle::characterize, jobs)));
        }
    }
}

void verify_resultants(Recorder& rec, int n_max, int jobs) {
    for (int n = 1; n <= n_max; ++n) {
        for (int p = 1; p <= n; ++p) {
            const auto params = np(n, p);
            ClassArray arr;
            try {
                arr = resultant_table(n + 1, p, jobs);
            } catch (const std::logic_error& e) {
                rec.check("resultant classes constant", params, "constant", e.what());
                continue;
            }
            const int m = n + 1 - p;
            rec.check("number of distinct resultants", params,
                      std::to_string(factorial_u64(m) * factorial_u64(p)), std::to_string(arr.fibers.size()));
            std::uint64_t total = 0;
            for (const auto& [pi, c] : arr.fibers) total += c;
            rec.check("fiber sizes sum to |S(n,p)|", params, std::to_string(configuration_count(n)),
                      std::to_string(total));
            rec.for_all("class size B_{i,j}/2", params, [&]() -> std::string {
                for (int i = 1; i <= m; ++i)
                    for (int j = 1; j <= p; ++j)
                        if (count_resultant_class(i, j) !=
                            arr.counts[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)])
                            return "i=" + std::to_string(i) + ", j=" + std::to_string(j);
                return {};
            });
            auto empty = map_reduce_configurations<std::uint64_t>(
                n, p, jobs,
                [&](const Configuration& c, std::uint64_t& acc) { acc += stabilize(c).empty_site == m ? 1 : 0; },
                [](std::uint64_t& t, const std::uint64_t& x) { t += x; });
            rec.check("empty site is n-p+1", params, std::to_string(configuration_count(n)), std::to_string(empty));
        }
    }
    if (n_max >= 5) {
        auto arr = resultant_table(6, 2, jobs);
        std::vector<std::string> rows;
        for (const auto& r : arr.counts) rows.push_back(join_values(r));
        rec.check("T_6^{(2)} array", "n=6, p=2", "1,2;2,7;4,23;8,73", [&] {
            std::string s;
            for (const auto& r : rows) s += (s.empty() ? "" : ";") + r;
            return s;
        }());
    }
    if (n_max >= 3) {
        auto fibers = resultant_fibers(4, 2, jobs);
        std::string s;
        for (const auto& [pi, list] : fibers) {
            s += (s.empty() ? "" : "; ") + to_string(pi) + ":";
            for (const auto& c : list) s += " " + to_string(c);
        }
        rec.check("2-resultant fibers of S(3,2)", "n=4, p=2",
                  "1234: 1,(2,3),4 1,(2,4),3 1,(3,4),2 2,(1,3),4 2,(1,4),3 3,(1,2),4 3,(1,4),2; "
                  "1243: 4,(1,2),3 4,(1,3),2; 2134: 2,(3,4),1 3,(2,4),1; 2143: 4,(2,3),1",
                  s);
    }
}

void verify_marked(Recorder& rec, int n_max, int jobs) {
    bool corner_printed_all = true;
    bool corner_ours_all = true;
    int corner_cases = 0;
    for (int n = 2; n <= n_max + 1; ++n) {
        for (int p = 1; p <= n - 1; ++p) {
            for (int r = 1; r <= n; ++r) {
                const auto params = np(n, p) + ", r=" + std::to_string(r);
                auto counts = resultant_counts_marked(n, p, r, jobs);
                std::uint64_t total = 0;
                std::string bad;
                for (const auto& [pi, c] : counts) {
                    total += c;
                    if (bad.empty() && (!validate_r_placement(pi, p, r) || count_N_pi(pi, r, p) != c)) {
                        bad = to_string(pi);
                    }
                    if (r == n - p) {
                        auto [i, j] = class_of(pi, p);
                        ++corner_cases;
                        corner_printed_all = corner_printed_all && kernel().C(j - 1, i - 1) == c;
                        corner_ours_all = corner_ours_all && count_N_pi_corner(pi, p) == c;
                    }
                }
                // r must precede every larger left value, or follow every smaller right value.
                const int m = n - p;
                const std::uint64_t valid = factorial_u64(m) * factorial_u64(p) /
                                            static_cast<std::uint64_t>(r <= m ? m - r + 1 : r - m);
                rec.check("N_pi equals Delta^a B_{b,k}", params, "all", bad.empty() ? "all" : "fails at " + bad);
                rec.check("resultants reachable with chip r", params, std::to_string(valid),
                          std::to_string(counts.size()));
                rec.check("sum of N_pi is (n-1)!", params, std::to_string(factorial_u64(n - 1)), std::to_string(total));
            }
        }
    }
    rec.printed("N_pi at r = n-p equals C_{j-1,i-1} as printed", "n <= " + std::to_string(n_max + 1), "holds",
                corner_printed_all ? "holds" : "fails", corner_ours_all,
                "N_pi = C_{j,i-1} on all " + std::to_string(corner_cases) + " cases");

    if (n_max >= 5) {
        auto n62 = resultant_counts_marked(6, 2, 2, jobs);
        auto grab = [&](const std::map<Permutation, std::uint64_t>& m, const char* s) {
            auto it = m.find(parse_permutation(s));
            return it == m.end() ? std::string("missing") : std::to_string(it->second);
        };
        rec.check("N_pi table n=6, p=r=2", "rows 2143,2134,1243,1234 x columns 65,56", "2,4;4,14;2,10;4,32",
                  grab(n62, "214365") + "," + grab(n62, "214356") + ";" + grab(n62, "213465") + "," +
                      grab(n62, "213456") + ";" + grab(n62, "124365") + "," + grab(n62, "124356") + ";" +
                      grab(n62, "123465") + "," + grab(n62, "123456"));
        for (int r : {3, 4}) {
            auto t = resultant_counts_marked(6, 3, r, jobs);
            std::string s;
            for (const char* left : {"321", "213", "123"}) {
                std::string row;
                for (const char* right : {"654", "546", "456"}) {
                    row += (row.empty() ? "" : ",") + grab(t, (std::string(left) + right).c_str());
                }
                s += (s.empty() ? "" : ";") + row;
            }
            rec.check("N_pi table n=6, p=3", "r=" + std::to_string(r), "1,1,1;1,3,7;1,7,31", s);
        }
    }
}

void verify_families(Recorder& rec, int n_max) {
    const int size_max = std::min(n_max + 1, 8);
    for (int total = 2; total <= size_max; ++total) {
        for (int a = 1; a < total; ++a) {
            const int b = total - a;
            const auto params = "a=" + std::to_string(a) + ", b=" + std::to_string(b);
            rec.check("(k,n)-Vesztergombi count is B_{n,k}", params, kernel().B(b, a).get_str(),
                      std::to_string(count_family(family::Vesztergombi{a, b}, 8)));
            rec.check("(U,O)-Callan count is B_{U,O}", params, kernel().B(a, b).get_str(),
                      std::to_string(count_family(family::Callan{a, b}, 8)));
            rec.check("Callan words starting underlined count C_{U,O}", params, kernel().C(a, b).get_str(),
                      std::to_string(count_family(family::CallanUnderlinedFirst{a, b}, 8)));
            rec.check("window family count is C_{n,k}", params, kernel().C(a, b).get_str(),
                      std::to_string(count_family(family::WindowC{a, b}, 8)));
            rec.check("excedance set [k] count is C_{n,k}", params, kernel().C(a, b).get_str(),
                      std::to_string(count_family(family::ExcedanceSet{a, b}, 8)));
        }
    }
    for (int n = 1; n <= 16; ++n) {
        for (int k = 1; n * k <= 16; ++k) {
            rec.check("acyclic orientations of K_{n,k} count B_{n,k}", nk(n, k), kernel().B(n, k).get_str(),
                      std::to_string(count_acyclic_orientations(n, k, SinkMode::all)));
        }
    }
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 4 && n * k <= 12; ++k) {
            const auto anywhere = count_acyclic_orientations(n, k, SinkMode::unique_sink_anywhere);
            const auto fixed = count_acyclic_orientations(n, k, SinkMode::unique_sink_fixed_vertex);
            const auto c = kernel().C(n, k);
            rec.printed("acyclic orientations of K_{n,k} with a unique sink count C_{n,k}", nk(n, k), c.get_str(),
                        "anywhere " + std::to_string(anywhere) + ", fixed vertex " + std::to_string(fixed),
                        kernel().C(n, k - 1) == fixed,
                        "no sink mode gives C_{n,k}; a unique sink at a fixed vertex of the n-side gives C_{n,k-1}");
        }
    }
}

void verify_bijections(Recorder& rec, int n_max) {
    const auto worked = CallanWord(parse_permutation("5,7,12,11,1,4,8,14,3,6,9,15,13,10,2"), 9, 6);
    rec.check("Callan to Vesztergombi worked example", "U=9, O=6", "1,6,4,8,7,10,12,11,13,3,2,9,5,14,15",
              to_string(callan_to_vesztergombi(worked)));
    for (int total = 2; total <= std::min(n_max, 7); ++total) {
        for (int u = 1; u < total; ++u) {
            const int o = total - u;
            rec.for_all("Callan/Vesztergombi roundtrip", "U=" + std::to_string(u) + ", O=" + std::to_string(o),
                        [&]() -> std::string {
                            std::set<Permutation> image;
                            FamilyStream words(family::Callan{u, o}, 8);
                            while (words.next()) {
                                CallanWord w(words.current(), u, o);
                                auto s = callan_to_vesztergombi(w);
                                if (!is_vesztergombi(s, u, o) || !(vesztergombi_to_callan(s, u, o) == w)) {
                                    return to_string(w.word());
                                }
                                if (w.starts_underlined() && s(w.word()(1)) != o + 1) return to_string(w.word());
                                image.insert(s);
                            }
                            if (image.size() != count_family(family::Vesztergombi{u, o}, 8)) return "image size";
                            return {};
                        });
        }
    }
    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        for (int p = 1; p <= n; ++p) {
            rec.for_all("phi roundtrip and fiber size", np(n, p), [&]() -> std::string {
                ConfigurationStream s(n, p);
                while (s.next()) {
                    const auto& c = s.current();
                    auto pi = resultant(c).pi;
                    auto reduced = phi(c, pi);
                    if (!is_p_toppleable(reduced) || !(phi_inverse(reduced, pi, p) == c)) return to_string(c);
                }
                return {};
            });
        }
    }
}

void verify_dynamics(Recorder& rec, int n_max) {
    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        for (int p = 1; p <= n; ++p) {
            rec.for_all("random schedule agrees with passes", np(n, p) + ", 10 seeds", [&]() -> std::string {
                ConfigurationStream s(n, p);
                while (s.next()) {
                    auto passes = stabilize_passes(s.current());
                    if (static_cast<int>(passes.trace.size()) != std::min(p, n - p + 1)) return to_string(s.current());
                    for (std::uint64_t seed = 0; seed < 10; ++seed) {
                        if (!(stabilize_random(s.current(), seed).final == passes.final)) return to_string(s.current());
                    }
                    auto a = resultant(reverse_complement(s.current())).pi;
                    if (!(a == resultant(s.current()).pi.reverse_complement())) return to_string(s.current());
                }
                return {};
            });
        }
    }
}

}  // namespace

VerifyReport verify_identities(int n_max, int jobs) {
    if (n_max < 1 || n_max > 7) throw std::invalid_argument("verify: n_max must be in 1..7");
    VerifyReport report{n_max, {}};
    Recorder rec(report);
    verify_polybernoulli(rec);
    verify_toppleable(rec, n_max, jobs);
    verify_rp(rec, n_max, jobs);
    verify_all_r(rec, n_max, jobs);
    verify_resultants(rec, n_max, jobs);
    verify_marked(rec, n_max, jobs);
    verify_families(rec, n_max);
    verify_bijections(rec, n_max);
    verify_dynamics(rec, n_max);
    return report;
}

}  // namespace toppling
