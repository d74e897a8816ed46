// One PASS/FAIL line per acceptance criterion. Every tolerance is exact; the
// time limits below are the only numeric thresholds.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "toppling/bijections.hpp"
#include "toppling/characterize.hpp"
#include "toppling/counting.hpp"
#include "toppling/engine.hpp"
#include "toppling/families.hpp"
#include "toppling/harness.hpp"
#include "toppling/polybernoulli.hpp"

using namespace toppling;

namespace {

constexpr double kLimitTables = 1.0;
constexpr double kLimitToppleable = 30.0;
constexpr double kLimitRp = 5.0;
constexpr double kLimitResultants = 60.0;
constexpr std::uint64_t kSeeds = 100;

// Reference tables as printed, n and k from 0 to 5.
constexpr long kPrintedB[6][6] = {{1, 1, 1, 1, 1, 1},          {1, 2, 4, 8, 16, 32},
                                  {1, 4, 14, 46, 146, 454},    {1, 8, 46, 230, 1066, 4718},
                                  {1, 16, 146, 1066, 6906, 41506}, {1, 32, 454, 4718, 41506, 329462}};
constexpr long kPrintedC[6][6] = {{1, 0, 0, 0, 0, 0},          {1, 1, 1, 1, 1, 1},
                                  {1, 3, 7, 15, 31, 63},       {1, 7, 31, 115, 391, 1267},
                                  {1, 15, 115, 675, 3451, 16275}, {1, 31, 391, 3451, 25231, 164731}};

// Printed toppleable-configuration rows, by printed label.
const std::vector<std::vector<long>> kPrintedRows = {
    {1}, {2, 2}, {4, 7, 4}, {16, 73, 115, 73, 16}, {32, 227, 533, 533, 227, 32}};

// Printed |T_n^{(r,p)}|, rows p = 1..n, columns r = 1..n+1.
const std::vector<std::vector<long>> kPrintedT4 = {
    {8, 4, 2, 1, 1}, {14, 10, 7, 7, 8}, {8, 7, 7, 10, 14}, {1, 1, 2, 4, 8}};
const std::vector<std::vector<long>> kPrintedT5 = {{16, 8, 4, 2, 1, 1},     {46, 32, 22, 15, 15, 16},
                                                   {46, 38, 31, 31, 38, 46}, {16, 15, 15, 22, 32, 46},
                                                   {1, 1, 2, 4, 8, 16}};

const char* kFibersS32 =
    "1234: 1,(2,3),4 1,(2,4),3 1,(3,4),2 2,(1,3),4 2,(1,4),3 3,(1,2),4 3,(1,4),2; "
    "1243: 4,(1,2),3 4,(1,3),2; 2134: 2,(3,4),1 3,(2,4),1; 2143: 4,(2,3),1";

const char* kWorkedCallan = "5,7,12,11,1,4,8,14,3,6,9,15,13,10,2";
const char* kWorkedSigma = "1,6,4,8,7,10,12,11,13,3,2,9,5,14,15";

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// Oracle: permutations of [n+k] with -k <= pi_i - i <= hi, by exhaustion.
std::uint64_t window_count(int n, int k, int hi) {
    std::vector<int> v(static_cast<std::size_t>(n + k));
    std::iota(v.begin(), v.end(), 1);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < n + k && ok; ++i) {
            const int d = v[static_cast<std::size_t>(i)] - (i + 1);
            ok = -k <= d && d <= hi;
        }
        count += ok ? 1 : 0;
    } while (std::next_permutation(v.begin(), v.end()));
    return count;
}

std::map<std::pair<int, int>, std::uint64_t> g_b;
std::map<std::pair<int, int>, std::uint64_t> g_c;

std::uint64_t oracle_B(int n, int k) {
    if (n == 0 || k == 0) return 1;
    auto [it, fresh] = g_b.try_emplace({n, k}, 0);
    if (fresh) it->second = window_count(n, k, n);
    return it->second;
}

std::uint64_t oracle_C(int n, int k) {
    if (k == 0) return 1;
    if (n == 0) return 0;
    auto [it, fresh] = g_c.try_emplace({n, k}, 0);
    if (fresh) it->second = window_count(n, k, n - 1);
    return it->second;
}

std::string u(std::uint64_t v) { return std::to_string(v); }
std::string z(const mpz_class& v) { return v.get_str(); }

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;

    // Records the first failure only; later ones add nothing readable.
    void expect(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
    void same(const std::string& what, const std::string& expected, const std::string& observed) {
        expect(expected == observed, what + ": expected " + expected + ", got " + observed);
    }
};

Outcome criterion_tables() {
    Outcome o;
    constexpr PbMethod methods[] = {PbMethod::closed, PbMethod::inclusion_exclusion, PbMethod::recurrence};
    for (int n = 0; n <= 5; ++n) {
        for (int k = 0; k <= 5; ++k) {
            const auto cell = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
            for (auto m : methods) {
                auto b = poly_bernoulli_B(n, k, m);
                if (n == 4 && k == 4) {
                    // The printed cell disagrees with two brute-force counts of the same number.
                    o.same("B" + cell + " vs Vesztergombi count", u(oracle_B(4, 4)), z(b));
                    o.same("B" + cell + " vs acyclic orientations", u(count_acyclic_orientations(4, 4, SinkMode::all)),
                           z(b));
                } else {
                    o.same("B" + cell + " " + to_string(m), std::to_string(kPrintedB[n][k]), z(b));
                }
                o.same("C" + cell + " " + to_string(m), std::to_string(kPrintedC[n][k]), z(poly_bernoulli_C(n, k, m)));
            }
        }
    }
    o.notes.push_back("printed B_{4,4} = 6906 is a documented discrepancy; computed and brute-force value 6902");
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= 12; ++k) {
            const auto b = poly_bernoulli_B(n, k, PbMethod::closed);
            const auto c = poly_bernoulli_C(n, k, PbMethod::closed);
            for (auto m : {PbMethod::inclusion_exclusion, PbMethod::recurrence}) {
                o.expect(poly_bernoulli_B(n, k, m) == b && poly_bernoulli_C(n, k, m) == c,
                         "methods disagree at (" + std::to_string(n) + "," + std::to_string(k) + ")");
            }
        }
    }
    o.same("B_{5,5}", "329462", z(poly_bernoulli_B(5, 5, PbMethod::recurrence)));
    o.same("C_{5,5}", "164731", z(poly_bernoulli_C(5, 5, PbMethod::recurrence)));
    return o;
}

Outcome criterion_toppleable() {
    Outcome o;
    std::map<int, std::vector<long>> rows;
    for (int n = 1; n <= 7; ++n) {
        for (int p = 1; p <= n; ++p) {
            const auto params = "n=" + std::to_string(n) + " p=" + std::to_string(p);
            const auto half = oracle_B(n - p + 1, p) / 2;
            const auto sim = brute_count_toppleable(n, p, Oracle::simulate, jobs());
            o.same("simulation " + params, u(half), u(sim));
            o.same("window " + params, u(half), u(brute_count_toppleable(n, p, Oracle::characterize, jobs())));
            o.same("formula " + params, u(half), z(count_toppleable_configs(n, p)));
            rows[n].push_back(static_cast<long>(sim));
        }
    }
    for (int n = 1; n <= 3; ++n) {
        o.expect(rows[n] == kPrintedRows[static_cast<std::size_t>(n - 1)], "printed row " + std::to_string(n));
    }
    // The printed rows labeled 4 and 5 are the computed rows for n = 5 and 6.
    for (int label = 4; label <= 5; ++label) {
        o.expect(rows[label] != kPrintedRows[static_cast<std::size_t>(label - 1)] &&
                     rows[label + 1] == kPrintedRows[static_cast<std::size_t>(label - 1)],
                 "printed row label " + std::to_string(label) + " is not the shifted row");
        o.notes.push_back("printed row labeled " + std::to_string(label) + " is the computed row for n=" +
                          std::to_string(label + 1) + " (documented discrepancy)");
    }
    return o;
}

Outcome criterion_rp() {
    Outcome o;
    for (const auto& [n, table] : {std::pair{4, &kPrintedT4}, std::pair{5, &kPrintedT5}}) {
        for (int p = 1; p <= n; ++p) {
            for (int r = 1; r <= n + 1; ++r) {
                const auto params = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " r=" + std::to_string(r);
                const auto printed = std::to_string((*table)[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(r - 1)]);
                o.same("brute " + params, printed, u(brute_T(n, p, r, Oracle::simulate)));
                o.same("delta " + params, printed, z(count_rp_toppleable(n, p, r, RpMethod::delta)));
                o.same("C-sum " + params, printed, z(count_rp_toppleable(n, p, r, RpMethod::c_sum)));
            }
        }
    }
    return o;
}

Outcome criterion_all_r() {
    Outcome o;
    for (int n = 1; n <= 7; ++n) {
        for (int p = 1; p <= n; ++p) {
            const auto params = "n=" + std::to_string(n) + " p=" + std::to_string(p);
            const auto expected = u(oracle_C(p, n - p));
            o.same("simulation " + params, expected, u(brute_all_r(n, p, Oracle::simulate, jobs())));
            o.same("window " + params, expected, u(brute_all_r(n, p, Oracle::characterize, jobs())));
            o.same("formula " + params, expected, z(count_all_r_toppleable(n, p)));
        }
    }
    o.same("n=4 p=2", "7", u(brute_all_r(4, 2, Oracle::simulate)));
    return o;
}

std::string fiber_string(const std::map<Permutation, std::vector<Configuration>>& fibers) {
    std::string s;
    for (const auto& [pi, list] : fibers) {
        if (!s.empty()) s += "; ";
        std::string digits;
        for (int v : pi.values()) digits += std::to_string(v);
        s += digits + ":";
        for (const auto& c : list) s += " " + to_string(c);
    }
    return s;
}

Outcome criterion_resultants() {
    Outcome o;
    // Configurations in S(n, p) for n <= 7 have resultants in S_{n+1}.
    for (int size = 2; size <= 8; ++size) {
        for (int p = 1; p < size; ++p) {
            const auto params = "|pi|=" + std::to_string(size) + " p=" + std::to_string(p);
            auto fibers = resultant_fibers(size, p, jobs());
            std::set<Permutation> expected;
            std::vector<int> v(static_cast<std::size_t>(size));
            std::iota(v.begin(), v.end(), 1);
            const auto prefix = static_cast<std::size_t>(size - p);
            do {
                if (*std::max_element(v.begin(), v.begin() + static_cast<long>(prefix)) == static_cast<int>(prefix)) {
                    expected.insert(Permutation::from_values(v));
                }
            } while (std::next_permutation(v.begin(), v.end()));
            std::set<Permutation> observed;
            for (const auto& [pi, list] : fibers) observed.insert(pi);
            o.expect(observed == expected, "resultant set " + params);
            for (const auto& pi : expected) o.expect(is_p_resultant(pi, p), "is_p_resultant " + params);

            ClassArray arr;
            try {
                arr = resultant_table(size, p, jobs());
            } catch (const std::exception& e) {
                o.expect(false, std::string("class constancy ") + params + ": " + e.what());
                continue;
            }
            for (std::size_t i = 0; i < arr.counts.size(); ++i) {
                for (std::size_t j = 0; j < arr.counts[i].size(); ++j) {
                    if (arr.members[i][j].empty()) continue;
                    o.same("class (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") " + params,
                           u(oracle_B(static_cast<int>(i + 1), static_cast<int>(j + 1)) / 2), u(arr.counts[i][j]));
                }
            }
        }
    }
    o.same("fibers of S(3,2)", kFibersS32, fiber_string(resultant_fibers(4, 2)));
    std::string t;
    for (const auto& row : resultant_table(6, 2).counts) {
        t += t.empty() ? "" : ";";
        t += u(row[0]) + "," + u(row[1]);
    }
    o.same("T^{(2)}_6", "1,2;2,7;4,23;8,73", t);
    return o;
}

Outcome criterion_marked() {
    Outcome o;
    auto grab = [](const std::map<Permutation, std::uint64_t>& m, const std::string& s) {
        auto it = m.find(parse_permutation(s));
        return it == m.end() ? std::string("missing") : u(it->second);
    };
    auto n62 = resultant_counts_marked(6, 2, 2, jobs());
    std::string table;
    for (const char* left : {"2143", "2134", "1243", "1234"}) {
        table += table.empty() ? "" : ";";
        table += grab(n62, std::string(left) + "65") + "," + grab(n62, std::string(left) + "56");
    }
    o.same("N_pi table n=6 p=r=2", "2,4;4,14;2,10;4,32", table);
    for (int r : {3, 4}) {
        auto counts = resultant_counts_marked(6, 3, r, jobs());
        std::string s;
        for (const char* left : {"321", "213", "123"}) {
            s += s.empty() ? "" : ";";
            std::string row;
            for (const char* right : {"654", "546", "456"}) {
                row += (row.empty() ? "" : ",") + grab(counts, std::string(left) + right);
            }
            s += row;
        }
        o.same("N_pi table n=6 p=3 r=" + std::to_string(r), "1,1,1;1,3,7;1,7,31", s);
    }
    // Each count against the closed form, and the totals: every lift of the 5! permutations
    // of the remaining chips lands on exactly one resultant.
    for (int p = 1; p <= 5; ++p) {
        for (int r = 1; r <= 6; ++r) {
            const auto params = "p=" + std::to_string(p) + " r=" + std::to_string(r);
            std::uint64_t total = 0;
            for (const auto& [pi, c] : resultant_counts_marked(6, p, r, jobs())) {
                total += c;
                o.same("N_pi " + to_string(pi) + " " + params, u(c), z(count_N_pi(pi, r, p)));
            }
            o.same("sum of N_pi " + params, "120", u(total));
        }
    }
    o.notes.push_back("sum of N_pi over resultants in S_6 is 5! = 120 (one per lifted permutation in S_5)");
    return o;
}

Outcome criterion_determinism() {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
        for (int p = 1; p <= n; ++p) {
            auto bad = map_reduce_configurations<std::string>(
                n, p, jobs(),
                [n](const Configuration& c, std::string& acc) {
                    if (!acc.empty()) return;
                    auto passes = stabilize_passes(c);
                    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
                        if (!(stabilize_random(c, seed).final == passes.final)) {
                            acc = to_string(c) + " seed " + u(seed);
                            return;
                        }
                    }
                    auto mirrored = resultant(reverse_complement(c));
                    auto direct = resultant(passes.final);
                    if (!(mirrored.pi == direct.pi.reverse_complement()) ||
                        mirrored.empty_site != n + 1 - direct.empty_site) {
                        acc = to_string(c) + " reverse complement";
                    }
                },
                [](std::string& out, const std::string& part) {
                    if (out.empty()) out = part;
                });
            o.expect(bad.empty(), "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " + bad);
        }
    }
    return o;
}

Outcome criterion_bijections() {
    Outcome o;
    for (int total = 2; total <= 7; ++total) {
        for (int un = 1; un < total; ++un) {
            const int ov = total - un;
            const auto params = "U=" + std::to_string(un) + " O=" + std::to_string(ov);
            std::set<Permutation> image;
            std::uint64_t words = 0;
            FamilyStream s(family::Callan{un, ov});
            while (s.next()) {
                CallanWord w(s.current(), un, ov);
                auto sigma = callan_to_vesztergombi(w);
                o.expect(is_vesztergombi(sigma, un, ov), "image not Vesztergombi " + params);
                o.expect(vesztergombi_to_callan(sigma, un, ov) == w, "roundtrip " + params);
                image.insert(sigma);
                ++words;
            }
            o.same("Callan count " + params, u(oracle_B(un, ov)), u(words));
            o.same("distinct images " + params, u(oracle_B(un, ov)), u(image.size()));
        }
    }
    CallanWord worked(parse_permutation(kWorkedCallan), 9, 6);
    o.same("worked example", kWorkedSigma, to_string(callan_to_vesztergombi(worked)));
    o.expect(vesztergombi_to_callan(parse_permutation(kWorkedSigma), 9, 6) == worked, "worked example inverse");

    for (int n = 1; n <= 5; ++n) {
        for (int p = 1; p <= n; ++p) {
            for (const auto& [pi, list] : resultant_fibers(n + 1, p)) {
                std::set<Configuration> image;
                int i = 0;
                int j = 0;
                for (const auto& c : list) {
                    auto reduced = phi(c, pi);
                    i = reduced.n() + 1 - reduced.p();
                    j = reduced.p();
                    o.expect(resultant(reduced).pi == Permutation::identity(reduced.n() + 1),
                             "phi image not sorted " + to_string(c));
                    o.expect(phi_inverse(reduced, pi, p) == c, "phi roundtrip " + to_string(c));
                    image.insert(reduced);
                }
                o.same("fiber size " + to_string(pi), u(oracle_B(i, j) / 2), u(list.size()));
                o.same("phi injective " + to_string(pi), u(list.size()), u(image.size()));
            }
        }
    }
    return o;
}

Outcome criterion_families() {
    Outcome o;
    for (int total = 2; total <= 8; ++total) {
        for (int a = 1; a < total; ++a) {
            const int b = total - a;
            const auto params = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            o.same("Vesztergombi " + params, u(oracle_B(b, a)), u(count_family(family::Vesztergombi{a, b})));
            o.same("Callan underlined first " + params, u(oracle_C(a, b)),
                   u(count_family(family::CallanUnderlinedFirst{a, b})));
            o.same("excedance set " + params, u(oracle_C(a, b)), u(count_family(family::ExcedanceSet{a, b})));
            o.same("window " + params, u(oracle_C(a, b)), u(count_family(family::WindowC{a, b})));
        }
    }
    bool sink_claim = true;
    bool fixed_vertex = true;
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; n * k <= 16 && k <= 16; ++k) {
            const auto params = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
            o.same("AO " + params, z(poly_bernoulli_B(n, k, PbMethod::closed)),
                   u(count_acyclic_orientations(n, k, SinkMode::all)));
            if (n + k <= 8) {
                o.same("AO vs window " + params, u(oracle_B(n, k)), u(count_acyclic_orientations(n, k, SinkMode::all)));
            }
            const auto c = poly_bernoulli_C(n, k, PbMethod::closed);
            sink_claim = sink_claim && count_acyclic_orientations(n, k, SinkMode::unique_sink_anywhere) == c;
            fixed_vertex = fixed_vertex &&
                           count_acyclic_orientations(n, k, SinkMode::unique_sink_fixed_vertex) ==
                               poly_bernoulli_C(n, k - 1, PbMethod::closed);
        }
    }
    o.notes.push_back(std::string("finding: unique-sink orientations counted by C_{n,k}: ") +
                      (sink_claim ? "holds" : "does not hold") +
                      "; with the sink fixed at a vertex of the n side, C_{n,k-1}: " +
                      (fixed_vertex ? "holds" : "does not hold"));
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0 means no limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "poly-Bernoulli tables", kLimitTables, criterion_tables},
        {2, "toppleable configurations", kLimitToppleable, criterion_toppleable},
        {3, "(r,p)-toppleable permutations", kLimitRp, criterion_rp},
        {4, "all-r toppleable permutations", 0, criterion_all_r},
        {5, "resultant structure", kLimitResultants, criterion_resultants},
        {6, "marked resultants", 0, criterion_marked},
        {7, "determinism and symmetry", 0, criterion_determinism},
        {8, "bijections", 0, criterion_bijections},
        {9, "family counts", 0, criterion_families},
    };
    // Warm the oracle caches so criterion timings measure the code under test.
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; n + k <= 8; ++k) {
            oracle_B(n, k);
            oracle_C(n, k);
        }
    }
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        }
        std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    o.pass ? "" : ": ", o.detail.c_str());
        for (const auto& note : o.notes) std::printf("    note: %s\n", note.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
