#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "toppling/configuration.hpp"
#include "toppling/permutation.hpp"

namespace toppling {

/// Size limits for exhaustive runs. Configurations of S(n,p) are capped by n,
/// permutations of S_m by m.
struct Caps {
    int max_config_n = 7;
    int max_perm_n = 8;
};

std::uint64_t factorial_u64(int n);

/// The permutation of {1..n} with lexicographic rank `rank` (0-based).
std::vector<int> unrank_permutation(int n, std::uint64_t rank);

/// Splits the n! permutations of {1..n} into `jobs` contiguous rank ranges, runs
/// `visit(values, acc)` over each range on its own thread with a fresh Acc, and folds
/// the partial results in range order with `merge(total, part)`.
template <class Acc, class Visit, class Merge>
Acc map_reduce_permutations(int n, int jobs, Visit visit, Merge merge) {
    const std::uint64_t total = factorial_u64(n);
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::uint64_t>(total, 256))));
    std::vector<Acc> parts(static_cast<std::size_t>(jobs));
    auto run = [&](int job) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(job) / static_cast<std::uint64_t>(jobs);
        const std::uint64_t hi = total * static_cast<std::uint64_t>(job + 1) / static_cast<std::uint64_t>(jobs);
        if (lo == hi) return;
        auto values = unrank_permutation(n, lo);
        Acc& acc = parts[static_cast<std::size_t>(job)];
        for (std::uint64_t r = lo; r < hi; ++r) {
            visit(static_cast<const std::vector<int>&>(values), acc);
            std::next_permutation(values.begin(), values.end());
        }
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) threads.emplace_back(run, j);
        for (auto& t : threads) t.join();
    }
    Acc out{};
    for (auto& part : parts) merge(out, part);
    return out;
}

/// Runs `visit(config, acc)` over every configuration of S(n,p), in parallel.
template <class Acc, class Visit, class Merge>
Acc map_reduce_configurations(int n, int p, int jobs, Visit visit, Merge merge) {
    return map_reduce_permutations<Acc>(
        n + 1, jobs,
        [&](const std::vector<int>& chips, Acc& acc) {
            if (chips[static_cast<std::size_t>(p - 1)] > chips[static_cast<std::size_t>(p)]) return;
            visit(Configuration(chips, p), acc);
        },
        merge);
}

/// Lazy lexicographic stream over S(n,p); each configuration once, (n+1)!/2 in total.
/// Throws std::length_error when n exceeds caps.max_config_n.
class ConfigurationStream {
public:
    ConfigurationStream(int n, int p, Caps caps = {});

    bool next();
    const Configuration& current() const { return *current_; }

private:
    int n_;
    int p_;
    std::vector<int> chips_;
    bool started_ = false;
    bool done_ = false;
    std::optional<Configuration> current_;
};

std::uint64_t configuration_count(int n);

enum class Oracle { simulate, characterize };

const char* to_string(Oracle o);

/// Configurations of S(n,p) that sort under toppling.
std::uint64_t brute_count_toppleable(int n, int p, Oracle oracle, int jobs = 1, Caps caps = {});

/// |{pi in S_n : pi is (r,p)-toppleable}|.
std::uint64_t brute_T(int n, int p, int r, Oracle oracle, int jobs = 1, Caps caps = {});

/// |{pi in S_n : pi is (r,p)-toppleable for every r}|.
std::uint64_t brute_all_r(int n, int p, Oracle oracle, int jobs = 1, Caps caps = {});

/// Configurations of S(n-1,p) grouped by resultant pi in S_n, each list in
/// lexicographic order of the flat chip sequence.
std::map<Permutation, std::vector<Configuration>> resultant_fibers(int n, int p, int jobs = 1, Caps caps = {});

/// The array T_n^{(p)}: entry (i,j) is the common fiber size of resultants with i
/// left-to-right maxima on the left part and j right-to-left minima on the right.
struct ClassArray {
    int n;
    int p;
    std::vector<std::vector<std::uint64_t>> counts;  // [i-1][j-1]
    std::map<Permutation, std::uint64_t> fibers;
    std::vector<std::vector<std::vector<Permutation>>> members;  // [i-1][j-1]
};

/// Builds T_n^{(p)} by stabilizing all of S(n-1,p), 1 <= p <= n-1. Throws
/// std::logic_error if two resultants of one class have different fiber sizes.
ClassArray resultant_table(int n, int p, int jobs = 1, Caps caps = {});

/// N_pi(r,p) by brute force: lifts every sigma in S_{n-1} with chip r at site p and
/// counts resultants pi in S_n.
std::map<Permutation, std::uint64_t> resultant_counts_marked(int n, int p, int r, int jobs = 1, Caps caps = {});

/// Record statistics of a p-resultant pi in S_n: i left-to-right maxima of the first
/// n-p entries, j right-to-left minima of the rest.
std::pair<int, int> class_of(const Permutation& pi, int p);

/// Rectangular result with a header row; every cell is already rendered.
struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

struct TableRequest {
    std::string which;  // 1a, 1b, 2, resultant-fibers, T-array, T-counts, Npi
    int n = 5;
    int p = 2;
    int r = 2;
    int jobs = 1;
    Caps caps{};
};

/// Throws std::invalid_argument on an unknown table name or bad parameters.
Table build_table(const TableRequest& req);

enum class Status { match, mismatch, documented_discrepancy };

const char* to_string(Status s);

struct VerifyItem {
    std::string claim;
    std::string parameters;
    std::string expected;
    std::string observed;
    Status status;
    std::string note;
};

struct VerifyReport {
    int n_max;
    std::vector<VerifyItem> items;

    std::size_t count(Status s) const;
    bool ok() const { return count(Status::mismatch) == 0; }
};

/// Runs every identity check up to n_max (configurations up to S(n_max,p),
/// permutations up to S_{n_max}). Mismatches are report content, not exceptions.
VerifyReport verify_identities(int n_max, int jobs = 1);

std::string to_json(const VerifyReport& r);
std::string to_text(const VerifyReport& r);

}  // namespace toppling
