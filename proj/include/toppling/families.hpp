#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toppling/permutation.hpp"

namespace toppling {

/// (k,n)-Vesztergombi: -k <= pi_i - i <= n at every position of pi in S_{k+n}.
/// Throws std::invalid_argument if |pi| != k+n.
bool is_vesztergombi(const Permutation& pi, int k, int n);

/// Maximal run of values from one class of a Callan word.
struct CallanBlock {
    bool underlined;
    std::vector<int> values;
    bool operator==(const CallanBlock&) const = default;
};

/// Splits a word on {1..U+O} into maximal runs of underlined ({1..U}) or overlined
/// ({U+1..U+O}) values.
std::vector<CallanBlock> callan_blocks(const Permutation& w, int underlined);

/// Underlined runs increase, overlined runs decrease. Throws std::invalid_argument
/// if |pi| != U+O.
bool is_callan(const Permutation& pi, int underlined, int overlined);

/// A validated Callan permutation with U underlined and O overlined values.
class CallanWord {
public:
    /// Throws std::invalid_argument if the word is not (U,O)-Callan.
    CallanWord(Permutation word, int underlined, int overlined);

    const Permutation& word() const { return word_; }
    int underlined() const { return u_; }
    int overlined() const { return o_; }
    const std::vector<CallanBlock>& blocks() const { return blocks_; }
    bool starts_underlined() const { return blocks_.front().underlined; }

    bool operator==(const CallanWord& other) const {
        return word_ == other.word_ && u_ == other.u_ && o_ == other.o_;
    }

private:
    Permutation word_;
    int u_;
    int o_;
    std::vector<CallanBlock> blocks_;
};

/// Positions i with pi_i > i, ascending.
std::vector<int> excedance_set(const Permutation& pi);

namespace family {
struct Vesztergombi { int k; int n; };
struct Callan { int underlined; int overlined; };
struct CallanUnderlinedFirst { int underlined; int overlined; };
/// Callan words whose first letter is r.
struct CallanFirst { int underlined; int overlined; int r; };
/// pi in S_{n+k} with -k <= pi_i - i < n.
struct WindowC { int n; int k; };
/// pi in S_{n+k} whose excedance set is exactly {1..k}.
struct ExcedanceSet { int n; int k; };
}  // namespace family

using FamilySpec = std::variant<family::Vesztergombi, family::Callan, family::CallanUnderlinedFirst,
                                family::CallanFirst, family::WindowC, family::ExcedanceSet>;

std::string to_string(const FamilySpec& spec);

/// Size of the ambient symmetric group the family lives in.
int ambient_size(const FamilySpec& spec);

bool is_member(const FamilySpec& spec, const Permutation& pi);

/// Lazy lexicographic stream over the members of a family. Construction throws
/// std::length_error when the ambient group exceeds `max_size`.
class FamilyStream {
public:
    explicit FamilyStream(FamilySpec spec, int max_size = 10);

    /// Advances to the next member; false once exhausted.
    bool next();
    const Permutation& current() const { return *current_; }

    /// Counts the remaining members (consumes the stream).
    std::uint64_t count();

private:
    FamilySpec spec_;
    std::vector<int> values_;
    bool started_ = false;
    bool done_ = false;
    std::optional<Permutation> current_;
};

std::uint64_t count_family(const FamilySpec& spec, int max_size = 10);

enum class SinkMode { all, unique_sink_anywhere, unique_sink_fixed_vertex };

const char* to_string(SinkMode m);

/// Brute force over all 2^{nk} orientations of K_{n,k}. The fixed vertex is the
/// first vertex of the n-side. Throws std::length_error when nk > max_edges.
std::uint64_t count_acyclic_orientations(int n, int k, SinkMode mode, int max_edges = 20);

/// True iff the first n-p entries of pi in S_n are {1..n-p} (1 <= p <= n-1).
bool is_p_resultant(const Permutation& pi, int p);

/// r <= n-p: r must be a left-to-right maximum of pi^left; r > n-p: r must be a
/// right-to-left minimum of pi^right. False if pi is not p-resultant.
bool validate_r_placement(const Permutation& pi, int p, int r);

}  // namespace toppling
