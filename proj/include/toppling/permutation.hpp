#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toppling {

/// A permutation of {1..n} in one-line notation. Positions are 1-based in the
/// accessors; `values()` exposes the raw sequence.
class Permutation {
public:
    /// Validates that `values` is a bijection on {1..n}, n >= 1.
    /// Throws std::invalid_argument on an empty sequence, a duplicate, or a value
    /// outside 1..n.
    static Permutation from_values(std::vector<int> values);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(values_.size()); }

    /// Value at 1-based position `i`.
    int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

    std::span<const int> values() const { return values_; }

    Permutation inverse() const;

    /// Value map v -> n+1-v combined with position reversal.
    Permutation reverse_complement() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}

    std::vector<int> values_;
};

enum class RecordDirection { left_max, right_min };

struct Record {
    int position;
    int value;
    bool operator==(const Record&) const = default;
};

using RecordList = std::vector<Record>;

/// Left-to-right maxima (first entry included) or right-to-left minima (last entry
/// included), listed by increasing position.
RecordList records(const Permutation& pi, RecordDirection direction);

/// Same as `records` on a raw sequence of distinct integers.
RecordList records(std::span<const int> values, RecordDirection direction);

struct Split {
    /// A permutation of {1..n-p}; empty when p == n.
    std::vector<int> left;
    /// Retains the original values {n-p+1..n}.
    std::vector<int> right;
};

/// Splits pi into its first n-p entries and the last p entries. Succeeds iff the
/// prefix is a permutation of {1..n-p}. Throws std::invalid_argument unless 1 <= p <= n.
std::optional<Split> split_at(const Permutation& pi, int p);

/// True iff the first `prefix` entries of pi are exactly {1..prefix}.
bool has_decomposable_prefix(const Permutation& pi, int prefix);

/// Parses "6214357" (single digits, n <= 9) or "6,2,1,4,3,5,7".
Permutation parse_permutation(std::string_view text);

/// Contiguous digits for n <= 9, comma separated otherwise.
std::string to_string(const Permutation& pi);

}  // namespace toppling
