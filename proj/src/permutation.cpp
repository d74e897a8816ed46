#include "toppling/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace toppling {

Permutation Permutation::from_values(std::vector<int> values) {
    if (values.empty()) throw std::invalid_argument("permutation: empty sequence");
    const int n = static_cast<int>(values.size());
    std::vector<bool> seen(values.size() + 1, false);
    for (int v : values) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation: duplicate value " + std::to_string(v));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation: size must be positive");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

Permutation Permutation::reverse_complement() const {
    const int n = size();
    std::vector<int> out(values_.rbegin(), values_.rend());
    for (int& v : out) v = n + 1 - v;
    return Permutation(std::move(out));
}

RecordList records(std::span<const int> values, RecordDirection direction) {
    RecordList out;
    const int n = static_cast<int>(values.size());
    if (direction == RecordDirection::left_max) {
        int best = std::numeric_limits<int>::min();
        for (int i = 0; i < n; ++i) {
            if (values[static_cast<std::size_t>(i)] > best) {
                best = values[static_cast<std::size_t>(i)];
                out.push_back({i + 1, best});
            }
        }
    } else {
        int best = std::numeric_limits<int>::max();
        for (int i = n - 1; i >= 0; --i) {
            if (values[static_cast<std::size_t>(i)] < best) {
                best = values[static_cast<std::size_t>(i)];
                out.push_back({i + 1, best});
            }
        }
        std::reverse(out.begin(), out.end());
    }
    return out;
}

RecordList records(const Permutation& pi, RecordDirection direction) {
    return records(pi.values(), direction);
}

bool has_decomposable_prefix(const Permutation& pi, int prefix) {
    if (prefix < 0 || prefix > pi.size()) return false;
    // A prefix of distinct values is {1..m} iff its maximum is m.
    int mx = 0;
    for (int i = 1; i <= prefix; ++i) mx = std::max(mx, pi(i));
    return mx == prefix;
}

std::optional<Split> split_at(const Permutation& pi, int p) {
    const int n = pi.size();
    if (p < 1 || p > n) {
        throw std::invalid_argument("split_at: p=" + std::to_string(p) + " outside 1.." +
                                    std::to_string(n));
    }
    const int m = n - p;
    if (!has_decomposable_prefix(pi, m)) return std::nullopt;
    auto v = pi.values();
    return Split{std::vector<int>(v.begin(), v.begin() + m), std::vector<int>(v.begin() + m, v.end())};
}

namespace {

int parse_int(std::string_view token, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw std::invalid_argument("cannot parse '" + std::string(token) + "' in '" +
                                    std::string(whole) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
    text = trim(text);
    std::vector<int> values;
    if (text.find(',') == std::string_view::npos) {
        for (char ch : text) {
            if (ch < '0' || ch > '9') {
                throw std::invalid_argument("cannot parse '" + std::string(1, ch) + "' in '" +
                                            std::string(text) + "'");
            }
            values.push_back(ch - '0');
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            values.push_back(parse_int(trim(text.substr(start, end - start)), text));
            start = end + 1;
        }
    }
    return Permutation::from_values(std::move(values));
}

std::string to_string(const Permutation& pi) {
    std::string out;
    const bool compact = pi.size() <= 9;
    for (int i = 1; i <= pi.size(); ++i) {
        if (!compact && i > 1) out += ',';
        out += std::to_string(pi(i));
    }
    return out;
}

}  // namespace toppling
