#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toppling/permutation.hpp"

namespace toppling {

/// n+1 labeled chips {1..n+1} on sites 1..n, one chip per site except the doubled
/// site p which holds an unordered pair. Equality treats the pair as a set.
class Configuration {
public:
    /// `chips` lists the n+1 labels in site order; the entries at 0-based indices
    /// p-1 and p form the pair at site p. Throws std::invalid_argument when the
    /// labels are not exactly {1..n+1} or p is outside 1..n.
    Configuration(std::vector<int> chips, int p);

    /// One entry per site 1..n; exactly one site must hold two chips.
    static Configuration from_sites(const std::vector<std::vector<int>>& sites);

    int n() const { return static_cast<int>(chips_.size()) - 1; }
    int p() const { return p_; }

    /// Chip on a single-chip site; throws std::invalid_argument for site p.
    int chip_at(int site) const;

    /// The pair at site p as (smaller, larger).
    std::pair<int, int> pair() const {
        return {chips_[static_cast<std::size_t>(p_ - 1)], chips_[static_cast<std::size_t>(p_)]};
    }

    /// Chips per site 1..n (the pair sorted ascending).
    std::vector<std::vector<int>> sites() const;

    /// C^{-1}(chip): the site holding `chip`.
    int site_of(int chip) const;

    /// Flat chip sequence in site order with the pair sorted ascending.
    const std::vector<int>& chips() const { return chips_; }

    auto operator<=>(const Configuration&) const = default;
    bool operator==(const Configuration&) const = default;

private:
    std::vector<int> chips_;
    int p_;
};

/// A configuration with one chip of the pair distinguished as the added chip.
struct MarkedConfiguration {
    Configuration config;
    int mark;

    MarkedConfiguration(Configuration c, int r);

    /// The chip of the pair that is not the mark.
    int unmarked() const;

    bool operator==(const MarkedConfiguration&) const = default;
};

/// Reflects sites i -> n+1-i and relabels chips c -> n+2-c, so S(n,p) maps to
/// S(n,n+1-p). Involutive.
Configuration reverse_complement(const Configuration& c);

/// pi^{(r,p)}: chip (pi_i < r ? pi_i : pi_i + 1) at site i and chip r added at site p.
/// Throws std::invalid_argument unless 1 <= r <= n+1 and 1 <= p <= n.
MarkedConfiguration lift(const Permutation& pi, int r, int p);

struct Unlifted {
    Permutation pi;
    int r;
    bool operator==(const Unlifted&) const = default;
};

/// The two (pi, r) pairs with lift(pi, r, p) == c, ordered by r.
std::array<Unlifted, 2> unlift(const Configuration& c);

/// Reads the sites 1..p (the unmarked chip at p), then the mark, then sites p+1..n.
/// The result is a permutation of {1..n+1}.
Permutation map_w(const MarkedConfiguration& m);

/// Parses "7,3,1,5,(2,4),6,8". A `*` suffix on a pair member marks it; use
/// `parse_marked_configuration` to keep the mark.
Configuration parse_configuration(std::string_view text);
MarkedConfiguration parse_marked_configuration(std::string_view text);

std::string to_string(const Configuration& c);
std::string to_string(const MarkedConfiguration& m);

}  // namespace toppling
