#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "toppling/configuration.hpp"
#include "toppling/permutation.hpp"

namespace toppling {

/// Chips on the segment 0..n+1 during the dynamics. Stored as a site per chip;
/// chip labels are 1..n+1.
class ToppleState {
public:
    explicit ToppleState(const Configuration& c);

    int n() const { return n_; }
    int chip_count(int site) const { return counts_[static_cast<std::size_t>(site)]; }

    /// Chips at `site`, ascending.
    std::vector<int> chips_at(int site) const;

    /// Sites holding two or more chips, ascending.
    std::vector<int> unstable_sites() const;
    bool stable() const;

    /// Removes alpha < beta from `site`, moves alpha to site-1 and beta to site+1.
    /// Throws std::invalid_argument if either chip is not at `site`, and
    /// std::logic_error if a chip would leave 0..n+1.
    void topple(int site, int alpha, int beta);

    /// Topples a site with exactly two chips.
    void topple(int site);

    /// Topples a uniformly chosen 2-subset of the chips at `site`.
    void topple(int site, std::mt19937_64& rng);

private:
    int n_;
    std::vector<int> site_of_;  // indexed by chip, entry 0 unused
    std::vector<int> counts_;   // indexed by site 0..n+1
};

/// One chip per site of 0..n+1 except `empty_site`; occupancy[empty_site] == 0.
struct FinalState {
    std::vector<int> occupancy;
    int empty_site;

    bool operator==(const FinalState&) const = default;
};

FinalState final_state(const ToppleState& s);

struct RandomRun {
    FinalState final;
    std::uint64_t topple_count;
};

/// Uniform site among the unstable ones, uniform pair at that site, until stable.
RandomRun stabilize_random(const Configuration& c, std::uint64_t seed);

/// Snapshot at the end of a pass. Arms are the frozen chip runs outside the two
/// gaps; the active part is everything between them, one chip list per site.
struct PassSnapshot {
    std::vector<int> left_arm;
    std::vector<std::vector<int>> active;
    std::vector<int> right_arm;
    int active_first_site;
    std::uint64_t topples;
};

using PassTrace = std::vector<PassSnapshot>;

struct PassRun {
    FinalState final;
    PassTrace trace;
};

/// Topples site p once, then any unstable site other than p until none remains;
/// that is one pass. Repeats until stable.
PassRun stabilize_passes(const Configuration& c);

/// Fast deterministic stabilization (leftmost unstable site first), no trace.
FinalState stabilize(const Configuration& c);

struct Resultant {
    Permutation pi;
    int empty_site;
};

/// Occupancy read left to right, skipping the empty site. A permutation of {1..n+1}.
Resultant resultant(const FinalState& f);
Resultant resultant(const Configuration& c);

}  // namespace toppling
