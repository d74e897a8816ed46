#include "toppling/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace toppling {

ToppleState::ToppleState(const Configuration& c)
    : n_(c.n()),
      site_of_(static_cast<std::size_t>(c.n()) + 2, 0),
      counts_(static_cast<std::size_t>(c.n()) + 2, 0) {
    for (int s = 1; s <= n_; ++s) {
        if (s == c.p()) {
            auto [a, b] = c.pair();
            site_of_[static_cast<std::size_t>(a)] = s;
            site_of_[static_cast<std::size_t>(b)] = s;
            counts_[static_cast<std::size_t>(s)] = 2;
        } else {
            site_of_[static_cast<std::size_t>(c.chip_at(s))] = s;
            counts_[static_cast<std::size_t>(s)] = 1;
        }
    }
}

std::vector<int> ToppleState::chips_at(int site) const {
    std::vector<int> out;
    for (int chip = 1; chip <= n_ + 1; ++chip) {
        if (site_of_[static_cast<std::size_t>(chip)] == site) out.push_back(chip);
    }
    return out;
}

std::vector<int> ToppleState::unstable_sites() const {
    std::vector<int> out;
    for (int s = 0; s <= n_ + 1; ++s) {
        if (counts_[static_cast<std::size_t>(s)] >= 2) out.push_back(s);
    }
    return out;
}

bool ToppleState::stable() const {
    return std::all_of(counts_.begin(), counts_.end(), [](int k) { return k < 2; });
}

void ToppleState::topple(int site, int alpha, int beta) {
    if (alpha > beta) std::swap(alpha, beta);
    if (alpha == beta || alpha < 1 || beta > n_ + 1 ||
        site_of_[static_cast<std::size_t>(alpha)] != site ||
        site_of_[static_cast<std::size_t>(beta)] != site) {
        throw std::invalid_argument("topple: chips " + std::to_string(alpha) + "," +
                                    std::to_string(beta) + " are not both at site " +
                                    std::to_string(site));
    }
    if (site - 1 < 0 || site + 1 > n_ + 1) {
        throw std::logic_error("topple: chip would leave 0.." + std::to_string(n_ + 1) +
                               " from site " + std::to_string(site));
    }
    site_of_[static_cast<std::size_t>(alpha)] = site - 1;
    site_of_[static_cast<std::size_t>(beta)] = site + 1;
    counts_[static_cast<std::size_t>(site)] -= 2;
    counts_[static_cast<std::size_t>(site - 1)] += 1;
    counts_[static_cast<std::size_t>(site + 1)] += 1;
}

void ToppleState::topple(int site) {
    if (site < 0 || site > n_ + 1 || counts_[static_cast<std::size_t>(site)] != 2) {
        throw std::invalid_argument("topple: site " + std::to_string(site) +
                                    " does not hold exactly two chips");
    }
    auto chips = chips_at(site);
    topple(site, chips[0], chips[1]);
}

void ToppleState::topple(int site, std::mt19937_64& rng) {
    auto chips = (site < 0 || site > n_ + 1) ? std::vector<int>{} : chips_at(site);
    if (chips.size() < 2) {
        throw std::invalid_argument("topple: site " + std::to_string(site) + " holds fewer than two chips");
    }
    std::uniform_int_distribution<std::size_t> pick(0, chips.size() - 1);
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    topple(site, chips[i], chips[j]);
}

FinalState final_state(const ToppleState& s) {
    if (!s.stable()) throw std::logic_error("final_state: configuration is not stable");
    FinalState f{std::vector<int>(static_cast<std::size_t>(s.n()) + 2, 0), -1};
    for (int site = 0; site <= s.n() + 1; ++site) {
        if (s.chip_count(site) == 0) {
            if (f.empty_site != -1) throw std::logic_error("final_state: more than one empty site");
            f.empty_site = site;
        } else {
            f.occupancy[static_cast<std::size_t>(site)] = s.chips_at(site).front();
        }
    }
    return f;
}

RandomRun stabilize_random(const Configuration& c, std::uint64_t seed) {
    ToppleState s(c);
    std::mt19937_64 rng(seed);
    std::uint64_t count = 0;
    for (auto unstable = s.unstable_sites(); !unstable.empty(); unstable = s.unstable_sites()) {
        std::uniform_int_distribution<std::size_t> pick(0, unstable.size() - 1);
        s.topple(unstable[pick(rng)], rng);
        ++count;
    }
    return {final_state(s), count};
}

namespace {

// Any pair choice yields the same final state; the two smallest chips keep
// deterministic runs reproducible when a site holds more than two.
void topple_lowest_pair(ToppleState& s, int site) {
    if (s.chip_count(site) == 2) {
        s.topple(site);
        return;
    }
    auto chips = s.chips_at(site);
    s.topple(site, chips[0], chips[1]);
}

PassSnapshot snapshot(const ToppleState& s, std::uint64_t topples) {
    int first_gap = -1;
    int last_gap = -1;
    for (int site = 0; site <= s.n() + 1; ++site) {
        if (s.chip_count(site) == 0) {
            if (first_gap < 0) first_gap = site;
            last_gap = site;
        }
    }
    PassSnapshot snap;
    snap.topples = topples;
    snap.active_first_site = first_gap + 1;
    for (int site = 0; site < first_gap; ++site) snap.left_arm.push_back(s.chips_at(site).front());
    for (int site = first_gap + 1; site < last_gap; ++site) snap.active.push_back(s.chips_at(site));
    for (int site = last_gap + 1; site <= s.n() + 1; ++site) snap.right_arm.push_back(s.chips_at(site).front());
    return snap;
}

}  // namespace

PassRun stabilize_passes(const Configuration& c) {
    ToppleState s(c);
    const int p = c.p();
    PassTrace trace;
    while (s.chip_count(p) >= 2) {
        std::uint64_t topples = 0;
        topple_lowest_pair(s, p);
        ++topples;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int site = 0; site <= s.n() + 1; ++site) {
                if (site != p && s.chip_count(site) >= 2) {
                    topple_lowest_pair(s, site);
                    ++topples;
                    moved = true;
                }
            }
        }
        trace.push_back(snapshot(s, topples));
    }
    return {final_state(s), std::move(trace)};
}

FinalState stabilize(const Configuration& c) {
    ToppleState s(c);
    for (bool moved = true; moved;) {
        moved = false;
        for (int site = 0; site <= s.n() + 1; ++site) {
            if (s.chip_count(site) >= 2) {
                topple_lowest_pair(s, site);
                moved = true;
            }
        }
    }
    return final_state(s);
}

Resultant resultant(const FinalState& f) {
    std::vector<int> values;
    values.reserve(f.occupancy.size() - 1);
    for (std::size_t site = 0; site < f.occupancy.size(); ++site) {
        if (static_cast<int>(site) != f.empty_site) values.push_back(f.occupancy[site]);
    }
    return {Permutation::from_values(std::move(values)), f.empty_site};
}

Resultant resultant(const Configuration& c) { return resultant(stabilize(c)); }

}  // namespace toppling
