#include "toppling/bijections.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "toppling/engine.hpp"

namespace toppling {

namespace {

void require_parts(int u, int o) {
    if (u < 1 || o < 1) {
        throw std::invalid_argument("Callan/Vesztergombi bijection needs U, O >= 1, got U=" + std::to_string(u) +
                                    " O=" + std::to_string(o));
    }
}

}  // namespace

// Labels: underlined 0..U-1 stand for values O+1..O+U, overlined U+2..N+1 for 1..O.
// Inside a block every element is labelled by its predecessor.
Permutation callan_to_vesztergombi(const CallanWord& w) {
    const int u = w.underlined();
    const int o = w.overlined();
    require_parts(u, o);
    const int n = u + o;
    const auto& blocks = w.blocks();
    std::vector<int> label(static_cast<std::size_t>(n) + 1, -1);
    std::vector<bool> used(static_cast<std::size_t>(n) + 2, false);
    auto assign = [&](int x, int l) {
        label[static_cast<std::size_t>(x)] = l;
        used[static_cast<std::size_t>(l)] = true;
    };
    for (const auto& b : blocks) {
        for (std::size_t t = 1; t < b.values.size(); ++t) assign(b.values[t], b.values[t - 1]);
    }
    assign(blocks.front().values.front(), 0);
    assign(blocks.back().values.front(), n + 1);

    std::vector<int> free_under;
    std::vector<int> free_over;
    for (int l = 1; l <= u - 1; ++l) {
        if (!used[static_cast<std::size_t>(l)]) free_under.push_back(l);
    }
    for (int l = u + 2; l <= n; ++l) {
        if (!used[static_cast<std::size_t>(l)]) free_over.push_back(l);
    }
    std::size_t next_under = 0;
    std::size_t next_over = 0;
    for (std::size_t b = 1; b + 1 < blocks.size(); ++b) {
        const int leader = blocks[b].values.front();
        auto& pool = blocks[b].underlined ? free_over : free_under;
        auto& next = blocks[b].underlined ? next_over : next_under;
        if (next >= pool.size()) throw std::logic_error("callan_to_vesztergombi: label pool exhausted");
        assign(leader, pool[next++]);
    }

    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
        const int l = label[static_cast<std::size_t>(x)];
        sigma[static_cast<std::size_t>(x - 1)] = l <= u - 1 ? l + o + 1 : l - u - 1;
    }
    return Permutation::from_values(std::move(sigma));
}

CallanWord vesztergombi_to_callan(const Permutation& sigma, int underlined, int overlined) {
    const int u = underlined;
    const int o = overlined;
    require_parts(u, o);
    if (!is_vesztergombi(sigma, u, o)) {
        throw std::invalid_argument(to_string(sigma) + " is not (" + std::to_string(u) + "," + std::to_string(o) +
                                    ")-Vesztergombi");
    }
    const int n = u + o;
    auto is_under = [u](int x) { return x <= u; };
    std::vector<int> succ(static_cast<std::size_t>(n) + 2, 0);
    int first = 0;
    int last = 0;
    std::vector<std::pair<int, int>> mid_under;  // (label, leader)
    std::vector<std::pair<int, int>> mid_over;
    for (int x = 1; x <= n; ++x) {
        const int v = sigma(x);
        const int l = v > o ? v - o - 1 : v + u + 1;
        if (l == 0) {
            first = x;
        } else if (l == n + 1) {
            last = x;
        } else if (is_under(x) == is_under(l)) {
            succ[static_cast<std::size_t>(l)] = x;
        } else {
            (is_under(x) ? mid_under : mid_over).emplace_back(l, x);
        }
    }
    std::sort(mid_under.begin(), mid_under.end());
    std::sort(mid_over.begin(), mid_over.end());

    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    auto chain = [&](int x) {
        for (; x != 0; x = succ[static_cast<std::size_t>(x)]) word.push_back(x);
    };
    chain(first);
    bool under = is_under(first);
    std::size_t iu = 0;
    std::size_t io = 0;
    while (true) {
        under = !under;
        auto& pool = under ? mid_under : mid_over;
        auto& idx = under ? iu : io;
        if (idx >= pool.size()) break;
        chain(pool[idx++].second);
    }
    chain(last);
    return CallanWord(Permutation::from_values(std::move(word)), u, o);
}

namespace {

struct RecordSplit {
    int m;
    RecordList left;
    RecordList right;
};

RecordSplit record_split(const Permutation& pi, int p) {
    const int n = pi.size() - 1;
    if (p < 1 || p > n) {
        throw std::invalid_argument("phi: site " + std::to_string(p) + " outside 1.." + std::to_string(n));
    }
    const int m = n + 1 - p;
    if (!has_decomposable_prefix(pi, m)) {
        throw std::invalid_argument("phi: " + to_string(pi) + " is not a resultant at site " + std::to_string(p));
    }
    auto v = pi.values();
    return {m, records(v.subspan(0, static_cast<std::size_t>(m)), RecordDirection::left_max),
            records(v.subspan(static_cast<std::size_t>(m)), RecordDirection::right_min)};
}

}  // namespace

Configuration phi(const Configuration& c, const Permutation& pi) {
    if (pi.size() != c.n() + 1) {
        throw std::invalid_argument("phi: resultant size " + std::to_string(pi.size()) + " does not match n+1=" +
                                    std::to_string(c.n() + 1));
    }
    auto split = record_split(pi, c.p());
    std::map<int, int> relabel;
    int next = 1;
    for (const auto& r : split.left) relabel[r.value] = next++;
    for (const auto& r : split.right) relabel[r.value] = next++;

    std::vector<std::vector<int>> sites;
    for (const auto& cell : c.sites()) {
        std::vector<int> kept;
        for (int chip : cell) {
            auto it = relabel.find(chip);
            if (it != relabel.end()) kept.push_back(it->second);
        }
        if (kept.empty() && cell.size() == 1) continue;
        if (kept.size() != cell.size()) {
            throw std::invalid_argument("phi: a chip at the doubled site is not a record of " + to_string(pi));
        }
        std::sort(kept.begin(), kept.end());
        sites.push_back(std::move(kept));
    }
    return Configuration::from_sites(sites);
}

Configuration phi_checked(const Configuration& c) { return phi(c, resultant(c).pi); }

Configuration phi_inverse(const Configuration& reduced, const Permutation& pi, int p) {
    const int n = pi.size() - 1;
    auto split = record_split(pi, p);
    const int i = static_cast<int>(split.left.size());
    const int j = static_cast<int>(split.right.size());
    if (reduced.n() != i + j - 1 || reduced.p() != j) {
        throw std::invalid_argument("phi_inverse: " + to_string(reduced) + " is not in S(" + std::to_string(i + j - 1) +
                                    "," + std::to_string(j) + ")");
    }
    std::vector<int> value_of(static_cast<std::size_t>(i + j) + 1);
    std::vector<bool> is_record(static_cast<std::size_t>(n) + 2, false);
    int next = 1;
    for (const auto& r : split.left) {
        value_of[static_cast<std::size_t>(next++)] = r.value;
        is_record[static_cast<std::size_t>(r.value)] = true;
    }
    for (const auto& r : split.right) {
        value_of[static_cast<std::size_t>(next++)] = r.value;
        is_record[static_cast<std::size_t>(r.value)] = true;
    }

    std::vector<std::vector<int>> sites(static_cast<std::size_t>(n) + 1);
    auto place = [&](int site, int chip) {
        if (site < 1 || site > n || !sites[static_cast<std::size_t>(site)].empty()) {
            throw std::invalid_argument("phi_inverse: no room for chip " + std::to_string(chip) + " at site " +
                                        std::to_string(site));
        }
        sites[static_cast<std::size_t>(site)].push_back(chip);
    };
    for (int t = 1; t <= n + 1; ++t) {
        if (is_record[static_cast<std::size_t>(pi(t))]) continue;
        place(t <= split.m ? p + t - 1 : p + t - n - 1, pi(t));
    }
    auto src = reduced.sites();
    std::size_t k = 0;
    for (int s = 1; s <= n; ++s) {
        auto& cell = sites[static_cast<std::size_t>(s)];
        if (!cell.empty()) continue;
        if (k >= src.size()) throw std::invalid_argument("phi_inverse: too few reduced sites");
        for (int chip : src[k++]) cell.push_back(value_of[static_cast<std::size_t>(chip)]);
    }
    if (k != src.size()) throw std::invalid_argument("phi_inverse: reduced sites left over");
    sites.erase(sites.begin());
    return Configuration::from_sites(sites);
}

}  // namespace toppling
