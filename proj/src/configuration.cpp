#include "toppling/configuration.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace toppling {

Configuration::Configuration(std::vector<int> chips, int p) : chips_(std::move(chips)), p_(p) {
    const int n = static_cast<int>(chips_.size()) - 1;
    if (n < 1) throw std::invalid_argument("configuration: need at least one site");
    if (p_ < 1 || p_ > n) {
        throw std::invalid_argument("configuration: doubled site " + std::to_string(p_) +
                                    " outside 1.." + std::to_string(n));
    }
    std::vector<bool> seen(chips_.size() + 1, false);
    for (int c : chips_) {
        if (c < 1 || c > n + 1) {
            throw std::invalid_argument("configuration: chip " + std::to_string(c) +
                                        " outside 1.." + std::to_string(n + 1));
        }
        if (seen[static_cast<std::size_t>(c)]) {
            throw std::invalid_argument("configuration: duplicate chip " + std::to_string(c));
        }
        seen[static_cast<std::size_t>(c)] = true;
    }
    auto lo = chips_.begin() + (p_ - 1);
    if (*lo > *(lo + 1)) std::iter_swap(lo, lo + 1);
}

Configuration Configuration::from_sites(const std::vector<std::vector<int>>& sites) {
    std::vector<int> chips;
    int p = 0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const auto& s = sites[i];
        if (s.size() == 2) {
            if (p != 0) throw std::invalid_argument("configuration: more than one doubled site");
            p = static_cast<int>(i) + 1;
        } else if (s.size() != 1) {
            throw std::invalid_argument("configuration: site " + std::to_string(i + 1) + " holds " +
                                        std::to_string(s.size()) + " chips");
        }
        chips.insert(chips.end(), s.begin(), s.end());
    }
    if (p == 0) throw std::invalid_argument("configuration: no doubled site");
    return Configuration(std::move(chips), p);
}

int Configuration::chip_at(int site) const {
    if (site < 1 || site > n() || site == p_) {
        throw std::invalid_argument("configuration: site " + std::to_string(site) +
                                    " is not a single-chip site");
    }
    return chips_[static_cast<std::size_t>(site < p_ ? site - 1 : site)];
}

std::vector<std::vector<int>> Configuration::sites() const {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(n()));
    for (int s = 1; s <= n(); ++s) {
        if (s == p_) {
            auto [a, b] = pair();
            out.push_back({a, b});
        } else {
            out.push_back({chip_at(s)});
        }
    }
    return out;
}

int Configuration::site_of(int chip) const {
    auto it = std::find(chips_.begin(), chips_.end(), chip);
    if (it == chips_.end()) throw std::invalid_argument("configuration: no chip " + std::to_string(chip));
    const int idx = static_cast<int>(it - chips_.begin());  // 0-based index in the flat list
    return idx < p_ ? idx + 1 : idx;
}

MarkedConfiguration::MarkedConfiguration(Configuration c, int r) : config(std::move(c)), mark(r) {
    auto [a, b] = config.pair();
    if (mark != a && mark != b) {
        throw std::invalid_argument("marked configuration: chip " + std::to_string(mark) +
                                    " is not at the doubled site");
    }
}

int MarkedConfiguration::unmarked() const {
    auto [a, b] = config.pair();
    return mark == a ? b : a;
}

Configuration reverse_complement(const Configuration& c) {
    const int n = c.n();
    std::vector<int> chips(c.chips().rbegin(), c.chips().rend());
    for (int& x : chips) x = n + 2 - x;
    return Configuration(std::move(chips), n + 1 - c.p());
}

MarkedConfiguration lift(const Permutation& pi, int r, int p) {
    const int n = pi.size();
    if (r < 1 || r > n + 1) {
        throw std::invalid_argument("lift: r=" + std::to_string(r) + " outside 1.." + std::to_string(n + 1));
    }
    if (p < 1 || p > n) {
        throw std::invalid_argument("lift: p=" + std::to_string(p) + " outside 1.." + std::to_string(n));
    }
    std::vector<int> chips;
    chips.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        chips.push_back(pi(i) < r ? pi(i) : pi(i) + 1);
        if (i == p) chips.push_back(r);
    }
    return MarkedConfiguration(Configuration(std::move(chips), p), r);
}

std::array<Unlifted, 2> unlift(const Configuration& c) {
    auto drop = [&](int r) {
        std::vector<int> values;
        values.reserve(c.chips().size() - 1);
        for (int x : c.chips()) {
            if (x == r) continue;
            values.push_back(x > r ? x - 1 : x);
        }
        return Unlifted{Permutation::from_values(std::move(values)), r};
    };
    auto [a, b] = c.pair();
    return {drop(a), drop(b)};
}

Permutation map_w(const MarkedConfiguration& m) {
    const auto& c = m.config;
    std::vector<int> out;
    out.reserve(c.chips().size());
    for (int s = 1; s <= c.n(); ++s) {
        if (s == c.p()) {
            out.push_back(m.unmarked());
            out.push_back(m.mark);
        } else {
            out.push_back(c.chip_at(s));
        }
    }
    return Permutation::from_values(std::move(out));
}

namespace {

struct LiteralParser {
    std::string_view text;
    bool compact;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("configuration literal '" + std::string(text) + "': " + what +
                                    " at offset " + std::to_string(pos));
    }

    void skip_blanks() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    int chip() {
        skip_blanks();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            fail("expected a chip label");
        }
        if (compact) return text[pos++] - '0';
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos++] - '0');
        }
        return v;
    }

    bool star() {
        skip_blanks();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            return true;
        }
        return false;
    }

    MarkedConfiguration parse(bool allow_unmarked) {
        std::vector<std::vector<int>> sites;
        int mark = 0;
        bool need_sep = false;
        while (true) {
            skip_blanks();
            if (pos >= text.size()) break;
            if (need_sep && !compact) {
                if (text[pos] != ',') fail("expected ','");
                ++pos;
                skip_blanks();
            }
            if (pos < text.size() && text[pos] == '(') {
                ++pos;
                int a = chip();
                if (star()) mark = a;
                skip_blanks();
                if (!compact) {
                    if (pos >= text.size() || text[pos] != ',') fail("expected ',' inside pair");
                    ++pos;
                }
                int b = chip();
                if (star()) {
                    if (mark != 0) fail("two marked chips");
                    mark = b;
                }
                skip_blanks();
                if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
                ++pos;
                sites.push_back({a, b});
            } else {
                int a = chip();
                if (star()) fail("only a chip at the doubled site can be marked");
                sites.push_back({a});
            }
            need_sep = true;
        }
        if (sites.empty()) fail("empty literal");
        Configuration c = Configuration::from_sites(sites);
        if (mark == 0) {
            if (!allow_unmarked) fail("no marked chip");
            return MarkedConfiguration(c, c.pair().first);
        }
        return MarkedConfiguration(c, mark);
    }
};

}  // namespace

Configuration parse_configuration(std::string_view text) {
    LiteralParser parser{text, text.find(',') == std::string_view::npos};
    return parser.parse(true).config;
}

MarkedConfiguration parse_marked_configuration(std::string_view text) {
    LiteralParser parser{text, text.find(',') == std::string_view::npos};
    return parser.parse(false);
}

namespace {

std::string render(const Configuration& c, int mark) {
    std::string out;
    for (int s = 1; s <= c.n(); ++s) {
        if (s > 1) out += ',';
        if (s == c.p()) {
            auto [a, b] = c.pair();
            out += '(' + std::to_string(a) + (a == mark ? "*" : "") + ',' + std::to_string(b) +
                   (b == mark ? "*" : "") + ')';
        } else {
            out += std::to_string(c.chip_at(s));
        }
    }
    return out;
}

}  // namespace

std::string to_string(const Configuration& c) { return render(c, 0); }

std::string to_string(const MarkedConfiguration& m) { return render(m.config, m.mark); }

}  // namespace toppling
