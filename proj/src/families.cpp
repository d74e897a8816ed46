#include "toppling/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toppling {

namespace {

void require_length(const Permutation& pi, int expected, const char* what) {
    if (pi.size() != expected) {
        throw std::invalid_argument(std::string(what) + ": permutation of length " + std::to_string(pi.size()) +
                                    ", expected " + std::to_string(expected));
    }
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

bool is_vesztergombi(const Permutation& pi, int k, int n) {
    require_length(pi, k + n, "vesztergombi");
    for (int i = 1; i <= pi.size(); ++i) {
        const int d = pi(i) - i;
        if (d < -k || d > n) return false;
    }
    return true;
}

std::vector<CallanBlock> callan_blocks(const Permutation& w, int underlined) {
    std::vector<CallanBlock> out;
    for (int x : w.values()) {
        const bool u = x <= underlined;
        if (out.empty() || out.back().underlined != u) out.push_back({u, {}});
        out.back().values.push_back(x);
    }
    return out;
}

bool is_callan(const Permutation& pi, int underlined, int overlined) {
    require_length(pi, underlined + overlined, "callan");
    for (const auto& b : callan_blocks(pi, underlined)) {
        if (b.underlined ? !std::is_sorted(b.values.begin(), b.values.end())
                         : !std::is_sorted(b.values.rbegin(), b.values.rend())) {
            return false;
        }
    }
    return true;
}

CallanWord::CallanWord(Permutation word, int underlined, int overlined)
    : word_(std::move(word)), u_(underlined), o_(overlined) {
    if (u_ < 0 || o_ < 0 || !is_callan(word_, u_, o_)) {
        throw std::invalid_argument(to_string(word_) + " is not a (" + std::to_string(u_) + "," +
                                    std::to_string(o_) + ")-Callan permutation");
    }
    blocks_ = callan_blocks(word_, u_);
}

std::vector<int> excedance_set(const Permutation& pi) {
    std::vector<int> out;
    for (int i = 1; i <= pi.size(); ++i) {
        if (pi(i) > i) out.push_back(i);
    }
    return out;
}

std::string to_string(const FamilySpec& spec) {
    auto pair = [](const char* name, int a, int b) {
        return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    };
    return std::visit(
        overloaded{
            [&](const family::Vesztergombi& f) { return pair("vesztergombi", f.k, f.n); },
            [&](const family::Callan& f) { return pair("callan", f.underlined, f.overlined); },
            [&](const family::CallanUnderlinedFirst& f) {
                return pair("callan_underlined_first", f.underlined, f.overlined);
            },
            [&](const family::CallanFirst& f) {
                return "callan_first(" + std::to_string(f.underlined) + "," + std::to_string(f.overlined) + "," +
                       std::to_string(f.r) + ")";
            },
            [&](const family::WindowC& f) { return pair("window_C", f.n, f.k); },
            [&](const family::ExcedanceSet& f) { return pair("excedance_set", f.n, f.k); },
        },
        spec);
}

int ambient_size(const FamilySpec& spec) {
    return std::visit(overloaded{
                          [](const family::Vesztergombi& f) { return f.k + f.n; },
                          [](const family::Callan& f) { return f.underlined + f.overlined; },
                          [](const family::CallanUnderlinedFirst& f) { return f.underlined + f.overlined; },
                          [](const family::CallanFirst& f) { return f.underlined + f.overlined; },
                          [](const family::WindowC& f) { return f.n + f.k; },
                          [](const family::ExcedanceSet& f) { return f.n + f.k; },
                      },
                      spec);
}

bool is_member(const FamilySpec& spec, const Permutation& pi) {
    return std::visit(
        overloaded{
            [&](const family::Vesztergombi& f) { return is_vesztergombi(pi, f.k, f.n); },
            [&](const family::Callan& f) { return is_callan(pi, f.underlined, f.overlined); },
            [&](const family::CallanUnderlinedFirst& f) {
                return pi(1) <= f.underlined && is_callan(pi, f.underlined, f.overlined);
            },
            [&](const family::CallanFirst& f) {
                return pi(1) == f.r && is_callan(pi, f.underlined, f.overlined);
            },
            [&](const family::WindowC& f) {
                require_length(pi, f.n + f.k, "window_C");
                for (int i = 1; i <= pi.size(); ++i) {
                    const int d = pi(i) - i;
                    if (d < -f.k || d >= f.n) return false;
                }
                return true;
            },
            [&](const family::ExcedanceSet& f) {
                require_length(pi, f.n + f.k, "excedance_set");
                auto e = excedance_set(pi);
                if (static_cast<int>(e.size()) != f.k) return false;
                for (int i = 0; i < f.k; ++i) {
                    if (e[static_cast<std::size_t>(i)] != i + 1) return false;
                }
                return true;
            },
        },
        spec);
}

FamilyStream::FamilyStream(FamilySpec spec, int max_size) : spec_(spec) {
    const int m = ambient_size(spec_);
    if (m > max_size) {
        throw std::length_error(to_string(spec_) + " lives in S_" + std::to_string(m) + ", cap is " +
                                std::to_string(max_size));
    }
    if (m < 1) throw std::invalid_argument(to_string(spec_) + ": empty ambient group");
    values_.resize(static_cast<std::size_t>(m));
    std::iota(values_.begin(), values_.end(), 1);
}

bool FamilyStream::next() {
    while (!done_) {
        if (started_) {
            if (!std::next_permutation(values_.begin(), values_.end())) {
                done_ = true;
                break;
            }
        }
        started_ = true;
        auto pi = Permutation::from_values(values_);
        if (is_member(spec_, pi)) {
            current_ = std::move(pi);
            return true;
        }
    }
    current_.reset();
    return false;
}

std::uint64_t FamilyStream::count() {
    std::uint64_t c = 0;
    while (next()) ++c;
    return c;
}

std::uint64_t count_family(const FamilySpec& spec, int max_size) { return FamilyStream(spec, max_size).count(); }

const char* to_string(SinkMode m) {
    switch (m) {
        case SinkMode::all: return "all";
        case SinkMode::unique_sink_anywhere: return "unique_sink_anywhere";
        case SinkMode::unique_sink_fixed_vertex: return "unique_sink_fixed_vertex";
    }
    return "?";
}

std::uint64_t count_acyclic_orientations(int n, int k, SinkMode mode, int max_edges) {
    if (n < 0 || k < 0) throw std::invalid_argument("negative part size");
    const int e = n * k;
    if (e > max_edges) {
        throw std::length_error("K_{" + std::to_string(n) + "," + std::to_string(k) + "} has " + std::to_string(e) +
                                " edges, cap is " + std::to_string(max_edges));
    }
    const int v = n + k;
    // Edge (a,b) joins a in 0..n-1 to n+b; a set bit orients it a -> n+b.
    std::uint64_t total = 0;
    std::vector<int> indeg(static_cast<std::size_t>(v));
    std::vector<int> outdeg(static_cast<std::size_t>(v));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(v));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
        std::fill(indeg.begin(), indeg.end(), 0);
        std::fill(outdeg.begin(), outdeg.end(), 0);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < k; ++b) {
                if (mask >> (a * k + b) & 1) {
                    ++outdeg[static_cast<std::size_t>(a)];
                    ++indeg[static_cast<std::size_t>(n + b)];
                } else {
                    ++outdeg[static_cast<std::size_t>(n + b)];
                    ++indeg[static_cast<std::size_t>(a)];
                }
            }
        }
        auto deg = indeg;
        queue.clear();
        for (int u = 0; u < v; ++u) {
            if (deg[static_cast<std::size_t>(u)] == 0) queue.push_back(u);
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            auto release = [&](int w) {
                if (--deg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
            };
            if (u < n) {
                for (int b = 0; b < k; ++b) {
                    if (mask >> (u * k + b) & 1) release(n + b);
                }
            } else {
                for (int a = 0; a < n; ++a) {
                    if (!(mask >> (a * k + (u - n)) & 1)) release(a);
                }
            }
        }
        if (static_cast<int>(queue.size()) < v) continue;
        if (mode == SinkMode::all) {
            ++total;
            continue;
        }
        int sinks = 0;
        int sink = -1;
        for (int u = 0; u < v; ++u) {
            if (outdeg[static_cast<std::size_t>(u)] == 0) {
                ++sinks;
                sink = u;
            }
        }
        if (sinks != 1) continue;
        if (mode == SinkMode::unique_sink_anywhere || sink == 0) ++total;
    }
    return total;
}

bool is_p_resultant(const Permutation& pi, int p) {
    const int n = pi.size();
    if (p < 1 || p > n - 1) return false;
    return has_decomposable_prefix(pi, n - p);
}

bool validate_r_placement(const Permutation& pi, int p, int r) {
    if (!is_p_resultant(pi, p)) return false;
    const int n = pi.size();
    const int m = n - p;
    if (r < 1 || r > n) return false;
    auto v = pi.values();
    auto recs = r <= m ? records(v.subspan(0, static_cast<std::size_t>(m)), RecordDirection::left_max)
                       : records(v.subspan(static_cast<std::size_t>(m)), RecordDirection::right_min);
    return std::any_of(recs.begin(), recs.end(), [r](const Record& rec) { return rec.value == r; });
}

}  // namespace toppling
