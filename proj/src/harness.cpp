#include "toppling/harness.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "toppling/characterize.hpp"
#include "toppling/counting.hpp"
#include "toppling/engine.hpp"
#include "toppling/families.hpp"
#include "toppling/polybernoulli.hpp"

namespace toppling {

std::uint64_t factorial_u64(int n) {
    if (n < 0 || n > 20) throw std::out_of_range("factorial_u64: n=" + std::to_string(n));
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(pool.size());
    for (int i = n; i >= 1; --i) {
        const std::uint64_t f = factorial_u64(i - 1);
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

namespace {

void require_config_cap(int n, int p, const Caps& caps) {
    if (p < 1 || p > n) {
        throw std::invalid_argument("need 1 <= p <= n, got n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
    if (n > caps.max_config_n) {
        throw std::length_error("S(" + std::to_string(n) + "," + std::to_string(p) + ") exceeds the cap n <= " +
                                std::to_string(caps.max_config_n));
    }
}

void require_perm_cap(int n, const Caps& caps) {
    if (n < 1) throw std::invalid_argument("permutation size must be positive");
    if (n > caps.max_perm_n) {
        throw std::length_error("S_" + std::to_string(n) + " exceeds the cap n <= " + std::to_string(caps.max_perm_n));
    }
}

bool sorted_after_toppling(const Configuration& c) {
    const auto pi = resultant(c).pi;
    auto values = pi.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

auto sum_merge = [](std::uint64_t& total, const std::uint64_t& part) { total += part; };

using FiberMap = std::map<Permutation, std::vector<Configuration>>;

}  // namespace

ConfigurationStream::ConfigurationStream(int n, int p, Caps caps) : n_(n), p_(p) {
    require_config_cap(n, p, caps);
    chips_.resize(static_cast<std::size_t>(n) + 1);
    std::iota(chips_.begin(), chips_.end(), 1);
}

bool ConfigurationStream::next() {
    while (!done_) {
        if (started_ && !std::next_permutation(chips_.begin(), chips_.end())) {
            done_ = true;
            break;
        }
        started_ = true;
        if (chips_[static_cast<std::size_t>(p_ - 1)] < chips_[static_cast<std::size_t>(p_)]) {
            current_.emplace(chips_, p_);
            return true;
        }
    }
    current_.reset();
    return false;
}

std::uint64_t configuration_count(int n) { return factorial_u64(n + 1) / 2; }

const char* to_string(Oracle o) { return o == Oracle::simulate ? "simulate" : "characterize"; }

std::uint64_t brute_count_toppleable(int n, int p, Oracle oracle, int jobs, Caps caps) {
    require_config_cap(n, p, caps);
    return map_reduce_configurations<std::uint64_t>(
        n, p, jobs,
        [oracle](const Configuration& c, std::uint64_t& acc) {
            const bool ok = oracle == Oracle::simulate ? sorted_after_toppling(c) : is_p_toppleable(c);
            acc += ok ? 1 : 0;
        },
        sum_merge);
}

std::uint64_t brute_T(int n, int p, int r, Oracle oracle, int jobs, Caps caps) {
    require_perm_cap(n, caps);
    if (p < 1 || p > n || r < 1 || r > n + 1) throw std::invalid_argument("brute_T: p or r out of range");
    return map_reduce_permutations<std::uint64_t>(
        n, jobs,
        [&](const std::vector<int>& v, std::uint64_t& acc) {
            auto pi = Permutation::from_values(v);
            const bool ok = oracle == Oracle::simulate ? sorted_after_toppling(lift(pi, r, p).config)
                                                       : is_rp_toppleable(pi, r, p);
            acc += ok ? 1 : 0;
        },
        sum_merge);
}

std::uint64_t brute_all_r(int n, int p, Oracle oracle, int jobs, Caps caps) {
    require_perm_cap(n, caps);
    if (p < 1 || p > n) throw std::invalid_argument("brute_all_r: p out of range");
    return map_reduce_permutations<std::uint64_t>(
        n, jobs,
        [&](const std::vector<int>& v, std::uint64_t& acc) {
            auto pi = Permutation::from_values(v);
            bool ok = true;
            if (oracle == Oracle::simulate) {
                for (int r = 1; r <= n + 1 && ok; ++r) ok = sorted_after_toppling(lift(pi, r, p).config);
            } else {
                ok = is_all_r_toppleable(pi, p);
            }
            acc += ok ? 1 : 0;
        },
        sum_merge);
}

std::map<Permutation, std::vector<Configuration>> resultant_fibers(int n, int p, int jobs, Caps caps) {
    if (p < 1 || p > n - 1) throw std::invalid_argument("resultant_fibers: need 1 <= p <= n-1");
    require_config_cap(n - 1, p, caps);
    return map_reduce_configurations<FiberMap>(
        n - 1, p, jobs, [](const Configuration& c, FiberMap& acc) { acc[resultant(c).pi].push_back(c); },
        [](FiberMap& total, FiberMap& part) {
            for (auto& [pi, list] : part) {
                auto& dst = total[pi];
                dst.insert(dst.end(), list.begin(), list.end());
            }
        });
}

std::pair<int, int> class_of(const Permutation& pi, int p) {
    const int m = pi.size() - p;
    auto v = pi.values();
    return {static_cast<int>(records(v.subspan(0, static_cast<std::size_t>(m)), RecordDirection::left_max).size()),
            static_cast<int>(records(v.subspan(static_cast<std::size_t>(m)), RecordDirection::right_min).size())};
}

ClassArray resultant_table(int n, int p, int jobs, Caps caps) {
    auto fibers = resultant_fibers(n, p, jobs, caps);
    const int m = n - p;
    ClassArray out{n, p,
                   std::vector<std::vector<std::uint64_t>>(static_cast<std::size_t>(m),
                                                           std::vector<std::uint64_t>(static_cast<std::size_t>(p), 0)),
                   {},
                   std::vector<std::vector<std::vector<Permutation>>>(
                       static_cast<std::size_t>(m), std::vector<std::vector<Permutation>>(static_cast<std::size_t>(p)))};
    for (const auto& [pi, list] : fibers) {
        if (!is_p_resultant(pi, p)) {
            throw std::logic_error("resultant " + to_string(pi) + " has no decomposable prefix of length " +
                                   std::to_string(m));
        }
        const auto size = static_cast<std::uint64_t>(list.size());
        out.fibers[pi] = size;
        auto [i, j] = class_of(pi, p);
        auto& cell = out.counts[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        auto& who = out.members[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        if (!who.empty() && cell != size) {
            throw std::logic_error("class (" + std::to_string(i) + "," + std::to_string(j) + ") is not constant: " +
                                   to_string(who.front()) + " has " + std::to_string(cell) + ", " + to_string(pi) +
                                   " has " + std::to_string(size));
        }
        cell = size;
        who.push_back(pi);
    }
    return out;
}

std::map<Permutation, std::uint64_t> resultant_counts_marked(int n, int p, int r, int jobs, Caps caps) {
    if (p < 1 || p > n - 1 || r < 1 || r > n) throw std::invalid_argument("resultant_counts_marked: p or r out of range");
    require_perm_cap(n - 1, caps);
    require_config_cap(n - 1, p, caps);
    using Counts = std::map<Permutation, std::uint64_t>;
    return map_reduce_permutations<Counts>(
        n - 1, jobs,
        [&](const std::vector<int>& v, Counts& acc) {
            ++acc[resultant(lift(Permutation::from_values(v), r, p).config).pi];
        },
        [](Counts& total, Counts& part) {
            for (const auto& [pi, c] : part) total[pi] += c;
        });
}

std::string to_csv(const Table& t) {
    std::ostringstream os;
    auto line = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            const bool quote = cells[i].find_first_of(",\" ") != std::string::npos;
            if (!quote) {
                os << cells[i];
                continue;
            }
            os << '"';
            for (char ch : cells[i]) os << (ch == '"' ? "\"\"" : std::string(1, ch));
            os << '"';
        }
        os << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
    return os.str();
}

std::string to_json(const Table& t) {
    nlohmann::ordered_json j;
    j["table"] = t.name;
    j["columns"] = t.header;
    j["rows"] = t.rows;
    return j.dump(2) + "\n";
}

namespace {

std::string str(const mpz_class& v) { return v.get_str(); }
std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

Table pb_table(const std::string& name, int size, bool type_b) {
    if (size < 0) throw std::invalid_argument("table size must be non-negative");
    Table t{name, {"n"}, {}};
    for (int k = 0; k <= size; ++k) t.header.push_back("k=" + str(k));
    for (int n = 0; n <= size; ++n) {
        std::vector<std::string> row{str(n)};
        for (int k = 0; k <= size; ++k) row.push_back(str(type_b ? kernel().B(n, k) : kernel().C(n, k)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string join_configs(const std::vector<Configuration>& list) {
    std::string out;
    for (const auto& c : list) {
        if (!out.empty()) out += ' ';
        out += to_string(c);
    }
    return out;
}

std::string record_string(std::span<const int> v, RecordDirection d) {
    std::string out;
    for (const auto& r : records(v, d)) {
        if (!out.empty()) out += ' ';
        out += str(r.value);
    }
    return out;
}

}  // namespace

Table build_table(const TableRequest& req) {
    if (req.which == "1a") return pb_table("1a", req.n, true);
    if (req.which == "1b") return pb_table("1b", req.n, false);
    if (req.which == "2") {
        Table t{"2", {"n", "p", "formula", "simulate", "characterize"}, {}};
        for (int n = 1; n <= req.n; ++n) {
            for (int p = 1; p <= n; ++p) {
                t.rows.push_back({str(n), str(p), str(count_toppleable_configs(n, p)),
                                  str(brute_count_toppleable(n, p, Oracle::simulate, req.jobs, req.caps)),
                                  str(brute_count_toppleable(n, p, Oracle::characterize, req.jobs, req.caps))});
            }
        }
        return t;
    }
    if (req.which == "resultant-fibers") {
        Table t{"resultant-fibers", {"resultant", "i", "j", "count", "configurations"}, {}};
        for (const auto& [pi, list] : resultant_fibers(req.n, req.p, req.jobs, req.caps)) {
            auto [i, j] = class_of(pi, req.p);
            t.rows.push_back({to_string(pi), str(i), str(j), str(static_cast<std::uint64_t>(list.size())),
                              join_configs(list)});
        }
        return t;
    }
    if (req.which == "T-array") {
        auto arr = resultant_table(req.n, req.p, req.jobs, req.caps);
        Table t{"T-array", {"i"}, {}};
        for (int j = 1; j <= req.p; ++j) t.header.push_back("j=" + str(j));
        for (std::size_t i = 0; i < arr.counts.size(); ++i) {
            std::vector<std::string> row{str(static_cast<int>(i) + 1)};
            for (auto c : arr.counts[i]) row.push_back(str(c));
            t.rows.push_back(std::move(row));
        }
        return t;
    }
    if (req.which == "T-counts") {
        Table t{"T-counts", {"p", "r", "brute", "delta", "c_sum"}, {}};
        for (int p = 1; p <= req.n; ++p) {
            for (int r = 1; r <= req.n + 1; ++r) {
                t.rows.push_back({str(p), str(r), str(brute_T(req.n, p, r, Oracle::simulate, req.jobs, req.caps)),
                                  str(count_rp_toppleable(req.n, p, r, RpMethod::delta)),
                                  str(count_rp_toppleable(req.n, p, r, RpMethod::c_sum))});
            }
        }
        return t;
    }
    if (req.which == "Npi") {
        Table t{"Npi", {"resultant", "left_records", "right_minima", "brute", "formula"}, {}};
        for (const auto& [pi, c] : resultant_counts_marked(req.n, req.p, req.r, req.jobs, req.caps)) {
            auto v = pi.values();
            const auto m = static_cast<std::size_t>(req.n - req.p);
            t.rows.push_back({to_string(pi), record_string(v.subspan(0, m), RecordDirection::left_max),
                              record_string(v.subspan(m), RecordDirection::right_min), str(c),
                              str(count_N_pi(pi, req.r, req.p))});
        }
        return t;
    }
    throw std::invalid_argument("unknown table '" + req.which + "'");
}

const char* to_string(Status s) {
    switch (s) {
        case Status::match: return "match";
        case Status::mismatch: return "mismatch";
        case Status::documented_discrepancy: return "documented-discrepancy";
    }
    return "?";
}

std::size_t VerifyReport::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [s](const VerifyItem& it) { return it.status == s; }));
}

std::string to_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["n_max"] = r.n_max;
    j["ok"] = r.ok();
    j["summary"] = {{"match", r.count(Status::match)},
                    {"mismatch", r.count(Status::mismatch)},
                    {"documented-discrepancy", r.count(Status::documented_discrepancy)}};
    auto& items = j["items"] = nlohmann::ordered_json::array();
    for (const auto& it : r.items) {
        nlohmann::ordered_json e;
        e["claim"] = it.claim;
        e["parameters"] = it.parameters;
        e["expected"] = it.expected;
        e["observed"] = it.observed;
        e["status"] = to_string(it.status);
        if (!it.note.empty()) e["note"] = it.note;
        items.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

std::string to_text(const VerifyReport& r) {
    std::ostringstream os;
    for (const auto& it : r.items) {
        if (it.status == Status::match) continue;
        os << to_string(it.status) << "  " << it.claim << " [" << it.parameters << "] expected " << it.expected
           << ", observed " << it.observed;
        if (!it.note.empty()) os << " (" << it.note << ")";
        os << '\n';
    }
    os << "n_max=" << r.n_max << ": " << r.count(Status::match) << " match, " << r.count(Status::mismatch)
       << " mismatch, " << r.count(Status::documented_discrepancy) << " documented-discrepancy\n";
    return os.str();
}

}  // namespace toppling
