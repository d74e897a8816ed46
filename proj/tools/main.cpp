#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <map>
#include <string>

#include "toppling/bijections.hpp"
#include "toppling/characterize.hpp"
#include "toppling/counting.hpp"
#include "toppling/engine.hpp"
#include "toppling/families.hpp"
#include "toppling/harness.hpp"
#include "toppling/polybernoulli.hpp"

using namespace toppling;
using json = nlohmann::ordered_json;

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

json trace_json(const Configuration& c, const PassRun& run) {
    const auto res = resultant(run.final);
    json j;
    j["config"] = to_string(c);
    j["resultant"] = to_string(res.pi);
    j["empty_site"] = res.empty_site;
    j["occupancy"] = run.final.occupancy;
    auto& passes = j["passes"] = json::array();
    for (const auto& s : run.trace) {
        passes.push_back({{"left_arm", s.left_arm},
                          {"active", s.active},
                          {"right_arm", s.right_arm},
                          {"active_first_site", s.active_first_site},
                          {"topples", s.topples}});
    }
    return j;
}

FamilySpec family_spec(const std::string& name, int n, int k, int u, int o, int r) {
    if (name == "vesztergombi") return family::Vesztergombi{k, n};
    if (name == "callan") return family::Callan{u, o};
    if (name == "callan_underlined_first") return family::CallanUnderlinedFirst{u, o};
    if (name == "callan_first") return family::CallanFirst{u, o, r};
    if (name == "window_C") return family::WindowC{n, k};
    if (name == "excedance_set") return family::ExcedanceSet{n, k};
    throw CLI::ValidationError("--family", "unknown family '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chip toppling on permutations and poly-Bernoulli numbers"};
    app.require_subcommand(1);
    int exit_code = 0;

    // topple
    auto* topple = app.add_subcommand("topple", "Stabilize a configuration");
    std::string config_text;
    std::uint64_t seed = 0;
    bool random_schedule = false;
    bool trace = false;
    topple->add_option("--config", config_text, "Configuration literal, e.g. \"1,(2,3),4\"")->required();
    auto* seed_opt = topple->add_option("--seed", seed, "Use the random schedule with this seed");
    topple->add_flag("--random", random_schedule, "Use the random schedule (seed 0 unless --seed)");
    auto* trace_opt = topple->add_flag("--trace", trace, "Print the pass trace as JSON");
    trace_opt->excludes(seed_opt);
    topple->callback([&] {
        auto c = parse_configuration(config_text);
        if (trace) {
            std::cout << trace_json(c, stabilize_passes(c)).dump(2) << '\n';
            return;
        }
        if (random_schedule || seed_opt->count() > 0) {
            auto run = stabilize_random(c, seed);
            auto res = resultant(run.final);
            std::cout << "resultant: " << to_string(res.pi) << ", empty-site: " << res.empty_site
                      << ", topples: " << run.topple_count << '\n';
            return;
        }
        auto res = resultant(stabilize_passes(c).final);
        std::cout << "resultant: " << to_string(res.pi) << ", empty-site: " << res.empty_site << '\n';
    });

    // check
    auto* check = app.add_subcommand("check", "Toppleability predicates");
    check->require_subcommand(1);
    std::string perm_text;
    int r = 0;
    int p = 0;
    auto* check_config = check->add_subcommand("config", "Is the configuration toppleable?");
    check_config->add_option("--config", config_text)->required();
    check_config->callback([&] { std::cout << bool_str(is_p_toppleable(parse_configuration(config_text))) << '\n'; });
    auto* check_rp = check->add_subcommand("rp", "Is the permutation (r,p)-toppleable?");
    check_rp->add_option("--perm", perm_text)->required();
    check_rp->add_option("--r", r)->required();
    check_rp->add_option("--p", p)->required();
    check_rp->callback([&] { std::cout << bool_str(is_rp_toppleable(parse_permutation(perm_text), r, p)) << '\n'; });
    auto* check_all = check->add_subcommand("all-r", "Is the permutation (r,p)-toppleable for every r?");
    check_all->add_option("--perm", perm_text)->required();
    check_all->add_option("--p", p)->required();
    check_all->callback([&] { std::cout << bool_str(is_all_r_toppleable(parse_permutation(perm_text), p)) << '\n'; });

    // count
    auto* count = app.add_subcommand("count", "Closed-form and brute-force counts");
    count->require_subcommand(1);
    int n = 0;
    int k = 0;
    int u = 0;
    int o = 0;
    int i = 0;
    int j = 0;
    int max_size = 10;
    std::string method = "delta";
    std::string family_name;
    std::string mode = "all";
    bool list = false;
    auto* c_top = count->add_subcommand("toppleable", "Toppleable configurations of S(n,p)");
    c_top->add_option("--n", n)->required();
    c_top->add_option("--p", p)->required();
    c_top->callback([&] { std::cout << count_toppleable_configs(n, p).get_str() << '\n'; });
    auto* c_rp = count->add_subcommand("rp", "(r,p)-toppleable permutations of S_n");
    c_rp->add_option("--n", n)->required();
    c_rp->add_option("--p", p)->required();
    c_rp->add_option("--r", r)->required();
    c_rp->add_option("--method", method)->check(CLI::IsMember({"delta", "c_sum"}));
    c_rp->callback([&] {
        std::cout << count_rp_toppleable(n, p, r, method == "delta" ? RpMethod::delta : RpMethod::c_sum).get_str()
                  << '\n';
    });
    auto* c_all = count->add_subcommand("all-r", "Permutations of S_n toppleable for every r");
    c_all->add_option("--n", n)->required();
    c_all->add_option("--p", p)->required();
    c_all->callback([&] { std::cout << count_all_r_toppleable(n, p).get_str() << '\n'; });
    auto* c_class = count->add_subcommand("class", "Configurations toppling to one resultant of class (i,j)");
    c_class->add_option("--i", i)->required();
    c_class->add_option("--j", j)->required();
    c_class->callback([&] { std::cout << count_resultant_class(i, j).get_str() << '\n'; });
    auto* c_npi = count->add_subcommand("npi", "N_pi(r,p) for a resultant permutation");
    c_npi->add_option("--perm", perm_text)->required();
    c_npi->add_option("--r", r)->required();
    c_npi->add_option("--p", p)->required();
    c_npi->callback([&] { std::cout << count_N_pi(parse_permutation(perm_text), r, p).get_str() << '\n'; });
    auto* c_family = count->add_subcommand("family", "Enumerate a permutation family");
    c_family->add_option("--family", family_name, "vesztergombi, callan, callan_underlined_first, callan_first, "
                                                  "window_C, excedance_set")
        ->required();
    c_family->add_option("--n", n, "vesztergombi, window_C, excedance_set");
    c_family->add_option("--k", k, "vesztergombi, window_C, excedance_set");
    c_family->add_option("--u", u, "Underlined count for Callan families");
    c_family->add_option("--o", o, "Overlined count for Callan families");
    c_family->add_option("--r", r, "First letter for callan_first");
    c_family->add_option("--max-size", max_size, "Largest ambient S_m to enumerate");
    c_family->add_flag("--list", list, "Print every member");
    c_family->callback([&] {
        FamilyStream s(family_spec(family_name, n, k, u, o, r), max_size);
        if (!list) {
            std::cout << s.count() << '\n';
            return;
        }
        while (s.next()) std::cout << to_string(s.current()) << '\n';
    });
    auto* c_ao = count->add_subcommand("ao", "Acyclic orientations of K_{n,k}");
    c_ao->add_option("--n", n)->required();
    c_ao->add_option("--k", k)->required();
    c_ao->add_option("--mode", mode)->check(
        CLI::IsMember({"all", "unique_sink_anywhere", "unique_sink_fixed_vertex"}));
    c_ao->callback([&] {
        const auto m = mode == "all" ? SinkMode::all
                       : mode == "unique_sink_anywhere" ? SinkMode::unique_sink_anywhere
                                                        : SinkMode::unique_sink_fixed_vertex;
        std::cout << count_acyclic_orientations(n, k, m) << '\n';
    });

    // tables
    auto* tables = app.add_subcommand("tables", "Build a table");
    TableRequest req;
    std::string format = "csv";
    tables->add_option("--which", req.which)
        ->required()
        ->check(CLI::IsMember({"1a", "1b", "2", "resultant-fibers", "T-array", "T-counts", "Npi"}));
    tables->add_option("--n", req.n, "Size (1a/1b: largest index; 2: largest n; others: resultant size or S_n)");
    tables->add_option("--p", req.p);
    tables->add_option("--r", req.r);
    tables->add_option("--jobs", req.jobs)->check(CLI::PositiveNumber);
    tables->add_option("--max-config-n", req.caps.max_config_n, "Raise the configuration cap (slow)");
    tables->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    tables->callback([&] {
        auto t = build_table(req);
        std::cout << (format == "csv" ? to_csv(t) : to_json(t));
    });

    // biject
    auto* biject = app.add_subcommand("biject", "Apply a bijection");
    bool c2v = false;
    bool v2c = false;
    bool phi_flag = false;
    bool phi_inv = false;
    auto* f1 = biject->add_flag("--callan-to-vesz", c2v, "Callan word (--perm) to Vesztergombi permutation");
    auto* f2 = biject->add_flag("--vesz-to-callan", v2c, "Vesztergombi permutation (--perm) to Callan word");
    auto* f3 = biject->add_flag("--phi", phi_flag, "Reduce a configuration (--config)");
    auto* f4 = biject->add_flag("--phi-inverse", phi_inv, "Rebuild from a reduced --config, resultant --perm and --p");
    for (auto* a : {f1, f2, f3, f4})
        for (auto* b : {f1, f2, f3, f4})
            if (a != b) a->excludes(b);
    biject->add_option("--perm", perm_text);
    biject->add_option("--config", config_text);
    biject->add_option("--u", u);
    biject->add_option("--o", o);
    biject->add_option("--p", p);
    biject->callback([&] {
        if (c2v) {
            std::cout << to_string(callan_to_vesztergombi(CallanWord(parse_permutation(perm_text), u, o))) << '\n';
        } else if (v2c) {
            std::cout << to_string(vesztergombi_to_callan(parse_permutation(perm_text), u, o).word()) << '\n';
        } else if (phi_flag) {
            std::cout << to_string(phi_checked(parse_configuration(config_text))) << '\n';
        } else if (phi_inv) {
            std::cout << to_string(phi_inverse(parse_configuration(config_text), parse_permutation(perm_text), p))
                      << '\n';
        } else {
            throw CLI::ValidationError("biject", "choose one of --callan-to-vesz, --vesz-to-callan, --phi, --phi-inverse");
        }
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Check every identity by brute force");
    int n_max = 6;
    int jobs = 1;
    verify->add_option("--n-max", n_max)->check(CLI::Range(1, 7));
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    std::string verify_format = "text";
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
    verify->callback([&] {
        auto report = verify_identities(n_max, jobs);
        std::cout << (verify_format == "json" ? to_json(report) : to_text(report));
        exit_code = report.ok() ? 0 : 1;
    });

    // polybernoulli
    auto* pb = app.add_subcommand("polybernoulli", "Print B_{n,k} or C_{n,k}");
    std::string kind;
    std::string pb_method = "closed";
    pb->add_option("kind", kind)->required()->check(CLI::IsMember({"B", "C"}));
    pb->add_option("--n", n)->required();
    pb->add_option("--k", k)->required();
    pb->add_option("--method", pb_method)->check(CLI::IsMember({"closed", "inclusion_exclusion", "recurrence"}));
    pb->callback([&] {
        const auto m = pb_method == "closed" ? PbMethod::closed
                       : pb_method == "recurrence" ? PbMethod::recurrence
                                                   : PbMethod::inclusion_exclusion;
        std::cout << (kind == "B" ? poly_bernoulli_B(n, k, m) : poly_bernoulli_C(n, k, m)).get_str() << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
