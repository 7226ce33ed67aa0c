// Unified command-line front end: neighbourhood covers, weak-colouring
// orders, transitive fraternal augmentations, distance independent sets,
// splitter games and the FO+ layer, over edge-list or DIMACS inputs.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nwd/augmentation.hpp"
#include "nwd/cover.hpp"
#include "nwd/generators.hpp"
#include "nwd/graph.hpp"
#include "nwd/indepset.hpp"
#include "nwd/io.hpp"
#include "nwd/logic.hpp"
#include "nwd/order.hpp"
#include "nwd/splitter.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw nwd::InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// generator spec: path:N, cycle:N, grid:AxB, star:N, complete:N,
// er:N:M:SEED, reg3:N:SEED, tree:N:SEED, outerplanar:N:SEED
nwd::Graph generate(const std::string& spec) {
    auto fail = [&]() -> nwd::Graph {
        throw nwd::InputError("bad generator spec: " + spec);
    };
    auto colon = spec.find(':');
    if (colon == std::string::npos) return fail();
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    auto ints = [&](char sep) {
        std::vector<long long> out;
        std::istringstream in(rest);
        std::string tok;
        while (std::getline(in, tok, sep)) out.push_back(std::stoll(tok));
        return out;
    };
    if (kind == "grid") {
        auto v = ints('x');
        if (v.size() != 2) return fail();
        return nwd::make_grid(static_cast<int>(v[0]), static_cast<int>(v[1]));
    }
    auto v = ints(':');
    if (kind == "path" && v.size() == 1) return nwd::make_path(static_cast<int>(v[0]));
    if (kind == "cycle" && v.size() == 1) return nwd::make_cycle(static_cast<int>(v[0]));
    if (kind == "star" && v.size() == 1) return nwd::make_star(static_cast<int>(v[0]));
    if (kind == "complete" && v.size() == 1) return nwd::make_complete(static_cast<int>(v[0]));
    if (kind == "er" && v.size() == 3) {
        nwd::Rng rng(static_cast<std::uint64_t>(v[2]));
        return nwd::make_random_sparse(static_cast<int>(v[0]), v[1], rng);
    }
    if (kind == "reg3" && v.size() == 2) {
        nwd::Rng rng(static_cast<std::uint64_t>(v[1]));
        return nwd::make_random_cubic(static_cast<int>(v[0]), rng);
    }
    if (kind == "tree" && v.size() == 2) {
        nwd::Rng rng(static_cast<std::uint64_t>(v[1]));
        return nwd::make_random_tree(static_cast<int>(v[0]), rng);
    }
    if (kind == "outerplanar" && v.size() == 2) {
        nwd::Rng rng(static_cast<std::uint64_t>(v[1]));
        return nwd::make_random_outerplanar(static_cast<int>(v[0]), rng);
    }
    return fail();
}

struct GraphSource {
    std::string input_path;
    std::string gen_spec;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--input", input_path, "edge-list or DIMACS file");
        auto* b = cmd->add_option("--gen", gen_spec,
                                  "generator spec (path:N, cycle:N, grid:AxB, star:N, "
                                  "complete:N, er:N:M:SEED, reg3:N:SEED, tree:N:SEED, "
                                  "outerplanar:N:SEED)");
        a->excludes(b);
    }

    nwd::Graph load() const {
        if (!input_path.empty()) return nwd::parse_edge_list(read_file(input_path));
        if (!gen_spec.empty()) return generate(gen_spec);
        throw nwd::InputError("need --input or --gen");
    }
};

std::map<std::string, int> parse_assignment(const std::string& text) {
    std::map<std::string, int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw nwd::InputError("bad assignment token: " + tok);
        std::string var = tok.substr(0, eq);
        while (!var.empty() && var.front() == ' ') var.erase(var.begin());
        while (!var.empty() && var.back() == ' ') var.pop_back();
        out[var] = std::stoi(tok.substr(eq + 1));
    }
    return out;
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    long long v;
    while (in >> v) out.push_back(static_cast<int>(v));
    return out;
}

int run_aug(const GraphSource& src, int rounds, bool stats) {
    auto g = src.load();
    auto res = nwd::aug(g, rounds);
    if (stats) {
        std::cout << "rounds=" << res.rounds << "\n";
        std::cout << "arcs_total=" << res.digraph.arc_count() << "\n";
        std::cout << "arcs_original=" << res.count_tag(nwd::ArcTag::Original) << "\n";
        std::cout << "arcs_transitive=" << res.count_tag(nwd::ArcTag::Transitive) << "\n";
        std::cout << "arcs_fraternal=" << res.count_tag(nwd::ArcTag::Fraternal) << "\n";
        std::cout << "max_indegree=" << res.max_indegree << "\n";
    } else {
        for (auto [u, v] : res.digraph.arcs()) std::cout << u << " " << v << "\n";
    }
    return 0;
}

int run_wcol(const GraphSource& src, int radius, bool exact) {
    auto g = src.load();
    auto of = nwd::order_from_aug(g, std::max(radius, 1));
    for (int v : of.order.by_rank()) std::cout << v << "\n";
    std::cout << "max_wreach=" << nwd::wcol_of_order(g, of.order, radius) << "\n";
    if (exact) std::cout << "exact_wcol=" << nwd::brute_wcol(g, radius) << "\n";
    return 0;
}

int run_cover(const GraphSource& src, int radius, const std::string& out_path) {
    auto g = src.load();
    auto cover = nwd::build_cover(g, radius);
    auto report = nwd::verify_cover(g, radius, cover);
    json doc;
    doc["r"] = radius;
    doc["clusters"] = json::array();
    for (const auto& c : cover.clusters)
        doc["clusters"].push_back({{"center", c.center}, {"vertices", c.vertices}});
    doc["assignment"] = cover.assignment;
    doc["stats"] = {{"max_degree", report.stats.max_degree},
                    {"max_radius", report.stats.max_radius},
                    {"total_size", report.stats.total_size},
                    {"cluster_count", report.stats.cluster_count}};
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
    }
    if (!report.ok()) {
        for (const auto& v : report.violations) std::cerr << "VIOLATION " << v << "\n";
        return 1;
    }
    return 0;
}

int run_dis(const GraphSource& src, int k, int radius, const std::string& candidates_path,
            int l, int m, bool oracle, int n0) {
    auto g = src.load();
    std::vector<int> w;
    if (candidates_path.empty()) {
        w.resize(static_cast<std::size_t>(g.vertex_count()));
        std::iota(w.begin(), w.end(), 0);
    } else {
        w = parse_vertex_list(read_file(candidates_path));
    }
    std::optional<std::vector<int>> witness;
    if (oracle) {
        witness = nwd::brute_dis(g, w, k, radius);
    } else {
        nwd::DisBudgets budgets{l > 0 ? l : std::max(1, g.vertex_count() * std::max(k, 1)),
                                m > 0 ? m : std::max(1, g.vertex_count())};
        nwd::DisConfig cfg;
        if (n0 >= 0) cfg.brute_threshold = n0;
        witness = nwd::dis(g, w, k, radius, budgets, cfg);
    }
    if (!witness) {
        std::cout << "no\n";
    } else {
        std::cout << "yes";
        for (int v : *witness) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int run_splitter(const GraphSource& src, int l, int m, int radius,
                 const std::string& connector_name, std::uint64_t seed) {
    auto g = src.load();
    nwd::ConnectorStrategy connector;
    if (connector_name == "random")
        connector = nwd::random_connector(seed);
    else if (connector_name == "center")
        connector = nwd::center_connector();
    else if (connector_name == "adversarial")
        connector = nwd::adversarial_connector();
    else
        throw nwd::InputError("unknown connector: " + connector_name);
    auto t = nwd::play_game(g, {l, m, radius}, connector);
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
        const auto& round = t.rounds[i];
        std::cout << "round " << (i + 1) << ": connector=" << round.connector_v
                  << " splitter=" << nwd::format_set(round.splitter_w)
                  << " |G|=" << round.size_after << "\n";
    }
    std::cout << "winner=" << (t.splitter_wins ? "splitter" : "connector")
              << " rounds=" << t.rounds.size() << "\n";
    return 0;
}

int run_fo_eval(const GraphSource& src, const std::string& formula_path,
                const std::string& colors_path, const std::string& assign) {
    auto g = src.load();
    nwd::ColoredGraph cg(g);
    if (!colors_path.empty())
        cg = nwd::ColoredGraph(g, nwd::parse_colors(read_file(colors_path), g.vertex_count()));
    auto phi = nwd::parse_formula(read_file(formula_path));
    auto result = nwd::eval(phi, nwd::Structure::from_colored(cg), parse_assignment(assign));
    std::cout << (result ? "true" : "false") << "\n";
    return 0;
}

int run_fo_ef(const std::string& path_a, int a, const std::string& path_b, int b, int q, int l) {
    nwd::Structure sa(nwd::parse_edge_list(read_file(path_a)));
    nwd::Structure sb(nwd::parse_edge_list(read_file(path_b)));
    bool eq = nwd::ef_plus_equivalent(sa, {a}, sb, {b}, q, l);
    std::cout << "equivalent=" << (eq ? "true" : "false") << "\n";
    return 0;
}

int run_verify(const GraphSource& src) {
    auto g = src.load();
    int bad = 0;
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) {
            std::cout << "ok " << name << "\n";
        } else {
            ++bad;
            std::cout << "VIOLATION " << name << (detail.empty() ? "" : ": " + detail) << "\n";
        }
    };
    for (int r = 1; r <= 3; ++r) {
        auto prev = nwd::aug(g, r - 1);
        auto cur = nwd::aug(g, r);
        auto rep = nwd::verify_aug(prev.digraph, cur.digraph);
        check("aug_conditions_r" + std::to_string(r), rep.ok(),
              rep.violations.empty() ? "" : rep.violations.front());

        bool witness_ok = true;
        for (int v = 0; v < g.vertex_count() && witness_ok; ++v)
            for (int u : nwd::bfs_neighbourhood(g, v, r).vertices) {
                if (u == v) continue;
                try {
                    nwd::check_neighbourhood_witness(g, cur.digraph, v, u, r);
                } catch (const nwd::PropertyViolation&) {
                    witness_ok = false;
                    break;
                }
            }
        check("aug_witness_r" + std::to_string(r), witness_ok);

        auto of = nwd::order_from_aug(g, r);
        int bound = 2 * (of.max_indegree + 1) * (of.max_indegree + 1);
        check("wcol_bound_r" + std::to_string(r), nwd::wcol_of_order(g, of.order, r) <= bound);
    }
    for (int r = 1; r <= 2; ++r) {
        auto of = nwd::order_from_aug(g, 2 * r);
        auto cover = nwd::build_cover(g, r, of.order);
        auto rep = nwd::verify_cover(g, r, cover);
        check("cover_valid_r" + std::to_string(r), rep.ok(),
              rep.violations.empty() ? "" : rep.violations.front());
        if (g.vertex_count() <= 300) {
            bool ok = true;
            try {
                nwd::cover_degree_equals_wreach(g, r, of.order);
            } catch (const nwd::PropertyViolation&) {
                ok = false;
            }
            check("cover_degree_equals_wreach_r" + std::to_string(r), ok);
        }
    }
    return bad == 0 ? 0 : 1;
}

int run_bench() {
    // near-linear scaling of the cover construction on grids
    double prev_ms = 0;
    for (int side : {100, 200, 400}) {
        auto g = nwd::make_grid(side, side);
        auto start = std::chrono::steady_clock::now();
        auto cover = nwd::build_cover(g, 2);
        auto ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "n=" << g.vertex_count() << " build_ms=" << ms
                  << " max_degree=" << cover.max_degree(g.vertex_count())
                  << " clusters=" << cover.clusters.size();
        if (prev_ms > 0) std::cout << " ratio=" << ms / prev_ms;
        std::cout << "\n";
        prev_ms = ms;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse-graph toolkit: covers, weak-colouring orders, augmentations, "
                 "distance independent sets, splitter games, FO+ logic"};
    app.require_subcommand(1);

    GraphSource aug_src, wcol_src, cover_src, dis_src, split_src, eval_src, verify_src;

    auto* aug_cmd = app.add_subcommand("aug", "tight transitive fraternal augmentation");
    int aug_rounds = 1;
    bool aug_stats = false;
    aug_cmd->add_option("--rounds", aug_rounds, "augmentation rounds")->required();
    aug_cmd->add_flag("--stats", aug_stats, "print statistics instead of arcs");
    aug_src.attach(aug_cmd);

    auto* wcol_cmd = app.add_subcommand("wcol", "weak-colouring order and width");
    int wcol_radius = 1;
    bool wcol_exact = false;
    wcol_cmd->add_option("--radius", wcol_radius, "weak-reachability radius")->required();
    wcol_cmd->add_flag("--exact", wcol_exact, "also run the brute-force oracle (n <= 8)");
    wcol_src.attach(wcol_cmd);

    auto* cover_cmd = app.add_subcommand("cover", "sparse r-neighbourhood cover");
    int cover_radius = 1;
    std::string cover_out;
    cover_cmd->add_option("--radius", cover_radius, "covered radius r")->required();
    cover_cmd->add_option("--out", cover_out, "output JSON path (stdout when omitted)");
    cover_src.attach(cover_cmd);

    auto* dis_cmd = app.add_subcommand("dis", "distance independent set");
    int dis_k = 0, dis_radius = 1, dis_l = 0, dis_m = 0, dis_n0 = -1;
    std::string dis_candidates;
    bool dis_oracle = false;
    dis_cmd->add_option("--k", dis_k, "target set size")->required();
    dis_cmd->add_option("--radius", dis_radius, "distance threshold r")->required();
    dis_cmd->add_option("--candidates", dis_candidates, "candidate vertex file (default: all)");
    dis_cmd->add_option("--l", dis_l, "splitter game length (default |V| * k)");
    dis_cmd->add_option("--m", dis_m, "splitter removal budget (default |V|)");
    dis_cmd->add_option("--n0", dis_n0, "brute-force threshold");
    dis_cmd->add_flag("--oracle", dis_oracle, "force the brute-force oracle (guarded)");
    dis_src.attach(dis_cmd);

    auto* split_cmd = app.add_subcommand("splitter", "play the (l,m,r)-splitter game");
    int sp_l = 1, sp_m = 1, sp_r = 1;
    std::string sp_connector = "random";
    std::uint64_t sp_seed = 0;
    split_cmd->add_option("--l", sp_l, "round budget")->required();
    split_cmd->add_option("--m", sp_m, "removal budget")->required();
    split_cmd->add_option("--radius", sp_r, "locality radius")->required();
    split_cmd->add_option("--connector", sp_connector, "random|center|adversarial");
    split_cmd->add_option("--seed", sp_seed, "random connector seed");
    split_src.attach(split_cmd);

    auto* fo_cmd = app.add_subcommand("fo", "FO+ formulas");
    fo_cmd->require_subcommand(1);
    auto* fo_eval = fo_cmd->add_subcommand("eval", "evaluate a formula");
    std::string eval_formula, eval_colors, eval_assign;
    fo_eval->add_option("--formula", eval_formula, "formula file")->required();
    fo_eval->add_option("--colors", eval_colors, "colour file");
    fo_eval->add_option("--assign", eval_assign, "free-variable assignment, e.g. \"x=3,y=0\"");
    eval_src.attach(fo_eval);
    auto* fo_ef = fo_cmd->add_subcommand("ef", "EF+ game equivalence");
    std::string ef_a_path, ef_b_path;
    int ef_a = 0, ef_b = 0, ef_q = 1, ef_l = 0;
    fo_ef->add_option("--inputA", ef_a_path, "first graph")->required();
    fo_ef->add_option("--a", ef_a, "distinguished vertex in A")->required();
    fo_ef->add_option("--inputB", ef_b_path, "second graph")->required();
    fo_ef->add_option("--b", ef_b, "distinguished vertex in B")->required();
    fo_ef->add_option("--q", ef_q, "rank parameter q")->required();
    fo_ef->add_option("--l", ef_l, "round count l")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite on one graph");
    verify_src.attach(verify_cmd);

    app.add_subcommand("bench", "grid scaling measurement for the cover construction");

    CLI11_PARSE(app, argc, argv);

    try {
        if (aug_cmd->parsed()) return run_aug(aug_src, aug_rounds, aug_stats);
        if (wcol_cmd->parsed()) return run_wcol(wcol_src, wcol_radius, wcol_exact);
        if (cover_cmd->parsed()) return run_cover(cover_src, cover_radius, cover_out);
        if (dis_cmd->parsed())
            return run_dis(dis_src, dis_k, dis_radius, dis_candidates, dis_l, dis_m, dis_oracle,
                           dis_n0);
        if (split_cmd->parsed())
            return run_splitter(split_src, sp_l, sp_m, sp_r, sp_connector, sp_seed);
        if (fo_cmd->parsed()) {
            if (fo_eval->parsed()) return run_fo_eval(eval_src, eval_formula, eval_colors, eval_assign);
            if (fo_ef->parsed()) return run_fo_ef(ef_a_path, ef_a, ef_b_path, ef_b, ef_q, ef_l);
        }
        if (verify_cmd->parsed()) return run_verify(verify_src);
        return run_bench();
    } catch (const nwd::PropertyViolation& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
