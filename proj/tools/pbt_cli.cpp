// Command-line surface for the tree-operator library: enumeration, operator
// application, identity verification, generating polynomials, the growth-rule
// correspondence, and graph export.
//
// Exit codes: 0 = success/verified, 1 = verification failed, 2 = usage or
// parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pbt/pbt.hpp"

using json = nlohmann::ordered_json;
using namespace pbt;

namespace {

constexpr std::size_t kMaxNodesGuard = 8;
constexpr std::size_t kMaxDegreeGuard = 5;

struct guard_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_guard(bool unsafe, std::size_t max_nodes, std::size_t max_degree) {
    if (unsafe) return;
    if (max_nodes > kMaxNodesGuard)
        throw guard_violation("max-nodes " + std::to_string(max_nodes) + " exceeds the guard of " +
                              std::to_string(kMaxNodesGuard) +
                              " (pass --unsafe-no-guard to override)");
    if (max_degree > kMaxDegreeGuard)
        throw guard_violation("degree bound " + std::to_string(max_degree) +
                              " exceeds the guard of " + std::to_string(kMaxDegreeGuard) +
                              " (pass --unsafe-no-guard to override)");
}

UpFamily parse_family(const std::string& s) {
    if (s == "U") return UpFamily::U;
    if (s == "U'") return UpFamily::Uprime;
    throw CLI::ValidationError("--family", "expected U or U'");
}

json failure_list(const std::vector<std::string>& failures) {
    json out = json::array();
    for (const std::string& f : failures) out.push_back(f);
    return out;
}

int cmd_trees(std::size_t n, bool count_only, const std::string& format) {
    const std::vector<Tree>& trees = enumerate_trees(n);
    if (count_only) {
        std::cout << trees.size() << "\n";
        return 0;
    }
    if (format == "json") {
        json out = json::array();
        for (const Tree& t : trees) out.push_back(t.to_string());
        std::cout << out.dump() << "\n";
        return 0;
    }
    for (const Tree& t : trees) std::cout << t.to_string() << "\n";
    return 0;
}

int cmd_apply(const std::string& op, std::size_t i, const std::string& tree_text) {
    auto symbol = parse_op_symbol(op);
    if (!symbol) throw CLI::ValidationError("-o", "expected one of U, U', D, U*, U'*, D*");
    LinComb result = apply(*symbol, i, LinComb(Tree::parse(tree_text)));
    std::cout << result.to_string() << "\n";
    return 0;
}

int cmd_poly(const std::string& symbol_text, const std::string& tree_text,
             const std::string& to_text, std::size_t vars) {
    auto symbol = parse_op_symbol(symbol_text);
    if (!symbol ||
        (*symbol != OpSymbol::D && *symbol != OpSymbol::U && *symbol != OpSymbol::Uprime))
        throw CLI::ValidationError("-s", "expected one of D, U, U'");
    Tree t = Tree::parse(tree_text);
    Tree to = Tree::parse(to_text);
    std::cout << schur_poly(*symbol, t, to, vars).to_string() << "\n";
    return 0;
}

int cmd_verify(const std::string& target, std::size_t max_nodes, std::size_t max_deg,
               const std::string& family_text, std::vector<std::size_t> vars,
               std::size_t max_degree, bool unsafe) {
    check_guard(unsafe, max_nodes, std::max(max_deg, max_degree));
    UpFamily family = parse_family(family_text);
    json report;
    report["target"] = target;
    bool ok = false;
    if (target == "commutation" || target == "dual-commutation") {
        CommutationReport r = target == "commutation"
                                  ? check_commutation(family, max_nodes, max_deg, max_deg)
                                  : check_transposed_commutation(family, max_nodes, max_deg, max_deg);
        ok = r.ok;
        report["identity"] = r.identity;
        report["bounds"] = {{"max_nodes", max_nodes}, {"max_deg", max_deg}};
        json cx = json::array();
        for (const auto& c : r.counterexamples)
            cx.push_back({{"tree", c.tree.to_string()},
                          {"i", c.i},
                          {"j", c.j},
                          {"lhs", c.lhs.to_string()},
                          {"rhs", c.rhs.to_string()}});
        report["counterexamples"] = cx;
    } else if (target == "dual-graph") {
        CommutationReport r1 = check_one_dual_graph(max_nodes);
        CommutationReport r2 = check_full_down_relation(max_nodes);
        CommutationReport r3 = check_star_dual_relation(max_nodes);
        ok = r1.ok && r2.ok && r3.ok;
        report["bounds"] = {{"max_nodes", max_nodes}};
        report["identities"] = {{r1.identity, r1.ok}, {r2.identity, r2.ok}, {r3.identity, r3.ok}};
    } else if (target == "bijection") {
        BijectionReport r = check_bijection(family, max_nodes, max_deg);
        ok = r.ok;
        report["family"] = name(family);
        report["bounds"] = {{"max_nodes", max_nodes}, {"max_deg", max_deg}};
        report["cells"] = r.cells;
        report["elements"] = r.elements;
        report["failures"] = failure_list(r.failures);
    } else if (target == "labelling-sum") {
        ok = true;
        json failures = json::array();
        auto symbol_of = [](LabelKind k) {
            switch (k) {
                case LabelKind::right_strict: return OpSymbol::U;
                case LabelKind::left_strict: return OpSymbol::Uprime;
                default: return OpSymbol::D;
            }
        };
        for (LabelKind kind : {LabelKind::right_strict, LabelKind::left_strict,
                               LabelKind::binary_search})
            for (std::size_t n = 0; n <= max_nodes; ++n)
                for (const Tree& t : enumerate_trees(n))
                    for (std::size_t nv = 0; nv <= max_deg; ++nv)
                        if (labelling_sum(t, kind, nv) !=
                            schur_poly(symbol_of(kind), t, Tree(), nv)) {
                            ok = false;
                            failures.push_back(t.to_string() + " kind " +
                                               std::to_string(static_cast<int>(kind)) +
                                               " vars " + std::to_string(nv));
                        }
        report["bounds"] = {{"max_nodes", max_nodes}, {"max_vars", max_deg}};
        report["failures"] = failures;
    } else if (target == "cauchy") {
        if (vars.size() != 2) throw CLI::ValidationError("--vars", "expected two counts p q");
        CauchyReport r = cauchy_check(family, vars[0], vars[1], max_degree);
        ok = r.ok;
        report["family"] = name(family);
        report["bounds"] = {{"p", vars[0]}, {"q", vars[1]}, {"max_degree", max_degree}};
        report["failures"] = failure_list(r.failures);
    } else if (target == "rsk") {
        if (vars.size() != 2) vars = {2, 2};
        RskReport r = check_rsk(family, vars[0], vars[1], max_degree);
        ok = r.ok;
        report["family"] = name(family);
        report["bounds"] = {{"p", vars[0]}, {"q", vars[1]}, {"max_total", max_degree}};
        report["matrices"] = r.matrices;
        report["failures"] = failure_list(r.failures);
    } else {
        throw CLI::ValidationError(
            "target",
            "expected one of commutation, dual-commutation, dual-graph, bijection, "
            "labelling-sum, cauchy, rsk");
    }
    report["status"] = ok ? "pass" : "fail";
    std::cout << report.dump() << "\n";
    return ok ? 0 : 1;
}

int cmd_rsk(const std::string& path, const std::string& family_text,
            const std::string& direction) {
    UpFamily family = parse_family(family_text);
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (direction == "forward") {
        Matrix m = Matrix::parse_csv(buffer.str());
        RskResult r = rsk_forward(m, family);
        json out;
        out["family"] = name(family);
        json p = json::array(), q = json::array();
        for (const Tree& t : r.insertion.trees) p.push_back(t.to_string());
        for (const Tree& t : r.recording.trees) q.push_back(t.to_string());
        out["P"] = p;
        out["Q"] = q;
        out["shape"] = r.insertion.trees.back().to_string();
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (direction != "inverse")
        throw CLI::ValidationError("--direction", "expected forward or inverse");
    json in_json = json::parse(buffer.str());
    Path insertion{family == UpFamily::U ? PathKind::up : PathKind::up_prime, {}};
    Path recording{PathKind::down, {}};
    for (const auto& s : in_json.at("P")) insertion.trees.push_back(Tree::parse(s.get<std::string>()));
    for (const auto& s : in_json.at("Q")) recording.trees.push_back(Tree::parse(s.get<std::string>()));
    try {
        std::cout << rsk_inverse(insertion, recording, family).to_csv();
    } catch (const shape_mismatch& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const cell_failure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_graph(const std::string& family_text, std::size_t degree, std::size_t max_nodes,
              const std::string& format, bool unsafe) {
    if (!unsafe && max_nodes > kMaxNodesGuard)
        throw guard_violation("max-nodes " + std::to_string(max_nodes) + " exceeds the guard of " +
                              std::to_string(kMaxNodesGuard) +
                              " (pass --unsafe-no-guard to override)");
    GraphFamily family;
    if (family_text == "U") family = GraphFamily::U;
    else if (family_text == "U'") family = GraphFamily::Uprime;
    else if (family_text == "D") family = GraphFamily::D;
    else throw CLI::ValidationError("-f", "expected U, U' or D");
    if (format == "json")
        std::cout << export_json_lines(family, degree, max_nodes);
    else
        std::cout << export_dot(family, degree, max_nodes);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for up/down operators on planar binary trees"};
    app.require_subcommand(1);
    bool unsafe = false;
    app.add_flag("--unsafe-no-guard", unsafe, "disable the size guards on verification bounds");

    auto* trees = app.add_subcommand("trees", "enumerate trees with a given node count");
    trees->fallthrough();
    std::size_t trees_n = 0;
    bool trees_count = false;
    std::string trees_format = "text";
    trees->add_option("-n,--nodes", trees_n, "node count")->required()->check(CLI::Range(0, 12));
    trees->add_flag("--count", trees_count, "print only the number of trees");
    trees->add_option("--format", trees_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a tree");
    apply_cmd->fallthrough();
    std::string apply_op, apply_tree;
    std::size_t apply_i = 1;
    apply_cmd->add_option("-o,--op", apply_op, "operator: U, U', D, U*, U'*, D*")->required();
    apply_cmd->add_option("-i,--degree", apply_i, "operator degree")->required();
    apply_cmd->add_option("-t,--tree", apply_tree, "tree, e.g. {0,1,12}")->required();

    auto* verify = app.add_subcommand("verify", "verify an identity exhaustively");
    verify->fallthrough();
    std::string verify_target, verify_family = "U";
    std::size_t verify_nodes = 5, verify_deg = 3, verify_max_degree = 4;
    std::vector<std::size_t> verify_vars;
    verify->add_option("target", verify_target,
                       "commutation | dual-commutation | dual-graph | bijection | "
                       "labelling-sum | cauchy | rsk")
        ->required();
    verify->add_option("--max-nodes", verify_nodes, "largest tree size");
    verify->add_option("--max-deg", verify_deg, "largest operator degree / variable count");
    verify->add_option("--family", verify_family, "U or U'");
    verify->add_option("--vars", verify_vars, "variable counts p q")->expected(2);
    verify->add_option("--max-degree", verify_max_degree,
                       "polynomial truncation degree / matrix sum bound");

    auto* poly = app.add_subcommand("poly", "generating polynomial between two trees");
    poly->fallthrough();
    std::string poly_symbol, poly_tree, poly_to = "{}";
    std::size_t poly_vars = 2;
    poly->add_option("-s,--symbol", poly_symbol, "D, U or U'")->required();
    poly->add_option("-t,--tree", poly_tree, "source tree")->required();
    poly->add_option("--to", poly_to, "target tree (default the empty tree)");
    poly->add_option("--vars", poly_vars, "number of variables");

    auto* rsk = app.add_subcommand("rsk", "growth-rule correspondence");
    rsk->fallthrough();
    std::string rsk_file, rsk_family = "U", rsk_direction = "forward";
    rsk->add_option("matrix", rsk_file, "CSV matrix file (forward) or path-pair JSON (inverse)")
        ->required();
    rsk->add_option("--family", rsk_family, "U or U'");
    rsk->add_option("--direction", rsk_direction, "forward or inverse")
        ->check(CLI::IsMember({"forward", "inverse"}));

    auto* graph = app.add_subcommand("graph", "export one graded graph");
    graph->fallthrough();
    std::string graph_family, graph_format = "dot";
    std::size_t graph_degree = 1, graph_nodes = 3;
    graph->add_option("-f,--family", graph_family, "U, U' or D")->required();
    graph->add_option("-i,--degree", graph_degree, "edge degree");
    graph->add_option("-n,--max-nodes", graph_nodes, "largest tree size");
    graph->add_option("--format", graph_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));

    try {
        app.parse(argc, argv);
        if (trees->parsed()) return cmd_trees(trees_n, trees_count, trees_format);
        if (apply_cmd->parsed()) return cmd_apply(apply_op, apply_i, apply_tree);
        if (verify->parsed())
            return cmd_verify(verify_target, verify_nodes, verify_deg, verify_family,
                              verify_vars, verify_max_degree, unsafe);
        if (poly->parsed()) return cmd_poly(poly_symbol, poly_tree, poly_to, poly_vars);
        if (rsk->parsed()) return cmd_rsk(rsk_file, rsk_family, rsk_direction);
        if (graph->parsed())
            return cmd_graph(graph_family, graph_degree, graph_nodes, graph_format, unsafe);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const guard_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const binary_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
