// symdet: symmetrized determinants over finite-dimensional algebras, the
// cycle-counting reduction, Hamiltonian-cycle polynomial extraction, the
// commutative sdet family, and the formula-to-cycle-graph gadget compiler.
//
// Every subcommand reads JSON inputs, writes exactly one JSON document to
// stdout, and logs to stderr. Exit codes: 0 ok, 1 malformed input, 2 size
// cutoff, 3 internal invariant violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "symdet/io.hpp"
#include "symdet/selftest.hpp"

namespace {

using symdet::io::json;

void emit(const json& doc, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw symdet::input_error("cannot write '" + output_path + "'");
    out << doc.dump(2) << "\n";
}

struct CommonFlags {
    int threads = 1;
    bool force = false;
    int max_naive = 6;
    int max_fast = 8;

    symdet::SdetOptions sdet() const {
        symdet::SdetOptions o;
        o.threads = threads;
        o.force = force;
        o.naive_cutoff = max_naive;
        o.fast_cutoff = max_fast;
        return o;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--threads", flags.threads, "Worker threads for sdet evaluation")
        ->check(CLI::Range(1, 64));
    cmd->add_flag("--force", flags.force, "Override the soft size cutoffs");
    cmd->add_option("--max-naive", flags.max_naive, "Naive-engine size cutoff");
    cmd->add_option("--max-fast", flags.max_fast, "Fast-engine size cutoff");
}

int run(int argc, char** argv) {
    CLI::App app{"exact symmetrized-determinant toolkit"};
    app.require_subcommand(1);

    std::string output_path;
    app.add_option("--output", output_path, "Write the JSON document here instead of stdout")
        ->configurable(false);

    // ---- sdet ----
    auto* sdet_cmd = app.add_subcommand("sdet", "Symmetrized determinant of a matrix file");
    std::string sdet_file;
    std::string method = "fast";
    CommonFlags sdet_flags;
    sdet_cmd->add_option("matrix", sdet_file, "AlgMatrix JSON file")->required();
    sdet_cmd->add_option("--method", method, "naive | fast")
        ->check(CLI::IsMember({"naive", "fast"}));
    add_common(sdet_cmd, sdet_flags);
    sdet_cmd->callback([&] {
        const auto m = symdet::io::matrix_from_json(symdet::io::load_json_file(sdet_file));
        const auto result = method == "naive" ? symdet::sdet_naive(m, sdet_flags.sdet())
                                              : symdet::sdet_fast(m, sdet_flags.sdet());
        emit(json{{"algebra", symdet::io::algebra_to_json(m.algebra())},
                  {"method", method},
                  {"n", m.size()},
                  {"sdet", symdet::io::element_to_json(result)}},
             output_path);
    });

    // ---- pme-check ----
    auto* pme_cmd =
        app.add_subcommand("pme-check", "Check sdet(A+I) against the principal-minor sum");
    std::string pme_file;
    CommonFlags pme_flags;
    pme_cmd->add_option("matrix", pme_file, "AlgMatrix JSON file")->required();
    add_common(pme_cmd, pme_flags);
    pme_cmd->callback([&] {
        const auto m = symdet::io::matrix_from_json(symdet::io::load_json_file(pme_file));
        const auto lhs = symdet::sdet_fast(m.plus_identity(), pme_flags.sdet());
        const auto rhs = symdet::pme_sum(m, pme_flags.sdet());
        emit(json{{"holds", lhs == rhs},
                  {"sdet_a_plus_i", symdet::io::element_to_json(lhs)},
                  {"pme_sum", symdet::io::element_to_json(rhs)}},
             output_path);
    });

    // ---- count-ham ----
    auto* ham_cmd = app.add_subcommand("count-ham", "Hamiltonian cycles of an undirected graph");
    std::string ham_file;
    CommonFlags ham_flags;
    int ham_max_n = 7;
    ham_cmd->add_option("graph", ham_file, "Graph JSON file")->required();
    ham_cmd->add_option("--max-n", ham_max_n, "Reduction-path size cutoff");
    add_common(ham_cmd, ham_flags);
    ham_cmd->callback([&] {
        const auto g = symdet::io::graph_from_json(symdet::io::load_json_file(ham_file));
        symdet::CycleCountOptions cc;
        cc.max_n = ham_max_n;
        cc.force = ham_flags.force;
        cc.threads = ham_flags.threads;
        emit(json{{"hamiltonian_cycles", symdet::hamiltonian_count(g, cc)}}, output_path);
    });

    // ---- count-cycles ----
    auto* cyc_cmd = app.add_subcommand("count-cycles", "k-cycles of an undirected graph");
    std::string cyc_file;
    int cyc_k = 3;
    bool diagnostics = false;
    CommonFlags cyc_flags;
    int cyc_max_n = 7;
    cyc_cmd->add_option("graph", cyc_file, "Graph JSON file")->required();
    cyc_cmd->add_option("--k", cyc_k, "Cycle length (3..n)")->required();
    cyc_cmd->add_option("--max-n", cyc_max_n, "Reduction-path size cutoff");
    cyc_cmd->add_flag("--diagnostics", diagnostics,
                      "Also report the raw k=2 diagonal coefficient sum");
    add_common(cyc_cmd, cyc_flags);
    cyc_cmd->callback([&] {
        const auto g = symdet::io::graph_from_json(symdet::io::load_json_file(cyc_file));
        symdet::CycleCountOptions cc;
        cc.max_n = cyc_max_n;
        cc.force = cyc_flags.force;
        cc.threads = cyc_flags.threads;
        const auto spec = symdet::cycle_spectrum(g, cc);
        json doc{{"k", cyc_k}, {"cycles", spec.count(cyc_k)}};
        if (diagnostics)
            doc["k2_coefficient_sum"] = symdet::io::rational_to_json(spec.k2_coefficient_sum);
        emit(doc, output_path);
    });

    // ---- hc-extract ----
    auto* hc_cmd = app.add_subcommand(
        "hc-extract", "Hamiltonian-cycle polynomial of a directed graph via sdet");
    std::string hc_file;
    CommonFlags hc_flags;
    hc_cmd->add_option("graph", hc_file, "Directed graph JSON file")->required();
    add_common(hc_cmd, hc_flags);
    hc_cmd->callback([&] {
        const auto g = symdet::io::graph_from_json(symdet::io::load_json_file(hc_file));
        const auto poly = symdet::extract_hc(g, hc_flags.sdet());
        emit(json{{"n", g.n()},
                  {"hamiltonian_cycle_polynomial", symdet::io::ncpoly_to_json(poly)}},
             output_path);
    });

    // ---- family ----
    auto* fam_cmd = app.add_subcommand(
        "family", "Commutative sdet polynomial family over the m x m matrix algebra");
    int fam_m = 2, fam_n = 2;
    CommonFlags fam_flags;
    fam_cmd->add_option("--m", fam_m, "Inner matrix dimension")->required();
    fam_cmd->add_option("--n", fam_n, "Outer matrix size")->required();
    add_common(fam_cmd, fam_flags);
    fam_cmd->callback([&] {
        emit(symdet::io::family_grid_to_json(symdet::sdet_family(fam_m, fam_n, fam_flags.sdet())),
             output_path);
    });

    // ---- coeff ----
    auto* coeff_cmd =
        app.add_subcommand("coeff", "Coefficient of a family monomial in T_{k,l}");
    std::string coeff_file;
    coeff_cmd->add_option("monomial", coeff_file,
                          "JSON file {\"k\":., \"l\":., \"factors\": [[a,b,x,y]..]}")
        ->required();
    coeff_cmd->callback([&] {
        const auto doc = symdet::io::load_json_file(coeff_file);
        if (!doc.contains("k") || !doc.contains("l") || !doc.contains("factors"))
            throw symdet::input_error("monomial file needs k, l and factors");
        std::vector<symdet::FamilyFactor> factors;
        for (const auto& f : doc.at("factors")) {
            if (!f.is_array() || f.size() != 4)
                throw symdet::input_error("factors are [a, b, x, y] quadruples");
            factors.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>(),
                               f[3].get<int>()});
        }
        const auto coef = symdet::family_monomial_coeff(
            factors, doc.at("k").get<int>(), doc.at("l").get<int>(),
            static_cast<int>(factors.size()));
        emit(json{{"coefficient", coef.str()}}, output_path);
    });

    // ---- gadget ----
    auto* gadget_cmd = app.add_subcommand("gadget", "Gadget constructions");
    gadget_cmd->require_subcommand(1);

    auto* rosette_cmd = gadget_cmd->add_subcommand("rosette", "Rosette with i indicator edges");
    int rosette_i = 2;
    rosette_cmd->add_option("--indicators", rosette_i, "Number of indicator edges (>= 2)")
        ->required();
    rosette_cmd->callback(
        [&] { emit(symdet::io::digraph_to_json(symdet::rosette(rosette_i)), output_path); });

    auto* glue_cmd = gadget_cmd->add_subcommand("glue", "Glue two edges of a closed host graph");
    std::string glue_file, glue_e1, glue_e2;
    glue_cmd->add_option("graph", glue_file, "WeightedDigraph JSON file")->required();
    glue_cmd->add_option("--e1", glue_e1, "First edge as u,v (1-indexed)")->required();
    glue_cmd->add_option("--e2", glue_e2, "Second edge as u,v (1-indexed)")->required();
    glue_cmd->callback([&] {
        auto parse_edge = [](const std::string& text) {
            const auto comma = text.find(',');
            if (comma == std::string::npos)
                throw symdet::input_error("edge must be 'u,v': '" + text + "'");
            return symdet::EdgeRef{std::stoi(text.substr(0, comma)) - 1,
                                   std::stoi(text.substr(comma + 1)) - 1};
        };
        const auto host = symdet::io::digraph_from_json(symdet::io::load_json_file(glue_file));
        emit(symdet::io::digraph_to_json(
                 symdet::glue(host, parse_edge(glue_e1), parse_edge(glue_e2))),
             output_path);
    });

    auto* pipe_cmd = gadget_cmd->add_subcommand(
        "pipeline", "Compile a formula to a cycle graph computing its boolean sum");
    std::string pipe_file;
    std::vector<std::string> pipe_sum;
    pipe_cmd->add_option("formula", pipe_file, "Formula JSON file")->required();
    pipe_cmd->add_option("--sum", pipe_sum, "Variable to boolean-sum over (repeatable)");
    pipe_cmd->callback([&] {
        const auto f = symdet::io::formula_from_json(symdet::io::load_json_file(pipe_file));
        std::vector<symdet::VarId> summed;
        for (const auto& name : pipe_sum) summed.push_back(symdet::VarId(name));
        emit(symdet::io::digraph_to_json(symdet::boolean_sum_pipeline(f, summed)), output_path);
    });

    // ---- check-algebra ----
    auto* check_cmd = app.add_subcommand("check-algebra", "Associativity and unit-law check");
    std::string check_spec;
    check_cmd->add_option("algebra", check_spec, "Builtin name or algebra JSON file")->required();
    check_cmd->callback([&] {
        symdet::AlgebraHandle alg;
        if (!check_spec.empty() && check_spec.front() == '{')
            alg = symdet::io::algebra_from_json(symdet::io::parse_json_text(check_spec));
        else if (check_spec.find(".json") != std::string::npos)
            alg = symdet::io::algebra_from_json(symdet::io::load_json_file(check_spec));
        else
            alg = symdet::parse_algebra_name(check_spec);
        const auto report = symdet::check_algebra(alg);
        emit(json{{"algebra", symdet::io::algebra_to_json(alg)},
                  {"dim", alg->dim()},
                  {"associative", report.associative},
                  {"unital", report.unital},
                  {"exhaustive", report.exhaustive},
                  {"triples_checked", report.triples_checked},
                  {"witness", report.witness},
                  {"pass", report.pass()}},
             output_path);
    });

    // ---- selftest ----
    auto* self_cmd = app.add_subcommand("selftest", "Run the full acceptance property suite");
    std::uint64_t self_seed = 0;
    int self_threads = 1;
    self_cmd->add_option("--seed", self_seed, "Seed for the randomized corpora");
    self_cmd->add_option("--threads", self_threads, "Worker threads")->check(CLI::Range(1, 64));
    self_cmd->callback([&] {
        symdet::selftest::SelftestOptions opts;
        opts.seed = self_seed;
        opts.threads = self_threads;
        opts.log = &std::cerr;
        const auto report = symdet::selftest::run_acceptance_suite(opts);
        json criteria = json::array();
        for (const auto& c : report.criteria)
            criteria.push_back(json{{"id", c.id},
                                    {"name", c.name},
                                    {"passed", c.passed},
                                    {"seconds", c.seconds},
                                    {"detail", c.detail}});
        emit(json{{"passed", report.all_passed()}, {"criteria", criteria}}, output_path);
        if (!report.all_passed()) throw symdet::internal_error("selftest criteria failed");
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const symdet::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const symdet::cutoff_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const symdet::internal_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
