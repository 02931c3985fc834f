#include "crcs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "crcs/cograph.hpp"
#include "crcs/errors.hpp"
#include "crcs/generators.hpp"
#include "crcs/io.hpp"
#include "crcs/oracle.hpp"
#include "crcs/path_solver.hpp"
#include "crcs/reductions.hpp"
#include "crcs/split_kernel.hpp"

namespace crcs::cli {

namespace {

struct SolveOptions {
    std::string file;
    std::string solver = "auto";
    bool witness = false;
    std::size_t budget = SearchBudget{}.max_states;
    std::string cotree_file;
};

struct KernelizeOptions {
    std::string file;
    std::string output;
    std::string log;
};

struct ReduceOptions {
    std::string kind;
    std::string file;
    std::string output;
    std::string layout;
};

struct GenOptions {
    std::string kind;
    int n_pos = -1;
    int n = 8;
    int k = 3;
    std::uint64_t seed = 0;
    bool valid = false;
    double p = 0.5;
    double stars = 0.0;
};

std::string pick_solver(const Instance& instance)
{
    if (!instance.extended() && instance.k <= 2)
        return "k2";
    if (!instance.extended() && instance.k == 3 && is_path_graph(instance.graph))
        return "path";
    try {
        cograph::build_cotree(instance.graph);
        return "cograph";
    } catch (const NotACograph&) {
    }
    if (!instance.extended()) {
        try {
            split::split_partition(instance.graph);
            return "split";
        } catch (const NotSplit&) {
        }
    }
    return "oracle";
}

int report(bool yes, std::ostream& out)
{
    out << (yes ? "YES" : "NO") << '\n';
    return yes ? kYes : kNo;
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err)
{
    const Instance instance = io::parse_crcs(io::read_file(o.file));
    std::string solver = o.solver;
    if (solver == "auto") {
        if (!is_valid(instance)) {
            err << "solver: none (color counts differ)\n";
            return report(false, out);
        }
        solver = pick_solver(instance);
    }
    err << "solver: " << solver << '\n';
    if (o.witness && solver != "oracle")
        err << "note: the " << solver << " solver is decision-only; no witness is printed\n";

    if (solver == "oracle") {
        SearchBudget budget;
        budget.max_states = o.budget;
        const Decision d = instance.extended() ? ecrcs_reachable(instance, budget) : crcs_reachable(instance, budget);
        if (d.overflow()) {
            out << "OVERFLOW " << d.states_explored << '\n';
            return kOverflow;
        }
        const int code = report(d.yes(), out);
        if (o.witness && d.yes())
            for (const SwapMove& m : d.witness)
                out << "swap " << m.u << ' ' << m.v << '\n';
        return code;
    }
    if (solver == "k2")
        return report(solve_k_le_2(instance), out);
    if (solver == "path")
        return report(path::solve_path(instance), out);
    if (solver == "cograph") {
        if (o.cotree_file.empty())
            return report(cograph::solve_crcs_cograph(instance), out);
        const auto tree = cograph::parse_cotree(io::read_file(o.cotree_file));
        return report(cograph::solve_crcs_cograph(instance, tree), out);
    }
    if (solver == "split") {
        if (instance.extended())
            throw WrongSolver("the split solver does not accept extended colorings");
        try {
            return report(split::solve_split(instance), out);
        } catch (const BudgetExhausted& e) {
            err << "error: " << e.what() << '\n';
            out << "OVERFLOW\n";
            return kOverflow;
        }
    }
    throw PreconditionError("unknown solver '" + solver + "'");
}

void emit(const std::string& path, const std::string& text, std::ostream& fallback)
{
    if (path.empty())
        fallback << text;
    else
        io::write_file(path, text);
}

int cmd_kernelize(const KernelizeOptions& o, std::ostream& out, std::ostream& err)
{
    const Instance instance = io::parse_crcs(io::read_file(o.file));
    if (instance.extended())
        throw WrongSolver("kernelization applies to plain colorings only");
    const split::KernelResult r = split::kernelize(instance);
    std::ostringstream log;
    for (Vertex v : r.removed)
        log << "removed " << v << '\n';
    emit(o.log, log.str(), err);
    if (r.no)
        return report(false, out);
    emit(o.output, io::format_crcs(r.instance), out);
    return kYes;
}

std::string format_layout(const reduce::GadgetLayout& layout)
{
    std::ostringstream os;
    for (const auto& [name, v] : layout.roles)
        os << "role " << name << ' ' << v << '\n';
    for (const auto& p : layout.ports)
        os << "port " << p.edge_id << ' ' << p.u << ' ' << p.v << '\n';
    return os.str();
}

int cmd_reduce(const ReduceOptions& o, std::ostream& out, std::ostream&)
{
    const std::string text = io::read_file(o.file);
    reduce::GadgetLayout layout;
    Instance result;
    if (o.kind == "ts-split")
        result = reduce::ts_split_to_crcs(io::parse_ts(text), &layout);
    else if (o.kind == "ts-bipartite")
        result = reduce::ts_bipartite_to_crcs(io::parse_ts(text), &layout);
    else if (o.kind == "svr-chordal")
        result = reduce::svr_to_kcrcs(io::parse_svr(text), &layout);
    else {
        const io::NclInstance ncl = io::parse_ncl(text);
        std::tie(result, layout) = reduce::ncl_to_3crcs(ncl.machine, ncl.cs, ncl.ct);
    }
    emit(o.output, io::format_crcs(result), out);
    if (!o.layout.empty())
        io::write_file(o.layout, format_layout(layout));
    return kYes;
}

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream&)
{
    const int n = o.n_pos >= 0 ? o.n_pos : o.n;
    if (n < 0 || o.k < 1)
        throw PreconditionError("gen needs n >= 0 and k >= 1");
    gen::Rng rng(o.seed);
    Graph g;
    std::optional<Coloring> fs;
    for (int attempt = 0; attempt < 100 && !fs; ++attempt) {
        if (o.kind == "path")
            g = gen::path_graph(n);
        else if (o.kind == "cograph")
            g = gen::random_cograph(n, rng);
        else if (o.kind == "split")
            g = gen::random_split_graph(n, o.k, rng);
        else
            g = gen::random_graph(n, o.p, rng);
        fs = gen::random_proper_coloring(g, o.k, rng, o.stars);
    }
    if (!fs)
        throw PreconditionError("no properly " + std::to_string(o.k) + "-colorable " + o.kind +
                                " graph found for these parameters");
    Coloring ft = o.valid ? gen::random_valid_partner(g, *fs, rng, o.stars) : *gen::random_proper_coloring(g, o.k, rng, o.stars);
    out << io::format_crcs({g, o.k, *fs, ft});
    return kYes;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Coloring reconfiguration under color swapping", "crcs"};
    app.require_subcommand(1);

    SolveOptions so;
    auto* solve = app.add_subcommand("solve", "Decide whether ft is reachable from fs");
    solve->add_option("file", so.file, "Instance file (crcs format)")->required();
    solve->add_option("--solver", so.solver, "Solver to use")
        ->check(CLI::IsMember({"auto", "oracle", "path", "cograph", "split", "k2"}));
    solve->add_flag("--witness", so.witness, "Print a shortest swap sequence (oracle only)");
    solve->add_option("--budget", so.budget, "State budget for exhaustive search");
    solve->add_option("--cotree", so.cotree_file, "Cotree for the cograph solver, e.g. (J 0 (U 1 2))");

    KernelizeOptions ko;
    auto* kernel = app.add_subcommand("kernelize", "Apply the split-graph reduction rules");
    kernel->add_option("file", ko.file, "Instance file on a split graph")->required();
    kernel->add_option("-o,--output", ko.output, "Kernel destination (default stdout)");
    kernel->add_option("--log", ko.log, "Removal log destination (default stderr)");

    ReduceOptions ro;
    auto* red = app.add_subcommand("reduce", "Build a CRCS instance from another problem");
    red->add_option("kind", ro.kind, "Construction")
        ->required()
        ->check(CLI::IsMember({"ts-split", "ts-bipartite", "svr-chordal", "ncl"}));
    red->add_option("file", ro.file, "Source instance file")->required();
    red->add_option("-o,--output", ro.output, "Instance destination (default stdout)");
    red->add_option("--layout", ro.layout, "Write the role/port sidecar here");

    GenOptions go;
    auto* g = app.add_subcommand("gen", "Generate a random instance");
    g->add_option("kind", go.kind, "Graph family")->required()->check(CLI::IsMember({"path", "cograph", "split", "random"}));
    g->add_option("count", go.n_pos, "Number of vertices");
    g->add_option("--n", go.n, "Number of vertices");
    g->add_option("--k", go.k, "Number of colors");
    g->add_option("--seed", go.seed, "Random seed");
    g->add_flag("--valid", go.valid, "Give ft the same color counts as fs");
    g->add_option("--p", go.p, "Edge probability for random graphs")->check(CLI::Range(0.0, 1.0));
    g->add_option("--stars", go.stars, "Probability of '*' per vertex")->check(CLI::Range(0.0, 1.0));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kYes : kError;
    }

    try {
        if (*solve)
            return cmd_solve(so, out, err);
        if (*kernel)
            return cmd_kernelize(ko, out, err);
        if (*red)
            return cmd_reduce(ro, out, err);
        return cmd_gen(go, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kError;
}

} // namespace crcs::cli
