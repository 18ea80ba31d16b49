// Command-line front end: build, verify, search-codes, export.
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "mpg/domination.hpp"
#include "mpg/errors.hpp"
#include "mpg/io.hpp"
#include "mpg/report.hpp"
#include "mpg/structure.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct GraphArgs {
    std::string family = "st";
    int k = 2;
    int ell = 2;
    std::string pi_file;
    std::string input;
};

void add_graph_options(CLI::App* cmd, GraphArgs& a, bool with_family) {
    cmd->add_option("--k", a.k, "number of symbols")->check(CLI::Range(1, 255));
    cmd->add_option("--l", a.ell, "multiplicity of each symbol")->check(CLI::Range(1, 64));
    if (with_family) {
        cmd->add_option("--family", a.family, "generator family")->check(CLI::IsMember({"st", "pc", "custom"}));
        cmd->add_option("--pi", a.pi_file, "involution file for --family custom")->check(CLI::ExistingFile);
    }
    cmd->add_option("--input", a.input, "edge-list file replacing the built graph")->check(CLI::ExistingFile);
}

mpg::PermGraph load_or_build(const GraphArgs& a) {
    if (!a.input.empty()) {
        std::ifstream in(a.input);
        auto loaded = mpg::read_edge_list(in);
        if (!loaded.perm) throw std::invalid_argument("input is not a permutation-graph edge list");
        return std::move(*loaded.perm);
    }
    auto family = mpg::GeneratorFamily::star();
    const auto kind = mpg::parse_family_kind(a.family);
    if (kind == mpg::GeneratorFamily::Kind::Pancake) family = mpg::GeneratorFamily::pancake();
    if (kind == mpg::GeneratorFamily::Kind::Custom) {
        if (a.pi_file.empty()) throw std::invalid_argument("--family custom needs --pi FILE");
        std::ifstream in(a.pi_file);
        family = mpg::read_custom_family(in);
    }
    const mpg::Params p{a.k, a.ell};
    p.validate();
    mpg::check_cap(p);
    return mpg::build_graph(p, family);
}

/// Runs `fn` on the named file, or on stdout for "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    fn(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiset permutation graphs: construction, certificates and exports"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "recorded in reports; results do not depend on it");

    GraphArgs build_args;
    std::string build_out = "-";
    auto* build = app.add_subcommand("build", "write the edge list of a graph");
    add_graph_options(build, build_args, true);
    build->add_option("--out", build_out, "output path, - for stdout");

    GraphArgs verify_args;
    std::string suite = "all";
    std::string json_path;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_graph_options(verify, verify_args, false);
    std::vector<std::string> suites = mpg::suite_names();
    suites.push_back("all");
    verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suites));
    verify->add_option("--json", json_path, "write the JSON report here, - for stdout");
    verify->add_option("--seed", seed, "recorded in the report");

    GraphArgs search_args;
    int code_ell = 1;
    std::size_t max_results = 100'000;
    auto* search = app.add_subcommand("search-codes", "enumerate every E^ell-set by exhaustive search");
    add_graph_options(search, search_args, true);
    search->add_option("--ell", code_ell, "dominators per outside vertex")->required()->check(CLI::PositiveNumber);
    search->add_option("--max-results", max_results, "stop after this many codes");

    GraphArgs export_args;
    std::string format = "edges";
    std::string export_out = "-";
    bool toroidal = false;
    auto* exporter = app.add_subcommand("export", "write edges, DOT or the sigma colouring");
    add_graph_options(exporter, export_args, true);
    exporter->add_option("--format", format, "edges, dot or coloring")->check(CLI::IsMember({"edges", "dot", "coloring"}));
    exporter->add_flag("--toroidal", toroidal, "DOT of the assembly T_{2k-1}(1,2,3,4) instead of the whole graph");
    exporter->add_option("--out", export_out, "output path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*build) {
            const auto g = load_or_build(build_args);
            with_output(build_out, [&](std::ostream& out) { mpg::write_edge_list(out, g); });
            return 0;
        }
        if (*verify) {
            mpg::SuiteOptions opts;
            opts.params = {verify_args.k, verify_args.ell};
            opts.seed = seed;
            std::optional<mpg::PermGraph> input;
            if (!verify_args.input.empty()) {
                input = load_or_build(verify_args);
                opts.input = &*input;
            }
            const auto report = mpg::run_suite(suite, opts);
            if (json_path != "-")
                for (const auto& c : report.checks) {
                    std::cout << mpg::to_string(c.status) << ' ' << c.name;
                    if (!c.detail.empty()) std::cout << " (" << c.detail << ')';
                    std::cout << '\n';
                }
            if (!json_path.empty())
                with_output(json_path, [&](std::ostream& out) { out << report.to_json().dump(2) << '\n'; });
            return report.exit_code() == 0 ? 0 : kExitFailed;
        }
        if (*search) {
            const auto g = load_or_build(search_args);
            mpg::CodeSearchOptions opts;
            opts.max_results = max_results;
            const auto codes = mpg::code_search(g.graph, code_ell, opts);
            std::cout << codes.size() << " codes\n";
            for (const auto& s : codes) {
                for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? " " : "") << g.graph.name(s[i]);
                std::cout << '\n';
            }
            return 0;
        }
        if (*exporter) {
            const auto g = load_or_build(export_args);
            with_output(export_out, [&](std::ostream& out) {
                if (format == "edges") {
                    mpg::write_edge_list(out, g);
                    return;
                }
                const bool colourable = g.params.ell == 2 && g.family.kind == mpg::GeneratorFamily::Kind::Star;
                if (format == "coloring") {
                    if (!colourable) throw mpg::PreconditionError("the sigma colouring needs the star family with l = 2");
                    mpg::write_coloring(out, g.graph, mpg::sigma_total_coloring(g));
                    return;
                }
                if (toroidal) {
                    if (!colourable) throw mpg::PreconditionError("the toroidal assembly needs the star family with l = 2");
                    const auto tc = mpg::sigma_total_coloring(g);
                    const auto a = mpg::toroidal_assembly(g, tc, 2 * g.params.k - 1, {1, 2, 3, 4});
                    mpg::TotalColoring sub;
                    for (auto v : a.assembly.origin) sub.vertex.push_back(tc.vertex[v]);
                    for (auto e : a.assembly.edge_origin) sub.edge.push_back(tc.edge[e]);
                    mpg::write_dot(out, a.assembly.graph, &sub, "T");
                    return;
                }
                if (colourable) {
                    const auto tc = mpg::sigma_total_coloring(g);
                    mpg::write_dot(out, g.graph, &tc);
                } else {
                    mpg::write_dot(out, g.graph);
                }
            });
            return 0;
        }
    } catch (const mpg::InstanceTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const mpg::PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
