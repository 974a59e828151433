#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "chromllt/chromllt.hpp"

using namespace chromllt;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int max_n() {
    const char* env = std::getenv("CHROMLLT_MAX_N");
    if (!env || !*env) return 8;
    int v = 0;
    const std::string s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
        throw UsageError("CHROMLLT_MAX_N must be a nonnegative integer, got '" + s + "'");
    }
    return std::min(v, Graph::max_vertices);
}

void require_within_ceiling(int n) {
    const int ceiling = max_n();
    if (n > ceiling) {
        throw ResourceError("n = " + std::to_string(n) + " exceeds the ceiling " + std::to_string(ceiling) +
                            " (set CHROMLLT_MAX_N to raise it)");
    }
}

std::string join_edges(const Graph& g) {
    std::string out;
    for (auto [i, j] : g.edges()) out += (out.empty() ? "" : " ") + std::to_string(i) + "-" + std::to_string(j);
    return out.empty() ? "-" : out;
}

// ---------------------------------------------------------------------------

int run_graphs(int n, const std::string& format) {
    if (n < 0 || n > max_n()) {
        throw UsageError("--n must lie in 0.." + std::to_string(max_n()));
    }
    const auto graphs = enumerate_dyck(n);
    if (format == "json") {
        Json out = Json::array();
        for (auto& g : graphs) {
            Json rec = to_json(g.graph());
            Json edges = Json::array();
            for (auto [i, j] : g.edges()) edges.push_back({i, j});
            rec["edges"] = edges;
            rec["diagram"] = g.to_diagram().to_string();
            out.push_back(rec);
        }
        std::cout << out.dump() << "\n";
        return kOk;
    }
    for (auto& g : graphs) {
        std::cout << g.to_string() << "  edges: " << join_edges(g) << "  diagram: " << g.to_diagram().to_string()
                  << "\n";
    }
    std::cout << graphs.size() << (graphs.size() == 1 ? " graph\n" : " graphs\n");
    return kOk;
}

LinearCombination expand_target(const Graph& g, const std::string& target) {
    const auto dyck = [&] {
        if (!g.is_dyck()) throw UsageError("target " + target + " needs a Dyck graph");
        return DyckGraph::from_graph(g);
    };
    if (target == "X:qsym-M") return x_qsym(g);
    if (target == "X:wqsym-M") return x_wqsym(g);
    if (target == "X:wqsym-Phi") return x_phi(g);
    if (target == "X:wqsym-PhiCheck") return x_phicheck(g);
    if (target == "X:t1-mt") return x1_mt(dyck());
    if (target == "X:qsym-F") return sw_f_expansion(g);
    if (target == "LLT:qsym-M") return llt_qsym(g);
    if (target == "LLT:wqsym-M") return llt_wqsym(g);
    if (target == "LLT:wqsym-PhiCheck") return llt_phicheck(g);
    throw UsageError("unknown target '" + target + "'");
}

int run_expand(const std::string& graph, const std::string& target, bool json) {
    const Graph g = parse_graph(graph);
    require_within_ceiling(g.n());
    const auto x = expand_target(g, target);
    if (json) {
        std::cout << to_json(x).dump() << "\n";
    } else {
        std::cout << x.to_string() << "\n";
    }
    return kOk;
}

int run_transform(const std::string& alphabet, const std::string& input, bool json) {
    const auto a = parse_alphabet(alphabet);
    std::string text;
    if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(input);
        if (!in) throw UsageError("cannot read '" + input + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    const auto x = linear_combination_from_json(Json::parse(text));
    if (x.max_degree() > max_n()) require_within_ceiling(x.max_degree());
    LinearCombination y(x.basis());
    switch (x.basis()) {
        case Basis::QSymM: y = qsym_transform(x, a); break;
        case Basis::WQSymM: y = wqsym_transform(x, a); break;
        case Basis::SymS: y = sym_transform(x, a); break;
        case Basis::WQSymDualN: y = wqsymdual_transform(x, a); break;
        default:
            throw UsageError("transforms are defined on QSym.M, Sym.S, WQSym.M and WQSymDual.N, not " +
                             std::string(basis_name(x.basis())));
    }
    std::cout << (json ? to_json(y).dump() : y.to_string()) << "\n";
    return kOk;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
    return out;
}

int run_stats(const std::string& graph, const std::string& statistic, const std::string& perm, bool csv) {
    const Graph gr = parse_graph(graph);
    if (!gr.is_dyck()) throw UsageError("stats needs a Dyck graph");
    const DyckGraph g = DyckGraph::from_graph(gr);
    const int n = g.n();

    if (statistic == "increments") {
        if (n < 1) throw UsageError("increments need at least one vertex");
        std::vector<Permutation> sigmas;
        if (!perm.empty()) {
            sigmas.emplace_back(parse_word(perm));
        } else {
            require_within_ceiling(n);
            sigmas = permutations(n - 1);
        }
        if (csv) std::cout << "perm,slot,increment,word,st\n";
        for (auto& s : sigmas) {
            if (static_cast<int>(s.size()) != n - 1) throw UsageError("--perm must have length n-1 for increments");
            const auto inc = insertion_increments(g, s);
            if (!csv) std::cout << render_increments(s, inc) << "\n";
            for (std::size_t slot = 0; slot < inc.size(); ++slot) {
                const auto w = insert_max(s, slot);
                if (csv) {
                    std::cout << s.to_string() << "," << slot << "," << inc[slot] << "," << w.to_string() << ","
                              << st_g(g, w) << "\n";
                } else {
                    std::cout << "  slot " << slot << ": " << w.to_string() << " +" << inc[slot] << " st " << st_g(g, w)
                              << "\n";
                }
            }
        }
        return kOk;
    }

    std::vector<std::string> columns;
    if (statistic == "st") {
        columns = {"inv", "maj", "st"};
    } else if (statistic == "inv" || statistic == "maj" || statistic == "code") {
        columns = {statistic};
    } else {
        throw UsageError("unknown statistic '" + statistic + "'");
    }
    std::vector<Permutation> sigmas;
    if (!perm.empty()) {
        Permutation s(parse_word(perm));
        if (static_cast<int>(s.size()) != n) throw UsageError("--perm must have length n");
        sigmas.push_back(s);
    } else {
        require_within_ceiling(n);
        sigmas = permutations(n);
    }
    if (csv) {
        std::cout << "perm";
        for (auto& c : columns) std::cout << "," << c;
        std::cout << "\n";
    }
    for (auto& s : sigmas) {
        std::vector<std::string> cells;
        for (auto& c : columns) {
            if (c == "inv") cells.push_back(std::to_string(inv_g(g, s)));
            if (c == "maj") cells.push_back(std::to_string(maj_g(g, s)));
            if (c == "st") cells.push_back(std::to_string(st_g(g, s)));
            if (c == "code") cells.push_back(join_ints(code(g, s), csv ? " " : ","));
        }
        if (csv) {
            std::cout << s.to_string();
            for (auto& c : cells) std::cout << "," << c;
        } else {
            std::cout << s.to_string() << ":";
            for (std::size_t k = 0; k < cells.size(); ++k) std::cout << (k ? ", " : " ") << columns[k] << " " << cells[k];
        }
        std::cout << "\n";
    }
    return kOk;
}

int run_verify(const std::string& identity, std::optional<int> n, std::optional<double> time_limit) {
    if (n && *n < 0) throw UsageError("--n must be nonnegative");
    const Budget budget = time_limit ? Budget(std::chrono::duration<double>(*time_limit)) : Budget();
    std::vector<const Suite*> suites;
    if (identity == "all") {
        for (auto& s : verify_suites()) suites.push_back(&s);
    } else {
        try {
            suites.push_back(&find_suite(identity));
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }
    bool failed = false, partial = false;
    for (auto* s : suites) {
        const auto report = run_suite(*s, n.value_or(s->default_n), max_n(), budget);
        std::cout << format_report(report);
        failed = failed || !report.passed();
        partial = partial || report.partial();
    }
    if (failed) return kVerifyFailed;
    return partial ? kResource : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chromatic quasisymmetric functions and unicellular LLT polynomials"};
    app.require_subcommand(1);

    int graphs_n = 0;
    std::string graphs_format = "text";
    auto* graphs = app.add_subcommand("graphs", "List the Dyck graphs on n vertices");
    graphs->add_option("--n", graphs_n, "Number of vertices")->required();
    graphs->add_option("--format", graphs_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string expand_graph, expand_target_name;
    bool expand_json = false;
    auto* expand = app.add_subcommand("expand", "Expand X_G or LLT_G in a basis");
    expand->add_option("--graph", expand_graph, "h:a,b,... or e:n;i-j,...")->required();
    expand->add_option("--target", expand_target_name, "e.g. X:wqsym-M, LLT:qsym-M, X:t1-mt")->required();
    expand->add_flag("--json", expand_json, "Emit JSON");

    std::string transform_alphabet, transform_input;
    bool transform_json = false;
    auto* transform = app.add_subcommand("transform", "Apply a virtual alphabet to an element read from JSON");
    transform->add_option("--alphabet", transform_alphabet, "1/(1-t), 1/(t-1), 1-t or t-1")->required();
    transform->add_option("--input", transform_input, "JSON file, or - for stdin")->required();
    transform->add_flag("--json", transform_json, "Emit JSON");

    std::string stats_graph, stats_statistic, stats_perm, stats_format = "text";
    auto* stats = app.add_subcommand("stats", "Permutation statistics of a Dyck graph");
    stats->add_option("--graph", stats_graph, "h:a,b,... or e:n;i-j,...")->required();
    stats->add_option("--statistic", stats_statistic, "st, inv, maj, code or increments")->required();
    stats->add_option("--perm", stats_perm, "A single permutation; all of them if omitted");
    stats->add_option("--format", stats_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

    std::string verify_identity;
    std::optional<int> verify_n;
    std::optional<double> verify_time;
    auto* verify = app.add_subcommand("verify", "Check an identity for all sizes up to n");
    verify->add_option("--identity", verify_identity, "Suite name, or all")->required();
    verify->add_option("--n", verify_n, "Largest size (default depends on the suite)");
    verify->add_option("--time-limit", verify_time, "Stop after this many seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*graphs) return run_graphs(graphs_n, graphs_format);
        if (*expand) return run_expand(expand_graph, expand_target_name, expand_json);
        if (*transform) return run_transform(transform_alphabet, transform_input, transform_json);
        if (*stats) return run_stats(stats_graph, stats_statistic, stats_perm, stats_format == "csv");
        if (*verify) return run_verify(verify_identity, verify_n, verify_time);
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResource;
    } catch (const Json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
