#include "forts/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "forts/certify.hpp"
#include "forts/construct.hpp"
#include "forts/forcing.hpp"
#include "forts/forts.hpp"
#include "forts/matroid.hpp"
#include "forts/transversal.hpp"
#include "forts/y_search.hpp"

namespace forts {

namespace {

struct Options {
    std::string graph6;
    std::string edges;       // inline graph JSON
    std::string edges_file;  // graph JSON path
    std::string family;      // inline family JSON
    std::string forts_json;  // inline fort list JSON
    std::string vectors;     // inline vector list JSON
    std::string matrix;      // inline matrix JSON
    std::string matrix_file;
    std::string circuits;  // inline circuit family JSON
    std::string cert_file;
    int ground_n = -1;
    bool one_based = false;
    std::uint64_t seed = 12345;
    std::int64_t max_forts = kDefaultFortCap;
    std::int64_t max_cycles = kDefaultCycleCap;
    std::int64_t max_nodes = 20000000;
    double time_limit = 600.0;

    int base() const { return one_based ? 1 : 0; }

    SearchBudget budget() const { return {max_nodes, time_limit}; }
};

Json parse_json_text(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("malformed ") + what + ": " + e.what());
    }
}

Json read_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw InputError(std::string("cannot open ") + what + " file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), what);
}

Graph load_graph(const Options& opt) {
    int sources = !opt.graph6.empty() + !opt.edges.empty() + !opt.edges_file.empty();
    if (sources != 1) throw InputError("provide the graph via exactly one of --graph6, --edges, --edges-file");
    if (!opt.graph6.empty()) return parse_graph6(opt.graph6);
    Json j = !opt.edges.empty() ? parse_json_text(opt.edges, "--edges")
                                : read_json_file(opt.edges_file, "--edges-file");
    return graph_from_json(j, opt.base());
}

RationalMatrix load_matrix(const Options& opt) {
    int sources = !opt.matrix.empty() + !opt.matrix_file.empty();
    if (sources != 1) throw InputError("provide the matrix via exactly one of --matrix, --matrix-file");
    Json j = !opt.matrix.empty() ? parse_json_text(opt.matrix, "--matrix")
                                 : read_json_file(opt.matrix_file, "--matrix-file");
    return matrix_from_json(j);
}

Json graph_inputs(const Options& opt, const Graph& g) {
    Json inputs;
    inputs["graph"] = graph_json(g, opt.base());
    inputs["one_based"] = opt.one_based;
    return inputs;
}

void emit(std::ostream& out, const Json& cert) { out << cert.dump(2) << "\n"; }

// --- subcommand bodies -----------------------------------------------------

int cmd_fort_list(const Options& opt, std::ostream& out, bool minimal) {
    Graph g = load_graph(opt);
    FortCollection c = minimal ? minimal_forts(g, opt.max_forts) : all_forts(g, opt.max_forts);
    Json claim;
    claim["count"] = c.sets.size();
    claim["minimal"] = minimal;
    Json witness;
    witness["forts"] = fort_family_json(c.sets, opt.base());
    emit(out, make_certificate(minimal ? "minimal-forts" : "forts", graph_inputs(opt, g), claim,
                               witness));
    return 0;
}

int cmd_zero_forcing(const Options& opt, std::ostream& out) {
    Graph g = load_graph(opt);
    ZeroForcingNumber z = zero_forcing_number(g);
    Json claim;
    claim["Z"] = z.value;
    Json witness;
    witness["witness"] = vertex_list_json(z.witness, opt.base());
    Json log = Json::array();
    for (auto [u, w] : z.force_log)
        log.push_back(Json::array({u + opt.base(), w + opt.base()}));
    witness["force_log"] = std::move(log);
    emit(out, make_certificate("zero-forcing", graph_inputs(opt, g), claim, witness));
    return 0;
}

// Family from --family, or the minimal forts of the graph when only a graph
// is given.
std::pair<Json, FortCollection> load_family(const Options& opt) {
    if (!opt.family.empty()) {
        int n = opt.ground_n;
        Graph g;
        bool have_graph = !opt.graph6.empty() || !opt.edges.empty() || !opt.edges_file.empty();
        if (have_graph) {
            g = load_graph(opt);
            n = g.vertex_count();
        }
        if (n < 0) throw InputError("--family needs --ground-n or a graph");
        Json fam = parse_json_text(opt.family, "--family");
        FortCollection c =
            FortCollection::make(n, fort_family_from_json(fam, n, opt.base()));
        Json inputs;
        if (have_graph) inputs["graph"] = graph_json(g, opt.base());
        inputs["ground_n"] = n;
        inputs["family"] = fort_family_json(c.sets, opt.base());
        inputs["one_based"] = opt.one_based;
        return {std::move(inputs), std::move(c)};
    }
    Graph g = load_graph(opt);
    FortCollection c = minimal_forts(g, opt.max_forts);
    Json inputs = graph_inputs(opt, g);
    inputs["ground_n"] = g.vertex_count();
    inputs["family"] = fort_family_json(c.sets, opt.base());
    inputs["family_source"] = "minimal-forts";
    return {std::move(inputs), std::move(c)};
}

int cmd_tau(const Options& opt, std::ostream& out) {
    auto [inputs, family] = load_family(opt);
    TransversalResult t = min_transversal(family);
    Json claim;
    claim["tau"] = t.size;
    claim["optimal"] = t.proven_optimal;
    Json witness;
    witness["witness"] = vertex_list_json(t.witness, opt.base());
    emit(out, make_certificate("tau", inputs, claim, witness));
    return 0;
}

int cmd_compatible(const Options& opt, std::ostream& out) {
    Graph g = load_graph(opt);
    FortCollection family = [&] {
        if (opt.family.empty()) return minimal_forts(g, opt.max_forts);
        Json fam = parse_json_text(opt.family, "--family");
        return FortCollection::make(g.vertex_count(),
                                    fort_family_from_json(fam, g.vertex_count(), opt.base()));
    }();
    CompatibilityCheck check = is_compatible(g, family);
    Json inputs = graph_inputs(opt, g);
    inputs["family"] = fort_family_json(family.sets, opt.base());
    if (opt.family.empty()) inputs["family_source"] = "minimal-forts";
    Json claim;
    claim["compatible"] = check.ok;
    Json witness;
    if (check.ok) {
        witness["violation"] = nullptr;
    } else {
        Json v;
        v["F1"] = vertex_list_json(check.violation->f1, opt.base());
        v["F2"] = vertex_list_json(check.violation->f2, opt.base());
        v["x"] = check.violation->element + opt.base();
        witness["violation"] = std::move(v);
    }
    emit(out, make_certificate("compatible", inputs, claim, witness));
    return check.ok ? 0 : 2;
}

int cmd_y_number(const Options& opt, std::ostream& out) {
    Graph g = load_graph(opt);
    YNumber y = y_number(g, opt.budget(), opt.max_forts);
    Json claim;
    claim["Y"] = y.value;
    claim["proven"] = y.proven;
    Json witness;
    witness["witness_family"] = fort_family_json(y.witness_family, opt.base());
    witness["transversal"] = vertex_list_json(y.witness_transversal, opt.base());
    witness["nodes"] = y.nodes;
    emit(out, make_certificate("y-number", graph_inputs(opt, g), claim, witness));
    return 0;
}

int cmd_bounds(const Options& opt, std::ostream& out) {
    Graph g = load_graph(opt);
    BoundChain chain = bound_chain(g, opt.budget(), opt.max_forts);
    Json c;
    c["ft"] = chain.ft;
    c["N_lower"] = chain.n_lower;
    if (chain.y) c["Y"] = *chain.y;
    else c["Y"] = nullptr;
    c["y_proven"] = chain.y_proven;
    c["Z"] = chain.z;
    Json claim;
    claim["chain"] = std::move(c);
    Json witness;
    witness["ft_witness"] = fort_family_json(chain.ft_witness, opt.base());
    witness["y_witness"] = fort_family_json(chain.y_witness, opt.base());
    witness["z_witness"] = vertex_list_json(chain.z_witness, opt.base());
    emit(out, make_certificate("bounds", graph_inputs(opt, g), claim, witness));
    return 0;
}

ConstructionSpec load_spec(const Options& opt, const Graph& g) {
    if (opt.forts_json.empty()) throw InputError("--forts is required");
    Json fj = parse_json_text(opt.forts_json, "--forts");
    std::vector<VertexSet> forts = fort_family_from_json(fj, g.vertex_count(), opt.base());
    if (opt.vectors.empty()) return ConstructionSpec::with_indicator_vectors(g, std::move(forts));
    Json vj = parse_json_text(opt.vectors, "--vectors");
    ConstructionSpec spec;
    spec.graph = g;
    spec.forts = std::move(forts);
    for (const Json& v : vj) spec.vectors.push_back(rational_vector_from_json(v));
    spec.validate();
    return spec;
}

Json spec_inputs(const Options& opt, const ConstructionSpec& spec) {
    Json inputs = graph_inputs(opt, spec.graph);
    inputs["forts"] = fort_family_json(spec.forts, opt.base());
    Json vecs = Json::array();
    for (const RationalVector& x : spec.vectors) vecs.push_back(rational_vector_json(x));
    inputs["vectors"] = std::move(vecs);
    return inputs;
}

int cmd_construct(const Options& opt, std::ostream& out, bool symmetric) {
    Graph g = load_graph(opt);
    ConstructionSpec spec = load_spec(opt, g);
    Json inputs = spec_inputs(opt, spec);
    if (!symmetric) {
        RationalMatrix a = build_csym_disjoint(spec);
        Json claim;
        claim["ok"] = true;
        Json witness;
        witness["matrix"] = matrix_json(a);
        emit(out, make_certificate("construct-csym", inputs, claim, witness));
        return 0;
    }
    MsymResult res = build_msym_disjoint(spec);
    Json claim;
    claim["ok"] = res.matrix.has_value();
    Json witness;
    if (res.matrix) {
        witness["matrix"] = matrix_json(*res.matrix);
    } else {
        Json ob;
        ob["pair"] = Json::array({res.obstruction->fort_i, res.obstruction->fort_j});
        ob["bridge"] = edge_json(res.obstruction->bridge, opt.base());
        witness["obstruction"] = std::move(ob);
    }
    emit(out, make_certificate("construct-msym", inputs, claim, witness));
    return res.matrix ? 0 : 2;
}

int cmd_forced_zeros(const Options& opt, std::ostream& out) {
    Graph g = load_graph(opt);
    ConstructionSpec spec = load_spec(opt, g);
    Json inputs = spec_inputs(opt, spec);
    std::vector<Edge> forced = forced_zero_entries(spec);
    // The kernel of the constraint system substantiates the claim.
    std::vector<Edge> edges = g.edges();
    size_t vars = edges.size() + static_cast<size_t>(g.vertex_count());
    std::vector<RationalVector> rows;
    for (size_t i = 0; i < spec.forts.size(); ++i) {
        const RationalVector& x = spec.vectors[i];
        for (int v = 0; v < g.vertex_count(); ++v) {
            RationalVector row(vars);
            bool nonzero = false;
            for (size_t k = 0; k < edges.size(); ++k) {
                auto [p, q] = edges[k];
                if (p == v && x[static_cast<size_t>(q)] != 0) {
                    row[k] += x[static_cast<size_t>(q)];
                    nonzero = true;
                }
                if (q == v && x[static_cast<size_t>(p)] != 0) {
                    row[k] += x[static_cast<size_t>(p)];
                    nonzero = true;
                }
            }
            if (x[static_cast<size_t>(v)] != 0) {
                row[edges.size() + static_cast<size_t>(v)] = x[static_cast<size_t>(v)];
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    Json claim;
    Json fj = Json::array();
    for (Edge e : forced) fj.push_back(edge_json(e, opt.base()));
    claim["forced"] = std::move(fj);
    claim["realizable"] = forced.empty();
    Json witness;
    Json basis = Json::array();
    for (const RationalVector& x : kernel_basis(rows, static_cast<int>(vars)))
        basis.push_back(rational_vector_json(x));
    witness["basis"] = std::move(basis);
    emit(out, make_certificate("forced-zeros", inputs, claim, witness));
    return 0;
}

int cmd_zsf(const Options& opt, std::ostream& out) {
    Graph g = load_graph(opt);
    ZeroSumFlowResult res = zero_sum_flow(g, opt.max_cycles);
    Json claim;
    claim["exists"] = res.flow.has_value();
    Json witness;
    if (res.flow) {
        witness = flow_json(*res.flow, opt.base());
        witness["verified"] = true;
    } else {
        witness["bridge"] = edge_json(*res.bridge, opt.base());
    }
    emit(out, make_certificate("zsf", graph_inputs(opt, g), claim, witness));
    return res.flow ? 0 : 2;
}

int cmd_nullspace(const Options& opt, std::ostream& out) {
    RationalMatrix a = load_matrix(opt);
    auto basis = nullspace(a);
    Json inputs;
    inputs["matrix"] = matrix_json(a);
    inputs["one_based"] = opt.one_based;
    Json claim;
    claim["dimension"] = basis.size();
    Json witness;
    Json bj = Json::array();
    for (const RationalVector& x : basis) bj.push_back(rational_vector_json(x));
    witness["basis"] = std::move(bj);
    emit(out, make_certificate("nullspace", inputs, claim, witness));
    return 0;
}

int cmd_special_basis(const Options& opt, std::ostream& out) {
    RationalMatrix a = load_matrix(opt);
    NullBasis nb = special_null_basis(a);
    Json inputs;
    inputs["matrix"] = matrix_json(a);
    inputs["one_based"] = opt.one_based;
    Json claim;
    claim["nullity"] = nb.vectors.size();
    claim["transversal"] = vertex_list_json(nb.transversal, opt.base());
    Json witness;
    Json vj = Json::array();
    for (const RationalVector& x : nb.vectors) vj.push_back(rational_vector_json(x));
    witness["vectors"] = std::move(vj);
    Json sm;
    for (const auto& [v, supp] : nb.support_map)
        sm[std::to_string(v + opt.base())] = vertex_list_json(supp, opt.base());
    witness["support_map"] = std::move(sm);
    emit(out, make_certificate("special-basis", inputs, claim, witness));
    return 0;
}

int cmd_embed_matroid(const Options& opt, std::ostream& out) {
    if (opt.ground_n < 0) throw InputError("--ground-n is required");
    if (opt.circuits.empty()) throw InputError("--circuits is required");
    Json cj = parse_json_text(opt.circuits, "--circuits");
    FortCollection circuits = FortCollection::make(
        opt.ground_n, fort_family_from_json(cj, opt.ground_n, opt.base()));
    MatroidView m = MatroidView::make(opt.ground_n, circuits);
    MatroidEmbedding emb = embed_matroid(m);
    if (!emb.circuits_are_forts) throw Error("embedding failed to make every circuit a fort");
    Json inputs;
    inputs["ground_n"] = opt.ground_n;
    inputs["circuits"] = fort_family_json(circuits.sets, opt.base());
    inputs["one_based"] = opt.one_based;
    Json claim;
    claim["loops"] = vertex_list_json(emb.loops, opt.base());
    claim["circuits_are_forts"] = true;
    claim["rank"] = matroid_rank(m);
    Json witness;
    witness["graph"] = graph_json(emb.graph, opt.base());
    emit(out, make_certificate("embed-matroid", inputs, claim, witness));
    return 0;
}

int cmd_sap_check(const Options& opt, std::ostream& out) {
    RationalMatrix a = load_matrix(opt);
    SapReport rep = sap_check(a);
    Json inputs;
    inputs["matrix"] = matrix_json(a);
    inputs["one_based"] = opt.one_based;
    Json claim;
    claim["has_sap"] = rep.has_sap;
    Json witness;
    if (rep.witness) witness["witness"] = matrix_json(*rep.witness);
    else witness["witness"] = nullptr;
    emit(out, make_certificate("sap-check", inputs, claim, witness));
    return 0;
}

int cmd_petersen_audit(const Options& opt, std::ostream& out) {
    PetersenAuditResult res = petersen_incompatibility_audit();
    Json inputs;
    inputs["graph"] = graph_json(petersen(), opt.base());
    inputs["one_based"] = opt.one_based;
    Json claim;
    claim["confirmed"] = res.confirmed;
    claim["max_compatible_tau"] = res.confirmed ? 4 : 5;
    Json witness;
    witness["nodes"] = res.nodes;
    witness["leaves"] = res.leaves;
    witness["pruned_cover"] = res.pruned_cover;
    witness["pruned_pair"] = res.pruned_pair;
    auto records_json = [&](const std::vector<AuditRecord>& records) {
        Json arr = Json::array();
        for (const AuditRecord& r : records) {
            Json item;
            item["F1"] = vertex_list_json(r.f1, opt.base());
            item["F2"] = vertex_list_json(r.f2, opt.base());
            item["x"] = r.element + opt.base();
            item["pool"] = fort_family_json(r.pool_candidates, opt.base());
            arr.push_back(std::move(item));
        }
        return arr;
    };
    witness["violations"] = records_json(res.violations);
    witness["forced"] = records_json(res.forced);
    if (res.counterexample)
        witness["counterexample"] = fort_family_json(*res.counterexample, opt.base());
    emit(out, make_certificate("petersen-audit", inputs, claim, witness));
    return res.confirmed ? 0 : 2;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    if (opt.cert_file.empty()) throw InputError("verify needs a certificate file");
    Json cert = read_json_file(opt.cert_file, "certificate");
    VerifyOutcome res = verify_certificate(cert);
    Json report;
    report["ok"] = res.ok;
    report["mismatches"] = res.mismatches;
    out << report.dump(2) << "\n";
    return res.ok ? 0 : 2;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fort, transversal and nullity toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--one-based", opt.one_based, "vertex ids in inputs and outputs are 1-based");
    app.add_option("--seed", opt.seed, "seed for randomized helpers");
    app.add_option("--max-forts", opt.max_forts, "fort enumeration cap");
    app.add_option("--max-cycles", opt.max_cycles, "simple cycle enumeration cap");
    app.add_option("--max-nodes", opt.max_nodes, "search node budget");
    app.add_option("--time-limit", opt.time_limit, "search time budget in seconds");

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--graph6", opt.graph6, "graph as a graph6 token");
        cmd->add_option("--edges", opt.edges, "graph as inline JSON {\"n\":..,\"edges\":[[u,v],..]}");
        cmd->add_option("--edges-file", opt.edges_file, "graph JSON file");
    };
    auto add_matrix_opts = [&](CLI::App* cmd) {
        cmd->add_option("--matrix", opt.matrix, "matrix as inline JSON {\"n\":..,\"rows\":[[\"p/q\",..],..]}");
        cmd->add_option("--matrix-file", opt.matrix_file, "matrix JSON file");
    };

    struct Pending {
        std::function<int()> body;
    } pending;

    auto register_cmd = [&](const char* name, const char* desc, auto body) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->fallthrough();  // global flags may follow the subcommand
        cmd->callback([&pending, body] { pending.body = body; });
        return cmd;
    };

    add_graph_opts(register_cmd("forts", "enumerate every fort",
                                [&] { return cmd_fort_list(opt, out, false); }));
    add_graph_opts(register_cmd("minimal-forts", "enumerate the inclusion-minimal forts",
                                [&] { return cmd_fort_list(opt, out, true); }));
    add_graph_opts(register_cmd("zero-forcing", "exact zero forcing number with witness",
                                [&] { return cmd_zero_forcing(opt, out); }));
    {
        CLI::App* cmd = register_cmd("tau", "exact minimum transversal of a set family",
                                     [&] { return cmd_tau(opt, out); });
        add_graph_opts(cmd);
        cmd->add_option("--family", opt.family, "family as inline JSON [[v,..],..]");
        cmd->add_option("--ground-n", opt.ground_n, "ground set size when no graph is given");
    }
    {
        CLI::App* cmd = register_cmd("compatible", "exchange-condition check for a fort family",
                                     [&] { return cmd_compatible(opt, out); });
        add_graph_opts(cmd);
        cmd->add_option("--family", opt.family, "family as inline JSON [[v,..],..]");
    }
    add_graph_opts(register_cmd("y-number", "fort transversal number Y(G)",
                                [&] { return cmd_y_number(opt, out); }));
    add_graph_opts(register_cmd("bounds", "bound chain ft <= N_lower <= Y <= Z",
                                [&] { return cmd_bounds(opt, out); }));
    {
        CLI::App* cmd = register_cmd("construct-csym",
                                     "combinatorially symmetric matrix with prescribed null supports",
                                     [&] { return cmd_construct(opt, out, false); });
        add_graph_opts(cmd);
        cmd->add_option("--forts", opt.forts_json, "disjoint forts as inline JSON [[v,..],..]");
        cmd->add_option("--vectors", opt.vectors, "null vectors as inline JSON [[\"p/q\",..],..]");
    }
    {
        CLI::App* cmd = register_cmd("construct-msym",
                                     "symmetric matrix with prescribed null supports, or the bridge obstruction",
                                     [&] { return cmd_construct(opt, out, true); });
        add_graph_opts(cmd);
        cmd->add_option("--forts", opt.forts_json, "disjoint forts as inline JSON [[v,..],..]");
        cmd->add_option("--vectors", opt.vectors, "null vectors as inline JSON [[\"p/q\",..],..]");
    }
    {
        CLI::App* cmd = register_cmd("forced-zeros",
                                     "pattern entries every symmetric solution must zero out",
                                     [&] { return cmd_forced_zeros(opt, out); });
        add_graph_opts(cmd);
        cmd->add_option("--forts", opt.forts_json, "disjoint forts as inline JSON [[v,..],..]");
        cmd->add_option("--vectors", opt.vectors, "null vectors as inline JSON [[\"p/q\",..],..]");
    }
    add_graph_opts(register_cmd("zsf", "constructive zero-sum flow on a bipartite graph",
                                [&] { return cmd_zsf(opt, out); }));
    add_matrix_opts(register_cmd("nullspace", "exact nullspace basis",
                                 [&] { return cmd_nullspace(opt, out); }));
    add_matrix_opts(register_cmd("special-basis",
                                 "transversal-indexed nullspace basis with identity block",
                                 [&] { return cmd_special_basis(opt, out); }));
    {
        CLI::App* cmd = register_cmd("embed-matroid", "realize matroid circuits as forts",
                                     [&] { return cmd_embed_matroid(opt, out); });
        cmd->add_option("--ground-n", opt.ground_n, "ground set size");
        cmd->add_option("--circuits", opt.circuits, "circuit family as inline JSON [[v,..],..]");
    }
    add_matrix_opts(register_cmd("sap-check", "Strong Arnold Property check",
                                 [&] { return cmd_sap_check(opt, out); }));
    register_cmd("petersen-audit", "exhaustive minimal-fort compatibility audit",
                 [&] { return cmd_petersen_audit(opt, out); });
    {
        CLI::App* cmd = register_cmd("verify", "re-check an emitted certificate",
                                     [&] { return cmd_verify(opt, out); });
        cmd->add_option("cert", opt.cert_file, "certificate JSON file")->required();
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        return pending.body();
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << " (partial count " << e.partial_count << ")\n";
        return 3;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace forts
