// mems — classify multipartite entanglement structures.
//
// Subcommands cover the full pipeline: partition/hypergraph plumbing,
// reduction matrices and their signal bases, lattice and rank verification
// sweeps, hypergraph recovery from signals, point classification, and
// numeric checks on explicitly constructed quantum states.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include "mems/fixtures.hpp"
#include "mems/hypergraph.hpp"
#include "mems/json_io.hpp"
#include "mems/parallel.hpp"
#include "mems/partitions.hpp"
#include "mems/quantum.hpp"
#include "mems/reduction.hpp"
#include "mems/structure.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mems;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json load_json(const std::string& path) { return Json::parse(read_file(path)); }

Hypergraph load_graph(const std::string& path) { return hypergraph_from_json(load_json(path)); }

void emit_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void emit_graph(const Hypergraph& h, const std::string& format) {
    if (format == "dot")
        std::cout << hypergraph_to_dot(h);
    else
        emit_json(hypergraph_to_json(h));
}

std::string sci(double x) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(3) << x;
    return out.str();
}

int cmd_partitions(int n, const std::string& parse_text, bool normalize) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumeration limit");
    const VertexSet verts = VertexSet::standard(std::size_t(n));
    if (!parse_text.empty()) {
        std::cout << format_partition(parse_partition(parse_text, verts, normalize)) << '\n';
        return 0;
    }
    for (const auto& p : enumerate_nontrivial_partitions(verts))
        std::cout << format_partition(p) << '\n';
    return 0;
}

int cmd_matrix(const std::string& path) {
    emit_json(matrix_to_json(build_reduction_matrix(load_graph(path)).matrix));
    return 0;
}

int cmd_rank(const std::string& path, const std::string& method) {
    const Hypergraph h = load_graph(path);
    if (method == "matrix") {
        std::cout << rank_by_matrix(h) << '\n';
        return 0;
    }
    if (method == "formula") {
        std::cout << rank_by_formula(h) << '\n';
        return 0;
    }
    const std::size_t by_matrix = rank_by_matrix(h);
    const std::size_t by_formula = rank_by_formula(h);
    const std::size_t dim = PartitionIndex::build(h.vertices).size();
    std::cout << "matrix=" << by_matrix << " formula=" << by_formula
              << " codim=" << (dim - by_matrix) << '\n';
    return by_matrix == by_formula ? 0 : 1;
}

int cmd_signals(const std::string& path, const std::string& format) {
    const SignalSet sig = signals(load_graph(path));
    if (format == "text") {
        for (std::size_t i = 0; i < sig.count(); ++i)
            std::cout << signal_to_text(sig.coefficients, i, sig.macro) << '\n';
    } else {
        emit_json(signals_to_json(sig));
    }
    return 0;
}

int cmd_join_meet(const std::string& a_path, const std::string& b_path, bool is_join,
                  const std::string& format) {
    const Hypergraph a = load_graph(a_path);
    const Hypergraph b = load_graph(b_path);
    emit_graph(is_join ? join(a, b) : meet(a, b), format);
    return 0;
}

int cmd_recover(const std::string& path, const std::string& format) {
    emit_graph(recover_hypergraph(signals_from_json(load_json(path))), format);
    return 0;
}

int cmd_classify(const std::string& path, double tol) {
    const MemsPoint p = point_from_json(load_json(path));
    Json out = Json::array();
    for (const auto& h : classify_point(p, tol)) out.push_back(hypergraph_to_json(h));
    emit_json(out);
    return 0;
}

int cmd_k_complete(int n, int k, const std::string& format) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    emit_graph(k_uniform_complete(VertexSet::standard(std::size_t(n)), std::size_t(k)), format);
    return 0;
}

int cmd_count_sensitive(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("arguments must be nonnegative");
    std::cout << count_sensitive(std::size_t(n), std::size_t(k)).str() << '\n';
    return 0;
}

int cmd_verify_theorem1(int n, bool exhaustive, int samples, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    const VertexSet verts = VertexSet::standard(std::size_t(n));
    std::size_t checked = 0;
    std::size_t passed = 0;
    if (exhaustive || samples <= 0) {
        enumerate_antichains(verts, [&](const Hypergraph& h) {
            ++checked;
            if (rank_by_matrix(h) == rank_by_formula(h)) ++passed;
        });
    } else {
        std::vector<char> ok(std::size_t(samples), 0);
        parallel_for(std::size_t(samples), [&](std::size_t i) {
            const Hypergraph h = random_antichain(verts, seed + i);
            ok[i] = (rank_by_matrix(h) == rank_by_formula(h)) ? 1 : 0;
        });
        checked = std::size_t(samples);
        for (const char c : ok) passed += std::size_t(c);
    }
    std::cout << "checked=" << checked << " passed=" << passed << '\n';
    return checked == passed ? 0 : 1;
}

int cmd_verify_lattice(const std::string& a_path, const std::string& b_path) {
    const LatticeReport report =
        verify_lattice_correspondence(load_graph(a_path), load_graph(b_path));
    std::cout << "join=" << (report.join_identity ? "pass" : "fail")
              << " meet=" << (report.meet_identity ? "pass" : "fail") << '\n';
    return report.passed() ? 0 : 1;
}

int cmd_verify_quantum(const std::string& path, int qubits, int seeds, double tol) {
    if (qubits < 1 || qubits > 14) throw std::invalid_argument("qubits-per-factor out of range");
    if (seeds < 1) throw std::invalid_argument("seeds must be positive");
    if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
    const Hypergraph h = load_graph(path);
    const FactorLayout layout = FactorLayout::uniform(h, std::size_t(1) << qubits);
    const SignalSet sig = signals(h);

    std::vector<double> residuals(std::size_t(seeds), 0.0);
    std::vector<double> worst_signal(std::size_t(seeds), 0.0);
    parallel_for(std::size_t(seeds), [&](std::size_t s) {
        residuals[s] = verify_decomposition(h, layout, s);
        const MemsPoint p = mems_point(build_sperner_state(h, layout, s));
        for (const double v : evaluate_signals(sig, p))
            worst_signal[s] = std::max(worst_signal[s], std::abs(v));
    });
    double max_residual = 0.0;
    double max_signal = 0.0;
    for (int s = 0; s < seeds; ++s) {
        max_residual = std::max(max_residual, residuals[std::size_t(s)]);
        max_signal = std::max(max_signal, worst_signal[std::size_t(s)]);
    }
    const bool pass = max_residual < tol && max_signal < tol;
    std::cout << "seeds=" << seeds << " max_residual=" << sci(max_residual)
              << " max_signal=" << sci(max_signal) << " result=" << (pass ? "pass" : "fail")
              << '\n';
    return pass ? 0 : 1;
}

int cmd_fixtures() {
    const fixtures::FixtureReport report = fixtures::check_reference_fixtures();
    for (const auto& c : report.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << '\n';
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_point(const std::string& state, const std::string& graph_path, std::uint64_t seed,
              int product_n, int qubits) {
    PureState psi;
    if (!graph_path.empty()) {
        const Hypergraph h = load_graph(graph_path);
        if (qubits < 1 || qubits > 14) throw std::invalid_argument("qubits-per-factor out of range");
        psi = build_sperner_state(h, FactorLayout::uniform(h, std::size_t(1) << qubits), seed);
    } else if (state == "ghz3") {
        psi = ghz_state(3);
    } else if (state == "ghz4") {
        psi = ghz_state(4);
    } else if (state == "product") {
        if (product_n < 2) throw std::invalid_argument("n must be at least 2");
        psi = product_state(std::size_t(product_n));
    } else {
        throw std::invalid_argument("unknown state: " + state);
    }
    emit_json(point_to_json(mems_point(psi)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement-structure classification via hypergraph signal spaces"};
    app.name("mems");
    app.require_subcommand(1);

    int exit_code = 0;

    // partitions
    int part_n = 0;
    std::string part_parse;
    bool part_normalize = false;
    auto* sc_partitions =
        app.add_subcommand("partitions", "List nontrivial partitions in canonical order");
    sc_partitions->add_option("n", part_n, "Number of parties")->required();
    sc_partitions->add_option("--parse", part_parse, "Parse a partition and echo its canonical form");
    sc_partitions->add_flag("--normalize", part_normalize, "Accept non-canonical spellings");
    sc_partitions->callback([&] { exit_code = cmd_partitions(part_n, part_parse, part_normalize); });

    // matrix
    std::string matrix_path;
    auto* sc_matrix = app.add_subcommand("matrix", "Emit the partition-reduction matrix as JSON");
    sc_matrix->add_option("graph", matrix_path, "Hypergraph JSON file")->required();
    sc_matrix->callback([&] { exit_code = cmd_matrix(matrix_path); });

    // rank
    std::string rank_path;
    std::string rank_method = "both";
    auto* sc_rank = app.add_subcommand("rank", "Rank of the reduction matrix");
    sc_rank->add_option("graph", rank_path, "Hypergraph JSON file")->required();
    sc_rank->add_option("--method", rank_method, "matrix | formula | both")
        ->check(CLI::IsMember({"matrix", "formula", "both"}));
    sc_rank->callback([&] { exit_code = cmd_rank(rank_path, rank_method); });

    // signals
    std::string signals_path;
    std::string signals_format = "json";
    auto* sc_signals = app.add_subcommand("signals", "Canonical signal basis of a hypergraph class");
    sc_signals->add_option("graph", signals_path, "Hypergraph JSON file")->required();
    sc_signals->add_option("--format", signals_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    sc_signals->callback([&] { exit_code = cmd_signals(signals_path, signals_format); });

    // join / meet
    std::string lattice_a;
    std::string lattice_b;
    std::string lattice_format = "json";
    auto* sc_join = app.add_subcommand("join", "Lattice join of two antichain hypergraphs");
    sc_join->add_option("a", lattice_a, "First hypergraph JSON file")->required();
    sc_join->add_option("b", lattice_b, "Second hypergraph JSON file")->required();
    sc_join->add_option("--format", lattice_format, "json | dot")
        ->check(CLI::IsMember({"json", "dot"}));
    sc_join->callback([&] { exit_code = cmd_join_meet(lattice_a, lattice_b, true, lattice_format); });
    auto* sc_meet = app.add_subcommand("meet", "Lattice meet of two antichain hypergraphs");
    sc_meet->add_option("a", lattice_a, "First hypergraph JSON file")->required();
    sc_meet->add_option("b", lattice_b, "Second hypergraph JSON file")->required();
    sc_meet->add_option("--format", lattice_format, "json | dot")
        ->check(CLI::IsMember({"json", "dot"}));
    sc_meet->callback([&] { exit_code = cmd_join_meet(lattice_a, lattice_b, false, lattice_format); });

    // recover
    std::string recover_path;
    std::string recover_format = "json";
    auto* sc_recover = app.add_subcommand("recover", "Recover the hypergraph from a signal set");
    sc_recover->add_option("signals", recover_path, "SignalSet JSON file")->required();
    sc_recover->add_option("--format", recover_format, "json | dot")
        ->check(CLI::IsMember({"json", "dot"}));
    sc_recover->callback([&] { exit_code = cmd_recover(recover_path, recover_format); });

    // classify
    std::string classify_path;
    double classify_tol = 1e-9;
    auto* sc_classify =
        app.add_subcommand("classify", "Dominance-minimal classes whose signals annihilate a point");
    sc_classify->add_option("point", classify_path, "MemsPoint JSON file")->required();
    sc_classify->add_option("--tol", classify_tol, "Annihilation tolerance");
    sc_classify->callback([&] { exit_code = cmd_classify(classify_path, classify_tol); });

    // k-complete
    int kc_n = 0;
    int kc_k = 0;
    std::string kc_format = "json";
    auto* sc_kc = app.add_subcommand("k-complete", "k-uniform-complete hypergraph on n parties");
    sc_kc->add_option("n", kc_n, "Number of parties")->required();
    sc_kc->add_option("k", kc_k, "Edge size")->required();
    sc_kc->add_option("--format", kc_format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
    sc_kc->callback([&] { exit_code = cmd_k_complete(kc_n, kc_k, kc_format); });

    // count-sensitive
    int cs_n = 0;
    int cs_k = 0;
    auto* sc_cs =
        app.add_subcommand("count-sensitive", "Number of partitions first separated at edge size k");
    sc_cs->add_option("n", cs_n, "Number of parties")->required();
    sc_cs->add_option("k", cs_k, "Edge size")->required();
    sc_cs->callback([&] { exit_code = cmd_count_sensitive(cs_n, cs_k); });

    // verify-theorem1
    int vt_n = 0;
    bool vt_exhaustive = false;
    int vt_samples = 0;
    std::uint64_t vt_seed = 0;
    auto* sc_vt = app.add_subcommand("verify-theorem1",
                                     "Check rank formula against matrix rank over antichains");
    sc_vt->add_option("--n", vt_n, "Number of parties")->required();
    auto* vt_ex_flag = sc_vt->add_flag("--exhaustive", vt_exhaustive, "Sweep every antichain");
    auto* vt_samples_opt =
        sc_vt->add_option("--samples", vt_samples, "Number of seeded random antichains");
    sc_vt->add_option("--seed", vt_seed, "Base seed for sampling");
    vt_ex_flag->excludes(vt_samples_opt);
    sc_vt->callback(
        [&] { exit_code = cmd_verify_theorem1(vt_n, vt_exhaustive, vt_samples, vt_seed); });

    // verify-lattice
    std::string vl_a;
    std::string vl_b;
    auto* sc_vl =
        app.add_subcommand("verify-lattice", "Check the join/meet span identities for a pair");
    sc_vl->add_option("a", vl_a, "First hypergraph JSON file")->required();
    sc_vl->add_option("b", vl_b, "Second hypergraph JSON file")->required();
    sc_vl->callback([&] { exit_code = cmd_verify_lattice(vl_a, vl_b); });

    // verify-quantum
    std::string vq_path;
    int vq_qubits = 1;
    int vq_seeds = 10;
    double vq_tol = 1e-9;
    auto* sc_vq = app.add_subcommand(
        "verify-quantum", "Sample class states; check decomposition residual and signal vanishing");
    sc_vq->add_option("graph", vq_path, "Hypergraph JSON file")->required();
    sc_vq->add_option("--qubits-per-factor", vq_qubits, "Qubits per hyperedge factor");
    sc_vq->add_option("--seeds", vq_seeds, "Number of seeds to sweep");
    sc_vq->add_option("--tol", vq_tol, "Pass tolerance in bits");
    sc_vq->callback([&] { exit_code = cmd_verify_quantum(vq_path, vq_qubits, vq_seeds, vq_tol); });

    // fixtures
    auto* sc_fixtures =
        app.add_subcommand("fixtures", "Regenerate and check the golden reference data");
    sc_fixtures->callback([&] { exit_code = cmd_fixtures(); });

    // point
    std::string pt_state;
    std::string pt_graph;
    std::uint64_t pt_seed = 0;
    int pt_n = 3;
    int pt_qubits = 1;
    auto* sc_point = app.add_subcommand("point", "Evaluate a state's measure vector");
    auto* pt_state_opt =
        sc_point->add_option("--state", pt_state, "Built-in state: ghz3 | ghz4 | product");
    auto* pt_graph_opt =
        sc_point->add_option("--graph", pt_graph, "Hypergraph JSON file for a seeded class state");
    sc_point->add_option("--seed", pt_seed, "Seed for the class state");
    sc_point->add_option("--n", pt_n, "Party count for the product state");
    sc_point->add_option("--qubits-per-factor", pt_qubits, "Qubits per hyperedge factor");
    pt_state_opt->excludes(pt_graph_opt);
    sc_point->callback([&] {
        if (pt_state.empty() && pt_graph.empty())
            throw CLI::RequiredError("point: one of --state or --graph");
        exit_code = cmd_point(pt_state, pt_graph, pt_seed, pt_n, pt_qubits);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
