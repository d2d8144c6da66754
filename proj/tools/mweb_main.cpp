// Command-line surface for the biclique toolkit: instance generation, exact
// and heuristic solving, reductions, bicluster scoring, matrix summarization
// and reduction verifiers. All structured output is JSON; binary matrices are
// TSV. Every output embeds a run manifest for reproducibility.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mweb/io.hpp"
#include "mweb/mdlh.hpp"
#include "mweb/reduce.hpp"
#include "mweb/samba.hpp"
#include "mweb/solve.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

// Exit codes: 0 success/optimal, 1 validation error, 2 non-optimal
// best-effort, 3 capacity error.
enum ExitCode { kOk = 0, kValidation = 1, kBestEffort = 2, kCapacity = 3 };

using mweb::json;

struct Manifest {
    std::string command;
    json parameters = json::object();
    std::uint64_t seed = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    json to_json() const {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return {{"command", command},
                {"parameters", parameters},
                {"seed", seed},
                {"tool_version", kToolVersion},
                {"timing", secs}};
    }
};

void emit_json(json payload, const Manifest& man, const std::string& out_path) {
    payload["manifest"] = man.to_json();
    std::string text = payload.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        mweb::write_file(out_path, text);
}

void emit_tsv(const std::string& body, const Manifest& man, const std::string& out_path) {
    std::string text = body + "# manifest: " + man.to_json().dump() + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        mweb::write_file(out_path, text);
}

// Randomized subcommands require --seed unless MWEB_SEED provides a default.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("MWEB_SEED")) return std::strtoull(env, nullptr, 10);
    throw mweb::ValidationError("--seed is required (or set MWEB_SEED)");
}

mweb::Objective parse_objective(const std::string& s) {
    if (s == "edge-weight") return mweb::Objective::EdgeWeight;
    if (s == "node-plus-edge") return mweb::Objective::NodePlusEdge;
    throw mweb::ValidationError("unknown objective: " + s);
}

mweb::Method parse_method(const std::string& s) {
    if (s == "exact-enumeration") return mweb::Method::ExactEnumeration;
    if (s == "branch-and-bound") return mweb::Method::BranchAndBound;
    if (s == "local-search") return mweb::Method::LocalSearch;
    throw mweb::ValidationError("unknown method: " + s);
}

std::vector<double> parse_weight_list(const std::string& csv) {
    std::vector<double> out;
    std::istringstream in(csv);
    std::string field;
    while (std::getline(in, field, ',')) {
        try {
            out.push_back(std::stod(field));
        } catch (const std::exception&) {
            throw mweb::ValidationError("bad weight value: " + field);
        }
    }
    if (out.empty()) throw mweb::ValidationError("weight list is empty");
    return out;
}

// ---------------------------------------------------------------- gen

int run_gen(const std::string& kind, std::size_t rows, std::size_t cols, std::size_t block_rows,
            std::size_t block_cols, const std::string& weights_csv, double density,
            std::optional<std::uint64_t> seed_flag, const std::string& out) {
    Manifest man;
    man.command = "gen";
    man.seed = resolve_seed(seed_flag);
    std::mt19937_64 rng(man.seed);
    man.parameters = {{"kind", kind}, {"rows", rows}, {"cols", cols}, {"density", density}};

    if (rows < 1 || cols < 1) throw mweb::ValidationError("dims must be >= 1");
    if (density < 0.0 || density > 1.0)
        throw mweb::ValidationError("density must be in [0,1]");

    if (kind == "random-binary") {
        std::bernoulli_distribution coin(density);
        std::vector<std::uint8_t> data(rows * cols);
        for (auto& v : data) v = coin(rng);
        emit_tsv(mweb::binary_matrix_to_tsv(mweb::BinaryMatrix(rows, cols, std::move(data))), man, out);
        return kOk;
    }
    if (kind == "random-clique-graph") {
        std::bernoulli_distribution coin(density);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t u = 0; u < rows; ++u)
            for (std::size_t v = u + 1; v < rows; ++v)
                if (coin(rng)) edges.push_back({u, v});
        emit_json(mweb::simple_graph_to_json(mweb::SimpleGraph(rows, edges)), man, out);
        return kOk;
    }

    std::vector<double> wset = parse_weight_list(weights_csv);
    man.parameters["weights"] = wset;
    std::uniform_int_distribution<std::size_t> pick(0, wset.size() - 1);
    std::vector<double> w(rows * cols);
    for (auto& v : w) v = wset[pick(rng)];

    if (kind == "random-weighted") {
        emit_json(mweb::graph_to_json(mweb::WeightedBipartiteGraph(rows, cols, std::move(w))), man, out);
        return kOk;
    }
    if (kind == "planted-biclique") {
        if (block_rows < 1 || block_rows > rows || block_cols < 1 || block_cols > cols)
            throw mweb::ValidationError("planted block must fit inside the matrix");
        double wmax = *std::max_element(wset.begin(), wset.end());
        // seeded random block position
        std::vector<std::size_t> ridx(rows), cidx(cols);
        std::iota(ridx.begin(), ridx.end(), std::size_t{0});
        std::iota(cidx.begin(), cidx.end(), std::size_t{0});
        std::shuffle(ridx.begin(), ridx.end(), rng);
        std::shuffle(cidx.begin(), cidx.end(), rng);
        std::vector<std::size_t> pr(ridx.begin(), ridx.begin() + block_rows);
        std::vector<std::size_t> pc(cidx.begin(), cidx.begin() + block_cols);
        std::sort(pr.begin(), pr.end());
        std::sort(pc.begin(), pc.end());
        for (auto i : pr)
            for (auto j : pc) w[i * cols + j] = wmax;
        man.parameters["planted"] = {{"u1", pr}, {"u2", pc}};
        emit_json(mweb::graph_to_json(mweb::WeightedBipartiteGraph(rows, cols, std::move(w))), man, out);
        return kOk;
    }
    throw mweb::ValidationError("unknown gen kind: " + kind);
}

// ---------------------------------------------------------------- solve

int run_solve(const std::string& in, const std::string& objective, const std::string& method,
              std::optional<std::uint64_t> seed_flag, unsigned restarts,
              std::optional<double> time_limit, unsigned threads, std::size_t cap,
              const std::string& out) {
    Manifest man;
    man.command = "solve";
    man.parameters = {{"in", in}, {"objective", objective}, {"method", method},
                      {"restarts", restarts}, {"threads", threads}, {"cap", cap}};

    mweb::SolverConfig cfg;
    cfg.objective = parse_objective(objective);
    cfg.method = parse_method(method);
    cfg.restarts = restarts;
    cfg.time_limit = time_limit;
    cfg.threads = threads;
    cfg.enumeration_cap = cap;
    if (cfg.method == mweb::Method::LocalSearch) cfg.seed = resolve_seed(seed_flag);
    man.seed = cfg.seed;

    mweb::WeightedBipartiteGraph g = mweb::graph_from_json(mweb::parse_json_file(in));
    mweb::OptResult r = mweb::solve(g, cfg);
    emit_json(mweb::opt_result_to_json(r), man, out);
    // local search is a heuristic, not a best-effort timeout
    if (cfg.method == mweb::Method::BranchAndBound && !r.optimal) return kBestEffort;
    return kOk;
}

// ---------------------------------------------------------------- reduce

int run_reduce_clique(const std::string& in, const std::string& out) {
    Manifest man;
    man.command = "reduce clique-to-mweb";
    man.parameters = {{"in", in}};
    mweb::SimpleGraph g = mweb::simple_graph_from_json(mweb::parse_json_file(in));
    emit_json(mweb::graph_to_json(mweb::clique_to_mweb(g)), man, out);
    return kOk;
}

int run_reduce_product(const std::string& in, double gamma, double alpha, double beta,
                       std::size_t copies, std::optional<std::uint64_t> seed_flag,
                       const std::string& out) {
    Manifest man;
    man.command = "reduce product";
    man.seed = resolve_seed(seed_flag);
    man.parameters = {{"in", in}, {"gamma", gamma}, {"alpha", alpha}, {"beta", beta},
                      {"copies", copies}};
    mweb::WeightedBipartiteGraph g = mweb::graph_from_json(mweb::parse_json_file(in));
    mweb::ProductParams p;
    p.gamma = gamma;
    p.alpha = alpha;
    p.beta = beta;
    p.n_copies = copies;
    p.seed = man.seed;
    emit_json(mweb::graph_to_json(mweb::gamma_product(g, p)), man, out);
    return kOk;
}

int run_reduce_problem_p(const std::string& in, std::optional<std::size_t> copies,
                         const std::string& out) {
    Manifest man;
    man.command = "reduce problem-p";
    man.parameters = {{"in", in}};
    if (copies) man.parameters["copies"] = *copies;
    mweb::WeightedBipartiteGraph g = mweb::graph_from_json(mweb::parse_json_file(in));
    if (!mweb::has_pm_one_weights(g))
        std::cerr << "warning: input weights are not all in {-1,1}\n";
    emit_json(mweb::graph_to_json(mweb::mweb_to_problem_p(g, copies)), man, out);
    return kOk;
}

// ---------------------------------------------------------------- samba

int run_samba_score(const std::string& in, const std::string& biclique_path,
                    const std::string& model, const std::string& params_path,
                    const std::string& out) {
    Manifest man;
    man.command = "samba score";
    man.parameters = {{"in", in}, {"biclique", biclique_path}, {"model", model}};

    mweb::BinaryMatrix m = mweb::binary_matrix_from_tsv(mweb::read_file(in));
    mweb::Biclique b = mweb::biclique_from_json(mweb::parse_json_file(biclique_path));

    json payload;
    if (model == "simple") {
        auto [g, params] = mweb::simple_weights(m);
        if (params.density_warning)
            std::cerr << "warning: density p=" << params.p << " >= 1/2; model assumes p < 1/2\n";
        payload = {{"score", mweb::significance(g, b)},
                   {"p", params.p},
                   {"w_edge", params.w_edge},
                   {"w_nonedge", params.w_nonedge}};
    } else if (model == "refined") {
        if (params_path.empty()) throw mweb::ValidationError("refined model requires --params");
        auto r = mweb::refined_params_from_json(mweb::parse_json_file(params_path));
        auto g = mweb::refined_weights(m, r);
        payload = {{"score", mweb::log_likelihood_ratio(g, b)}};
    } else {
        throw mweb::ValidationError("unknown model: " + model);
    }
    emit_json(payload, man, out);
    return kOk;
}

int run_samba_find(const std::string& in, const std::string& model, const std::string& params_path,
                   const std::string& method, std::optional<std::uint64_t> seed_flag,
                   unsigned threads, const std::string& out) {
    Manifest man;
    man.command = "samba find";
    man.parameters = {{"in", in}, {"model", model}, {"method", method}, {"threads", threads}};

    mweb::BinaryMatrix m = mweb::binary_matrix_from_tsv(mweb::read_file(in));
    mweb::SolverConfig cfg;
    cfg.method = parse_method(method);
    cfg.threads = threads;
    if (cfg.method == mweb::Method::LocalSearch) cfg.seed = resolve_seed(seed_flag);
    man.seed = cfg.seed;

    mweb::SambaRefinedParams refined;
    const mweb::SambaRefinedParams* rp = nullptr;
    mweb::SambaModel mdl = mweb::SambaModel::Simple;
    if (model == "refined") {
        if (params_path.empty()) throw mweb::ValidationError("refined model requires --params");
        refined = mweb::refined_params_from_json(mweb::parse_json_file(params_path));
        rp = &refined;
        mdl = mweb::SambaModel::Refined;
    } else if (model != "simple") {
        throw mweb::ValidationError("unknown model: " + model);
    }

    auto [witness, score] = mweb::find_bicluster(m, mdl, cfg, rp);
    json payload = mweb::biclique_to_json(witness);
    payload["score"] = score;
    emit_json(payload, man, out);
    return kOk;
}

// ---------------------------------------------------------------- mdlh

int run_mdlh_solve(const std::string& in, const std::string& out) {
    Manifest man;
    man.command = "mdlh solve";
    man.parameters = {{"in", in}};
    mweb::BinaryMatrix m = mweb::binary_matrix_from_tsv(mweb::read_file(in));
    emit_json(mweb::summary_to_json(mweb::solve_mdlh(m)), man, out);
    return kOk;
}

int run_mdlh_verify(std::size_t max_dim, std::size_t trials, std::optional<std::uint64_t> seed_flag,
                    const std::string& out) {
    Manifest man;
    man.command = "mdlh verify";
    man.seed = resolve_seed(seed_flag);
    man.parameters = {{"max_dim", max_dim}, {"trials", trials}};

    std::mt19937_64 rng(man.seed);
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::bernoulli_distribution coin(0.3);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t r = dim(rng), c = dim(rng);
        std::vector<std::uint8_t> data(r * c);
        for (auto& v : data) v = coin(rng);
        mweb::BinaryMatrix m(r, c, std::move(data));
        mweb::Summary got = mweb::solve_mdlh(m);
        mweb::Summary want = mweb::brute_force_mdlh(m);
        if (got.length() != want.length() || !mweb::validate_summary(m, got)) ++failures;
    }
    json payload = {{"relation", "solve_mdlh length == brute-force length and output validates"},
                    {"trials", trials},
                    {"failures", failures},
                    {"pass", failures == 0}};
    emit_json(payload, man, out);
    return failures == 0 ? kOk : kValidation;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& kind, const std::string& graph_path, double gamma, double alpha,
               double beta, std::size_t copies, std::size_t trials,
               std::optional<std::uint64_t> seed_flag, const std::string& out) {
    Manifest man;
    man.command = "verify";
    man.parameters = {{"kind", kind}, {"graph", graph_path}, {"trials", trials}};

    mweb::VerificationReport rep;
    if (kind == "clique") {
        rep = mweb::verify_clique_reduction(
            mweb::simple_graph_from_json(mweb::parse_json_file(graph_path)));
    } else if (kind == "product") {
        man.seed = resolve_seed(seed_flag);
        mweb::WeightedBipartiteGraph g = mweb::graph_from_json(mweb::parse_json_file(graph_path));
        mweb::ProductParams p;
        p.gamma = gamma;
        p.alpha = alpha;
        p.beta = beta;
        p.n_copies = copies;
        p.seed = man.seed;
        rep = mweb::verify_product(g, p, trials);
    } else if (kind == "problem-p") {
        mweb::WeightedBipartiteGraph g = mweb::graph_from_json(mweb::parse_json_file(graph_path));
        rep = mweb::verify_problem_p(g, copies);
    } else {
        throw mweb::ValidationError("unknown verify kind: " + kind);
    }
    emit_json(mweb::report_to_json(rep), man, out);
    return rep.pass ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted bipartite biclique toolkit"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;
    std::string out, in, kind, objective = "edge-weight", method = "exact-enumeration";
    std::string model = "simple", params_path, biclique_path, graph_path;
    std::size_t rows = 4, cols = 4, block_rows = 2, block_cols = 2, copies = 2, trials = 1000;
    std::size_t max_dim = 6, cap = 26;
    std::optional<std::size_t> opt_copies;
    double density = 0.5, gamma = 0.0, alpha = -1.0, beta = 1.0;
    std::string weights_csv = "-1,1";
    unsigned restarts = 8, threads = 1;
    std::optional<double> time_limit;

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("--kind", kind)->required();
    gen->add_option("--rows", rows);
    gen->add_option("--cols", cols);
    gen->add_option("--block-rows", block_rows);
    gen->add_option("--block-cols", block_cols);
    gen->add_option("--weights", weights_csv);
    gen->add_option("--density", density);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out);

    auto* solve_cmd = app.add_subcommand("solve", "maximize an objective over bicliques");
    solve_cmd->add_option("--in", in)->required();
    solve_cmd->add_option("--objective", objective);
    solve_cmd->add_option("--method", method);
    solve_cmd->add_option("--seed", seed);
    solve_cmd->add_option("--restarts", restarts);
    solve_cmd->add_option("--time-limit", time_limit);
    solve_cmd->add_option("--threads", threads);
    solve_cmd->add_option("--cap", cap);
    solve_cmd->add_option("--out", out);

    auto* reduce_cmd = app.add_subcommand("reduce", "constructive transformations");
    auto* red_clique = reduce_cmd->add_subcommand("clique-to-mweb");
    red_clique->add_option("--in", in)->required();
    red_clique->add_option("--out", out);
    auto* red_prod = reduce_cmd->add_subcommand("product");
    red_prod->add_option("--in", in)->required();
    red_prod->add_option("--gamma", gamma);
    red_prod->add_option("--alpha", alpha);
    red_prod->add_option("--beta", beta);
    red_prod->add_option("--copies", copies);
    red_prod->add_option("--seed", seed);
    red_prod->add_option("--out", out);
    auto* red_pp = reduce_cmd->add_subcommand("problem-p");
    red_pp->add_option("--in", in)->required();
    red_pp->add_option("--copies", opt_copies);
    red_pp->add_option("--out", out);
    reduce_cmd->require_subcommand(1);

    auto* samba_cmd = app.add_subcommand("samba", "statistical bicluster scoring");
    auto* samba_score = samba_cmd->add_subcommand("score");
    samba_score->add_option("--in", in)->required();
    samba_score->add_option("--biclique", biclique_path)->required();
    samba_score->add_option("--model", model);
    samba_score->add_option("--params", params_path);
    samba_score->add_option("--out", out);
    auto* samba_find = samba_cmd->add_subcommand("find");
    samba_find->add_option("--in", in)->required();
    samba_find->add_option("--model", model);
    samba_find->add_option("--params", params_path);
    samba_find->add_option("--method", method);
    samba_find->add_option("--seed", seed);
    samba_find->add_option("--threads", threads);
    samba_find->add_option("--out", out);
    samba_cmd->require_subcommand(1);

    auto* mdlh_cmd = app.add_subcommand("mdlh", "binary matrix summarization");
    auto* mdlh_solve_cmd = mdlh_cmd->add_subcommand("solve");
    mdlh_solve_cmd->add_option("--in", in)->required();
    mdlh_solve_cmd->add_option("--out", out);
    auto* mdlh_verify_cmd = mdlh_cmd->add_subcommand("verify");
    mdlh_verify_cmd->add_option("--max-dim", max_dim);
    mdlh_verify_cmd->add_option("--trials", trials);
    mdlh_verify_cmd->add_option("--seed", seed);
    mdlh_verify_cmd->add_option("--out", out);
    mdlh_cmd->require_subcommand(1);

    auto* verify_cmd = app.add_subcommand("verify", "executable reduction checks");
    verify_cmd->add_option("--kind", kind)->required();
    verify_cmd->add_option("--graph", graph_path)->required();
    verify_cmd->add_option("--gamma", gamma);
    verify_cmd->add_option("--alpha", alpha);
    verify_cmd->add_option("--beta", beta);
    verify_cmd->add_option("--copies", copies);
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return run_gen(kind, rows, cols, block_rows, block_cols, weights_csv, density, seed, out);
        if (solve_cmd->parsed())
            return run_solve(in, objective, method, seed, restarts, time_limit, threads, cap, out);
        if (red_clique->parsed()) return run_reduce_clique(in, out);
        if (red_prod->parsed())
            return run_reduce_product(in, gamma, alpha, beta, copies, seed, out);
        if (red_pp->parsed()) return run_reduce_problem_p(in, opt_copies, out);
        if (samba_score->parsed()) return run_samba_score(in, biclique_path, model, params_path, out);
        if (samba_find->parsed())
            return run_samba_find(in, model, params_path, method, seed, threads, out);
        if (mdlh_solve_cmd->parsed()) return run_mdlh_solve(in, out);
        if (mdlh_verify_cmd->parsed()) return run_mdlh_verify(max_dim, trials, seed, out);
        if (verify_cmd->parsed())
            return run_verify(kind, graph_path, gamma, alpha, beta, copies, trials, seed, out);
    } catch (const mweb::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kCapacity;
    } catch (const mweb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kValidation;
    } catch (const mweb::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }
    return kOk;
}
