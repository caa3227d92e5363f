// Command-line front end: graph generation, dependent-random-choice runs,
// the embedding pipelines, exhaustive oracles, Ramsey drivers, pseudo-
// randomness certificates, embedding verification, and batch experiments.
//
// Exit codes: 0 success, 1 usage error, 2 hypothesis/size/embedding
// failure, 3 budget exhaustion.

#include "CLI11.hpp"

#include "egt/bidense.hpp"
#include "egt/coloring.hpp"
#include "egt/degeneracy.hpp"
#include "egt/drc.hpp"
#include "egt/drivers.hpp"
#include "egt/embedders.hpp"
#include "egt/errors.hpp"
#include "egt/generators.hpp"
#include "egt/io.hpp"
#include "egt/oracles.hpp"
#include "egt/pseudorandom.hpp"
#include "egt/rational.hpp"
#include "egt/result.hpp"
#include "egt/rng.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using namespace egt;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitBudget = 3;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("EGT_BUDGET")) {
        const unsigned long long v = std::strtoull(env, nullptr, 10);
        if (v > 0) return v;
    }
    return kDefaultEnumBudget;
}

// Graph arguments are either file paths or compact family specs:
// k5, c4, p3, e6 (empty), q3 (hypercube), paley13, g<n>x<p>s<seed>.
Graph load_graph_spec(const std::string& spec, std::uint64_t seed) {
    if (std::filesystem::exists(spec)) {
        AnyGraph g = parse_graph_file(spec);
        if (const Graph* gg = std::get_if<Graph>(&g)) return *gg;
        throw precondition_error(spec + ": expected a plain graph, found bipartite");
    }
    auto tail_int = [&](std::size_t off) { return std::stoi(spec.substr(off)); };
    if (spec.size() >= 2 && spec[0] == 'k' && std::isdigit(spec[1]))
        return complete_graph(tail_int(1));
    if (spec.size() >= 2 && spec[0] == 'c' && std::isdigit(spec[1]))
        return cycle_graph(tail_int(1));
    if (spec.size() >= 2 && spec[0] == 'p' && std::isdigit(spec[1]))
        return path_graph(tail_int(1));
    if (spec.size() >= 2 && spec[0] == 'e' && std::isdigit(spec[1]))
        return Graph(tail_int(1));
    if (spec.size() >= 2 && spec[0] == 'q' && std::isdigit(spec[1]))
        return hypercube(tail_int(1));
    if (spec.rfind("paley", 0) == 0) return paley(tail_int(5));
    if (spec[0] == 'g') {
        const auto xpos = spec.find('x');
        const auto spos = spec.find('s');
        if (xpos != std::string::npos) {
            const int n = std::stoi(spec.substr(1, xpos - 1));
            const std::string pstr = spos == std::string::npos
                                         ? spec.substr(xpos + 1)
                                         : spec.substr(xpos + 1, spos - xpos - 1);
            const std::uint64_t s = spos == std::string::npos
                                        ? seed
                                        : std::stoull(spec.substr(spos + 1));
            return random_graph(n, parse_rational(pstr), s);
        }
    }
    throw precondition_error("unrecognized graph spec or missing file: " + spec);
}

// Bipartite specs: a file with a `b` header, kb<n1>x<n2>, or sub:<graph>.
BipartiteGraph load_bipartite_spec(const std::string& spec, std::uint64_t seed) {
    if (std::filesystem::exists(spec)) {
        AnyGraph g = parse_graph_file(spec);
        if (const BipartiteGraph* bg = std::get_if<BipartiteGraph>(&g)) return *bg;
        throw precondition_error(spec + ": expected a bipartite graph file");
    }
    if (spec.rfind("kb", 0) == 0) {
        const auto xpos = spec.find('x');
        if (xpos == std::string::npos)
            throw precondition_error("bipartite spec needs kb<n1>x<n2>: " + spec);
        return complete_bipartite(std::stoi(spec.substr(2, xpos - 2)),
                                  std::stoi(spec.substr(xpos + 1)));
    }
    if (spec.rfind("sub:", 0) == 0)
        return one_subdivision(load_graph_spec(spec.substr(4), seed));
    throw precondition_error("unrecognized bipartite spec or missing file: " + spec);
}

std::string spec_digest(const std::vector<std::string>& specs) {
    std::string all;
    for (const std::string& s : specs) {
        all += s;
        all += '\0';
        if (std::filesystem::exists(s)) {
            std::ifstream in(s, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            all += ss.str();
            all += '\0';
        }
    }
    return digest_bytes(all);
}

const std::string& need(const ExperimentConfig& cfg, const std::string& key) {
    auto it = cfg.params.find(key);
    if (it == cfg.params.end())
        throw precondition_error(cfg.operation + ": missing parameter '" + key + "'");
    return it->second;
}

std::string opt(const ExperimentConfig& cfg, const std::string& key,
                const std::string& fallback) {
    auto it = cfg.params.find(key);
    return it == cfg.params.end() ? fallback : it->second;
}

long need_long(const ExperimentConfig& cfg, const std::string& key) {
    return std::stol(need(cfg, key));
}

json embed_payload(const EmbedResult& r) {
    json p{{"status", embed_status_name(r.status)},
           {"hypothesis_ok", r.hypothesis_ok},
           {"hypothesis_sampled", r.hypothesis_sampled},
           {"best_effort", r.best_effort},
           {"failure_level", r.failure_level},
           {"diagnostic", r.diagnostic}};
    if (r.embedding) p["map"] = r.embedding->map;
    return p;
}

std::string outcome_of(const EmbedResult& r) {
    switch (r.status) {
        case EmbedStatus::Ok: return "ok";
        case EmbedStatus::HypothesisFailure: return "hypothesis-failure";
        case EmbedStatus::EmbeddingFailure: return "embedding-failure";
        case EmbedStatus::SizeError: return "size-error";
    }
    return "error";
}

int exit_class(const std::string& outcome) {
    if (outcome == "ok") return kExitOk;
    if (outcome == "budget-error") return kExitBudget;
    if (outcome == "usage-error") return kExitUsage;
    return kExitHypothesis;
}

EdgeColoring coloring_for(const ExperimentConfig& cfg, std::uint64_t seed) {
    const std::string src = opt(cfg, "coloring", "");
    if (!src.empty()) return parse_coloring_file(src);
    // No file: a seeded random k-coloring of the host (or of K_n).
    const int k = static_cast<int>(std::stol(opt(cfg, "k", "2")));
    const Graph host = load_graph_spec(need(cfg, "host"), seed);
    return random_edge_coloring(host, k, Rng(seed).fork(777).seed());
}

// Core dispatch shared by the single-shot subcommands and the batch runner.
ResultRecord run_operation(const ExperimentConfig& cfg, std::uint64_t seed) {
    ResultRecord rec;
    rec.operation = cfg.operation;
    rec.params = cfg.params;
    rec.seed = seed;
    const std::uint64_t budget = cfg.budget ? cfg.budget : default_budget();
    SearchBudget sb{budget};

    std::vector<std::string> digest_src = cfg.inputs;
    for (const char* key : {"pattern", "host", "h1", "h2", "coloring", "f"})
        if (cfg.params.count(key)) digest_src.push_back(cfg.params.at(key));
    rec.inputs_digest = spec_digest(digest_src);

    const auto t0 = std::chrono::steady_clock::now();
    try {
        const std::string& op = cfg.operation;
        if (op == "drc-sample" || op == "drc-witness") {
            BipartiteGraph host = load_bipartite_spec(need(cfg, "host"), seed);
            DrcParams p;
            p.a = std::stol(opt(cfg, "a", "1"));
            p.d = need_long(cfg, "d");
            p.t = need_long(cfg, "t");
            p.x = need_long(cfg, "x");
            p.epsilon = parse_rational(need(cfg, "epsilon"));
            DrcOutcome o = op == "drc-sample"
                               ? drc_sample(host, p, seed, budget)
                               : drc_find_witness(host, p, 64, seed, budget);
            rec.outcome = "ok";
            rec.payload = json{{"T", o.T},
                               {"a_size", o.A.count()},
                               {"bad_count", o.bad_count.str()},
                               {"size_bound", rational_str(o.size_bound)},
                               {"bad_bound", rational_str(o.bad_bound)},
                               {"size_ok", o.size_ok},
                               {"bad_ok", o.bad_ok}};
        } else if (op == "drc-expectation") {
            BipartiteGraph host = load_bipartite_spec(need(cfg, "host"), seed);
            Rational e = drc_expectation_exact(host, need_long(cfg, "t"));
            rec.outcome = "ok";
            rec.payload = json{{"expectation", rational_str(e)}};
        } else if (op == "embed-bipartite-dense") {
            BipartiteGraph pat = load_bipartite_spec(need(cfg, "pattern"), seed);
            Graph host = load_graph_spec(need(cfg, "host"), seed);
            EmbedResult r = embed_bipartite_dense(
                pat, host, parse_rational(need(cfg, "epsilon")), seed);
            rec.outcome = outcome_of(r);
            rec.payload = embed_payload(r);
        } else if (op == "embed-degenerate") {
            BipartiteGraph pat = load_bipartite_spec(need(cfg, "pattern"), seed);
            Graph host = load_graph_spec(need(cfg, "host"), seed);
            EmbedResult r = embed_degenerate(pat, host,
                                             parse_rational(need(cfg, "epsilon")),
                                             parse_rational(opt(cfg, "delta", "1")), seed);
            rec.outcome = outcome_of(r);
            rec.payload = embed_payload(r);
        } else if (op == "embed-arrangeable") {
            BipartiteGraph pat = load_bipartite_spec(need(cfg, "pattern"), seed);
            Graph host = load_graph_spec(need(cfg, "host"), seed);
            const long p = need_long(cfg, "p");
            std::vector<int> order(static_cast<std::size_t>(pat.total()));
            for (int v = 0; v < pat.total(); ++v) order[static_cast<std::size_t>(v)] = v;
            EmbedResult r = embed_arrangeable(pat, order, p, host,
                                              parse_rational(need(cfg, "epsilon")), seed);
            rec.outcome = outcome_of(r);
            rec.payload = embed_payload(r);
        } else if (op == "embed-subdivision") {
            Graph pat = load_graph_spec(need(cfg, "pattern"), seed);
            Graph host = load_graph_spec(need(cfg, "host"), seed);
            EmbedResult r = embed_subdivision(pat, host,
                                              parse_rational(need(cfg, "epsilon")), seed,
                                              opt(cfg, "allow-undersized", "0") == "1");
            rec.outcome = outcome_of(r);
            rec.payload = embed_payload(r);
        } else if (op == "oracle-count" || op == "oracle-contains" ||
                   op == "oracle-contains-induced") {
            Graph pat = load_graph_spec(need(cfg, "pattern"), seed);
            Graph host = load_graph_spec(need(cfg, "host"), seed);
            rec.outcome = "ok";
            if (op == "oracle-count") {
                const CopyMode mode = opt(cfg, "mode", "subgraph") == "induced"
                                          ? CopyMode::Induced
                                          : CopyMode::Subgraph;
                rec.payload = json{{"count", count_labeled_copies(pat, host, mode, sb)}};
            } else if (op == "oracle-contains") {
                rec.payload = json{{"contains", contains_subgraph(pat, host, sb)}};
            } else {
                rec.payload = json{{"contains", contains_induced(pat, host, sb)}};
            }
        } else if (op == "oracle-clique" || op == "oracle-independent") {
            Graph host = load_graph_spec(need(cfg, "host"), seed);
            Bitset s = op == "oracle-clique" ? max_clique(host, sb)
                                             : max_independent_set(host, sb);
            rec.outcome = "ok";
            rec.payload = json{{"size", s.count()}, {"vertices", s.to_vector()}};
        } else if (op == "oracle-universal") {
            Graph host = load_graph_spec(need(cfg, "host"), seed);
            rec.outcome = "ok";
            rec.payload = json{{"universal",
                                universality_check(host, static_cast<int>(need_long(cfg, "n")), sb)}};
        } else if (op == "oracle-ramsey") {
            Graph h1 = load_graph_spec(need(cfg, "h1"), seed);
            Graph h2 = load_graph_spec(need(cfg, "h2"), seed);
            auto r = ramsey_exact(h1, h2, static_cast<int>(need_long(cfg, "nmax")), sb);
            rec.outcome = "ok";
            rec.payload = json{{"ramsey", r ? json(*r) : json(nullptr)}};
        } else if (op == "oracle-min-mono") {
            Graph h = load_graph_spec(need(cfg, "pattern"), seed);
            rec.outcome = "ok";
            rec.payload = json{{"min_mono_copies",
                                min_mono_copies(h, static_cast<int>(need_long(cfg, "n")), sb)}};
        } else if (op == "ramsey-mono2") {
            Graph pat = load_graph_spec(need(cfg, "pattern"), seed);
            EdgeColoring col = coloring_for(cfg, seed);
            ColoredEmbedResult r = mono_embed_2color(
                pat, col, seed, opt(cfg, "allow-undersized", "0") == "1");
            rec.outcome = outcome_of(r.result);
            rec.payload = embed_payload(r.result);
            rec.payload["color"] = r.color;
            rec.payload["chain_sizes"] = r.chain_sizes;
        } else if (op == "ramsey-multicolor") {
            EdgeColoring col = coloring_for(cfg, seed);
            std::vector<BipartiteGraph> pats;
            std::istringstream specs(need(cfg, "patterns"));
            for (std::string s; std::getline(specs, s, ',');)
                pats.push_back(load_bipartite_spec(s, seed));
            ColoredEmbedResult r = multicolor_bipartite_driver(pats, col, seed);
            rec.outcome = outcome_of(r.result);
            rec.payload = embed_payload(r.result);
            rec.payload["color"] = r.color;
        } else if (op == "ramsey-erdos-hajnal") {
            Graph host = load_graph_spec(need(cfg, "host"), seed);
            EhOutcome r = erdos_hajnal_driver(host, need_long(cfg, "t"), sb);
            rec.outcome = r.kind == EhOutcome::Kind::Failure ? "embedding-failure" : "ok";
            rec.payload = json{
                {"kind", r.kind == EhOutcome::Kind::Biclique        ? "biclique"
                         : r.kind == EhOutcome::Kind::IndependentSet ? "independent-set"
                                                                     : "failure"},
                {"side1", r.side1.to_vector()},
                {"side2", r.side2.to_vector()},
                {"diagnostic", r.diagnostic}};
        } else if (op == "ramsey-bidense") {
            Graph host = load_graph_spec(need(cfg, "host"), seed);
            BidenseResult r = bidense_search(host, need_long(cfg, "z"),
                                             parse_rational(need(cfg, "epsilon")), sb);
            rec.outcome = r.found ? "ok" : "embedding-failure";
            rec.payload = json{{"found", r.found},
                               {"w1", r.w1.to_vector()},
                               {"w2", r.w2.to_vector()},
                               {"candidates_tried", r.candidates_tried}};
        } else if (op == "ramsey-induced") {
            Graph pat = load_graph_spec(need(cfg, "pattern"), seed);
            Graph gamma = load_graph_spec(need(cfg, "host"), seed);
            EdgeColoring col = coloring_for(cfg, seed);
            PseudoRandomCertificate cert;
            bool regular = gamma.n() > 0;
            for (int v = 1; v < gamma.n(); ++v)
                if (gamma.degree(v) != gamma.degree(0)) regular = false;
            cert = regular ? certify_pseudorandom_spectral(gamma)
                           : certify_pseudorandom_sampled(gamma, 200, seed);
            ColoredEmbedResult r = induced_ramsey_driver(
                pat, gamma, col, cert, need_long(cfg, "m"),
                parse_rational(need(cfg, "epsilon")), seed);
            rec.outcome = outcome_of(r.result);
            rec.payload = embed_payload(r.result);
            rec.payload["color"] = r.color;
            rec.payload["chain_sizes"] = r.chain_sizes;
        } else if (op == "certify-spectral" || op == "certify-sampled") {
            Graph host = load_graph_spec(need(cfg, "host"), seed);
            PseudoRandomCertificate c =
                op == "certify-spectral"
                    ? certify_pseudorandom_spectral(host)
                    : certify_pseudorandom_sampled(
                          host, static_cast<int>(std::stol(opt(cfg, "pairs", "1000"))), seed);
            rec.outcome = "ok";
            rec.payload = json{{"p", rational_str(c.p)},
                               {"lambda", c.lambda},
                               {"method", c.method == CertMethod::Spectral ? "spectral"
                                                                           : "sampled"},
                               {"evidence", c.evidence}};
        } else if (op == "verify") {
            Graph pat = load_graph_spec(need(cfg, "pattern"), seed);
            Graph host = load_graph_spec(need(cfg, "host"), seed);
            Embedding emb;
            std::istringstream ms(need(cfg, "map"));
            for (std::string tok; std::getline(ms, tok, ',');)
                emb.map.push_back(std::stoi(tok));
            const std::string mode = opt(cfg, "mode", "subgraph");
            bool ok;
            if (mode == "induced-pair") {
                emb.mode = EmbedMode::InducedPair;
                Graph f = load_graph_spec(need(cfg, "f"), seed);
                ok = validate_embedding_induced(pat, host, f, emb);
            } else {
                emb.mode = EmbedMode::Subgraph;
                ok = validate_embedding(pat, host, emb);
            }
            rec.outcome = ok ? "ok" : "embedding-failure";
            rec.payload = json{{"valid", ok}};
        } else {
            throw precondition_error("unknown operation: " + cfg.operation);
        }
    } catch (const budget_error& e) {
        rec.outcome = "budget-error";
        rec.payload = json{{"error", e.what()}};
    } catch (const witness_not_found_error& e) {
        rec.outcome = "hypothesis-failure";
        rec.payload = json{{"error", e.what()}};
    } catch (const precondition_error& e) {
        rec.outcome = "usage-error";
        rec.payload = json{{"error", e.what()}};
    } catch (const io_error& e) {
        rec.outcome = "usage-error";
        rec.payload = json{{"error", e.what()}};
    }
    rec.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

int run_trials(ExperimentConfig cfg) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            std::cerr << "cannot open " << cfg.out_path << " for writing\n";
            return kExitUsage;
        }
        out = &file;
    }
    int worst = kExitOk;
    Rng base(cfg.seed);
    for (long trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t s = cfg.trials == 1 ? cfg.seed
                                                : base.fork(static_cast<std::uint64_t>(trial)).seed();
        ResultRecord rec = run_operation(cfg, s);
        *out << record_to_json_line(rec) << '\n';
        const int code = exit_class(rec.outcome);
        if (rec.outcome != "ok")
            std::cerr << cfg.operation << " trial " << trial << ": " << rec.outcome
                      << " " << rec.payload.value("diagnostic",
                                                  rec.payload.value("error", ""))
                      << '\n';
        worst = std::max(worst, code);
    }
    return worst;
}

int run_gen(const std::string& family, const ExperimentConfig& cfg) {
    AnyGraph g;
    const std::uint64_t seed = cfg.seed;
    if (family == "hypercube") g = hypercube(static_cast<int>(need_long(cfg, "d")));
    else if (family == "random")
        g = random_graph(static_cast<int>(need_long(cfg, "n")),
                         parse_rational(need(cfg, "p")), seed);
    else if (family == "paley") g = paley(static_cast<int>(need_long(cfg, "q")));
    else if (family == "complete") g = complete_graph(static_cast<int>(need_long(cfg, "n")));
    else if (family == "cycle") g = cycle_graph(static_cast<int>(need_long(cfg, "n")));
    else if (family == "path") g = path_graph(static_cast<int>(need_long(cfg, "n")));
    else if (family == "complete-bipartite")
        g = complete_bipartite(static_cast<int>(need_long(cfg, "n1")),
                               static_cast<int>(need_long(cfg, "n2")));
    else if (family == "random-bipartite")
        g = random_bipartite(static_cast<int>(need_long(cfg, "n1")),
                             static_cast<int>(need_long(cfg, "n2")),
                             parse_rational(need(cfg, "p")), seed);
    else if (family == "d-degenerate")
        g = random_d_degenerate(static_cast<int>(need_long(cfg, "n")),
                                static_cast<int>(need_long(cfg, "d")),
                                static_cast<int>(std::stol(opt(cfg, "cap", "1000000"))), seed);
    else if (family == "subdivision")
        g = one_subdivision(load_graph_spec(need(cfg, "of"), seed));
    else {
        std::cerr << "unknown family: " << family << '\n';
        return kExitUsage;
    }
    if (cfg.out_path.empty())
        std::visit([](const auto& gg) { write_graph(gg, std::cout); }, g);
    else
        write_graph_file(g, cfg.out_path);
    return kExitOk;
}

// One CSV row per trial, ordered by trial index; per-trial errors become
// rows, never aborts.
int run_batch(const std::string& config_path, const std::string& out_path) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "cannot open " << config_path << '\n';
        return kExitUsage;
    }
    std::vector<ExperimentConfig> configs;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        try {
            configs.push_back(config_from_json(json::parse(line)));
        } catch (const std::exception& e) {
            ExperimentConfig broken;
            broken.operation = "invalid-config";
            broken.params["error"] = e.what();
            configs.push_back(broken);
        }
    }

    struct Row {
        long index;
        std::string operation, outcome, detail;
        std::uint64_t seed;
        double wall;
        bool success;
    };
    std::vector<std::future<Row>> futures;
    long index = 0;
    for (const ExperimentConfig& cfg : configs) {
        for (long trial = 0; trial < std::max<long>(cfg.trials, 1); ++trial) {
            const long my_index = index++;
            const std::uint64_t s =
                Rng(cfg.seed).fork(static_cast<std::uint64_t>(trial)).seed();
            futures.push_back(std::async(std::launch::deferred, [cfg, my_index, s]() {
                Row row{my_index, cfg.operation, "", "", s, 0.0, false};
                if (cfg.operation == "invalid-config") {
                    row.outcome = "usage-error";
                    row.detail = cfg.params.count("error") ? cfg.params.at("error") : "";
                    return row;
                }
                try {
                    ResultRecord rec = run_operation(cfg, s);
                    row.outcome = rec.outcome;
                    row.success = rec.outcome == "ok";
                    row.wall = rec.wall_time_s;
                    row.detail = rec.payload.value(
                        "diagnostic", rec.payload.value("error", ""));
                } catch (const std::exception& e) {
                    row.outcome = "error";
                    row.detail = e.what();
                }
                return row;
            }));
        }
    }

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << '\n';
            return kExitUsage;
        }
        out = &file;
    }
    *out << "trial,operation,seed,outcome,success,wall_time_s,detail\n";
    for (auto& f : futures) {
        Row row = f.get();
        std::string detail = row.detail;
        for (char& ch : detail)
            if (ch == ',' || ch == '\n') ch = ';';
        *out << row.index << ',' << row.operation << ',' << row.seed << ','
             << row.outcome << ',' << (row.success ? "true" : "false") << ','
             << row.wall << ',' << detail << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal graph embedding toolkit"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string family, alg, op, driver, method, config_path;
    std::vector<std::string> kv;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--trials", cfg.trials, "number of trials");
        sub->add_option("--budget", cfg.budget, "enumeration/search budget");
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->add_option("--param,-P", kv, "extra key=value parameter")->take_all();
    };
    auto add_named = [&](CLI::App* sub, const char* name, const char* help) {
        sub->add_option_function<std::string>(
            name, [&cfg, key = std::string(help)](const std::string& v) { cfg.params[key] = v; },
            help);
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--family", family, "graph family")->required();
    for (const char* k : {"d", "n", "p", "q", "n1", "n2", "cap", "of"})
        add_named(gen, (std::string("--") + k).c_str(), k);
    add_common(gen);

    CLI::App* drc = app.add_subcommand("drc", "dependent random choice runs");
    drc->add_flag_callback("--witness", [&] { cfg.operation = "drc-witness"; },
                           "search for a verified witness");
    drc->add_flag_callback("--expectation", [&] { cfg.operation = "drc-expectation"; },
                           "exact expected |N(T)|");
    for (const char* k : {"host", "a", "d", "t", "x", "epsilon"})
        add_named(drc, (std::string("--") + k).c_str(), k);
    add_common(drc);

    CLI::App* embed = app.add_subcommand("embed", "embedding pipelines");
    embed->add_option("--alg", alg, "bipartite-dense|degenerate|arrangeable|subdivision")
        ->required();
    for (const char* k :
         {"pattern", "host", "epsilon", "delta", "p", "allow-undersized"})
        add_named(embed, (std::string("--") + k).c_str(), k);
    add_common(embed);

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive ground-truth searches");
    oracle->add_option("--op", op,
                       "count|contains|contains-induced|clique|independent|universal|"
                       "ramsey|min-mono")
        ->required();
    for (const char* k : {"pattern", "host", "h1", "h2", "nmax", "n", "mode"})
        add_named(oracle, (std::string("--") + k).c_str(), k);
    add_common(oracle);

    CLI::App* ramsey = app.add_subcommand("ramsey", "coloring drivers");
    ramsey->add_option("--driver", driver,
                       "mono2|multicolor|erdos-hajnal|bidense|induced")
        ->required();
    for (const char* k : {"pattern", "patterns", "host", "coloring", "k", "t", "z", "m",
                          "epsilon", "allow-undersized"})
        add_named(ramsey, (std::string("--") + k).c_str(), k);
    add_common(ramsey);

    CLI::App* certify = app.add_subcommand("certify", "pseudo-randomness certificates");
    certify->add_option("--method", method, "spectral|sampled")->default_val("spectral");
    for (const char* k : {"host", "pairs"})
        add_named(certify, (std::string("--") + k).c_str(), k);
    add_common(certify);

    CLI::App* verify = app.add_subcommand("verify", "validate an embedding map");
    for (const char* k : {"pattern", "host", "f", "map", "mode"})
        add_named(verify, (std::string("--") + k).c_str(), k);
    add_common(verify);

    CLI::App* batch = app.add_subcommand("batch", "run a config list into CSV");
    batch->add_option("--config", config_path, "JSON-lines config file")->required();
    add_common(batch);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (const std::string& pair : kv) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos) {
            std::cerr << "bad --param (need key=value): " << pair << '\n';
            return kExitUsage;
        }
        cfg.params[pair.substr(0, eq)] = pair.substr(eq + 1);
    }

    try {
        if (gen->parsed()) return run_gen(family, cfg);
        if (batch->parsed()) return run_batch(config_path, cfg.out_path);
        if (drc->parsed()) {
            if (cfg.operation.empty()) cfg.operation = "drc-sample";
        } else if (embed->parsed()) {
            cfg.operation = "embed-" + alg;
        } else if (oracle->parsed()) {
            cfg.operation = "oracle-" + op;
        } else if (ramsey->parsed()) {
            cfg.operation = "ramsey-" + driver;
        } else if (certify->parsed()) {
            cfg.operation = "certify-" + method;
        } else if (verify->parsed()) {
            cfg.operation = "verify";
        }
        return run_trials(std::move(cfg));
    } catch (const precondition_error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitHypothesis;
    }
}
