#pragma once

#include "egt/bipartite.hpp"
#include "egt/embedding.hpp"
#include "egt/goodness.hpp"
#include "egt/graph.hpp"
#include "egt/hypergraph.hpp"
#include "egt/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace egt {

enum class EmbedStatus {
    Ok,                 // validated embedding attached
    HypothesisFailure,  // a counted hypothesis quantity missed its budget
    EmbeddingFailure,   // hypotheses fine (or best-effort) but no embedding
    SizeError,          // precondition arithmetic failed before any work
};

const char* embed_status_name(EmbedStatus s);

struct EmbedResult {
    EmbedStatus status = EmbedStatus::EmbeddingFailure;
    bool hypothesis_ok = true;       // counted hypothesis checks passed
    bool hypothesis_sampled = false; // ... but only by sampled estimation
    bool best_effort = false;        // ran past a failed precondition/hypothesis
    int failure_level = -1;          // offending chain level, when applicable
    std::string diagnostic;          // violated inequality or failure detail
    std::optional<Embedding> embedding; // present iff status == Ok, validated
};

/// Membership test for the "nice" h-sets defining the implicit down-closed
/// host hypergraph; receives a sorted set of host vertex ids.
using NicePredicate = std::function<bool(const std::vector<int>&)>;

/// Greedy hypergraph embedding into the down-closed host whose h-edges are
/// the nice h-subsets of `host`.  The returned map sends pattern vertex i
/// to embedding->map[i] in the host universe; every edge image is contained
/// in a nice h-set.  A failed density hypothesis is reported but the
/// embedding is still attempted, flagged best-effort.
/// h_override / d_override replace the pattern-derived edge-size bound and
/// maximum degree when positive (the calling pipelines fix h = d even when
/// the actual edges are smaller).
EmbedResult embed_hypergraph_greedy(const Hypergraph& hyp, const NicePredicate& nice,
                                    const Bitset& host, std::uint64_t seed,
                                    bool randomized_tiebreak = false,
                                    std::uint64_t enum_budget = kDefaultEnumBudget,
                                    long h_override = 0, long d_override = 0);

/// Exact number of labeled embeddings of `hyp` into the same implicit host,
/// by exhaustive branching.  Small hosts only (budget-guarded).
Int count_hypergraph_embeddings(const Hypergraph& hyp, const NicePredicate& nice,
                                const Bitset& host,
                                std::uint64_t enum_budget = kDefaultEnumBudget,
                                long h_override = 0);

/// Dense-host pipeline for bounded-degree bipartite patterns: balanced
/// cut, degree-pattern hypergraph, dependent random choice with a = t = d,
/// hypergraph greedy on the witness set, then one-by-one extension of the
/// smaller part through nice-set common neighborhoods.
EmbedResult embed_bipartite_dense(const BipartiteGraph& h, const Graph& g,
                                  const Rational& epsilon, std::uint64_t seed);

/// Shared greedy core for the degenerate/arrangeable embedders: embeds the
/// bipartite pattern into (a1, a2) inside `host` with f(U_i) in A_i, using
/// per-side goodness ledgers over `target_size`-sets at threshold x and the
/// supplied budget family.  Verifies the per-side bad-set hypothesis first.
EmbedResult embed_bidegenerate_core(const BipartiteGraph& h, const BipartiteGraph& host,
                                    const Bitset& a1, const Bitset& a2, long x,
                                    long target_size, long tracked_set_bound,
                                    const std::vector<Rational>& budgets,
                                    std::uint64_t enum_budget = kDefaultEnumBudget);

/// Same core with an explicit pattern-vertex ordering (each vertex may have
/// at most `target_size` earlier neighbors under it).
EmbedResult embed_bidegenerate_core_ordered(
    const BipartiteGraph& h, const std::vector<int>& order, const BipartiteGraph& host,
    const Bitset& a1, const Bitset& a2, long x, long target_size,
    long tracked_set_bound, const std::vector<Rational>& budgets,
    std::uint64_t enum_budget = kDefaultEnumBudget);

/// Degenerate-pattern pipeline: dependent random choice for A', a random
/// t-subset S with A2 = N(S), A1 = A' minus S, verified bad-set counts on
/// both sides with retries, then the ledger greedy over a degeneracy order.
EmbedResult embed_degenerate(const BipartiteGraph& h, const Graph& g,
                             const Rational& epsilon, const Rational& delta,
                             std::uint64_t seed);

/// Same skeleton driven by a p-arrangeable ordering; tracked back-
/// neighborhood sets are bounded by 2^{p-1} instead of the maximum degree.
EmbedResult embed_arrangeable(const BipartiteGraph& h, const std::vector<int>& ordering,
                              long p, const Graph& g, const Rational& epsilon,
                              std::uint64_t seed);

/// Nested-chain greedy for q-partite patterns: embeds the vertices of part
/// W_k into level k of the chain, in decreasing part order, with per-level
/// goodness ledgers at threshold x over d-sets.
EmbedResult embed_chromatic(const Graph& h, const std::vector<int>& q_partition,
                            const Graph& g, const NestedFamily& nested, long x, long d,
                            std::uint64_t enum_budget = kDefaultEnumBudget);

/// Embeds the 1-subdivision of h into g: balanced partition, min-degree
/// pruning, the auxiliary large-common-neighborhood graph, a nested chain
/// with complement-degree control, then extension through edge vertices.
/// allow_undersized_host runs best-effort below the size precondition.
EmbedResult embed_subdivision(const Graph& h, const Graph& g, const Rational& epsilon,
                              std::uint64_t seed, bool allow_undersized_host = false);

/// Induced-pair greedy: pattern edges into G, pattern non-edges into F,
/// guided by per-level pair-goodness ledgers on the nested chain.
EmbedResult embed_induced(const Graph& h, const Graph& g, const Graph& f,
                          const NestedFamily& nested, long m,
                          std::uint64_t enum_budget = kDefaultEnumBudget);

}  // namespace egt
