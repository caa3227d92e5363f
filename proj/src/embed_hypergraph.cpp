#include "egt/embedders.hpp"

#include "egt/errors.hpp"
#include "egt/rng.hpp"

#include <algorithm>
#include <map>

namespace egt {

const char* embed_status_name(EmbedStatus s) {
    switch (s) {
        case EmbedStatus::Ok: return "ok";
        case EmbedStatus::HypothesisFailure: return "hypothesis-failure";
        case EmbedStatus::EmbeddingFailure: return "embedding-failure";
        case EmbedStatus::SizeError: return "size-error";
    }
    return "unknown";
}

namespace {

// Bad h-set = not nice; the ledger then says a smaller set is good exactly
// when it lies in enough nice h-supersets.
GoodnessLedger make_f_ledger(const NicePredicate& nice, const Bitset& host, long h,
                             long d, std::uint64_t enum_budget) {
    return GoodnessLedger(host, h, hypergraph_budgets(static_cast<long>(host.count()), h, d),
                          [nice](const std::vector<int>& s) { return !nice(s); },
                          enum_budget);
}

// Images under f of e ∩ {v_0..v_upto}, for each pattern edge e through
// pattern vertex v, deduplicated and sorted.
std::vector<std::vector<int>> tracked_sets(const Hypergraph& hyp, const std::vector<int>& f,
                                           int v, int upto) {
    std::vector<std::vector<int>> out;
    for (int ei : hyp.incident(v)) {
        std::vector<int> img;
        for (int u : hyp.edges()[static_cast<std::size_t>(ei)])
            if (u <= upto && u != v) img.push_back(f[u]);
        std::sort(img.begin(), img.end());
        out.push_back(std::move(img));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

EmbedResult embed_hypergraph_greedy(const Hypergraph& hyp, const NicePredicate& nice,
                                    const Bitset& host, std::uint64_t seed,
                                    bool randomized_tiebreak, std::uint64_t enum_budget,
                                    long h_override, long d_override) {
    const long n = hyp.n();
    const long h = h_override > 0 ? h_override : std::max(hyp.edge_size_bound(), 1);
    const long d = d_override > 0 ? d_override : std::max(hyp.max_degree(), 1);
    if (h < hyp.edge_size_bound())
        throw precondition_error("hypergraph greedy: h below the pattern's edge size");
    const long big_n = static_cast<long>(host.count());

    EmbedResult res;
    if (big_n < 4 * n) {
        res.status = EmbedStatus::SizeError;
        res.diagnostic = "host too small: |A| < 4n";
        return res;
    }

    GoodnessLedger ledger = make_f_ledger(nice, host, h, d, enum_budget);
    if (!ledger.is_good({})) {
        // Fewer nice h-sets than the density hypothesis requires; attempt
        // the embedding anyway and flag the outcome.
        res.hypothesis_ok = false;
        res.best_effort = true;
        res.diagnostic = "nice h-set count below (1-(4d)^{-h}) C(N,h)";
    }

    std::vector<int> f(static_cast<std::size_t>(n), -1);
    Bitset occupied(host.universe());
    Rng rng(seed);

    for (int v = 0; v < n; ++v) {
        Bitset cand = host;
        cand.and_not(occupied);
        Bitset excluded(host.universe());
        bool tracked_ok = true;
        for (const auto& s : tracked_sets(hyp, f, v, v)) {
            // s = f(e ∩ L_v \ {v}); its extensions by the new vertex must
            // stay good.
            if (static_cast<long>(s.size()) >= h) continue;
            if (!ledger.is_good(s)) {
                tracked_ok = false;
                break;
            }
            excluded |= ledger.bad_vertices(s);
        }
        if (!tracked_ok) {
            res.status = res.hypothesis_ok ? EmbedStatus::EmbeddingFailure
                                           : EmbedStatus::HypothesisFailure;
            res.diagnostic = "tracked set lost goodness at vertex " + std::to_string(v);
            return res;
        }
        if (res.hypothesis_ok &&
            4 * Int(excluded.count_and(host)) > Int(big_n))
            throw invalid_embedding_error(
                "hypergraph greedy: exclusion budget N/4 exceeded");
        cand.and_not(excluded);
        if (cand.none()) {
            res.status = res.hypothesis_ok ? EmbedStatus::EmbeddingFailure
                                           : EmbedStatus::HypothesisFailure;
            res.diagnostic = "no admissible vertex at step " + std::to_string(v);
            return res;
        }
        int pick = cand.first();
        if (randomized_tiebreak) pick = rng.pick(cand);
        f[static_cast<std::size_t>(v)] = pick;
        occupied.set(static_cast<std::size_t>(pick));
    }

    // Semantic validation: every edge image must be good, hence contained
    // in at least one nice h-set (the implicit F-membership).
    for (const auto& e : hyp.edges()) {
        std::vector<int> img;
        for (int u : e) img.push_back(f[static_cast<std::size_t>(u)]);
        std::sort(img.begin(), img.end());
        if (!ledger.is_good(img))
            throw invalid_embedding_error("hypergraph greedy: edge image not good");
    }
    res.status = EmbedStatus::Ok;
    res.embedding = Embedding{f, EmbedMode::Subgraph};
    return res;
}

namespace {

// True iff the set is contained in at least one nice h-set (down-closed
// membership), with memoization.
struct FMembership {
    const NicePredicate& nice;
    const Bitset& host;
    long h;
    std::map<std::vector<int>, bool> memo;

    bool contains(const std::vector<int>& s) {
        if (static_cast<long>(s.size()) > h) return false;
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        bool ok = false;
        if (static_cast<long>(s.size()) == h) {
            ok = nice(s);
        } else {
            Bitset rest = host;
            for (int v : s) rest.reset(static_cast<std::size_t>(v));
            const std::vector<int> members = rest.to_vector();
            const std::size_t r = static_cast<std::size_t>(h) - s.size();
            std::vector<std::size_t> comb(r);
            for (std::size_t i = 0; i < r; ++i) comb[i] = i;
            if (members.size() >= r) {
                while (true) {
                    std::vector<int> full = s;
                    for (std::size_t i : comb) full.push_back(members[i]);
                    std::sort(full.begin(), full.end());
                    if (nice(full)) {
                        ok = true;
                        break;
                    }
                    // advance lexicographically
                    std::size_t i = r;
                    while (i > 0 && comb[i - 1] == members.size() - (r - i) - 1) --i;
                    if (i == 0) break;
                    ++comb[i - 1];
                    for (std::size_t j = i; j < r; ++j) comb[j] = comb[j - 1] + 1;
                }
            }
        }
        memo.emplace(s, ok);
        return ok;
    }
};

Int count_rec(const Hypergraph& hyp, FMembership& fm, const Bitset& host, int v,
              std::vector<int>& f, Bitset& occupied, std::uint64_t& nodes,
              std::uint64_t enum_budget) {
    if (++nodes > enum_budget)
        throw budget_error("count_hypergraph_embeddings: branching budget exceeded");
    if (v == hyp.n()) return 1;
    Int total = 0;
    Bitset cand = host;
    cand.and_not(occupied);
    for (int w = cand.first(); w >= 0; w = cand.next(static_cast<std::size_t>(w))) {
        f[static_cast<std::size_t>(v)] = w;
        bool ok = true;
        for (int ei : hyp.incident(v)) {
            std::vector<int> img;
            for (int u : hyp.edges()[static_cast<std::size_t>(ei)])
                if (u <= v) img.push_back(f[static_cast<std::size_t>(u)]);
            std::sort(img.begin(), img.end());
            if (!fm.contains(img)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            occupied.set(static_cast<std::size_t>(w));
            total += count_rec(hyp, fm, host, v + 1, f, occupied, nodes, enum_budget);
            occupied.reset(static_cast<std::size_t>(w));
        }
        f[static_cast<std::size_t>(v)] = -1;
    }
    return total;
}

}  // namespace

Int count_hypergraph_embeddings(const Hypergraph& hyp, const NicePredicate& nice,
                                const Bitset& host, std::uint64_t enum_budget,
                                long h_override) {
    const long h = h_override > 0 ? h_override : std::max(hyp.edge_size_bound(), 1);
    FMembership fm{nice, host, h, {}};
    std::vector<int> f(static_cast<std::size_t>(hyp.n()), -1);
    Bitset occupied(host.universe());
    std::uint64_t nodes = 0;
    return count_rec(hyp, fm, host, 0, f, occupied, nodes, enum_budget);
}

}  // namespace egt
