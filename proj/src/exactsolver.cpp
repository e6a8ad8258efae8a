#include "knesertw/exactsolver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <stdexcept>

namespace knesertw {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::vector<std::uint64_t> mask_adjacency(const Graph& g) {
    std::size_t n = g.num_vertices();
    if (n > 64) throw std::length_error("mask_adjacency: more than 64 vertices");
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    return adj;
}

// Minor-min-width on mask adjacency restricted to `alive`.
long mmd_masks(std::vector<std::uint64_t> adj, std::uint64_t alive) {
    long lb = 0;
    for (;;) {
        int v = -1;
        int vdeg = std::numeric_limits<int>::max();
        for (std::uint64_t rem = alive; rem;) {
            int u = std::countr_zero(rem);
            rem &= rem - 1;
            int d = std::popcount(adj[u] & alive);
            if (d > 0 && d < vdeg) {
                vdeg = d;
                v = u;
            }
        }
        if (v < 0) return lb;  // no edges left
        lb = std::max(lb, static_cast<long>(vdeg));
        // contract v into its minimum-degree neighbor
        int u = -1;
        int udeg = std::numeric_limits<int>::max();
        for (std::uint64_t rem = adj[v] & alive; rem;) {
            int w = std::countr_zero(rem);
            rem &= rem - 1;
            int d = std::popcount(adj[w] & alive);
            if (d < udeg) {
                udeg = d;
                u = w;
            }
        }
        for (std::uint64_t rem = adj[v] & alive; rem;) {
            int w = std::countr_zero(rem);
            rem &= rem - 1;
            if (w != u) adj[w] |= bit(static_cast<std::size_t>(u));
            adj[w] &= ~bit(static_cast<std::size_t>(v));
        }
        adj[u] = (adj[u] | adj[v]) & ~(bit(static_cast<std::size_t>(u)) |
                                       bit(static_cast<std::size_t>(v)));
        alive &= ~bit(static_cast<std::size_t>(v));
    }
}

// Number of vertices outside S u {v} reachable from v via paths inside S.
int back_degree(const std::vector<std::uint32_t>& adj, std::uint32_t S, int v) {
    std::uint32_t closure = static_cast<std::uint32_t>(1u << v);
    std::uint32_t nb = adj[v];
    for (;;) {
        std::uint32_t grow = nb & S & ~closure;
        if (!grow) break;
        closure |= grow;
        for (std::uint32_t rem = grow; rem;) {
            int u = std::countr_zero(rem);
            rem &= rem - 1;
            nb |= adj[u];
        }
    }
    return std::popcount(nb & ~S & ~closure);
}

struct DpOutcome {
    long width;
    std::vector<std::uint32_t> order;
    std::uint64_t nodes;
};

// DP over vertex subsets: tw(S) = min over v in S of
// max(tw(S \ v), back_degree(S \ v, v)); answer is tw(V).
DpOutcome subset_dp(const Graph& g) {
    int n = static_cast<int>(g.num_vertices());
    if (n > 31) throw std::length_error("subset_dp: more than 31 vertices");
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::size_t total = std::size_t{1} << n;
    std::vector<std::uint8_t> tw(total, 255);
    tw[0] = 0;
    std::uint64_t nodes = 0;
    for (std::uint32_t S = 1; S < total; ++S) {
        int best = 255;
        for (std::uint32_t rem = S; rem;) {
            int v = std::countr_zero(rem);
            rem &= rem - 1;
            std::uint32_t prev = S & ~(1u << v);
            ++nodes;
            int cand = std::max<int>(tw[prev], back_degree(adj, prev, v));
            best = std::min(best, cand);
        }
        tw[S] = static_cast<std::uint8_t>(best);
    }

    // walk back for the optimal elimination ordering, smallest vertex first on ties
    std::vector<std::uint32_t> order(n);
    std::uint32_t S = static_cast<std::uint32_t>(total - 1);
    for (int i = n - 1; i >= 0; --i) {
        int pick = -1;
        int pick_val = std::numeric_limits<int>::max();
        for (std::uint32_t rem = S; rem;) {
            int v = std::countr_zero(rem);
            rem &= rem - 1;
            std::uint32_t prev = S & ~(1u << v);
            int cand = std::max<int>(tw[prev], back_degree(adj, prev, v));
            if (cand < pick_val) {
                pick_val = cand;
                pick = v;
            }
        }
        order[i] = static_cast<std::uint32_t>(pick);
        S &= ~(1u << pick);
    }
    return {static_cast<long>(tw[total - 1]), std::move(order), nodes};
}

struct BnbSearch {
    int n;
    long best;  // incumbent width
    std::vector<std::uint32_t> best_order;
    std::vector<std::uint32_t> cur;
    std::uint64_t nodes = 0;
    Clock::time_point deadline;
    bool has_deadline = false;
    bool timed_out = false;

    void rec(const std::vector<std::uint64_t>& adj, std::uint64_t alive, long cur_max) {
        if (timed_out) return;
        if (has_deadline && (++nodes & 1023) == 0 && Clock::now() > deadline) {
            timed_out = true;
            return;
        }
        ++nodes;
        int remaining = std::popcount(alive);
        if (remaining == 0) {
            if (cur_max < best) {
                best = cur_max;
                best_order = cur;
            }
            return;
        }
        if (cur_max >= best) return;
        if (static_cast<long>(remaining) - 1 <= cur_max) {
            // any completion keeps the width; take ascending order
            auto order = cur;
            for (std::uint64_t rem = alive; rem;) {
                int v = std::countr_zero(rem);
                rem &= rem - 1;
                order.push_back(static_cast<std::uint32_t>(v));
            }
            if (cur_max < best) {
                best = cur_max;
                best_order = std::move(order);
            }
            return;
        }
        if (std::max(cur_max, mmd_masks(adj, alive)) >= best) return;

        for (std::uint64_t rem = alive; rem;) {
            int v = std::countr_zero(rem);
            rem &= rem - 1;
            std::uint64_t nb = adj[v] & alive;
            long deg = std::popcount(nb);
            long new_max = std::max(cur_max, deg);
            if (new_max >= best) continue;
            auto filled = adj;
            for (std::uint64_t r2 = nb; r2;) {
                int u = std::countr_zero(r2);
                r2 &= r2 - 1;
                filled[u] |= nb & ~bit(static_cast<std::size_t>(u));
            }
            cur.push_back(static_cast<std::uint32_t>(v));
            rec(filled, alive & ~bit(static_cast<std::size_t>(v)), new_max);
            cur.pop_back();
            if (timed_out) return;
        }
    }
};

}  // namespace

long treewidth_lower_bound(const Graph& g) {
    if (g.num_vertices() == 0) return 0;
    if (g.num_vertices() <= 64) return mmd_masks(mask_adjacency(g),
        g.num_vertices() == 64 ? ~std::uint64_t{0}
                               : (bit(g.num_vertices()) - 1));
    // DynBitset fallback for large graphs
    std::size_t n = g.num_vertices();
    std::vector<DynBitset> adj(n, DynBitset(n));
    for (auto [u, v] : g.edges()) {
        adj[u].set(v);
        adj[v].set(u);
    }
    DynBitset alive = g.full_vertex_set();
    long lb = 0;
    for (;;) {
        std::size_t v = n, vdeg = n + 1;
        for (std::size_t u = alive.find_first(); u < n; u = alive.find_next(u + 1)) {
            std::size_t d = (adj[u] & alive).count();
            if (d > 0 && d < vdeg) {
                vdeg = d;
                v = u;
            }
        }
        if (v == n) return lb;
        lb = std::max(lb, static_cast<long>(vdeg));
        DynBitset nbs = adj[v] & alive;
        std::size_t u = n, udeg = n + 1;
        for (std::size_t w = nbs.find_first(); w < n; w = nbs.find_next(w + 1)) {
            std::size_t d = (adj[w] & alive).count();
            if (d < udeg) {
                udeg = d;
                u = w;
            }
        }
        for (std::size_t w = nbs.find_first(); w < n; w = nbs.find_next(w + 1)) {
            if (w != u) adj[w].set(u);
            adj[w].reset(v);
        }
        adj[u] |= adj[v];
        adj[u].reset(u);
        adj[u].reset(v);
        alive.reset(v);
    }
}

GreedyResult greedy_upper_bound(const Graph& g, EliminationHeuristic h) {
    std::size_t n = g.num_vertices();
    std::vector<DynBitset> adj(n, DynBitset(n));
    for (auto [u, v] : g.edges()) {
        adj[u].set(v);
        adj[v].set(u);
    }
    DynBitset alive = g.full_vertex_set();
    GreedyResult res;
    res.order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        long pick_score = std::numeric_limits<long>::max();
        for (std::size_t v = alive.find_first(); v < n; v = alive.find_next(v + 1)) {
            DynBitset nbs = adj[v] & alive;
            long score;
            if (h == EliminationHeuristic::MinDegree) {
                score = static_cast<long>(nbs.count());
            } else {
                // min-fill: missing edges among the neighborhood
                score = 0;
                auto vs = nbs.to_vector();
                for (std::size_t i = 0; i < vs.size(); ++i)
                    for (std::size_t j = i + 1; j < vs.size(); ++j)
                        if (!adj[vs[i]].test(vs[j])) ++score;
            }
            if (score < pick_score) {
                pick_score = score;
                pick = v;
            }
        }
        DynBitset nbs = adj[pick] & alive;
        res.width = std::max(res.width, static_cast<long>(nbs.count()));
        auto vs = nbs.to_vector();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                adj[vs[i]].set(vs[j]);
                adj[vs[j]].set(vs[i]);
            }
        alive.reset(pick);
        res.order.push_back(static_cast<std::uint32_t>(pick));
    }
    return res;
}

long elimination_width(const Graph& g, const std::vector<std::uint32_t>& order) {
    std::size_t n = g.num_vertices();
    if (order.size() != n)
        throw std::invalid_argument("elimination_width: order is not a permutation");
    std::vector<DynBitset> adj(n, DynBitset(n));
    for (auto [u, v] : g.edges()) {
        adj[u].set(v);
        adj[v].set(u);
    }
    DynBitset alive = g.full_vertex_set();
    long width = 0;
    for (std::uint32_t v : order) {
        if (!alive.test(v))
            throw std::invalid_argument("elimination_width: repeated vertex in order");
        DynBitset nbs = adj[v] & alive;
        width = std::max(width, static_cast<long>(nbs.count()));
        auto vs = nbs.to_vector();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                adj[vs[i]].set(vs[j]);
                adj[vs[j]].set(vs[i]);
            }
        alive.reset(v);
    }
    return width;
}

TreeDecomposition decomposition_from_elimination(const Graph& g,
                                                 const std::vector<std::uint32_t>& order) {
    std::size_t n = g.num_vertices();
    if (order.size() != n)
        throw std::invalid_argument("decomposition_from_elimination: bad order");
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

    std::vector<DynBitset> adj(n, DynBitset(n));
    for (auto [u, v] : g.edges()) {
        adj[u].set(v);
        adj[v].set(u);
    }
    DynBitset alive = g.full_vertex_set();

    TreeDecomposition td;
    td.num_nodes = n;
    td.bags.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t v = order[i];
        DynBitset nbs = adj[v] & alive;
        VertexSet bag = nbs.to_vector();
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags[i] = std::move(bag);

        // attach to the earliest-eliminated remaining neighbor's node
        std::size_t attach = n;
        for (std::uint32_t w : nbs.to_vector()) attach = std::min(attach, pos[w]);
        if (attach < n) {
            td.tree_edges.emplace_back(static_cast<std::uint32_t>(i),
                                       static_cast<std::uint32_t>(attach));
        } else if (i + 1 < n) {
            // isolated remainder; chain to keep T a tree
            td.tree_edges.emplace_back(static_cast<std::uint32_t>(i),
                                       static_cast<std::uint32_t>(i + 1));
        }
        auto vs = nbs.to_vector();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                adj[vs[a]].set(vs[b]);
                adj[vs[b]].set(vs[a]);
            }
        alive.reset(v);
    }
    return td;
}

SolveResult exact_treewidth(const Graph& g, const SolverLimits& limits,
                            std::optional<SolveMethod> force) {
    std::size_t n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("exact_treewidth: empty graph");
    auto t0 = Clock::now();

    SolveResult res;
    res.lower = treewidth_lower_bound(g);
    GreedyResult fill = greedy_upper_bound(g, EliminationHeuristic::MinFill);
    GreedyResult degree = greedy_upper_bound(g, EliminationHeuristic::MinDegree);
    GreedyResult& incumbent = fill.width <= degree.width ? fill : degree;
    res.upper = incumbent.width;

    SolveMethod method;
    if (force) {
        method = *force;
    } else if (n <= limits.dp_max_vertices) {
        method = SolveMethod::SubsetDP;
    } else if (n <= limits.bnb_max_vertices) {
        method = SolveMethod::BranchAndBound;
    } else {
        method = SolveMethod::Heuristic;
    }
    res.method = method;

    std::vector<std::uint32_t> order = incumbent.order;
    if (method == SolveMethod::SubsetDP) {
        if (n > limits.dp_max_vertices)
            throw std::length_error("exact_treewidth: graph exceeds subset-DP cap");
        DpOutcome dp = subset_dp(g);
        res.nodes_explored = dp.nodes;
        res.exact = true;
        res.lower = res.upper = res.treewidth = dp.width;
        order = std::move(dp.order);
    } else if (method == SolveMethod::BranchAndBound) {
        if (n > limits.bnb_max_vertices)
            throw std::length_error("exact_treewidth: graph exceeds branch-and-bound cap");
        BnbSearch search;
        search.n = static_cast<int>(n);
        search.best = incumbent.width;
        search.best_order = incumbent.order;
        if (limits.time_limit_seconds > 0) {
            search.has_deadline = true;
            search.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(
                                           limits.time_limit_seconds));
        }
        std::uint64_t alive =
            n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);
        search.rec(mask_adjacency(g), alive, 0);
        res.nodes_explored = search.nodes;
        res.upper = search.best;
        order = search.best_order;
        if (search.timed_out) {
            res.exact = false;
        } else {
            res.exact = true;
            res.lower = res.upper;
            res.treewidth = search.best;
        }
    } else {
        res.exact = false;  // bracketing bounds only
    }

    res.certificate = decomposition_from_elimination(g, order);
    res.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

bool is_p_separator(const Graph& g, const DynBitset& X, const BigRat& p) {
    if (p < make_rat(2, 3) || p >= 1)
        throw std::invalid_argument("is_p_separator: p must lie in [2/3, 1)");
    DynBitset rest = g.full_vertex_set();
    rest -= X;
    BigRat limit = p * static_cast<long>(rest.count());
    for (const auto& comp : g.components(rest))
        if (BigRat(static_cast<long>(comp.count())) > limit) return false;
    return true;
}

namespace {

// floor(p * rest) for rest = 0..n; a component of integer size c satisfies
// c <= p*rest iff c <= floor(p*rest).
std::vector<long> component_limits(const BigRat& p, std::size_t n) {
    std::vector<long> lim(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
        BigInt f = (p.get_num() * static_cast<long>(r)) / p.get_den();  // floor, all >= 0
        lim[r] = static_cast<long>(f.get_si());
    }
    return lim;
}

bool mask_is_p_separator(const std::vector<std::uint64_t>& adj, std::size_t n,
                         std::uint64_t X, const std::vector<long>& lim) {
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);
    std::uint64_t rest = all & ~X;
    long limit = lim[static_cast<std::size_t>(std::popcount(rest))];
    while (rest) {
        int v = std::countr_zero(rest);
        std::uint64_t comp = bit(static_cast<std::size_t>(v));
        for (;;) {
            std::uint64_t nb = 0;
            for (std::uint64_t r2 = comp; r2;) {
                int u = std::countr_zero(r2);
                r2 &= r2 - 1;
                nb |= adj[u];
            }
            std::uint64_t grow = nb & rest & ~comp;
            if (!grow) break;
            comp |= grow;
        }
        if (std::popcount(comp) > limit) return false;
        rest &= ~comp;
    }
    return true;
}

}  // namespace

SeparatorResult min_balanced_separator(const Graph& g, const BigRat& p,
                                       std::size_t vertex_cap) {
    if (p < make_rat(2, 3) || p >= 1)
        throw std::invalid_argument("min_balanced_separator: p must lie in [2/3, 1)");
    std::size_t n = g.num_vertices();
    if (n > vertex_cap)
        throw std::length_error("min_balanced_separator: graph exceeds vertex cap");
    auto adj = mask_adjacency(g);
    auto lim = component_limits(p, n);
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);

    for (std::size_t size = 0; size <= n; ++size) {
        // Gosper's hack over size-subsets of n bits, ascending numeric order
        std::uint64_t X = size == 0 ? 0 : (bit(size) - 1);
        for (;;) {
            if (mask_is_p_separator(adj, n, X, lim)) {
                SeparatorResult res;
                res.p = p;
                res.is_minimum = true;
                for (std::uint64_t rem = X; rem;) {
                    int v = std::countr_zero(rem);
                    rem &= rem - 1;
                    res.separator.push_back(static_cast<std::uint32_t>(v));
                }
                return res;
            }
            if (size == 0) break;
            std::uint64_t c = X & -X;
            std::uint64_t r = X + c;
            X = (((r ^ X) >> 2) / c) | r;
            if (X > all) break;
        }
    }
    throw std::logic_error("min_balanced_separator: no separator found");  // X = V always works
}

}  // namespace knesertw
