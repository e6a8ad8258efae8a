#include "knesertw/kneser.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <stdexcept>

namespace knesertw {

namespace {

// Elements of [1,n] as a 128-bit mask, n <= 128.
using Mask = std::array<std::uint64_t, 2>;

Mask to_mask(const KSubset& s) {
    Mask m{0, 0};
    for (int e : s.elems) m[(e - 1) >> 6] |= (std::uint64_t{1} << ((e - 1) & 63));
    return m;
}

int mask_intersection(const Mask& a, const Mask& b) {
    return std::popcount(a[0] & b[0]) + std::popcount(a[1] & b[1]);
}

// All m-element selections from pool, in colex order over pool positions.
void for_each_combination(const std::vector<int>& pool, int m,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (m < 0 || m > static_cast<int>(pool.size())) return;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::vector<int> picked(m);
    for (;;) {
        for (int i = 0; i < m; ++i) picked[i] = pool[idx[i]];
        fn(picked);
        if (m == 0) return;
        int i = m - 1;
        while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - m + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Advance a sorted k-subset of [1,n] to its colex successor; false at the end.
bool next_colex(std::vector<int>& s, int n) {
    int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i) {
        int limit = (i + 1 < k) ? s[i + 1] - 1 : n;
        if (s[i] < limit) {
            ++s[i];
            for (int j = 0; j < i; ++j) s[j] = j + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::string> param_violation(long n, long k, long t) {
    if (t <= 0) return "t <= 0";
    if (k <= t) return "k <= t";
    if (n <= 2 * k - t) return "n <= 2k - t";
    return std::nullopt;
}

KneserParams validate_params(long n, long k, long t) {
    if (auto why = param_violation(n, k, t))
        throw std::invalid_argument("invalid Kneser parameters: " + *why);
    return KneserParams{n, k, t};
}

bool is_adjacent(const KSubset& u, const KSubset& v, long t) {
    return intersection_size(u, v) < t;
}

BigInt vertex_count(const KneserParams& p) { return binom(p.n, p.k); }

BigInt max_degree_formula(const KneserParams& p) {
    BigInt d = 0;
    for (long i = 0; i < p.t; ++i) d += binom(p.k, i) * binom(p.n - p.k, p.k - i);
    return d;
}

BigInt pencil_size_formula(const KneserParams& p) {
    return binom(p.n - p.t, p.k - p.t);
}

BigInt crowded_size_formula(const KneserParams& p) {
    BigInt s = 0;
    for (long j = p.t + 1; j <= std::min(p.k, p.t + 2); ++j)
        s += binom(p.t + 2, j) * binom(p.n - p.t - 2, p.k - j);
    return s;
}

BigInt degree_bound_formula(const KneserParams& p) {
    return binom(p.n, p.k) - binom(p.n - p.t, p.k - p.t) -
           BigInt(p.k - p.t) * p.t * binom(p.n - p.k, p.k - p.t);
}

KneserGraph build_graph(const KneserParams& p, std::size_t vertex_cap) {
    validate_params(p.n, p.k, p.t);
    if (p.n > 128) throw std::length_error("build_graph: n > 128");
    BigInt count = vertex_count(p);
    if (count > static_cast<long>(vertex_cap))
        throw std::length_error("build_graph: C(n,k) = " + count.get_str() +
                                " exceeds vertex cap " + std::to_string(vertex_cap));
    std::size_t nv = static_cast<std::size_t>(count.get_ui());

    KneserGraph kg;
    kg.params = p;
    kg.graph = Graph(nv);
    kg.subsets.reserve(nv);

    std::vector<Mask> masks;
    masks.reserve(nv);
    std::vector<int> cur(p.k);
    for (int i = 0; i < p.k; ++i) cur[i] = i + 1;
    do {
        KSubset s(static_cast<int>(p.n), cur);
        masks.push_back(to_mask(s));
        kg.subsets.push_back(std::move(s));
    } while (next_colex(cur, static_cast<int>(p.n)));

    for (std::uint32_t u = 0; u < nv; ++u)
        for (std::uint32_t v = u + 1; v < nv; ++v)
            if (mask_intersection(masks[u], masks[v]) < p.t) kg.graph.add_edge(u, v);
    return kg;
}

VertexSet pencil_independent_set(const KneserParams& p, const std::vector<int>& base) {
    validate_params(p.n, p.k, p.t);
    if (static_cast<long>(base.size()) != p.t)
        throw std::invalid_argument("pencil: base must have exactly t elements");
    KSubset base_check(static_cast<int>(p.n), base);  // validates range/distinctness
    std::vector<int> rest;
    for (int x = 1; x <= p.n; ++x)
        if (!base_check.contains(x)) rest.push_back(x);

    VertexSet out;
    for_each_combination(rest, static_cast<int>(p.k - p.t),
                         [&](const std::vector<int>& extra) {
                             std::vector<int> elems = base_check.elems;
                             elems.insert(elems.end(), extra.begin(), extra.end());
                             KSubset s(static_cast<int>(p.n), std::move(elems));
                             out.push_back(static_cast<std::uint32_t>(colex_rank(s)));
                         });
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet crowded_independent_set(const KneserParams& p) {
    validate_params(p.n, p.k, p.t);
    if (p.t + 2 > p.n) throw std::invalid_argument("crowded set: t + 2 > n");
    std::vector<int> head, tail;
    for (int x = 1; x <= p.t + 2; ++x) head.push_back(x);
    for (int x = static_cast<int>(p.t) + 3; x <= p.n; ++x) tail.push_back(x);

    VertexSet out;
    for (long j = p.t + 1; j <= std::min(p.k, p.t + 2); ++j) {
        for_each_combination(head, static_cast<int>(j), [&](const std::vector<int>& in) {
            for_each_combination(
                tail, static_cast<int>(p.k - j), [&](const std::vector<int>& ex) {
                    std::vector<int> elems = in;
                    elems.insert(elems.end(), ex.begin(), ex.end());
                    KSubset s(static_cast<int>(p.n), std::move(elems));
                    out.push_back(static_cast<std::uint32_t>(colex_rank(s)));
                });
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Greedy clique cover of the candidate set: each clique contributes at most
// one vertex to any independent set.
std::size_t clique_cover_bound(const Graph& g, const DynBitset& cands) {
    std::vector<DynBitset> cliques;
    for (std::size_t v = cands.find_first(); v < cands.size(); v = cands.find_next(v + 1)) {
        bool placed = false;
        for (auto& cl : cliques) {
            if (cl.is_subset_of(g.neighbors(static_cast<std::uint32_t>(v)))) {
                cl.set(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            DynBitset cl(cands.size());
            cl.set(v);
            cliques.push_back(std::move(cl));
        }
    }
    return cliques.size();
}

struct AlphaSearch {
    const Graph& g;
    VertexSet best;
    VertexSet cur;

    void run(const DynBitset& cands) {
        if (cur.size() + cands.count() <= best.size()) return;
        std::size_t v = cands.find_first();
        if (v == cands.size()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (cur.size() + clique_cover_bound(g, cands) <= best.size()) return;

        DynBitset with_v = cands;
        with_v.reset(v);
        with_v -= g.neighbors(static_cast<std::uint32_t>(v));
        cur.push_back(static_cast<std::uint32_t>(v));
        run(with_v);
        cur.pop_back();

        DynBitset without_v = cands;
        without_v.reset(v);
        run(without_v);
    }
};

}  // namespace

AlphaResult brute_force_alpha(const Graph& g, std::size_t vertex_cap) {
    if (g.num_vertices() > vertex_cap)
        throw std::length_error("brute_force_alpha: graph exceeds vertex cap");
    AlphaSearch search{g, {}, {}};
    search.run(g.full_vertex_set());
    std::sort(search.best.begin(), search.best.end());
    return AlphaResult{search.best.size(), std::move(search.best)};
}

}  // namespace knesertw
