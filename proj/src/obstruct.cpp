#include "gtop/obstruct.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>

#include "gtop/homotopy.hpp"
#include "gtop/ncomplex.hpp"

namespace gtop {

namespace {

using Bits = std::uint64_t;

class HomSolver {
public:
    HomSolver(const Graph& g, const Graph& h, std::atomic<long long>& nodes, long long max_nodes)
        : g_(g), h_(h), n_(g.size()), m_(h.size()), w_((h.size() + 63) / 64), nodes_(nodes), max_(max_nodes) {
        hadj_.assign(static_cast<std::size_t>(m_) * w_, 0);
        for (int x = 0; x < m_; ++x)
            for (int y : h.neighbors(x)) hadj_[x * w_ + y / 64] |= Bits{1} << (y % 64);
    }

    // initial domains with pins and loop constraints, propagated; empty when refuted
    std::vector<Bits> initial(const std::vector<std::pair<int, int>>& pins) const {
        std::vector<Bits> d(static_cast<std::size_t>(n_) * w_, 0);
        for (int v = 0; v < n_; ++v)
            for (int x = 0; x < m_; ++x)
                if (!g_.has_loop(v) || h_.has_loop(x)) set(d, v, x);
        for (auto [v, x] : pins) {
            if (v < 0 || v >= n_ || x < 0 || x >= m_) throw LookupError("pinned vertex out of range");
            bool ok = has(d, v, x);
            clear_row(d, v);
            if (ok) set(d, v, x);
        }
        std::vector<int> all(n_);
        std::iota(all.begin(), all.end(), 0);
        if (!propagate(d, all)) return {};
        return d;
    }

    // lexicographically least completion, searching vertices i.. in order
    bool search(std::vector<Bits>& d, int i, std::vector<int>& out, bool& exhausted) {
        if (i == n_) {
            out.assign(n_, -1);
            for (int v = 0; v < n_; ++v) out[v] = first(d, v);
            return true;
        }
        for (int x = 0; x < m_; ++x) {
            if (!has(d, i, x)) continue;
            if (nodes_.fetch_add(1, std::memory_order_relaxed) >= max_) {
                exhausted = true;
                return false;
            }
            std::vector<Bits> e = d;
            clear_row(e, i);
            set(e, i, x);
            if (!propagate(e, {i})) continue;
            if (search(e, i + 1, out, exhausted)) return true;
            if (exhausted) return false;
        }
        return false;
    }

    void enumerate(std::vector<Bits>& d, int i, std::vector<std::vector<int>>& out, long long max_maps) {
        if (i == n_) {
            std::vector<int> f(n_);
            for (int v = 0; v < n_; ++v) f[v] = first(d, v);
            out.push_back(std::move(f));
            if (static_cast<long long>(out.size()) > max_maps)
                throw BudgetExceeded("more than " + std::to_string(max_maps) + " graph maps");
            return;
        }
        for (int x = 0; x < m_; ++x) {
            if (!has(d, i, x)) continue;
            std::vector<Bits> e = d;
            clear_row(e, i);
            set(e, i, x);
            if (propagate(e, {i})) enumerate(e, i + 1, out, max_maps);
        }
    }

    bool has(const std::vector<Bits>& d, int v, int x) const { return (d[v * w_ + x / 64] >> (x % 64)) & 1; }
    int first(const std::vector<Bits>& d, int v) const {
        for (int k = 0; k < w_; ++k)
            if (d[v * w_ + k]) return k * 64 + std::countr_zero(d[v * w_ + k]);
        return -1;
    }
    int vertices() const { return n_; }
    int values() const { return m_; }
    void fix(std::vector<Bits>& d, int v, int x) const {
        clear_row(d, v);
        set(d, v, x);
    }
    bool propagate(std::vector<Bits>& d, std::vector<int> changed) const {
        std::vector<char> queued(n_, 0);
        std::queue<int> q;
        for (int v : changed) {
            q.push(v);
            queued[v] = 1;
        }
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            queued[w] = 0;
            for (int u : g_.neighbors(w)) {
                // keep x in D(u) only if x has a neighbour in D(w)
                bool removed = false, any = false;
                for (int x = 0; x < m_; ++x) {
                    if (!has(d, u, x)) continue;
                    bool support = false;
                    for (int k = 0; k < w_ && !support; ++k) support = (hadj_[x * w_ + k] & d[w * w_ + k]) != 0;
                    if (!support) {
                        d[u * w_ + x / 64] &= ~(Bits{1} << (x % 64));
                        removed = true;
                    } else {
                        any = true;
                    }
                }
                if (!any) return false;
                if (removed && !queued[u]) {
                    queued[u] = 1;
                    q.push(u);
                }
            }
        }
        return true;
    }

private:
    void set(std::vector<Bits>& d, int v, int x) const { d[v * w_ + x / 64] |= Bits{1} << (x % 64); }
    void clear_row(std::vector<Bits>& d, int v) const { std::fill(d.begin() + v * w_, d.begin() + (v + 1) * w_, 0); }

    const Graph& g_;
    const Graph& h_;
    int n_, m_, w_;
    std::vector<Bits> hadj_;
    std::atomic<long long>& nodes_;
    long long max_;
};

HomSearch find_hom_impl(const Graph& g, const Graph& h, long long max_nodes,
                        const std::vector<std::pair<int, int>>& pins, bool parallel) {
    HomSearch res;
    std::atomic<long long> nodes{0};
    HomSolver s(g, h, nodes, max_nodes);
    if (g.size() == 0) {
        res.map = GraphMap(g, h, {});
        return res;
    }
    auto d0 = s.initial(pins);
    if (d0.empty()) return res;

    std::vector<int> branch;
    for (int x = 0; x < h.size(); ++x)
        if (s.has(d0, 0, x)) branch.push_back(x);
    const int nb = static_cast<int>(branch.size());
    std::vector<std::vector<int>> found(nb);
    std::vector<char> ok(nb, 0), exhausted(nb, 0);
    std::atomic<int> best{nb};
#pragma omp parallel for if (parallel) schedule(dynamic, 1)
    for (int b = 0; b < nb; ++b) {
        if (b > best.load()) continue;
        HomSolver local(g, h, nodes, max_nodes);
        std::vector<Bits> d = d0;
        local.fix(d, 0, branch[b]);
        if (!local.propagate(d, {0})) continue;
        bool ex = false;
        std::vector<int> out;
        if (local.search(d, 1, out, ex)) {
            ok[b] = 1;
            found[b] = std::move(out);
            int cur = best.load();
            while (b < cur && !best.compare_exchange_weak(cur, b)) {
            }
        }
        exhausted[b] = ex;
    }
    res.nodes = nodes.load();
    int first_ok = nb;
    for (int b = 0; b < nb; ++b)
        if (ok[b]) {
            first_ok = b;
            break;
        }
    for (int b = 0; b < first_ok; ++b)
        if (exhausted[b]) res.complete = false;
    if (first_ok < nb) res.map = GraphMap(g, h, found[first_ok]);
    return res;
}

}  // namespace

HomSearch find_hom(const Graph& g, const Graph& h, long long max_nodes, const std::vector<std::pair<int, int>>& pins) {
    return find_hom_impl(g, h, max_nodes, pins, true);
}

HomSearch find_hom_serial(const Graph& g, const Graph& h, long long max_nodes,
                          const std::vector<std::pair<int, int>>& pins) {
    return find_hom_impl(g, h, max_nodes, pins, false);
}

std::vector<std::vector<int>> enumerate_homs(const Graph& g, const Graph& h, long long max_maps,
                                             const std::vector<std::pair<int, int>>& pins) {
    std::atomic<long long> nodes{0};
    HomSolver s(g, h, nodes, 0);
    std::vector<std::vector<int>> out;
    if (g.size() == 0) return {std::vector<int>{}};
    auto d = s.initial(pins);
    if (d.empty()) return out;
    s.enumerate(d, 0, out, max_maps);
    return out;
}

ChromaticResult chromatic_number(const Graph& g, int max_k, long long max_nodes) {
    ChromaticResult res;
    if (g.has_loops()) return res;
    if (g.size() == 0) {
        res.value = 0;
        return res;
    }
    for (int k = 1; k <= max_k; ++k) {
        auto s = find_hom(g, make_family("complete", {k}), max_nodes);
        if (s.map) {
            res.value = k;
            return res;
        }
        if (!s.complete) {
            res.complete = false;
            return res;
        }
    }
    return res;
}

std::optional<int> odd_girth(const Graph& g) {
    // the shortest odd closed walk through v is the distance from (v,0) to (v,1) in K2 x G
    const int n = g.size();
    std::optional<int> best;
    for (int s = 0; s < n; ++s) {
        std::vector<int> d(2 * n, -1);
        std::queue<int> q;
        d[2 * s] = 0;
        q.push(2 * s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (best && d[x] >= *best) break;
            for (int y : g.neighbors(x / 2)) {
                int t = 2 * y + (1 - x % 2);
                if (d[t] < 0) {
                    d[t] = d[x] + 1;
                    q.push(t);
                }
            }
        }
        if (d[2 * s + 1] >= 0 && (!best || d[2 * s + 1] < *best)) best = d[2 * s + 1];
    }
    return best;
}

const char* to_string(Obstruction o) {
    switch (o) {
        case Obstruction::obstructed:
            return "OBSTRUCTED";
        case Obstruction::not_obstructed:
            return "NOT OBSTRUCTED";
        case Obstruction::inconclusive:
            return "INCONCLUSIVE";
    }
    return "?";
}

const char* to_string(HomCheck h) {
    switch (h) {
        case HomCheck::exists:
            return "exists";
        case HomCheck::none:
            return "none";
        case HomCheck::not_run:
            return "not run";
        case HomCheck::budget:
            return "budget exhausted";
    }
    return "?";
}

namespace {

HomCheck hom_check(const Graph& g, const Graph& h, long long nodes) {
    if (nodes <= 0) return HomCheck::not_run;
    auto s = find_hom(g, h, nodes);
    if (s.map) return HomCheck::exists;
    return s.complete ? HomCheck::none : HomCheck::budget;
}

Pi1Options filtered() {
    Pi1Options o;
    o.drop_decomposable = true;
    return o;
}

}  // namespace

CycleReport cycle_obstruction_report(const BasedGraph& bg, int n, int r, int max_power, long long hom_nodes) {
    if (n < 3 || n % 2 == 0) throw ParameterError("target cycle length must be odd and at least 3");
    if (r < 1 || r >= n) throw ParameterError("radius must satisfy 1 <= r < n");
    CycleReport rep;
    rep.n = n;
    rep.r = r;
    const Graph& g = bg.graph;
    auto pp = cw_presentation(bg, r, filtered());
    rep.group = identify(pp.presentation);
    int odd = -1;
    for (int i = 0; i < static_cast<int>(pp.parity.size()); ++i)
        if (pp.parity[i]) {
            odd = i;
            break;
        }
    if (odd < 0) {
        rep.verdict = Obstruction::not_obstructed;
        rep.reason = "the base component is bipartite, so it maps to an edge of C_" + std::to_string(n);
    } else if (rep.group.order) {
        rep.verdict = Obstruction::obstructed;
        rep.odd_loop = Walk(g, pp.fundamental_cycle(odd));
        rep.power = static_cast<int>(*rep.group.order);
        rep.reason = "pi_1^" + std::to_string(r) + " is finite (" + rep.group.name +
                     ") and has an odd element, whose stable length is 0 < " + std::to_string(n);
    } else {
        rep.verdict = Obstruction::not_obstructed;
        rep.reason = "no odd generator has stable length below " + std::to_string(n) + " up to power " +
                     std::to_string(max_power);
        for (int gen = 0; gen < static_cast<int>(pp.parity.size()) && rep.verdict != Obstruction::obstructed; ++gen) {
            if (!pp.parity[gen]) continue;
            Walk loop(g, pp.fundamental_cycle(gen));
            for (int k = 1; k <= max_power; ++k) {
                int len = geodesic_length(power(loop, k), r).length;
                if (len < static_cast<long long>(n) * k) {
                    rep.verdict = Obstruction::obstructed;
                    rep.odd_loop = loop;
                    rep.power = k;
                    rep.power_length = len;
                    rep.reason = "an odd class has a power " + std::to_string(k) + " of length " +
                                 std::to_string(len) + " < " + std::to_string(k) + "*" + std::to_string(n);
                    break;
                }
            }
        }
    }
    rep.hom = hom_check(g, make_family("cycle", {n}), hom_nodes);
    rep.consistent = !(rep.verdict == Obstruction::obstructed && rep.hom == HomCheck::exists);
    return rep;
}

H1Report h1_obstruction_report(const Graph& g, int n, int r, long long hom_nodes) {
    if (n < 3 || n % 2 == 0) throw ParameterError("target cycle length must be odd and at least 3");
    if (r < 1 || 2 * r >= n) throw ParameterError("radius must satisfy 2r < n");
    if (!odd_girth(g)) throw PreconditionError("graph is bipartite (chromatic number at most 2)");
    H1Report rep;
    rep.n = n;
    rep.r = r;
    auto h = homology(neighborhood_complex(g, r));
    rep.h1 = h.h1;
    if (h.h1.rank == 0) {
        rep.verdict = Obstruction::obstructed;
        rep.reason = "H_1(N_" + std::to_string(r) + ") = " + h.h1.to_string() + " has no Z summand";
    } else {
        rep.verdict = Obstruction::inconclusive;
        rep.reason = "H_1(N_" + std::to_string(r) + ") = " + h.h1.to_string() + " has a Z summand; no conclusion";
    }
    rep.hom = hom_check(g, make_family("cycle", {n}), hom_nodes);
    rep.consistent = !(rep.verdict == Obstruction::obstructed && rep.hom == HomCheck::exists);
    return rep;
}

namespace {

struct OddOrders {
    bool finite = false;
    std::vector<long long> orders;  // orders of odd elements, sorted, unique
};

bool torsion_free(const GroupIdentity& g) {
    using K = GroupIdentity::Kind;
    bool kind = g.kind == K::free || g.kind == K::free_abelian || g.kind == K::trivial ||
                (g.kind == K::cyclic && !g.order);
    return kind && g.certified;
}

OddOrders odd_orders(const Pi1Presentation& pp, const GroupIdentity& gi) {
    OddOrders out;
    if (!gi.order) return out;
    auto res = coset_enumerate(pp.presentation, {}, kDefaultMaxCosets);
    if (!res.complete()) return out;
    out.finite = true;
    const CosetTable& t = res.table;
    const int n = t.size();
    const int k = pp.presentation.ngens();
    std::vector<int> par(n, -1);
    std::queue<int> q;
    par[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        for (int gen = 0; gen < k; ++gen)
            for (int l : {letter(gen), -letter(gen)}) {
                int d = t.act(c, l);
                if (par[d] < 0) {
                    par[d] = par[c] ^ pp.parity[gen];
                    q.push(d);
                }
            }
    }
    auto rep = t.transversal();
    for (int c = 0; c < n; ++c) {
        if (par[c] != 1) continue;
        long long ord = 0;
        int cur = 0;
        do {
            cur = t.trace(cur, rep[c]);
            ++ord;
        } while (cur != 0);
        out.orders.push_back(ord);
    }
    std::sort(out.orders.begin(), out.orders.end());
    out.orders.erase(std::unique(out.orders.begin(), out.orders.end()), out.orders.end());
    return out;
}

}  // namespace

TorsionReport torsion_obstruction_report(const BasedGraph& g, const BasedGraph& h, int r, long long hom_nodes) {
    TorsionReport rep;
    rep.r = r;
    if (!is_connected(h.graph)) {
        rep.reason = "target graph is disconnected";
        return rep;
    }
    auto pg = cw_presentation(g, r, filtered());
    auto ph = cw_presentation(h, r, filtered());
    rep.source = identify(pg.presentation);
    rep.target = identify(ph.presentation);
    auto og = odd_orders(pg, rep.source);
    if (!og.finite || og.orders.empty()) {
        if (og.finite)
            rep.reason = "source has no odd element";
        else if (torsion_free(rep.source))
            rep.reason = "source group " + rep.source.name + " is torsion-free, so odd elements have infinite order";
        else
            rep.reason = "source group " + rep.source.name + " is not known to be finite";
        rep.hom = hom_check(g.graph, h.graph, hom_nodes);
        return rep;
    }
    rep.odd_order = og.orders.front();
    const long long k = *rep.odd_order;
    bool target_known = false;
    bool divides = false;
    if (torsion_free(rep.target)) {
        // only the identity has finite order, and it is even
        target_known = true;
    } else {
        auto oh = odd_orders(ph, rep.target);
        if (oh.finite) {
            target_known = true;
            rep.target_odd_orders = oh.orders;
            for (long long o : oh.orders) divides = divides || k % o == 0;
        }
    }
    if (!target_known) {
        rep.reason = "target group " + rep.target.name + " could not be enumerated";
    } else if (divides) {
        rep.verdict = Obstruction::not_obstructed;
        rep.reason = "target has an odd element whose order divides " + std::to_string(k);
    } else {
        rep.verdict = Obstruction::obstructed;
        rep.reason = "source " + rep.source.name + " has an odd element of order " + std::to_string(k) +
                     ", target " + rep.target.name + " has no odd element of order dividing it";
    }
    rep.hom = hom_check(g.graph, h.graph, hom_nodes);
    rep.consistent = !(rep.verdict == Obstruction::obstructed && rep.hom == HomCheck::exists);
    return rep;
}

}  // namespace gtop
