#include "gtop/homotopy.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "gtop/fundamental.hpp"

namespace gtop {

std::size_t SeqHash::operator()(const VertexSeq& s) const noexcept { return boost::hash_range(s.begin(), s.end()); }

Walk::Walk(Graph g, VertexSeq vertices) : g_(std::move(g)), seq_(std::move(vertices)) {
    if (seq_.empty()) throw ValidationError("a walk needs at least one vertex");
    for (int v : seq_)
        if (v < 0 || v >= g_.size()) throw LookupError("walk vertex index out of range");
    for (std::size_t i = 0; i + 1 < seq_.size(); ++i)
        if (!g_.adjacent(seq_[i], seq_[i + 1]))
            throw ValidationError("walk step " + std::to_string(i) + " (" + g_.vertex_name(seq_[i]) + "," +
                                  g_.vertex_name(seq_[i + 1]) + ") is not an edge of " + g_.name());
}

Walk Walk::from_names(Graph g, const std::vector<std::string>& names) {
    VertexSeq s;
    s.reserve(names.size());
    for (const auto& n : names) s.push_back(g.index_of(n));
    return Walk(std::move(g), std::move(s));
}

std::vector<std::string> Walk::names() const {
    std::vector<std::string> out;
    for (int v : seq_) out.push_back(g_.vertex_name(v));
    return out;
}

std::string Walk::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < seq_.size(); ++i) s += (i ? "," : "") + g_.vertex_name(seq_[i]);
    return s + ")";
}

Walk compose(const Walk& a, const Walk& b) {
    if (!(a.graph() == b.graph())) throw PreconditionError("compose: walks live in different graphs");
    if (a.terminal() != b.initial())
        throw PreconditionError("compose: " + a.to_string() + " ends where " + b.to_string() + " does not start");
    VertexSeq s = a.vertices();
    s.insert(s.end(), b.vertices().begin() + 1, b.vertices().end());
    return Walk(a.graph(), std::move(s));
}

Walk reverse(const Walk& w) {
    VertexSeq s(w.vertices().rbegin(), w.vertices().rend());
    return Walk(w.graph(), std::move(s));
}

Walk power(const Walk& loop, int k) {
    if (!loop.is_loop()) throw PreconditionError("power: " + loop.to_string() + " is not a loop");
    Walk base = k < 0 ? reverse(loop) : loop;
    VertexSeq s{loop.initial()};
    for (int i = 0; i < std::abs(k); ++i) s.insert(s.end(), base.vertices().begin() + 1, base.vertices().end());
    return Walk(loop.graph(), std::move(s));
}

// ---------------------------------------------------------------- moves

namespace {

void fill_window(const Graph& g, VertexSeq& cur, int pos, int last, int after,
                 std::unordered_set<VertexSeq, SeqHash>& out) {
    if (pos > last) {
        if (g.adjacent(cur[last], after)) out.insert(cur);
        return;
    }
    for (int u : g.neighbors(cur[pos - 1])) {
        cur[pos] = u;
        fill_window(g, cur, pos + 1, last, after, out);
    }
}

}  // namespace

std::vector<VertexSeq> move_neighbors(const Graph& g, const VertexSeq& w, int r, int max_length) {
    if (r < 1) throw ParameterError("radius must be at least 1");
    const int n = static_cast<int>(w.size()) - 1;
    std::unordered_set<VertexSeq, SeqHash> out;

    if (max_length < 0 || n + 2 <= max_length) {
        for (int i = 0; i <= n; ++i)
            for (int u : g.neighbors(w[i])) {
                VertexSeq s(w.begin(), w.begin() + i + 1);
                s.push_back(u);
                s.insert(s.end(), w.begin() + i, w.end());
                out.insert(std::move(s));
            }
    }
    for (int i = 0; i + 2 <= n; ++i)
        if (w[i] == w[i + 2]) {
            VertexSeq s(w.begin(), w.begin() + i + 1);
            s.insert(s.end(), w.begin() + i + 3, w.end());
            out.insert(std::move(s));
        }
    const int width = std::min(r - 1, n - 1);
    if (width >= 1) {
        VertexSeq cur = w;
        for (int x = 1; x + width - 1 <= n - 1; ++x) {
            fill_window(g, cur, x, x + width - 1, w[x + width], out);
            std::copy(w.begin() + x, w.begin() + x + width, cur.begin() + x);
        }
    }
    out.erase(w);
    std::vector<VertexSeq> v(out.begin(), out.end());
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Walk> move_neighbors(const Walk& w, int r) {
    std::vector<Walk> out;
    for (auto& s : move_neighbors(w.graph(), w.vertices(), r)) out.emplace_back(w.graph(), std::move(s));
    return out;
}

// ---------------------------------------------------------------- class tables

int ClassTable::index_of(const VertexSeq& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
}

int ClassTable::block_of(const VertexSeq& w) const {
    int i = index_of(w);
    return i < 0 ? -1 : block[i];
}

std::vector<std::vector<int>> ClassTable::members() const {
    std::vector<std::vector<int>> m(blocks);
    for (int i = 0; i < static_cast<int>(walks.size()); ++i) m[block[i]].push_back(i);
    return m;
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int from) {
    std::vector<int> d(g.size(), -1);
    std::queue<int> q;
    d[from] = 0;
    q.push(from);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x))
            if (d[y] < 0) {
                d[y] = d[x] + 1;
                q.push(y);
            }
    }
    return d;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

ClassTable enumerate_classes(const Graph& g, int v, int w, int r, int cap, long long max_walks) {
    if (cap < 0) throw ParameterError("length cap must be non-negative");
    if (r < 1) throw ParameterError("radius must be at least 1");
    ClassTable t;
    t.graph = g;
    t.from = v;
    t.to = w;
    t.r = r;
    t.cap = cap;

    auto dist = bfs_distances(g, w);
    VertexSeq cur{v};
    long long steps = 0;
    auto dfs = [&](auto&& self) -> void {
        if (++steps > 20 * max_walks) throw BudgetExceeded("walk enumeration exceeded its step budget");
        int x = cur.back();
        int len = static_cast<int>(cur.size()) - 1;
        if (x == w) {
            t.walks.push_back(cur);
            if (static_cast<long long>(t.walks.size()) > max_walks)
                throw BudgetExceeded("more than " + std::to_string(max_walks) + " walks below the cap");
        }
        if (len == cap) return;
        for (int y : g.neighbors(x)) {
            if (dist[y] < 0 || dist[y] > cap - len - 1) continue;
            cur.push_back(y);
            self(self);
            cur.pop_back();
        }
    };
    if (dist[v] >= 0 && dist[v] <= cap) dfs(dfs);
    std::sort(t.walks.begin(), t.walks.end(), [](const VertexSeq& a, const VertexSeq& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    const int n = static_cast<int>(t.walks.size());
    t.index.reserve(static_cast<std::size_t>(n) * 2);
    for (int i = 0; i < n; ++i) t.index.emplace(t.walks[i], i);

    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (const auto& s : move_neighbors(g, t.walks[i], r, cap)) {
            auto it = t.index.find(s);
            if (it != t.index.end()) uf.unite(i, it->second);
        }
    t.block.assign(n, -1);
    std::vector<int> id(n, -1);
    for (int i = 0; i < n; ++i) {
        int root = uf.find(i);
        if (id[root] < 0) id[root] = t.blocks++;
        t.block[i] = id[root];
    }
    return t;
}

// ---------------------------------------------------------------- group decider

struct HomotopyDecider::Impl {
    Pi1Presentation pp;
    WordSolver solver;
    Impl(Pi1Presentation p) : pp(std::move(p)), solver(pp.presentation) {}
};

namespace {
Pi1Options decider_options() {
    Pi1Options o;
    o.drop_decomposable = true;
    return o;
}
}  // namespace

HomotopyDecider::HomotopyDecider(const Graph& g, int base, int r)
    : p_(std::make_unique<Impl>(cw_presentation(BasedGraph{g, base}, r, decider_options()))) {}
HomotopyDecider::~HomotopyDecider() = default;
HomotopyDecider::HomotopyDecider(HomotopyDecider&&) noexcept = default;

Word HomotopyDecider::word_of(const VertexSeq& w) const { return walk_to_word(p_->pp, w); }
const WordSolver& HomotopyDecider::solver() const { return p_->solver; }
int HomotopyDecider::base() const { return p_->pp.base.base; }
int HomotopyDecider::r() const { return p_->pp.r; }

Verdict HomotopyDecider::same_class(const VertexSeq& a, const VertexSeq& b) const {
    if (a.front() != base() || b.front() != base()) throw PreconditionError("walks must start at the decider's base");
    if (a.back() != b.back()) throw PreconditionError("walks must share their terminal vertex");
    if ((a.size() - b.size()) % 2 != 0) return Verdict::no;
    if (a == b) return Verdict::yes;
    return p_->solver.is_trivial(concat(word_of(a), inverse(word_of(b))));
}

Verdict HomotopyDecider::is_trivial_loop(const VertexSeq& loop) const { return same_class(loop, {base()}); }

Verdict are_r_homotopic(const Walk& a, const Walk& b, int r, int cap) {
    if (!(a.graph() == b.graph())) throw PreconditionError("walks live in different graphs");
    if (a.initial() != b.initial() || a.terminal() != b.terminal())
        throw PreconditionError("walks " + a.to_string() + " and " + b.to_string() + " have different endpoints");
    if (a.vertices() == b.vertices()) return Verdict::yes;
    if ((a.length() - b.length()) % 2 != 0) return Verdict::no;
    HomotopyDecider d(a.graph(), a.initial(), r);
    Verdict v = d.same_class(a.vertices(), b.vertices());
    if (v != Verdict::unknown) return v;
    if (cap < 0) cap = std::max(a.length(), b.length()) + 2 * r;
    try {
        ClassTable t = enumerate_classes(a.graph(), a.initial(), a.terminal(), r, cap);
        if (t.block_of(a.vertices()) == t.block_of(b.vertices())) return Verdict::yes;
    } catch (const BudgetExceeded&) {
    }
    return Verdict::unknown;
}

// ---------------------------------------------------------------- lengths

namespace {

int union_find_length(const Walk& w, int r, int cap) {
    ClassTable t = enumerate_classes(w.graph(), w.initial(), w.terminal(), r, cap);
    int b = t.block_of(w.vertices());
    for (int i = 0; i < static_cast<int>(t.walks.size()); ++i)
        if (t.block[i] == b) return static_cast<int>(t.walks[i].size()) - 1;
    return w.length();
}

}  // namespace

LengthResult geodesic_length(const Walk& w, int r, int cap, long long max_states) {
    const Graph& g = w.graph();
    HomotopyDecider d(g, w.initial(), r);
    const WordSolver& solver = d.solver();
    const Word target = d.word_of(w.vertices());
    const bool by_element = solver.regular().has_value();
    auto key_of = [&](const Word& word) -> Word {
        if (by_element) return {solver.element_of(word)};
        return free_reduce(word);
    };

    // states are (vertex, class key of the walk so far); walks with equal keys
    // are r-homotopic, so one representative per state suffices
    std::map<std::pair<int, Word>, char> seen;
    std::vector<std::pair<int, Word>> level{{w.initial(), Word{}}};
    seen[{w.initial(), key_of({})}] = 1;
    auto dist = bfs_distances(g, w.terminal());
    bool undecided = false;
    long long states = 1;
    for (int len = 0; len <= w.length(); ++len) {
        if ((w.length() - len) % 2 == 0) {
            for (const auto& [x, word] : level) {
                if (x != w.terminal()) continue;
                Verdict v = solver.is_trivial(concat(word, inverse(target)));
                if (v == Verdict::yes) {
                    if (!undecided) return {len, true};
                    int alt = w.length();
                    bool stable = false;
                    if (cap < 0) cap = w.length() + 2 * r;
                    try {
                        int a = union_find_length(w, r, cap);
                        int b = union_find_length(w, r, cap + 2);
                        alt = std::min(a, b);
                        stable = a == b;
                    } catch (const BudgetExceeded&) {
                    }
                    return {std::min(len, alt), stable && alt <= len};
                }
                if (v == Verdict::unknown) undecided = true;
            }
        }
        if (len == w.length()) break;
        std::vector<std::pair<int, Word>> next;
        for (const auto& [x, word] : level)
            for (int y : g.neighbors(x)) {
                if (dist[y] < 0 || dist[y] > w.length() - len - 1) continue;
                VertexSeq step{x, y};
                Word nw = free_reduce(concat(word, d.word_of(step)));
                if (seen.emplace(std::make_pair(y, key_of(nw)), 1).second) {
                    next.emplace_back(y, std::move(nw));
                    if (++states > max_states) throw BudgetExceeded("geodesic search exceeded its state budget");
                }
            }
        level.swap(next);
    }
    return {w.length(), false};
}

LengthResult metric_d(const Walk& a, const Walk& b, int r, int cap) {
    if (!a.is_loop() || !b.is_loop() || a.initial() != b.initial())
        throw PreconditionError("metric_d expects two loops at the same base");
    return geodesic_length(compose(a, reverse(b)), r, cap);
}

StableLength stable_length_upper(const Walk& loop, int r, int max_power, int cap) {
    if (max_power < 1) throw ParameterError("max power must be at least 1");
    if (!loop.is_loop()) throw PreconditionError("stable length needs a loop");
    StableLength best;
    best.num = -1;
    for (int n = 1; n <= max_power; ++n) {
        Walk p = power(loop, n);
        LengthResult l = geodesic_length(p, r, cap < 0 ? -1 : cap * n);
        best.exact_lengths = best.exact_lengths && l.exact;
        // l/n < num/den
        if (best.num < 0 || static_cast<long long>(l.length) * best.den < best.num * n) {
            long long gcd = std::gcd(static_cast<long long>(l.length), static_cast<long long>(n));
            if (gcd == 0) gcd = 1;
            best.num = l.length / gcd;
            best.den = n / gcd;
            best.best_power = n;
        }
    }
    return best;
}

}  // namespace gtop
