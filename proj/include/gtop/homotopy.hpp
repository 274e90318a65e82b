#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtop/fpgroup.hpp"
#include "gtop/graph.hpp"

namespace gtop {

using VertexSeq = std::vector<int>;

struct SeqHash {
    std::size_t operator()(const VertexSeq& s) const noexcept;
};

// A walk (v0, ..., vn) with consecutive vertices adjacent; length n.
// compose(a, b) runs a first and then b. The paper writes this as b.a.
class Walk {
public:
    Walk() = default;
    Walk(Graph g, VertexSeq vertices);  // validates
    static Walk from_names(Graph g, const std::vector<std::string>& names);
    static Walk constant(Graph g, int v) { return Walk(std::move(g), {v}); }

    const Graph& graph() const { return g_; }
    const VertexSeq& vertices() const { return seq_; }
    int length() const { return static_cast<int>(seq_.size()) - 1; }
    int initial() const { return seq_.front(); }
    int terminal() const { return seq_.back(); }
    bool is_loop() const { return initial() == terminal(); }
    std::vector<std::string> names() const;
    std::string to_string() const;

    friend bool operator==(const Walk& a, const Walk& b) { return a.g_ == b.g_ && a.seq_ == b.seq_; }

private:
    Graph g_;
    VertexSeq seq_;
};

Walk compose(const Walk& a, const Walk& b);
Walk reverse(const Walk& w);
// k-fold concatenation of a loop; negative k uses the reverse
Walk power(const Walk& loop, int k);

// Walks reachable by one elementary move, excluding w itself. With
// max_length >= 0, insertions that would exceed it are skipped.
std::vector<VertexSeq> move_neighbors(const Graph& g, const VertexSeq& w, int r, int max_length = -1);
std::vector<Walk> move_neighbors(const Walk& w, int r);

// All walks v -> w of length <= cap, partitioned by the closure of the
// elementary moves that stay within length <= cap.
struct ClassTable {
    Graph graph;
    int from = 0, to = 0, r = 1, cap = 0;
    std::vector<VertexSeq> walks;  // ordered by length, then lexicographically
    std::vector<int> block;        // block id per walk, numbered by first walk
    int blocks = 0;

    int index_of(const VertexSeq& w) const;  // -1 when absent
    int block_of(const VertexSeq& w) const;
    std::vector<std::vector<int>> members() const;

    std::unordered_map<VertexSeq, int, SeqHash> index;
};

inline constexpr long long kDefaultWalkBudget = 5'000'000;

ClassTable enumerate_classes(const Graph& g, int v, int w, int r, int cap,
                             long long max_walks = kDefaultWalkBudget);

// Decides r-homotopy between walks with the same endpoints in one graph.
// Built once per (graph, base, r); answers through the chord word of the loop.
class HomotopyDecider {
public:
    HomotopyDecider(const Graph& g, int base, int r);
    ~HomotopyDecider();
    HomotopyDecider(HomotopyDecider&&) noexcept;

    Verdict same_class(const VertexSeq& a, const VertexSeq& b) const;
    Verdict is_trivial_loop(const VertexSeq& loop) const;
    Word word_of(const VertexSeq& w) const;  // chord word; tree edges vanish
    const WordSolver& solver() const;
    int base() const;
    int r() const;

private:
    struct Impl;
    std::unique_ptr<Impl> p_;
};

// cap < 0 selects the default max(l(a), l(b)) + 2r for the union-find fallback
Verdict are_r_homotopic(const Walk& a, const Walk& b, int r, int cap = -1);

struct LengthResult {
    int length = 0;
    bool exact = false;
};

// Minimum length in the r-homotopy class of w. Exact when every comparison
// was decided; otherwise the union-find value at caps cap and cap+2 is used
// and exact means both caps gave the same answer.
LengthResult geodesic_length(const Walk& w, int r, int cap = -1, long long max_states = kDefaultWalkBudget);
LengthResult metric_d(const Walk& a, const Walk& b, int r, int cap = -1);

struct StableLength {
    long long num = 0, den = 1;  // min over n <= N of l(a^n)/n, reduced
    int best_power = 1;
    bool exact_lengths = true;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

StableLength stable_length_upper(const Walk& loop, int r, int max_power, int cap = -1);

}  // namespace gtop
