#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gtop/error.hpp"

namespace gtop {

// Vertices carry string names; internally they are dense ints in
// lexicographic order of the names. Edges form a symmetric relation and
// loops are allowed. Graphs are immutable and cheap to copy.
class Graph {
public:
    Graph();

    static Graph from_names(std::string name, std::vector<std::string> vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges);
    // vertex ids in `edges` refer to positions in `vertices` (any order)
    static Graph from_indices(std::string name, std::vector<std::string> vertices,
                              const std::vector<std::pair<int, int>>& edges);

    int size() const { return static_cast<int>(d_->names.size()); }
    const std::string& name() const { return d_->name; }
    const std::string& vertex_name(int v) const { return d_->names[v]; }
    const std::vector<std::string>& vertex_names() const { return d_->names; }
    int index_of(std::string_view vname) const;
    std::optional<int> find(std::string_view vname) const;

    std::span<const int> neighbors(int v) const { return d_->adj[v]; }
    int degree(int v) const { return static_cast<int>(d_->adj[v].size()); }
    bool adjacent(int a, int b) const;
    bool has_loop(int v) const { return adjacent(v, v); }
    bool is_isolated(int v) const { return d_->adj[v].empty(); }
    bool has_loops() const;

    // unordered edges {a,b} with a <= b
    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const { return d_->edge_count; }

    Graph renamed(std::string new_name) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    struct Data {
        std::string name;
        std::vector<std::string> names;
        std::vector<std::vector<int>> adj;
        std::size_t edge_count = 0;
    };
    explicit Graph(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

struct BasedGraph {
    Graph graph;
    int base = 0;
};

BasedGraph based(const Graph& g, std::string_view base_name);

// vertices reachable from v, ascending
std::vector<int> component_of(const Graph& g, int v);
std::vector<int> component_labels(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

// Graph map: a vertex map preserving edges.
class GraphMap {
public:
    GraphMap() = default;
    GraphMap(Graph domain, Graph codomain, std::vector<int> assignment);  // validates

    static GraphMap identity(const Graph& g);
    static GraphMap from_names(Graph domain, Graph codomain,
                               const std::vector<std::pair<std::string, std::string>>& pairs);

    const Graph& domain() const { return dom_; }
    const Graph& codomain() const { return cod_; }
    int operator()(int v) const { return map_[v]; }
    const std::vector<int>& assignment() const { return map_; }

    GraphMap then(const GraphMap& next) const;  // next after this

    // first edge (as domain vertex pair) not preserved, if any
    static std::optional<std::pair<int, int>> first_bad_edge(const Graph& dom, const Graph& cod,
                                                             const std::vector<int>& assignment);

private:
    Graph dom_, cod_;
    std::vector<int> map_;
};

struct BasedMap {
    GraphMap map;
    int domain_base = 0;
    int codomain_base = 0;
};

// A finite group acting on the right of the vertex set by graph automorphisms.
// Generators are permutations; the full group is the closure.
class VertexAction {
public:
    VertexAction() = default;
    VertexAction(Graph g, std::vector<std::vector<int>> generators);  // validates

    const Graph& graph() const { return g_; }
    const std::vector<std::vector<int>>& generators() const { return gens_; }
    // all group elements, identity first
    const std::vector<std::vector<int>>& elements() const { return elems_; }
    int order() const { return static_cast<int>(elems_.size()); }
    bool is_free() const;

private:
    Graph g_;
    std::vector<std::vector<int>> gens_;
    std::vector<std::vector<int>> elems_;
};

struct Quotient {
    Graph graph;
    GraphMap projection;
};

Graph make_family(std::string_view family, const std::vector<long long>& params);
// graph plus a canonical base vertex when the family has one
BasedGraph make_based_family(std::string_view family, const std::vector<long long>& params);
std::vector<std::string> family_names();

Graph cone(const Graph& g);  // G_+
Graph product(const Graph& g, const Graph& h);
Quotient quotient(const Graph& g, const std::vector<int>& class_of);
Quotient quotient(const Graph& g, const std::vector<std::vector<std::string>>& classes);
Quotient quotient_by_action(const VertexAction& a);
Graph delete_isolated(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices, std::string name = {});

// N_s(v), ascending
std::vector<int> neighborhood(const Graph& g, int v, int s);
// membership mask version
std::vector<char> neighborhood_mask(const Graph& g, int v, int s);

// X~_n from the lens-space example together with its rotation action
VertexAction xn_cover_action(int n);

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
inline bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

std::string to_dot(const Graph& g);

}  // namespace gtop
