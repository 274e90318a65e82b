#pragma once

#include <string>
#include <vector>

#include "gtop/covering.hpp"
#include "gtop/fpgroup.hpp"
#include "gtop/graph.hpp"

namespace gtop {

using Face = std::vector<int>;  // sorted vertex ids

// Stored through its maximal faces. Vertex ids are positions in the sorted
// name list; every vertex lies in some face.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(std::vector<std::string> names, std::vector<Face> faces);
    static SimplicialComplex from_names(const std::vector<std::vector<std::string>>& faces);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& vertex_name(int v) const { return names_[v]; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    int index_of(const std::string& name) const;
    const std::vector<Face>& maximal_faces() const { return max_; }
    // maximal faces through v
    const std::vector<int>& faces_at(int v) const { return at_[v]; }
    int dimension() const;

    bool contains(const Face& sigma) const;
    // every face with exactly k+1 vertices, sorted
    std::vector<Face> faces(int k) const;
    std::vector<int> component_labels(int* count = nullptr) const;
    SimplicialComplex component(int v) const;
    // closed star of v: generated by the maximal faces through v
    std::vector<Face> star(int v) const;
    std::vector<int> star_vertices(int v) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<std::string> names_;
    std::vector<Face> max_;
    std::vector<std::vector<int>> at_;
};

// faces are the subsets of N_r(v); vertices are the non-isolated ones
SimplicialComplex neighborhood_complex(const Graph& g, int r);
// vertex v of N_r(g) for graph vertex gv
int complex_vertex(const SimplicialComplex& c, const Graph& g, int gv);

struct EdgeLoopPresentation {
    SimplicialComplex complex;
    int base = 0;
    std::vector<int> parent;
    std::vector<std::pair<int, int>> chords;
    Presentation presentation;
};

EdgeLoopPresentation edge_loop_presentation(const SimplicialComplex& c, int base);

struct Homology {
    int h0_rank = 0;
    AbelianInvariants h1;
    AbelianInvariants h2;  // of the 2-skeleton
    std::string to_string() const;
};

Homology homology(const SimplicialComplex& c);

struct ComplexCoverReport {
    bool pass = false;
    std::string failure;  // first failing check, empty on pass
    int stars_checked = 0;
};

// The three steps of the covering argument for N_r(G) -> N_r(H), given a
// (2r)-covering G -> H. Throws PreconditionError when p is not one.
// The preimage step is checked on faces of dimension <= 2 and on maximal faces.
ComplexCoverReport complex_covering_check(const GraphMap& p, int r);

struct Theorem53Report {
    GroupIdentity complex_side;  // edge-loop group of N_r(G) at v
    GroupIdentity graph_side;    // even part of pi_1^{2r}(G, v)
    bool agree = false;
};

Theorem53Report theorem_5_3_check(const BasedGraph& g, int r);

}  // namespace gtop
