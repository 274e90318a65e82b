#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gtop/fpgroup.hpp"
#include "gtop/graph.hpp"
#include "gtop/homotopy.hpp"

namespace gtop {

// Presentation of pi_1^r(G, v) read off the 2-complex |G|_r: one generator
// per non-tree edge of the base component, one relator per closed walk of
// length 2n <= 2r.
struct Pi1Presentation {
    BasedGraph base;
    int r = 1;
    std::vector<int> parent;  // BFS tree; -1 at the base and outside the component
    std::vector<int> depth;   // -1 outside the component
    std::vector<std::pair<int, int>> chords;  // (a, b) with a <= b, in generator order
    Presentation presentation;
    std::vector<int> parity;  // per generator, 0 or 1
    bool filtered = false;    // decomposable cycles were dropped

    int generator_of(int a, int b) const;  // -1 for tree edges
    bool in_component(int v) const { return depth[v] >= 0; }
    // the loop base -> a -> b -> base through the tree
    VertexSeq fundamental_cycle(int gen) const;
    VertexSeq tree_path(int from_base_to) const;

    std::map<std::pair<int, int>, int> chord_index;
};

struct Pi1Options {
    bool drop_decomposable = false;
    long long max_walks = 50'000'000;
};

Pi1Presentation cw_presentation(const BasedGraph& g, int r, const Pi1Options& opt = {});

Word walk_to_word(const Pi1Presentation& pp, const VertexSeq& walk);
Word walk_to_word(const Pi1Presentation& pp, const Walk& walk);
int parity_of(const Pi1Presentation& pp, const Word& w);

// index <= 2 subgroup of even classes
struct EvenPart {
    Presentation presentation;
    std::vector<Word> generator_words;  // in the full presentation
    bool whole_group = false;
};
EvenPart even_part(const Pi1Presentation& pp);

// Images of the domain generators in the codomain presentation.
struct InducedHom {
    Pi1Presentation domain, codomain;
    std::vector<Word> images;
    Word apply(const Word& w) const;
};
InducedHom induced_hom(const BasedMap& f, int r, const Pi1Options& opt = {});

// Closed walks of length exactly 2r, split by whether some vertex repeats at
// an even offset. Walks are listed once per rotation/reflection class.
struct CycleSplit {
    std::vector<VertexSeq> decomposable, nondecomposable;
};
bool is_decomposable(const VertexSeq& closed);  // closed: first vertex not repeated at the end
CycleSplit nondecomposable_filter(const Graph& g, int r, long long max_walks = 50'000'000);

}  // namespace gtop
