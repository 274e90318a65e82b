#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtop/fundamental.hpp"
#include "gtop/graph.hpp"
#include "gtop/homotopy.hpp"

namespace gtop {

// A violation of the covering condition at a domain vertex.
//   not_surjective: codomain vertex `a` in N_1(p(v)) has no preimage in N_1(v)
//   collision: domain vertices a < b in N_radius(v) share an image
struct CoverWitness {
    enum class Kind { not_surjective, collision };
    Kind kind = Kind::collision;
    int vertex = 0;
    int radius = 1;
    int a = 0, b = 0;
    std::string describe(const GraphMap& p) const;
};

struct CoverCertificate {
    GraphMap map;
    int r = 1;
    bool pass = false;
    std::optional<CoverWitness> witness;  // least by vertex, then radius
};

// Local form: N_1 surjective everywhere and N_i injective for i <= r.
CoverCertificate verify_r_covering(const GraphMap& p, int r);
CoverCertificate verify_r_covering_serial(const GraphMap& p, int r);
// re-derive the violation from scratch
bool replay(const GraphMap& p, const CoverWitness& w);

struct ActionWitness {
    int vertex = 0;
    int element = 0;  // index into VertexAction::elements()
    int common = 0;   // a vertex in N_r(v) and N_r(v.g)
};

struct ActionCertificate {
    bool pass = false;
    std::optional<ActionWitness> witness;
};

ActionCertificate verify_covering_action(const VertexAction& a, int r);
ActionCertificate verify_covering_action_serial(const VertexAction& a, int r);

// Unique lift of a walk through a certified covering.
Walk lift_path(const CoverCertificate& p, const Walk& walk, int start);
bool loop_in_image(const CoverCertificate& p, const Walk& loop, int start);

// Ball of radius L in the universal r-cover. Vertices are r-homotopy classes
// of walks from the base, named by their least geodesic representative.
struct TruncatedCover {
    BasedGraph base;
    int r = 1;
    int cap = 0;
    Graph graph;
    GraphMap projection;
    int cover_base = 0;
    std::vector<int> depth;        // geodesic length of each class
    std::vector<VertexSeq> rep;    // least geodesic representative
    int certified_radius = 0;      // depth up to which p is r-covering
    bool exact_classes = false;    // classes decided by the group, not by the cap
    bool check_ball() const;       // covering condition on the certified ball
};

TruncatedCover universal_cover(const BasedGraph& g, int r, int cap, long long max_states = 2'000'000);

struct FiberReport {
    int fiber = 0;
    std::optional<long long> index;
    bool agree = false;
    std::string note;
};

// |p^-1(p(v))| against the index of p_*(pi_1^r(cover, v)) in pi_1^r(base, p(v))
FiberReport fiber_coset_check(const CoverCertificate& p, int cover_base, long long max_cosets = kDefaultMaxCosets);

// Covering of G attached to a finite-index subgroup of pi_1^r(G, v), given by
// words over the cw_presentation generators. Vertices are "(u,c)" for u in the
// base component and c a right coset.
struct SubgroupCover {
    Graph graph;
    GraphMap projection;
    int cover_base = 0;
    int index = 0;
};

SubgroupCover subgroup_cover(const BasedGraph& g, int r, const std::vector<Word>& subgroup,
                             long long max_cosets = kDefaultMaxCosets);

struct LiftResult {
    std::optional<GraphMap> lift;
    std::optional<Walk> witness;  // loop in the domain whose image does not lift to a loop
};

// Lift f: (T, x) -> (G, p(cover_base)) through p to (cover, cover_base).
LiftResult lift_map(const CoverCertificate& p, int cover_base, const BasedMap& f);

}  // namespace gtop
