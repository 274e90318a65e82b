#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtop/covering.hpp"
#include "gtop/fpgroup.hpp"
#include "gtop/graph.hpp"
#include "gtop/homotopy.hpp"

namespace gtop {

// v -> nonempty vertex set with eta(v) x eta(w) inside E(codomain) for every edge vw
struct MultiHom {
    Graph domain, codomain;
    std::vector<std::vector<int>> sets;  // sorted
    bool valid() const;
    static MultiHom of_maps(const GraphMap& f, const GraphMap& g);  // v -> {f(v), g(v)}
};

// (f x g)(E(G)) inside E(H)
bool one_step_homotopic(const GraphMap& f, const GraphMap& g);
// the map G x I_1 -> H sending (v,0) to f(v) and (v,1) to g(v) preserves edges
bool interpolation_is_map(const GraphMap& f, const GraphMap& g);

struct TimesHomotopy {
    bool homotopic = false;
    std::vector<GraphMap> chain;  // f = chain.front(), g = chain.back(), one-step apart
    long long visited = 0;
};

inline constexpr long long kDefaultMaxMaps = 1'000'000;

// BFS through one-step homotopies. With base >= 0 every intermediate map
// keeps the value f(base). Throws BudgetExceeded past max_maps visited maps.
TimesHomotopy times_homotopic(const GraphMap& f, const GraphMap& g, int base = -1,
                              long long max_maps = kDefaultMaxMaps);

// maps one step away from f (excluding f), lexicographic
std::vector<GraphMap> one_step_neighbors(const GraphMap& f, int base = -1);

// (phi x psi)(E(L_n)) inside E(G) for walks of equal length and endpoints
bool simeq2_prime_check(const Walk& phi, const Walk& psi);

struct Pullback {
    Graph graph;           // vertices "(v,x)" with f(v) = p(x)
    GraphMap projection;   // first projection onto the domain of f
    GraphMap second;       // second projection into the domain of p
};

// f*E for f : G -> H and an r-covering p : E -> H. The projection is
// re-verified as an r-covering; failure throws Error.
Pullback pullback_cover(const GraphMap& f, const GraphMap& p, int r);

struct EndpointIso {
    Pullback start, end;  // i_0*E and i_n*E
    GraphMap forward;     // start.graph -> end.graph over G
    GraphMap backward;
};

// p : E -> G x I_n a 2-covering (G x I_n as built by product(g, interval n)).
// Transports each (v,x) level by level: the next point is the unique element
// of N_2(x) over (v,k+1).
EndpointIso endpoint_pullback_iso(const GraphMap& p, const Graph& g, int n);

struct PosetCoverReport {
    bool pass = false;
    long long domain_size = 0, codomain_size = 0;  // |Hom(T,G)|, |Hom(T,H)|
    std::string failure;
};

// Hom(T,G) -> Hom(T,H) has unique upper and lower lifts, for a 2-covering p : G -> H.
PosetCoverReport poset_cover_check(const Graph& t, const GraphMap& p, long long max_elements = 200'000);

// every multi-homomorphism t -> h, as sorted sets
std::vector<MultiHom> enumerate_multihoms(const Graph& t, const Graph& h, long long max_elements = 200'000);

// generator images of pi_1^r(f) and pi_1^r(g) agree (f(v) = g(v) required)
Verdict same_induced_hom(const BasedMap& f, const BasedMap& g, int r);

// Ad(gamma) o pi_1^r(f) = pi_1^r(g) on the given loops at v, with gamma
// the zig-zag path f(v) -> g(v) read off a chain of one-step homotopies.
Walk homotopy_track(const std::vector<GraphMap>& chain, int v);
Verdict adjoint_relation_holds(const std::vector<GraphMap>& chain, int v, int r, const std::vector<Walk>& loops);

}  // namespace gtop
