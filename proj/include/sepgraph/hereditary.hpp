//
// sepgraph - hereditary C-saturated sets, their lattice, level lifts,
// quotient graphs and tower-ideal bookkeeping.
//

#ifndef SEPGRAPH_HEREDITARY_HPP_
#define SEPGRAPH_HEREDITARY_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sepgraph/bratteli.hpp"
#include "sepgraph/graph.hpp"

namespace sepgraph {

// A subset of E^0 of a single graph, by vertex id.
using VertexIdSet = std::set<int>;

bool is_hereditary(SeparatedGraph const& g, VertexIdSet const& h);
bool is_saturated(SeparatedGraph const& g, VertexIdSet const& h);

// Least hereditary C-saturated superset of `seed` (alternating fixpoint of
// the two rules).
VertexIdSet closure_hs(SeparatedGraph const& g, VertexIdSet const& seed);

// The full lattice H(E, C), as canonically ordered sets plus the Hasse
// covering relation (indices (lower, upper)).
struct HsetLattice {
  std::vector<VertexIdSet>         sets;
  std::vector<std::pair<int, int>> hasse;
};

HsetLattice enumerate_hsets(SeparatedGraph const& g,
                            int64_t cap = int64_t(1) << 20);

// The lift H_1 of a hereditary C-saturated H in g to the 1-graph `next`:
// tuple vertices containing a slot edge sourced in H, together with the
// old layer-1 part of H.  Verifies both hypotheses and the conclusion.
VertexIdSet lift_one_level(SeparatedGraph const& g, SeparatedGraph const& next,
                           OneGraphNaming const& nm, VertexIdSet const& h);

// (E/H, C/H): drop vertices in H and edges sourced in H; groups restrict.
SeparatedGraph quotient_graph(SeparatedGraph const& g, VertexIdSet const& h);

// A subset of the vertices of a tower, one id-set per level.  The layer-1
// part of level k and the layer-0 part of level k+1 name the same vertices
// of F_infinity and are kept synchronized.
struct TowerSet {
  std::vector<VertexIdSet> per_level;
};

// Least subset of the tower containing `seed` that is hereditary and
// saturated at every level and consistent across the shared layers.
TowerSet tower_closure(BratteliTower const& t, TowerSet const& seed);

struct TowerIdealReport {
  TowerSet                    spread;     // H^(n) per level
  std::optional<int>          finite_type_n;  // stabilization level, if <= N
  int                         bound;          // the N that was checked
  std::vector<SeparatedGraph> quotients;      // (E_n/H^(n), C^n/H^(n))
};

// Spread H (given at one or more levels) over the whole tower, check the
// lift-chain stabilization H^{(m+1)} = (H^{(m)})_1 for m >= n, and emit the
// quotient tower.  `given` entries must be hereditary/saturated per level
// and consistent with the lifts (InconsistentLevels otherwise).
TowerIdealReport tower_ideal(BratteliTower const& t, TowerSet const& given,
                             int bound_n);

}  // namespace sepgraph

#endif  // SEPGRAPH_HEREDITARY_HPP_
