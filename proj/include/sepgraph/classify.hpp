//
// sepgraph - Condition (L), vertex typing, 1-connectivity, cycle classes
// and the simplicity dichotomy classifier.
//

#ifndef SEPGRAPH_CLASSIFY_HPP_
#define SEPGRAPH_CLASSIFY_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sepgraph/bratteli.hpp"
#include "sepgraph/graph.hpp"

namespace sepgraph {

// ---------------------------------------------------------------------------
// Choices.

// Per double-graph letter (state id = 2*edge + inv): true iff some choice
// path starts with that letter, i.e. an admissible continuation reaches a
// positive edge e with a second group of size >= 2 at r(e).
std::vector<bool> choice_states(SeparatedGraph const& g);

// Per vertex: true iff some choice path starts at the vertex.
std::vector<bool> admits_choice(SeparatedGraph const& g);

// Condition (L): the base of every simple cycle admits a choice.  When it
// fails, `base`/`cycle` carry one violating simple cycle.
struct ConditionLReport {
  bool        holds = true;
  std::string base;
  Word        cycle;
};
ConditionLReport condition_L(SeparatedGraph const& g);

// ---------------------------------------------------------------------------
// Vertex types.

enum class VertexType { A, B1, B2 };

// Typing of the layer-0 vertices: type A iff exactly one group of size > 1
// (the distinguished group X^v); otherwise type B, split into B1/B2 by
// whether two singleton groups share a source vertex.  Vertices with two
// or more groups of size > 1 are recorded as violations (the graph cannot
// be simple) and carry no type.
struct VertexTypeMap {
  std::map<int, VertexType> type;           // layer-0 vertex id -> type
  std::map<int, int>        distinguished;  // type-A vertex id -> group id X^v
  std::vector<int>          violations;     // vertices with >= 2 big groups

  bool all_type_a() const;
};
VertexTypeMap vertex_types(SeparatedGraph const& g);

// ---------------------------------------------------------------------------
// 1-connectivity and cycles.

// Equivalence classes of ~ (existence of an admissible path all of whose
// edges lie in singleton groups); covers all vertices, sorted canonically.
std::vector<std::vector<int>> one_components(SeparatedGraph const& g);

// All simple closed paths based at v, up to inversion: words g^{-1} b g
// with g a non-vertex-repeating admissible path from v and b a simple
// cycle at r(g).  Canonical: each word is min(w, w^{-1}), list sorted.
std::vector<Word> simple_closed_paths(SeparatedGraph const& g, int v,
                                      int64_t cap = int64_t(1) << 16);

// The cycle classes: vertices admitting no choices whose closed-path group
// is infinite cyclic (exactly one simple closed path up to inversion, and
// it is a cycle), grouped by lying on a common cycle.
struct CycleClass {
  std::vector<std::string> vertices;  // sorted member names
  std::string              base;      // base of the representative cycle
  Word                     cycle;     // representative simple cycle
};
std::vector<CycleClass> cycle_classes(SeparatedGraph const& g);

// ---------------------------------------------------------------------------
// The simplicity dichotomy.

// A plain directed graph (the non-separated orientation of a level graph).
struct OrientedGraph {
  struct Arc {
    std::string name;
    int         source;
    int         target;
  };
  std::vector<std::string> vertices;
  std::vector<Arc>         arcs;
};

// Hereditary saturated subsets of a directed graph, with the conventions
// of the bipartite case: target in H pulls in the source; a vertex with a
// nonempty in-fiber entirely sourced in H joins H.
std::vector<std::set<int>> oriented_hsets(OrientedGraph const& g);

struct SimplicityVerdict {
  enum class Kind { NotSimple, GraphAlgebra, FreeGroup, Inconclusive };

  Kind kind = Kind::Inconclusive;
  int  bound = 0;  // the level bound used for the lattice search

  // NotSimple: a maximal proper hereditary C-saturated set at `level`.
  int                      level = -1;
  std::vector<std::string> witness;

  // GraphAlgebra: the non-separated orientation of the level graph.
  OrientedGraph oriented;

  // FreeGroup: rank and base vertex (a type-B vertex 1-disconnected from
  // every type-A vertex at the final level).
  int         rank = 0;
  std::string base;

  // Inconclusive: which check stopped the dichotomy.
  std::string note;
};

// (i) search the lattice of every level <= bound for a nontrivial set
// (NotSimple); (ii) otherwise run the dichotomy: type the level-1 graph,
// check the necessary conditions, pass to the 1-path-bound level; all
// type A yields GraphAlgebra, an isolated type-B vertex yields FreeGroup;
// (iii) otherwise Inconclusive.  Throws SizeLimitExceeded if a level
// exceeds the vertex budget.
SimplicityVerdict classify_simplicity(SeparatedGraph const& g, int bound = 6,
                                      int64_t budget = kDefaultLevelBudget);

}  // namespace sepgraph

#endif  // SEPGRAPH_CLASSIFY_HPP_
