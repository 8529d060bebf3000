//
// sepgraph - the 1-graph construction, Bratteli towers, graph monoids and
// their Grothendieck groups.
//

#ifndef SEPGRAPH_BRATTELI_HPP_
#define SEPGRAPH_BRATTELI_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sepgraph/graph.hpp"
#include "sepgraph/snf.hpp"

namespace sepgraph {

inline constexpr int64_t kDefaultLevelBudget = 200000;

// Naming maps between a graph and its 1-graph.  All references are by
// (canonical) name, so they survive canonicalization of either graph.
struct OneGraphNaming {
  // Derived layer-1 vertex name -> (parent layer-0 vertex, defining tuple
  // of parent edge names, one per group in declaration order).
  std::map<std::string, std::pair<std::string, std::vector<std::string>>>
      tuples;
  // Derived edge name -> (slot index i, parent edge x_i).  The derived
  // edge runs from its tuple vertex to s(x_i).
  std::map<std::string, std::pair<int, std::string>> edge_symbol;
};

struct OneGraphResult {
  SeparatedGraph graph;
  OneGraphNaming naming;
};

// The 1-graph (E_1, C^1): old layer-1 vertices become layer 0; the new
// layer-1 vertices are the tuples choosing one edge per group at each old
// layer-0 vertex; groups C^1_v = { X(x) : x in s^{-1}(v) }.  Throws
// SizeLimitExceeded if the result would exceed `budget` vertices.
OneGraphResult one_graph(SeparatedGraph const& g,
                         int64_t               budget = kDefaultLevelBudget);

// Levels (E_0,C^0) .. (E_n,C^n) with the naming maps between them; the
// union over levels is the truncated separated Bratteli diagram (F_n,D^n).
struct BratteliTower {
  std::vector<SeparatedGraph> levels;
  std::vector<OneGraphNaming> namings;  // namings[k] relates level k to k+1

  int height() const { return static_cast<int>(levels.size()) - 1; }
};

BratteliTower tower(SeparatedGraph const& g, int n,
                    int64_t budget = kDefaultLevelBudget);

// Presentation of the graph monoid M(F_n, D^n): one generator per vertex
// of F_n, one relation a_v = sum_{e in X} a_{s(e)} per (v, X).
struct MonoidPresentation {
  struct Relation {
    int                              lhs;  // generator index
    std::vector<std::pair<int, int>> rhs;  // (generator index, multiplicity)
  };
  std::vector<std::string> generators;
  std::vector<Relation>    relations;

  // One row per relation: +1 at lhs, -multiplicity at each rhs generator.
  IntMat relation_matrix() const;
};

MonoidPresentation monoid_presentation(BratteliTower const& t, int n);

// The Grothendieck group of the presented monoid: cokernel of the relation
// matrix transpose, computed via Smith normal form.
struct GrothendieckGroup {
  int64_t          free_rank;
  std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
};

GrothendieckGroup grothendieck(MonoidPresentation const& p);

}  // namespace sepgraph

#endif  // SEPGRAPH_BRATTELI_HPP_
