//
// sepgraph - dead ends, boundary closures, the Cantor criterion, maximal
// unlinkable pairs and the primeness decision.
//

#ifndef SEPGRAPH_PRIME_HPP_
#define SEPGRAPH_PRIME_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sepgraph/graph.hpp"
#include "sepgraph/hereditary.hpp"
#include "sepgraph/subshift.hpp"

namespace sepgraph {

using SignedEdgeSet = std::set<SignedEdge>;

// Path closure: i(w) in A forces t(w) in A for every admissible word w;
// equivalently closure of A under admissible one-step continuations.
bool          is_path_closed(SeparatedGraph const& g, SignedEdgeSet const& a);
SignedEdgeSet path_closure(SeparatedGraph const& g, SignedEdgeSet a);

// The boundary closure: least superset closed under path closure and the
// two fill-in rules (a missing inverse joins when the rest of the source
// fiber is present; a whole group joins when every other group at the
// vertex meets A^{-1}).
bool          is_boundary_closed(SeparatedGraph const& g, SignedEdgeSet const& a);
SignedEdgeSet boundary_closure(SeparatedGraph const& g, SignedEdgeSet const& a);

// Signed edges from which no choice path departs.  The result is always
// path closed (asserted).
SignedEdgeSet dead_ends(SeparatedGraph const& g);

// V(A): layer-0 vertices all of whose groups meet the closure inversely,
// plus layer-1 vertices whose whole out-fiber lies in the closure.
VertexIdSet V_of(SeparatedGraph const& g, SignedEdgeSet const& a);

// The boundary of a ball: terminal (outermost) letters of its maximal
// words.  Letters index into the edge alphabet of g.
SignedEdgeSet ball_boundary(Ball const& b);

// The Cantor criterion: V(dead_ends) is empty.  When it is not, each of
// its vertices carries an isolated point, witnessed by a ball whose whole
// boundary consists of dead ends (built by the constructive recursion
// bounded by the closure stratum depth).
struct CantorReport {
  bool              cantor = true;
  SignedEdgeSet     a_de;
  VertexIdSet       isolated;   // V(A_DE)
  std::vector<Ball> witnesses;  // one ball per isolated vertex, in order
};
CantorReport is_cantor(SeparatedGraph const& g);

// ---------------------------------------------------------------------------
// Linkability.

// link[s][t] (state id = 2*edge + inv): some admissible word has first
// applied letter t and last applied letter s^{-1}, i.e. the singletons
// {s} and {t} can be linked.  The relation is symmetric.
using LinkMatrix = std::vector<std::vector<bool>>;
LinkMatrix linkability(SeparatedGraph const& g);
LinkMatrix linkability_parallel(SeparatedGraph const& g);  // identical output

inline int  state_id(SignedEdge l) { return 2 * l.edge + (l.inv ? 1 : 0); }
inline bool linked(LinkMatrix const& m, SignedEdge a, SignedEdge b) {
  return m[state_id(a)][state_id(b)];
}

// The Galois map A |-> A' = { s : linked to no member of A }.
SignedEdgeSet unlinked_complement(SeparatedGraph const& g, LinkMatrix const& m,
                                  SignedEdgeSet const& a);

struct GaloisPair {
  SignedEdgeSet left, right;
  auto operator<=>(GaloisPair const&) const = default;
};

// All maximal unlinkable pairs (A, A'), i.e. Galois-closed A with their
// duals; unordered pairs are listed once, canonically sorted.  The closed
// family is generated from singleton duals and intersections; exceeding
// `cap` closed sets raises SizeLimitExceeded.
std::vector<GaloisPair> maximal_unlinkable_pairs(SeparatedGraph const& g,
                                                 int64_t cap = int64_t(1)
                                                               << 16);

// ---------------------------------------------------------------------------
// Primeness.

struct PrimeVerdict {
  enum class Kind { Prime, NotPrime, NotApplicable };

  Kind         kind = Kind::Prime;
  CantorReport cantor;  // NotApplicable carries the isolated points

  // NotPrime: a maximal unlinkable pair with V nonempty on both sides.
  GaloisPair  witness;
  VertexIdSet witness_v_left, witness_v_right;

  // Cross-check: admissible-path connectivity of every level <= the bound
  // (the Bratteli reformulation of topological transitivity).
  int         levels_checked = 0;
  bool        bratteli_agrees = true;
  std::string note;
};

// Requires the Cantor property, then decides primeness by V(A) = 0 or
// V(A') = 0 over all maximal unlinkable pairs, cross-checking against
// level connectivity up to `levels` (levels that exceed the budget are
// skipped).
PrimeVerdict is_prime(SeparatedGraph const& g, int levels = 3,
                      int64_t budget = kDefaultLevelBudget);

}  // namespace sepgraph

#endif  // SEPGRAPH_PRIME_HPP_
