//
// sepgraph - a workbench for finite bipartite separated graphs
//
// Core data model: separated graphs, the double graph, signed edges,
// admissible words, and the SGF file format.
//

#ifndef SEPGRAPH_GRAPH_HPP_
#define SEPGRAPH_GRAPH_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepgraph {

// Every domain error carries a stable machine-readable code (e.g.
// "UnknownVertex") next to the human-readable message.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, std::string const& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(std::string code, std::string const& msg) {
  throw Error(std::move(code), msg);
}

struct Vertex {
  std::string name;
  int         layer;  // 0 = range side, 1 = source side
};

struct Edge {
  std::string name;
  int         source;  // vertex id, layer 1
  int         range;   // vertex id, layer 0
};

// One edge group X of the separation C_v; "vertex" is the common range of
// its edges.
struct Group {
  std::string      name;
  int              vertex;
  std::vector<int> edges;  // edge ids, kept sorted
};

// A finite bipartite separated graph (E, C).  All edges run from layer 1
// (sources, E^{0,1}) to layer 0 (ranges, E^{0,0}); the groups at each
// layer-0 vertex partition its range fiber r^{-1}(v).
//
// Canonical order: vertices by (layer, name), edges by name; the group
// order at a vertex is declaration order (it is part of the data).
// Instances are immutable after construction / rebuild_index().
class SeparatedGraph {
 public:
  std::vector<Vertex> vertices;
  std::vector<Edge>   edges;
  std::vector<Group>  groups;  // flat, ordered by (vertex, declaration order)

  // Derived indexes, built by rebuild_index():
  std::vector<std::vector<int>> groups_at;    // vertex id -> group ids
  std::vector<int>              group_of;     // edge id -> group id (-1 if none)
  std::vector<std::vector<int>> out_edges;    // layer-1 vertex id -> s^{-1}(v)
  std::vector<std::vector<int>> in_edges;     // layer-0 vertex id -> r^{-1}(v)
  std::map<std::string, int>    vertex_index;
  std::map<std::string, int>    edge_index;

  // Sorts vertices/edges canonically, remaps ids, rebuilds the indexes and
  // checks every type invariant (bipartite, partition, unique names).
  void canonicalize();

  int vertex_id(std::string const& name) const;
  int edge_id(std::string const& name) const;

  bool operator==(SeparatedGraph const& other) const;

  // Warnings that are not errors: e.g. isolated layer-1 vertices (empty
  // s^{-1}(v)), which the constructions assume away.
  std::vector<std::string> warnings() const;
};

// A letter of the double graph \hat E: an edge of E or its formal inverse.
struct SignedEdge {
  int  edge;
  bool inv;

  SignedEdge inverse() const { return {edge, !inv}; }
  bool operator==(SignedEdge const&) const  = default;
  auto operator<=>(SignedEdge const&) const = default;  // positive < inverse
};

// Endpoints in the double graph: \hat s(e) = s(e), \hat r(e) = r(e),
// \hat s(e^{-1}) = r(e), \hat r(e^{-1}) = s(e).
int hat_source(SeparatedGraph const& g, SignedEdge s);
int hat_range(SeparatedGraph const& g, SignedEdge s);

// A word in the double graph, stored innermost-first (function order).
// letters[0] is the innermost (rightmost, first applied) letter.
using Word = std::vector<SignedEdge>;

// True iff the two-letter word "b after a" is connected and admissible:
// no e f^{-1} with e = f, no e^{-1} f with X_e = X_f.
bool pair_admissible(SeparatedGraph const& g, SignedEdge a, SignedEdge b);

// True iff w is connected in \hat E (consecutive endpoints match).
bool is_connected(SeparatedGraph const& g, Word const& w);

// Admissibility of a connected word; throws DisconnectedWord otherwise.
bool is_admissible(SeparatedGraph const& g, Word const& w);

// Concatenation q . p (p applied first) with full cancellation at the seam.
// Requires hat_range(p) == hat_source(q) when both are nonempty.
Word reduced_product(SeparatedGraph const& g, Word const& p, Word const& q);

// All admissible words from u to v of length <= maxlen, in canonical order
// (length, then lexicographic by (edge id, sign)).
std::vector<Word> paths_between(SeparatedGraph const& g, int u, int v,
                                int maxlen);

// Serialization of letters and words: `e` / `e~`; words are printed
// leftmost-letter first (outermost), i.e. reversed relative to storage.
std::string letter_to_string(SeparatedGraph const& g, SignedEdge s);
std::string word_to_string(SeparatedGraph const& g, Word const& w);
Word        parse_word(SeparatedGraph const& g, std::string const& text);

// SGF format: line-based, `# comment`, `vertex NAME layer=0|1`,
// `edge NAME SOURCE RANGE`, `group RANGE GNAME e1 e2 ...`.
SeparatedGraph load(std::string const& text);
SeparatedGraph load_file(std::string const& path);
std::string    save(SeparatedGraph const& g);

}  // namespace sepgraph

#endif  // SEPGRAPH_GRAPH_HPP_
