//
// sepgraph - bridge from two-sided binary subshifts to the lamplighter
// tower: forbidden words, hereditary saturated word sets, finite-type
// detection and quotient extraction.
//

#ifndef SEPGRAPH_WORDSHIFT_HPP_
#define SEPGRAPH_WORDSHIFT_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sepgraph/graph.hpp"
#include "sepgraph/hereditary.hpp"

namespace sepgraph {

// The base graph of the binary full shift: one layer-0 vertex v, layer-1
// vertices 0 and 1, and groups X = {a0, a1}, Y = {b0, b1}.
SeparatedGraph lamplighter_graph();

// Level n of its tower, built directly from the word dictionary: layer-0
// vertices are the 2^n binary words of length n, layer-1 vertices the
// 2^{n+1} words of length n+1 (the empty word is named "v").  At even n
// the a-edges drop the last letter and the b-edges the first; at odd n
// the roles swap.  Groups at w are Xw = {a-edges} and Yw = {b-edges}.
SeparatedGraph lamplighter_level(int n);

// The name of the vertex carrying a binary word ("v" for the empty word).
std::string word_vertex_name(std::string const& w);

// All binary words of length <= maxlen containing a block from
// `forbidden` (the hereditary closure of the forbidden set).
std::set<std::string> w_words(std::vector<std::string> const& forbidden,
                              int maxlen);

// All binary words of length <= maxlen lying in the hereditary saturated
// set H of the forbidden family: exactly the words that appear in no
// point of the subshift.  Decided exactly through the block graph of the
// finite family (recurrence analysis), which realizes the saturation of
// the W-set.  Throws InvalidWord on non-binary input.
std::set<std::string> hset_words(std::vector<std::string> const& forbidden,
                                 int maxlen);

// H cut to level n of the lamplighter tower, as vertex ids of
// lamplighter_level(n) (both layers: lengths n and n+1).
VertexIdSet forbidden_to_hset(std::vector<std::string> const& forbidden,
                              int n);

struct FiniteTypeReport {
  std::optional<int> finite_type_n;  // least certified stabilization level
  int                bound = 0;      // the N that was checked
};

// Least n <= N from which the lift chain reproduces H level by level
// (closure of the length-(m+1) slice in level m+1 gives the full level
// m+1 slice of H for every m in [n, N)); UnknownUpTo(N) otherwise.
FiniteTypeReport finite_type_detect(std::vector<std::string> const& forbidden,
                                    int N);

// (E_n/H^(n), C^n/H^(n)) for finite-type input; throws NotFiniteType
// unless the lift chain is certified to stabilize at or before n.
SeparatedGraph word_quotient(std::vector<std::string> const& forbidden, int n);

}  // namespace sepgraph

#endif  // SEPGRAPH_WORDSHIFT_HPP_
