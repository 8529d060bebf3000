//
// sepgraph - Smith normal form over the integers, exact arithmetic.
//

#ifndef SEPGRAPH_SNF_HPP_
#define SEPGRAPH_SNF_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace sepgraph {

using Int    = boost::multiprecision::cpp_int;
using IntMat = std::vector<std::vector<Int>>;

// The nonzero diagonal of the Smith normal form of a (not necessarily
// square) integer matrix: positive invariant factors d_1 | d_2 | ... | d_r
// where r is the rank.  Entries can grow quickly, hence cpp_int.
std::vector<Int> smith_invariant_factors(IntMat a);

}  // namespace sepgraph

#endif  // SEPGRAPH_SNF_HPP_
