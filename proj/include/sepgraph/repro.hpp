//
// sepgraph - the reproduction harness: one entry per acceptance criterion,
// shared between the acceptance binary and the command-line `repro` verb.
//

#ifndef SEPGRAPH_REPRO_HPP_
#define SEPGRAPH_REPRO_HPP_

#include <string>
#include <vector>

namespace sepgraph {

struct CriterionResult {
  int         id = 0;
  std::string name;
  bool        pass = false;
  std::string detail;  // counters, mismatches, reported comparisons
  double      ms = 0.0;
};

// Runs the whole table against the SGF corpus in `data_dir`.  Never
// throws: an exception inside a criterion marks it failed with the
// message in `detail`.
std::vector<CriterionResult> run_acceptance(std::string const& data_dir);

}  // namespace sepgraph

#endif  // SEPGRAPH_REPRO_HPP_
