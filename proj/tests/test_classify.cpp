// Tests for the classify module: choices, Condition (L), vertex types,
// 1-connectivity, cycle classes and the simplicity classifier.

#include <algorithm>
#include <set>

#include "doctest.h"
#include "sepgraph/classify.hpp"
#include "sepgraph/hereditary.hpp"
#include "sepgraph/subshift.hpp"
#include "test_util.hpp"

using namespace sepgraph;

namespace {

std::vector<std::string> names_of(SeparatedGraph const& g,
                                  std::vector<int> const& ids) {
  std::vector<std::string> out;
  for (int v : ids) {
    out.push_back(g.vertices[v].name);
  }
  return out;
}

// Brute-force 1-connectivity: some admissible word between the vertices
// all of whose letters lie in singleton groups.  A minimal 1-path never
// repeats a vertex, so |E^0| bounds the length.
bool one_connected_oracle(SeparatedGraph const& g, int u, int v) {
  if (u == v) {
    return true;
  }
  for (auto const& w :
       paths_between(g, u, v, static_cast<int>(g.vertices.size()))) {
    bool ones = true;
    for (auto l : w) {
      ones = ones && g.groups[g.group_of[l.edge]].edges.size() == 1;
    }
    if (ones) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("admits_choice on the corpus") {
  for (auto const* name : {"e23.sgf", "e12.sgf", "ex9-2.sgf", "ex9-3.sgf"}) {
    CAPTURE(name);
    auto g = load_data(name);
    auto c = admits_choice(g);
    // Both group sizes at the layer-0 vertex are >= 2 in e23/ex9-*; in e12
    // the beta-letter provides the alternative for every start.
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      CHECK(c[v]);
    }
  }
  for (auto const* name : {"twocycle.sgf", "singleedge.sgf",
                           "twocycles-rank2.sgf"}) {
    CAPTURE(name);
    auto g = load_data(name);
    auto c = admits_choice(g);
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      CHECK_FALSE(c[v]);  // every group is a singleton
    }
  }
}

TEST_CASE("choice_states is closed under admissible predecessors") {
  auto rng = test_rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    auto g     = random_graph(rng, 3, 6);
    auto reach = choice_states(g);
    int  n     = 2 * static_cast<int>(g.edges.size());
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        SignedEdge a{s / 2, s % 2 == 1}, b{t / 2, t % 2 == 1};
        if (pair_admissible(g, a, b) && reach[t]) {
          CHECK(reach[s]);
        }
      }
    }
  }
}

TEST_CASE("condition_L verdicts and witness") {
  CHECK(condition_L(load_data("e23.sgf")).holds);
  CHECK(condition_L(load_data("singleedge.sgf")).holds);  // no cycles

  auto g   = load_data("twocycle.sgf");
  auto rep = condition_L(g);
  REQUIRE_FALSE(rep.holds);
  // The witness is a simple cycle at a vertex without choices.
  REQUIRE_FALSE(rep.cycle.empty());
  CHECK(is_admissible(g, rep.cycle));
  int base = g.vertex_id(rep.base);
  CHECK(hat_source(g, rep.cycle.front()) == base);
  CHECK(hat_range(g, rep.cycle.back()) == base);
  CHECK(pair_admissible(g, rep.cycle.back(), rep.cycle.front()));
  CHECK_FALSE(admits_choice(g)[base]);
}

TEST_CASE("vertex_types on the corpus") {
  auto e23 = load_data("e23.sgf");
  auto t23 = vertex_types(e23);
  REQUIRE(t23.violations.size() == 1);
  CHECK(e23.vertices[t23.violations[0]].name == "w");
  CHECK(t23.type.empty());
  CHECK_FALSE(t23.all_type_a());

  auto e12 = load_data("e12.sgf");
  auto t12 = vertex_types(e12);
  REQUIRE(t12.violations.empty());
  int w = e12.vertex_id("w");
  REQUIRE(t12.type.count(w));
  CHECK(t12.type.at(w) == VertexType::A);
  // X^w is the two-element alpha group.
  REQUIRE(t12.distinguished.count(w));
  CHECK(e12.groups[t12.distinguished.at(w)].name == "X");
  CHECK(t12.all_type_a());

  // Both singleton groups at w share the source v, so w is of type B2.
  auto two = load_data("twocycle.sgf");
  auto tt  = vertex_types(two);
  CHECK(tt.type.at(two.vertex_id("w")) == VertexType::B2);

  // Distinct sources give type B1: the level-1 graph of the two-cycle has
  // one tuple vertex feeding two singleton groups... which again shares a
  // source; build a B1 example directly instead.
  auto b1g = load(
      "vertex w layer=0\nvertex u1 layer=1\nvertex u2 layer=1\n"
      "edge e u1 w\nedge f u2 w\ngroup w Ge e\ngroup w Gf f\n");
  CHECK(vertex_types(b1g).type.at(b1g.vertex_id("w")) == VertexType::B1);
}

TEST_CASE("one_components: examples and BFS oracle") {
  auto e23 = load_data("e23.sgf");
  auto c23 = one_components(e23);
  CHECK(c23.size() == e23.vertices.size());  // no singleton groups

  auto e12 = load_data("e12.sgf");
  auto c12 = one_components(e12);
  REQUIRE(c12.size() == 1);
  CHECK(names_of(e12, c12[0]) == std::vector<std::string>{"w", "v"});

  auto rng = test_rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    auto g     = random_graph(rng, 3, 6);
    auto comps = one_components(g);
    // Partition of the vertex set.
    std::set<int> all;
    for (auto const& c : comps) {
      for (int v : c) {
        CHECK(all.insert(v).second);
      }
    }
    CHECK(all.size() == g.vertices.size());
    // Same class iff the path oracle connects them (this also exercises
    // transitivity through reduced products).
    std::vector<int> cls(g.vertices.size());
    for (size_t i = 0; i < comps.size(); ++i) {
      for (int v : comps[i]) {
        cls[v] = static_cast<int>(i);
      }
    }
    for (size_t u = 0; u < g.vertices.size(); ++u) {
      for (size_t v = u + 1; v < g.vertices.size(); ++v) {
        CHECK((cls[u] == cls[v])
              == one_connected_oracle(g, static_cast<int>(u),
                                      static_cast<int>(v)));
      }
    }
  }
}

TEST_CASE("simple_closed_paths: counts and well-formedness") {
  auto two = load_data("twocycle.sgf");
  for (auto const* vn : {"v", "w"}) {
    auto paths = simple_closed_paths(two, two.vertex_id(vn));
    CAPTURE(vn);
    CHECK(paths.size() == 1);
  }

  auto r2 = load_data("twocycles-rank2.sgf");
  // Two independent cycles at w; at v1/v2 the local cycle plus the two
  // conjugates of the far cycle through e/f each count once.
  CHECK(simple_closed_paths(r2, r2.vertex_id("w")).size() == 2);
  CHECK(simple_closed_paths(r2, r2.vertex_id("v1")).size() == 3);
  CHECK(simple_closed_paths(r2, r2.vertex_id("v2")).size() == 3);

  for (auto const* vn : {"w", "v1"}) {
    int v = r2.vertex_id(vn);
    for (auto const& w : simple_closed_paths(r2, v)) {
      CHECK(is_admissible(r2, w));
      CHECK(hat_source(r2, w.front()) == v);
      CHECK(hat_range(r2, w.back()) == v);
      CHECK(w == std::min(w, word_inverse(w)));  // inversion-normalized
    }
  }

  CHECK_THROWS_WITH_AS(simple_closed_paths(r2, r2.vertex_id("v1"), 1),
                       doctest::Contains("SizeLimitExceeded"), Error);
}

TEST_CASE("cycle_classes on the corpus") {
  auto two = load_data("twocycle.sgf");
  auto cc  = cycle_classes(two);
  REQUIRE(cc.size() == 1);
  CHECK(cc[0].vertices == std::vector<std::string>{"v", "w"});
  CHECK(is_admissible(two, cc[0].cycle));
  CHECK(pair_admissible(two, cc[0].cycle.back(), cc[0].cycle.front()));
  // Every member lies on the representative cycle.
  for (auto const& m : cc[0].vertices) {
    bool on = false;
    for (auto l : cc[0].cycle) {
      on = on || hat_source(two, l) == two.vertex_id(m);
    }
    CHECK(on);
  }

  CHECK(cycle_classes(load_data("e23.sgf")).empty());  // choices everywhere
  // Rank 2 at w excludes it, and the conjugated far cycles exclude v1/v2.
  CHECK(cycle_classes(load_data("twocycles-rank2.sgf")).empty());
}

TEST_CASE("oriented_hsets sanity") {
  OrientedGraph g;
  g.vertices = {"u", "v"};
  g.arcs     = {{"e", 0, 1}};
  CHECK(oriented_hsets(g).size() == 2);  // only trivial

  OrientedGraph h;
  h.vertices = {"u", "v", "x"};
  h.arcs     = {{"e", 0, 1}, {"f", 1, 0}};  // x isolated from the cycle
  auto sets = oriented_hsets(h);
  // {x}, {u,v} and the trivial pair.
  CHECK(sets.size() == 4);
  CHECK(std::count(sets.begin(), sets.end(), std::set<int>{2}) == 1);
  CHECK(std::count(sets.begin(), sets.end(), std::set<int>{0, 1}) == 1);
}

TEST_CASE("classify: E(2,3) is not simple at level 1") {
  auto g = load_data("e23.sgf");
  auto v = classify_simplicity(g);
  REQUIRE(v.kind == SimplicityVerdict::Kind::NotSimple);
  CHECK(v.level == 1);

  // The witness re-verifies: nontrivial, hereditary, saturated, maximal.
  auto g1  = one_graph(g).graph;
  auto lat = enumerate_hsets(g1);
  auto verify_maximal = [&](std::vector<std::string> const& names) {
    VertexIdSet h;
    for (auto const& n : names) {
      h.insert(g1.vertex_id(n));
    }
    CHECK(!h.empty());
    CHECK(h.size() < g1.vertices.size());
    CHECK(is_hereditary(g1, h));
    CHECK(is_saturated(g1, h));
    // Maximal proper: its only cover in the lattice is the full set.
    auto it = std::find(lat.sets.begin(), lat.sets.end(), h);
    REQUIRE(it != lat.sets.end());
    int idx = static_cast<int>(it - lat.sets.begin());
    for (auto const& [lo, hi] : lat.hasse) {
      if (lo == idx) {
        CHECK(lat.sets[hi].size() == g1.vertices.size());
      }
    }
  };
  verify_maximal(v.witness);
  // The documented maximal set (one tuple per alpha-edge) is equally valid.
  verify_maximal({"v[a2|b1]", "v[a3|b1]", "v[a1|b2]"});
}

TEST_CASE("classify: two-edge cycle graph is a free-group corner") {
  auto v = classify_simplicity(load_data("twocycle.sgf"));
  REQUIRE(v.kind == SimplicityVerdict::Kind::FreeGroup);
  CHECK(v.rank == 1);
  CHECK(v.base == "v");  // the surviving layer-0 vertex of the level graph
}

TEST_CASE("classify: E(1,2) is a graph algebra") {
  auto g = load_data("e12.sgf");
  auto v = classify_simplicity(g);
  REQUIRE(v.kind == SimplicityVerdict::Kind::GraphAlgebra);
  auto g1 = one_graph(g).graph;
  CHECK(v.level == 1);
  CHECK(v.oriented.arcs.size() == g1.edges.size());
  CHECK(v.oriented.vertices.size() == g1.vertices.size());
  // The orientation is a bijection on edge names, and the oriented graph
  // has a trivial lattice.
  std::set<std::string> arc_names;
  for (auto const& a : v.oriented.arcs) {
    arc_names.insert(a.name);
    CHECK(g1.edge_index.count(a.name));
  }
  CHECK(arc_names.size() == g1.edges.size());
  CHECK(oriented_hsets(v.oriented).size() == 2);
  // Exactly one inverted arc per layer-1 vertex: arcs whose source is a
  // layer-0 vertex of the level graph.
  std::map<std::string, int> inverted_per_target;
  for (auto const& a : v.oriented.arcs) {
    if (g1.vertices[g1.vertex_id(v.oriented.vertices[a.source])].layer == 0) {
      ++inverted_per_target[v.oriented.vertices[a.target]];
    }
  }
  for (auto const& vx : g1.vertices) {
    if (vx.layer == 1) {
      CHECK(inverted_per_target[vx.name] == 1);
    }
  }
}

TEST_CASE("classify: lamplighter has ideals at level 0") {
  auto v = classify_simplicity(load_data("lamplighter.sgf"));
  REQUIRE(v.kind == SimplicityVerdict::Kind::NotSimple);
  CHECK(v.level == 0);
  CHECK(v.witness.size() == 1);
}

TEST_CASE("classify: rank-2 graph reports the closed-path count") {
  auto v = classify_simplicity(load_data("twocycles-rank2.sgf"));
  REQUIRE(v.kind == SimplicityVerdict::Kind::FreeGroup);
  CHECK(v.rank == 3);
  CHECK(v.base == "v1");
}

TEST_CASE("classify respects the level budget") {
  CHECK_THROWS_WITH_AS(classify_simplicity(load_data("e23.sgf"), 6, 4),
                       doctest::Contains("SizeLimitExceeded"), Error);
}
