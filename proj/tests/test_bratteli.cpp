// Tests for the bratteli module: 1-graphs, towers, monoids, Grothendieck
// groups, with an independent minor-gcd oracle for the Smith normal form.

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "sepgraph/bratteli.hpp"
#include "test_util.hpp"

using namespace sepgraph;

namespace {

int count_layer(SeparatedGraph const& g, int layer) {
  int n = 0;
  for (auto const& v : g.vertices) {
    n += v.layer == layer;
  }
  return n;
}

// Independent SNF oracle: d_k = gcd of all k x k minors, invariant factor
// f_k = d_k / d_{k-1}.  Determinants by fraction-free Bareiss elimination.
Int bareiss_det(IntMat m) {
  size_t n = m.size();
  if (n == 0) {
    return 1;
  }
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) {
        ++piv;
      }
      if (piv == n) {
        return 0;
      }
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<Int> minor_gcd_factors(IntMat const& a) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<Int> factors;
  Int              prev = 1;
  for (size_t k = 1; k <= std::min(rows, cols); ++k) {
    // gcd over all k x k minors.
    std::vector<size_t> ri(k), ci(k);
    std::iota(ri.begin(), ri.end(), 0);
    Int d = 0;
    auto next_subset = [](std::vector<size_t>& s, size_t n) {
      size_t k = s.size(), i = k;
      while (i-- > 0) {
        if (s[i] + (k - i) < n) {
          ++s[i];
          for (size_t j = i + 1; j < k; ++j) {
            s[j] = s[j - 1] + 1;
          }
          return true;
        }
      }
      return false;
    };
    bool more_r = true;
    while (more_r) {
      std::iota(ci.begin(), ci.end(), 0);
      bool more_c = true;
      while (more_c) {
        IntMat sub(k, std::vector<Int>(k));
        for (size_t i = 0; i < k; ++i) {
          for (size_t j = 0; j < k; ++j) {
            sub[i][j] = a[ri[i]][ci[j]];
          }
        }
        d = gcd(d, bareiss_det(sub));
        more_c = next_subset(ci, cols);
      }
      more_r = next_subset(ri, rows);
    }
    if (d == 0) {
      break;  // rank is k-1
    }
    factors.push_back(d / prev);
    prev = d;
  }
  return factors;
}

}  // namespace

TEST_CASE("one_graph of E(2,3): the level-1 shape") {
  auto res = one_graph(load_data("e23.sgf"));
  auto const& h = res.graph;
  CHECK(count_layer(h, 0) == 1);
  CHECK(count_layer(h, 1) == 6);
  CHECK(h.edges.size() == 12);
  REQUIRE(h.groups.size() == 5);
  std::vector<size_t> sizes;
  for (auto const& grp : h.groups) {
    sizes.push_back(grp.edges.size());
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{2, 2, 2, 3, 3});
}

TEST_CASE("one_graph of a single edge") {
  auto res = one_graph(load_data("singleedge.sgf"));
  auto const& h = res.graph;
  CHECK(h.vertices.size() == 2);
  CHECK(h.edges.size() == 1);
  REQUIRE(h.groups.size() == 1);
  CHECK(h.groups[0].edges.size() == 1);
  CHECK(res.naming.tuples.count("v[e]") == 1);
}

TEST_CASE("one_graph of the lamplighter") {
  auto res = one_graph(load_data("lamplighter.sgf"));
  CHECK(count_layer(res.graph, 0) == 2);
  CHECK(count_layer(res.graph, 1) == 4);
  CHECK(res.graph.edges.size() == 8);
}

TEST_CASE("tower of the lamplighter: layer-0 sizes double") {
  auto t = tower(load_data("lamplighter.sgf"), 3);
  std::vector<int> sizes;
  for (auto const& lvl : t.levels) {
    sizes.push_back(count_layer(lvl, 0));
  }
  CHECK(sizes == std::vector<int>{1, 2, 4, 8});
}

TEST_CASE("tower(g, 0) is just [g]") {
  auto g = load_data("e23.sgf");
  auto t = tower(g, 0);
  REQUIRE(t.levels.size() == 1);
  CHECK(t.levels[0] == g);
}

TEST_CASE("tower budget raises SizeLimitExceeded") {
  CHECK_THROWS_WITH_AS(tower(load_data("lamplighter.sgf"), 6, 50),
                       doctest::Contains("SizeLimitExceeded"), Error);
}

TEST_CASE("level-1 closed-form counts and distinct sources, random graphs") {
  auto rng = test_rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    auto g   = random_graph(rng, 3, 6);
    auto res = one_graph(g);
    // Closed forms: |E_1^{0,1}| = sum_u prod_j |X_j^u| and
    // |E_1^1| = sum_u sum_i |X_i^u| * prod_{j != i} |X_j^u| (one derived
    // edge per tuple and slot).
    int64_t want_tuples = 0, want_edges = 0;
    for (size_t u = 0; u < g.vertices.size(); ++u) {
      if (g.vertices[u].layer != 0) {
        continue;
      }
      int64_t prod = 1;
      for (int gi : g.groups_at[u]) {
        prod *= static_cast<int64_t>(g.groups[gi].edges.size());
      }
      want_tuples += prod;
      want_edges += prod * static_cast<int64_t>(g.groups_at[u].size());
    }
    CHECK(count_layer(res.graph, 1) == want_tuples);
    CHECK(static_cast<int64_t>(res.graph.edges.size()) == want_edges);
    // Distinct sources within every group at level >= 1.
    for (auto const& grp : res.graph.groups) {
      std::vector<int> srcs;
      for (int e : grp.edges) {
        srcs.push_back(res.graph.edges[e].source);
      }
      std::sort(srcs.begin(), srcs.end());
      CHECK(std::adjacent_find(srcs.begin(), srcs.end()) == srcs.end());
    }
  }
}

TEST_CASE("monoid presentation of E(2,3) at level 0") {
  auto t = tower(load_data("e23.sgf"), 0);
  auto p = monoid_presentation(t, 0);
  REQUIRE(p.generators.size() == 2);
  CHECK(p.generators[0] == "w");  // canonical: layer 0 first
  CHECK(p.generators[1] == "v");
  REQUIRE(p.relations.size() == 2);
  auto m = p.relation_matrix();
  CHECK(m[0] == std::vector<Int>{1, -3});  // a_w = 3 a_v
  CHECK(m[1] == std::vector<Int>{1, -2});  // a_w = 2 a_v
}

TEST_CASE("monoid presentation edge cases") {
  auto g = load("vertex u layer=0\n");
  auto p = monoid_presentation(tower(g, 0), 0);
  CHECK(p.generators.size() == 1);
  CHECK(p.relations.empty());
  CHECK(grothendieck(p).free_rank == 1);

  // Lamplighter F_1: 7 generators (3 + 4 tuples), one relation per group
  // of levels 0 and 1.
  auto t = tower(load_data("lamplighter.sgf"), 1);
  auto q = monoid_presentation(t, 1);
  CHECK(q.generators.size() == 7);
  size_t want = t.levels[0].groups.size() + t.levels[1].groups.size();
  CHECK(q.relations.size() == want);
}

TEST_CASE("grothendieck of E(2,3) level 0 is trivial") {
  auto p = monoid_presentation(tower(load_data("e23.sgf"), 0), 0);
  auto gg = grothendieck(p);
  CHECK(gg.free_rank == 0);
  CHECK(gg.torsion.empty());
}

TEST_CASE("SNF agrees with the minor-gcd oracle on random matrices") {
  auto rng = test_rng(23);
  std::uniform_int_distribution<int> dim(1, 6), val(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    size_t r = dim(rng), c = dim(rng);
    IntMat m(r, std::vector<Int>(c));
    for (auto& row : m) {
      for (auto& x : row) {
        x = val(rng);
      }
    }
    auto fast = smith_invariant_factors(m);
    auto slow = minor_gcd_factors(m);
    CHECK(fast == slow);
  }
}

TEST_CASE("grothendieck invariant under row ops and permutations") {
  auto rng = test_rng(29);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    IntMat m(4, std::vector<Int>(5));
    for (auto& row : m) {
      for (auto& x : row) {
        x = val(rng);
      }
    }
    auto base = smith_invariant_factors(m);
    // Random row operation and a swap.
    IntMat m2 = m;
    for (size_t j = 0; j < m2[0].size(); ++j) {
      m2[1][j] += 2 * m2[3][j];
    }
    std::swap(m2[0], m2[2]);
    CHECK(smith_invariant_factors(m2) == base);
  }
}

TEST_CASE("trivially separated graphs: level-stable Grothendieck data") {
  auto rng = test_rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    // Random bipartite graph with the trivial separation: one group per
    // nonempty range fiber (the non-separated case, L = L^{ab}).
    auto g = trim_isolated(random_graph(rng, 3, 4));
    if (g.edges.empty()) {
      continue;
    }
    SeparatedGraph ns = g;
    ns.groups.clear();
    for (size_t v = 0; v < ns.vertices.size(); ++v) {
      if (ns.vertices[v].layer != 0 || g.in_edges[v].empty()) {
        continue;
      }
      ns.groups.push_back({"G" + std::to_string(v), static_cast<int>(v),
                           g.in_edges[v]});
    }
    ns.canonicalize();
    auto t = tower(ns, 2);
    auto g0 = grothendieck(monoid_presentation(t, 0));
    auto g1 = grothendieck(monoid_presentation(t, 1));
    auto g2 = grothendieck(monoid_presentation(t, 2));
    CHECK(g0.free_rank == g1.free_rank);
    CHECK(g1.free_rank == g2.free_rank);
    CHECK(g0.torsion == g1.torsion);
    CHECK(g1.torsion == g2.torsion);
  }
}
