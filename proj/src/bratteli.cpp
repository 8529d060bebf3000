//
// sepgraph - 1-graph construction, towers, monoids, Grothendieck groups.
//

#include "sepgraph/bratteli.hpp"

#include <algorithm>
#include <numeric>

namespace sepgraph {

namespace {

std::string join(std::vector<std::string> const& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += parts[i];
  }
  return out;
}

}  // namespace

OneGraphResult one_graph(SeparatedGraph const& g, int64_t budget) {
  OneGraphResult res;
  SeparatedGraph& h = res.graph;
  OneGraphNaming& nm = res.naming;

  // Predict the size: layer 0 is the old layer 1; layer 1 is one vertex
  // per tuple choosing one edge from each group of each old layer-0 vertex.
  int64_t predicted = 0;
  for (auto const& v : g.vertices) {
    if (v.layer == 1) {
      ++predicted;
    }
  }
  for (size_t u = 0; u < g.vertices.size(); ++u) {
    if (g.vertices[u].layer != 0) {
      continue;
    }
    int64_t tuples = 1;
    for (int gi : g.groups_at[u]) {
      tuples *= static_cast<int64_t>(g.groups[gi].edges.size());
      if (tuples > budget) {
        break;
      }
    }
    predicted += tuples;
    if (predicted > budget) {
      fail("SizeLimitExceeded",
           "1-graph would exceed the vertex budget of "
               + std::to_string(budget));
    }
  }

  // Old layer-1 vertices become the new layer 0, keeping their names.
  for (auto const& v : g.vertices) {
    if (v.layer == 1) {
      h.vertices.push_back({v.name, 0});
    }
  }

  // Tuple vertices and derived edges, per old layer-0 vertex in canonical
  // order; tuples are enumerated lexicographically in (group order, sorted
  // edges within each group).
  // Derived edges are grouped afterwards: C^1_v = { X(x) : x in s^{-1}(v) }
  // where X(x) collects the derived edges whose slot letter is x.
  std::map<int, std::vector<int>> edges_by_slot_letter;  // old edge id -> new edge ids
  for (size_t u = 0; u < g.vertices.size(); ++u) {
    if (g.vertices[u].layer != 0) {
      continue;
    }
    auto const& gids = g.groups_at[u];
    size_t      k    = gids.size();
    std::vector<size_t> idx(k, 0);
    bool done = false;
    while (!done) {
      std::vector<int>         tuple;  // old edge ids
      std::vector<std::string> tnames;
      for (size_t j = 0; j < k; ++j) {
        int e = g.groups[gids[j]].edges[idx[j]];
        tuple.push_back(e);
        tnames.push_back(g.edges[e].name);
      }
      std::string vname = k == 0 ? "v[@" + g.vertices[u].name + "]"
                                 : "v[" + join(tnames, '|') + "]";
      int vid = static_cast<int>(h.vertices.size());
      h.vertices.push_back({vname, 1});
      nm.tuples[vname] = {g.vertices[u].name, tnames};

      for (size_t i = 0; i < k; ++i) {
        // alpha^{x_i}(x_1,...,hat x_i,...,x_k): tuple vertex -> s(x_i).
        auto rest = tnames;
        rest[i]   = "_";
        std::string ename = "a[" + tnames[i] + "][" + join(rest, '|') + "]";
        int         eid   = static_cast<int>(h.edges.size());
        // Range: the old layer-1 vertex s(x_i), found by name later; store
        // source id now, resolve range after all vertices exist.
        h.edges.push_back({ename, vid, -1});
        // Temporarily remember the old source vertex via the symbol map.
        nm.edge_symbol[ename] = {static_cast<int>(i), tnames[i]};
        edges_by_slot_letter[tuple[i]].push_back(eid);
      }

      // Advance the product index.
      done = true;
      for (size_t j = k; j-- > 0;) {
        if (++idx[j] < g.groups[gids[j]].edges.size()) {
          done = false;
          break;
        }
        idx[j] = 0;
      }
      if (k == 0) {
        done = true;
      }
    }
  }

  // Resolve derived edge ranges: range of a[x_i][...] is s(x_i), an old
  // layer-1 vertex that kept its name in h.
  std::map<std::string, int> hvidx;
  for (size_t i = 0; i < h.vertices.size(); ++i) {
    hvidx[h.vertices[i].name] = static_cast<int>(i);
  }
  for (auto& e : h.edges) {
    std::string const& parent = nm.edge_symbol[e.name].second;
    e.range = hvidx.at(g.vertices[g.edges[g.edge_id(parent)].source].name);
  }

  // Groups: for each old layer-1 vertex v and each x in s^{-1}(v), the
  // group X[x] of all derived edges with slot letter x.
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].layer != 1) {
      continue;
    }
    for (int x : g.out_edges[v]) {
      auto it = edges_by_slot_letter.find(x);
      if (it == edges_by_slot_letter.end()) {
        continue;  // r(x) had another empty group? impossible: partitions
      }
      Group grp;
      grp.name   = "X[" + g.edges[x].name + "]";
      grp.vertex = hvidx.at(g.vertices[v].name);
      grp.edges  = it->second;
      h.groups.push_back(std::move(grp));
    }
  }

  h.canonicalize();
  return res;
}

BratteliTower tower(SeparatedGraph const& g, int n, int64_t budget) {
  BratteliTower t;
  SeparatedGraph base = g;
  base.canonicalize();
  t.levels.push_back(std::move(base));
  for (int k = 0; k < n; ++k) {
    auto res = one_graph(t.levels.back(), budget);
    t.levels.push_back(std::move(res.graph));
    t.namings.push_back(std::move(res.naming));
  }
  return t;
}

IntMat MonoidPresentation::relation_matrix() const {
  IntMat m(relations.size(), std::vector<Int>(generators.size(), 0));
  for (size_t r = 0; r < relations.size(); ++r) {
    m[r][relations[r].lhs] += 1;
    for (auto const& [gen, mult] : relations[r].rhs) {
      m[r][gen] -= mult;
    }
  }
  return m;
}

MonoidPresentation monoid_presentation(BratteliTower const& t, int n) {
  if (n < 0 || n > t.height()) {
    fail("UnknownLevel", "level " + std::to_string(n)
                             + " outside tower of height "
                             + std::to_string(t.height()));
  }
  MonoidPresentation p;
  // Generators: all vertices of F_n = levels 0..n layer-0 stacks; concretely
  // all vertices of level 0 plus the layer-1 vertices of levels 1..n (the
  // layer-0 vertices of level k >= 1 coincide with level (k-1)'s layer 1).
  // Each generator is addressed per level by name.
  std::vector<std::map<std::string, int>> gen_at_level(n + 1);
  for (int k = 0; k <= n; ++k) {
    auto const& lvl = t.levels[k];
    for (auto const& v : lvl.vertices) {
      if (k > 0 && v.layer == 0) {
        // Same vertex as level (k-1) layer 1.
        gen_at_level[k][v.name] = gen_at_level[k - 1].at(v.name);
        continue;
      }
      gen_at_level[k][v.name] = static_cast<int>(p.generators.size());
      p.generators.push_back(v.name);
    }
  }
  // Relations: one per (v, X) over every level of D^n = C^0 u ... u C^n.
  for (int k = 0; k <= n; ++k) {
    auto const& lvl = t.levels[k];
    for (auto const& grp : lvl.groups) {
      MonoidPresentation::Relation rel;
      rel.lhs = gen_at_level[k].at(lvl.vertices[grp.vertex].name);
      std::map<int, int> mult;
      for (int e : grp.edges) {
        ++mult[gen_at_level[k].at(lvl.vertices[lvl.edges[e].source].name)];
      }
      rel.rhs.assign(mult.begin(), mult.end());
      p.relations.push_back(std::move(rel));
    }
  }
  return p;
}

GrothendieckGroup grothendieck(MonoidPresentation const& p) {
  auto factors = smith_invariant_factors(p.relation_matrix());
  GrothendieckGroup g;
  g.free_rank = static_cast<int64_t>(p.generators.size())
                - static_cast<int64_t>(factors.size());
  for (auto const& f : factors) {
    if (f > 1) {
      g.torsion.push_back(f);
    }
  }
  return g;
}

}  // namespace sepgraph
