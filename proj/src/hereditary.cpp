//
// sepgraph - hereditary C-saturated machinery.
//

#include "sepgraph/hereditary.hpp"

#include <algorithm>
#include <deque>

namespace sepgraph {

bool is_hereditary(SeparatedGraph const& g, VertexIdSet const& h) {
  for (auto const& e : g.edges) {
    if (h.count(e.range) && !h.count(e.source)) {
      return false;
    }
  }
  return true;
}

bool is_saturated(SeparatedGraph const& g, VertexIdSet const& h) {
  for (auto const& grp : g.groups) {
    if (h.count(grp.vertex)) {
      continue;
    }
    bool all_in = true;
    for (int e : grp.edges) {
      if (!h.count(g.edges[e].source)) {
        all_in = false;
        break;
      }
    }
    if (all_in) {
      return false;
    }
  }
  return true;
}

VertexIdSet closure_hs(SeparatedGraph const& g, VertexIdSet const& seed) {
  VertexIdSet h = seed;
  bool        changed = true;
  while (changed) {
    changed = false;
    for (auto const& e : g.edges) {
      if (h.count(e.range) && h.insert(e.source).second) {
        changed = true;
      }
    }
    for (auto const& grp : g.groups) {
      if (h.count(grp.vertex)) {
        continue;
      }
      bool all_in = true;
      for (int e : grp.edges) {
        if (!h.count(g.edges[e].source)) {
          all_in = false;
          break;
        }
      }
      if (all_in) {
        h.insert(grp.vertex);
        changed = true;
      }
    }
  }
  return h;
}

HsetLattice enumerate_hsets(SeparatedGraph const& g, int64_t cap) {
  // The family is a closure system; generate it by saturating under
  // "add one vertex and close" starting from the closure of the empty set.
  std::set<VertexIdSet>   seen;
  std::deque<VertexIdSet> queue;
  auto push = [&](VertexIdSet s) {
    if (seen.insert(s).second) {
      if (static_cast<int64_t>(seen.size()) > cap) {
        fail("SizeLimitExceeded",
             "more than " + std::to_string(cap)
                 + " hereditary C-saturated sets");
      }
      queue.push_back(std::move(s));
    }
  };
  push(closure_hs(g, {}));
  while (!queue.empty()) {
    VertexIdSet h = std::move(queue.front());
    queue.pop_front();
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      if (!h.count(static_cast<int>(v))) {
        VertexIdSet s = h;
        s.insert(static_cast<int>(v));
        push(closure_hs(g, s));
      }
    }
  }

  HsetLattice lat;
  lat.sets.assign(seen.begin(), seen.end());
  std::sort(lat.sets.begin(), lat.sets.end(),
            [](VertexIdSet const& a, VertexIdSet const& b) {
              if (a.size() != b.size()) {
                return a.size() < b.size();
              }
              return a < b;
            });
  // Hasse diagram: covering pairs of the inclusion order.
  auto subset = [](VertexIdSet const& a, VertexIdSet const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (size_t i = 0; i < lat.sets.size(); ++i) {
    for (size_t j = 0; j < lat.sets.size(); ++j) {
      if (i == j || lat.sets[i].size() >= lat.sets[j].size()
          || !subset(lat.sets[i], lat.sets[j])) {
        continue;
      }
      bool covering = true;
      for (size_t k = 0; covering && k < lat.sets.size(); ++k) {
        if (k != i && k != j && subset(lat.sets[i], lat.sets[k])
            && subset(lat.sets[k], lat.sets[j])
            && lat.sets[k].size() > lat.sets[i].size()
            && lat.sets[k].size() < lat.sets[j].size()) {
          covering = false;
        }
      }
      if (covering) {
        lat.hasse.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return lat;
}

VertexIdSet lift_one_level(SeparatedGraph const& g, SeparatedGraph const& next,
                           OneGraphNaming const& nm, VertexIdSet const& h) {
  if (!is_hereditary(g, h)) {
    fail("InputNotHereditary", "set is not hereditary");
  }
  if (!is_saturated(g, h)) {
    fail("InputNotSaturated", "set is not C-saturated");
  }
  VertexIdSet out;
  for (size_t v = 0; v < next.vertices.size(); ++v) {
    std::string const& name = next.vertices[v].name;
    if (next.vertices[v].layer == 0) {
      // Old layer-1 vertex of the same name.
      if (h.count(g.vertex_id(name))) {
        out.insert(static_cast<int>(v));
      }
    } else {
      // Tuple vertex: in H_1 iff some slot edge is sourced in H.  An empty
      // tuple (layer-0 vertex with no groups) has no slots; it goes in iff
      // its parent does, which for nonempty tuples follows from heredity.
      auto const& [parent, tuple] = nm.tuples.at(name);
      if (h.count(g.vertex_id(parent))) {
        out.insert(static_cast<int>(v));
        continue;
      }
      for (auto const& xname : tuple) {
        if (h.count(g.edges[g.edge_id(xname)].source)) {
          out.insert(static_cast<int>(v));
          break;
        }
      }
    }
  }
  // The lemma's conclusion, asserted.
  if (!is_hereditary(next, out) || !is_saturated(next, out)) {
    fail("LiftNotClosed", "lifted set fails the closure checkers");
  }
  return out;
}

SeparatedGraph quotient_graph(SeparatedGraph const& g, VertexIdSet const& h) {
  if (!is_hereditary(g, h)) {
    fail("InputNotHereditary", "set is not hereditary");
  }
  if (!is_saturated(g, h)) {
    fail("InputNotSaturated", "set is not C-saturated");
  }
  SeparatedGraph q;
  std::vector<int> vmap(g.vertices.size(), -1);
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (!h.count(static_cast<int>(v))) {
      vmap[v] = static_cast<int>(q.vertices.size());
      q.vertices.push_back(g.vertices[v]);
    }
  }
  std::vector<int> emap(g.edges.size(), -1);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (h.count(g.edges[e].source)) {
      continue;  // heredity guarantees the range is kept too
    }
    emap[e] = static_cast<int>(q.edges.size());
    q.edges.push_back({g.edges[e].name, vmap[g.edges[e].source],
                       vmap[g.edges[e].range]});
  }
  for (auto const& grp : g.groups) {
    if (vmap[grp.vertex] == -1) {
      continue;
    }
    Group ng;
    ng.name   = grp.name;
    ng.vertex = vmap[grp.vertex];
    for (int e : grp.edges) {
      if (emap[e] != -1) {
        ng.edges.push_back(emap[e]);
      }
    }
    // Saturation guarantees X/H is nonempty.
    q.groups.push_back(std::move(ng));
  }
  q.canonicalize();
  return q;
}

TowerSet tower_closure(BratteliTower const& t, TowerSet const& seed) {
  size_t   n = t.levels.size();
  TowerSet h;
  h.per_level.resize(n);
  for (size_t k = 0; k < n && k < seed.per_level.size(); ++k) {
    h.per_level[k] = seed.per_level[k];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < n; ++k) {
      VertexIdSet closed = closure_hs(t.levels[k], h.per_level[k]);
      if (closed != h.per_level[k]) {
        h.per_level[k] = std::move(closed);
        changed        = true;
      }
      // Sync the shared layer with level k+1 (same vertex names).
      if (k + 1 < n) {
        auto const& lo = t.levels[k];
        auto const& hi = t.levels[k + 1];
        for (size_t v = 0; v < lo.vertices.size(); ++v) {
          if (lo.vertices[v].layer != 1) {
            continue;
          }
          int  vid_hi = hi.vertex_id(lo.vertices[v].name);
          bool in_lo  = h.per_level[k].count(static_cast<int>(v)) > 0;
          bool in_hi  = h.per_level[k + 1].count(vid_hi) > 0;
          if (in_lo && !in_hi) {
            h.per_level[k + 1].insert(vid_hi);
            changed = true;
          } else if (in_hi && !in_lo) {
            h.per_level[k].insert(static_cast<int>(v));
            changed = true;
          }
        }
      }
    }
  }
  return h;
}

TowerIdealReport tower_ideal(BratteliTower const& t, TowerSet const& given,
                             int bound_n) {
  // Multi-level input must already be lift-consistent.
  for (size_t k = 0; k + 1 < given.per_level.size()
                     && k + 1 < t.levels.size();
       ++k) {
    if (given.per_level[k].empty() || given.per_level[k + 1].empty()) {
      continue;
    }
    VertexIdSet lifted = lift_one_level(t.levels[k], t.levels[k + 1],
                                        t.namings[k], given.per_level[k]);
    if (!std::includes(given.per_level[k + 1].begin(),
                       given.per_level[k + 1].end(), lifted.begin(),
                       lifted.end())) {
      fail("InconsistentLevels",
           "H^(k+1) does not contain the lift of H^(k) at level "
               + std::to_string(k));
    }
  }

  TowerIdealReport rep;
  rep.bound  = bound_n;
  rep.spread = tower_closure(t, given);

  // Stabilization: H is generated by its restriction to levels <= n iff
  // every later level is the lift of the previous one.
  int height = t.height();
  std::vector<bool> chain_ok(height + 1, true);  // chain_ok[m]: level m+1 = lift(level m)
  for (int m = 0; m < height; ++m) {
    VertexIdSet lifted = lift_one_level(t.levels[m], t.levels[m + 1],
                                        t.namings[m], rep.spread.per_level[m]);
    chain_ok[m] = lifted == rep.spread.per_level[m + 1];
  }
  // A candidate n needs at least one verified lift step, so n < height.
  for (int n = 0; n <= std::min(bound_n, height - 1); ++n) {
    bool ok = true;
    for (int m = n; m < height; ++m) {
      ok = ok && chain_ok[m];
    }
    if (ok) {
      rep.finite_type_n = n;
      break;
    }
  }

  for (int k = 0; k <= height; ++k) {
    rep.quotients.push_back(
        quotient_graph(t.levels[k], rep.spread.per_level[k]));
  }
  return rep;
}

}  // namespace sepgraph
