//
// sepgraph - Condition (L), vertex typing, 1-connectivity, cycle classes
// and the simplicity dichotomy classifier.
//

#include "sepgraph/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "sepgraph/hereditary.hpp"
#include "sepgraph/subshift.hpp"

namespace sepgraph {

namespace {

SignedEdge state_of(int id) { return {id / 2, id % 2 == 1}; }

// Visit the simple cycles based at v: nonempty closed admissible words with
// interior vertices distinct and distinct from v, whose seam is admissible
// (so the word squared is again a path).  Stops early once the callback
// returns false.
void for_each_simple_cycle(SeparatedGraph const&                g,
                           int                                  v,
                           std::function<bool(Word const&)> const& cb) {
  int  nstates = 2 * static_cast<int>(g.edges.size());
  Word path;
  std::vector<bool> visited(g.vertices.size(), false);
  bool stop = false;

  std::function<void(int)> grow = [&](int cur) {
    if (stop) {
      return;
    }
    for (int s = 0; s < nstates && !stop; ++s) {
      SignedEdge l = state_of(s);
      if (hat_source(g, l) != cur) {
        continue;
      }
      if (!path.empty() && !pair_admissible(g, path.back(), l)) {
        continue;
      }
      int to = hat_range(g, l);
      if (to == v) {
        path.push_back(l);
        if (pair_admissible(g, path.back(), path.front())) {
          stop = !cb(path);
        }
        path.pop_back();
      } else if (!visited[to]) {
        visited[to] = true;
        path.push_back(l);
        grow(to);
        path.pop_back();
        visited[to] = false;
      }
    }
  };
  grow(v);
}

Word cyclic_normal_form(Word const& w) {
  Word best = w;
  for (Word cand : {w, word_inverse(w)}) {
    for (size_t k = 0; k < cand.size(); ++k) {
      std::rotate(cand.begin(), cand.begin() + 1, cand.end());
      best = std::min(best, cand);
    }
  }
  return best;
}

}  // namespace

std::vector<bool> choice_states(SeparatedGraph const& g) {
  int nstates = 2 * static_cast<int>(g.edges.size());
  std::vector<bool> reach(nstates, false);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    for (int gid : g.groups_at[g.edges[e].range]) {
      if (gid != g.group_of[e] && g.groups[gid].edges.size() >= 2) {
        reach[2 * e] = true;
        break;
      }
    }
  }
  // A choice path may continue through any admissible successor, so close
  // backwards under the step relation.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < nstates; ++s) {
      if (reach[s]) {
        continue;
      }
      for (int t = 0; t < nstates; ++t) {
        if (reach[t] && pair_admissible(g, state_of(s), state_of(t))) {
          reach[s] = true;
          changed  = true;
          break;
        }
      }
    }
  }
  return reach;
}

std::vector<bool> admits_choice(SeparatedGraph const& g) {
  auto reach = choice_states(g);
  std::vector<bool> out(g.vertices.size(), false);
  for (size_t s = 0; s < reach.size(); ++s) {
    if (reach[s]) {
      out[hat_source(g, state_of(static_cast<int>(s)))] = true;
    }
  }
  return out;
}

ConditionLReport condition_L(SeparatedGraph const& g) {
  ConditionLReport rep;
  auto choice = admits_choice(g);
  for (size_t v = 0; v < g.vertices.size() && rep.holds; ++v) {
    if (choice[v]) {
      continue;
    }
    for_each_simple_cycle(g, static_cast<int>(v), [&](Word const& w) {
      rep.holds = false;
      rep.base  = g.vertices[v].name;
      rep.cycle = w;
      return false;
    });
  }
  return rep;
}

bool VertexTypeMap::all_type_a() const {
  if (!violations.empty()) {
    return false;
  }
  for (auto const& [v, t] : type) {
    if (t != VertexType::A) {
      return false;
    }
  }
  return true;
}

VertexTypeMap vertex_types(SeparatedGraph const& g) {
  VertexTypeMap out;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].layer != 0) {
      continue;
    }
    std::vector<int> big;
    for (int gid : g.groups_at[v]) {
      if (g.groups[gid].edges.size() > 1) {
        big.push_back(gid);
      }
    }
    if (big.size() > 1) {
      out.violations.push_back(static_cast<int>(v));
      continue;
    }
    if (big.size() == 1) {
      out.type[static_cast<int>(v)]          = VertexType::A;
      out.distinguished[static_cast<int>(v)] = big[0];
      continue;
    }
    // All groups are singletons; B2 iff two of them share a source.
    std::map<int, int> per_source;
    bool               b2 = false;
    for (int gid : g.groups_at[v]) {
      int w = g.edges[g.groups[gid].edges[0]].source;
      if (++per_source[w] >= 2) {
        b2 = true;
      }
    }
    out.type[static_cast<int>(v)] = b2 ? VertexType::B2 : VertexType::B1;
  }
  return out;
}

std::vector<std::vector<int>> one_components(SeparatedGraph const& g) {
  std::vector<int> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (g.groups[g.group_of[e]].edges.size() == 1) {
      parent[find(g.edges[e].source)] = find(g.edges[e].range);
    }
  }
  std::map<int, std::vector<int>> by_root;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    by_root[find(static_cast<int>(v))].push_back(static_cast<int>(v));
  }
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : by_root) {
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> simple_closed_paths(SeparatedGraph const& g, int v,
                                      int64_t cap) {
  if (v < 0 || v >= static_cast<int>(g.vertices.size())) {
    fail("UnknownVertex", "vertex id out of range");
  }
  std::set<Word> out;
  int  nstates = 2 * static_cast<int>(g.edges.size());
  Word gamma;
  std::vector<bool> visited(g.vertices.size(), false);
  visited[v] = true;

  auto collect_at = [&](int cur) {
    for_each_simple_cycle(g, cur, [&](Word const& beta) {
      if (!gamma.empty()
          && (!pair_admissible(g, gamma.back(), beta.front())
              || !pair_admissible(g, beta.back(), gamma.back().inverse()))) {
        return true;
      }
      Word alpha = gamma;
      alpha.insert(alpha.end(), beta.begin(), beta.end());
      Word ginv = word_inverse(gamma);
      alpha.insert(alpha.end(), ginv.begin(), ginv.end());
      out.insert(std::min(alpha, word_inverse(alpha)));
      if (static_cast<int64_t>(out.size()) > cap) {
        fail("SizeLimitExceeded",
             "more than " + std::to_string(cap) + " simple closed paths");
      }
      return true;
    });
  };

  std::function<void(int)> grow = [&](int cur) {
    collect_at(cur);
    for (int s = 0; s < nstates; ++s) {
      SignedEdge l = state_of(s);
      if (hat_source(g, l) != cur) {
        continue;
      }
      if (!gamma.empty() && !pair_admissible(g, gamma.back(), l)) {
        continue;
      }
      int to = hat_range(g, l);
      if (visited[to]) {
        continue;
      }
      visited[to] = true;
      gamma.push_back(l);
      grow(to);
      gamma.pop_back();
      visited[to] = false;
    }
  };
  grow(v);
  return {out.begin(), out.end()};
}

std::vector<CycleClass> cycle_classes(SeparatedGraph const& g) {
  auto choice = admits_choice(g);
  std::map<Word, CycleClass> classes;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (choice[v]) {
      continue;
    }
    auto paths = simple_closed_paths(g, static_cast<int>(v));
    if (paths.size() != 1) {
      continue;  // trivial or non-cyclic closed-path group
    }
    Word const& alpha = paths[0];
    if (!pair_admissible(g, alpha.back(), alpha.front())) {
      continue;  // unique closed path is a conjugate, not a cycle at v
    }
    Word key = cyclic_normal_form(alpha);
    auto [it, fresh] = classes.try_emplace(key);
    if (fresh) {
      it->second.cycle = key;
      it->second.base  = g.vertices[hat_source(g, key.front())].name;
    }
    it->second.vertices.push_back(g.vertices[v].name);
  }
  std::vector<CycleClass> out;
  for (auto& [key, cls] : classes) {
    std::sort(cls.vertices.begin(), cls.vertices.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::set<int>> oriented_hsets(OrientedGraph const& g) {
  auto closure = [&](std::set<int> h) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto const& a : g.arcs) {
        if (h.count(a.target) && h.insert(a.source).second) {
          changed = true;
        }
      }
      for (size_t v = 0; v < g.vertices.size(); ++v) {
        if (h.count(static_cast<int>(v))) {
          continue;
        }
        bool any = false, all = true;
        for (auto const& a : g.arcs) {
          if (a.target == static_cast<int>(v)) {
            any = true;
            all = all && h.count(a.source);
          }
        }
        if (any && all) {
          h.insert(static_cast<int>(v));
          changed = true;
        }
      }
    }
    return h;
  };
  std::set<std::set<int>> seen;
  std::vector<std::set<int>> queue{closure({})};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    auto h = std::move(queue.back());
    queue.pop_back();
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      if (!h.count(static_cast<int>(v))) {
        auto s = h;
        s.insert(static_cast<int>(v));
        s = closure(std::move(s));
        if (seen.insert(s).second) {
          queue.push_back(std::move(s));
        }
      }
    }
  }
  std::vector<std::set<int>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {

// The unique singleton-group edge sourced at each layer-1 vertex, when it
// exists; otherwise the name of an offending vertex.
std::optional<std::map<int, int>> singleton_out_edges(SeparatedGraph const& g,
                                                      std::string* note) {
  std::map<int, std::vector<int>> per_source;
  for (auto const& grp : g.groups) {
    if (grp.edges.size() == 1) {
      per_source[g.edges[grp.edges[0]].source].push_back(grp.edges[0]);
    }
  }
  std::map<int, int> out;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].layer != 1) {
      continue;
    }
    auto it = per_source.find(static_cast<int>(v));
    size_t count = it == per_source.end() ? 0 : it->second.size();
    if (count != 1) {
      *note = "layer-1 vertex " + g.vertices[v].name + " sources "
              + std::to_string(count) + " singleton groups";
      return std::nullopt;
    }
    out[static_cast<int>(v)] = it->second[0];
  }
  return out;
}

OrientedGraph orient(SeparatedGraph const& g, std::map<int, int> const& y) {
  OrientedGraph og;
  for (auto const& v : g.vertices) {
    og.vertices.push_back(v.name);
  }
  std::set<int> inverted;
  for (auto const& [w, e] : y) {
    inverted.insert(e);
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (inverted.count(static_cast<int>(e))) {
      og.arcs.push_back({g.edges[e].name, g.edges[e].range, g.edges[e].source});
    } else {
      og.arcs.push_back({g.edges[e].name, g.edges[e].source, g.edges[e].range});
    }
  }
  return og;
}

// Longest simple 1-path starting at a type-A vertex, or nullopt if some
// type-A component contains a 1-cycle (a revisit along a reduced 1-path).
std::optional<int> one_path_bound(SeparatedGraph const& g,
                                  VertexTypeMap const&  types) {
  int  nstates = 2 * static_cast<int>(g.edges.size());
  int  best    = 0;
  bool cyclic  = false;
  std::vector<bool> visited(g.vertices.size(), false);
  Word path;
  std::function<void(int)> grow = [&](int cur) {
    best = std::max(best, static_cast<int>(path.size()));
    for (int s = 0; s < nstates && !cyclic; ++s) {
      SignedEdge l = state_of(s);
      if (g.groups[g.group_of[l.edge]].edges.size() != 1
          || hat_source(g, l) != cur) {
        continue;
      }
      if (!path.empty() && !pair_admissible(g, path.back(), l)) {
        continue;
      }
      int to = hat_range(g, l);
      if (visited[to]) {
        cyclic = true;  // reduced 1-paths close up only around 1-cycles
        return;
      }
      visited[to] = true;
      path.push_back(l);
      grow(to);
      path.pop_back();
      visited[to] = false;
    }
  };
  for (auto const& [v, t] : types.type) {
    if (t != VertexType::A || cyclic) {
      continue;
    }
    visited.assign(g.vertices.size(), false);
    visited[v] = true;
    grow(v);
  }
  if (cyclic) {
    return std::nullopt;
  }
  return best;
}

}  // namespace

SimplicityVerdict classify_simplicity(SeparatedGraph const& g, int bound,
                                      int64_t budget) {
  SimplicityVerdict verdict;
  verdict.bound = bound;

  std::vector<SeparatedGraph> levels;
  levels.push_back(g);
  levels[0].canonicalize();
  auto ensure_level = [&](int n) {
    while (static_cast<int>(levels.size()) <= n) {
      levels.push_back(one_graph(levels.back(), budget).graph);
    }
  };

  // (i) Lattice search for a nontrivial hereditary C-saturated set.
  for (int n = 0; n <= bound; ++n) {
    ensure_level(n);
    auto lat  = enumerate_hsets(levels[n]);
    int  full = static_cast<int>(levels[n].vertices.size());
    // A maximal proper witness: largest proper size, lexicographically
    // first within it.
    size_t best = 0;
    int    pick = -1;
    for (size_t i = 0; i < lat.sets.size(); ++i) {
      auto const& s = lat.sets[i];
      if (s.empty() || static_cast<int>(s.size()) == full) {
        continue;
      }
      if (s.size() > best) {
        best = s.size();
        pick = static_cast<int>(i);
      }
    }
    if (pick >= 0) {
      verdict.kind  = SimplicityVerdict::Kind::NotSimple;
      verdict.level = n;
      for (int v : lat.sets[pick]) {
        verdict.witness.push_back(levels[n].vertices[v].name);
      }
      return verdict;
    }
  }

  // (ii) The dichotomy, on the level-1 graph where edges of a common group
  // have distinct sources.
  ensure_level(1);
  auto types = vertex_types(levels[1]);
  int  final_level = 1;
  if (types.violations.empty() && !types.all_type_a()) {
    auto m = one_path_bound(levels[1], types);
    if (!m) {
      verdict.note = "a type-A 1-component contains a 1-cycle";
      return verdict;
    }
    final_level = 1 + *m;
    ensure_level(final_level);
    types = vertex_types(levels[final_level]);
  }
  auto const& gn = levels[final_level];
  if (!types.violations.empty()) {
    verdict.note = "vertex " + gn.vertices[types.violations[0]].name
                   + " has two groups of size > 1";
    return verdict;
  }
  verdict.level = final_level;

  if (types.all_type_a()) {
    std::string note;
    auto        y = singleton_out_edges(gn, &note);
    if (!y) {
      verdict.note = note;
      return verdict;
    }
    auto og = orient(gn, *y);
    if (oriented_hsets(og).size() != 2) {
      verdict.note = "oriented graph has a nontrivial hereditary "
                     "saturated set";
      return verdict;
    }
    verdict.kind     = SimplicityVerdict::Kind::GraphAlgebra;
    verdict.oriented = std::move(og);
    return verdict;
  }

  // Some type-B vertex survives; look for one 1-disconnected from type A.
  auto comps = one_components(gn);
  for (auto const& [v, t] : types.type) {
    if (t == VertexType::A) {
      continue;
    }
    auto const& comp = *std::find_if(
        comps.begin(), comps.end(), [&](std::vector<int> const& c) {
          return std::binary_search(c.begin(), c.end(), v);
        });
    bool near_a = std::any_of(comp.begin(), comp.end(), [&](int u) {
      auto it = types.type.find(u);
      return it != types.type.end() && it->second == VertexType::A;
    });
    if (near_a) {
      continue;
    }
    verdict.kind = SimplicityVerdict::Kind::FreeGroup;
    verdict.rank = static_cast<int>(simple_closed_paths(gn, v).size());
    verdict.base = gn.vertices[v].name;
    return verdict;
  }
  verdict.note = "every type-B vertex is 1-connected to a type-A vertex";
  return verdict;
}

}  // namespace sepgraph
