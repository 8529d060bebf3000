//
// sepgraph - core data model and SGF format implementation.
//

#include "sepgraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace sepgraph {

namespace {

std::vector<std::string> tokenize(std::string const& line) {
  std::istringstream       in(line);
  std::vector<std::string> toks;
  std::string              t;
  while (in >> t) {
    toks.push_back(t);
  }
  return toks;
}

std::string at_line(size_t lineno) {
  return " (line " + std::to_string(lineno) + ")";
}

}  // namespace

void SeparatedGraph::canonicalize() {
  // Sort vertices by (layer, name) and edges by name, remapping ids.
  std::vector<int> vperm(vertices.size());
  std::iota(vperm.begin(), vperm.end(), 0);
  std::sort(vperm.begin(), vperm.end(), [&](int a, int b) {
    return std::tie(vertices[a].layer, vertices[a].name)
           < std::tie(vertices[b].layer, vertices[b].name);
  });
  std::vector<int> vmap(vertices.size());  // old id -> new id
  {
    std::vector<Vertex> nv(vertices.size());
    for (size_t i = 0; i < vperm.size(); ++i) {
      vmap[vperm[i]] = static_cast<int>(i);
      nv[i]          = vertices[vperm[i]];
    }
    vertices = std::move(nv);
  }

  std::vector<int> eperm(edges.size());
  std::iota(eperm.begin(), eperm.end(), 0);
  std::sort(eperm.begin(), eperm.end(), [&](int a, int b) {
    return edges[a].name < edges[b].name;
  });
  std::vector<int> emap(edges.size());
  {
    std::vector<Edge> ne(edges.size());
    for (size_t i = 0; i < eperm.size(); ++i) {
      emap[eperm[i]] = static_cast<int>(i);
      ne[i]          = edges[eperm[i]];
      ne[i].source   = vmap[ne[i].source];
      ne[i].range    = vmap[ne[i].range];
    }
    edges = std::move(ne);
  }

  for (auto& grp : groups) {
    grp.vertex = vmap[grp.vertex];
    for (auto& e : grp.edges) {
      e = emap[e];
    }
    std::sort(grp.edges.begin(), grp.edges.end());
  }
  // Stable: groups at the same vertex keep their declaration order.
  std::stable_sort(groups.begin(), groups.end(),
                   [](Group const& a, Group const& b) {
                     return a.vertex < b.vertex;
                   });

  // Rebuild indexes.
  vertex_index.clear();
  edge_index.clear();
  groups_at.assign(vertices.size(), {});
  group_of.assign(edges.size(), -1);
  out_edges.assign(vertices.size(), {});
  in_edges.assign(vertices.size(), {});

  for (size_t i = 0; i < vertices.size(); ++i) {
    if (!vertex_index.emplace(vertices[i].name, static_cast<int>(i)).second) {
      fail("DuplicateName", "vertex '" + vertices[i].name + "'");
    }
    if (vertices[i].layer != 0 && vertices[i].layer != 1) {
      fail("NotBipartite", "vertex '" + vertices[i].name + "' has layer "
                               + std::to_string(vertices[i].layer));
    }
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    Edge const& e = edges[i];
    if (!edge_index.emplace(e.name, static_cast<int>(i)).second) {
      fail("DuplicateName", "edge '" + e.name + "'");
    }
    if (vertices[e.source].layer != 1 || vertices[e.range].layer != 0) {
      fail("NotBipartite", "edge '" + e.name
                               + "' must run from layer 1 to layer 0");
    }
    out_edges[e.source].push_back(static_cast<int>(i));
    in_edges[e.range].push_back(static_cast<int>(i));
  }
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    Group const& grp = groups[gi];
    if (grp.edges.empty()) {
      fail("EmptyGroup", "group '" + grp.name + "' at '"
                             + vertices[grp.vertex].name + "'");
    }
    groups_at[grp.vertex].push_back(static_cast<int>(gi));
    for (int e : grp.edges) {
      if (edges[e].range != grp.vertex) {
        fail("GroupOverlap", "edge '" + edges[e].name + "' listed at '"
                                 + vertices[grp.vertex].name
                                 + "' but ranges elsewhere");
      }
      if (group_of[e] != -1) {
        fail("GroupOverlap", "edge '" + edges[e].name
                                 + "' occurs in two groups");
      }
      group_of[e] = static_cast<int>(gi);
    }
  }
  for (size_t e = 0; e < edges.size(); ++e) {
    if (group_of[e] == -1) {
      fail("UncoveredEdge", "edge '" + edges[e].name
                                + "' belongs to no group of C_{"
                                + vertices[edges[e].range].name + "}");
    }
  }
}

int SeparatedGraph::vertex_id(std::string const& name) const {
  auto it = vertex_index.find(name);
  if (it == vertex_index.end()) {
    fail("UnknownVertex", "'" + name + "'");
  }
  return it->second;
}

int SeparatedGraph::edge_id(std::string const& name) const {
  auto it = edge_index.find(name);
  if (it == edge_index.end()) {
    fail("UnknownEdge", "'" + name + "'");
  }
  return it->second;
}

bool SeparatedGraph::operator==(SeparatedGraph const& other) const {
  if (vertices.size() != other.vertices.size()
      || edges.size() != other.edges.size()
      || groups.size() != other.groups.size()) {
    return false;
  }
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].name != other.vertices[i].name
        || vertices[i].layer != other.vertices[i].layer) {
      return false;
    }
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].name != other.edges[i].name
        || edges[i].source != other.edges[i].source
        || edges[i].range != other.edges[i].range) {
      return false;
    }
  }
  for (size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].name != other.groups[i].name
        || groups[i].vertex != other.groups[i].vertex
        || groups[i].edges != other.groups[i].edges) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> SeparatedGraph::warnings() const {
  std::vector<std::string> out;
  for (size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].layer == 1 && out_edges[v].empty()) {
      out.push_back("isolated layer-1 vertex '" + vertices[v].name
                    + "' (empty s^{-1}(v))");
    }
  }
  return out;
}

int hat_source(SeparatedGraph const& g, SignedEdge s) {
  return s.inv ? g.edges[s.edge].range : g.edges[s.edge].source;
}

int hat_range(SeparatedGraph const& g, SignedEdge s) {
  return s.inv ? g.edges[s.edge].source : g.edges[s.edge].range;
}

bool pair_admissible(SeparatedGraph const& g, SignedEdge a, SignedEdge b) {
  if (hat_range(g, a) != hat_source(g, b)) {
    return false;
  }
  if (a.inv && !b.inv) {
    // Subpath e f^{-1} with e = b.edge, f = a.edge: forbidden iff e = f.
    return a.edge != b.edge;
  }
  if (!a.inv && b.inv) {
    // Subpath e^{-1} f with e = b.edge, f = a.edge: forbidden iff same group.
    return g.group_of[a.edge] != g.group_of[b.edge];
  }
  return false;  // same-direction letters are never connected (bipartite)
}

bool is_connected(SeparatedGraph const& g, Word const& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (hat_range(g, w[i]) != hat_source(g, w[i + 1])) {
      return false;
    }
  }
  return true;
}

bool is_admissible(SeparatedGraph const& g, Word const& w) {
  if (!is_connected(g, w)) {
    fail("DisconnectedWord", "word '" + word_to_string(g, w)
                                 + "' is not connected in the double graph");
  }
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (!pair_admissible(g, w[i], w[i + 1])) {
      return false;
    }
  }
  return true;
}

Word reduced_product(SeparatedGraph const& g, Word const& p, Word const& q) {
  if (!p.empty() && !q.empty()
      && hat_range(g, p.back()) != hat_source(g, q.front())) {
    fail("EndpointMismatch", "range of first factor is '"
                                 + g.vertices[hat_range(g, p.back())].name
                                 + "', source of second factor is '"
                                 + g.vertices[hat_source(g, q.front())].name
                                 + "'");
  }
  Word out = p;
  for (SignedEdge s : q) {
    if (!out.empty() && out.back() == s.inverse()) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Word> paths_between(SeparatedGraph const& g, int u, int v,
                                int maxlen) {
  std::vector<Word> out;
  // Letters in canonical order (edge id, then positive before inverse).
  std::vector<SignedEdge> letters;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    letters.push_back({static_cast<int>(e), false});
    letters.push_back({static_cast<int>(e), true});
  }
  std::sort(letters.begin(), letters.end());

  Word cur;
  auto dfs = [&](auto&& self, int at) -> void {
    if (at == v) {
      out.push_back(cur);
    }
    if (static_cast<int>(cur.size()) >= maxlen) {
      return;
    }
    for (SignedEdge s : letters) {
      if (hat_source(g, s) != at) {
        continue;
      }
      if (!cur.empty() && !pair_admissible(g, cur.back(), s)) {
        continue;
      }
      cur.push_back(s);
      self(self, hat_range(g, s));
      cur.pop_back();
    }
  };
  dfs(dfs, u);
  std::stable_sort(out.begin(), out.end(),
                   [](Word const& a, Word const& b) {
                     return a.size() < b.size();
                   });
  return out;
}

std::string letter_to_string(SeparatedGraph const& g, SignedEdge s) {
  return g.edges[s.edge].name + (s.inv ? "~" : "");
}

std::string word_to_string(SeparatedGraph const& g, Word const& w) {
  // Outermost (last applied) letter first, per the right-to-left convention.
  std::string out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!out.empty()) {
      out += ' ';
    }
    out += letter_to_string(g, *it);
  }
  return out;
}

Word parse_word(SeparatedGraph const& g, std::string const& text) {
  Word w;
  for (std::string tok : tokenize(text)) {
    SignedEdge s{0, false};
    if (!tok.empty() && tok.back() == '~') {
      s.inv = true;
      tok.pop_back();
    }
    s.edge = g.edge_id(tok);
    w.push_back(s);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

SeparatedGraph load(std::string const& text) {
  SeparatedGraph g;
  // Parse with temporary name-based references, resolve, then canonicalize.
  struct RawEdge {
    std::string name, source, range;
    size_t      lineno;
  };
  struct RawGroup {
    std::string              range, name;
    std::vector<std::string> edges;
    size_t                   lineno;
  };
  std::vector<RawEdge>  redges;
  std::vector<RawGroup> rgroups;

  std::istringstream in(text);
  std::string        line;
  size_t             lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') {
      continue;
    }
    if (toks[0] == "vertex" && toks.size() == 3
        && toks[2].rfind("layer=", 0) == 0 && toks[2].size() == 7
        && (toks[2][6] == '0' || toks[2][6] == '1')) {
      g.vertices.push_back({toks[1], toks[2][6] - '0'});
    } else if (toks[0] == "edge" && toks.size() == 4) {
      redges.push_back({toks[1], toks[2], toks[3], lineno});
    } else if (toks[0] == "group" && toks.size() >= 3) {
      rgroups.push_back({toks[1], toks[2],
                         {toks.begin() + 3, toks.end()}, lineno});
    } else {
      fail("ParseError", "unrecognized line" + at_line(lineno));
    }
  }

  std::map<std::string, int> vidx;
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    if (!vidx.emplace(g.vertices[i].name, static_cast<int>(i)).second) {
      fail("DuplicateName", "vertex '" + g.vertices[i].name + "'");
    }
  }
  auto resolve_vertex = [&](std::string const& n, size_t lineno) {
    auto it = vidx.find(n);
    if (it == vidx.end()) {
      fail("UnknownVertex", "'" + n + "'" + at_line(lineno));
    }
    return it->second;
  };
  std::map<std::string, int> eidx;
  for (auto const& re : redges) {
    int src = resolve_vertex(re.source, re.lineno);
    int rng = resolve_vertex(re.range, re.lineno);
    if (!eidx.emplace(re.name, static_cast<int>(g.edges.size())).second) {
      fail("DuplicateName", "edge '" + re.name + "'" + at_line(re.lineno));
    }
    g.edges.push_back({re.name, src, rng});
  }
  for (auto const& rg : rgroups) {
    Group grp;
    grp.name   = rg.name;
    grp.vertex = resolve_vertex(rg.range, rg.lineno);
    if (rg.edges.empty()) {
      fail("EmptyGroup", "group '" + rg.name + "'" + at_line(rg.lineno));
    }
    for (auto const& en : rg.edges) {
      auto it = eidx.find(en);
      if (it == eidx.end()) {
        fail("UnknownEdge", "'" + en + "'" + at_line(rg.lineno));
      }
      grp.edges.push_back(it->second);
    }
    g.groups.push_back(std::move(grp));
  }
  g.canonicalize();
  return g;
}

SeparatedGraph load_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    fail("IoError", "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str());
}

std::string save(SeparatedGraph const& g) {
  std::ostringstream out;
  out << "# sgf\n";
  for (auto const& v : g.vertices) {
    out << "vertex " << v.name << " layer=" << v.layer << "\n";
  }
  for (auto const& e : g.edges) {
    out << "edge " << e.name << " " << g.vertices[e.source].name << " "
        << g.vertices[e.range].name << "\n";
  }
  for (auto const& grp : g.groups) {
    out << "group " << g.vertices[grp.vertex].name << " " << grp.name;
    for (int e : grp.edges) {
      out << " " << g.edges[e].name;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sepgraph
