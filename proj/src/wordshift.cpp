//
// sepgraph - binary subshifts over the lamplighter tower.
//

#include "sepgraph/wordshift.hpp"

#include <algorithm>
#include <map>

namespace sepgraph {

namespace {

void check_binary(std::vector<std::string> const& words) {
  for (auto const& w : words) {
    for (char c : w) {
      if (c != '0' && c != '1') {
        fail("InvalidWord", "'" + w + "' is not a binary word");
      }
    }
  }
}

bool contains_block(std::string const& w,
                    std::vector<std::string> const& blocks) {
  for (auto const& f : blocks) {
    if (w.find(f) != std::string::npos) {
      return true;
    }
  }
  return false;
}

std::vector<std::string> words_of_length(int n) {
  std::vector<std::string> out;
  out.reserve(size_t(1) << n);
  for (int64_t mask = 0; mask < (int64_t(1) << n); ++mask) {
    std::string w(n, '0');
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        w[i] = '1';
      }
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The block graph of a finite forbidden family: nodes are the admissible
// words of length M (M = max block length - 1), arcs the admissible
// overlaps.  A word is a factor of the subshift iff it avoids the family
// and its first/last windows have arbitrarily long admissible past/future.
struct BlockGraph {
  int                        M = 1;
  std::map<std::string, int> index;
  std::vector<std::string>   nodes;
  std::vector<bool>          fwd_alive, bwd_alive;

  bool node_known(std::string const& w) const { return index.count(w) > 0; }
};

BlockGraph block_graph(std::vector<std::string> const& forbidden) {
  BlockGraph bg;
  size_t longest = 0;
  for (auto const& f : forbidden) {
    longest = std::max(longest, f.size());
  }
  bg.M = std::max(1, static_cast<int>(longest) - 1);
  for (auto& w : words_of_length(bg.M)) {
    if (!contains_block(w, forbidden)) {
      bg.index[w] = static_cast<int>(bg.nodes.size());
      bg.nodes.push_back(w);
    }
  }
  int n = static_cast<int>(bg.nodes.size());
  std::vector<std::vector<int>> succ(n), pred(n);
  for (int u = 0; u < n; ++u) {
    for (char c : {'0', '1'}) {
      std::string ext = bg.nodes[u] + c;
      if (contains_block(ext, forbidden)) {
        continue;
      }
      auto it = bg.index.find(ext.substr(1));
      if (it != bg.index.end()) {
        succ[u].push_back(it->second);
        pred[it->second].push_back(u);
      }
    }
  }
  // Alive = survives iterated removal of degree-0 nodes, i.e. has
  // arbitrarily long extensions on the respective side.
  auto alive = [n](std::vector<std::vector<int>> const& out,
                   std::vector<std::vector<int>> const& in) {
    std::vector<int>  deg(n);
    std::vector<bool> live(n, true);
    std::vector<int>  queue;
    for (int u = 0; u < n; ++u) {
      deg[u] = static_cast<int>(out[u].size());
      if (deg[u] == 0) {
        queue.push_back(u);
      }
    }
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      live[u] = false;
      for (int p : in[u]) {
        if (live[p] && --deg[p] == 0) {
          queue.push_back(p);
        }
      }
    }
    return live;
  };
  bg.fwd_alive = alive(succ, pred);
  bg.bwd_alive = alive(pred, succ);
  return bg;
}

// Is w a block of some point of the subshift avoiding `forbidden`?
bool is_factor(std::string const& w, std::vector<std::string> const& forbidden,
               BlockGraph const& bg) {
  if (contains_block(w, forbidden)) {
    return false;
  }
  if (static_cast<int>(w.size()) < bg.M) {
    // Extendable to a window of length M iff some admissible window
    // containing w is a factor.
    int missing = bg.M - static_cast<int>(w.size());
    for (int pos = 0; pos <= missing; ++pos) {
      for (auto const& pad : words_of_length(missing)) {
        std::string cand =
            pad.substr(0, pos) + w + pad.substr(pos, missing - pos);
        if (is_factor(cand, forbidden, bg)) {
          return true;
        }
      }
    }
    return false;
  }
  std::string first = w.substr(0, bg.M);
  std::string last  = w.substr(w.size() - bg.M);
  if (!bg.node_known(first) || !bg.node_known(last)) {
    return false;
  }
  return bg.bwd_alive[bg.index.at(first)] && bg.fwd_alive[bg.index.at(last)];
}

}  // namespace

std::string word_vertex_name(std::string const& w) {
  return w.empty() ? "v" : w;
}

SeparatedGraph lamplighter_level(int n) {
  if (n < 0) {
    fail("InvalidLevel", "negative level");
  }
  SeparatedGraph g;
  auto layer0 = words_of_length(n);
  auto layer1 = words_of_length(n + 1);
  for (auto const& w : layer0) {
    g.vertices.push_back({word_vertex_name(w), 0});
  }
  for (auto const& u : layer1) {
    g.vertices.push_back({u, 1});
  }
  std::map<std::string, int> vid;
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    vid[g.vertices[i].name] = static_cast<int>(i);
  }
  // At even n the a-edges drop the last letter (identity on the cylinder)
  // and the b-edges the first (the shift); at odd n the roles swap.
  bool even = n % 2 == 0;
  std::map<std::string, int> eid;
  for (auto const& u : layer1) {
    std::string drop_last  = u.substr(0, u.size() - 1);
    std::string drop_first = u.substr(1);
    std::string ra = even ? drop_last : drop_first;
    std::string rb = even ? drop_first : drop_last;
    eid["a" + u] = static_cast<int>(g.edges.size());
    g.edges.push_back({"a" + u, vid.at(u), vid.at(word_vertex_name(ra))});
    eid["b" + u] = static_cast<int>(g.edges.size());
    g.edges.push_back({"b" + u, vid.at(u), vid.at(word_vertex_name(rb))});
  }
  for (auto const& w : layer0) {
    Group x, y;
    x.name   = "X" + w;
    y.name   = "Y" + w;
    x.vertex = y.vertex = vid.at(word_vertex_name(w));
    for (char c : {'0', '1'}) {
      std::string app = w + c, pre = c + w;
      x.edges.push_back(eid.at("a" + (even ? app : pre)));
      y.edges.push_back(eid.at("b" + (even ? pre : app)));
    }
    g.groups.push_back(std::move(x));
    g.groups.push_back(std::move(y));
  }
  g.canonicalize();
  return g;
}

SeparatedGraph lamplighter_graph() { return lamplighter_level(0); }

std::set<std::string> w_words(std::vector<std::string> const& forbidden,
                              int maxlen) {
  check_binary(forbidden);
  std::set<std::string> out;
  for (int n = 0; n <= maxlen; ++n) {
    for (auto const& w : words_of_length(n)) {
      if (contains_block(w, forbidden)) {
        out.insert(w);
      }
    }
  }
  return out;
}

std::set<std::string> hset_words(std::vector<std::string> const& forbidden,
                                 int maxlen) {
  check_binary(forbidden);
  std::set<std::string> out;
  if (forbidden.empty()) {
    return out;
  }
  auto bg = block_graph(forbidden);
  for (int n = 0; n <= maxlen; ++n) {
    for (auto const& w : words_of_length(n)) {
      if (!is_factor(w, forbidden, bg)) {
        out.insert(w);
      }
    }
  }
  return out;
}

VertexIdSet forbidden_to_hset(std::vector<std::string> const& forbidden,
                              int n) {
  auto        g = lamplighter_level(n);
  auto        h = hset_words(forbidden, n + 1);
  VertexIdSet out;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    std::string w =
        g.vertices[v].name == "v" ? std::string() : g.vertices[v].name;
    if (h.count(w)) {
      out.insert(static_cast<int>(v));
    }
  }
  return out;
}

FiniteTypeReport finite_type_detect(std::vector<std::string> const& forbidden,
                                    int N) {
  check_binary(forbidden);
  FiniteTypeReport report;
  report.bound = N;
  auto h  = hset_words(forbidden, N + 1);
  int  n  = 0;
  auto in_h = [&h](SeparatedGraph const& g, int v) {
    auto const& name = g.vertices[v].name;
    return h.count(name == "v" ? std::string() : name) > 0;
  };
  for (int m = 0; m + 1 <= N; ++m) {
    auto        g = lamplighter_level(m + 1);
    VertexIdSet seed, expected;
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      if (in_h(g, static_cast<int>(v))) {
        expected.insert(static_cast<int>(v));
        if (g.vertices[v].layer == 0) {
          seed.insert(static_cast<int>(v));
        }
      }
    }
    if (closure_hs(g, seed) != expected) {
      n = m + 1;
    }
  }
  if (n < N || (n == 0 && N >= 0)) {
    report.finite_type_n = n;
  }
  return report;
}

SeparatedGraph word_quotient(std::vector<std::string> const& forbidden,
                             int n) {
  size_t longest = 0;
  for (auto const& f : forbidden) {
    longest = std::max(longest, f.size());
  }
  int  bound = std::max(n + 2, static_cast<int>(longest) + 2);
  auto ft    = finite_type_detect(forbidden, bound);
  if (!ft.finite_type_n || *ft.finite_type_n > n) {
    fail("NotFiniteType",
         "the lift chain does not certifiably stabilize at level "
             + std::to_string(n));
  }
  return quotient_graph(lamplighter_level(n), forbidden_to_hset(forbidden, n));
}

}  // namespace sepgraph
