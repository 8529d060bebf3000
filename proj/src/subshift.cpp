//
// sepgraph - convex-subshift engine.
//

#include "sepgraph/subshift.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "json.hpp"

namespace sepgraph {

// ---------------------------------------------------------------------------
// Words.

bool word_less(Word const& a, Word const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

Word reduce_word(Word w) {
  Word out;
  for (auto const& l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word word_append(Word w, SignedEdge l) {
  if (!w.empty() && w.back() == l.inverse()) {
    w.pop_back();
  } else {
    w.push_back(l);
  }
  return w;
}

Word word_concat(Word inner, Word const& outer) {
  for (auto const& l : outer) {
    inner = word_append(std::move(inner), l);
  }
  return inner;
}

Word word_inverse(Word const& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

Word word_relative(Word const& w, Word const& alpha) {
  return word_concat(word_inverse(alpha), w);
}

// ---------------------------------------------------------------------------
// Balls.

void Ball::canonicalize() {
  std::sort(words.begin(), words.end(), word_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
  if (words.empty() || !words.front().empty()) {
    words.insert(words.begin(), Word{});
  }
}

bool Ball::contains(Word const& w) const {
  return std::binary_search(words.begin(), words.end(), w, word_less);
}

bool ball_less(Ball const& a, Ball const& b) {
  if (a.radius != b.radius) {
    return a.radius < b.radius;
  }
  if (a.words != b.words) {
    return std::lexicographical_compare(a.words.begin(), a.words.end(),
                                        b.words.begin(), b.words.end(),
                                        word_less);
  }
  return a.base < b.base;
}

Ball sub_ball(Ball const& b, Word const& alpha, int r) {
  Ball out;
  out.radius = r;
  for (auto const& w : b.words) {
    Word rel = word_relative(w, alpha);
    if (static_cast<int>(rel.size()) <= r) {
      out.words.push_back(std::move(rel));
    }
  }
  out.canonicalize();
  return out;
}

namespace {

std::string render_word(Word const& w, std::vector<std::string> const& letters) {
  std::string s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!s.empty()) {
      s += ' ';
    }
    s += letters[it->edge];
    if (it->inv) {
      s += '~';
    }
  }
  return s;
}

}  // namespace

std::string ball_to_json(Ball const&                     b,
                         std::vector<std::string> const& letters) {
  nlohmann::json j;
  j["radius"] = b.radius;
  j["words"]  = nlohmann::json::array();
  for (auto const& w : b.words) {
    j["words"].push_back(render_word(w, letters));
  }
  if (!b.base.empty()) {
    j["base"] = b.base;
  }
  return j.dump();
}

Ball ball_from_json(std::string const&              text,
                    std::vector<std::string> const& letters) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < letters.size(); ++i) {
    index[letters[i]] = static_cast<int>(i);
  }
  nlohmann::json j = nlohmann::json::parse(text);
  Ball           b;
  b.radius = j.at("radius").get<int>();
  if (j.count("base")) {
    b.base = j.at("base").get<std::string>();
  }
  for (auto const& ws : j.at("words")) {
    std::string s = ws.get<std::string>();
    Word        w;
    size_t      pos = 0;
    std::vector<SignedEdge> outer_first;
    while (pos < s.size()) {
      size_t sp  = s.find(' ', pos);
      size_t end = sp == std::string::npos ? s.size() : sp;
      std::string tok = s.substr(pos, end - pos);
      pos             = end + (sp == std::string::npos ? 0 : 1);
      if (tok.empty()) {
        continue;
      }
      bool inv = tok.back() == '~';
      if (inv) {
        tok.pop_back();
      }
      auto it = index.find(tok);
      if (it == index.end()) {
        fail("UnknownVertex", "unknown letter '" + tok + "' in ball JSON");
      }
      outer_first.push_back({it->second, inv});
      if (sp == std::string::npos) {
        break;
      }
    }
    w.assign(outer_first.rbegin(), outer_first.rend());
    b.words.push_back(std::move(w));
  }
  b.canonicalize();
  return b;
}

std::vector<std::string> edge_alphabet(SeparatedGraph const& g) {
  std::vector<std::string> names;
  for (auto const& e : g.edges) {
    names.push_back(e.name);
  }
  return names;
}

// ---------------------------------------------------------------------------
// Balls of Omega(E,C).

namespace {

// Depth-first enumeration of the n-balls based at one vertex: layer-1
// positions extend deterministically by the whole fiber, layer-0 positions
// branch over one inverse edge per non-backtrack group.
struct OmegaEnum {
  SeparatedGraph const& g;
  int                   radius;
  int64_t               budget;
  std::vector<Ball>&    out;

  struct Node {
    Word w;
    int  vertex;
    int  arrival_edge;  // -1 at the base
  };
  std::vector<Node> nodes;
  std::string       base;

  void run(int base_vertex) {
    base = g.vertices[base_vertex].name;
    nodes.assign(1, {Word{}, base_vertex, -1});
    step(0);
  }

  void emit() {
    if (static_cast<int64_t>(out.size()) >= budget) {
      fail("SizeLimitExceeded",
           "more than " + std::to_string(budget) + " balls");
    }
    Ball b;
    b.radius = radius;
    b.base   = base;
    for (auto const& nd : nodes) {
      b.words.push_back(nd.w);
    }
    b.canonicalize();
    out.push_back(std::move(b));
  }

  void step(size_t idx) {
    if (idx == nodes.size()) {
      emit();
      return;
    }
    Node nd = nodes[idx];  // copy: the vector grows below
    if (static_cast<int>(nd.w.size()) == radius) {
      step(idx + 1);
      return;
    }
    if (g.vertices[nd.vertex].layer == 1) {
      // (c1): the whole fiber, minus the backtrack already in the tree.
      size_t mark = nodes.size();
      for (int e : g.out_edges[nd.vertex]) {
        if (e == nd.arrival_edge) {
          continue;
        }
        Word w = nd.w;
        w.push_back({e, false});
        nodes.push_back({std::move(w), g.edges[e].range, e});
      }
      step(idx + 1);
      nodes.resize(mark);
    } else {
      // (c2): one inverse edge per group; the arrival group is forced to
      // the backtrack and contributes no new word.
      std::vector<int> free_groups;
      for (int gi : g.groups_at[nd.vertex]) {
        if (nd.arrival_edge < 0 || gi != g.group_of[nd.arrival_edge]) {
          free_groups.push_back(gi);
        }
      }
      choose(idx, nd, free_groups, 0);
    }
  }

  void choose(size_t idx, Node const& nd, std::vector<int> const& fg,
              size_t k) {
    if (k == fg.size()) {
      step(idx + 1);
      return;
    }
    for (int f : g.groups[fg[k]].edges) {
      Word w = nd.w;
      w.push_back({f, true});
      nodes.push_back({std::move(w), g.edges[f].source, f});
      choose(idx, nd, fg, k + 1);
      nodes.pop_back();
    }
  }
};

}  // namespace

std::vector<Ball> enumerate_balls(SeparatedGraph const& g, int n,
                                  int64_t budget) {
  std::vector<Ball> out;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    OmegaEnum en{g, n, budget, out};
    en.run(static_cast<int>(v));
  }
  std::sort(out.begin(), out.end(), ball_less);
  return out;
}

std::vector<Ball> enumerate_balls_parallel(SeparatedGraph const& g, int n,
                                           int64_t budget) {
  std::vector<std::vector<Ball>> per(g.vertices.size());
  std::atomic<bool>              failed{false};
#pragma omp parallel for schedule(dynamic)
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    try {
      OmegaEnum en{g, n, budget, per[v]};
      en.run(static_cast<int>(v));
    } catch (Error const&) {
      failed = true;
    }
  }
  if (failed) {
    fail("SizeLimitExceeded",
         "more than " + std::to_string(budget) + " balls");
  }
  std::vector<Ball> out;
  for (auto& chunk : per) {
    for (auto& b : chunk) {
      out.push_back(std::move(b));
    }
  }
  if (static_cast<int64_t>(out.size()) > budget) {
    fail("SizeLimitExceeded",
         "more than " + std::to_string(budget) + " balls");
  }
  std::sort(out.begin(), out.end(), ball_less);
  return out;
}

// ---------------------------------------------------------------------------
// vertex_ball / ball_vertex.

Ball vertex_ball(BratteliTower const& t, int level, std::string const& vname) {
  if (level < 1) {
    fail("RadiusTooSmall", "vertex_ball needs level >= 1");
  }
  if (level > t.height()) {
    fail("UnknownVertex",
         "tower has no level " + std::to_string(level));
  }
  auto const& gl = t.levels[level];
  if (!gl.vertex_index.count(vname)) {
    fail("UnknownVertex", "no vertex '" + vname + "' at level "
                              + std::to_string(level));
  }
  auto const& g0  = t.levels[0];
  auto const& nm0 = t.namings[0];
  if (level == 1) {
    Ball b;
    b.radius = 1;
    int vid  = gl.vertex_id(vname);
    if (gl.vertices[vid].layer == 0) {
      // An old layer-1 vertex: {1} united with its fiber, positively.
      b.base = vname;
      for (int e : g0.out_edges[g0.vertex_id(vname)]) {
        b.words.push_back({SignedEdge{e, false}});
      }
    } else {
      // A tuple vertex: {1} united with the inverted tuple.
      auto const& [parent, tuple] = nm0.tuples.at(vname);
      b.base                      = parent;
      for (auto const& x : tuple) {
        b.words.push_back({SignedEdge{g0.edge_id(x), true}});
      }
    }
    b.canonicalize();
    return b;
  }

  // Radius reduction: the (level-1)-ball over the 1-graph, expanded back
  // through the substitution (a positive derived letter with slot edge x
  // reads as x^{-1}).
  BratteliTower ts;
  ts.levels.assign(t.levels.begin() + 1, t.levels.end());
  ts.namings.assign(t.namings.begin() + 1, t.namings.end());
  Ball        bp = vertex_ball(ts, level - 1, vname);
  auto const& g1 = t.levels[1];

  auto one_words = [&](int z) {
    std::vector<Word> ws{Word{}};
    if (g1.vertices[z].layer == 0) {
      for (int e : g0.out_edges[g0.vertex_id(g1.vertices[z].name)]) {
        ws.push_back({SignedEdge{e, false}});
      }
    } else {
      for (auto const& x : nm0.tuples.at(g1.vertices[z].name).second) {
        ws.push_back({SignedEdge{g0.edge_id(x), true}});
      }
    }
    return ws;
  };

  Ball out;
  out.radius = level;
  int base1  = g1.vertex_id(bp.base);
  out.base   = g1.vertices[base1].layer == 0 ? bp.base
                                             : nm0.tuples.at(bp.base).first;
  for (auto const& beta : bp.words) {
    int  pos = base1;
    Word trail;
    for (auto const& l : beta) {
      auto const& ename = g1.edges[l.edge].name;
      int xid = g0.edge_id(nm0.edge_symbol.at(ename).second);
      trail   = word_append(std::move(trail), SignedEdge{xid, !l.inv});
      pos     = hat_range(g1, l);
    }
    for (auto const& w : one_words(pos)) {
      Word u = word_concat(trail, w);
      if (static_cast<int>(u.size()) <= level) {
        out.words.push_back(std::move(u));
      }
    }
  }
  out.canonicalize();
  return out;
}

std::string ball_vertex(BratteliTower const& t, Ball const& b) {
  int level = b.radius;
  if (level < 1 || level > t.height()) {
    fail("NoSuchBall",
         "no tower level matches radius " + std::to_string(b.radius));
  }
  for (auto const& v : t.levels[level].vertices) {
    if (vertex_ball(t, level, v.name) == b) {
      return v.name;
    }
  }
  fail("NoSuchBall", "ball is not the ball of any level-"
                         + std::to_string(level) + " vertex");
}

// ---------------------------------------------------------------------------
// Abstract subshifts.

namespace {

// Grow the R-balls over a free alphabet radius by radius, rejecting any
// ball with a complete sub-ball equal to a forbidden ball.  At stage d the
// newly complete positions are exactly those with |alpha| = d - r_F.
struct FreeGrow {
  int                      nletters;
  std::vector<Ball> const& forbidden;
  int64_t                  budget;

  bool rejected(Ball const& b, int d) const {
    for (auto const& f : forbidden) {
      if (f.radius > d) {
        continue;
      }
      for (auto const& alpha : b.words) {
        if (static_cast<int>(alpha.size()) == d - f.radius
            && sub_ball(b, alpha, f.radius) == f) {
          return true;
        }
      }
    }
    return false;
  }

  std::vector<Ball> run(int R) {
    std::vector<Ball> cur;
    Ball              b0;
    b0.canonicalize();
    if (!rejected(b0, 0)) {
      cur.push_back(b0);
    }
    for (int d = 1; d <= R; ++d) {
      std::vector<Ball> next;
      for (auto const& b : cur) {
        std::vector<Word> frontier;
        for (auto const& w : b.words) {
          if (static_cast<int>(w.size()) == d - 1) {
            frontier.push_back(w);
          }
        }
        Ball cand   = b;
        cand.radius = d;
        extend(cand, frontier, 0, 0, d, next);
      }
      cur = std::move(next);
    }
    return cur;
  }

  // Assign every subset of the available letters to each frontier word.
  void extend(Ball& cand, std::vector<Word> const& frontier, size_t fi,
              int li, int d, std::vector<Ball>& out) {
    if (fi == frontier.size()) {
      Ball done = cand;
      done.canonicalize();
      if (!rejected(done, d)) {
        if (static_cast<int64_t>(out.size()) >= budget) {
          fail("SizeLimitExceeded",
               "more than " + std::to_string(budget) + " balls");
        }
        out.push_back(std::move(done));
      }
      return;
    }
    if (li == 2 * nletters) {
      extend(cand, frontier, fi + 1, 0, d, out);
      return;
    }
    SignedEdge l{li / 2, li % 2 == 1};
    // Skip the backtrack letter: words stay reduced.
    if (!frontier[fi].empty() && frontier[fi].back() == l.inverse()) {
      extend(cand, frontier, fi, li + 1, d, out);
      return;
    }
    // Exclude l.
    extend(cand, frontier, fi, li + 1, d, out);
    // Include l.
    Word w = frontier[fi];
    w.push_back(l);
    cand.words.push_back(std::move(w));
    extend(cand, frontier, fi, li + 1, d, out);
    cand.words.pop_back();
  }
};

void delete_until_stable(std::vector<Ball>& balls, bool parallel) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<char> keep(balls.size(), 1);
    auto survives = [&](size_t i) {
      for (auto const& w : balls[i].words) {
        if (w.size() != 1) {
          continue;
        }
        bool found = false;
        for (auto const& dp : balls) {
          if (ball_compat(balls[i], w[0], dp)) {
            found = true;
            break;
          }
        }
        if (!found) {
          return false;
        }
      }
      return true;
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (size_t i = 0; i < balls.size(); ++i) {
        keep[i] = survives(i);
      }
    } else {
      for (size_t i = 0; i < balls.size(); ++i) {
        keep[i] = survives(i);
      }
    }
    std::vector<Ball> kept;
    for (size_t i = 0; i < balls.size(); ++i) {
      if (keep[i]) {
        kept.push_back(std::move(balls[i]));
      }
    }
    changed = kept.size() != balls.size();
    balls   = std::move(kept);
  }
}

std::vector<Ball> prune_impl(std::vector<std::string> const& letters, int R,
                             std::vector<Ball> const& forbidden,
                             int64_t budget, bool parallel) {
  for (auto const& f : forbidden) {
    if (f.radius > R) {
      fail("RadiusTooSmall", "forbidden ball of radius "
                                 + std::to_string(f.radius)
                                 + " exceeds R = " + std::to_string(R));
    }
  }
  FreeGrow grow{static_cast<int>(letters.size()), forbidden, budget};
  auto     balls = grow.run(R);
  delete_until_stable(balls, parallel);
  std::sort(balls.begin(), balls.end(), ball_less);
  return balls;
}

}  // namespace

std::vector<Ball> all_balls(std::vector<std::string> const& letters, int R,
                            int64_t budget) {
  FreeGrow grow{static_cast<int>(letters.size()), {}, budget};
  auto     balls = grow.run(R);
  std::sort(balls.begin(), balls.end(), ball_less);
  return balls;
}

bool ball_compat(Ball const& d, SignedEdge l, Ball const& dp) {
  int R = d.radius;
  if (!d.contains(Word{l}) || !dp.contains(Word{l.inverse()})) {
    return false;
  }
  for (auto const& g : dp.words) {
    Word u = word_concat(Word{l}, g);
    if (static_cast<int>(u.size()) <= R && !d.contains(u)) {
      return false;
    }
  }
  for (auto const& w : d.words) {
    Word v = word_concat(Word{l.inverse()}, w);
    if (static_cast<int>(v.size()) <= R && !dp.contains(v)) {
      return false;
    }
  }
  return true;
}

std::vector<Ball> prune_allowed_balls(std::vector<std::string> const& letters,
                                      int R, std::vector<Ball> const& forbidden,
                                      int64_t budget) {
  return prune_impl(letters, R, forbidden, budget, false);
}

std::vector<Ball> prune_allowed_balls_parallel(
    std::vector<std::string> const& letters, int R,
    std::vector<Ball> const& forbidden, int64_t budget) {
  return prune_impl(letters, R, forbidden, budget, true);
}

// ---------------------------------------------------------------------------
// Recoding.

int RecodedAlphabet::ball_index(Ball const& b) const {
  for (size_t i = 0; i < balls.size(); ++i) {
    if (balls[i] == b) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

int RecodedAlphabet::symbol_index(Symbol const& s) const {
  auto it = std::lower_bound(symbols.begin(), symbols.end(), s);
  if (it != symbols.end() && *it == s) {
    return static_cast<int>(it - symbols.begin());
  }
  return -1;
}

RecodedAlphabet recoded_alphabet(std::vector<std::string> const& letters,
                                 std::vector<Ball> const& allowed, int n) {
  RecodedAlphabet ra;
  ra.radius       = n;
  ra.base_letters = letters;
  if (allowed.empty()) {
    return ra;
  }
  int R = allowed.front().radius;
  if (n < 1 || n >= R) {
    fail("RadiusTooSmall", "recoding needs 0 < n < R");
  }
  // Member n-balls: every complete sub-ball of an allowed R-ball.
  for (auto const& d : allowed) {
    for (auto const& alpha : d.words) {
      if (static_cast<int>(alpha.size()) > R - n) {
        continue;
      }
      Ball s = sub_ball(d, alpha, n);
      if (ra.ball_index(s) < 0) {
        ra.balls.push_back(std::move(s));
      }
    }
  }
  std::sort(ra.balls.begin(), ra.balls.end(), ball_less);
  // Realized transitions: one symbol per (target n-ball <-a- source n-ball)
  // step inside an allowed R-ball.
  std::set<RecodedAlphabet::Symbol> seen;
  for (auto const& d : allowed) {
    for (auto const& alpha : d.words) {
      size_t len = alpha.size();
      if (len < 1 || static_cast<int>(len) > R - n) {
        continue;
      }
      Word prev(alpha.begin(), alpha.end() - 1);
      SignedEdge l  = alpha.back();
      int        di = ra.ball_index(sub_ball(d, prev, n));
      int        dj = ra.ball_index(sub_ball(d, alpha, n));
      // A positive step a leaves a behind in the old ball; an inverse step
      // a~ arrives with a ahead in the new ball.
      if (!l.inv) {
        seen.insert({di, l.edge, dj});
      } else {
        seen.insert({dj, l.edge, di});
      }
    }
  }
  ra.symbols.assign(seen.begin(), seen.end());
  auto lname = [&](int i) {
    return i < static_cast<int>(letters.size()) ? letters[i]
                                                : "#" + std::to_string(i);
  };
  for (auto const& s : ra.symbols) {
    ra.names.push_back("[B" + std::to_string(s.target) + "<"
                       + lname(s.letter) + "|B" + std::to_string(s.source)
                       + "]");
  }
  return ra;
}

Ball ball_recode(Ball const& b, int n, RecodedAlphabet const& ra) {
  int R = b.radius;
  if (n < 1 || n >= R) {
    fail("RadiusTooSmall", "recoding needs 0 < n < R");
  }
  Ball out;
  out.radius = R - n;
  int centre = ra.ball_index(sub_ball(b, Word{}, n));
  if (centre < 0) {
    fail("NoSuchBall", "the centre sub-ball is not in the recoded alphabet");
  }
  out.base = "B" + std::to_string(centre);
  for (auto const& beta : b.words) {
    if (static_cast<int>(beta.size()) > R - n) {
      continue;
    }
    Word coded;
    Word prefix;
    int  prev = centre;
    for (auto const& l : beta) {
      prefix.push_back(l);
      int cur = ra.ball_index(sub_ball(b, prefix, n));
      if (cur < 0) {
        fail("NoSuchBall", "a sub-ball is not in the recoded alphabet");
      }
      RecodedAlphabet::Symbol sym = l.inv
                                        ? RecodedAlphabet::Symbol{cur, l.edge, prev}
                                        : RecodedAlphabet::Symbol{prev, l.edge, cur};
      int si = ra.symbol_index(sym);
      if (si < 0) {
        fail("NoSuchBall", "a transition is not in the recoded alphabet");
      }
      // Original a~ becomes the positive symbol, a the inverse symbol.
      coded.push_back({si, !l.inv});
      prev = cur;
    }
    out.words.push_back(std::move(coded));
  }
  out.canonicalize();
  return out;
}

Ball ball_recode(Ball const& b, int n, std::vector<Ball> const& allowed) {
  return ball_recode(b, n, recoded_alphabet({}, allowed, n));
}

Ball psi_recover(Ball const& recoded, int centre_ball,
                 RecodedAlphabet const& ra) {
  Ball out;
  out.radius = recoded.radius + ra.radius;
  for (auto const& beta : recoded.words) {
    int  pos = centre_ball;
    Word trail;
    for (auto const& l : beta) {
      auto const& sym = ra.symbols[l.edge];
      SignedEdge  a{sym.letter, !l.inv};
      if (!l.inv) {
        if (pos != sym.source) {
          fail("NoSuchBall", "recoded word leaves its source ball");
        }
        pos = sym.target;
      } else {
        if (pos != sym.target) {
          fail("NoSuchBall", "recoded word leaves its target ball");
        }
        pos = sym.source;
      }
      trail = word_append(std::move(trail), a);
    }
    for (auto const& w : ra.balls[pos].words) {
      Word u = word_concat(trail, w);
      if (static_cast<int>(u.size()) <= out.radius) {
        out.words.push_back(std::move(u));
      }
    }
  }
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Graph representation.

Representation represent_one_step(std::vector<std::string> const& letters,
                                  std::vector<Ball> const&        allowed) {
  Representation rep;
  rep.rep_letters = letters;
  rep.one_balls   = allowed;
  std::sort(rep.one_balls.begin(), rep.one_balls.end(), ball_less);
  rep.one_balls.erase(std::unique(rep.one_balls.begin(), rep.one_balls.end()),
                      rep.one_balls.end());
  auto const& balls = rep.one_balls;
  for (auto const& b : balls) {
    if (b.radius != 1) {
      fail("RadiusTooSmall", "represent_one_step expects 1-balls");
    }
  }
  // Stability: every letter of every ball has a matching neighbour ball.
  for (auto const& b : balls) {
    for (auto const& w : b.words) {
      if (w.size() != 1) {
        continue;
      }
      bool found = false;
      for (auto const& bp : balls) {
        if (bp.contains(Word{w[0].inverse()})) {
          found = true;
          break;
        }
      }
      if (!found) {
        fail("UnstableBallSet",
             "a ball has a letter with no matching neighbour ball");
      }
    }
  }

  SeparatedGraph& g = rep.graph;
  for (size_t i = 0; i < balls.size(); ++i) {
    g.vertices.push_back({"B" + std::to_string(i), 0});
  }
  // Symbols: target contains the positive letter, source its inverse.
  struct Sym {
    int target, letter, source;
    int plus_edge, minus_edge;
  };
  std::vector<Sym> syms;
  for (int a = 0; a < static_cast<int>(letters.size()); ++a) {
    for (size_t i = 0; i < balls.size(); ++i) {
      if (!balls[i].contains(Word{SignedEdge{a, false}})) {
        continue;
      }
      for (size_t j = 0; j < balls.size(); ++j) {
        if (!balls[j].contains(Word{SignedEdge{a, true}})) {
          continue;
        }
        std::string name = "[B" + std::to_string(i) + "<" + letters[a] + "|B"
                           + std::to_string(j) + "]";
        int vid = static_cast<int>(g.vertices.size());
        g.vertices.push_back({name, 1});
        int plus = static_cast<int>(g.edges.size());
        g.edges.push_back({name + "+", vid, static_cast<int>(i)});
        int minus = static_cast<int>(g.edges.size());
        g.edges.push_back({name + "-", vid, static_cast<int>(j)});
        syms.push_back({static_cast<int>(i), a, static_cast<int>(j), plus,
                        minus});
      }
    }
  }
  // Groups X_B(s) for each nonidentity s in B.
  for (size_t i = 0; i < balls.size(); ++i) {
    for (auto const& w : balls[i].words) {
      if (w.size() != 1) {
        continue;
      }
      Group grp;
      grp.vertex = static_cast<int>(i);
      grp.name   = "X[B" + std::to_string(i) + "|" + letters[w[0].edge]
                 + (w[0].inv ? "~" : "") + "]";
      for (auto const& s : syms) {
        if (!w[0].inv && s.target == static_cast<int>(i)
            && s.letter == w[0].edge) {
          grp.edges.push_back(s.plus_edge);
        }
        if (w[0].inv && s.source == static_cast<int>(i)
            && s.letter == w[0].edge) {
          grp.edges.push_back(s.minus_edge);
        }
      }
      g.groups.push_back(std::move(grp));
    }
  }
  g.canonicalize();
  return rep;
}

Representation represent_finite_type(std::vector<std::string> const& letters,
                                     int R, std::vector<Ball> const& forbidden,
                                     int64_t budget) {
  auto survivors = prune_allowed_balls(letters, R, forbidden, budget);
  if (R == 1) {
    auto rep      = represent_one_step(letters, survivors);
    rep.survivors = std::move(survivors);
    return rep;
  }
  auto ra = recoded_alphabet(letters, survivors, R - 1);
  std::vector<Ball> recoded;
  for (auto const& d : survivors) {
    recoded.push_back(ball_recode(d, R - 1, ra));
  }
  std::sort(recoded.begin(), recoded.end(), ball_less);
  recoded.erase(std::unique(recoded.begin(), recoded.end()), recoded.end());
  auto rep      = represent_one_step(ra.names, recoded);
  rep.survivors = std::move(survivors);
  rep.recoding  = std::move(ra);
  return rep;
}

}  // namespace sepgraph
