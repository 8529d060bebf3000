//
// sepgraph - convex-subshift engine: n-balls of Omega(E,C) and of
// forbidden-pattern subshifts, ball recoding, and the graph representation
// of 1-step subshifts.
//

#ifndef SEPGRAPH_SUBSHIFT_HPP_
#define SEPGRAPH_SUBSHIFT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "sepgraph/bratteli.hpp"
#include "sepgraph/graph.hpp"

namespace sepgraph {

inline constexpr int64_t kDefaultBallBudget = int64_t(1) << 20;

// ---------------------------------------------------------------------------
// Words over an abstract alphabet.
//
// A word reuses the SignedEdge letter type; `edge` is the letter index into
// whatever alphabet (graph edges, abstract letters, recoded symbols) the
// context supplies.  letters[0] is the first applied (rightmost) letter.

// Shortlex order: length first, then lexicographic by (letter, sign).
bool word_less(Word const& a, Word const& b);

// Free reduction (cancel adjacent s s^{-1} pairs).
Word reduce_word(Word w);

// Append one letter at the outer end, cancelling against the last letter.
Word word_append(Word w, SignedEdge l);

// The group product "outer . inner" (inner applied first), fully reduced at
// the seam.
Word word_concat(Word inner, Word const& outer);

Word word_inverse(Word const& w);

// w re-expressed relative to the position alpha: reduce(w . alpha^{-1}).
Word word_relative(Word const& w, Word const& alpha);

// ---------------------------------------------------------------------------
// Balls.

// An n-ball: a right-convex set of reduced words of length <= radius,
// containing the empty word.  Equality compares (radius, words); the base
// tag is metadata (it matters only for radius-0 balls, where the word set
// {1} does not determine the component Omega_v).
struct Ball {
  int                radius = 0;
  std::vector<Word>  words;  // canonical: shortlex sorted, unique, with 1
  std::string        base;   // optional vertex tag

  void canonicalize();
  bool contains(Word const& w) const;  // words must be canonical

  bool operator==(Ball const& other) const {
    return radius == other.radius && words == other.words;
  }
};

// Strict total order for canonical ball lists: (radius, words, base).
bool ball_less(Ball const& a, Ball const& b);

// The complete r-ball of B at position alpha; only meaningful when
// |alpha| <= B.radius - r.
Ball sub_ball(Ball const& b, Word const& alpha, int r);

// JSON: {"radius": n, "words": ["a b~", ...], "base": "v"}; words are
// rendered outermost letter first over the given letter names.
std::string ball_to_json(Ball const& b, std::vector<std::string> const& letters);
Ball        ball_from_json(std::string const&              text,
                           std::vector<std::string> const& letters);

// The letter names of the Omega(E,C) alphabet: edge names in id order.
std::vector<std::string> edge_alphabet(SeparatedGraph const& g);

// ---------------------------------------------------------------------------
// Balls of Omega(E,C).

// All n-balls of Omega(E,C), canonically sorted.  Extension is layer-local:
// at a layer-1 position the whole fiber s^{-1}(v) is present (no choice); at
// a layer-0 position exactly one inverse edge per group, with the arrival
// group forced to the backtrack.  n = 0 yields one base-tagged trivial ball
// per vertex.
std::vector<Ball> enumerate_balls(SeparatedGraph const& g, int n,
                                  int64_t budget = kDefaultBallBudget);

// OpenMP variant (parallel over base vertices); identical output.
std::vector<Ball> enumerate_balls_parallel(SeparatedGraph const& g, int n,
                                           int64_t budget = kDefaultBallBudget);

// The n-ball B(v) of a level-n vertex of the tower (the vertex <-> ball
// bijection), and its inverse.  vertex_ball uses the recursive radius
// reduction through the 1-graph, so it is independent of enumerate_balls.
Ball vertex_ball(BratteliTower const& t, int level, std::string const& vname);
std::string ball_vertex(BratteliTower const& t, Ball const& b);

// ---------------------------------------------------------------------------
// Abstract subshifts over a free alphabet.

// All R-balls over a free alphabet of the given letters (every right-convex
// word tree of depth <= R).
std::vector<Ball> all_balls(std::vector<std::string> const& letters, int R,
                            int64_t budget = kDefaultBallBudget);

// True iff D' is a consistent neighbour ball of D across the length-1 step
// l in D: the overlap of the two R-balls agrees.
bool ball_compat(Ball const& d, SignedEdge l, Ball const& dp);

// B_R(Omega^F): R-balls avoiding every forbidden ball (exact equality at
// every position where the sub-ball is complete), then the greatest
// fixpoint of one-step extendability.
std::vector<Ball> prune_allowed_balls(std::vector<std::string> const& letters,
                                      int R, std::vector<Ball> const& forbidden,
                                      int64_t budget = kDefaultBallBudget);

// OpenMP variant (parallel survival scan); identical output.
std::vector<Ball> prune_allowed_balls_parallel(
    std::vector<std::string> const& letters, int R,
    std::vector<Ball> const& forbidden, int64_t budget = kDefaultBallBudget);

// ---------------------------------------------------------------------------
// Recoding.

// The alphabet A^[n] of an allowed set of R-balls: one symbol per realized
// transition (target n-ball <-letter- source n-ball), with the positive
// letter in the target and its inverse in the source.  Symbol names are
// `[Bi<a|Bj]` with i, j indices into `balls`.
struct RecodedAlphabet {
  struct Symbol {
    int  target;  // ball index
    int  letter;  // positive base letter index
    int  source;  // ball index
    auto operator<=>(Symbol const&) const = default;
  };

  int                      radius = 0;  // n: the radius of `balls`
  std::vector<std::string> base_letters;
  std::vector<Ball>        balls;    // canonical n-balls
  std::vector<Symbol>      symbols;  // canonical by (target, letter, source)
  std::vector<std::string> names;    // aligned with symbols

  int ball_index(Ball const& b) const;      // -1 if absent
  int symbol_index(Symbol const& s) const;  // -1 if absent
};

RecodedAlphabet recoded_alphabet(std::vector<std::string> const& letters,
                                 std::vector<Ball> const& allowed, int n);

// B^[n]: the (R-n)-ball of B over A^[n].  Applying an original inverse
// letter is a positive symbol and vice versa; the base tag records the
// centre ball ("B<i>").  Throws RadiusTooSmall unless 0 < n < B.radius and
// NoSuchBall if a sub-ball or transition is missing from the alphabet.
Ball ball_recode(Ball const& b, int n, RecodedAlphabet const& ra);
Ball ball_recode(Ball const& b, int n, std::vector<Ball> const& allowed);

// The inverse expansion: reassemble the R-ball from a recoded ball via
// Psi (union of translated member n-balls along every recoded word).
Ball psi_recover(Ball const& recoded, int centre_ball, RecodedAlphabet const& ra);

// ---------------------------------------------------------------------------
// Graph representation of 1-step subshifts.

struct Representation {
  SeparatedGraph           graph;
  std::vector<std::string> rep_letters;  // the alphabet of `one_balls`
  std::vector<Ball>        one_balls;    // layer-0 vertex i <-> "B<i>"
  std::vector<Ball>        survivors;    // finite type: pruned R-balls
  RecodedAlphabet          recoding;     // finite type, R >= 2: dictionary
};

// The bipartite separated graph of a 1-step subshift: layer 0 = allowed
// 1-balls, layer 1 = symbols, edges sym+/sym- with ranges target/source,
// groups X_B(s) for 1 != s in B.  Throws UnstableBallSet if some ball has
// a letter with no matching neighbour ball.
Representation represent_one_step(std::vector<std::string> const& letters,
                                  std::vector<Ball> const&        allowed);

// Prune at radius R, recode by n = R-1 to a 1-step subshift, represent.
Representation represent_finite_type(std::vector<std::string> const& letters,
                                     int R, std::vector<Ball> const& forbidden,
                                     int64_t budget = kDefaultBallBudget);

}  // namespace sepgraph

#endif  // SEPGRAPH_SUBSHIFT_HPP_
