//
// sepgraph - the command-line front end.
//
// Exit codes: 0 success, 1 domain error (diagnostic on stderr), 2 usage
// error.  Output is JSON with {"schema": 1} unless the verb emits a graph
// (SGF) or a drawing (DOT).  All output is deterministic.
//

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepgraph/bratteli.hpp"
#include "sepgraph/classify.hpp"
#include "sepgraph/graph.hpp"
#include "sepgraph/hereditary.hpp"
#include "sepgraph/prime.hpp"
#include "sepgraph/repro.hpp"
#include "sepgraph/subshift.hpp"
#include "sepgraph/wordshift.hpp"

namespace {

using nlohmann::json;
using namespace sepgraph;

int64_t level_budget() {
  if (char const* env = std::getenv("SEPGRAPH_MAX_VERTICES")) {
    try {
      int64_t v = std::stoll(env);
      if (v > 0) {
        return v;
      }
    } catch (std::exception const&) {
      fail("InvalidBudget",
           "SEPGRAPH_MAX_VERTICES must be a positive integer");
    }
    fail("InvalidBudget", "SEPGRAPH_MAX_VERTICES must be a positive integer");
  }
  return kDefaultLevelBudget;
}

void emit(std::string const& out_path, std::string const& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    fail("CannotWrite", "cannot open '" + out_path + "' for writing");
  }
  f << text;
}

void emit_json(std::string const& out_path, json j) {
  j["schema"] = 1;
  emit(out_path, j.dump(2) + "\n");
}

json name_set(SeparatedGraph const& g, VertexIdSet const& s) {
  std::vector<std::string> names;
  for (int v : s) {
    names.push_back(g.vertices[v].name);
  }
  std::sort(names.begin(), names.end());
  return json(names);
}

VertexIdSet parse_vertex_list(SeparatedGraph const& g,
                              std::vector<std::string> const& names) {
  VertexIdSet out;
  for (auto const& n : names) {
    out.insert(g.vertex_id(n));
  }
  return out;
}

json graph_summary(SeparatedGraph const& g) {
  int l0 = 0, l1 = 0;
  for (auto const& v : g.vertices) {
    (v.layer == 0 ? l0 : l1)++;
  }
  return json{{"vertices", g.vertices.size()},
              {"layer0", l0},
              {"layer1", l1},
              {"edges", g.edges.size()},
              {"groups", g.groups.size()}};
}

json letter_set(SeparatedGraph const& g, SignedEdgeSet const& a) {
  std::vector<std::string> names;
  for (auto const& l : a) {
    names.push_back(letter_to_string(g, l));
  }
  std::sort(names.begin(), names.end());
  return json(names);
}

std::vector<Ball> read_ball_file(std::string const& path,
                                 std::vector<std::string> const& letters) {
  std::ifstream f(path);
  if (!f) {
    fail("CannotRead", "cannot open '" + path + "'");
  }
  json doc = json::parse(f, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) {
    fail("InvalidBallFile", "'" + path + "' is not a JSON array of balls");
  }
  std::vector<Ball> out;
  for (auto const& item : doc) {
    out.push_back(ball_from_json(item.dump(), letters));
  }
  return out;
}

// A fixed palette cycling over edge groups; groupless edges stay black.
std::string dot_color(int k) {
  static char const* palette[] = {"#1b6f9c", "#c23b22", "#2e8b57", "#8e6d0a",
                                  "#6a3d9a", "#b15928", "#177e7e", "#a01a58"};
  return palette[k % 8];
}

std::string to_dot(SeparatedGraph const& g) {
  std::ostringstream o;
  o << "digraph sepgraph {\n  rankdir=BT;\n  node [fontname=\"sans-serif\"];\n";
  for (auto const& v : g.vertices) {
    o << "  \"" << v.name << "\" [shape="
      << (v.layer == 0 ? "ellipse" : "box") << "];\n";
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    int gr = g.group_of[e];
    o << "  \"" << g.vertices[g.edges[e].source].name << "\" -> \""
      << g.vertices[g.edges[e].range].name << "\" [label=\""
      << g.edges[e].name << "\"";
    if (gr >= 0) {
      o << ", color=\"" << dot_color(gr) << "\", fontcolor=\""
        << dot_color(gr) << "\"";
    }
    o << "];\n";
  }
  o << "}\n";
  return o.str();
}

std::vector<std::string> split_commas(std::string const& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"workbench for finite bipartite separated graphs"};
  app.require_subcommand(1);

  std::string in_path, out_path, vertices_flag, forbid_flag, letters_flag;
  std::string forbidden_balls_path, data_dir = "data";
  int  n = 1, radius = 1, recode_n = 1, detect_bound = 8;
  bool as_quotient = false;

  auto add_common = [&](CLI::App* c, bool needs_input) {
    if (needs_input) {
      c->add_option("input", in_path, "input graph (SGF)")->required();
    }
    c->add_option("-o,--output", out_path, "write output to a file");
  };

  auto* c_validate = app.add_subcommand("validate", "parse and check a graph");
  add_common(c_validate, true);

  auto* c_level = app.add_subcommand("level", "level n of the tower (SGF)");
  add_common(c_level, true);
  c_level->add_option("-n,--level", n, "level")->required();

  auto* c_tower = app.add_subcommand("tower", "level sizes up to n");
  add_common(c_tower, true);
  c_tower->add_option("-n,--levels", n, "height")->required();

  auto* c_hsets =
      app.add_subcommand("hsets", "the hereditary C-saturated lattice");
  add_common(c_hsets, true);
  c_hsets->add_option("-n,--level", n, "compute on level n instead")
      ->default_val(0);

  auto* c_closure =
      app.add_subcommand("closure", "hereditary C-saturated closure of a set");
  add_common(c_closure, true);
  c_closure
      ->add_option("-s,--vertices", vertices_flag,
                   "comma-separated vertex names")
      ->required();

  auto* c_quotient = app.add_subcommand(
      "quotient", "quotient by the closure of a vertex set (SGF)");
  add_common(c_quotient, true);
  c_quotient
      ->add_option("-s,--vertices", vertices_flag,
                   "comma-separated vertex names")
      ->required();

  auto* c_k0 = app.add_subcommand("k0", "Grothendieck group of a level");
  add_common(c_k0, true);
  c_k0->add_option("-n,--level", n, "level")->default_val(0);

  auto* c_balls = app.add_subcommand("balls", "all n-balls of Omega(E,C)");
  add_common(c_balls, true);
  c_balls->add_option("-n,--radius", n, "radius")->required();

  auto* c_recode = app.add_subcommand(
      "recode", "recoded alphabet of a forbidden-ball subshift");
  add_common(c_recode, false);
  c_recode->add_option("-l,--letters", letters_flag, "comma-separated letters")
      ->required();
  c_recode->add_option("-R,--radius", radius, "pruning radius")->required();
  c_recode->add_option("-n,--window", recode_n, "recoding radius n < R")
      ->required();
  c_recode->add_option("-f,--forbidden", forbidden_balls_path,
                       "JSON array of forbidden balls");

  auto* c_represent = app.add_subcommand(
      "represent", "separated graph of a finite-type subshift (SGF)");
  add_common(c_represent, false);
  c_represent
      ->add_option("-l,--letters", letters_flag, "comma-separated letters")
      ->required();
  c_represent->add_option("-R,--radius", radius, "forbidden-ball radius")
      ->default_val(1);
  c_represent->add_option("-f,--forbidden", forbidden_balls_path,
                          "JSON array of forbidden balls");

  auto* c_classify = app.add_subcommand("classify", "simplicity dichotomy");
  add_common(c_classify, true);

  auto* c_cantor = app.add_subcommand("cantor", "Cantor criterion");
  add_common(c_cantor, true);

  auto* c_prime = app.add_subcommand("prime", "primeness decision");
  add_common(c_prime, true);

  auto* c_fromwords = app.add_subcommand(
      "fromwords", "binary subshift given by forbidden words");
  add_common(c_fromwords, false);
  c_fromwords
      ->add_option("-w,--forbid", forbid_flag, "comma-separated binary words")
      ->required();
  c_fromwords->add_option("-n,--level", n, "tower level")->default_val(2);
  c_fromwords
      ->add_option("-N,--detect", detect_bound, "finite-type search bound")
      ->default_val(8);
  c_fromwords->add_flag("-q,--quotient", as_quotient,
                        "emit the quotient graph (SGF; finite type only)");

  auto* c_dot = app.add_subcommand("dot", "DOT drawing of a graph");
  add_common(c_dot, true);

  auto* c_repro =
      app.add_subcommand("repro", "run the whole acceptance table");
  c_repro->add_option("-d,--data", data_dir, "corpus directory")
      ->default_val("data");
  c_repro->add_option("-o,--output", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);  // prints help or the usage diagnostic
    return code == 0 ? 0 : 2;
  }

  if (c_validate->parsed()) {
    auto g = load_file(in_path);
    json j = graph_summary(g);
    j["file"]     = in_path;
    j["warnings"] = g.warnings();
    j["valid"]    = true;
    emit_json(out_path, j);
  } else if (c_level->parsed()) {
    auto t = tower(load_file(in_path), n, level_budget());
    emit(out_path, save(t.levels[n]));
  } else if (c_tower->parsed()) {
    auto t = tower(load_file(in_path), n, level_budget());
    json levels = json::array();
    for (auto const& lv : t.levels) {
      levels.push_back(graph_summary(lv));
    }
    emit_json(out_path, json{{"levels", levels}});
  } else if (c_hsets->parsed()) {
    auto t   = tower(load_file(in_path), n, level_budget());
    auto g   = t.levels[n];
    auto lat = enumerate_hsets(g);
    json sets = json::array();
    for (auto const& s : lat.sets) {
      sets.push_back(name_set(g, s));
    }
    json hasse = json::array();
    for (auto const& [lo, hi] : lat.hasse) {
      hasse.push_back(json::array({lo, hi}));
    }
    emit_json(out_path,
              json{{"level", n}, {"sets", sets}, {"hasse", hasse}});
  } else if (c_closure->parsed()) {
    auto g = load_file(in_path);
    auto c = closure_hs(g, parse_vertex_list(g, split_commas(vertices_flag)));
    emit_json(out_path, json{{"closure", name_set(g, c)}});
  } else if (c_quotient->parsed()) {
    auto g = load_file(in_path);
    auto c = closure_hs(g, parse_vertex_list(g, split_commas(vertices_flag)));
    emit(out_path, save(quotient_graph(g, c)));
  } else if (c_k0->parsed()) {
    auto t  = tower(load_file(in_path), n, level_budget());
    auto gg = grothendieck(monoid_presentation(t, n));
    json torsion = json::array();
    for (auto const& d : gg.torsion) {
      torsion.push_back(d.str());
    }
    emit_json(out_path, json{{"level", n},
                             {"free_rank", gg.free_rank},
                             {"torsion", torsion}});
  } else if (c_balls->parsed()) {
    auto g       = load_file(in_path);
    auto letters = edge_alphabet(g);
    json balls   = json::array();
    for (auto const& b : enumerate_balls(g, n)) {
      balls.push_back(json::parse(ball_to_json(b, letters)));
    }
    emit_json(out_path, json{{"radius", n}, {"balls", balls}});
  } else if (c_recode->parsed()) {
    auto letters = split_commas(letters_flag);
    std::vector<Ball> forbidden;
    if (!forbidden_balls_path.empty()) {
      forbidden = read_ball_file(forbidden_balls_path, letters);
    }
    auto allowed = prune_allowed_balls(letters, radius, forbidden);
    auto ra      = recoded_alphabet(letters, allowed, recode_n);
    json symbols = json::array();
    for (size_t i = 0; i < ra.symbols.size(); ++i) {
      symbols.push_back(json{{"name", ra.names[i]},
                             {"target", ra.symbols[i].target},
                             {"letter", letters[ra.symbols[i].letter]},
                             {"source", ra.symbols[i].source}});
    }
    json balls = json::array();
    for (auto const& b : ra.balls) {
      balls.push_back(json::parse(ball_to_json(b, letters)));
    }
    emit_json(out_path, json{{"radius", ra.radius},
                             {"balls", balls},
                             {"symbols", symbols}});
  } else if (c_represent->parsed()) {
    auto letters = split_commas(letters_flag);
    std::vector<Ball> forbidden;
    if (!forbidden_balls_path.empty()) {
      forbidden = read_ball_file(forbidden_balls_path, letters);
    }
    emit(out_path, save(represent_finite_type(letters, radius, forbidden).graph));
  } else if (c_classify->parsed()) {
    auto g = load_file(in_path);
    auto v = classify_simplicity(g, 6, level_budget());
    json j;
    switch (v.kind) {
      case SimplicityVerdict::Kind::NotSimple:
        j["verdict"] = "not_simple";
        j["level"]   = v.level;
        j["witness"] = v.witness;
        break;
      case SimplicityVerdict::Kind::GraphAlgebra: {
        j["verdict"] = "graph_algebra";
        json arcs    = json::array();
        for (auto const& a : v.oriented.arcs) {
          arcs.push_back(json{{"name", a.name},
                              {"source", v.oriented.vertices[a.source]},
                              {"target", v.oriented.vertices[a.target]}});
        }
        j["oriented"] = json{{"vertices", v.oriented.vertices}, {"arcs", arcs}};
        break;
      }
      case SimplicityVerdict::Kind::FreeGroup:
        j["verdict"] = "free_group";
        j["rank"]    = v.rank;
        j["base"]    = v.base;
        break;
      case SimplicityVerdict::Kind::Inconclusive:
        j["verdict"] = "inconclusive";
        j["note"]    = v.note;
        break;
    }
    j["bound"] = v.bound;
    emit_json(out_path, j);
  } else if (c_cantor->parsed()) {
    auto g       = load_file(in_path);
    auto r       = is_cantor(g);
    auto letters = edge_alphabet(g);
    json witnesses = json::array();
    for (auto const& b : r.witnesses) {
      witnesses.push_back(json::parse(ball_to_json(b, letters)));
    }
    emit_json(out_path, json{{"cantor", r.cantor},
                             {"dead_ends", letter_set(g, r.a_de)},
                             {"isolated", name_set(g, r.isolated)},
                             {"witnesses", witnesses}});
  } else if (c_prime->parsed()) {
    auto g = load_file(in_path);
    auto v = is_prime(g);
    json j;
    switch (v.kind) {
      case PrimeVerdict::Kind::Prime:
        j["verdict"] = "prime";
        break;
      case PrimeVerdict::Kind::NotPrime:
        j["verdict"] = "not_prime";
        j["witness"] = json{{"left", letter_set(g, v.witness.left)},
                            {"right", letter_set(g, v.witness.right)},
                            {"v_left", name_set(g, v.witness_v_left)},
                            {"v_right", name_set(g, v.witness_v_right)}};
        break;
      case PrimeVerdict::Kind::NotApplicable:
        j["verdict"]  = "not_applicable";
        j["isolated"] = name_set(g, v.cantor.isolated);
        break;
    }
    j["cantor"]          = v.cantor.cantor;
    j["levels_checked"]  = v.levels_checked;
    j["bratteli_agrees"] = v.bratteli_agrees;
    if (!v.note.empty()) {
      j["note"] = v.note;
    }
    emit_json(out_path, j);
  } else if (c_fromwords->parsed()) {
    auto fam = split_commas(forbid_flag);
    auto ft  = finite_type_detect(fam, detect_bound);
    if (as_quotient) {
      emit(out_path, save(word_quotient(fam, n)));
    } else {
      auto g = lamplighter_level(n);
      json j{{"level", n},
             {"hset", name_set(g, forbidden_to_hset(fam, n))}};
      if (ft.finite_type_n) {
        j["finite_type"] = json{{"n", *ft.finite_type_n}};
      } else {
        j["finite_type"] = "unknown_up_to_" + std::to_string(ft.bound);
      }
      emit_json(out_path, j);
    }
  } else if (c_dot->parsed()) {
    emit(out_path, to_dot(load_file(in_path)));
  } else if (c_repro->parsed()) {
    auto table = run_acceptance(data_dir);
    std::ostringstream o;
    int failed = 0;
    for (auto const& r : table) {
      char line[64];
      std::snprintf(line, sizeof line, "%8.1f ms", r.ms);
      o << (r.pass ? "PASS" : "FAIL") << "  c" << (r.id < 10 ? "0" : "")
        << r.id << "  " << r.name << "  " << line
        << (r.detail.empty() ? "" : "  -- " + r.detail) << "\n";
      failed += !r.pass;
    }
    o << (table.size() - failed) << "/" << table.size()
      << " criteria passed\n";
    emit(out_path, o.str());
    return failed == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (sepgraph::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
