// bvtk_main.cpp -- command line front end.
//
// Subcommands mirror the library modules: family constructors, validation,
// orbit and coding windows, basic blocks, pair evidence, morphisms,
// class-membership evidence, equivalence search, telescoping checks, and the
// two renderers. Structured reports print as JSON on stdout; words, windows,
// and drawings print as plain text.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bvtk/analysis.hpp"
#include "bvtk/blocks.hpp"
#include "bvtk/diagram.hpp"
#include "bvtk/dynamics.hpp"
#include "bvtk/families.hpp"
#include "bvtk/json_io.hpp"
#include "bvtk/morphisms.hpp"
#include "bvtk/pairs.hpp"
#include "bvtk/pathspec.hpp"
#include "bvtk/render.hpp"

namespace {

using bvtk::Diagram;
using bvtk::Dim;
using bvtk::PathSpec;
using bvtk::TimeWindow;
using nlohmann::json;

TimeWindow parse_window(const std::string& text) {
  size_t dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("window: expected <lo>..<hi>, got '" + text + "'");
  TimeWindow w;
  try {
    w.lo = std::stoll(text.substr(0, dots));
    w.hi = std::stoll(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("window: expected <lo>..<hi>, got '" + text + "'");
  }
  if (w.lo > w.hi) throw std::invalid_argument("window: lo exceeds hi in '" + text + "'");
  return w;
}

std::pair<int, int> find_vertex(const Diagram& d, const std::string& name) {
  for (int level = 1; level <= d.depth(); ++level) {
    int idx = d.index_of(level, name);
    if (idx >= 0) return {level, idx};
  }
  throw std::invalid_argument("no vertex named '" + name + "'");
}

std::string path_text(const Diagram& d, const bvtk::FinitePath& p) {
  std::string out;
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.edges[static_cast<size_t>(i)].ordinal);
    out += '@';
    out += d.at(i + 1, p.vertex_at(i + 1)).name;
  }
  return out;
}

json window_json(TimeWindow w) { return json{{"lo", w.lo}, {"hi", w.hi}}; }

json opt_dim(const std::optional<Dim>& v) { return v ? json(*v) : json(); }

json cut_times_json(const std::vector<std::optional<Dim>>& cuts) {
  json arr = json::array();
  for (const auto& c : cuts) arr.push_back(opt_dim(c));
  return arr;
}

json evidence_json(const bvtk::PairEvidence& e, const Diagram& d) {
  static const char* kinds[] = {"same-k-coding", "depth", "cut", "long-cuts",
                                "k-equivalent-up-to"};
  return json{{"x", format_pathspec(e.x, d)},
              {"y", format_pathspec(e.y, d)},
              {"kind", kinds[static_cast<int>(e.kind)]},
              {"k", e.k},
              {"j", e.j},
              {"holds", e.holds},
              {"time", opt_dim(e.time)},
              {"window", window_json(e.window)},
              {"cut_times", cut_times_json(e.cut_times)}};
}

json bool_list(const std::vector<char>& v) {
  json arr = json::array();
  for (char c : v) arr.push_back(static_cast<bool>(c));
  return arr;
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

// family ---------------------------------------------------------------

void setup_family(CLI::App& app) {
  auto* sub = app.add_subcommand("family", "construct a named example diagram");
  auto params = std::make_shared<bvtk::FamilyParams>();
  auto out_path = std::make_shared<std::string>("-");
  params->depth = 8;
  sub->add_option("name", params->family, "gj | gj-mod | odometer | fig1 | dm2ww | kite | kite-det")
      ->required();
  sub->add_option("--levels", params->depth, "number of levels below the root");
  sub->add_option("--radices", params->radices, "odometer: edge multiplicities, cycled")
      ->delimiter(',');
  sub->add_option("--counts", params->counts, "odometer: vertex counts per level, cycled")
      ->delimiter(',');
  sub->add_option("--profile", params->profile, "kite-det: nonincreasing width profile")
      ->delimiter(',');
  sub->add_option("-o,--output", *out_path, "output file; - for stdout");
  sub->callback([params, out_path] {
    Diagram d = make_family(*params);
    if (*out_path == "-")
      std::cout << diagram_to_json(d) << "\n";
    else
      save_diagram_file(d, *out_path);
  });
}

// validate ---------------------------------------------------------------

void setup_validate(CLI::App& app) {
  auto* sub = app.add_subcommand("validate", "structural and ordering checks on a diagram");
  auto path = std::make_shared<std::string>();
  sub->add_option("diagram", *path, "diagram JSON file")->required();
  sub->callback([path] {
    Diagram d = bvtk::load_diagram_file(*path);
    bvtk::ValidationReport r = validate(d);
    emit(json{{"properly_ordered_at_horizon", r.properly_ordered_at_horizon},
              {"simplicity_evidence", r.simplicity_evidence},
              {"width_profile", r.width_profile},
              {"violations", r.violations}});
  });
}

// orbit ---------------------------------------------------------------

struct OrbitArgs {
  std::string spec;
  std::string window;
  int k = 1;
  int dots = 0;
  std::string path;
};

void setup_orbit(CLI::App& app) {
  auto* sub = app.add_subcommand("orbit", "print a coding window or dot indices along an orbit");
  auto a = std::make_shared<OrbitArgs>();
  sub->add_option("--spec", a->spec, "path spec text")->required();
  sub->add_option("--k", a->k, "truncation level of the printed coding");
  sub->add_option("--window", a->window, "orbit times <lo>..<hi>, clipped to the orbit")
      ->required();
  sub->add_option("--dots", a->dots, "print dot indices at this level instead of the coding");
  sub->add_option("diagram", a->path, "diagram JSON file")->required();
  sub->callback([a] {
    Diagram d = bvtk::load_diagram_file(a->path);
    int N = d.depth();
    PathSpec x = parse_pathspec(a->spec, d);
    TimeWindow want = parse_window(a->window);
    bvtk::OrbitBounds b = orbit_bounds(x, N, d);
    Dim lo = std::max(want.lo, b.lo);
    Dim hi = std::min(want.hi, b.hi);
    if (lo > hi) throw std::invalid_argument("window does not meet the orbit");
    if (a->dots > 0) {
      PathSpec cur = x;
      for (Dim m = 0; m > lo; --m) cur = step(cur, bvtk::Direction::Pred, N, d);
      for (Dim m = 0; m < lo; ++m) cur = step(cur, bvtk::Direction::Succ, N, d);
      for (Dim m = lo; m <= hi; ++m) {
        std::cout << m << "\t" << dot_index(cur, a->dots, d) << "\n";
        if (m < hi) cur = step(cur, bvtk::Direction::Succ, N, d);
      }
      return;
    }
    std::vector<bvtk::FinitePath> win = k_coding_window(x, a->k, lo, hi, d);
    for (size_t i = 0; i < win.size(); ++i)
      std::cout << lo + static_cast<Dim>(i) << "\t" << path_text(d, win[i]) << "\n";
  });
}

// blocks / coding ----------------------------------------------------------

void setup_blocks(CLI::App& app) {
  auto* sub = app.add_subcommand("blocks", "the k-basic block at a vertex, one letter per path");
  auto name = std::make_shared<std::string>();
  auto k = std::make_shared<int>(1);
  auto path = std::make_shared<std::string>();
  sub->add_option("--vertex", *name, "vertex name")->required();
  sub->add_option("--k", *k, "truncation level of the letters")->required();
  sub->add_option("diagram", *path, "diagram JSON file")->required();
  sub->callback([name, k, path] {
    Diagram d = bvtk::load_diagram_file(*path);
    auto [level, index] = find_vertex(d, *name);
    bvtk::Block b = basic_block(d, level, index, *k);
    bvtk::Alphabet a = make_alphabet(d, *k);
    bvtk::RankTable rt = make_rank_table(d);
    for (Dim i = 0; i < b.length(); ++i) {
      if (i) std::cout << " ";
      std::cout << letter_name(d, a, rt, b.letters[static_cast<size_t>(i)]);
    }
    std::cout << "\n";
  });
}

void setup_coding(CLI::App& app) {
  auto* sub = app.add_subcommand("coding", "the coding of a vertex by the level-j vertices");
  auto name = std::make_shared<std::string>();
  auto j = std::make_shared<int>(1);
  auto path = std::make_shared<std::string>();
  sub->add_option("--vertex", *name, "vertex name")->required();
  sub->add_option("--j", *j, "level of the classifying vertices")->required();
  sub->add_option("diagram", *path, "diagram JSON file")->required();
  sub->callback([name, j, path] {
    Diagram d = bvtk::load_diagram_file(*path);
    auto [level, index] = find_vertex(d, *name);
    bvtk::Block b = coding_by_vertices(d, level, index, *j);
    for (Dim i = 0; i < b.length(); ++i) {
      if (i) std::cout << " ";
      std::cout << d.at(*j, static_cast<int>(b.letters[static_cast<size_t>(i)])).name;
    }
    std::cout << "\n";
  });
}

// pair ---------------------------------------------------------------

struct PairArgs {
  std::string x, y, window = "-64..64", path;
  int k = 1;
  int jmax = 0;
  int j = 0;
  std::vector<std::string> claims;
};

void setup_pair(CLI::App& app) {
  auto* sub = app.add_subcommand("pair", "evidence records about one pair, one JSON line each");
  auto a = std::make_shared<PairArgs>();
  sub->add_option("--x", a->x, "first path spec")->required();
  sub->add_option("--y", a->y, "second path spec")->required();
  sub->add_option("--k", a->k, "coding level under test")->required();
  sub->add_option("--jmax", a->jmax, "search cuts at every level in (k, jmax]");
  sub->add_option("--j", a->j, "search a single cut at this level");
  sub->add_option("--window", a->window, "orbit times <lo>..<hi>");
  sub->add_option("--claim", a->claims, "subset of same,depth,cut,long-cuts,keq")
      ->delimiter(',');
  sub->add_option("diagram", a->path, "diagram JSON file")->required();
  sub->callback([a] {
    Diagram d = bvtk::load_diagram_file(a->path);
    int N = d.depth();
    PathSpec x = parse_pathspec(a->x, d);
    PathSpec y = parse_pathspec(a->y, d);
    TimeWindow w = clip_window(x, y, parse_window(a->window), N, d);
    std::vector<std::string> claims = a->claims;
    if (claims.empty()) {
      claims = {"same", "depth"};
      if (a->j > 0) claims.push_back("cut");
      if (a->jmax > 0) claims.push_back("long-cuts");
    }
    for (const std::string& claim : claims) {
      bvtk::PairEvidence e;
      e.x = x;
      e.y = y;
      e.k = a->k;
      e.window = w;
      if (claim == "same") {
        e.kind = bvtk::PairEvidence::Kind::SameKCoding;
        e.holds = same_k_coding_window(x, y, a->k, w, d);
      } else if (claim == "depth") {
        e.kind = bvtk::PairEvidence::Kind::Depth;
        auto dw = depth_witness(x, y, a->k, w, d);
        e.holds = dw.has_value() && dw->k == a->k;
        if (e.holds) e.time = dw->difference_time;
      } else if (claim == "cut") {
        if (a->j <= 0) throw std::invalid_argument("claim 'cut' needs --j");
        e.kind = bvtk::PairEvidence::Kind::Cut;
        e.j = a->j;
        e.time = find_cut(x, y, a->j, w, d);
        e.holds = e.time.has_value();
      } else if (claim == "long-cuts") {
        if (a->jmax <= 0) throw std::invalid_argument("claim 'long-cuts' needs --jmax");
        e.kind = bvtk::PairEvidence::Kind::LongCuts;
        e.j = a->jmax;
        bvtk::LongCutsReport r = long_cuts_report(x, y, a->k, a->jmax, w, d);
        e.cut_times = r.cut_times;
        e.holds = r.all_found();
      } else if (claim == "keq") {
        e.kind = bvtk::PairEvidence::Kind::KEquivalentUpTo;
        e.holds = k_equivalent_up_to(x, y, a->k, N, d);
      } else {
        throw std::invalid_argument("unknown claim '" + claim + "'");
      }
      std::cout << evidence_json(e, d).dump() << "\n";
    }
  });
}

// morphism ---------------------------------------------------------------

void setup_morphism(CLI::App& app) {
  auto* sub = app.add_subcommand("morphism", "substitution words and parses");
  sub->require_subcommand(1);

  auto* ptm = sub->add_subcommand("ptm", "prefix of the a/b doubling word");
  auto len = std::make_shared<Dim>(32);
  ptm->add_option("--length", *len, "prefix length")->required();
  ptm->callback([len] { std::cout << bvtk::ptm_word(*len) << "\n"; });

  auto* tau_cmd = sub->add_subcommand("tau", "the level-j substitution, or its image of a word");
  auto tj = std::make_shared<int>(3);
  auto word = std::make_shared<std::string>();
  tau_cmd->add_option("--j", *tj, "substitution index, at least 3")->required();
  tau_cmd->add_option("--apply", *word, "word over D,E to substitute");
  tau_cmd->callback([tj, word] {
    bvtk::Morphism m = bvtk::tau(*tj);
    if (word->empty()) {
      std::cout << "E -> " << m.images.at('E') << "\n";
      std::cout << "D -> " << m.images.at('D') << "\n";
    } else {
      std::cout << bvtk::apply(m, *word) << "\n";
    }
  });

  auto* desub = sub->add_subcommand("desub", "parse a window of a substituted word");
  auto dj = std::make_shared<int>(3);
  auto dw = std::make_shared<std::string>();
  desub->add_option("--j", *dj, "substitution index, at least 3")->required();
  desub->add_option("word", *dw, "word over D,E")->required();
  desub->callback([dj, dw] {
    bvtk::ParseResult r = bvtk::desubstitute(*dw, *dj);
    static const char* kinds[] = {"unique", "ambiguous", "no-parse"};
    json fact = json::array();
    for (const auto& [letter, start] : r.factorization)
      fact.push_back(json{{"letter", std::string(1, letter)}, {"start", start}});
    emit(json{{"kind", kinds[static_cast<int>(r.kind)]},
              {"count", r.count},
              {"factorization", fact}});
  });

  auto* tilde = sub->add_subcommand("tilde", "column-keep reduction expanded down to level 2");
  auto tn = std::make_shared<int>(4);
  auto tpath = std::make_shared<std::string>();
  tilde->add_option("--n", *tn, "starting level, at least 3")->required();
  tilde->add_option("diagram", *tpath, "diagram JSON file")->required();
  tilde->callback([tn, tpath] {
    Diagram d = bvtk::load_diagram_file(*tpath);
    std::cout << bvtk::tilde_reduction(d, *tn) << "\n";
  });
}

// classify / sne ------------------------------------------------------------

json depth_evidence_json(const bvtk::DepthEvidence& w, const Diagram& d) {
  return json{{"x", format_pathspec(w.x, d)},
              {"y", format_pathspec(w.y, d)},
              {"k", w.k},
              {"difference_time", w.difference_time},
              {"window", window_json(w.window)},
              {"cut_times", cut_times_json(w.cut_times)},
              {"all_cuts_found", w.all_cuts_found},
              {"next_cut_found", w.next_cut_found}};
}

struct SearchArgs {
  bvtk::SearchParams params;
  std::string path;
};

void add_search_options(CLI::App* sub, const std::shared_ptr<SearchArgs>& a) {
  sub->add_option("--horizon", a->params.horizon, "resolution level; 0 means the diagram depth");
  sub->add_option("--window", a->params.window, "scan radius around each pair");
  sub->add_option("--prefix-bound", a->params.prefix_bound, "longest explicit candidate prefix");
  sub->add_option("--witness-cap", a->params.witness_cap, "stored witnesses per depth");
  sub->add_option("--max-pairs", a->params.max_pairs, "pair scan budget");
  sub->add_option("diagram", a->path, "diagram JSON file")->required();
}

void setup_classify(CLI::App& app) {
  auto* sub = app.add_subcommand("classify", "bounded depth/cut evidence over candidate pairs");
  auto a = std::make_shared<SearchArgs>();
  sub->add_option("--max-depth", a->params.max_depth, "largest pair depth searched");
  add_search_options(sub, a);
  sub->callback([a] {
    Diagram d = bvtk::load_diagram_file(a->path);
    bvtk::EvidenceReport r = class_evidence(d, a->params);
    json witnesses = json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(depth_evidence_json(w, d));
    json cut_seen = json::array();
    for (const auto& row : r.cut_seen) cut_seen.push_back(bool_list(row));
    emit(json{{"max_depth", r.max_depth},
              {"horizon", r.horizon},
              {"j_max", r.j_max},
              {"window", r.window},
              {"prefix_bound", r.prefix_bound},
              {"candidates", r.candidates},
              {"pairs_scanned", r.pairs_scanned},
              {"incomplete", r.incomplete},
              {"witness_counts", r.witness_counts},
              {"cut_seen", cut_seen},
              {"long_cuts_seen", bool_list(r.long_cuts_seen)},
              {"no_next_cut_witness", bool_list(r.no_next_cut_witness)},
              {"max_cut_level", r.max_cut_level},
              {"witnesses", witnesses},
              {"w_evidence", r.w_evidence},
              {"w0_evidence", r.w0_evidence},
              {"ww_good_k", r.ww_good_k},
              {"u0_consistent", r.u0_consistent},
              {"u0_refuted", r.u0_refuted}});
  });
}

void setup_sne(CLI::App& app) {
  auto* sub = app.add_subcommand("sne", "k-equivalent pair search over candidate specs");
  auto a = std::make_shared<SearchArgs>();
  sub->add_option("--max-k", a->params.max_depth, "largest equivalence level searched");
  add_search_options(sub, a);
  sub->callback([a] {
    Diagram d = bvtk::load_diagram_file(a->path);
    bvtk::SneReport r = sne_evidence(d, a->params);
    json witnesses = json::array();
    for (const auto& w : r.witnesses)
      witnesses.push_back(json{{"x", format_pathspec(w.x, d)},
                               {"y", format_pathspec(w.y, d)},
                               {"k", w.k},
                               {"verified", w.verified}});
    emit(json{{"max_k", r.max_k},
              {"horizon", r.horizon},
              {"prefix_bound", r.prefix_bound},
              {"window", r.window},
              {"candidates", r.candidates},
              {"witness_counts", r.witness_counts},
              {"witnesses", witnesses},
              {"generator_checked", r.generator_checked},
              {"generator_agrees", r.generator_agrees}});
  });
}

// telcheck ---------------------------------------------------------------

struct TelArgs {
  std::vector<int> levels;
  std::vector<std::string> pair;
  int k = 1;
  int j = 2;
  std::string window = "-256..256";
  std::string path;
};

void setup_telcheck(CLI::App& app) {
  auto* sub =
      app.add_subcommand("telcheck", "depth/cut correspondence of one pair under a telescoping");
  auto a = std::make_shared<TelArgs>();
  sub->add_option("--levels", a->levels, "kept levels, starting at 0")->delimiter(',')->required();
  sub->add_option("--pair", a->pair, "the two path specs")->expected(2)->required();
  sub->add_option("--k", a->k, "claimed depth in the original")->required();
  sub->add_option("--j", a->j, "claimed cut level in the original")->required();
  sub->add_option("--window", a->window, "orbit times <lo>..<hi>");
  sub->add_option("diagram", a->path, "diagram JSON file")->required();
  sub->callback([a] {
    Diagram d = bvtk::load_diagram_file(a->path);
    PathSpec x = parse_pathspec(a->pair[0], d);
    PathSpec y = parse_pathspec(a->pair[1], d);
    bvtk::TelescopeCheck r =
        telescope_correspondence(d, a->levels, x, y, a->k, a->j, parse_window(a->window));
    emit(json{{"levels", r.levels},
              {"k", r.k},
              {"j", r.j},
              {"l_k", r.l_k},
              {"l_j", r.l_j},
              {"pair_verified", r.pair_verified},
              {"cut_time", r.cut_time},
              {"image_depth", r.image_depth},
              {"image_cut", opt_dim(r.image_cut)},
              {"part1", r.part1},
              {"part2", r.part2},
              {"part3", r.part3},
              {"part4", r.part4},
              {"all_parts", r.all_parts()}});
  });
}

// render ---------------------------------------------------------------

struct RenderArgs {
  bool dot = false;
  bool array = false;
  std::string spec;
  int rows = 1;
  std::string window = "-16..16";
  std::string path;
};

void setup_render(CLI::App& app) {
  auto* sub = app.add_subcommand("render", "Graphviz export or the cut-structure array");
  auto a = std::make_shared<RenderArgs>();
  sub->add_flag("--dot", a->dot, "emit Graphviz DOT with ordinal edge labels");
  sub->add_flag("--array", a->array, "emit the minimality grid along an orbit");
  sub->add_option("--spec", a->spec, "path spec text (with --array)");
  sub->add_option("--rows", a->rows, "levels drawn, top row first (with --array)");
  sub->add_option("--window", a->window, "orbit times <lo>..<hi> (with --array)");
  sub->add_option("diagram", a->path, "diagram JSON file")->required();
  sub->callback([a] {
    Diagram d = bvtk::load_diagram_file(a->path);
    if (a->dot == a->array)
      throw std::invalid_argument("render: pass exactly one of --dot, --array");
    if (a->dot) {
      std::cout << to_dot(d);
      return;
    }
    if (a->spec.empty()) throw std::invalid_argument("render --array needs --spec");
    PathSpec x = parse_pathspec(a->spec, d);
    std::cout << ascii_array(d, x, a->rows, parse_window(a->window));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Bratteli-Vershik truncations: build, transform, analyze"};
  app.require_subcommand(1);
  setup_family(app);
  setup_validate(app);
  setup_orbit(app);
  setup_blocks(app);
  setup_coding(app);
  setup_pair(app);
  setup_morphism(app);
  setup_classify(app);
  setup_sne(app);
  setup_telcheck(app);
  setup_render(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
