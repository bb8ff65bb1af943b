#include "hda/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>

#include "hda/bisim/bisim.hpp"
#include "hda/core/errors.hpp"
#include "hda/core/json_io.hpp"
#include "hda/core/random_hda.hpp"
#include "hda/core/torus.hpp"
#include "hda/paths/fan.hpp"
#include "hda/unfold/unfold.hpp"

namespace hda::cli {

namespace {

using nlohmann::json;

std::size_t env_number(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument(name);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError(std::string(name) + " must be a positive integer");
  }
}

json names(const PrecubicalSet& X, std::span<const CubeId> seq) { return path_names(X, seq); }

int exit_code(const json& report) {
  const auto& r = report.at("result");
  if (r.is_boolean()) return r.get<bool>() ? ok : property_fails;
  const auto s = r.get<std::string>();
  if (s == "inconclusive") return ok;
  if (s == "cap_exceeded") return cap_exceeded;
  return input_error;
}

void pretty(std::ostream& out, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const json& s) { return s.is_string() ? s.get<std::string>() : s.dump(); };
  auto flat = [&](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& e) { return e.is_primitive(); });
  };
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (value.is_primitive()) {
        out << pad << key << ": " << scalar(value) << '\n';
      } else if (value.is_array() && flat(value)) {
        out << pad << key << ": ";
        for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar(value[i]);
        out << '\n';
      } else {
        out << pad << key << ":\n";
        pretty(out, value, indent + 1);
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (e.is_primitive()) {
        out << pad << "- " << scalar(e) << '\n';
      } else if (e.is_array() && flat(e)) {
        out << pad << "- ";
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? ", " : "") << scalar(e[i]);
        out << '\n';
      } else {
        out << pad << "-\n";
        pretty(out, e, indent + 1);
      }
    }
  } else {
    out << pad << scalar(v) << '\n';
  }
}

void write_file(const std::string& path, const json& doc) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << doc.dump(2) << '\n';
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(start, end - start);
    if (!token.empty()) out.push_back(token);
    start = end + 1;
  }
  return out;
}

json decision_json(const Hda& X, const Hda& Y, const BisimDecision& d) {
  json report{{"result", d.bisimilar}, {"justification", d.justification}};
  if (d.bisimilar) {
    json w = json::array();
    for (auto [x, y] : d.witness) w.push_back({X.cubes.name(x), Y.cubes.name(y)});
    report["witness"] = w;
    report["counterexample"] = nullptr;
  } else {
    report["witness"] = nullptr;
    json ce{{"pair", {X.cubes.name(X.initial), Y.cubes.name(Y.initial)}}};
    if (d.initial_defect) {
      const auto& def = *d.initial_defect;
      switch (def.kind) {
        case PairDefect::Kind::face:
          ce["defect"] = "face";
          ce["k"] = def.k + 1;
          ce["nu"] = def.side;
          break;
        case PairDefect::Kind::forth:
          ce["defect"] = "forth";
          ce["k"] = def.k + 1;
          ce["unmatched"] = X.cubes.name(def.witness);
          break;
        case PairDefect::Kind::back:
          ce["defect"] = "back";
          ce["k"] = def.k + 1;
          ce["unmatched"] = Y.cubes.name(def.witness);
          break;
      }
    } else {
      ce["defect"] = "initial pair outside the universe";
    }
    report["counterexample"] = ce;
  }
  report["stats"] = {{"universe", d.stats.universe},
                     {"evaluations", d.stats.evaluations},
                     {"deletions", d.stats.deletions},
                     {"pairs", X.size() * Y.size()}};
  return report;
}

struct Options {
  bool pretty = false;
  std::vector<std::string> files;
  std::size_t max_len = 0;
  std::vector<std::string> paths;
  std::size_t cap = 0;
  std::size_t depth = 0;
  std::string out_file;
  std::string map_file;
  bool labeled = false;
  std::string events;
  unsigned maxdim = 0;
  std::size_t unfold_depth = 0;
  std::uint64_t seed = 1;
  std::size_t cubes = 30;
  unsigned dims = 3;
  bool cyclic = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::size_t default_cap = kDefaultHomotopyCap;
  std::size_t default_depth = 6;
  try {
    default_cap = env_number("HDA_CAP", default_cap);
    default_depth = env_number("HDA_DEPTH", default_depth);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return input_error;
  }
  o.cap = default_cap;
  o.depth = default_depth;

  CLI::App app{"Higher-dimensional automata: validation, cube paths, unfoldings and bisimilarity", "hda"};
  app.footer(
      "Environment:\n"
      "  HDA_CAP    default homotopy-closure cap (currently " + std::to_string(default_cap) + ")\n"
      "  HDA_DEPTH  default unfolding depth (currently " + std::to_string(default_depth) + ")\n"
      "Exit codes: 0 holds / ok, 1 fails, 2 input error, 3 cap exceeded.");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", o.pretty, "human-readable output instead of JSON");

  auto file1 = [&](CLI::App* s) { s->add_option("file", o.files, "model file")->required()->expected(1); };
  auto file2 = [&](CLI::App* s) { s->add_option("files", o.files, "two model files")->required()->expected(2); };
  auto cap = [&](CLI::App* s) { s->add_option("--cap", o.cap, "homotopy-closure cap")->check(CLI::PositiveNumber); };
  auto depth = [&](CLI::App* s, bool required) {
    auto opt = s->add_option("--depth", o.depth, "unfolding depth (path length + dimension)")->check(CLI::PositiveNumber);
    if (required) opt->required();
  };

  auto* validate = app.add_subcommand("validate", "check face closure, arity, the precubical identity and labels");
  file1(validate);
  auto* reach = app.add_subcommand("reachable", "cubes reachable from the initial cube, with witness paths");
  file1(reach);
  auto* paths = app.add_subcommand("paths", "enumerate pointed cube paths");
  file1(paths);
  paths->add_option("--max-len", o.max_len, "maximal number of cubes")->required()->check(CLI::PositiveNumber);
  auto* homotopic = app.add_subcommand("homotopic", "decide homotopy of two cube paths");
  file1(homotopic);
  homotopic->add_option("--path", o.paths, "comma-separated ids")->required()->expected(2);
  cap(homotopic);
  auto* fan = app.add_subcommand("fan", "rewrite a pointed cube path into fan shape");
  file1(fan);
  fan->add_option("--path", o.paths, "comma-separated ids")->required()->expected(1);
  auto* unf = app.add_subcommand("unfold", "bounded unfolding");
  file1(unf);
  depth(unf, true);
  cap(unf);
  unf->add_option("--out", o.out_file, "write the tree model here (and <out>.projection.json)");
  auto* tree = app.add_subcommand("is-tree", "bounded higher-dimensional tree check");
  file1(tree);
  depth(tree, true);
  cap(tree);
  auto* open = app.add_subcommand("open-map", "check that a morphism is open");
  file2(open);
  open->add_option("--map", o.map_file, "JSON object mapping source ids to target ids")->required();
  auto* bis = app.add_subcommand("bisim", "decide bisimilarity");
  file2(bis);
  bis->add_flag("--labeled", o.labeled, "compare labels too");
  auto* hp = app.add_subcommand("hp-bisim", "decide hp-bisimilarity");
  file2(hp);
  hp->add_flag("--labeled", o.labeled, "compare labels too");
  auto* oracle = app.add_subcommand("oracle", "run-based check on bounded unfoldings");
  file2(oracle);
  depth(oracle, false);
  cap(oracle);
  oracle->add_flag("--labeled", o.labeled, "compare labels too");
  auto* tor = app.add_subcommand("torus", "event torus, optionally with its unfolding");
  tor->add_option("--events", o.events, "comma-separated events")->required();
  tor->add_option("--maxdim", o.maxdim, "largest cube dimension")->required();
  tor->add_option("--unfold-depth", o.unfold_depth, "also build the unfolding to this depth")
      ->check(CLI::PositiveNumber);
  auto* rnd = app.add_subcommand("random", "print a random model");
  rnd->add_option("--seed", o.seed, "generator seed");
  rnd->add_option("--cubes", o.cubes, "cube budget")->check(CLI::PositiveNumber);
  rnd->add_option("--max-dim", o.dims, "largest dimension (<= 3)")->check(CLI::Range(0, 3));
  rnd->add_flag("--cyclic", o.cyclic, "allow cycles");
  rnd->add_flag("--labeled", o.labeled, "label over events a, b");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  json report;
  try {
    if (validate->parsed()) {
      const ModelDecl decl = read_model_file(o.files[0]);
      ValidationReport vr = validate_hda(decl);
      if (vr.ok() && decl.labeling) vr.append(validate_labeling(PrecubicalSet::build(decl.cubes), *decl.labeling));
      report = {{"result", vr.ok()}, {"violations", report_to_json(vr)}, {"cubes", decl.cubes.size()}};
    } else if (reach->parsed()) {
      const Hda X = load_hda(o.files[0]);
      const auto witnesses = reachability_witnesses(X);
      json ids = json::array(), wit = json::object();
      for (CubeId x : reachable(X)) {
        ids.push_back(X.cubes.name(x));
        wit[X.cubes.name(x)] = names(X.cubes, witnesses[x]);
      }
      report = {{"result", true}, {"reachable", ids}, {"witnesses", wit}};
    } else if (paths->parsed()) {
      const Hda X = load_hda(o.files[0]);
      json list = json::array();
      for (const auto& p : enumerate_pointed_paths(X, o.max_len)) list.push_back(names(X.cubes, p));
      report = {{"result", true}, {"count", list.size()}, {"paths", list}};
    } else if (homotopic->parsed()) {
      const Hda X = load_hda(o.files[0]);
      const CubePath a = parse_path(X.cubes, o.paths[0]);
      const CubePath b = parse_path(X.cubes, o.paths[1]);
      for (const auto* p : {&a, &b}) {
        auto d = diagnose_cube_path(X.cubes, *p);
        if (!d.ok) {
          throw PathError("'" + path_string(X.cubes, *p) + "' is not a cube path: no step from position " +
                          std::to_string(d.failed_at + 1) + " to " + std::to_string(d.failed_at + 2));
        }
      }
      const auto h = are_homotopic(X.cubes, a, b, o.cap);
      json adj = nullptr;
      if (auto adjacency = is_adjacent(X.cubes, a, b)) {
        adj = {{"clause", adjacency->clause}, {"mirrored", adjacency->mirrored}, {"position", adjacency->position},
               {"k", adjacency->k}, {"l", adjacency->l}};
      }
      if (h.result == HomotopyResult::exhausted) report["result"] = "cap_exceeded";
      else report["result"] = h.result == HomotopyResult::homotopic;
      report["explored"] = h.explored;
      report["cap"] = o.cap;
      report["adjacent"] = adj;
    } else if (fan->parsed()) {
      const Hda X = load_hda(o.files[0]);
      const CubePath p = parse_path(X.cubes, o.paths[0]);
      const auto r = fan_shape(X.cubes, p);
      json trace = json::array();
      for (const auto& s : r.trace) {
        trace.push_back({{"path", names(X.cubes, s.path)}, {"position", s.position}, {"reduces", s.reduces},
                         {"t", t_measure(X.cubes, s.path)}});
      }
      report = {{"result", true},
                {"input_fan_shaped", is_fan_shaped(X.cubes, p)},
                {"t_input", t_measure(X.cubes, p)},
                {"path", names(X.cubes, r.path)},
                {"t", t_measure(X.cubes, r.path)},
                {"trace", trace}};
    } else if (unf->parsed()) {
      const Hda X = load_hda(o.files[0]);
      const Unfolding U = unfold(X, o.depth, o.cap);
      json projection = json::object(), frontier = json::array();
      for (CubeId t = 0; t < U.tree.size(); ++t) {
        projection[U.tree.cubes.name(t)] = X.cubes.name(U.projection(t));
        if (U.frontier[t]) frontier.push_back(U.tree.cubes.name(t));
      }
      report = {{"result", true}, {"depth", o.depth}, {"nodes", U.tree.size()}, {"exact", U.exact()},
                {"frontier", frontier}};
      if (o.out_file.empty()) {
        report["model"] = model_to_json(U.tree);
        report["projection"] = projection;
      } else {
        write_file(o.out_file, model_to_json(U.tree));
        write_file(o.out_file + ".projection.json", projection);
        report["written"] = {o.out_file, o.out_file + ".projection.json"};
      }
    } else if (tree->parsed()) {
      const Hda X = load_hda(o.files[0]);
      const auto t = is_tree(X, o.depth, o.cap);
      report = {{"result", t.tree}, {"depth", o.depth}, {"bounded", true}};
      if (t.counterexample) {
        report["counterexample"] = {names(X.cubes, t.counterexample->first), names(X.cubes, t.counterexample->second)};
      }
    } else if (open->parsed()) {
      const Hda X = load_hda(o.files[0]);
      const Hda Y = load_hda(o.files[1]);
      std::ifstream in(o.map_file);
      if (!in) throw ParseError("cannot open '" + o.map_file + "'");
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed map file: ") + e.what());
      }
      if (!doc.is_object()) throw ParseError("map file must be a JSON object of id -> id");
      std::map<std::string, std::string> table;
      for (const auto& [k, v] : doc.items()) {
        if (!v.is_string()) throw ParseError("map entry for '" + k + "' must be a string");
        table[k] = v.get<std::string>();
      }
      const Morphism f = morphism_from_names(X.cubes, Y.cubes, table);
      if (auto check = check_pointed_morphism(X, Y, f); !check.ok) throw ModelError("not a pointed morphism: " + check.reason);
      const auto r = open_map_check(X, Y, f);
      report = {{"result", r.open}, {"counterexample", nullptr}};
      if (r.counterexample) {
        report["counterexample"] = {{"x1", X.cubes.name(r.counterexample->x1)},
                                    {"y2", Y.cubes.name(r.counterexample->y2)},
                                    {"k", r.counterexample->k + 1}};
      }
    } else if (bis->parsed() || hp->parsed()) {
      const Hda X = load_hda(o.files[0]);
      const Hda Y = load_hda(o.files[1]);
      BisimDecision d;
      if (hp->parsed()) d = hp_bisimilar(X, Y, o.labeled);
      else d = o.labeled ? labeled_bisimilar(X, Y) : bisimilar(X, Y);
      report = decision_json(X, Y, d);
    } else if (oracle->parsed()) {
      const Hda X = load_hda(o.files[0]);
      const Hda Y = load_hda(o.files[1]);
      const auto r = hp_oracle(X, Y, o.depth, o.labeled, o.cap);
      json result = r.verdict == OracleVerdict::inconclusive ? json("inconclusive")
                                                            : json(r.verdict == OracleVerdict::bisimilar);
      report = {{"result", result},
                {"witness", nullptr},
                {"justification", r.exact ? "both unfoldings complete at this depth"
                                          : "unfoldings cut at the depth bound; frontier pairs unconstrained"},
                {"counterexample", nullptr},
                {"depth", r.depth},
                {"exact", r.exact},
                {"nodes", {r.nodes_x, r.nodes_y}},
                {"rounds", r.rounds},
                {"surviving_pairs", r.surviving}};
      if (r.verdict == OracleVerdict::inconclusive) report["no_violation_within_bound"] = true;
    } else if (tor->parsed()) {
      const EventSet events = split_commas(o.events);
      const Hda T = torus(events, o.maxdim);
      report = {{"result", true}, {"model", model_to_json(T)}};
      if (o.unfold_depth) {
        const Hda closed = torus_unfolding(events, o.unfold_depth);
        const Unfolding U = unfold(T, o.unfold_depth, o.cap);
        report["unfolding"] = model_to_json(closed);
        report["matches_unfold"] = find_pointed_isomorphism(closed, U.tree).has_value();
      }
    } else if (rnd->parsed()) {
      std::mt19937_64 rng(o.seed);
      RandomHdaOptions ro;
      ro.max_cubes = o.cubes;
      ro.max_dim = o.dims;
      ro.acyclic = !o.cyclic;
      ro.labeled = o.labeled;
      report = {{"result", true}, {"seed", o.seed}, {"model", model_to_json(random_hda(rng, ro))}};
    }
  } catch (const CapExceeded& e) {
    report = {{"result", "cap_exceeded"}, {"error", e.what()}, {"cap", e.cap()}};
    err << e.what() << '\n';
  } catch (const std::logic_error& e) {
    // PathError and argument checks derive from logic_error
    report = {{"result", "error"}, {"error", e.what()}};
    err << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    report = {{"result", "error"}, {"error", e.what()}};
    err << e.what() << '\n';
  }

  if (o.pretty) pretty(out, report, 0);
  else out << report.dump(2) << '\n';
  return exit_code(report);
}

}  // namespace hda::cli
