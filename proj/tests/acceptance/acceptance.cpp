// Acceptance run: one PASS/FAIL line per criterion. `--only N` selects one.
#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "hda/bisim/bisim.hpp"
#include "hda/core/errors.hpp"
#include "hda/core/json_io.hpp"
#include "hda/core/torus.hpp"
#include "hda/paths/fan.hpp"
#include "hda/unfold/unfold.hpp"
#include "support.hpp"

using namespace hda;
using hda::test::fixture;
using hda::test::ids;

namespace {

constexpr std::size_t kFanPaths = 200;
constexpr std::size_t kFanCap = 100000;
constexpr std::size_t kBisimPairs = 60;  // at least 50 required
constexpr double kTimeLimitSeconds = 10.0;
constexpr std::size_t kLargeCubes = 200;

struct Outcome {
  std::string summary;
  std::vector<std::string> violations;
};

void violation(Outcome& o, std::string what) { o.violations.push_back(std::move(what)); }

std::string str(const PrecubicalSet& X, const CubePath& p) { return "(" + path_string(X, p) + ")"; }

// Random HDA plus random pointed path; shared by criteria 3 and 4.
struct Instance {
  Hda X;
  CubePath path;
};

std::vector<Instance> corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < kFanPaths; ++i) {
    Hda X = random_hda(rng, hda::test::small_options(i % 3 != 0, i % 2 == 0));
    // Prefer a path that still needs rewriting; most short walks are fan-shaped.
    CubePath p = hda::test::random_pointed_path(rng, X, 12);
    for (int tries = 0; tries < 30 && is_fan_shaped(X.cubes, p); ++tries) {
      p = hda::test::random_pointed_path(rng, X, 12);
    }
    out.push_back({std::move(X), std::move(p)});
  }
  return out;
}

Outcome figures_validate() {
  Outcome o;
  std::size_t accepted = 0, rejected = 0;
  for (const char* m : {"filled_square", "hollow_square", "square", "square_path", "two_cycle", "three_cycle"}) {
    const ModelDecl d = hda::test::fixture_decl(m);
    ValidationReport r = validate_hda(d);
    if (r.ok() && d.labeling) r.append(validate_labeling(PrecubicalSet::build(d.cubes), *d.labeling));
    if (r.ok()) ++accepted;
    else violation(o, std::string(m) + " rejected: " + r.summary());
  }
  const std::map<std::string, ViolationKind> mutants{
      {"mutants/dangling_face", ViolationKind::dangling_face},
      {"mutants/arity", ViolationKind::arity},
      {"mutants/identity_mismatch", ViolationKind::identity},
      {"mutants/initial_not_vertex", ViolationKind::initial_dimension}};
  for (const auto& [m, kind] : mutants) {
    const ValidationReport r = validate_hda(hda::test::fixture_decl(m));
    if (r.ok()) {
      violation(o, m + " accepted");
      continue;
    }
    ++rejected;
    if (r.violations.front().kind != kind) violation(o, m + " rejected for the wrong reason: " + r.summary());
  }
  o.summary = std::to_string(accepted) + "/6 figure models accepted, " + std::to_string(rejected) +
              "/4 mutants rejected";
  return o;
}

Outcome square_chain() {
  Outcome o;
  const Hda f = fixture("square_path");
  const auto& X = f.cubes;
  const std::vector<CubePath> P{ids(X, {"i", "a", "x", "b", "bc", "c", "z", "d"}),
                                ids(X, {"i", "a", "x", "c'", "bc", "c", "z", "d"}),
                                ids(X, {"i", "a", "x", "c'", "bc", "b'", "z", "d"}),
                                ids(X, {"i", "a", "x", "c'", "y", "b'", "z", "d"})};
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      if (are_homotopic(X, P[i], P[j]).result != HomotopyResult::homotopic) {
        violation(o, "P" + std::to_string(i + 1) + " and P" + std::to_string(j + 1) + " not homotopic");
      }
    }
  }
  std::string clauses;
  for (std::size_t i = 0; i + 1 < P.size(); ++i) {
    const auto a = is_adjacent(X, P[i], P[i + 1]);
    if (!a) {
      violation(o, "P" + std::to_string(i + 1) + " and P" + std::to_string(i + 2) + " not adjacent");
      continue;
    }
    clauses += (clauses.empty() ? "" : "/") + std::to_string(a->clause);
    if (a->clause != static_cast<int>(i + 1)) {
      violation(o, "P" + std::to_string(i + 1) + "~P" + std::to_string(i + 2) + " by clause " +
                       std::to_string(a->clause) + ", expected " + std::to_string(i + 1));
    }
  }
  if (is_adjacent(X, P.front(), P.back())) violation(o, "P1 and P4 adjacent");
  o.summary = "chain of 4 paths, clauses " + clauses + ", P1/P4 not adjacent";
  return o;
}

Outcome fan_shaping(std::uint64_t seed) {
  Outcome o;
  std::size_t reducing = 0, preparatory = 0, already = 0;
  std::size_t index = 0;
  for (const auto& [X, rho] : corpus(seed)) {
    ++index;
    const auto& C = X.cubes;
    const std::string where = "#" + std::to_string(index) + " " + str(C, rho);
    for (const CubePath* p : {&rho}) {
      const std::size_t twice_t = 2 * t_measure(C, *p);
      const std::size_t bound = twice_t_lower_bound(C, *p);
      if (twice_t < bound) violation(o, where + ": T below the lower bound");
      if ((twice_t == bound) != is_fan_shaped(C, *p)) violation(o, where + ": bound equality differs from fan shape");
    }
    already += is_fan_shaped(C, rho);
    FanResult r;
    try {
      r = fan_shape(C, rho);
    } catch (const std::exception& e) {
      violation(o, where + ": " + e.what());
      continue;
    }
    if (!is_fan_shaped(C, r.path)) violation(o, where + ": output " + str(C, r.path) + " not fan-shaped");
    if (2 * t_measure(C, r.path) != twice_t_lower_bound(C, r.path)) violation(o, where + ": output misses the bound");
    const auto h = are_homotopic(C, r.path, rho, kFanCap);
    if (h.result != HomotopyResult::homotopic) {
      violation(o, where + ": output not homotopic (" +
                       (h.result == HomotopyResult::exhausted ? "cap reached" : "disconnected") + ")");
    }
    CubePath prev = rho;
    bool pending = false;  // a T-preserving swap must be followed by a reduction
    for (const auto& step : r.trace) {
      if (!is_adjacent(C, prev, step.path)) violation(o, where + ": trace step not adjacent");
      const std::size_t before = t_measure(C, prev), after = t_measure(C, step.path);
      if (step.reduces) {
        ++reducing;
        pending = false;
        if (after + 2 != before) violation(o, where + ": reducing step changed T by " + std::to_string(before - after));
      } else {
        ++preparatory;
        if (pending || after != before) violation(o, where + ": preparatory step misbehaves");
        pending = true;
      }
      prev = step.path;
    }
    if (pending) violation(o, where + ": trace ends with a preparatory step");
  }
  o.summary = std::to_string(kFanPaths) + " paths (" + std::to_string(already) + " already fan-shaped), " +
              std::to_string(reducing) + " reductions by 2, " + std::to_string(preparatory) +
              " T-preserving swaps, cap " + std::to_string(kFanCap);
  return o;
}

Outcome unfolding_correct(std::uint64_t seed) {
  Outcome o;
  std::size_t acyclic = 0, trees = 0, index = 0;
  for (const auto& inst : corpus(seed)) {
    ++index;
    const Hda& X = inst.X;
    const auto d = full_depth(X);
    if (!d) continue;
    ++acyclic;
    const std::string where = "#" + std::to_string(index) + " depth " + std::to_string(*d);
    try {
      const Unfolding U = unfold(X, *d);
      const ModelDecl decl = to_decl(U.tree);
      ValidationReport v = validate_hda(decl);
      if (v.ok() && decl.labeling) v.append(validate_labeling(U.tree.cubes, *decl.labeling));
      if (!v.ok()) violation(o, where + ": tree fails validation: " + v.summary());
      if (!U.exact()) violation(o, where + ": frontier at full depth");
      if (!is_tree(U.tree, *d).tree) violation(o, where + ": unfolding is not a tree");
      if (auto c = check_pointed_morphism(U.tree, X, U.projection); !c.ok) {
        violation(o, where + ": projection not a pointed morphism: " + c.reason);
      }
      if (!open_map_check(U.tree, X, U.projection).open) violation(o, where + ": projection not open");
      const bool all_reachable = reachable(X).size() == X.size();
      if (all_reachable && is_tree(X, *d).tree) {
        ++trees;
        std::vector<char> hit(X.size(), 0);
        bool bijective = U.tree.size() == X.size();
        for (CubeId t = 0; bijective && t < U.tree.size(); ++t) {
          if (hit[U.projection(t)]++) bijective = false;
        }
        if (!bijective) violation(o, where + ": projection of a tree is not bijective");
      }
    } catch (const std::exception& e) {
      violation(o, where + ": " + e.what());
    }
  }
  o.summary = std::to_string(acyclic) + " acyclic instances, " + std::to_string(trees) +
              " of them trees (projection bijective)";
  return o;
}

Outcome oracle_agreement(std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed + 5);
  std::size_t agree_true = 0, agree_false = 0;
  for (std::size_t i = 0; i < kBisimPairs; ++i) {
    const bool labeled = i % 2 == 0;
    auto opts = hda::test::small_options(true, labeled);
    opts.max_cubes = 19;  // leaves room for a duplicated cube
    const Hda X = random_hda(rng, opts);
    Hda Y;
    switch (i % 4) {
      case 0: Y = random_hda(rng, opts); break;
      case 1: Y = hda::test::delete_maximal_cube(rng, X); break;
      case 2: Y = hda::test::duplicate_maximal_cube(rng, X); break;
      default: Y = hda::test::shuffled_copy(rng, X); break;
    }
    const std::string where = "pair #" + std::to_string(i + 1);
    if (X.size() > 20 || Y.size() > 20) violation(o, where + ": more than 20 cubes");
    try {
      const auto d = labeled ? labeled_bisimilar(X, Y) : bisimilar(X, Y);
      const std::size_t depth = std::max(*full_depth(X), *full_depth(Y));
      const auto r = hp_oracle(X, Y, depth, labeled);
      if (!r.exact) violation(o, where + ": oracle not exact at depth " + std::to_string(depth));
      const bool oracle = r.verdict == OracleVerdict::bisimilar;
      if (oracle != d.bisimilar) {
        violation(o, where + ": bisimilar=" + (d.bisimilar ? "true" : "false") + ", oracle " + to_string(r.verdict));
      } else {
        (oracle ? agree_true : agree_false)++;
      }
    } catch (const std::exception& e) {
      violation(o, where + ": " + e.what());
    }
  }
  o.summary = std::to_string(kBisimPairs) + " acyclic pairs, agreement " + std::to_string(agree_true) + " true + " +
              std::to_string(agree_false) + " false";
  return o;
}

Outcome figure_decisions() {
  Outcome o;
  const bool fig1 = bisimilar(fixture("filled_square"), fixture("hollow_square")).bisimilar;
  const bool fig5 = bisimilar(fixture("two_cycle"), fixture("three_cycle")).bisimilar;
  const bool labeled = labeled_bisimilar(fixture("ab_square"), fixture("ac_square")).bisimilar;
  if (fig1) violation(o, "filled vs hollow square decided bisimilar");
  if (!fig5) violation(o, "the two cycles decided not bisimilar");
  if (labeled) violation(o, "a|b vs a|c decided bisimilar");
  auto b = [](bool v) { return v ? "true" : "false"; };
  o.summary = std::string("filled/hollow ") + b(fig1) + ", cycles " + b(fig5) + ", a|b vs a|c " + b(labeled);
  return o;
}

Outcome torus_unfolding_check() {
  Outcome o;
  std::size_t iso = 0, combos = 0;
  const std::vector<EventSet> sets{{}, {"a"}, {"a", "b"}};
  for (const auto& S : sets) {
    for (std::size_t depth = 1; depth <= 5; ++depth) {
      ++combos;
      std::string tag = "|S|=" + std::to_string(S.size()) + " depth " + std::to_string(depth);
      const Hda T = torus(S, static_cast<unsigned>(depth - 1));
      const Hda closed = torus_unfolding(S, depth);
      const Unfolding U = unfold(T, depth);
      if (find_pointed_isomorphism(closed, U.tree)) {
        ++iso;
      } else {
        violation(o, tag + ": closed form has " + std::to_string(closed.size()) + " cubes, unfolding " +
                         std::to_string(U.tree.size()));
      }
      // Collapse: pointed paths of equal length and endpoint are homotopic.
      std::map<std::pair<std::size_t, CubeId>, CubePath> first;
      std::size_t reported = 0;
      for_each_pointed_path(T, depth, [&](const CubePath& p) {
        auto [it, fresh] = first.emplace(std::make_pair(p.size(), p.back()), p);
        if (!fresh && are_homotopic(T.cubes, it->second, p).result != HomotopyResult::homotopic && reported++ == 0) {
          violation(o, tag + ": " + str(T.cubes, it->second) + " and " + str(T.cubes, p) + " not homotopic");
        }
        return true;
      });
    }
  }
  o.summary = std::to_string(iso) + "/" + std::to_string(combos) + " (S, depth) combinations isomorphic";
  return o;
}

Outcome large_instance(std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed + 8);
  RandomHdaOptions opts;
  opts.max_cubes = kLargeCubes;
  opts.min_vertices = 50;
  opts.max_vertices = 60;
  opts.edge_density = 0.05;
  opts.max_squares = 60;
  opts.acyclic = false;
  const Hda X = random_hda(rng, opts);
  const Hda Y = random_hda(rng, opts);
  const auto start = std::chrono::steady_clock::now();
  const auto d = bisimilar(X, Y);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::size_t pairs = X.size() * Y.size();
  if (X.size() < kLargeCubes * 9 / 10 || Y.size() < kLargeCubes * 9 / 10) {
    violation(o, "instances too small: " + std::to_string(X.size()) + ", " + std::to_string(Y.size()));
  }
  if (seconds >= kTimeLimitSeconds) violation(o, "took " + std::to_string(seconds) + " s");
  if (d.stats.deletions > pairs) violation(o, "deletions exceed |X x Y|");
  std::ostringstream s;
  s.precision(3);
  s << X.size() << " x " << Y.size() << " cubes, " << d.stats.deletions << " deletions (limit " << pairs << "), "
    << std::fixed << seconds << " s (limit " << kTimeLimitSeconds << " s), bisimilar "
    << (d.bisimilar ? "true" : "false");
  o.summary = s.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::uint64_t seed = 20260101;
  int only = 0;
  app.add_option("--seed", seed, "corpus seed");
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"precubical identity suite", figures_validate},
      {"square chain homotopy", square_chain},
      {"fan shaping", [&] { return fan_shaping(seed); }},
      {"unfolding correctness", [&] { return unfolding_correct(seed); }},
      {"bisimilarity vs unfolding oracle", [&] { return oracle_agreement(seed); }},
      {"figure decisions", figure_decisions},
      {"torus unfolding", torus_unfolding_check},
      {"large instance", [&] { return large_instance(seed); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<std::size_t>(only) != i + 1) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.violations.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.violations.empty();
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << out.summary
              << "; " << out.violations.size() << " violations (" << static_cast<int>(seconds * 1000) << " ms)\n";
    for (std::size_t v = 0; v < out.violations.size() && v < 5; ++v) std::cout << "    " << out.violations[v] << '\n';
    if (out.violations.size() > 5) std::cout << "    ... " << out.violations.size() - 5 << " more\n";
  }
  return all ? 0 : 1;
}
