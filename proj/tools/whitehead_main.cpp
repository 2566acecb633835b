// Command-line front end: word utilities, Whitehead-graph inspection, the
// primitivity and orbit-equivalence decisions, and the benchmark harness.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fg/bench.hpp"
#include "fg/minimize.hpp"
#include "fg/orbit.hpp"
#include "fg/sample.hpp"
#include "fg/whitehead_graph.hpp"

using json = nlohmann::json;

namespace {

struct GlobalOpts {
  int rank = 2;
  std::uint64_t seed = 0;
  std::string format = "text";  // text | csv | json
};

const char* yesno(bool b) { return b ? "yes" : "no"; }

int run_reduce(const GlobalOpts& g, const std::string& text, bool cyclic) {
  const fg::Word w = fg::parse_word(text, fg::Rank(g.rank));
  if (g.format == "json") {
    json out{{"reduced", w.str()}};
    if (cyclic) {
      const fg::TrimReport rep = fg::cyclic_trim(w);
      out["cyclic_result"] = rep.result.str();
      out["conjugator"] = rep.conjugator.str();
      out["steps"] = rep.steps;
      out["canonical"] = fg::canonical_cyclic(w).str();
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << w.str() << "\n";
  if (cyclic) {
    const fg::TrimReport rep = fg::cyclic_trim(w);
    std::cout << "cyclic_result: " << rep.result.str() << "\n"
              << "conjugator: " << rep.conjugator.str() << "\n"
              << "steps: " << rep.steps << "\n"
              << "canonical: " << fg::canonical_cyclic(w).str() << "\n";
  }
  return 0;
}

int run_graph(const GlobalOpts& g, const std::string& text, bool dot, bool external) {
  const fg::Word parsed = fg::parse_word(text, fg::Rank(g.rank));
  // The external edge encodes cyclic adjacency, so trim first for it.
  const fg::Word w = external ? fg::cyclic_trim(parsed).result : parsed;
  const fg::WhGraph graph = fg::build_graph(w, external);
  if (dot) {
    std::cout << graph.dot();
    return 0;
  }
  if (g.format == "json") {
    json edges = json::array();
    for (int u = 0; u < graph.vertex_count(); ++u)
      for (int v = u + 1; v < graph.vertex_count(); ++v)
        if (graph.multiplicity(u, v) > 0)
          edges.push_back({{"u", std::string(1, fg::Letter::from_vertex(u).to_char())},
                           {"v", std::string(1, fg::Letter::from_vertex(v).to_char())},
                           {"multiplicity", graph.multiplicity(u, v)}});
    std::cout << json{{"word", w.str()},
                      {"external", external},
                      {"edges", edges},
                      {"complete", fg::is_complete(graph)},
                      {"cut_vertex", fg::has_cut_vertex(graph)},
                      {"isolated_edge", fg::has_isolated_edge(graph)}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "word: " << w.str() << "\n";
  for (int u = 0; u < graph.vertex_count(); ++u)
    for (int v = u + 1; v < graph.vertex_count(); ++v)
      if (graph.multiplicity(u, v) > 0)
        std::cout << "edge " << fg::Letter::from_vertex(u).to_char() << "-"
                  << fg::Letter::from_vertex(v).to_char() << " x"
                  << graph.multiplicity(u, v) << "\n";
  std::cout << "complete: " << yesno(fg::is_complete(graph)) << "\n"
            << "cut_vertex: " << yesno(fg::has_cut_vertex(graph)) << "\n"
            << "isolated_edge: " << yesno(fg::has_isolated_edge(graph)) << "\n";
  return 0;
}

int run_primitive(const GlobalOpts& g, const std::string& text) {
  const fg::Word w = fg::parse_word(text, fg::Rank(g.rank));
  const fg::PrimitivityVerdict v = fg::is_primitive(w);
  if (g.format == "json") {
    std::cout << json{{"primitive", v.primitive},
                      {"filter_letters", v.stats.filter_letters},
                      {"filter_conclusive", v.stats.filter_conclusive},
                      {"letters_examined", v.stats.letters_examined}}
                     .dump()
              << "\n";
  } else {
    std::cout << "primitive: " << yesno(v.primitive) << "\n"
              << "filter_letters: " << v.stats.filter_letters << "\n"
              << "filter_conclusive: " << yesno(v.stats.filter_conclusive) << "\n"
              << "letters_examined: " << v.stats.letters_examined << "\n";
  }
  return v.primitive ? 0 : 1;
}

const char* path_name(fg::EquivPath p) {
  switch (p) {
    case fg::EquivPath::FastSM: return "fast-sm";
    case fg::EquivPath::LengthMismatch: return "length-mismatch";
    case fg::EquivPath::LevelSearch: return "level-search";
  }
  return "?";
}

int run_equiv(const GlobalOpts& g, const std::string& ut, const std::string& vt,
              std::size_t cap) {
  const fg::Rank rank(g.rank);
  const fg::EquivVerdict v =
      fg::same_orbit(fg::parse_word(ut, rank), fg::parse_word(vt, rank), cap);
  const char* outcome = v.outcome == fg::EquivOutcome::Equivalent ? "yes"
                        : v.outcome == fg::EquivOutcome::NotEquivalent ? "no"
                                                                       : "undecided";
  if (g.format == "json") {
    json out{{"equivalent", outcome},
             {"path", path_name(v.path)},
             {"u_min", v.u_min.str()},
             {"v_min", v.v_min.str()},
             {"letters_examined", v.stats.letters_examined},
             {"vertices_explored", v.stats.vertices_explored}};
    if (v.witness) out["witness"] = fg::to_string(*v.witness);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "equivalent: " << outcome << "\n"
              << "path: " << path_name(v.path) << "\n";
    if (v.witness) std::cout << "witness: " << fg::to_string(*v.witness) << "\n";
    std::cout << "u_min: " << v.u_min.str() << "\n"
              << "v_min: " << v.v_min.str() << "\n"
              << "letters_examined: " << v.stats.letters_examined << "\n"
              << "vertices_explored: " << v.stats.vertices_explored << "\n";
  }
  switch (v.outcome) {
    case fg::EquivOutcome::Equivalent: return 0;
    case fg::EquivOutcome::NotEquivalent: return 1;
    case fg::EquivOutcome::Undecided: return 3;
  }
  return 2;
}

int run_minimize(const GlobalOpts& g, const std::string& text) {
  const fg::Word w = fg::parse_word(text, fg::Rank(g.rank));
  const fg::MinimizationResult res = fg::greedy_minimize(fg::canonical_cyclic(w));
  if (g.format == "json") {
    std::cout << json{{"minimal", res.minimal.str()},
                      {"rounds", res.rounds},
                      {"witness", fg::to_string(res.witness)}}
                     .dump()
              << "\n";
  } else {
    std::cout << "minimal: " << res.minimal.str() << "\n"
              << "rounds: " << res.rounds << "\n"
              << "witness: " << fg::to_string(res.witness) << "\n";
  }
  return 0;
}

int run_sm(const GlobalOpts& g, const std::string& text) {
  const fg::Word w = fg::parse_word(text, fg::Rank(g.rank));
  const fg::CyclicWord c = fg::canonical_cyclic(w);
  const bool minimal = fg::is_minimal(c);
  const bool sm = fg::is_strictly_minimal(c);
  if (g.format == "json") {
    std::cout << json{{"word", c.str()}, {"minimal", minimal}, {"strictly_minimal", sm}}
                     .dump()
              << "\n";
  } else {
    std::cout << "canonical: " << c.str() << "\n"
              << "minimal: " << yesno(minimal) << "\n"
              << "strictly_minimal: " << yesno(sm) << "\n";
  }
  return sm ? 0 : 1;
}

int run_orbit_enum(const GlobalOpts& g, const std::string& text, std::size_t max_len,
                   std::size_t budget) {
  const fg::Word w = fg::parse_word(text, fg::Rank(g.rank));
  const fg::OrbitEnumeration e = fg::bounded_orbit_enumerate(w, max_len, budget);
  if (g.format == "json") {
    json words = json::array();
    for (const auto& v : e.elements) words.push_back(v.str());
    std::cout << json{{"elements", words}, {"complete", e.complete}}.dump() << "\n";
  } else {
    for (const auto& v : e.elements) std::cout << v.str() << "\n";
  }
  if (!e.complete) {
    std::cerr << "orbit-enum: vertex budget exhausted after " << e.elements.size()
              << " elements\n";
    return 3;
  }
  return 0;
}

int run_blocking(const GlobalOpts& g, const std::string& ut, const std::string& pt,
                 std::size_t max_len, std::size_t budget) {
  const fg::Rank rank(g.rank);
  const fg::BlockingVerdict v = fg::blocking_check(
      fg::parse_word(ut, rank), fg::parse_word(pt, rank), max_len, budget);
  const char* status = v.status == fg::BlockingVerdict::Status::FoundAsSubword
                           ? "found-as-subword"
                       : v.status == fg::BlockingVerdict::Status::BlockedUpTo
                           ? "blocked-up-to"
                           : "budget-exceeded";
  if (g.format == "json") {
    json out{{"status", status},
             {"bound", v.bound},
             {"elements_scanned", v.elements_scanned}};
    if (v.element) out["element"] = v.element->str();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "status: " << status << "\n";
    if (v.element) std::cout << "element: " << v.element->str() << "\n";
    std::cout << "bound: " << v.bound << "\n"
              << "elements_scanned: " << v.elements_scanned << "\n";
  }
  switch (v.status) {
    case fg::BlockingVerdict::Status::FoundAsSubword: return 0;
    case fg::BlockingVerdict::Status::BlockedUpTo: return 1;
    case fg::BlockingVerdict::Status::BudgetExceeded: return 3;
  }
  return 2;
}

int run_sample(const GlobalOpts& g, std::size_t n, std::size_t count, bool cyclic,
               bool ball) {
  const fg::Rank rank(g.rank);
  for (std::size_t i = 0; i < count; ++i) {
    fg::Rng rng = fg::Rng::stream(g.seed, i);
    fg::Word w(rank);
    if (ball) {
      const fg::BoundedLengthSampler sampler(rank, n);
      w = sampler.sample(rng);
    } else if (cyclic) {
      w = fg::sample_cyclically_reduced(rank, n, rng);
    } else {
      w = fg::sample_freely_reduced(rank, n, rng);
    }
    std::cout << w.str() << "\n";
  }
  return 0;
}

int run_bench(const GlobalOpts& g, const std::string& task_name,
              std::vector<std::size_t> lengths, std::size_t samples,
              std::vector<std::string> words, std::size_t max_len,
              std::size_t budget, bool self_test, bool wall) {
  fg::BenchConfig cfg;
  cfg.rank = g.rank;
  cfg.seed = g.seed;
  cfg.lengths = std::move(lengths);
  cfg.samples = samples;
  cfg.words = std::move(words);
  cfg.max_len = max_len;
  cfg.budget = budget;
  cfg.measure_wall = wall;

  if (task_name == "primitivity") cfg.task = fg::BenchTask::Primitivity;
  else if (task_name == "equivalence") cfg.task = fg::BenchTask::Equivalence;
  else if (task_name == "trim") cfg.task = fg::BenchTask::Trim;
  else if (task_name == "sm-fraction") cfg.task = fg::BenchTask::SmFraction;
  else if (task_name == "orbit-census") cfg.task = fg::BenchTask::OrbitCensus;
  else throw std::invalid_argument("unknown bench task: " + task_name);

  if (cfg.task == fg::BenchTask::Equivalence && cfg.rank > 2)
    std::cerr << "note: the linear-average claim is conditional for rank > 2\n";

  if (self_test) {
    std::string msg;
    if (!fg::sampler_self_test(fg::Rank(cfg.rank), cfg.seed, &msg)) {
      std::cerr << "self-test failed: " << msg << "\n";
      return 1;
    }
    std::cerr << "self-test: ok\n";
  }

  if (cfg.task == fg::BenchTask::OrbitCensus) {
    if (cfg.words.empty() || cfg.max_len == 0)
      throw std::invalid_argument("orbit-census needs --word and --max-len");
    const auto rows = fg::orbit_census(cfg);
    if (g.format == "json") {
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back({{"word", r.word},
                       {"len", r.len},
                       {"cum_count", r.cum_count},
                       {"level_size", r.level_size},
                       {"complete", r.complete}});
      std::cout << arr.dump() << "\n";
    } else {
      std::cout << fg::to_csv(rows);
    }
    return 0;
  }

  if (cfg.lengths.empty()) throw std::invalid_argument("bench needs --lengths");
  std::vector<fg::BenchRecord> recs;
  switch (cfg.task) {
    case fg::BenchTask::Primitivity: recs = fg::bench_primitivity(cfg); break;
    case fg::BenchTask::Equivalence: recs = fg::bench_equivalence(cfg); break;
    case fg::BenchTask::Trim: recs = fg::bench_trim(cfg); break;
    case fg::BenchTask::SmFraction: recs = fg::bench_sm_fraction(cfg); break;
    case fg::BenchTask::OrbitCensus: break;
  }
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& r : recs)
      arr.push_back({{"task", r.task},
                     {"r", r.r},
                     {"n", r.n},
                     {"samples", r.samples},
                     {"mean_work", r.mean_work},
                     {"p95_work", r.p95_work},
                     {"filter_conclusive_fraction", r.filter_conclusive_fraction},
                     {"mean_wall_ns", r.mean_wall_ns},
                     {"seed", r.seed}});
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << fg::to_csv(recs);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free-group toolkit: Whitehead graphs, primitivity and orbit decisions"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--rank", g.rank, "number of free generators (2..26)")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "master RNG seed")->capture_default_str();
  app.add_option("--format", g.format, "output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  std::string word_a, word_b;
  bool flag_cyclic = false, flag_dot = false, flag_external = false;
  std::size_t cap = fg::kDefaultVertexCap;
  std::size_t max_len = 0, budget = fg::kDefaultVertexCap;
  std::size_t sample_n = 0, sample_count = 1;
  bool sample_cyclic = false, sample_ball = false;
  std::string bench_task;
  std::vector<std::size_t> bench_lengths;
  std::size_t bench_samples = 1000;
  std::vector<std::string> bench_words;
  bool bench_self_test = false, bench_wall = false;

  auto* reduce = app.add_subcommand("reduce", "freely reduce a word");
  reduce->add_option("word", word_a)->required();
  reduce->add_flag("--cyclic", flag_cyclic, "also report the cyclic trim");

  auto* graph = app.add_subcommand("graph", "Whitehead graph of a word");
  graph->add_option("word", word_a)->required();
  graph->add_flag("--dot", flag_dot, "emit Graphviz text");
  graph->add_flag("--external", flag_external,
                  "include the external edge (word is trimmed first)");

  auto* primitive = app.add_subcommand("primitive", "decide primitivity");
  primitive->add_option("word", word_a)->required();

  auto* equiv = app.add_subcommand("equiv", "decide automorphic equivalence");
  equiv->add_option("u", word_a)->required();
  equiv->add_option("v", word_b)->required();
  equiv->add_option("--cap", cap, "level-search vertex cap");

  auto* minimize = app.add_subcommand("minimize", "greedy orbit minimization");
  minimize->add_option("word", word_a)->required();

  auto* sm = app.add_subcommand("sm", "strict minimality test");
  sm->add_option("word", word_a)->required();

  auto* orbit_enum = app.add_subcommand("orbit-enum", "enumerate orbit members");
  orbit_enum->add_option("word", word_a)->required();
  orbit_enum->add_option("--max-len", max_len, "length bound")->required();
  orbit_enum->add_option("--budget", budget, "vertex budget");

  auto* blocking = app.add_subcommand("blocking", "search for a blocked pattern");
  blocking->add_option("u", word_a)->required();
  blocking->add_option("pattern", word_b)->required();
  blocking->add_option("--max-len", max_len, "length bound")->required();
  blocking->add_option("--budget", budget, "vertex budget");

  auto* sample = app.add_subcommand("sample", "draw random words");
  sample->add_option("--n", sample_n, "word length")->required();
  sample->add_option("--count", sample_count, "number of words");
  sample->add_flag("--cyclic", sample_cyclic, "cyclically reduced words");
  sample->add_flag("--ball", sample_ball, "uniform over lengths <= n");

  auto* bench = app.add_subcommand("bench", "benchmark harness (CSV output)");
  bench->add_option("task", bench_task,
                    "primitivity | equivalence | trim | sm-fraction | orbit-census")
      ->required();
  bench->add_option("--lengths", bench_lengths, "word lengths n")->delimiter(',');
  bench->add_option("--samples", bench_samples, "samples per length")
      ->capture_default_str();
  bench->add_option("--word", bench_words, "seed words for orbit-census");
  bench->add_option("--max-len", max_len, "census length bound");
  bench->add_option("--budget", budget, "vertex budget");
  bench->add_flag("--self-test", bench_self_test,
                  "verify sampler distributions before the run");
  bench->add_flag("--wall", bench_wall, "measure wall time (non-deterministic)");

  // let --rank/--seed/--format appear after the subcommand as well
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(reduce)) return run_reduce(g, word_a, flag_cyclic);
    if (app.got_subcommand(graph)) return run_graph(g, word_a, flag_dot, flag_external);
    if (app.got_subcommand(primitive)) return run_primitive(g, word_a);
    if (app.got_subcommand(equiv)) return run_equiv(g, word_a, word_b, cap);
    if (app.got_subcommand(minimize)) return run_minimize(g, word_a);
    if (app.got_subcommand(sm)) return run_sm(g, word_a);
    if (app.got_subcommand(orbit_enum))
      return run_orbit_enum(g, word_a, max_len, budget);
    if (app.got_subcommand(blocking))
      return run_blocking(g, word_a, word_b, max_len, budget);
    if (app.got_subcommand(sample))
      return run_sample(g, sample_n, sample_count, sample_cyclic, sample_ball);
    if (app.got_subcommand(bench))
      return run_bench(g, bench_task, bench_lengths, bench_samples, bench_words,
                       max_len, budget, bench_self_test, bench_wall);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
