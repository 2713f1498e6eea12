#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <webmend/report.hpp>
#include <webmend/webmend.hpp>

namespace fs = std::filesystem;
using namespace webmend;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kNoIssues = 3 };

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << content;
}

Viewport parse_viewport(const std::string& s) {
  const auto x = s.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    Viewport vp{std::stod(s.substr(0, x), &used), 0};
    if (used != x) throw std::invalid_argument(s);
    vp.height = std::stod(s.substr(x + 1), &used);
    if (used != s.size() - x - 1 || vp.width <= 0 || vp.height <= 0) throw std::invalid_argument(s);
    return vp;
  } catch (const std::exception&) {
    throw UsageError("viewport must look like 360x640, got '" + s + "'");
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WEBMEND_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("WEBMEND_SEED is not an unsigned integer: ") + env);
    }
  }
  return 42;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct PageArgs {
  std::string page;
  std::string css;
  std::string viewport = "360x640";
  double theta = kDefaultTheta;

  void add_to(CLI::App* cmd, bool with_theta = true) {
    cmd->add_option("--page", page, "HTML input")->required();
    cmd->add_option("--css", css, "CSS input")->required();
    cmd->add_option("--viewport", viewport, "viewport as WIDTHxHEIGHT")->capture_default_str();
    if (with_theta) cmd->add_option("--theta", theta, "segmentation merge threshold")->capture_default_str();
  }

  Page load() const { return Page::load(read_file(page), read_file(css), parse_viewport(viewport)); }
};

struct FitnessArgs {
  double alpha = -1;
  double beta = 1;
  std::string g = "quad";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "usability weight (negative)")->capture_default_str();
    cmd->add_option("--beta", beta, "aesthetics weight (positive)")->capture_default_str();
    cmd->add_option("--g", g, "penalty shape below U = 80: exp, quad or cubic")->capture_default_str();
  }

  FitnessConfig config() const {
    FitnessConfig cfg{alpha, beta, parse_g_variant(g)};
    cfg.validate();
    return cfg;
  }
};

Json score_json(const ScoreReport& s) {
  return {{"U", s.U},
          {"A", s.A},
          {"F", s.F},
          {"eval_index", s.eval_index},
          {"p_font", s.usability.p_font},
          {"p_tap", s.usability.p_tap},
          {"p_content", s.usability.p_content}};
}

// ---- repair ----

struct RepairArgs {
  PageArgs page;
  FitnessArgs fitness;
  std::string algo = "pso";
  long evals = 150;
  std::uint64_t seed = 0;
  int pop = 10;
  double delta = 0.3;
  int tabu_size = 5;
  unsigned threads = 1;
  std::string out;
};

int run_repair(const RepairArgs& a) {
  const Algorithm algo = parse_algorithm(a.algo);
  const FitnessConfig fc = a.fitness.config();
  const auto problem = RepairProblem::build(a.page.load(), a.page.theta);
  if (problem.dimension() == 0) {
    std::cerr << "no mobile-friendliness issues detected; nothing to repair\n";
    return kNoIssues;
  }

  Json config = {{"algo", algorithm_name(algo)},
                 {"evals", a.evals},
                 {"seed", a.seed},
                 {"viewport", a.page.viewport},
                 {"theta", a.page.theta},
                 {"alpha", fc.alpha},
                 {"beta", fc.beta},
                 {"g", g_variant_name(fc.g)}};
  RunResult result;
  if (algo == Algorithm::Pso) {
    PbraConfig pc;
    pc.population = a.pop;
    pc.evaluations = a.evals;
    pc.seed = a.seed;
    pc.threads = a.threads;
    config["pop"] = a.pop;
    result = pbra_run(problem, pc, fc);
  } else {
    TeraConfig tc;
    tc.evaluations = a.evals;
    tc.delta = a.delta;
    tc.tabu_size = a.tabu_size;
    tc.seed = a.seed;
    tc.threads = a.threads;
    config["delta"] = a.delta;
    config["tabu_size"] = a.tabu_size;
    result = tera_run(problem, tc, fc);
  }

  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a(config.dump())));
  const std::string provenance =
      "seed=" + std::to_string(a.seed) + " algo=" + std::string(algorithm_name(algo)) + " config=" + hash;
  const PatchArtifact patch = emit_patch(problem, result.best, result.best_score, provenance);

  const fs::path out(a.out);
  fs::create_directories(out);
  std::string css = read_file(a.page.css);
  if (!css.empty() && css.back() != '\n') css += '\n';
  write_file(out / "patched.css", css + patch.css);
  write_file(out / "patched.html", patch.html);
  write_file(out / "trace.csv", trace_csv(result.trace));

  Json best = {{"config", config},
               {"config_hash", hash},
               {"pairs", pairs_json(problem.pairs(), result.best)},
               {"candidate", result.best.values},
               {"suggestion", problem.suggestion().values},
               {"original", score_json(problem.score(Candidate::identity(problem.dimension()), fc))},
               {"best", score_json(result.best_score)},
               {"evaluations", result.evaluations},
               {"evals_to_80", result.trace.evals_to_threshold(fc.threshold)},
               {"injected_ids", Json::object()}};
  for (const auto& [node, id] : patch.injected_ids) best["injected_ids"][std::to_string(node)] = id;
  write_file(out / "best.json", best.dump(2) + "\n");

  std::cout << "U " << format_double(result.best_score.U) << "  A " << format_double(result.best_score.A) << "  F "
            << format_double(result.best_score.F) << "  evals " << result.evaluations << "\n";
  return kOk;
}

// ---- score ----

struct ScoreArgs {
  PageArgs page;
  FitnessArgs fitness;
  std::string patched_page;
  std::string patched_css;
  bool explain = false;
};

int run_score(const ScoreArgs& a) {
  const FitnessConfig fc = a.fitness.config();
  const Page original = a.page.load();
  const SegmentSet segments = segment(original.dom(), original.boxes, a.page.theta);

  Page scored = original;
  if (!a.patched_page.empty() || !a.patched_css.empty()) {
    const std::string html = read_file(a.patched_page.empty() ? a.page.page : a.patched_page);
    const std::string css = read_file(a.patched_css.empty() ? a.page.css : a.patched_css);
    scored = Page::load(html, css, original.viewport);
    if (scored.dom().size() != original.dom().size()) {
      throw UsageError("patched page has a different element tree than the original");
    }
  }
  const UsabilityScore u = usability(scored);
  std::vector<EdgeDiff> diffs;
  const long A = aesthetic_score(original.boxes, scored.boxes, segments, a.explain ? &diffs : nullptr);

  Json out = {{"U", u.U},
              {"A", A},
              {"F", combine_fitness(u.U, static_cast<double>(A), fc)},
              {"p_font", u.p_font},
              {"p_tap", u.p_tap},
              {"p_content", u.p_content},
              {"issues", issues_json(detect_issues(scored, segments))}};
  if (a.explain) out["aesthetic_diff"] = edge_diffs_json(diffs);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

// ---- corpus ----

int run_corpus(std::uint64_t seed, int count, const std::string& out_dir) {
  CorpusSpec spec;
  spec.seed = seed;
  spec.count = count;
  const fs::path out(out_dir);
  fs::create_directories(out);
  Json manifest = Json::array();
  for (const auto& p : generate_corpus(spec)) {
    write_file(out / (p.name + ".html"), p.html);
    write_file(out / (p.name + ".css"), p.css);
    manifest.push_back(manifest_json(p));
  }
  write_file(out / "manifest.json", manifest.dump(2) + "\n");
  std::cout << "wrote " << count << " pages to " << out.string() << "\n";
  return kOk;
}

// ---- bench ----

struct BenchArgs {
  std::string corpus;
  std::string algos = "pso,tabu";
  std::string g = "quad";
  std::string pops = "10";
  int runs = 10;
  long evals = 150;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string viewport = "360x640";
  double theta = kDefaultTheta;
  std::string out;
  std::string runs_out;
};

std::vector<BenchPage> load_corpus(const fs::path& dir) {
  std::vector<std::string> names;
  if (fs::exists(dir / "manifest.json")) {
    for (const auto& entry : Json::parse(read_file(dir / "manifest.json"))) names.push_back(entry.at("page"));
  } else {
    for (const auto& f : fs::directory_iterator(dir)) {
      if (f.path().extension() == ".html") names.push_back(f.path().stem().string());
    }
    std::sort(names.begin(), names.end());
  }
  if (names.empty()) throw UsageError("no pages found in " + dir.string());
  std::vector<BenchPage> pages;
  for (const auto& n : names) pages.push_back({n, read_file(dir / (n + ".html")), read_file(dir / (n + ".css"))});
  return pages;
}

std::string runs_csv(const std::vector<BenchRun>& runs) {
  std::string out = "page,algo,g,pop,run,seed,ok,U,A,F,evals_to_80,error\n";
  for (const auto& r : runs) {
    out += r.page + "," + std::string(algorithm_name(r.algorithm)) + "," + std::string(g_variant_name(r.g)) + "," +
           std::to_string(r.population) + "," + std::to_string(r.run) + "," + std::to_string(r.seed) + "," +
           (r.ok ? "1" : "0") + "," + format_double(r.U) + "," + format_double(r.A) + "," + format_double(r.F) + "," +
           std::to_string(r.evals_to_threshold) + ",\"" + r.error + "\"\n";
  }
  return out;
}

int run_bench(const BenchArgs& a) {
  BenchMatrix m;
  m.algorithms.clear();
  for (const auto& s : split_list(a.algos)) m.algorithms.push_back(parse_algorithm(s));
  m.g_variants.clear();
  for (const auto& s : split_list(a.g)) m.g_variants.push_back(parse_g_variant(s));
  m.populations.clear();
  for (const auto& s : split_list(a.pops)) {
    try {
      m.populations.push_back(std::stoi(s));
    } catch (const std::exception&) {
      throw UsageError("bad population '" + s + "'");
    }
  }
  if (m.algorithms.empty() || m.g_variants.empty() || m.populations.empty()) throw UsageError("empty bench matrix");
  m.runs = a.runs;

  BenchConfig cfg;
  cfg.pbra.evaluations = a.evals;
  cfg.tera.evaluations = a.evals;
  cfg.viewport = parse_viewport(a.viewport);
  cfg.theta = a.theta;
  cfg.seed = a.seed;
  cfg.threads = a.threads;

  const BenchResult r = bench(load_corpus(a.corpus), m, cfg);
  const std::string csv = summary_csv(r.summary);
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    write_file(a.out, csv);
  }
  if (!a.runs_out.empty()) write_file(a.runs_out, runs_csv(r.runs));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"webmend: search-based repair of mobile-friendliness issues"};
  app.require_subcommand(1);

  RepairArgs repair;
  auto* repair_cmd = app.add_subcommand("repair", "search for a patch and write patched.css, best.json, trace.csv");
  repair.page.add_to(repair_cmd);
  repair.fitness.add_to(repair_cmd);
  repair_cmd->add_option("--algo", repair.algo, "pso or tabu")->capture_default_str();
  repair_cmd->add_option("--evals", repair.evals, "fitness evaluation budget")->capture_default_str();
  repair_cmd->add_option("--seed", repair.seed, "RNG seed (default: $WEBMEND_SEED or 42)");
  repair_cmd->add_option("--pop", repair.pop, "PSO population size")->capture_default_str();
  repair_cmd->add_option("--delta", repair.delta, "tabu neighbor range")->capture_default_str();
  repair_cmd->add_option("--tabu-size", repair.tabu_size, "tabu list length")->capture_default_str();
  repair_cmd->add_option("--threads", repair.threads, "concurrent evaluations per batch")->capture_default_str();
  repair_cmd->add_option("--out", repair.out, "output directory")->required();

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "usability, aesthetics and fitness of a page");
  score.page.add_to(score_cmd);
  score.fitness.add_to(score_cmd);
  score_cmd->add_option("--patched-page", score.patched_page, "patched HTML to compare against the original");
  score_cmd->add_option("--patched-css", score.patched_css, "patched CSS to compare against the original");
  score_cmd->add_flag("--explain-aesthetics", score.explain, "list every changed layout-graph edge");

  std::uint64_t corpus_seed = 0;
  int corpus_count = 20;
  std::string corpus_out;
  auto* corpus_cmd = app.add_subcommand("corpus", "generate synthetic buggy pages and a defect manifest");
  corpus_cmd->add_option("--seed", corpus_seed, "RNG seed (default: $WEBMEND_SEED or 42)");
  corpus_cmd->add_option("--count", corpus_count, "number of pages")->capture_default_str()->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--out", corpus_out, "output directory")->required();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "run the algorithm matrix over a corpus");
  bench_cmd->add_option("--corpus", bench_args.corpus, "corpus directory")->required();
  bench_cmd->add_option("--algos", bench_args.algos, "comma-separated: pso,tabu")->capture_default_str();
  bench_cmd->add_option("--g", bench_args.g, "comma-separated: exp,quad,cubic")->capture_default_str();
  bench_cmd->add_option("--pops", bench_args.pops, "comma-separated PSO population sizes")->capture_default_str();
  bench_cmd->add_option("--runs", bench_args.runs, "seeded runs per cell")->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--evals", bench_args.evals, "fitness evaluation budget")->capture_default_str();
  bench_cmd->add_option("--seed", bench_args.seed, "base seed; run r uses seed + r (default: $WEBMEND_SEED or 42)");
  bench_cmd->add_option("--threads", bench_args.threads, "pages benchmarked concurrently")->capture_default_str();
  bench_cmd->add_option("--viewport", bench_args.viewport, "viewport as WIDTHxHEIGHT")->capture_default_str();
  bench_cmd->add_option("--theta", bench_args.theta, "segmentation merge threshold")->capture_default_str();
  bench_cmd->add_option("--out", bench_args.out, "summary CSV path (default: stdout)");
  bench_cmd->add_option("--runs-out", bench_args.runs_out, "per-run CSV path");

  PageArgs snapshot;
  auto* snapshot_cmd = app.add_subcommand("snapshot", "dump the laid-out box tree as JSON");
  snapshot.add_to(snapshot_cmd, false);

  PageArgs segments;
  auto* segments_cmd = app.add_subcommand("segments", "dump the page segmentation as JSON");
  segments.add_to(segments_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*repair_cmd) {
      if (repair_cmd->count("--seed") == 0) repair.seed = default_seed();
      return run_repair(repair);
    }
    if (*score_cmd) return run_score(score);
    if (*corpus_cmd) {
      if (corpus_cmd->count("--seed") == 0) corpus_seed = default_seed();
      return run_corpus(corpus_seed, corpus_count, corpus_out);
    }
    if (*bench_cmd) {
      if (bench_cmd->count("--seed") == 0) bench_args.seed = default_seed();
      return run_bench(bench_args);
    }
    if (*snapshot_cmd) {
      std::cout << snapshot_json(snapshot.load()).dump(2) << "\n";
      return kOk;
    }
    if (*segments_cmd) {
      const Page p = segments.load();
      std::cout << segments_json(segment(p.dom(), p.boxes, segments.theta)).dump(2) << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NoIssues& e) {
    std::cerr << e.what() << "\n";
    return kNoIssues;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
