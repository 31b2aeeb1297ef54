#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwl/embedding.hpp"
#include "qwl/error.hpp"
#include "qwl/formulas.hpp"
#include "qwl/hosts.hpp"
#include "qwl/qcube.hpp"
#include "qwl/search.hpp"

namespace qwl::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

// Flag values shared by the subcommands.
struct RunConfig {
  unsigned threads = 1;
  std::optional<std::size_t> budget;  // --budget; falls back to QWL_BUDGET

  // gen
  bool guest = false;
  std::string host = "all";
  int n = 0;
  std::string graph_format = "json";
  bool cuts = false;
  std::string output;
  std::string cuts_output;

  // wl
  std::string method = "all";
  std::string format = "table";
  bool timing = false;

  // verify
  int n_max = 4;
  bool brute_force = false;
  std::string host_file;

  // search
  bool exhaustive = false;
  std::size_t restarts = 100;
  std::size_t steps = 20000;
  std::uint64_t seed = 1;
  bool anneal = false;
  std::string counterexample_output;

  // report
  int n_min = 2;
};

std::optional<std::size_t> budget_from_environment() {
  const char* raw = std::getenv("QWL_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::size_t value = 0;
  std::istringstream in(raw);
  if (!(in >> value) || !in.eof() || value == 0) {
    throw DomainError(std::string("QWL_BUDGET must be a positive integer, got '") + raw + "'");
  }
  return value;
}

std::size_t exhaustive_budget(const RunConfig& config, std::size_t fallback) {
  if (config.budget) return *config.budget;
  if (auto env = budget_from_environment()) return *env;
  return fallback;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text;
  if (!file) throw IoError("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::vector<HostKind> selected_hosts(const std::string& name) {
  if (name == "all") return {std::begin(kAllHostKinds), std::end(kAllHostKinds)};
  if (auto kind = parse_host_kind(name)) return {*kind};
  throw DomainError("unknown host kind '" + name + "'");
}

const std::vector<std::string> kHostChoices{"cylinder", "caterpillar", "firecracker", "banana"};

// ---- gen -------------------------------------------------------------------

int cmd_gen(const RunConfig& config, std::ostream& out) {
  const auto format = config.graph_format == "dot" ? GraphFormat::dot : GraphFormat::json_edgelist;
  if (config.guest) {
    if (config.cuts) throw DomainError("--cuts applies to hosts only");
    emit(config.output, export_graph(build_qcube(config.n).graph, format), out);
    return kExitOk;
  }
  const auto kinds = selected_hosts(config.host);
  if (kinds.size() != 1) throw DomainError("gen needs --guest or a single --host kind");
  const auto host = build_host(kinds.front(), config.n);
  emit(config.output, export_graph(host.graph, format), out);
  if (config.cuts) {
    std::string cuts_path = config.cuts_output;
    if (cuts_path.empty() && !config.output.empty() && config.output != "-") {
      cuts_path = config.output + ".cuts.json";
    }
    emit(cuts_path, cut_family_to_json(host.cut_family), out);
  }
  return kExitOk;
}

// ---- wl --------------------------------------------------------------------

struct MethodRow {
  HostKind kind;
  std::string method;
  std::int64_t wirelength;
  std::int64_t runtime_ms;
};

int cmd_wl(const RunConfig& config, std::ostream& out) {
  const auto kinds = selected_hosts(config.host);
  std::vector<std::string> methods;
  if (config.method == "all") {
    methods = {"formula", "cuts", "distance"};
  } else {
    methods = {config.method};
  }

  std::vector<MethodRow> rows;
  std::map<HostKind, bool> agree;
  for (HostKind kind : kinds) {
    std::optional<HostSpec> host;
    std::optional<QCube> guest;
    std::optional<std::int64_t> first;
    agree[kind] = true;
    for (const auto& method : methods) {
      const auto start = std::chrono::steady_clock::now();
      std::int64_t value = 0;
      if (method == "formula") {
        value = wl_formula(kind, config.n);
      } else {
        if (!host) host = build_host(kind, config.n);
        if (!guest) guest = build_qcube(config.n);
        const auto lex = lex_embedding(*guest, *host);
        value = method == "cuts" ? wirelength_by_cuts(lex, host->cut_family)
                                 : wirelength_by_distance(lex);
      }
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      rows.push_back({kind, method, value, config.timing ? elapsed.count() : 0});
      if (first && *first != value) agree[kind] = false;
      if (!first) first = value;
    }
  }

  std::ostringstream text;
  if (config.format == "csv") {
    text << "host,n,method,wirelength,agree,runtime_ms\n";
    for (const auto& r : rows) {
      text << to_string(r.kind) << ',' << config.n << ',' << r.method << ',' << r.wirelength
           << ',' << (agree[r.kind] ? "true" : "false") << ',' << r.runtime_ms << '\n';
    }
  } else if (config.format == "json") {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      doc.push_back({{"host", to_string(r.kind)},
                     {"n", config.n},
                     {"method", r.method},
                     {"wirelength", r.wirelength},
                     {"agree", agree[r.kind]},
                     {"runtime_ms", r.runtime_ms}});
    }
    text << doc.dump(2) << '\n';
  } else {
    text << std::left << std::setw(13) << "host" << std::setw(4) << "n" << std::setw(10)
         << "method" << std::setw(12) << "wirelength" << "agree\n";
    for (const auto& r : rows) {
      text << std::left << std::setw(13) << to_string(r.kind) << std::setw(4) << config.n
           << std::setw(10) << r.method << std::setw(12) << r.wirelength
           << (agree[r.kind] ? "yes" : "NO") << '\n';
    }
  }
  emit(config.output, text.str(), out);

  for (const auto& [kind, ok] : agree) {
    if (!ok) return kExitCheckFailed;
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

class CheckLog {
 public:
  void record(const std::string& name, bool ok, const std::string& detail = {}) {
    text_ << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) text_ << ": " << detail;
    text_ << '\n';
    ++total_;
    if (!ok) ++failed_;
  }

  std::string finish() {
    text_ << (failed_ == 0 ? "all " : "") << total_ - failed_ << "/" << total_
          << " checks passed\n";
    return text_.str();
  }
  bool ok() const { return failed_ == 0; }

 private:
  std::ostringstream text_;
  int total_ = 0;
  int failed_ = 0;
};

int verify_host_file(const RunConfig& config, CheckLog& log) {
  const auto kinds = selected_hosts(config.host);
  if (kinds.size() != 1) throw DomainError("--host-file needs a single --host kind");
  const auto loaded = import_json_edgelist(read_file(config.host_file));
  int n = 0;
  for (std::int64_t count = 1; count < static_cast<std::int64_t>(loaded.vertex_count());
       count *= 3) {
    ++n;
  }
  if (pow3(n) != static_cast<std::int64_t>(loaded.vertex_count()) || n < 2) {
    throw DomainError("host file has " + std::to_string(loaded.vertex_count()) +
                      " vertices, expected 3^n with n >= 2");
  }
  const auto reference = build_host(kinds.front(), n);
  const std::string tag = std::string(to_string(kinds.front())) + " n=" + std::to_string(n);
  log.record("host-file matches " + tag + " construction", loaded == reference.graph);
  if (loaded == reference.graph) {
    const auto lex = lex_embedding(build_qcube(n), HostSpec{reference.kind, n, loaded,
                                                            reference.cut_family});
    const auto distance = wirelength_by_distance(lex);
    const auto formula = wl_formula(kinds.front(), n);
    log.record("host-file distance wirelength equals formula for " + tag, distance == formula,
               std::to_string(distance) + " vs " + std::to_string(formula));
  }
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  if (config.n_max < 1 || config.n_max > kDefaultMaxCubeDimension) {
    throw DomainError("--n-max must be in 1.." + std::to_string(kDefaultMaxCubeDimension));
  }
  CheckLog log;
  if (!config.host_file.empty()) {
    verify_host_file(config, log);
  }

  const std::size_t iso_budget = exhaustive_budget(config, kDefaultExhaustiveIsoBudget);
  for (int n = 1; n <= config.n_max; ++n) {
    const auto cube = build_qcube(n);
    const std::string tag = "n=" + std::to_string(n);
    bool regular = cube.graph.edge_count() == static_cast<std::size_t>(n * pow3(n));
    for (Vertex v = 0; v < cube.graph.vertex_count(); ++v) {
      regular = regular && cube.graph.degree(v) == static_cast<std::size_t>(2 * n);
    }
    log.record("Q_n^3 is 2n-regular with n*3^n edges, " + tag, regular);

    std::string mismatch;
    for (std::int64_t k = 1; k <= pow3(n) && mismatch.empty(); ++k) {
      if (lex_prefix_induced(cube, k) != iso_closed_form(k, n)) mismatch = "k=" + std::to_string(k);
    }
    log.record("lex prefix equals closed form, " + tag, mismatch.empty(), mismatch);

    if (config.brute_force && cube.graph.vertex_count() <= iso_budget) {
      mismatch.clear();
      for (std::int64_t k = 1; k <= pow3(n) && mismatch.empty(); ++k) {
        if (brute_force_iso(cube, k, iso_budget) != iso_closed_form(k, n)) {
          mismatch = "k=" + std::to_string(k);
        }
      }
      log.record("exhaustive I(k) equals closed form, " + tag, mismatch.empty(), mismatch);
    }
  }
  if (config.n_max >= 2) {
    const std::vector<std::int64_t> expected{0, 1, 2, 1, 2, 3, 2, 3, 4};
    log.record("delta-sequence of Q_2^3 is (0,1,2,1,2,3,2,3,4)",
               iso_profile(2).delta == expected);
  }

  for (int n = 2; n <= config.n_max; ++n) {
    const auto cube = build_qcube(n);
    for (HostKind kind : kAllHostKinds) {
      const auto host = build_host(kind, n);
      const std::string tag = std::string(to_string(kind)) + " n=" + std::to_string(n);
      const auto report = verify_cut_family(lex_embedding(cube, host), host.cut_family);
      log.record("cut family conditions hold for " + tag, report.passed(), report.summary());
    }
    for (const auto& record : cross_check(n, kAllHostKinds, config.threads)) {
      std::ostringstream detail;
      detail << "formula=" << record.formula.value_or(-1) << " cuts=" << record.cuts.value_or(-1)
             << " distance=" << record.distance.value_or(-1) << ' ' << record.error;
      log.record("engines agree for " + std::string(to_string(record.kind)) +
                     " n=" + std::to_string(n),
                 record.agree, detail.str());
    }
  }
  const bool ok = log.ok();
  emit(config.output, log.finish(), out);
  return ok ? kExitOk : kExitCheckFailed;
}

// ---- search ----------------------------------------------------------------

int cmd_search(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto kinds = selected_hosts(config.host);
  if (kinds.size() != 1) throw DomainError("search needs a single --host kind");
  const HostKind kind = kinds.front();
  const auto host = build_host(kind, config.n);
  const auto guest = build_qcube(config.n);
  const auto formula = wl_formula(kind, config.n);

  SearchResult result;
  if (config.exhaustive) {
    ExhaustiveOptions options;
    options.max_vertices = exhaustive_budget(config, options.max_vertices);
    options.threads = config.threads;
    result = exhaustive_search(guest, host.graph, options);
  } else {
    LocalSearchOptions options;
    options.restarts = config.restarts;
    options.steps = config.steps;
    options.seed = config.seed;
    options.method = config.anneal ? SearchMethod::anneal : SearchMethod::swap_descent;
    options.threads = config.threads;
    result = local_search(guest, host.graph, options);
  }

  auto doc = nlohmann::ordered_json::parse(to_json(result));
  nlohmann::ordered_json wrapped{{"host", to_string(kind)}, {"n", config.n}, {"formula", formula}};
  for (auto& [key, value] : doc.items()) wrapped[key] = value;
  wrapped["below_formula"] = result.best_wirelength < formula;
  emit(config.output, wrapped.dump() + "\n", out);

  if (result.best_wirelength < formula) {
    emit(config.counterexample_output, counterexample_report(kind, config.n, result, formula),
         err);
    return kExitCheckFailed;
  }
  return kExitOk;
}

// ---- report ----------------------------------------------------------------

int cmd_report(const RunConfig& config, std::ostream& out) {
  if (config.n_min > config.n_max) throw DomainError("--n-min exceeds --n-max");
  const auto kinds = selected_hosts(config.host);
  std::vector<WirelengthRecord> records;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    auto batch = cross_check(n, kinds, config.threads);
    records.insert(records.end(), batch.begin(), batch.end());
  }
  emit(config.output, to_csv(records), out);
  for (const auto& r : records) {
    if (!r.agree) return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Wirelength of 3-ary n-cube embeddings into cylinders and trees", "qwl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", config.threads, "Worker cap for parallel operations")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--budget", config.budget,
                 "Vertex budget for exhaustive oracles (overrides QWL_BUDGET)")
      ->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Write the guest cube or a host graph");
  auto* guest_flag = gen->add_flag("--guest", config.guest, "Emit Q_n^3");
  gen->add_option("--host", config.host, "Host kind")
      ->check(CLI::IsMember(kHostChoices))
      ->excludes(guest_flag);
  gen->add_option("-n", config.n, "Cube dimension")->required();
  gen->add_option("--format", config.graph_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  gen->add_flag("--cuts", config.cuts, "Also write the host's cut family as JSON");
  gen->add_option("-o,--output", config.output, "Output path (default stdout)");
  gen->add_option("--cuts-output", config.cuts_output,
                  "Cut family path (default <output>.cuts.json, or stdout)");

  auto* wl = app.add_subcommand("wl", "Evaluate lex-embedding wirelength");
  std::vector<std::string> host_or_all = kHostChoices;
  host_or_all.push_back("all");
  wl->add_option("--host", config.host, "Host kind or 'all'")->check(CLI::IsMember(host_or_all));
  wl->add_option("-n", config.n, "Cube dimension")->required();
  wl->add_option("--method", config.method, "formula, cuts, distance or all")
      ->check(CLI::IsMember({"formula", "cuts", "distance", "all"}));
  wl->add_option("--format", config.format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  wl->add_flag("--timing", config.timing, "Fill runtime_ms (otherwise 0 for byte-stable output)");
  wl->add_option("-o,--output", config.output, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run isoperimetric, cut and engine checks");
  verify->add_option("--n-max", config.n_max, "Largest cube dimension to check");
  verify->add_flag("--brute-force", config.brute_force, "Include the exhaustive I(k) oracle");
  verify->add_option("--host-file", config.host_file, "json-edgelist host to check");
  verify->add_option("--host", config.host, "Kind of the host in --host-file")
      ->check(CLI::IsMember(kHostChoices));
  verify->add_option("-o,--output", config.output, "Output path (default stdout)");

  auto* search = app.add_subcommand("search", "Look for embeddings below the formula");
  search->add_option("--host", config.host, "Host kind")
      ->check(CLI::IsMember(kHostChoices))
      ->required();
  search->add_option("-n", config.n, "Cube dimension")->required();
  search->add_flag("--exhaustive", config.exhaustive, "Enumerate every bijection");
  search->add_option("--restarts", config.restarts, "Random restarts");
  search->add_option("--steps", config.steps, "Swap evaluations per restart");
  search->add_option("--seed", config.seed, "Random seed");
  search->add_flag("--anneal", config.anneal, "Anneal before descending");
  search->add_option("-o,--output", config.output, "SearchResult JSON path (default stdout)");
  search->add_option("--counterexample-out", config.counterexample_output,
                     "Where to write a counterexample report (default stderr)");

  auto* report = app.add_subcommand("report", "Cross-check CSV over a range of n");
  report->add_option("--n-min", config.n_min, "Smallest n")->check(CLI::PositiveNumber);
  report->add_option("--n-max", config.n_max, "Largest n")->check(CLI::PositiveNumber);
  report->add_option("--host", config.host, "Host kind or 'all'")
      ->check(CLI::IsMember(host_or_all));
  report->add_option("-o,--output", config.output, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (!config.guest && config.host == "all") {
        throw DomainError("gen needs --guest or --host KIND");
      }
      return cmd_gen(config, out);
    }
    if (wl->parsed()) return cmd_wl(config, out);
    if (verify->parsed()) return cmd_verify(config, out);
    if (search->parsed()) return cmd_search(config, out, err);
    return cmd_report(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qwl::cli
