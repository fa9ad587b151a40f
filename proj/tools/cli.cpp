#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "trajnet/corpus.hpp"
#include "trajnet/diffusion.hpp"
#include "trajnet/export.hpp"
#include "trajnet/mixing.hpp"
#include "trajnet/moselect.hpp"
#include "trajnet/motifs.hpp"
#include "trajnet/netstats.hpp"
#include "trajnet/synth.hpp"
#include "trajnet/version.hpp"

namespace trajnet::cli {

namespace {

using io::json;

struct RunConfig {
  double alpha = 0.01;
  std::size_t k_max = 3;
  std::optional<double> top_percent;
  std::string map_file;
  std::uint64_t seed = 1;
  std::string source;
  std::size_t steps = 2;
  std::size_t order = 2;
  std::size_t length = 1;
  std::size_t n = 10;
  std::string format = "json";
  bool directed = false;
  std::string out_file;

  // ingest
  int min_year = ExtractConfig{}.min_year;
  int max_year = ExtractConfig{}.max_year;

  // generate
  std::string model = "return";
  std::size_t walks = 10'000;
  std::size_t walk_length = 5;
  std::size_t labels = 6;
  double rho = 0.8;
};

json config_json(const std::string& command, const RunConfig& c) {
  json j = {{"command", command},
            {"alpha", io::number(c.alpha)},
            {"k_max", c.k_max},
            {"log_base", "natural"},
            {"top_percent", io::number(c.top_percent)},
            {"map", c.map_file.empty() ? json(nullptr) : json(c.map_file)},
            {"seed", c.seed},
            {"format", c.format}};
  if (command == "diffuse") {
    j["source"] = c.source;
    j["steps"] = c.steps;
  } else if (command == "stats" || command == "network") {
    j["order"] = c.order;
    j["directed"] = c.directed;
  } else if (command == "toppaths") {
    j["length"] = c.length;
    j["n"] = c.n;
  } else if (command == "ingest") {
    j["min_year"] = c.min_year;
    j["max_year"] = c.max_year;
  } else if (command == "generate") {
    j["model"] = c.model;
    j["walks"] = c.walks;
    j["walk_length"] = c.walk_length;
    j["labels"] = c.labels;
    j["rho"] = io::number(c.rho);
  }
  return j;
}

json with_meta(json doc, const std::string& command, const RunConfig& c,
               const std::string& fingerprint) {
  if (!doc.is_object()) doc = json{{"result", std::move(doc)}};
  doc["tool_version"] = kVersion;
  doc["config"] = config_json(command, c);
  doc["input_fingerprint"] = fingerprint;
  return doc;
}

/// Writes `text` to `path` through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw Error("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot rename into " + path + ": " + ec.message());
  }
}

void emit(const std::string& text, const RunConfig& c, std::ostream& out) {
  if (c.out_file.empty()) {
    out << text;
  } else {
    write_atomically(c.out_file, text);
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path);
  return f;
}

std::map<Label, Label> load_mapping(const std::string& path) {
  auto f = open_input(path);
  return read_mapping_csv(f, path);
}

struct LoadedCorpus {
  PathMultiset corpus;
  std::string fingerprint;
};

LoadedCorpus load_corpus(const std::string& path, const RunConfig& c) {
  auto f = open_input(path);
  LoadedCorpus lc;
  lc.corpus = parse_ngram(f, path);
  lc.fingerprint = fingerprint(lc.corpus);
  if (!c.map_file.empty()) lc.corpus = relabel(lc.corpus, load_mapping(c.map_file));
  if (c.top_percent) lc.corpus = top_percent(lc.corpus, *c.top_percent);
  return lc;
}

std::string document(json doc, const std::string& command, const RunConfig& c,
                     const std::string& fp) {
  return io::dump(with_meta(std::move(doc), command, c, fp));
}

// --- commands ---------------------------------------------------------------

int cmd_ingest(const std::string& csv_path, const std::string& out_path, const RunConfig& c,
               std::ostream& out, std::ostream& err) {
  auto f = open_input(csv_path);
  const auto records = read_records_csv(f, csv_path);
  PathMultiset s = extract_trajectories(records, {c.min_year, c.max_year});
  if (!c.map_file.empty()) s = relabel(s, load_mapping(c.map_file));
  if (s.empty()) err << "warning: " << csv_path << " yielded no trajectories\n";
  write_atomically(out_path, to_ngram_string(s));
  out << document(io::to_json(corpus_stats(s)), "ingest", c, fingerprint(s));
  return kExitOk;
}

int cmd_order(const std::string& in, const RunConfig& c, std::ostream& out) {
  auto lc = load_corpus(in, c);
  auto result = detect_optimal_order(lc.corpus, c.k_max, c.alpha);
  emit(document(io::to_json(result), "order", c, lc.fingerprint), c, out);
  return kExitOk;
}

int cmd_motifs(const std::string& in, const RunConfig& c, std::ostream& out) {
  auto lc = load_corpus(in, c);
  const auto table = motif_rank_table(lc.corpus);
  if (c.format == "csv") {
    std::ostringstream csv;
    io::write_rank_csv(csv, table);
    emit(csv.str(), c, out);
    return kExitOk;
  }
  json doc = io::to_json(kl_report(lc.corpus));
  doc["rank_table"] = io::to_json(table);
  emit(document(std::move(doc), "motifs", c, lc.fingerprint), c, out);
  return kExitOk;
}

int cmd_mixing(const std::string& in, const RunConfig& c, std::ostream& out) {
  auto lc = load_corpus(in, c);
  json doc;
  if (lc.corpus.max_length() < 2) {
    doc = {{"H_emp", nullptr},
           {"H_markov", nullptr},
           {"lambda", nullptr},
           {"degenerate", true},
           {"per_edge", json::object()},
           {"reason", "corpus contains no length-2 window"}};
  } else {
    doc = io::to_json(entropy_growth_ratio(lc.corpus));
  }
  emit(document(std::move(doc), "mixing", c, lc.fingerprint), c, out);
  return kExitOk;
}

int cmd_diffuse(const std::string& in, const RunConfig& c, std::ostream& out) {
  auto lc = load_corpus(in, c);
  const auto t1 = transition_matrix(build_network(lc.corpus, 1));
  const auto emp = empirical_diffusion(lc.corpus, c.source, c.steps);
  const auto markov = markovian_diffusion(t1, c.source, c.steps);
  json doc = io::alluvial_export(emp, markov);
  emit(document(std::move(doc), "diffuse", c, lc.fingerprint), c, out);
  return kExitOk;
}

int cmd_network(const std::string& in, const RunConfig& c, std::ostream& out, bool with_stats) {
  auto lc = load_corpus(in, c);
  const auto net = build_network(lc.corpus, c.order);
  const std::string command = with_stats ? "stats" : "network";
  if (c.format == "dot") {
    std::string dot = "// tool_version=" + std::string(kVersion) +
                      " input_fingerprint=" + lc.fingerprint + "\n" + io::to_dot(net);
    emit(dot, c, out);
    return kExitOk;
  }
  json doc;
  if (with_stats) {
    doc = {{"corpus", io::to_json(corpus_stats(lc.corpus))},
           {"network", {{"order", net.order()},
                        {"node_count", net.nodes().size()},
                        {"edge_count", net.edges().size()}}},
           {"topology", io::to_json(topology_report(net, {c.directed}))}};
  } else {
    doc = io::to_json(net);
  }
  emit(document(std::move(doc), command, c, lc.fingerprint), c, out);
  return kExitOk;
}

int cmd_toppaths(const std::string& in, const RunConfig& c, std::ostream& out) {
  auto lc = load_corpus(in, c);
  json doc = {{"paths", io::to_json(top_paths(lc.corpus, c.length, c.n))},
              {"total", lc.corpus.total()}};
  emit(document(std::move(doc), "toppaths", c, lc.fingerprint), c, out);
  return kExitOk;
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  WalkConfig w{c.labels, c.walks, c.walk_length, c.seed};
  const PathMultiset s =
      c.model == "memoryless" ? sample_memoryless(w) : sample_return_biased(w, c.rho);
  emit(to_ngram_string(s), c, out);
  return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--top-percent", c.top_percent,
                  "Keep the most frequent trajectories covering this share of the corpus")
      ->check(CLI::Range(0.0, 100.0));
  sub->add_option("--map", c.map_file, "Relabel through a from,to CSV before analysis")
      ->check(CLI::ExistingFile);
  sub->add_option("--seed", c.seed, "Seed for sampling utilities");
  sub->add_option("-o,--out", c.out_file, "Write the document to a file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"trajnet: temporal correlation analysis of trajectory corpora", "trajnet"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig c;
  std::string input;
  std::string output;

  auto* ingest = app.add_subcommand("ingest", "Build an n-gram corpus from a record CSV");
  ingest->add_option("csv", input, "CSV with author_id,year,location")->required();
  ingest->add_option("ngram", output, "Output n-gram file")->required();
  ingest->add_option("--map", c.map_file, "Relabel through a from,to CSV");
  ingest->add_option("--min-year", c.min_year, "Drop records before this year");
  ingest->add_option("--max-year", c.max_year, "Drop records after this year");

  auto* order = app.add_subcommand("order", "Select the optimal model order");
  order->add_option("--alpha", c.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0));
  order->add_option("--k-max", c.k_max, "Largest order to test")->check(CLI::Range(1, 64));

  auto* motifs = app.add_subcommand("motifs", "Motif distributions, KL ratios and odds ratios");
  motifs->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));

  auto* mixing = app.add_subcommand("mixing", "Entropy growth ratio");

  auto* diffuse = app.add_subcommand("diffuse", "Empirical vs Markovian diffusion (alluvial JSON)");
  diffuse->add_option("--source", c.source, "Source label")->required();
  diffuse->add_option("--steps", c.steps, "Number of moves")->check(CLI::Range(0, 1000));

  auto* stats = app.add_subcommand("stats", "Corpus statistics and network topology");
  stats->add_option("--order", c.order, "Network order")->check(CLI::Range(1, 64));
  stats->add_option("--format", c.format)->check(CLI::IsMember({"json", "dot"}));
  stats->add_flag("--directed", c.directed, "Follow edge direction for distances");

  auto* network = app.add_subcommand("network", "Export a higher-order network");
  network->add_option("--order", c.order, "Network order")->check(CLI::Range(1, 64));
  network->add_option("--format", c.format)->check(CLI::IsMember({"json", "dot"}));

  auto* toppaths = app.add_subcommand("toppaths", "Most frequent trajectories of a given length");
  toppaths->add_option("--length", c.length, "Trajectory length (transitions)");
  toppaths->add_option("--n", c.n, "Number of trajectories");

  for (auto* sub : {order, motifs, mixing, diffuse, stats, network, toppaths}) {
    sub->add_option("ngram", input, "Input n-gram file")->required();
    add_common(sub, c);
  }

  auto* generate = app.add_subcommand("generate", "Sample a synthetic walk corpus");
  generate->add_option("--model", c.model)->check(CLI::IsMember({"memoryless", "return"}));
  generate->add_option("--walks", c.walks);
  generate->add_option("--walk-length", c.walk_length);
  generate->add_option("--labels", c.labels);
  generate->add_option("--rho", c.rho, "Return probability")->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", c.seed);
  generate->add_option("-o,--out", c.out_file);

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(input, output, c, out, err);
    if (order->parsed()) return cmd_order(input, c, out);
    if (motifs->parsed()) return cmd_motifs(input, c, out);
    if (mixing->parsed()) return cmd_mixing(input, c, out);
    if (diffuse->parsed()) return cmd_diffuse(input, c, out);
    if (stats->parsed()) return cmd_network(input, c, out, true);
    if (network->parsed()) return cmd_network(input, c, out, false);
    if (toppaths->parsed()) return cmd_toppaths(input, c, out);
    if (generate->parsed()) return cmd_generate(c, out);
  } catch (const MissingLabelsError& e) {
    err << "error: unmapped labels:\n";
    for (const auto& l : e.labels()) err << "  " << l << "\n";
    return kExitDataError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace trajnet::cli
