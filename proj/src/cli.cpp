#include "wordorder/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "wordorder/claims.hpp"
#include "wordorder/core_costs.hpp"
#include "wordorder/evolution_dynamics.hpp"
#include "wordorder/ordering_optimizer.hpp"
#include "wordorder/orders.hpp"
#include "wordorder/typology.hpp"

namespace wordorder::cli {

namespace {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string num(double value) { return fmt::format("{}", value); }

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw std::invalid_argument("malformed " + what + " list '" + text + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) throw std::invalid_argument("empty " + what + " list");
  return values;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw std::invalid_argument("malformed value list '" + text + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) throw std::invalid_argument("empty value list");
  return values;
}

/// Reads `key=value` lines into `--key value` argument pairs.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot read config file '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    const std::string content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(line_number) +
                                  ": expected key=value");
    }
    const std::string key = trim(std::string_view(content).substr(0, eq));
    if (key.empty()) {
      throw std::invalid_argument(path + ":" + std::to_string(line_number) + ": empty key");
    }
    args.push_back("--" + key);
    args.push_back(trim(std::string_view(content).substr(eq + 1)));
  }
  return args;
}

/// Splices config-file values in front of the explicit flags so flags win.
void expand_config(std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::optional<std::string> path;
    std::size_t consumed = 1;
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a path");
      path = args[i + 1];
      consumed = 2;
    } else if (args[i].starts_with("--config=")) {
      path = args[i].substr(9);
    }
    if (!path) continue;
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
               args.begin() + static_cast<std::ptrdiff_t>(i + consumed));
    const std::vector<std::string> extra = read_config(*path);
    const std::size_t at = (!args.empty() && !args.front().starts_with("-")) ? 1 : 0;
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(), extra.end());
    return;
  }
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path.string() + "'");
  return file;
}

struct CostOptions {
  std::string g = "linear";
  double exponent = 1.0;
  std::string g_table;

  CostFunction build() const {
    if (!g_table.empty()) return CostFunction::tabulated(parse_real_list(g_table));
    return make_cost_function(g, exponent);
  }
};

void add_cost_options(CLI::App& cmd, CostOptions& options) {
  cmd.add_option("--g", options.g, "Cost function: linear, power, logarithmic")
      ->capture_default_str();
  cmd.add_option("--exponent", options.exponent, "Exponent of the power cost function")
      ->capture_default_str();
  cmd.add_option("--g-table", options.g_table,
                 "Explicit g(1),g(2),... values; overrides --g (test hook)");
}

struct LayoutOptions {
  std::string sizes;
  std::string offsets;

  bool given() const { return !sizes.empty() || !offsets.empty(); }

  std::vector<Constituent> constituents(std::size_t expected) const {
    std::vector<int> size_values = sizes.empty() ? std::vector<int>(expected, 1)
                                                 : parse_int_list(sizes, "sizes");
    std::vector<int> offset_values = offsets.empty() ? std::vector<int>(expected, 0)
                                                     : parse_int_list(offsets, "offsets");
    if (size_values.size() != expected || offset_values.size() != expected) {
      throw std::invalid_argument("expected " + std::to_string(expected) +
                                  " comma-separated sizes/offsets");
    }
    std::vector<Constituent> parts;
    for (std::size_t i = 0; i < expected; ++i) parts.push_back({size_values[i], offset_values[i]});
    return parts;
  }

  /// Sizes and offsets listed as S,V,O.
  ConstituentLayout three_element() const {
    const std::vector<Constituent> parts = constituents(3);
    return three_element_layout(parts[0], parts[1], parts[2]);
  }
};

void add_layout_options(CLI::App& cmd, LayoutOptions& options, const std::string& listing) {
  cmd.add_option("--sizes", options.sizes, "Constituent sizes in words, " + listing);
  cmd.add_option("--offsets", options.offsets, "Head word offsets, " + listing);
}

void add_format_option(CLI::App& cmd, std::string& format) {
  cmd.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

// costs ---------------------------------------------------------------------

struct CostsConfig {
  int n = 0;
  CostOptions cost;
  LayoutOptions layout;
  std::string order;
  std::string format = "csv";
};

void run_costs(const CostsConfig& config, std::ostream& out) {
  const CostFunction g = config.cost.build();
  if (!config.order.empty() && config.n != 2) {
    throw std::domain_error("--order applies to S/V/O layouts only (n=2)");
  }

  struct Row {
    int l;
    double cost;
    std::optional<double> word_cost;
  };
  std::vector<Row> rows;
  if (!config.order.empty()) {
    const auto order = parse_word_order(config.order);
    if (!order) throw std::invalid_argument("unknown order '" + config.order + "'");
    const ConstituentLayout layout = config.layout.three_element();
    const Linearization lin = to_linearization(*order);
    const int l = lin.head_position(layout);
    rows.push_back({l, memory_cost_constituents(2, l, g), memory_cost_words(layout, lin, g)});
  } else {
    memory_cost_constituents(config.n, 1, g);  // validates n before building layouts
    const auto count = static_cast<std::size_t>(config.n) + 1;
    const std::optional<std::vector<Constituent>> parts =
        config.layout.given() ? std::optional(config.layout.constituents(count)) : std::nullopt;
    for (int l = 1; l <= config.n + 1; ++l) {
      Row row{l, memory_cost_constituents(config.n, l, g), std::nullopt};
      if (parts) {
        // Constituents are listed in linear order; the one at position l is the root.
        const ConstituentLayout layout(*parts, l - 1);
        row.word_cost = memory_cost_words(layout, Linearization::identity(config.n + 1), g);
      }
      rows.push_back(row);
    }
  }

  const bool with_words = rows.front().word_cost.has_value();
  if (config.format == "json") {
    Json table = Json::array();
    for (const Row& row : rows) {
      Json entry = {{"n", config.n}, {"l", row.l}, {"g_kind", g.kind_name()}, {"cost", row.cost}};
      if (row.word_cost) entry["word_cost"] = *row.word_cost;
      table.push_back(entry);
    }
    out << table.dump(2) << '\n';
    return;
  }
  out << "n,l,g_kind,cost" << (with_words ? ",word_cost" : "") << '\n';
  for (const Row& row : rows) {
    out << config.n << ',' << row.l << ',' << g.kind_name() << ',' << num(row.cost);
    if (row.word_cost) out << ',' << num(*row.word_cost);
    out << '\n';
  }
}

// pareto --------------------------------------------------------------------

struct ParetoConfig {
  CostOptions cost;
  LayoutOptions layout;
  EnergyParams params;
  std::string format = "csv";
};

void run_pareto(const ParetoConfig& config, std::ostream& out) {
  validate(config.params);
  const CostFunction g = config.cost.build();
  const ConstituentLayout layout = config.layout.three_element();
  const std::vector<ScoredOrder> scored = score_orders(kAllOrders, layout, g);
  std::vector<ObjectiveScores> scores;
  for (const ScoredOrder& s : scored) scores.push_back(s.scores);
  const std::vector<bool> front = pareto_mask(scores);

  if (config.format == "json") {
    Json table = Json::array();
    for (std::size_t i = 0; i < scored.size(); ++i) {
      const ObjectiveScores& s = scored[i].scores;
      table.push_back({{"order", to_string(scored[i].order)},
                       {"memory", s.memory},
                       {"memory_normalized", s.memory_normalized},
                       {"head_pred", s.head_pred},
                       {"dep_pred", s.dep_pred},
                       {"on_front", static_cast<bool>(front[i])},
                       {"energy", scalarized_energy(s, config.params)}});
    }
    out << table.dump(2) << '\n';
    return;
  }
  out << "order,memory,memory_normalized,head_pred,dep_pred,on_front,energy\n";
  for (std::size_t i = 0; i < scored.size(); ++i) {
    const ObjectiveScores& s = scored[i].scores;
    out << to_string(scored[i].order) << ',' << num(s.memory) << ',' << num(s.memory_normalized)
        << ',' << num(s.head_pred) << ',' << num(s.dep_pred) << ','
        << (front[i] ? "true" : "false") << ',' << num(scalarized_energy(s, config.params))
        << '\n';
  }
}

// dynamics ------------------------------------------------------------------

struct DynamicsConfig {
  CostOptions cost;
  LayoutOptions layout;
  EnergyParams params;
  double beta = 2.0;
  long steps = 100000;
  std::uint64_t seed = 42;
  double theta = 2.0 / 3.0;
  long window = 10000;
  std::string out_dir;
  std::string format = "json";
};

std::string dominance_label(const Dominance& d) {
  return d ? std::string(to_string(*d)) : std::string("none");
}

void run_dynamics(const DynamicsConfig& config, std::ostream& out) {
  validate(config.params);
  const CostFunction g = config.cost.build();
  const ConstituentLayout layout = config.layout.three_element();
  const RingGraph ring = build_ring();
  const ChainSpec spec = make_chain_spec(layout, g, config.params, config.beta);
  const OrderVector pi = stationary_distribution(transition_matrix(spec, ring));
  const Dominance dominance = classify_dominance(pi, config.theta);
  const Trajectory trajectory =
      simulate_trajectory(spec, ring, config.steps, config.seed, {config.theta, config.window});

  std::ostringstream landscape;
  landscape << "order,energy,pi\n";
  std::ostringstream stationary;
  stationary << "order,pi\n";
  for (const WordOrder order : kAllOrders) {
    landscape << to_string(order) << ',' << num(spec.energy(index_of(order))) << ','
              << num(pi(index_of(order))) << '\n';
    stationary << to_string(order) << ',' << num(pi(index_of(order))) << '\n';
  }

  Json summary;
  summary["lambda"] = config.params.lambda;
  summary["mu"] = config.params.mu;
  summary["beta"] = config.beta;
  summary["steps"] = config.steps;
  summary["seed"] = config.seed;
  summary["theta"] = config.theta;
  Json energies, probabilities, visits;
  for (const WordOrder order : kAllOrders) {
    const std::string name(to_string(order));
    energies[name] = spec.energy(index_of(order));
    probabilities[name] = pi(index_of(order));
    visits[name] = trajectory.stats.visit_counts[static_cast<std::size_t>(index_of(order))];
  }
  summary["energy"] = energies;
  summary["pi"] = probabilities;
  summary["local_minima"] = count_local_minima(spec.energy, ring);
  Json minima = Json::array();
  for (const WordOrder order : global_minima(spec.energy)) minima.push_back(to_string(order));
  summary["global_minima"] = minima;
  summary["dominance"] = dominance_label(dominance);
  summary["reversion_count"] = trajectory.stats.reversion_count;
  summary["visit_counts"] = visits;
  summary["window"] = trajectory.stats.window;
  Json windows = Json::array();
  for (const Dominance& d : trajectory.stats.window_dominance) windows.push_back(dominance_label(d));
  summary["window_dominance"] = windows;
  const std::string summary_text = summary.dump(2) + "\n";

  const std::filesystem::path dir(config.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

  open_output(dir / "landscape.csv") << landscape.str();
  open_output(dir / "stationary.csv") << stationary.str();
  {
    std::ofstream file = open_output(dir / "trajectory.csv");
    file << "step,order\n";
    for (std::size_t t = 0; t < trajectory.states.size(); ++t) {
      file << t << ',' << to_string(trajectory.states[t]) << '\n';
    }
    if (!file) throw IoError("failed writing trajectory.csv");
  }
  open_output(dir / "summary.json") << summary_text;

  out << (config.format == "csv" ? landscape.str() : summary_text);
}

// ingest --------------------------------------------------------------------

struct IngestConfig {
  std::string input;
  std::string format = "csv";
};

void run_ingest(const IngestConfig& config, std::ostream& out) {
  std::ifstream file(config.input, std::ios::binary);
  if (!file) throw IoError("cannot read '" + config.input + "'");
  const TypologySummary summary = summarize(parse_language_table(file));
  if (config.format == "json") {
    const Json json = {{"n1", summary.n1},
                       {"n2", summary.n2},
                       {"n3", summary.n3},
                       {"none_count", summary.none_count},
                       {"total", summary.total}};
    out << json.dump(2) << '\n';
    return;
  }
  out << "n1,n2,n3,none_count,total\n"
      << summary.n1 << ',' << summary.n2 << ',' << summary.n3 << ',' << summary.none_count << ','
      << summary.total << '\n';
}

// verify --------------------------------------------------------------------

struct VerifyConfig {
  int max_n = 12;
  std::string g_table;
  int samples = 100;
  std::uint64_t seed = 20130101;
  std::string format = "csv";
};

int run_verify(const VerifyConfig& config, std::ostream& out) {
  VerifyOptions options;
  options.max_n = config.max_n;
  options.sampled_chains = config.samples;
  options.seed = config.seed;
  if (!config.g_table.empty()) {
    options.cost_override = CostFunction::tabulated(parse_real_list(config.g_table));
  }
  const std::vector<ClaimResult> results = run_claims(options);
  const bool all_passed =
      std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.passed; });

  if (config.format == "json") {
    Json json = Json::array();
    for (const ClaimResult& r : results) {
      json.push_back({{"claim", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    out << json.dump(2) << '\n';
  } else {
    for (const ClaimResult& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    }
  }
  return all_passed ? kExitOk : kExitConfig;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word-order constraint laboratory"};
  app.name("wordorder");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_help_all_flag("--help-all");

  CostsConfig costs;
  CLI::App* costs_cmd = app.add_subcommand("costs", "Memory cost D_l (and D'_l with --sizes)");
  costs_cmd->add_option("--n", costs.n, "Number of dependents")->required();
  add_cost_options(*costs_cmd, costs.cost);
  add_layout_options(*costs_cmd, costs.layout,
                     "listed in linear order (or S,V,O with --order)");
  costs_cmd->add_option("--order", costs.order, "Labeled S/V/O order for a single D' row");
  add_format_option(*costs_cmd, costs.format);

  ParetoConfig pareto;
  CLI::App* pareto_cmd = app.add_subcommand("pareto", "Scores, Pareto front and energy of the six orders");
  add_cost_options(*pareto_cmd, pareto.cost);
  add_layout_options(*pareto_cmd, pareto.layout, "listed as S,V,O");
  pareto_cmd->add_option("--lambda", pareto.params.lambda, "Memory weight")->capture_default_str();
  pareto_cmd->add_option("--mu", pareto.params.mu, "Head predictability weight")
      ->capture_default_str();
  add_format_option(*pareto_cmd, pareto.format);

  DynamicsConfig dynamics;
  CLI::App* dynamics_cmd = app.add_subcommand("dynamics", "Metropolis chain on the order ring");
  add_cost_options(*dynamics_cmd, dynamics.cost);
  add_layout_options(*dynamics_cmd, dynamics.layout, "listed as S,V,O");
  dynamics_cmd->add_option("--lambda", dynamics.params.lambda, "Memory weight")
      ->capture_default_str();
  dynamics_cmd->add_option("--mu", dynamics.params.mu, "Head predictability weight")
      ->capture_default_str();
  dynamics_cmd->add_option("--beta", dynamics.beta, "Inverse temperature")->capture_default_str();
  dynamics_cmd->add_option("--steps", dynamics.steps, "Trajectory length")->capture_default_str();
  dynamics_cmd->add_option("--seed", dynamics.seed, "Random seed")->capture_default_str();
  dynamics_cmd->add_option("--theta", dynamics.theta, "Dominance threshold")
      ->capture_default_str();
  dynamics_cmd->add_option("--window", dynamics.window, "Steps per dominance window")
      ->capture_default_str();
  dynamics_cmd->add_option("--out", dynamics.out_dir, "Output directory")->required();
  dynamics.format = "json";
  add_format_option(*dynamics_cmd, dynamics.format);

  IngestConfig ingest;
  CLI::App* ingest_cmd = app.add_subcommand("ingest", "Summarize a language_id,dominant_order table");
  ingest_cmd->add_option("--input", ingest.input, "Input CSV")->required();
  add_format_option(*ingest_cmd, ingest.format);

  VerifyConfig verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the brute-force claim checks");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest n swept")->capture_default_str();
  verify_cmd->add_option("--g-table", verify.g_table,
                         "Replace the bundled cost functions by explicit g values");
  verify_cmd->add_option("--samples", verify.samples, "Sampled chains for detailed balance")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed for sampled chains")->capture_default_str();
  add_format_option(*verify_cmd, verify.format);

  try {
    expand_config(args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (costs_cmd->parsed()) run_costs(costs, out);
    if (pareto_cmd->parsed()) run_pareto(pareto, out);
    if (dynamics_cmd->parsed()) run_dynamics(dynamics, out);
    if (ingest_cmd->parsed()) run_ingest(ingest, out);
    if (verify_cmd->parsed()) return run_verify(verify, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace wordorder::cli
