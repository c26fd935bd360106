// Copyright 2026 The ferrtree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ferrtree/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ferrtree/baselines.hpp"
#include "ferrtree/encoding.hpp"
#include "ferrtree/error.hpp"
#include "ferrtree/io.hpp"
#include "ferrtree/parallel.hpp"
#include "ferrtree/qdrift.hpp"
#include "ferrtree/topp_hatt.hpp"
#include "json.hpp"

namespace ferrtree::cli {

namespace {

using nlohmann::json;

// Thrown when a report says "invalid"; maps to exit code 1.
struct ValidationFailure {
  std::string message;
};

std::string num(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string short_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct TreeOptions {
  std::vector<std::string> trees;
  std::string device;
  std::vector<std::string> heuristics;
  std::optional<std::uint32_t> root;
};

struct NamedTree {
  std::string name;
  TernaryTree naive;  // leaves indexed
};

void add_tree_options(CLI::App* app, TreeOptions& o) {
  app->add_option("--tree", o.trees, "jw | parity | bk | jkmn | path to a ttree-1 file");
  app->add_option("--device", o.device, "device-1 graph for a Bonsai tree");
  app->add_option("--heuristic", o.heuristics, "Bonsai axis policy: het | homo")
      ->check(CLI::IsMember({"het", "homo", "heterogeneous", "homogeneous"}));
  app->add_option("--root", o.root, "Bonsai root qubit (default: minimum eccentricity)");
}

std::vector<NamedTree> resolve_trees(const TreeOptions& o, std::uint32_t n_modes) {
  std::vector<NamedTree> out;
  auto push = [&](std::string name, const TernaryTree& t) {
    if (t.n_modes() != n_modes) {
      throw DimensionError("tree '" + name + "' has " + std::to_string(t.n_modes()) +
                           " nodes; the Hamiltonian has " + std::to_string(n_modes) + " modes");
    }
    out.push_back({std::move(name), t.leaves_indexed() ? t : naive_tree(t)});
  };
  for (const auto& spec : o.trees) {
    StandardTree kind;
    bool standard = true;
    try {
      kind = parse_standard_tree(spec);
    } catch (const ArgumentError&) {
      standard = false;
    }
    if (standard) {
      push(std::string(to_string(kind)), build_standard(kind, n_modes));
    } else if (std::filesystem::exists(spec)) {
      push(std::filesystem::path(spec).stem().string(), load_tree(spec));
    } else {
      throw ArgumentError("--tree '" + spec + "' is neither a tree name nor a file");
    }
  }
  if (!o.device.empty()) {
    const DeviceGraph g = load_device(o.device);
    const auto root = o.root ? *o.root : default_bonsai_root(g);
    const std::vector<std::string> hs = o.heuristics.empty() ? std::vector<std::string>{"het"}
                                                             : o.heuristics;
    for (const auto& h : hs) {
      const auto kind = parse_bonsai_heuristic(h);
      push("bonsai-" + std::string(to_string(kind)), build_bonsai(g, kind, root, n_modes));
    }
  } else if (!o.heuristics.empty() || o.root) {
    throw ArgumentError("--heuristic and --root need --device");
  }
  if (out.empty()) push("jw", build_standard(StandardTree::JordanWigner, n_modes));
  return out;
}

NamedTree single_tree(const TreeOptions& o, std::uint32_t n_modes) {
  auto all = resolve_trees(o, n_modes);
  if (all.size() != 1) throw ArgumentError("this subcommand takes exactly one tree");
  return std::move(all.front());
}

json metrics_json(const WeightMetrics& m) {
  return {{"n_terms", m.n_terms},
          {"wp_total", m.wp_total},
          {"wcp_total", m.wcp_total},
          {"avg_wp", m.avg_wp},
          {"avg_wcp", m.avg_wcp}};
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

// ---------------------------------------------------------------- encode
struct EncodeArgs {
  std::string hamiltonian, encoding, encoding_out, qubit_out, tree_out;
  bool include_identity = false;
  TreeOptions trees;
};

int do_encode(const EncodeArgs& a, std::ostream& out) {
  const auto h = load_hamiltonian(a.hamiltonian);
  Encoding e;
  std::optional<TernaryTree> tree;
  if (!a.encoding.empty()) {
    e = load_encoding(a.encoding);
  } else {
    auto t = single_tree(a.trees, h.majorana.n_modes());
    e = strings_from_tree(t.naive);
    tree = std::move(t.naive);
  }
  const auto q = encode(h.majorana, e.strings);
  if (!a.encoding_out.empty()) write_text_file(a.encoding_out, dump_encoding(e));
  if (!a.qubit_out.empty()) write_text_file(a.qubit_out, dump_qubit_hamiltonian(q));
  if (!a.tree_out.empty() && tree) write_text_file(a.tree_out, dump_tree(*tree));
  json report = metrics_json(weight_metrics(q, a.include_identity));
  report["n_modes"] = h.majorana.n_modes();
  report["n_qubit_terms"] = q.terms.size();
  report["lambda"] = lambda_norm(q);
  report["max_imag"] = q.max_imaginary();
  out << report.dump(1) << '\n';
  return kExitOk;
}

// -------------------------------------------------------------- optimize
struct OptimizeArgs {
  std::string hamiltonian, method = "topphatt", tree_out, encoding_out, trace_out;
  std::optional<std::uint64_t> steps;
  std::optional<double> temperature;
  double cooling = 0.995;
  bool serial = false;
  bool pretty = false;
  TreeOptions trees;
};

struct Optimized {
  TernaryTree tree;
  std::vector<TraceEntry> trace;
};

Optimized run_method(const std::string& method, const MajoranaHamiltonian& h, const NamedTree& t,
                     const OptimizeArgs& a, std::uint64_t seed) {
  if (method == "topphatt") {
    auto r = optimize(h, t.naive.structure(), {!a.serial});
    return {std::move(r.tree), std::move(r.trace)};
  }
  if (method == "sa") {
    AnnealingParams p;
    p.initial_temperature = a.temperature;
    p.cooling = a.cooling;
    p.steps = a.steps;
    p.seed = seed;
    return {relabel_tree(t.naive, simulated_annealing(t.naive, h, p).scheme), {}};
  }
  if (method == "brute") return {relabel_tree(t.naive, brute_force(t.naive, h).scheme), {}};
  throw ArgumentError("unknown method '" + method + "'");
}

int do_optimize(const OptimizeArgs& a, std::uint64_t seed, std::ostream& out) {
  const auto h = load_hamiltonian(a.hamiltonian);
  const auto t = single_tree(a.trees, h.majorana.n_modes());
  const auto r = run_method(a.method, h.majorana, t, a, seed);
  const Encoding e = strings_from_tree(r.tree);
  const auto before = weight_metrics(encode(h.majorana, strings_from_tree(t.naive).strings));
  const auto after = weight_metrics(encode(h.majorana, e.strings));
  if (!a.tree_out.empty()) write_text_file(a.tree_out, dump_tree(r.tree));
  if (!a.encoding_out.empty()) write_text_file(a.encoding_out, dump_encoding(e));
  if (!a.trace_out.empty()) write_text_file(a.trace_out, format_trace(r.trace, r.tree.n_modes()));
  if (a.pretty) {
    out << "tree " << t.name << ", method " << a.method << "\n"
        << "            W_P      avg W_P   avg W_CP\n"
        << "naive      " << std::setw(8) << before.wp_total << "  " << num(before.avg_wp, 4)
        << "    " << num(before.avg_wcp, 4) << "\n"
        << "optimized  " << std::setw(8) << after.wp_total << "  " << num(after.avg_wp, 4)
        << "    " << num(after.avg_wcp, 4) << "\n";
  } else {
    json report = {{"tree", t.name},
                   {"method", a.method},
                   {"naive", metrics_json(before)},
                   {"optimized", metrics_json(after)}};
    out << report.dump(1) << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------- validate
struct ValidateArgs {
  std::string encoding, hamiltonian;
  std::optional<std::uint32_t> modes;
  std::optional<std::uint32_t> maxnto;
  TreeOptions trees;
};

int do_validate(const ValidateArgs& a, std::ostream& out) {
  Encoding e;
  if (!a.encoding.empty()) {
    e = load_encoding(a.encoding);
  } else if (a.maxnto) {
    e = build_maxnto(*a.maxnto);
  } else {
    std::uint32_t m = 0;
    if (a.modes) {
      m = *a.modes;
    } else if (!a.hamiltonian.empty()) {
      m = load_hamiltonian(a.hamiltonian).majorana.n_modes();
    } else if (a.trees.trees.size() == 1 && std::filesystem::exists(a.trees.trees.front())) {
      m = load_tree(a.trees.trees.front()).n_modes();
    } else if (!a.trees.device.empty()) {
      m = load_device(a.trees.device).n_qubits;
    } else {
      throw ArgumentError("validate needs --encoding, --maxnto, --modes or --hamiltonian");
    }
    e = strings_from_tree(single_tree(a.trees, m).naive);
  }
  const auto report = validate(e);
  const auto vacuum = check_vacuum(e);
  out << dump_validity(report, vacuum);
  if (!report.valid()) throw ValidationFailure{"encoding is not valid"};
  return kExitOk;
}

// --------------------------------------------------------------- metrics
struct MetricsArgs {
  std::string hamiltonian, encoding;
  bool include_identity = false;
  bool optimized = false;
  bool pretty = false;
  TreeOptions trees;
};

int do_metrics(const MetricsArgs& a, std::ostream& out) {
  const auto h = load_hamiltonian(a.hamiltonian);
  std::vector<std::pair<std::string, Encoding>> encodings;
  if (!a.encoding.empty()) {
    encodings.emplace_back(std::filesystem::path(a.encoding).stem().string(),
                           load_encoding(a.encoding));
  } else {
    for (const auto& t : resolve_trees(a.trees, h.majorana.n_modes())) {
      encodings.emplace_back(t.name, strings_from_tree(t.naive));
      if (a.optimized) {
        encodings.emplace_back(t.name + "+topphatt",
                               strings_from_tree(optimize(h.majorana, t.naive.structure()).tree));
      }
    }
  }
  json rows = json::array();
  std::ostringstream table;
  table << std::left << std::setw(22) << "encoding" << std::right << std::setw(10) << "W_P"
        << std::setw(12) << "avg W_P" << std::setw(12) << "avg W_CP" << std::setw(12) << "lambda"
        << "\n";
  for (const auto& [name, e] : encodings) {
    const auto q = encode(h.majorana, e.strings);
    const auto m = weight_metrics(q, a.include_identity);
    json row = metrics_json(m);
    row["encoding"] = name;
    row["lambda"] = lambda_norm(q);
    rows.push_back(row);
    table << std::left << std::setw(22) << name << std::right << std::setw(10) << m.wp_total
          << std::setw(12) << num(m.avg_wp, 4) << std::setw(12) << num(m.avg_wcp, 4)
          << std::setw(12) << num(lambda_norm(q), 4) << "\n";
  }
  if (a.pretty) {
    out << table.str();
  } else {
    out << rows.dump(1) << '\n';
  }
  return kExitOk;
}

// --------------------------------------------------------------- scatter
struct ScatterArgs {
  std::string hamiltonian, out;
  std::uint64_t samples = 1000;
  std::optional<std::uint64_t> sa_steps;
  TreeOptions trees;
};

int do_scatter(const ScatterArgs& a, std::uint64_t seed, std::ostream& out) {
  const auto h = load_hamiltonian(a.hamiltonian);
  const auto t = single_tree(a.trees, h.majorana.n_modes());
  std::ostringstream csv;
  csv << "sample_id,avg_wp,avg_wcp\n";
  for (const auto& s : random_scatter(t.naive, h.majorana, a.samples, seed)) {
    csv << s.sample_id << ',' << num(s.avg_wp, 8) << ',' << num(s.avg_wcp, 8) << '\n';
  }
  auto row = [&](const char* tag, const TernaryTree& tree) {
    const auto m = weight_metrics(encode(h.majorana, strings_from_tree(tree).strings));
    csv << tag << ',' << num(m.avg_wp, 8) << ',' << num(m.avg_wcp, 8) << '\n';
  };
  row("naive", t.naive);
  AnnealingParams p;
  p.seed = seed;
  p.steps = a.sa_steps;
  row("sa", relabel_tree(t.naive, simulated_annealing(t.naive, h.majorana, p).scheme));
  row("topphatt", optimize(h.majorana, t.naive.structure()).tree);
  emit(out, a.out, csv.str());
  return kExitOk;
}

// ---------------------------------------------------------------- qdrift
struct QdriftArgs {
  std::string hamiltonian, out, dump_circuit;
  std::vector<double> times{0.001};
  double epsilon = kDefaultEpsilon;
  std::uint64_t shots = 1000;
  bool pretty = false;
  bool serial = false;
  TreeOptions trees;
};

int do_qdrift(const QdriftArgs& a, std::uint64_t seed, std::ostream& out) {
  const auto h = load_hamiltonian(a.hamiltonian);
  const auto trees = resolve_trees(a.trees, h.majorana.n_modes());
  std::ostringstream csv, pretty, dump;
  csv << "encoding,variant,t,epsilon,n,mean_depth,std_depth\n";
  pretty << "untranspiled mean qDRIFT depth (" << a.shots << " circuits)\n"
         << std::left << std::setw(14) << "encoding" << std::setw(12) << "t" << std::right
         << std::setw(10) << "naive" << std::setw(12) << "TOPP-HATT" << std::setw(14)
         << "reduction/%" << "\n";
  double reduction_sum = 0.0;
  std::size_t reduction_count = 0;
  for (const auto& t : trees) {
    const auto optimized = optimize(h.majorana, t.naive.structure()).tree;
    const std::pair<const char*, const TernaryTree*> variants[] = {{"naive", &t.naive},
                                                                    {"topphatt", &optimized}};
    std::vector<QubitHamiltonian> encoded;
    for (const auto& [label, tree] : variants) {
      encoded.push_back(encode(h.majorana, strings_from_tree(*tree).strings));
    }
    for (double time : a.times) {
      double means[2] = {0.0, 0.0};
      for (std::size_t v = 0; v < 2; ++v) {
        const auto stats = a.serial ? depth_stats_serial(encoded[v], time, a.epsilon, a.shots, seed)
                                    : depth_stats(encoded[v], time, a.epsilon, a.shots, seed);
        means[v] = stats.mean;
        csv << t.name << ',' << variants[v].first << ',' << short_num(time) << ','
            << short_num(a.epsilon) << ',' << stats.n_circuits << ',' << num(stats.mean, 4) << ','
            << num(stats.stddev, 4) << '\n';
        if (!a.dump_circuit.empty()) {
          dump << "# " << t.name << ' ' << variants[v].first << " t=" << short_num(time) << '\n'
               << format_circuit(sample_circuit(encoded[v], time, a.epsilon, circuit_seed(seed, 0)));
        }
      }
      const double reduction = means[0] > 0.0 ? 100.0 * (means[0] - means[1]) / means[0] : 0.0;
      reduction_sum += reduction;
      ++reduction_count;
      pretty << std::left << std::setw(14) << t.name << std::setw(12) << short_num(time)
             << std::right << std::setw(10) << num(means[0], 1) << std::setw(12) << num(means[1], 1)
             << std::setw(14) << num(reduction, 1) << "\n";
    }
  }
  if (reduction_count > 0) {
    pretty << "mean reduction: " << num(reduction_sum / reduction_count, 1) << "%\n";
  }
  if (!a.dump_circuit.empty()) write_text_file(a.dump_circuit, dump.str());
  if (a.pretty) {
    emit(out, a.out, pretty.str());
  } else {
    emit(out, a.out, csv.str());
  }
  return kExitOk;
}

// ----------------------------------------------------------------- bench
struct BenchArgs {
  std::vector<std::string> hamiltonians;
  std::string tree = "jw";
  std::uint32_t repeats = 3;
  std::string out;
};

int do_bench(const BenchArgs& a, std::ostream& out) {
  std::vector<std::string> paths = a.hamiltonians;
  if (paths.empty()) {
    const std::filesystem::path dir(FERRTREE_DATA_DIR);
    for (const char* f : {"h2_sto3g.json", "lih_sto3g.json", "h2o_sto3g.json"}) {
      paths.push_back((dir / f).string());
    }
  }
  if (a.repeats == 0) throw ArgumentError("--repeats must be positive");
  std::ostringstream csv;
  csv << "hamiltonian,n_modes,n_terms,seconds\n";
  for (const auto& p : paths) {
    const auto h = load_hamiltonian(p);
    const auto kind = parse_standard_tree(a.tree);
    const auto structure = build_standard(kind, h.majorana.n_modes());
    double best = 0.0;
    for (std::uint32_t r = 0; r < a.repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = optimize(h.majorana, structure);
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      if (r == 0 || dt.count() < best) best = dt.count();
      (void)result;
    }
    csv << std::filesystem::path(p).stem().string() << ',' << h.majorana.n_modes() << ','
        << h.term_count() << ',' << num(best, 6) << '\n';
  }
  emit(out, a.out, csv.str());
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ternary-tree fermion-to-qubit encodings and TOPP-HATT optimization", "ferrtree"};
  app.require_subcommand(1);
  std::optional<int> threads;
  std::optional<std::uint64_t> seed_opt;
  bool deterministic = false;
  app.add_option("--threads", threads, "worker threads (default: FERRTREE_THREADS or all cores)");
  app.add_option("--seed", seed_opt, "random seed (default 1)");
  app.add_flag("--deterministic", deterministic, "require an explicit --seed");

  EncodeArgs enc;
  auto* c_enc = app.add_subcommand("encode", "encode a Hamiltonian with a tree or encoding");
  c_enc->add_option("-H,--hamiltonian", enc.hamiltonian, "majorana-1 or fermionic-1 file")->required();
  c_enc->add_option("--encoding", enc.encoding, "encoding-1 file instead of a tree");
  c_enc->add_option("--encoding-out", enc.encoding_out, "write the encoding");
  c_enc->add_option("--qubit-out", enc.qubit_out, "write the qubit Hamiltonian");
  c_enc->add_option("--tree-out", enc.tree_out, "write the indexed tree");
  c_enc->add_flag("--include-identity", enc.include_identity, "count the identity term in averages");
  add_tree_options(c_enc, enc.trees);

  OptimizeArgs opt;
  auto* c_opt = app.add_subcommand("optimize", "optimize the Majorana enumeration of a tree");
  c_opt->add_option("-H,--hamiltonian", opt.hamiltonian, "Hamiltonian file")->required();
  c_opt->add_option("--method", opt.method, "topphatt | sa | brute")
      ->check(CLI::IsMember({"topphatt", "sa", "brute"}));
  c_opt->add_option("--steps", opt.steps, "annealing steps (default 200*M)");
  c_opt->add_option("--temperature", opt.temperature, "initial annealing temperature");
  c_opt->add_option("--cooling", opt.cooling, "geometric cooling factor");
  c_opt->add_option("--tree-out", opt.tree_out, "write the optimized tree");
  c_opt->add_option("--encoding-out", opt.encoding_out, "write the optimized encoding");
  c_opt->add_option("--trace-out", opt.trace_out, "write the per-iteration trace");
  c_opt->add_flag("--serial", opt.serial, "use the serial candidate kernel");
  c_opt->add_flag("--pretty", opt.pretty, "human-readable report");
  add_tree_options(c_opt, opt.trees);

  ValidateArgs val;
  auto* c_val = app.add_subcommand("validate", "check an encoding (exit 0 iff valid)");
  c_val->add_option("--encoding", val.encoding, "encoding-1 file");
  c_val->add_option("--modes", val.modes, "mode count for a named tree");
  c_val->add_option("-H,--hamiltonian", val.hamiltonian, "take the mode count from a Hamiltonian");
  c_val->add_option("--maxnto", val.maxnto, "validate the MaxNTO encoding of this size");
  add_tree_options(c_val, val.trees);

  MetricsArgs met;
  auto* c_met = app.add_subcommand("metrics", "Pauli-weight report");
  c_met->add_option("-H,--hamiltonian", met.hamiltonian, "Hamiltonian file")->required();
  c_met->add_option("--encoding", met.encoding, "encoding-1 file instead of trees");
  c_met->add_flag("--include-identity", met.include_identity, "count the identity term");
  c_met->add_flag("--optimized", met.optimized, "also report the TOPP-HATT enumeration");
  c_met->add_flag("--pretty", met.pretty, "human-readable table");
  add_tree_options(c_met, met.trees);

  ScatterArgs sca;
  auto* c_sca = app.add_subcommand("scatter", "random-enumeration weight scatter (CSV)");
  c_sca->add_option("-H,--hamiltonian", sca.hamiltonian, "Hamiltonian file")->required();
  c_sca->add_option("--samples", sca.samples, "number of random enumerations");
  c_sca->add_option("--sa-steps", sca.sa_steps, "annealing steps for the sa row");
  c_sca->add_option("-o,--out", sca.out, "CSV path (default stdout)");
  add_tree_options(c_sca, sca.trees);

  QdriftArgs qd;
  auto* c_qd = app.add_subcommand("qdrift", "untranspiled qDRIFT depth statistics (CSV)");
  c_qd->add_option("-H,--hamiltonian", qd.hamiltonian, "Hamiltonian file")->required();
  c_qd->add_option("--t", qd.times, "evolution durations")->expected(1, -1);
  c_qd->add_option("--epsilon", qd.epsilon, "target precision");
  c_qd->add_option("--shots", qd.shots, "circuits per encoding and duration");
  c_qd->add_option("-o,--out", qd.out, "output path (default stdout)");
  c_qd->add_option("--dump-circuit", qd.dump_circuit, "write the first circuit of each batch");
  c_qd->add_flag("--pretty", qd.pretty, "table with reductions instead of CSV");
  c_qd->add_flag("--serial", qd.serial, "use the serial sampling kernel");
  add_tree_options(c_qd, qd.trees);

  BenchArgs ben;
  auto* c_ben = app.add_subcommand("bench", "TOPP-HATT runtime over Hamiltonian files (CSV)");
  c_ben->add_option("-H,--hamiltonian", ben.hamiltonians, "Hamiltonian files (default: fixtures)");
  c_ben->add_option("--tree", ben.tree, "standard tree name");
  c_ben->add_option("--repeats", ben.repeats, "timed repeats; the minimum is reported");
  c_ben->add_option("-o,--out", ben.out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ferrtree: " << e.what() << "\n";
    return kExitBadArgument;
  }

  try {
    if (deterministic && !seed_opt) throw ArgumentError("--deterministic requires --seed");
    if (!threads) threads = threads_from_env();
    if (threads) set_thread_count(*threads);
    const std::uint64_t seed = seed_opt.value_or(1);

    if (c_enc->parsed()) return do_encode(enc, out);
    if (c_opt->parsed()) return do_optimize(opt, seed, out);
    if (c_val->parsed()) return do_validate(val, out);
    if (c_met->parsed()) return do_metrics(met, out);
    if (c_sca->parsed()) return do_scatter(sca, seed, out);
    if (c_qd->parsed()) return do_qdrift(qd, seed, out);
    if (c_ben->parsed()) return do_bench(ben, out);
    return kExitBadArgument;
  } catch (const ValidationFailure& e) {
    err << "ferrtree: " << e.message << "\n";
    return kExitInvalid;
  } catch (const ArgumentError& e) {
    err << "ferrtree: " << e.what() << "\n";
    return kExitBadArgument;
  } catch (const Error& e) {
    err << "ferrtree: " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace ferrtree::cli
