#include "dnacode/cli.hpp"
#include "dnacode/config.hpp"
#include "dnacode/constraints.hpp"
#include "dnacode/designer.hpp"
#include "dnacode/errors.hpp"
#include "dnacode/evaluation.hpp"
#include "dnacode/mfe.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace dnacode::cli {

namespace {

/** Flags shared by the subcommands; unset flags defer to the config file. */
struct flags
{
  std::optional<std::size_t> n;
  std::optional<double> gc_low;
  std::optional<double> gc_high;
  std::optional<std::size_t> run_max;
  std::optional<std::string> model;
  std::optional<double> t_th;
  std::optional<unsigned> d_th;
  std::optional<double> alpha1;
  std::optional<double> beta1;
  std::optional<double> alpha2;
  std::optional<double> beta2;
  std::optional<std::size_t> enumeration_cap;
  std::optional<std::string> mfe_table;
  std::optional<std::string> out;
  std::optional<std::string> label;
  bool match_sizes = false;
  std::vector<std::string> configs;
  std::string code_file;
};

void
add_constraint_flags(CLI::App& app, flags& f)
{
  app.add_option("--n", f.n, "Sequence length");
  app.add_option("--gc-low", f.gc_low, "Lowest GC fraction (default 0.4)");
  app.add_option("--gc-high", f.gc_high, "Highest GC fraction (default 0.6)");
  app.add_option("--run-max", f.run_max, "Longest homopolymer run (default 3)");
  app.add_option("--enum-cap", f.enumeration_cap, "Largest length to enumerate");
}

void
add_model_flags(CLI::App& app, flags& f)
{
  app.add_option("--model", f.model, "Similarity model: hamming, edit or ss");
  app.add_option("--t-th", f.t_th, "Maximum similarity significance (ss)");
  app.add_option("--d-th", f.d_th, "Minimum distance (hamming, edit)");
  app.add_option("--alpha1", f.alpha1, "Consecutive G/C weight, cross vectors");
  app.add_option("--beta1", f.beta1, "Non-consecutive G/C weight, cross vectors");
  app.add_option("--alpha2", f.alpha2, "Consecutive G/C weight, self vectors");
  app.add_option("--beta2", f.beta2, "Non-consecutive G/C weight, self vectors");
  app.add_option("--label", f.label, "Row label in comparison tables");
}

/** Defaults, then the config file, then explicit flags. */
run_config
resolve(const flags& f, const std::optional<std::string>& config_path)
{
  run_config cfg = config_path ? load_config(*config_path) : run_config{};
  const auto put = [&](const char* key, const auto& value) {
    if (value) {
      std::ostringstream text;
      text << std::setprecision(17) << *value;
      cfg.set(key, text.str());
    }
  };
  put("n", f.n);
  put("gc_low", f.gc_low);
  put("gc_high", f.gc_high);
  put("run_max", f.run_max);
  put("model", f.model);
  put("t_th", f.t_th);
  put("d_th", f.d_th);
  put("alpha1", f.alpha1);
  put("beta1", f.beta1);
  put("alpha2", f.alpha2);
  put("beta2", f.beta2);
  put("enumeration_cap", f.enumeration_cap);
  put("mfe_table", f.mfe_table);
  put("out", f.out);
  put("label", f.label);
  if (f.match_sizes) {
    cfg.match_sizes = true;
  }
  return cfg;
}

std::optional<std::string>
single_config(const flags& f)
{
  if (f.configs.size() > 1) {
    throw config_error("this subcommand takes at most one --config");
  }
  return f.configs.empty() ? std::nullopt : std::optional<std::string>(f.configs.front());
}

void
write_file(const std::filesystem::path& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.flush();
  if (!out) {
    throw io_error("cannot write '" + path.string() + "'");
  }
}

std::string
read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw io_error("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string
sequences_text(const std::vector<dna_seq>& seqs)
{
  std::ostringstream out;
  write_sequences(out, seqs);
  return out.str();
}

std::string
manifest_text(const std::vector<mfe_pair>& pairs)
{
  std::ostringstream out;
  write_manifest(out, pairs);
  return out.str();
}

std::string
json_text(const nlohmann::json& j)
{
  return j.dump(2) + "\n";
}

int
cmd_enumerate(const flags& f, std::ostream& out, std::ostream& err)
{
  const auto cfg = resolve(f, single_config(f));
  const auto seqs = enumerate_constrained(cfg.spec, cfg.enumeration_cap);
  if (cfg.out.empty()) {
    write_sequences(out, seqs);
    err << seqs.size() << " sequences\n";
  } else {
    write_file(cfg.out, sequences_text(seqs));
    out << seqs.size() << '\n';
  }
  return exit_ok;
}

int
cmd_design(const flags& f, std::ostream& out, std::ostream& err)
{
  const auto cfg = resolve(f, single_config(f));
  const auto design = cfg.design();
  const auto result = search(design);
  const auto report = validate_code(result.words, design);
  if (cfg.out.empty()) {
    write_sequences(out, result.words);
  } else {
    write_file(cfg.out, sequences_text(result.words));
    write_file(cfg.out + ".report.json", json_text(to_json(report)));
  }
  err << format_report(report);
  return report.valid() ? exit_ok : exit_invalid;
}

int
cmd_eval(const flags& f, std::ostream& out, std::ostream& err)
{
  auto cfg = resolve(f, single_config(f));
  const auto words = parse_sequences(read_file(f.code_file));
  if (!words.empty()) {
    for (const auto& w : words) {
      if (w.size() != words.front().size()) {
        throw parse_error("code file mixes sequence lengths");
      }
    }
    if (!cfg.n_given) {
      cfg.spec.n = words.front().size();
    }
  }

  const auto design = cfg.design();
  auto report = validate_code(words, design);
  if (!cfg.mfe_table.empty()) {
    std::istringstream table_text(read_file(cfg.mfe_table));
    const auto table = parse_mfe_table(table_text, export_mfe_pairs(words));
    report.delta = free_energy_gap(words, table);
  }

  const auto text = json_text(to_json(report));
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_file(cfg.out, text);
  }
  err << format_report(report);
  return report.valid() ? exit_ok : exit_invalid;
}

int
cmd_compare(const flags& f, std::ostream& out, std::ostream& err)
{
  if (f.configs.empty()) {
    throw config_error("compare needs at least one --config");
  }
  std::vector<design_config> designs;
  std::vector<std::string> labels;
  std::string out_dir;
  bool match_sizes = f.match_sizes;
  for (const auto& path : f.configs) {
    const auto cfg = resolve(f, path);
    designs.push_back(cfg.design());
    labels.push_back(cfg.label.empty() ? std::string(to_string(cfg.model)) : cfg.label);
    match_sizes = match_sizes || cfg.match_sizes;
    if (out_dir.empty()) {
      out_dir = cfg.out;
    }
  }

  const auto rows = compare_models(designs, match_sizes, labels);
  std::ostringstream table;
  write_comparison_table(table, rows);
  out << table.str();

  bool valid = true;
  for (const auto& row : rows) {
    valid = valid && row.report.valid();
  }
  if (!out_dir.empty()) {
    const std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      throw io_error("cannot create '" + out_dir + "': " + ec.message());
    }
    write_file(dir / "comparison.tsv", table.str());
    auto doc = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      const auto stem = "cell" + std::to_string(i + 1);
      write_file(dir / (stem + ".code.txt"), sequences_text(row.result.words));
      write_file(dir / (stem + ".pairs.tsv"), manifest_text(row.manifest));
      auto cell = to_json(row.report);
      cell["label"] = row.label;
      cell["searched_size"] = row.searched_size;
      write_file(dir / (stem + ".report.json"), json_text(cell));
      doc.push_back(std::move(cell));
    }
    write_file(dir / "comparison.json", json_text(doc));
  }
  err << rows.size() << " configurations compared" << (match_sizes ? " (sizes matched)" : "")
      << '\n';
  return valid ? exit_ok : exit_invalid;
}

int
cmd_oracle(const flags& f, std::ostream& out, std::ostream&)
{
  const auto cfg = resolve(f, single_config(f));
  const auto design = cfg.design();
  const auto candidates = enumerate_constrained(design.spec, design.enumeration_cap);
  const auto heuristic = search(design, candidates).size();
  const auto optimum = brute_force_oracle(design, candidates);
  out << "search_size\t" << heuristic << '\n';
  out << "oracle_size\t" << optimum << '\n';
  out << "ratio\t";
  if (optimum == 0) {
    out << "-\n";
  } else {
    out << std::fixed << std::setprecision(6)
        << static_cast<double>(heuristic) / static_cast<double>(optimum) << '\n';
  }
  return exit_ok;
}

} // namespace

int
run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{ "Design and evaluate DNA codes under combinatorial constraints" };
  app.require_subcommand(1);
  flags f;

  auto* enumerate = app.add_subcommand("enumerate", "List every constrained candidate");
  add_constraint_flags(*enumerate, f);

  auto* design = app.add_subcommand("design", "Search for a code");
  auto* eval = app.add_subcommand("eval", "Validate a code file");
  auto* compare = app.add_subcommand("compare", "Compare models under the same search");
  auto* oracle = app.add_subcommand("oracle", "Compare the search against the exact optimum");
  for (auto* sub : { design, eval, compare, oracle }) {
    add_constraint_flags(*sub, f);
    add_model_flags(*sub, f);
  }
  for (auto* sub : { enumerate, design, eval, compare, oracle }) {
    sub->add_option("--config", f.configs, "Config file (key = value)");
  }
  for (auto* sub : { enumerate, design, eval, compare }) {
    sub->add_option("--out", f.out, "Output path (directory for compare)");
  }
  eval->add_option("code_file", f.code_file, "Code file, one sequence per line")->required();
  eval->add_option("--mfe-table", f.mfe_table, "Free energy table (kcal/mol)");
  compare->add_flag("--match-sizes", f.match_sizes, "Expurgate codes to the smallest size");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("dnacode");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) {
    argv.push_back(a.data());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*enumerate) {
      return cmd_enumerate(f, out, err);
    } else if (*design) {
      return cmd_design(f, out, err);
    } else if (*eval) {
      return cmd_eval(f, out, err);
    } else if (*compare) {
      return cmd_compare(f, out, err);
    }
    return cmd_oracle(f, out, err);
  } catch (const io_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const dnacode_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

} // namespace dnacode::cli
