#include "dnacode/evaluation.hpp"
#include "dnacode/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace dnacode {

namespace {

bool
uniform_length(const std::vector<dna_seq>& words, std::size_t n)
{
  return std::all_of(words.begin(), words.end(),
                     [n](const dna_seq& w) { return w.size() == n; });
}

std::string
format_number(double value)
{
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << value;
  return out.str();
}

std::string
format_optional(const std::optional<double>& value)
{
  return value ? format_number(*value) : std::string{};
}

nlohmann::json
matrix_to_json(const pair_matrix& m)
{
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size; ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size; ++j) {
      row.push_back(m.at(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

pair_matrix
matrix_from_json(const nlohmann::json& rows)
{
  pair_matrix m;
  m.size = rows.size();
  for (const auto& row : rows) {
    if (row.size() != m.size) {
      throw parse_error("pair matrix is not square");
    }
    for (const auto& v : row) {
      m.values.push_back(v.get<double>());
    }
  }
  return m;
}

template<typename T>
void
put_optional(nlohmann::json& j, const char* key, const std::optional<T>& value)
{
  if (value) {
    j[key] = *value;
  }
}

template<typename T>
std::optional<T>
get_optional(const nlohmann::json& j, const char* key)
{
  if (const auto it = j.find(key); it != j.end() && !it->is_null()) {
    return it->template get<T>();
  }
  return std::nullopt;
}

} // namespace

std::string_view
to_string(clause c) noexcept
{
  switch (c) {
    case clause::self_rc:
      return "self_rc";
    case clause::seq_seq:
      return "seq_seq";
    case clause::seq_rc:
      return "seq_rc";
    case clause::gc_content:
      return "gc_content";
    case clause::homopolymer:
      return "homopolymer";
    case clause::length:
      return "length";
  }
  return "seq_seq";
}

clause
clause_from_string(std::string_view name)
{
  for (const auto c : { clause::self_rc, clause::seq_seq, clause::seq_rc,
                        clause::gc_content, clause::homopolymer, clause::length }) {
    if (to_string(c) == name) {
      return c;
    }
  }
  throw parse_error("unknown clause '" + std::string(name) + "'");
}

evaluation_report
validate_code(const std::vector<dna_seq>& words, const design_config& cfg)
{
  cfg.validate();
  evaluation_report report;
  report.config = cfg;
  report.words = words;
  report.degenerate = words.size() == 1;

  const auto& spec = cfg.spec;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    if (w.size() != spec.n) {
      report.violations.push_back({ i, i, clause::length, static_cast<double>(w.size()) });
      continue;
    }
    const auto gc = gc_count(w);
    if (gc < spec.min_gc_count() || gc > spec.max_gc_count()) {
      report.violations.push_back({ i, i, clause::gc_content, gc_fraction(w) });
    }
    if (const auto run = max_homopolymer_run(w); run > spec.run_max) {
      report.violations.push_back({ i, i, clause::homopolymer, static_cast<double>(run) });
    }
  }
  if (words.empty() || !uniform_length(words, spec.n)) {
    return report;
  }

  const double threshold = cfg.threshold();
  const auto m = words.size();
  report.measures = compute_pair_measures(words, cfg.model);
  const auto& direct = report.measures.direct;
  const auto& rc = report.measures.rc;
  for (std::size_t i = 0; i < m; ++i) {
    if (violates(cfg.model, rc.at(i, i), threshold)) {
      report.violations.push_back({ i, i, clause::self_rc, rc.at(i, i) });
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (violates(cfg.model, direct.at(i, j), threshold)) {
        report.violations.push_back({ i, j, clause::seq_seq, direct.at(i, j) });
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && violates(cfg.model, rc.at(i, j), threshold)) {
        report.violations.push_back({ i, j, clause::seq_rc, rc.at(i, j) });
      }
    }
  }

  // Significance statistics are reported for every model so that codes from
  // different models can be compared on the same scale.
  const similarity_model ss_model{ model_kind::ss, cfg.model.params };
  const auto significance =
    cfg.model.is_distance() ? compute_pair_measures(words, ss_model) : report.measures;
  double max_srcss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      max_srcss = std::max(max_srcss, significance.rc.at(i, j));
      if (i != j) {
        report.max_ssss = std::max(report.max_ssss.value_or(0.0), significance.direct.at(i, j));
      }
    }
  }
  report.max_srcss = max_srcss;
  report.t_gap = std::max(max_srcss, report.max_ssss.value_or(0.0)) - 1.0;

  if (cfg.model.is_distance()) {
    double seq = 0.0;
    double rc_min = rc.at(0, 0);
    bool have_seq = false;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        rc_min = std::min(rc_min, rc.at(i, j));
        if (i != j) {
          seq = have_seq ? std::min(seq, direct.at(i, j)) : direct.at(i, j);
          have_seq = true;
        }
      }
    }
    if (have_seq) {
      report.min_seq_distance = seq;
    }
    report.min_rc_distance = rc_min;
  }
  return report;
}

double
t_gap(const std::vector<dna_seq>& words, const ss_params& p)
{
  if (words.empty()) {
    throw dnacode_error("significance gap of an empty code");
  }
  double worst = 0.0;
  for (const auto& u : words) {
    double inner = ss_rc(u, u, p);
    for (const auto& v : words) {
      if (&u != &v) {
        inner = std::max({ inner, ss_rc(u, v, p), ss(u, v, p) });
      }
    }
    worst = std::max(worst, inner);
  }
  return worst - ss(words.front(), words.front(), p);
}

nlohmann::json
to_json(const design_config& cfg)
{
  nlohmann::json j;
  j["n"] = cfg.spec.n;
  j["gc_low"] = cfg.spec.gc_low;
  j["gc_high"] = cfg.spec.gc_high;
  j["run_max"] = cfg.spec.run_max;
  j["model"] = std::string(to_string(cfg.model.kind));
  j["alpha1"] = cfg.model.params.alpha1;
  j["beta1"] = cfg.model.params.beta1;
  j["alpha2"] = cfg.model.params.alpha2;
  j["beta2"] = cfg.model.params.beta2;
  j["enumeration_cap"] = cfg.enumeration_cap;
  put_optional(j, "t_th", cfg.t_th);
  put_optional(j, "d_th", cfg.d_th);
  return j;
}

design_config
design_config_from_json(const nlohmann::json& j)
{
  try {
    design_config cfg;
    cfg.spec.n = j.at("n").get<std::size_t>();
    cfg.spec.gc_low = j.at("gc_low").get<double>();
    cfg.spec.gc_high = j.at("gc_high").get<double>();
    cfg.spec.run_max = j.at("run_max").get<std::size_t>();
    cfg.model.kind = model_kind_from_string(j.at("model").get<std::string>());
    cfg.model.params.alpha1 = j.at("alpha1").get<double>();
    cfg.model.params.beta1 = j.at("beta1").get<double>();
    cfg.model.params.alpha2 = j.at("alpha2").get<double>();
    cfg.model.params.beta2 = j.at("beta2").get<double>();
    cfg.enumeration_cap = j.at("enumeration_cap").get<std::size_t>();
    cfg.t_th = get_optional<double>(j, "t_th");
    cfg.d_th = get_optional<unsigned>(j, "d_th");
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid config document: ") + e.what());
  }
}

nlohmann::json
to_json(const evaluation_report& report)
{
  nlohmann::json j;
  j["schema_version"] = report_schema_version;
  j["config"] = to_json(report.config);
  auto words = nlohmann::json::array();
  for (const auto& w : report.words) {
    words.push_back(w.str());
  }
  j["code"] = std::move(words);
  j["size"] = report.size();
  j["degenerate"] = report.degenerate;
  j["valid"] = report.valid();
  put_optional(j, "max_ssss", report.max_ssss);
  put_optional(j, "max_srcss", report.max_srcss);
  put_optional(j, "t_gap", report.t_gap);
  put_optional(j, "min_seq_distance", report.min_seq_distance);
  put_optional(j, "min_rc_distance", report.min_rc_distance);
  put_optional(j, "delta", report.delta);

  auto violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    violations.push_back({ { "i", v.i },
                           { "j", v.j },
                           { "clause", std::string(to_string(v.kind)) },
                           { "value", v.value } });
  }
  j["violations"] = std::move(violations);
  j["measures"] = { { "direct", matrix_to_json(report.measures.direct) },
                    { "rc", matrix_to_json(report.measures.rc) } };
  return j;
}

evaluation_report
report_from_json(const nlohmann::json& j)
{
  try {
    if (j.at("schema_version").get<int>() != report_schema_version) {
      throw parse_error("unsupported report schema version");
    }
    evaluation_report report;
    report.config = design_config_from_json(j.at("config"));
    for (const auto& w : j.at("code")) {
      report.words.emplace_back(w.get<std::string>());
    }
    report.degenerate = j.at("degenerate").get<bool>();
    report.max_ssss = get_optional<double>(j, "max_ssss");
    report.max_srcss = get_optional<double>(j, "max_srcss");
    report.t_gap = get_optional<double>(j, "t_gap");
    report.min_seq_distance = get_optional<double>(j, "min_seq_distance");
    report.min_rc_distance = get_optional<double>(j, "min_rc_distance");
    report.delta = get_optional<double>(j, "delta");
    for (const auto& v : j.at("violations")) {
      report.violations.push_back({ v.at("i").get<std::size_t>(), v.at("j").get<std::size_t>(),
                                    clause_from_string(v.at("clause").get<std::string>()),
                                    v.at("value").get<double>() });
    }
    report.measures.direct = matrix_from_json(j.at("measures").at("direct"));
    report.measures.rc = matrix_from_json(j.at("measures").at("rc"));
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid report document: ") + e.what());
  }
}

std::string
format_report(const evaluation_report& report)
{
  std::ostringstream out;
  const auto& cfg = report.config;
  out << "model        " << to_string(cfg.model.kind) << '\n';
  out << "n            " << cfg.spec.n << '\n';
  out << "threshold    " << format_number(cfg.threshold()) << '\n';
  out << "size         " << report.size() << (report.degenerate ? " (degenerate)" : "") << '\n';
  if (report.max_ssss) {
    out << "max SSSS     " << format_number(*report.max_ssss) << '\n';
  }
  if (report.max_srcss) {
    out << "max SRCSS    " << format_number(*report.max_srcss) << '\n';
  }
  if (report.t_gap) {
    out << "T_gap        " << format_number(*report.t_gap) << '\n';
  }
  if (report.min_seq_distance) {
    out << "min d(u,v)   " << format_number(*report.min_seq_distance) << '\n';
  }
  if (report.min_rc_distance) {
    out << "min d(u,v')  " << format_number(*report.min_rc_distance) << '\n';
  }
  if (report.delta) {
    out << "delta        " << format_number(*report.delta) << " kcal/mol\n";
  }
  out << "violations   " << report.violations.size() << '\n';
  for (const auto& v : report.violations) {
    out << "  " << to_string(v.kind) << " (" << v.i << ", " << v.j
        << ") value=" << format_number(v.value) << '\n';
  }
  return out.str();
}

std::vector<comparison_row>
compare_models(const std::vector<design_config>& cfgs,
               bool match_sizes,
               const std::vector<std::string>& labels)
{
  if (!labels.empty() && labels.size() != cfgs.size()) {
    throw config_error("label count does not match config count");
  }
  for (const auto& cfg : cfgs) {
    if (cfg.spec.n != cfgs.front().spec.n) {
      throw config_error("compared configs must share the sequence length");
    }
  }

  std::vector<comparison_row> rows;
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    comparison_row row;
    row.label = labels.empty() ? std::string(to_string(cfgs[i].model.kind)) : labels[i];
    row.config = cfgs[i];
    row.result = search(cfgs[i]);
    row.searched_size = row.result.size();
    rows.push_back(std::move(row));
  }

  if (match_sizes && !rows.empty()) {
    const auto smallest = std::min_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
                            return a.result.size() < b.result.size();
                          })->result.size();
    for (auto& row : rows) {
      row.result = expurgate(row.result, smallest);
    }
  }

  for (auto& row : rows) {
    row.report = validate_code(row.result.words, row.config);
    row.manifest = export_mfe_pairs(row.result.words);
  }
  return rows;
}

void
write_comparison_table(std::ostream& out, const std::vector<comparison_row>& rows)
{
  out << "label\tmodel\tn\tthreshold\tsearched_size\tsize\tmax_ssss\tmax_srcss\tt_gap\tdelta\n";
  for (const auto& row : rows) {
    out << row.label << '\t' << to_string(row.config.model.kind) << '\t' << row.config.spec.n
        << '\t' << format_number(row.config.threshold()) << '\t' << row.searched_size << '\t'
        << row.result.size() << '\t' << format_optional(row.report.max_ssss) << '\t'
        << format_optional(row.report.max_srcss) << '\t' << format_optional(row.report.t_gap)
        << '\t' << format_optional(row.report.delta) << '\n';
  }
}

} // namespace dnacode
